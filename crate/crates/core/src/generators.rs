//! Deterministic graph families and a seeded random regular sampler.
//!
//! Labeling conventions:
//!
//! - `cycle(n)`: `i ~ i+1 mod n`.
//! - `complete_bipartite(s, t)`: first side `0..s`, second side `s..s+t`.
//! - `wheel(n)`: rim cycle on `0..n-1`, hub `n-1`.
//! - `k3t_plus(t, inner)`: 3-side `0,1,2`, t-side `3..3+t`.
//! - `hypercube(k)`: binary labels, `u ~ v` iff `u ^ v` is a power of two.
//! - `petersen()`: outer cycle `0..5`, inner pentagram `5..10`, spokes `i ~ i+5`.
//! - `heawood()`: cycle on `0..14` plus chords `i ~ i+5 mod 14` for even `i`.
//! - `example48()`: see [`Example48Labels`].

use alloc::format;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Edge, Girth, Graph};

/// Identifier of the sampling procedure used by [`random_regular`], recorded
/// in generated-graph provenance.
pub const RANDOM_REGULAR_ALGORITHM: &str = "configuration-model+restart/chacha8-seed_from_u64";

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::param(format!("cycle needs n >= 3, got {n}")));
    }
    let edges: Vec<Edge> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edge_list(n, &edges)
}

pub fn complete_bipartite(s: usize, t: usize) -> Result<Graph> {
    if s == 0 || t == 0 {
        return Err(Error::param(format!(
            "complete bipartite sides must be >= 1, got ({s}, {t})"
        )));
    }
    let mut edges = Vec::with_capacity(s * t);
    for a in 0..s {
        for b in s..s + t {
            edges.push((a, b));
        }
    }
    Graph::from_edge_list(s + t, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::param("complete graph needs n >= 1"));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edge_list(n, &edges)
}

/// Rim cycle `C_{n-1}` plus a hub joined to every rim vertex.
pub fn wheel(n: usize) -> Result<Graph> {
    if n < 4 {
        return Err(Error::param(format!("wheel needs n >= 4, got {n}")));
    }
    let rim = n - 1;
    let mut edges: Vec<Edge> = (0..rim).map(|i| (i, (i + 1) % rim)).collect();
    edges.extend((0..rim).map(|i| (i, rim)));
    Graph::from_edge_list(n, &edges)
}

/// `K_{3,t}` plus extra edges inside the 3-side.
pub fn k3t_plus(t: usize, inner_edges: &[Edge]) -> Result<Graph> {
    if t < 3 {
        return Err(Error::param(format!("k3t_plus needs t >= 3, got {t}")));
    }
    let mut edges = complete_bipartite(3, t)?.edges();
    for &(u, v) in inner_edges {
        if u > 2 || v > 2 || u == v {
            return Err(Error::param(format!(
                "inner edge {u}-{v} is not a pair within the 3-side"
            )));
        }
        edges.push((u, v));
    }
    Graph::from_edge_list(3 + t, &edges)
}

pub fn hypercube(k: u32) -> Result<Graph> {
    if !(1..=24).contains(&k) {
        return Err(Error::param(format!(
            "hypercube dimension must be in 1..=24, got {k}"
        )));
    }
    let n = 1usize << k;
    let mut edges = Vec::with_capacity(n * k as usize / 2);
    for u in 0..n {
        for bit in 0..k {
            let v = u ^ (1 << bit);
            if u < v {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges)
}

pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    Graph::from_edge_list(10, &edges).expect("static edge list")
}

pub fn heawood() -> Graph {
    let mut edges: Vec<Edge> = (0..14).map(|i| (i, (i + 1) % 14)).collect();
    edges.extend((0..14).step_by(2).map(|i| (i, (i + 5) % 14)));
    Graph::from_edge_list(14, &edges).expect("static edge list")
}

/// Vertex ids of the four named groups in [`example48`].
///
/// `a[i] = i`, `d[i] = 16 + i`, `b[i] = 32 + i`, `c[i] = 40 + i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Example48Labels {
    pub a: Vec<usize>,
    pub d: Vec<usize>,
    pub b: Vec<usize>,
    pub c: Vec<usize>,
}

impl Example48Labels {
    fn standard() -> Self {
        Example48Labels {
            a: (0..16).collect(),
            d: (16..32).collect(),
            b: (32..40).collect(),
            c: (40..48).collect(),
        }
    }

    /// The eight `b_i - c_i` edges.
    pub fn matching_cut(&self) -> Vec<Edge> {
        self.b.iter().zip(&self.c).map(|(&b, &c)| (b, c)).collect()
    }
}

/// 5-regular girth-4 graph on 48 vertices with a cyclic cut of size 8.
///
/// Two copies of `Q_4` (on `a` and `d`), each attached to an 8-cycle
/// (`b`, resp. `c`) so every hypercube vertex gains one edge and every cycle
/// vertex gains two, and the two 8-cycles joined by the matching `b_i c_i`.
/// The second half mirrors the first exactly.
pub fn example48() -> Result<(Graph, Example48Labels)> {
    let labels = Example48Labels::standard();
    let (a, b, c, d) = (&labels.a, &labels.b, &labels.c, &labels.d);
    let cube = hypercube(4)?.edges();
    let mut edges = Vec::with_capacity(120);
    for &(u, v) in &cube {
        edges.push((a[u], a[v]));
        edges.push((d[u], d[v]));
    }
    for (hub, ring) in [(a, b), (d, c)] {
        for i in 0..8 {
            edges.push((ring[i], hub[i]));
            edges.push((ring[i], hub[if i < 7 { i + 9 } else { 8 }]));
            edges.push((ring[i], ring[(i + 1) % 8]));
        }
    }
    edges.extend(labels.matching_cut());
    let g = Graph::from_edge_list(48, &edges)?;

    let profile = g.degree_profile();
    if profile.d != Some(5) || g.m() != 120 {
        return Err(Error::ConstructionInvariantViolated(format!(
            "expected 5-regular with 120 edges, got {profile:?} with {} edges",
            g.m()
        )));
    }
    if g.girth() != Girth::Finite(4) {
        return Err(Error::ConstructionInvariantViolated(format!(
            "expected girth 4, got {}",
            g.girth()
        )));
    }
    Ok((g, labels))
}

/// Samples a `d`-regular simple graph of girth at least `girth_min` by the
/// pairing model: shuffle the `n*d` stubs, pair them consecutively, and start
/// over on any loop, repeated edge, or short cycle.
///
/// The whole run draws from one ChaCha8 stream seeded with `seed`, so the
/// output is a function of `(n, d, girth_min, seed)`.
pub fn random_regular(
    n: usize,
    d: usize,
    girth_min: usize,
    seed: u64,
    max_tries: u64,
) -> Result<Graph> {
    if d < 3 || d >= n {
        return Err(Error::param(format!("need 3 <= d < n, got n={n}, d={d}")));
    }
    if !(n * d).is_multiple_of(2) {
        return Err(Error::param(format!("n*d must be even, got n={n}, d={d}")));
    }
    if girth_min < 3 {
        return Err(Error::param(format!(
            "girth_min must be >= 3, got {girth_min}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stubs: Vec<usize> = Vec::with_capacity(n * d);
    let mut adjacency_bits = alloc::vec![false; n * n];
    'attempt: for _ in 0..max_tries {
        stubs.clear();
        for v in 0..n {
            stubs.extend(core::iter::repeat_n(v, d));
        }
        stubs.shuffle(&mut rng);
        adjacency_bits.fill(false);
        let mut edges = Vec::with_capacity(n * d / 2);
        for pair in stubs.chunks_exact(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || adjacency_bits[u * n + v] {
                continue 'attempt;
            }
            adjacency_bits[u * n + v] = true;
            adjacency_bits[v * n + u] = true;
            edges.push((u, v));
        }
        let g = Graph::from_edge_list(n, &edges)?;
        match g.girth() {
            Girth::Finite(girth) if girth < girth_min => continue,
            _ => return Ok(g),
        }
    }
    Err(Error::GenerationFailed { tries: max_tries })
}
