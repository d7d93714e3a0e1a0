//! Immutable simple undirected graphs on dense vertex ids `0..n`.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// An undirected edge `(u, v)`, normalized to `u < v` by [`edge`].
pub type Edge = (usize, usize);

/// Normalizes an unordered pair so the smaller id comes first.
#[inline]
pub fn edge(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Simple undirected graph with sorted adjacency lists.
///
/// Construction goes through [`Graph::from_edge_list`], which collapses
/// duplicate edges and rejects loops, so every value of this type is simple
/// and symmetric.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    m: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeProfile {
    pub min_degree: usize,
    pub max_degree: usize,
    pub is_regular: bool,
    /// Common degree, present only for regular graphs.
    pub d: Option<usize>,
}

/// Result of a girth query. Forests have no girth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Girth {
    Finite(usize),
    Acyclic,
}

impl Girth {
    pub fn value(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Acyclic => None,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Acyclic => f.write_str("acyclic"),
        }
    }
}

/// One connected component of an induced subgraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentSummary {
    /// Sorted vertex ids of the component.
    pub vertices: Vec<usize>,
    /// Number of induced edges inside the component.
    pub edges: usize,
}

impl ComponentSummary {
    /// A connected graph contains a cycle iff it has at least as many edges
    /// as vertices.
    pub fn has_cycle(&self) -> bool {
        self.edges >= self.vertices.len()
    }
}

/// Answer of [`Graph::every_component_has_cycle`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleCoverage {
    pub all_cyclic: bool,
    pub components: Vec<ComponentSummary>,
}

impl CycleCoverage {
    /// The components that are trees.
    pub fn acyclic_components(&self) -> impl Iterator<Item = &ComponentSummary> {
        self.components.iter().filter(|c| !c.has_cycle())
    }
}

impl Graph {
    /// Builds a graph on `n` vertices. Repeated pairs (in either orientation)
    /// collapse into one edge.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::InvalidVertex { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::LoopRejected(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let mut m2 = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            m2 += list.len();
        }
        Ok(Graph {
            adjacency,
            m: m2 / 2,
        })
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            m: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.m);
        for (u, list) in self.adjacency.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    /// Checks simplicity, symmetry, sortedness and the edge count.
    pub fn check_invariants(&self) -> bool {
        let n = self.n();
        let mut total = 0;
        for (u, list) in self.adjacency.iter().enumerate() {
            total += list.len();
            if list.windows(2).any(|w| w[0] >= w[1]) {
                return false;
            }
            for &v in list {
                if v >= n || v == u || self.adjacency[v].binary_search(&u).is_err() {
                    return false;
                }
            }
        }
        total == 2 * self.m
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let min_degree = self.adjacency.iter().map(Vec::len).min().unwrap_or(0);
        let max_degree = self.adjacency.iter().map(Vec::len).max().unwrap_or(0);
        let is_regular = min_degree == max_degree;
        DegreeProfile {
            min_degree,
            max_degree,
            is_regular,
            d: is_regular.then_some(min_degree),
        }
    }

    /// Length of a shortest cycle.
    ///
    /// Runs a breadth-first search from every root; a non-tree edge `(u, w)`
    /// closes a closed walk of length `dist[u] + dist[w] + 1` through the
    /// root, which contains a cycle at most that long, and the root lying on a
    /// shortest cycle attains it.
    pub fn girth(&self) -> Girth {
        let n = self.n();
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            dist.fill(usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            queue.clear();
            queue.push_back(root);
            'bfs: while let Some(u) = queue.pop_front() {
                // cycles closed from this layer on have length >= 2*dist[u]
                if 2 * dist[u] >= best {
                    break;
                }
                for &w in &self.adjacency[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                        if best == 3 {
                            break 'bfs;
                        }
                    }
                }
            }
            if best == 3 {
                break;
            }
        }
        if best == usize::MAX {
            Girth::Acyclic
        } else {
            Girth::Finite(best)
        }
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let all = vec![true; self.n()];
        self.induced_components(&all)
            .into_iter()
            .map(|c| c.vertices)
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// Components of the subgraph induced by `{v : member[v]}`, with their
    /// induced edge counts.
    pub fn induced_components(&self, member: &[bool]) -> Vec<ComponentSummary> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for start in 0..n {
            if !member[start] || seen[start] {
                continue;
            }
            seen[start] = true;
            stack.push(start);
            let mut vertices = Vec::new();
            let mut degree_sum = 0;
            while let Some(u) = stack.pop() {
                vertices.push(u);
                for &w in &self.adjacency[u] {
                    if member[w] {
                        degree_sum += 1;
                        if !seen[w] {
                            seen[w] = true;
                            stack.push(w);
                        }
                    }
                }
            }
            vertices.sort_unstable();
            out.push(ComponentSummary {
                vertices,
                edges: degree_sum / 2,
            });
        }
        out
    }

    /// Whether every component of `G[X]` contains a cycle. Ids outside the
    /// vertex range are ignored.
    pub fn every_component_has_cycle(&self, x: &[usize]) -> CycleCoverage {
        let mut member = vec![false; self.n()];
        for &v in x {
            if v < self.n() {
                member[v] = true;
            }
        }
        let components = self.induced_components(&member);
        CycleCoverage {
            all_cyclic: components.iter().all(ComponentSummary::has_cycle),
            components,
        }
    }

    /// Proper 2-coloring of a connected graph, if one exists.
    pub fn two_coloring(&self) -> Option<Vec<bool>> {
        let n = self.n();
        let mut color: Vec<Option<bool>> = vec![None; n];
        let mut queue = VecDeque::new();
        for start in 0..n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                let cu = color[u]?;
                for &w in &self.adjacency[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(|c| c.unwrap_or(false)).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// True iff the graph is `K_{3,t}` for some `t >= 1`.
    pub fn is_complete_bipartite_with_side_3(&self) -> bool {
        if self.n() < 4 || !self.is_connected() {
            return false;
        }
        let Some(color) = self.two_coloring() else {
            return false;
        };
        let a = color.iter().filter(|&&c| c).count();
        let b = self.n() - a;
        (a == 3 || b == 3) && self.m == a * b
    }

    /// Sorted common neighbors of two distinct vertices.
    pub fn common_neighbors(&self, u: usize, v: usize) -> Result<Vec<usize>> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(Error::InvalidVertex { vertex: x, n });
            }
        }
        if u == v {
            return Err(Error::InvalidPair(u));
        }
        let (a, b) = (&self.adjacency[u], &self.adjacency[v]);
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                core::cmp::Ordering::Less => i += 1,
                core::cmp::Ordering::Greater => j += 1,
                core::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        Ok(out)
    }

    /// The same graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n() {
            return Err(Error::param("permutation length differs from vertex count"));
        }
        let mapped: Vec<_> = self
            .edges()
            .into_iter()
            .map(|(u, v)| (perm[u], perm[v]))
            .collect();
        let g = Graph::from_edge_list(self.n(), &mapped)?;
        if g.m != self.m {
            return Err(Error::param("relabeling is not a permutation"));
        }
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("m", &self.m)
            .field("edges", &self.edges())
            .finish()
    }
}
