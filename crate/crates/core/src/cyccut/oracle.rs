//! Exhaustive bipartition search.
//!
//! For any valid cyclic cut `S`, taking `X` to be one component of `G - S`
//! gives a bipartition whose crossing set is contained in `S` and whose sides
//! still have only cyclic components (merging cyclic components keeps them
//! cyclic). Conversely the crossing set of such a bipartition is itself a
//! valid cut. So the minimum over bipartitions is the cyclic
//! edge-connectivity.
//!
//! Subsets are `u64` masks with vertex `n - 1` pinned outside `X`, so each
//! bipartition is seen exactly once.

use alloc::vec::Vec;

use super::cut::{cut_from_side, EdgeCut};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_MAX_N: usize = 20;

/// Largest vertex count the mask representation supports.
pub const HARD_MAX_N: usize = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleStatus {
    Value,
    Undefined,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub status: OracleStatus,
    pub value: Option<usize>,
    /// A cut attaining `value`.
    pub witness: Option<EdgeCut>,
    /// Bipartitions examined.
    pub explored: u64,
}

#[derive(Clone, Copy)]
enum Criterion {
    /// Every component of both sides has a cycle.
    Cyclic,
    /// Every component of both sides has at least this many vertices.
    MinComponentSize(usize),
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum TieBreak {
    SubsetInteger,
    SmallestSide,
}

struct Masks {
    adj: Vec<u64>,
    deg: Vec<u32>,
}

impl Masks {
    fn new(g: &Graph) -> Self {
        let adj = (0..g.n())
            .map(|u| g.neighbors(u).iter().fold(0u64, |m, &v| m | (1 << v)))
            .collect();
        let deg = (0..g.n()).map(|u| g.degree(u) as u32).collect();
        Masks { adj, deg }
    }

    fn induced_edges(&self, side: u64) -> u32 {
        bits(side)
            .map(|u| (self.adj[u] & side).count_ones())
            .sum::<u32>()
            / 2
    }

    /// Visits the components of `G[side]` as `(vertex mask, edge count)`
    /// until `f` returns false; returns whether all visits returned true.
    fn all_components(&self, side: u64, mut f: impl FnMut(u64, u32) -> bool) -> bool {
        let mut left = side;
        while left != 0 {
            let mut comp = left & left.wrapping_neg();
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0;
                for u in bits(frontier) {
                    next |= self.adj[u] & side;
                }
                frontier = next & !comp;
                comp |= next;
            }
            left &= !comp;
            if !f(comp, self.induced_edges(comp)) {
                return false;
            }
        }
        true
    }

    fn side_ok(&self, side: u64, criterion: Criterion) -> bool {
        match criterion {
            Criterion::Cyclic => self.all_components(side, |comp, e| e >= comp.count_ones()),
            Criterion::MinComponentSize(k) => {
                self.all_components(side, |comp, _| comp.count_ones() as usize >= k)
            }
        }
    }
}

fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

fn check_size(g: &Graph, max_n: usize) -> Result<()> {
    let limit = max_n.min(HARD_MAX_N);
    if g.n() > limit {
        return Err(Error::TooLarge {
            n: g.n(),
            max_n: limit,
        });
    }
    Ok(())
}

fn search(g: &Graph, criterion: Criterion, tie: TieBreak) -> Result<OracleResult> {
    let n = g.n();
    if n < 2 {
        return Ok(OracleResult {
            status: OracleStatus::Undefined,
            value: None,
            witness: None,
            explored: 0,
        });
    }
    let masks = Masks::new(g);
    let full = (1u64 << n) - 1;
    let top = 1u64 << (n - 1);
    // (cut size, smaller side size, subset)
    let mut best: Option<(u32, u32, u64)> = None;
    let mut explored = 0u64;
    for x in 1..top {
        explored += 1;
        let rest = full & !x;
        let (nx, nr) = (x.count_ones(), rest.count_ones());
        let ex = masks.induced_edges(x);
        let er = masks.induced_edges(rest);
        if let Criterion::Cyclic = criterion {
            if ex < nx || er < nr {
                continue;
            }
        }
        let deg_x: u32 = bits(x).map(|u| masks.deg[u]).sum();
        let cut = deg_x - 2 * ex;
        let key = (cut, nx.min(nr), x);
        let better = match (best, tie) {
            (None, _) => true,
            (Some(b), TieBreak::SubsetInteger) => cut < b.0,
            (Some(b), TieBreak::SmallestSide) => (key.0, key.1) < (b.0, b.1),
        };
        if !better {
            continue;
        }
        if masks.side_ok(x, criterion) && masks.side_ok(rest, criterion) {
            best = Some(key);
        }
    }
    match best {
        None => Ok(OracleResult {
            status: OracleStatus::Undefined,
            value: None,
            witness: None,
            explored,
        }),
        Some((cut, _, x)) => {
            let rest = full & !x;
            let side = match tie {
                TieBreak::SmallestSide if rest.count_ones() < x.count_ones() => rest,
                _ => x,
            };
            let vertices: Vec<usize> = bits(side).collect();
            let witness = cut_from_side(g, &vertices)?;
            debug_assert_eq!(witness.size, cut as usize);
            Ok(OracleResult {
                status: OracleStatus::Value,
                value: Some(cut as usize),
                witness: Some(witness),
                explored,
            })
        }
    }
}

/// Exact cyclic edge-connectivity by enumerating all bipartitions. Ties are
/// broken by the smallest subset integer of `X`.
pub fn cec_oracle(g: &Graph, max_n: usize) -> Result<OracleResult> {
    check_size(g, max_n)?;
    search(g, Criterion::Cyclic, TieBreak::SubsetInteger)
}

/// Like [`cec_oracle`], but among minimum cuts picks one whose smaller side is
/// as small as possible, and reports that smaller side as `X`.
pub fn cec_oracle_smallest_side(g: &Graph, max_n: usize) -> Result<OracleResult> {
    check_size(g, max_n)?;
    search(g, Criterion::Cyclic, TieBreak::SmallestSide)
}

/// Smallest edge cut whose removal leaves only components with at least `k`
/// vertices.
pub fn size_cut_oracle(g: &Graph, k: usize, max_n: usize) -> Result<OracleResult> {
    if k == 0 {
        return Err(Error::param("component size bound k must be >= 1"));
    }
    check_size(g, max_n)?;
    search(g, Criterion::MinComponentSize(k), TieBreak::SubsetInteger)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn bit_iteration() {
        assert_eq!(bits(0b1011_0000).collect::<Vec<_>>(), alloc::vec![4, 5, 7]);
        assert_eq!(bits(0).count(), 0);
    }

    #[test]
    fn known_values() {
        let k44 = generators::complete_bipartite(4, 4).unwrap();
        let r = cec_oracle(&k44, DEFAULT_MAX_N).unwrap();
        assert_eq!(r.status, OracleStatus::Value);
        assert_eq!(r.value, Some(8));
        assert_eq!(r.explored, 127);
        let w = r.witness.unwrap();
        assert!(w.is_cyclic());
        assert_eq!(w.size, 8);

        let p = cec_oracle(&generators::petersen(), DEFAULT_MAX_N).unwrap();
        assert_eq!(p.value, Some(5));

        let k33 = cec_oracle(
            &generators::complete_bipartite(3, 3).unwrap(),
            DEFAULT_MAX_N,
        )
        .unwrap();
        assert_eq!(k33.status, OracleStatus::Undefined);
        assert!(k33.witness.is_none());
    }

    #[test]
    fn too_large() {
        let q5 = generators::hypercube(5).unwrap();
        assert_eq!(
            cec_oracle(&q5, DEFAULT_MAX_N),
            Err(Error::TooLarge { n: 32, max_n: 20 })
        );
        assert_eq!(
            cec_oracle(&generators::hypercube(6).unwrap(), 100),
            Err(Error::TooLarge {
                n: 64,
                max_n: HARD_MAX_N
            })
        );
    }

    #[test]
    fn size_cuts() {
        let h = generators::heawood();
        assert_eq!(
            size_cut_oracle(&h, 1, DEFAULT_MAX_N).unwrap().value,
            Some(3)
        );
        let c6 = generators::cycle(6).unwrap();
        assert_eq!(
            size_cut_oracle(&c6, 3, DEFAULT_MAX_N).unwrap().value,
            Some(2)
        );
        assert_eq!(size_cut_oracle(&c6, 4, DEFAULT_MAX_N).unwrap().value, None);
        assert!(size_cut_oracle(&c6, 0, DEFAULT_MAX_N).is_err());
    }

    #[test]
    fn disconnected_cyclic_graph_has_zero() {
        let g =
            Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_eq!(cec_oracle(&g, DEFAULT_MAX_N).unwrap().value, Some(0));
    }

    #[test]
    fn smallest_side_witness() {
        let p = generators::petersen();
        let r = cec_oracle_smallest_side(&p, DEFAULT_MAX_N).unwrap();
        assert_eq!(r.value, Some(5));
        assert_eq!(r.witness.unwrap().x.len(), 5);
    }
}
