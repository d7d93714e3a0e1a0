use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use super::cut::{cut_from_side, EdgeCut};
use crate::error::{Error, Result};
use crate::graph::{Girth, Graph};

/// Rotates a cycle so its smallest vertex comes first, then picks the
/// direction with the smaller second vertex.
pub fn canonical_cycle(cycle: &[usize]) -> Vec<usize> {
    let len = cycle.len();
    if len == 0 {
        return Vec::new();
    }
    let start = (0..len).min_by_key(|&i| cycle[i]).unwrap_or(0);
    let forward: Vec<usize> = (0..len).map(|i| cycle[(start + i) % len]).collect();
    let backward: Vec<usize> = (0..len).map(|i| cycle[(start + len - i) % len]).collect();
    forward.min(backward)
}

/// Up to `limit` distinct shortest cycles in canonical form, in
/// lexicographic order.
pub fn enumerate_girth_cycles(g: &Graph, limit: usize) -> Result<Vec<Vec<usize>>> {
    let Girth::Finite(girth) = g.girth() else {
        return Err(Error::AcyclicInput);
    };
    if girth == 4 {
        Ok(four_cycles(g, limit))
    } else {
        Ok(cycles_of_length(g, girth, limit))
    }
}

/// Every 4-cycle is `x z y z'` for a pair `x, y` with common neighbors
/// `z, z'`; each is produced once per diagonal.
fn four_cycles(g: &Graph, limit: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for x in 0..g.n() {
        for y in x + 1..g.n() {
            let common = g.common_neighbors(x, y).unwrap_or_default();
            for (i, &z) in common.iter().enumerate() {
                for &z2 in &common[i + 1..] {
                    out.push(canonical_cycle(&[x, z, y, z2]));
                }
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out.truncate(limit);
    out
}

/// Cycles of length exactly `len` in a graph of girth `len`, found by
/// depth-limited search from each root over larger vertices. A closed path
/// of girth length is automatically a cycle.
fn cycles_of_length(g: &Graph, len: usize, limit: usize) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut out = Vec::new();
    let mut dist = vec![usize::MAX; n];
    let mut on_path = vec![false; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        if out.len() >= limit {
            break;
        }
        // distances to the root within vertices >= root bound the remaining depth
        dist.fill(usize::MAX);
        dist[root] = 0;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if w > root && dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        let mut path = vec![root];
        on_path[root] = true;
        extend_path(g, len, limit, &dist, &mut on_path, &mut path, &mut out);
        on_path[root] = false;
    }
    out
}

fn extend_path(
    g: &Graph,
    len: usize,
    limit: usize,
    dist: &[usize],
    on_path: &mut [bool],
    path: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let root = path[0];
    let last = *path.last().expect("path starts at the root");
    if path.len() == len {
        if g.has_edge(last, root) && path[1] < last {
            out.push(path.clone());
        }
        return;
    }
    for &w in g.neighbors(last) {
        if out.len() >= limit {
            return;
        }
        if w <= root || on_path[w] || dist[w] == usize::MAX {
            continue;
        }
        // after adding w, len - path.len() - 1 more steps remain, then the closing edge
        if dist[w] > len - path.len() {
            continue;
        }
        on_path[w] = true;
        path.push(w);
        extend_path(g, len, limit, dist, on_path, path, out);
        path.pop();
        on_path[w] = false;
    }
}

/// A shortest cycle whose boundary `E(C, V \ C)` is a cyclic cut.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparatingCycle {
    pub cycle: Vec<usize>,
    /// Cut with `x` equal to the cycle's vertex set.
    pub cut: EdgeCut,
    /// Candidates tested before success.
    pub candidates_tried: usize,
}

/// Finds a girth cycle whose removal leaves only cyclic components.
///
/// Requires minimum degree at least 3, girth at least 4, connectivity, and
/// that the graph is not `K_{3,t}`. Under these conditions such a cycle
/// always exists; for girth at least 5 any girth cycle works.
pub fn find_separating_girth_cycle(g: &Graph) -> Result<SeparatingCycle> {
    let profile = g.degree_profile();
    if profile.min_degree < 3 {
        return Err(Error::MinDegreeTooSmall {
            min_degree: profile.min_degree,
        });
    }
    let girth = match g.girth() {
        Girth::Finite(girth) => girth,
        Girth::Acyclic => return Err(Error::AcyclicInput),
    };
    if girth < 4 {
        return Err(Error::GirthTooSmall { girth });
    }
    if g.is_complete_bipartite_with_side_3() {
        return Err(Error::ExcludedK3t);
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }

    let limit = if girth >= 5 { 1 } else { usize::MAX };
    let candidates = enumerate_girth_cycles(g, limit)?;
    for (i, cycle) in candidates.into_iter().enumerate() {
        let cut = cut_from_side(g, &cycle)?;
        if cut.is_cyclic() {
            return Ok(SeparatingCycle {
                cycle,
                cut,
                candidates_tried: i + 1,
            });
        }
    }
    Err(Error::LemmaViolationSuspected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn canonical_forms() {
        assert_eq!(canonical_cycle(&[3, 1, 4, 2]), vec![1, 3, 2, 4]);
        assert_eq!(canonical_cycle(&[1, 4, 2, 3]), vec![1, 3, 2, 4]);
        assert_eq!(canonical_cycle(&[]), Vec::<usize>::new());
    }

    #[test]
    fn girth_cycle_counts() {
        let k44 = generators::complete_bipartite(4, 4).unwrap();
        assert_eq!(enumerate_girth_cycles(&k44, 100).unwrap().len(), 36);
        assert_eq!(enumerate_girth_cycles(&k44, 5).unwrap().len(), 5);

        let p = generators::petersen();
        let cycles = enumerate_girth_cycles(&p, usize::MAX).unwrap();
        assert_eq!(cycles.len(), 12);
        assert!(cycles.windows(2).all(|w| w[0] < w[1]));

        let c7 = generators::cycle(7).unwrap();
        assert_eq!(
            enumerate_girth_cycles(&c7, 10).unwrap(),
            vec![vec![0, 1, 2, 3, 4, 5, 6]]
        );

        let k4 = generators::complete(4).unwrap();
        assert_eq!(enumerate_girth_cycles(&k4, 100).unwrap().len(), 4);

        let path = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(enumerate_girth_cycles(&path, 1), Err(Error::AcyclicInput));
    }

    #[test]
    fn heawood_six_cycles() {
        // the Heawood graph has 28 hexagons
        let h = generators::heawood();
        assert_eq!(enumerate_girth_cycles(&h, usize::MAX).unwrap().len(), 28);
    }

    #[test]
    fn petersen_fast_path() {
        let s = find_separating_girth_cycle(&generators::petersen()).unwrap();
        assert_eq!(s.cycle.len(), 5);
        assert_eq!(s.cut.size, 5);
        assert_eq!(s.candidates_tried, 1);
        assert!(s.cut.is_cyclic());
    }

    #[test]
    fn hypercube_search() {
        let s = find_separating_girth_cycle(&generators::hypercube(4).unwrap()).unwrap();
        assert_eq!(s.cycle.len(), 4);
        assert_eq!(s.cut.size, 8);
        assert!(s.cut.rest_components.iter().all(|c| c.has_cycle()));
    }

    #[test]
    fn precondition_errors() {
        assert_eq!(
            find_separating_girth_cycle(&generators::wheel(7).unwrap()),
            Err(Error::GirthTooSmall { girth: 3 })
        );
        assert_eq!(
            find_separating_girth_cycle(&generators::complete_bipartite(3, 4).unwrap()),
            Err(Error::ExcludedK3t)
        );
        assert_eq!(
            find_separating_girth_cycle(&generators::cycle(6).unwrap()),
            Err(Error::MinDegreeTooSmall { min_degree: 2 })
        );
        let p = generators::petersen();
        let mut two = p.edges();
        two.extend(p.edges().into_iter().map(|(u, v)| (u + 10, v + 10)));
        let g = Graph::from_edge_list(20, &two).unwrap();
        assert_eq!(find_separating_girth_cycle(&g), Err(Error::NotConnected));
    }
}
