use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{edge, ComponentSummary, Edge, Graph};

/// The edge cut `E(X, V \ X)` of a vertex bipartition, with the component
/// structure of both sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeCut {
    /// Sorted side `X`.
    pub x: Vec<usize>,
    /// Edges with exactly one end in `X`, sorted.
    pub crossing: Vec<Edge>,
    pub size: usize,
    /// Components of `G[X]`.
    pub x_components: Vec<ComponentSummary>,
    /// Components of `G[V \ X]`.
    pub rest_components: Vec<ComponentSummary>,
}

impl EdgeCut {
    /// Both sides nonempty and every component on either side has a cycle.
    pub fn is_cyclic(&self) -> bool {
        !self.x_components.is_empty()
            && !self.rest_components.is_empty()
            && self.components().all(ComponentSummary::has_cycle)
    }

    pub fn components(&self) -> impl Iterator<Item = &ComponentSummary> {
        self.x_components.iter().chain(&self.rest_components)
    }
}

/// Builds the cut induced by the side `x`. Duplicate ids are ignored.
pub fn cut_from_side(g: &Graph, x: &[usize]) -> Result<EdgeCut> {
    let n = g.n();
    let mut member = vec![false; n];
    for &v in x {
        if v >= n {
            return Err(Error::InvalidVertex { vertex: v, n });
        }
        member[v] = true;
    }
    let side: Vec<usize> = (0..n).filter(|&v| member[v]).collect();
    if side.is_empty() || side.len() == n {
        return Err(Error::param("cut side must be a nonempty proper subset"));
    }
    let crossing: Vec<Edge> = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| member[u] != member[v])
        .collect();
    let x_components = g.induced_components(&member);
    let complement: Vec<bool> = member.iter().map(|&b| !b).collect();
    let rest_components = g.induced_components(&complement);
    Ok(EdgeCut {
        x: side,
        size: crossing.len(),
        crossing,
        x_components,
        rest_components,
    })
}

/// Result of [`validate_cyclic_cut`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutValidation {
    pub valid: bool,
    /// Components of `G - S`; `edges` counts edges surviving in each.
    pub components: Vec<ComponentSummary>,
}

/// Checks whether removing `s` leaves a disconnected graph whose every
/// component contains a cycle.
pub fn validate_cyclic_cut(g: &Graph, s: &[Edge]) -> Result<CutValidation> {
    let mut removed = BTreeSet::new();
    for &(u, v) in s {
        if !g.has_edge(u, v) {
            return Err(Error::UnknownEdge(u, v));
        }
        removed.insert(edge(u, v));
    }
    let n = g.n();
    let mut seen = vec![false; n];
    let mut components = Vec::new();
    let mut stack = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        stack.push(start);
        let mut vertices = Vec::new();
        let mut degree_sum = 0;
        while let Some(u) = stack.pop() {
            vertices.push(u);
            for &w in g.neighbors(u) {
                if removed.contains(&edge(u, w)) {
                    continue;
                }
                degree_sum += 1;
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        vertices.sort_unstable();
        components.push(ComponentSummary {
            vertices,
            edges: degree_sum / 2,
        });
    }
    let valid = components.len() >= 2 && components.iter().all(ComponentSummary::has_cycle);
    Ok(CutValidation { valid, components })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn petersen_spokes() {
        let p = generators::petersen();
        let spokes: Vec<Edge> = (0..5).map(|i| (i, i + 5)).collect();
        let v = validate_cyclic_cut(&p, &spokes).unwrap();
        assert!(v.valid);
        assert_eq!(v.components.len(), 2);
        assert!(v
            .components
            .iter()
            .all(|c| c.vertices.len() == 5 && c.edges == 5));

        let cut = cut_from_side(&p, &[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(cut.crossing, spokes);
        assert!(cut.is_cyclic());
    }

    #[test]
    fn k4_triangle_boundary_is_not_cyclic() {
        let k4 = generators::complete(4).unwrap();
        // isolates vertex 3: the triangle survives, {3} is a tree
        let s = [(0, 3), (1, 3), (2, 3)];
        let v = validate_cyclic_cut(&k4, &s).unwrap();
        assert!(!v.valid);
        assert_eq!(v.components.len(), 2);
        assert!(!cut_from_side(&k4, &[0, 1, 2]).unwrap().is_cyclic());
    }

    #[test]
    fn connected_remainder_is_invalid() {
        let c = generators::cycle(6).unwrap();
        let v = validate_cyclic_cut(&c, &[(0, 1)]).unwrap();
        assert!(!v.valid);
        assert_eq!(v.components.len(), 1);
    }

    #[test]
    fn unknown_edges_rejected() {
        let p = generators::petersen();
        assert_eq!(
            validate_cyclic_cut(&p, &[(0, 2)]),
            Err(Error::UnknownEdge(0, 2))
        );
        assert!(cut_from_side(&p, &[]).is_err());
        assert!(cut_from_side(&p, &[10]).is_err());
    }
}
