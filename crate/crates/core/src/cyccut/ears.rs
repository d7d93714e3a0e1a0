use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph};

/// Bridges by iterative depth-first lowpoint computation, sorted.
pub fn bridges(g: &Graph) -> Vec<Edge> {
    let n = g.n();
    let mut order = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut parent = vec![usize::MAX; n];
    let mut next_child = vec![0; n];
    let mut counter = 0;
    let mut out = Vec::new();
    let mut stack = Vec::new();
    for root in 0..n {
        if order[root] != usize::MAX {
            continue;
        }
        order[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        while let Some(&u) = stack.last() {
            if next_child[u] < g.degree(u) {
                let w = g.neighbors(u)[next_child[u]];
                next_child[u] += 1;
                if order[w] == usize::MAX {
                    order[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    parent[w] = u;
                    stack.push(w);
                } else if w != parent[u] {
                    low[u] = low[u].min(order[w]);
                }
            } else {
                stack.pop();
                let p = parent[u];
                if p != usize::MAX {
                    low[p] = low[p].min(low[u]);
                    if low[u] > order[p] {
                        out.push(edge(p, u));
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Connected, at least two vertices, and no bridges.
pub fn is_two_edge_connected(g: &Graph) -> bool {
    g.n() >= 2 && g.is_connected() && bridges(g).is_empty()
}

/// A base cycle followed by ears. Each ear is a vertex path whose two ends
/// are already attached and whose interior vertices are new; the ends may
/// coincide (a closed ear), which 2-edge-connected graphs can require.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EarDecomposition {
    pub base_cycle: Vec<usize>,
    pub ears: Vec<Vec<usize>>,
}

impl EarDecomposition {
    /// All edges of the base cycle and ears, sorted, with repeats kept.
    pub fn edges(&self) -> Vec<Edge> {
        let k = self.base_cycle.len();
        let mut out: Vec<Edge> = (0..k)
            .map(|i| edge(self.base_cycle[i], self.base_cycle[(i + 1) % k]))
            .collect();
        for ear in &self.ears {
            out.extend(ear.windows(2).map(|w| edge(w[0], w[1])));
        }
        out.sort_unstable();
        out
    }

    /// Checks edge-exact reconstruction of `g` and the ear nesting rules.
    pub fn verify(&self, g: &Graph) -> bool {
        if self.edges() != g.edges() || self.ears.len() + g.n() != g.m() {
            return false;
        }
        let mut attached = vec![false; g.n()];
        for &v in &self.base_cycle {
            if attached[v] {
                return false;
            }
            attached[v] = true;
        }
        for ear in &self.ears {
            let Some((&first, rest)) = ear.split_first() else {
                return false;
            };
            let Some((&last, interior)) = rest.split_last() else {
                return false;
            };
            if !attached[first] || !attached[last] {
                return false;
            }
            for &v in interior {
                if attached[v] {
                    return false;
                }
                attached[v] = true;
            }
        }
        attached.iter().all(|&a| a)
    }
}

/// Finds some cycle by depth-first search; vertices in cycle order.
fn any_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut visited = vec![false; n];
    let mut on_stack = vec![false; n];
    let mut next_child = vec![0; n];
    for root in 0..n {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        on_stack[root] = true;
        let mut stack = vec![root];
        while let Some(&u) = stack.last() {
            if next_child[u] < g.degree(u) {
                let w = g.neighbors(u)[next_child[u]];
                next_child[u] += 1;
                if !visited[w] {
                    visited[w] = true;
                    on_stack[w] = true;
                    parent[w] = u;
                    stack.push(w);
                } else if on_stack[w] && w != parent[u] {
                    let mut cycle = vec![u];
                    let mut x = u;
                    while x != w {
                        x = parent[x];
                        cycle.push(x);
                    }
                    cycle.reverse();
                    return Some(cycle);
                }
            } else {
                on_stack[u] = false;
                stack.pop();
            }
        }
    }
    None
}

/// Ear decomposition of a 2-edge-connected graph.
///
/// Starts from a cycle and repeatedly takes the first unused edge `u v`
/// leaving the attached part, extending it by a shortest path through
/// unattached vertices back to the attached part.
pub fn ear_decomposition(g: &Graph) -> Result<EarDecomposition> {
    if !is_two_edge_connected(g) {
        return Err(Error::TwoEdgeConnectivityRequired);
    }
    let n = g.n();
    let base_cycle = any_cycle(g).ok_or(Error::TwoEdgeConnectivityRequired)?;
    let mut attached = vec![false; n];
    let mut used: BTreeSet<Edge> = BTreeSet::new();
    for (i, &v) in base_cycle.iter().enumerate() {
        attached[v] = true;
        used.insert(edge(v, base_cycle[(i + 1) % base_cycle.len()]));
    }
    let mut ears = Vec::new();
    let mut prev = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    while used.len() < g.m() {
        let (u, v) = (0..n)
            .filter(|&u| attached[u])
            .flat_map(|u| g.neighbors(u).iter().map(move |&v| (u, v)))
            .find(|&(u, v)| !used.contains(&edge(u, v)))
            .ok_or(Error::TwoEdgeConnectivityRequired)?;
        if attached[v] {
            used.insert(edge(u, v));
            ears.push(vec![u, v]);
            continue;
        }
        // BFS from v through unattached vertices, not returning along v-u
        prev.fill(usize::MAX);
        prev[v] = u;
        queue.clear();
        queue.push_back(v);
        let mut end = None;
        'bfs: while let Some(x) = queue.pop_front() {
            for &w in g.neighbors(x) {
                if x == v && w == u {
                    continue;
                }
                if attached[w] {
                    end = Some((x, w));
                    break 'bfs;
                }
                if prev[w] == usize::MAX && w != v {
                    prev[w] = x;
                    queue.push_back(w);
                }
            }
        }
        let (x, w) = end.ok_or(Error::TwoEdgeConnectivityRequired)?;
        let mut ear = vec![w, x];
        let mut y = x;
        while y != v {
            y = prev[y];
            ear.push(y);
        }
        ear.push(u);
        ear.reverse();
        for pair in ear.windows(2) {
            used.insert(edge(pair[0], pair[1]));
        }
        for &y in &ear[1..ear.len() - 1] {
            attached[y] = true;
        }
        ears.push(ear);
    }
    Ok(EarDecomposition { base_cycle, ears })
}
