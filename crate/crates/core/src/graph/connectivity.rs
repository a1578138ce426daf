use super::{Bits, Graph};
use crate::error::{Error, Result};

/// Unit-capacity vertex-split flow network, rebuilt per query.
struct SplitNetwork {
    nodes: usize,
    cap: Vec<u16>,
}

impl SplitNetwork {
    fn new(g: &Graph, s: usize, t: usize) -> Self {
        let n = g.order();
        let nodes = 2 * n;
        let big = n as u16;
        let mut cap = vec![0u16; nodes * nodes];
        for v in 0..n {
            if v != s && v != t {
                cap[(2 * v) * nodes + 2 * v + 1] = 1;
            } else {
                cap[(2 * v) * nodes + 2 * v + 1] = big;
            }
            for u in Bits(g.neighbors(v)) {
                cap[(2 * v + 1) * nodes + 2 * u] = big;
            }
        }
        SplitNetwork { nodes, cap }
    }

    fn augment(&mut self, source: usize, sink: usize) -> bool {
        let n = self.nodes;
        let mut parent = vec![usize::MAX; n];
        parent[source] = source;
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            if x == sink {
                break;
            }
            for y in 0..n {
                if parent[y] == usize::MAX && self.cap[x * n + y] > 0 {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if parent[sink] == usize::MAX {
            return false;
        }
        let mut y = sink;
        while y != source {
            let x = parent[y];
            self.cap[x * n + y] -= 1;
            self.cap[y * n + x] += 1;
            y = x;
        }
        true
    }
}

/// Maximum number of internally disjoint `s`–`t` paths between two distinct
/// non-adjacent vertices, capped at `limit`.
pub fn local_connectivity(g: &Graph, s: usize, t: usize, limit: usize) -> usize {
    debug_assert!(s != t && !g.has_edge(s, t));
    let mut net = SplitNetwork::new(g, s, t);
    let (source, sink) = (2 * s + 1, 2 * t);
    let mut flow = 0;
    while flow < limit && net.augment(source, sink) {
        flow += 1;
    }
    flow
}

/// Vertex connectivity, with `κ(K_n) = n - 1`.
///
/// Only pairs `(v_i, v_j)` with `i <= κ` need checking: some vertex among
/// the first `κ + 1` lies outside any minimum separator, and every vertex on
/// its far side has a larger label.
pub fn vertex_connectivity(g: &Graph) -> Result<usize> {
    let n = g.order();
    if n < 2 {
        return Err(Error::UndefinedOrder(n));
    }
    let mut best = g.min_degree();
    let mut i = 0;
    while i < n && i <= best {
        for j in i + 1..n {
            if !g.has_edge(i, j) {
                best = best.min(local_connectivity(g, i, j, best));
            }
        }
        i += 1;
    }
    Ok(best)
}

/// `vertex_connectivity(g) >= t`, with early exits.
pub fn connectivity_at_least(g: &Graph, t: usize) -> bool {
    let n = g.order();
    if t == 0 {
        return true;
    }
    if n < 2 || n - 1 < t || g.min_degree() < t {
        return false;
    }
    if t == 1 {
        return g.is_connected();
    }
    for i in 0..t.min(n) {
        for j in i + 1..n {
            if !g.has_edge(i, j) && local_connectivity(g, i, j, t) < t {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::graph::{bit, low_bits};
    use itertools::Itertools;

    /// Smallest vertex set whose removal disconnects the graph or leaves one
    /// vertex, found by trying every subset in order of size.
    fn brute_connectivity(g: &Graph) -> usize {
        let n = g.order();
        for size in 0..n - 1 {
            for cut in (0..n).combinations(size) {
                let mask: u64 = cut.iter().fold(0, |m, &v| m | bit(v));
                let rest = low_bits(n) & !mask;
                if !g.is_connected_within(rest) {
                    return size;
                }
            }
        }
        n - 1
    }

    #[test]
    fn named_graphs() {
        assert_eq!(vertex_connectivity(&complete(5)).unwrap(), 4);
        assert_eq!(vertex_connectivity(&path(4)).unwrap(), 1);
        assert_eq!(vertex_connectivity(&cycle(7)).unwrap(), 2);
        assert_eq!(brute_connectivity(&petersen()), 3);
        assert_eq!(vertex_connectivity(&petersen()).unwrap(), 3);
        assert_eq!(vertex_connectivity(&complete_bipartite(3, 4)).unwrap(), 3);
        let two_triangles = disjoint_union(&complete(3), &complete(3));
        assert_eq!(vertex_connectivity(&two_triangles).unwrap(), 0);
        assert_eq!(vertex_connectivity(&complete(2)).unwrap(), 1);
        assert_eq!(vertex_connectivity(&Graph::new(1).unwrap()), Err(Error::UndefinedOrder(1)));
    }

    #[test]
    fn threshold_form_matches() {
        for g in [petersen(), complete(6), cycle(5), path(4), complete_bipartite(2, 5)] {
            let k = vertex_connectivity(&g).unwrap();
            for t in 0..=g.order() {
                assert_eq!(connectivity_at_least(&g, t), k >= t, "{g:?} t={t}");
            }
        }
    }

    #[test]
    fn matches_brute_force_on_small_graphs() {
        // every labelled graph on 5 vertices
        let pairs: Vec<(usize, usize)> = (0..5).tuple_combinations().collect();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edges(5, &edges).unwrap();
            assert_eq!(vertex_connectivity(&g).unwrap(), brute_connectivity(&g), "{g:?}");
        }
    }
}
