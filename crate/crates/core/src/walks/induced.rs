use super::PathWitness;
use crate::graph::{bit, Bits, Graph};

/// A maximum-order induced path with endpoint `v`; among those, the
/// lexicographically smallest vertex sequence.
///
/// Depth-first in ascending neighbour order enumerates sequences
/// lexicographically, so the first path reaching a new maximum is the one
/// kept.
pub fn longest_induced_path_from(g: &Graph, v: usize) -> PathWitness {
    let mut s = InducedSearch {
        g,
        path: vec![v],
        best: vec![v],
        target: usize::MAX,
    };
    s.dfs(bit(v), 0);
    PathWitness::from_vec_unchecked(s.best)
}

/// Whether some induced path of order at least `order` has endpoint `v`.
pub fn has_induced_path_from(g: &Graph, v: usize, order: usize) -> bool {
    if order <= 1 {
        return true;
    }
    let mut s = InducedSearch {
        g,
        path: vec![v],
        best: vec![v],
        target: order,
    };
    s.dfs(bit(v), 0);
    s.best.len() >= order
}

/// The lexicographically smallest induced path of exactly `order` vertices
/// with first vertex `v`.
pub fn induced_path_from(g: &Graph, v: usize, order: usize) -> Option<PathWitness> {
    match order {
        0 => return None,
        1 => return Some(PathWitness::from_vec_unchecked(vec![v])),
        _ => {}
    }
    let mut s = InducedSearch {
        g,
        path: vec![v],
        best: vec![v],
        target: order,
    };
    s.dfs(bit(v), 0);
    (s.best.len() == order).then(|| PathWitness::from_vec_unchecked(s.best))
}

struct InducedSearch<'a> {
    g: &'a Graph,
    path: Vec<usize>,
    best: Vec<usize>,
    target: usize,
}

impl InducedSearch<'_> {
    /// `blocked` holds the closed neighbourhood of every path vertex except
    /// the current end, which no extension may touch.
    fn dfs(&mut self, on_path: u64, blocked: u64) -> bool {
        let g = self.g;
        let cur = *self.path.last().unwrap();
        if self.path.len() > self.best.len() {
            self.best.clone_from(&self.path);
            if self.best.len() >= self.target {
                return true;
            }
        }
        let free = g.vertex_mask() & !blocked & !on_path;
        let reach = g.reach_within(cur, free | bit(cur)) & free;
        if self.path.len() + reach.count_ones() as usize <= self.best.len() {
            return false;
        }
        let next_blocked = blocked | g.neighbors(cur) | bit(cur);
        for next in Bits(g.neighbors(cur) & free) {
            self.path.push(next);
            if self.dfs(on_path | bit(next), next_blocked) {
                return true;
            }
            self.path.pop();
        }
        false
    }
}
