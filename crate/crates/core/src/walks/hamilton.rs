use super::{CycleWitness, PathWitness};
use crate::graph::{bit, Bits, Graph};

/// Hamilton cycle through vertex 0, or `None`.
///
/// Depth-first over paths from 0 with three prunes at every node:
/// unvisited vertices must keep two usable neighbours, vertices left with
/// exactly two usable neighbours force both edges (more than two forced
/// edges at one vertex, or more forced edges at a path end than it has free
/// slots, kills the branch), and the unvisited part must stay reachable from
/// the current end. A forced edge at the current end is taken immediately.
pub fn hamilton_cycle(g: &Graph) -> Option<CycleWitness> {
    let n = g.order();
    if n < 3 || g.min_degree() < 2 || !g.is_connected() {
        return None;
    }
    let mut s = CycleSearch {
        g,
        all: g.vertex_mask(),
        path: Vec::with_capacity(n),
    };
    s.path.push(0);
    if s.dfs(bit(0)) {
        Some(CycleWitness::from_vec_unchecked(s.path))
    } else {
        None
    }
}

struct CycleSearch<'a> {
    g: &'a Graph,
    all: u64,
    path: Vec<usize>,
}

impl CycleSearch<'_> {
    fn dfs(&mut self, visited: u64) -> bool {
        let g = self.g;
        let cur = *self.path.last().unwrap();
        let start = self.path[0];
        let unvisited = self.all & !visited;
        if unvisited == 0 {
            return g.has_edge(cur, start);
        }
        let ends = bit(cur) | bit(start);
        let usable = unvisited | ends;
        let mut forced = 0u64;
        for w in Bits(unvisited) {
            let avail = (g.neighbors(w) & usable).count_ones();
            if avail < 2 {
                return false;
            }
            if avail == 2 {
                forced |= bit(w);
            }
        }
        if forced != 0 {
            // free slots: the current end has one (two while the path is a
            // single vertex), the start keeps one for closing the cycle
            let fresh = cur == start;
            let cur_forced = (g.neighbors(cur) & forced).count_ones();
            if cur_forced > if fresh { 2 } else { 1 } {
                return false;
            }
            if !fresh && (g.neighbors(start) & forced).count_ones() > 1 {
                return false;
            }
            for x in Bits(unvisited) {
                if (g.neighbors(x) & forced).count_ones() > 2 {
                    return false;
                }
            }
        }
        if g.reach_within(cur, unvisited | bit(cur)) & unvisited != unvisited {
            return false;
        }
        let forced_next = g.neighbors(cur) & forced;
        let candidates = if forced_next != 0 {
            bit(forced_next.trailing_zeros() as usize)
        } else {
            g.neighbors(cur) & unvisited
        };
        for next in Bits(candidates) {
            self.path.push(next);
            if self.dfs(visited | bit(next)) {
                return true;
            }
            self.path.pop();
        }
        false
    }
}

/// Hamilton path, or `None`.
///
/// When the graph has degree-1 vertices the path must start at one of them,
/// so only those starts are tried; otherwise every vertex in ascending order.
pub fn hamilton_path(g: &Graph) -> Option<PathWitness> {
    let n = g.order();
    if n == 1 {
        return Some(PathWitness::from_vec_unchecked(vec![0]));
    }
    if !g.is_connected() {
        return None;
    }
    let leaves: u64 = (0..n).filter(|&v| g.degree(v) == 1).fold(0, |m, v| m | bit(v));
    if leaves.count_ones() > 2 {
        return None;
    }
    let starts = if leaves != 0 { leaves } else { g.vertex_mask() };
    let mut s = PathSearch {
        g,
        all: g.vertex_mask(),
        path: Vec::with_capacity(n),
    };
    for start in Bits(starts) {
        s.path.clear();
        s.path.push(start);
        if s.dfs(bit(start)) {
            return Some(PathWitness::from_vec_unchecked(s.path));
        }
    }
    None
}

struct PathSearch<'a> {
    g: &'a Graph,
    all: u64,
    path: Vec<usize>,
}

impl PathSearch<'_> {
    fn dfs(&mut self, visited: u64) -> bool {
        let g = self.g;
        let cur = *self.path.last().unwrap();
        let unvisited = self.all & !visited;
        if unvisited == 0 {
            return true;
        }
        let usable = unvisited | bit(cur);
        let mut dead_ends = 0;
        for w in Bits(unvisited) {
            match (g.neighbors(w) & usable).count_ones() {
                0 => return false,
                1 => dead_ends += 1,
                _ => {}
            }
        }
        if dead_ends > 1 {
            return false;
        }
        if g.reach_within(cur, usable) & unvisited != unvisited {
            return false;
        }
        for next in Bits(g.neighbors(cur) & unvisited) {
            self.path.push(next);
            if self.dfs(visited | bit(next)) {
                return true;
            }
            self.path.pop();
        }
        false
    }
}
