use super::{extend_cycle, hamilton_cycle, hamilton_path, CycleWitness, PathWitness};
use crate::graph::{bit, Bits, Graph};

/// Vertices of the 2-core of the subgraph induced by `set`.
fn two_core(g: &Graph, mut set: u64) -> u64 {
    loop {
        let weak: u64 = Bits(set)
            .filter(|&v| (g.neighbors(v) & set).count_ones() < 2)
            .fold(0, |m, v| m | bit(v));
        if weak == 0 {
            return set;
        }
        set &= !weak;
    }
}

/// Any cycle in `g` (shortest through the first edge that lies on one).
fn some_cycle(g: &Graph) -> Option<CycleWitness> {
    let core = two_core(g, g.vertex_mask());
    let u = Bits(core).next()?;
    // BFS from a core neighbour of u back to u without using the edge.
    let v = Bits(g.neighbors(u) & core).next()?;
    let n = g.order();
    let mut parent = vec![usize::MAX; n];
    parent[v] = v;
    let mut queue = std::collections::VecDeque::from([v]);
    while let Some(x) = queue.pop_front() {
        for y in Bits(g.neighbors(x) & core) {
            if x == v && y == u {
                continue;
            }
            if parent[y] == usize::MAX {
                parent[y] = x;
                if y == u {
                    let mut cyc = vec![u];
                    let mut z = x;
                    while z != v {
                        cyc.push(z);
                        z = parent[z];
                    }
                    cyc.push(v);
                    return Some(CycleWitness::from_vec_unchecked(cyc));
                }
                queue.push_back(y);
            }
        }
    }
    None
}

/// Circumference `c(G)` with a witness; `(0, None)` for forests.
///
/// Exact branch and bound: a Hamilton check first, then an incumbent grown
/// by repeated [`extend_cycle`], then for each anchor `a` a depth-first
/// search over paths from `a` inside the 2-core of `{a, .., n-1}`, closing
/// back at `a`. A branch is cut when the path length plus everything still
/// reachable from its end cannot beat the incumbent.
pub fn circumference(g: &Graph) -> (usize, Option<CycleWitness>) {
    let n = g.order();
    if let Some(c) = hamilton_cycle(g) {
        return (n, Some(c));
    }
    let Some(mut best) = some_cycle(g) else {
        return (0, None);
    };
    while let Some(longer) = extend_cycle(g, &best).expect("incumbent is a valid cycle") {
        best = longer;
    }
    // not Hamiltonian, so n - 1 is the ceiling
    let ceiling = n - 1;
    let mut search = LongestCycle {
        g,
        best_len: best.len(),
        best: best.into_vec(),
        ceiling,
        path: Vec::with_capacity(n),
        anchor: 0,
        allowed: 0,
    };
    for a in 0..n {
        if search.best_len >= search.ceiling {
            break;
        }
        let allowed = two_core(g, g.vertex_mask() & !crate::graph::low_bits(a));
        if allowed & bit(a) == 0 {
            continue;
        }
        if (allowed.count_ones() as usize) <= search.best_len {
            continue;
        }
        search.anchor = a;
        search.allowed = allowed;
        search.path.clear();
        search.path.push(a);
        search.dfs(bit(a));
    }
    let len = search.best_len;
    (len, Some(CycleWitness::from_vec_unchecked(search.best)))
}

struct LongestCycle<'a> {
    g: &'a Graph,
    best_len: usize,
    best: Vec<usize>,
    ceiling: usize,
    path: Vec<usize>,
    anchor: usize,
    allowed: u64,
}

impl LongestCycle<'_> {
    /// Returns `true` once the ceiling is reached.
    fn dfs(&mut self, visited: u64) -> bool {
        let g = self.g;
        let cur = *self.path.last().unwrap();
        let len = self.path.len();
        if len >= 3 && len > self.best_len && g.has_edge(cur, self.anchor) {
            self.best_len = len;
            self.best.clone_from(&self.path);
            if len >= self.ceiling {
                return true;
            }
        }
        let free = self.allowed & !visited;
        let reach = g.reach_within(cur, free | bit(cur)) & free;
        if len + reach.count_ones() as usize <= self.best_len {
            return false;
        }
        if reach & g.neighbors(self.anchor) == 0 {
            return false;
        }
        for next in Bits(g.neighbors(cur) & free) {
            self.path.push(next);
            if self.dfs(visited | bit(next)) {
                return true;
            }
            self.path.pop();
        }
        false
    }
}

/// Detour order `p(G)` (vertices on a longest path) with a witness.
pub fn detour_order(g: &Graph) -> (usize, PathWitness) {
    let n = g.order();
    if let Some(p) = hamilton_path(g) {
        return (n, p);
    }
    let mut search = LongestPath {
        g,
        best: vec![0],
        ceiling: n - 1,
        path: Vec::with_capacity(n),
    };
    for s in 0..n {
        if search.best.len() >= search.ceiling {
            break;
        }
        let comp = g.reach_within(s, g.vertex_mask());
        if (comp.count_ones() as usize) <= search.best.len() {
            continue;
        }
        search.path.clear();
        search.path.push(s);
        search.dfs(bit(s));
    }
    let p = search.best;
    (p.len(), PathWitness::from_vec_unchecked(p))
}

struct LongestPath<'a> {
    g: &'a Graph,
    best: Vec<usize>,
    ceiling: usize,
    path: Vec<usize>,
}

impl LongestPath<'_> {
    fn dfs(&mut self, visited: u64) -> bool {
        let g = self.g;
        let cur = *self.path.last().unwrap();
        let len = self.path.len();
        if len > self.best.len() {
            self.best.clone_from(&self.path);
            if len >= self.ceiling {
                return true;
            }
        }
        let free = g.vertex_mask() & !visited;
        let reach = g.reach_within(cur, free | bit(cur)) & free;
        if len + reach.count_ones() as usize <= self.best.len() {
            return false;
        }
        for next in Bits(g.neighbors(cur) & free) {
            self.path.push(next);
            if self.dfs(visited | bit(next)) {
                return true;
            }
            self.path.pop();
        }
        false
    }
}
