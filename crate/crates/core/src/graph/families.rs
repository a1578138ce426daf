//! Named graph families used by tests, examples and the CLI.

use super::Graph;

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::new(n).expect("order in range");
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

pub fn path(n: usize) -> Graph {
    let mut g = Graph::new(n).expect("order in range");
    for v in 1..n {
        g.add_edge(v - 1, v);
    }
    g
}

/// `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let mut g = path(n);
    g.add_edge(n - 1, 0);
    g
}

/// Star with centre 0 and `n - 1` leaves.
pub fn star(n: usize) -> Graph {
    let mut g = Graph::new(n).expect("order in range");
    for v in 1..n {
        g.add_edge(0, v);
    }
    g
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::new(a + b).expect("order in range");
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v);
        }
    }
    g
}

pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let na = a.order();
    let mut g = Graph::new(na + b.order()).expect("order in range");
    for (u, v) in a.edges() {
        g.add_edge(u, v);
    }
    for (u, v) in b.edges() {
        g.add_edge(na + u, na + v);
    }
    g
}

/// The Kneser graph K(5,2): 2-subsets of {0..4}, ordered lexicographically,
/// adjacent when disjoint.
pub fn petersen() -> Graph {
    let pairs: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
    let mut g = Graph::new(10).expect("order in range");
    for (i, &(a, b)) in pairs.iter().enumerate() {
        for (j, &(c, d)) in pairs.iter().enumerate().skip(i + 1) {
            if a != c && a != d && b != c && b != d {
                g.add_edge(i, j);
            }
        }
    }
    g
}
