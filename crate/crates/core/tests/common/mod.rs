#![allow(dead_code)]

use hypocheck::search::{generate_small, GenConstraints};
use hypocheck::Graph;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Random spanning tree on a shuffled vertex order plus independent extra
/// edges with probability `p`.
pub fn random_connected(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = random_graph(rng, n, p);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for i in 1..n {
        let j = rng.random_range(0..i);
        g.add_edge(order[i], order[j]);
    }
    g
}

/// Every connected graph of order `1..=max_n`, one per isomorphism class.
pub fn connected_corpus(max_n: usize) -> Vec<Graph> {
    (1..=max_n)
        .flat_map(|n| generate_small(n, GenConstraints::default()).unwrap())
        .collect()
}
