//! Isomorph-free generation of connected graphs by canonical augmentation:
//! a graph of order `m + 1` is accepted from a parent of order `m` only when
//! the added vertex is, up to automorphism, the one canonical deletion would
//! remove.

use super::canon::canonical_form;
use crate::error::{Error, Result};
use crate::graph::{bit, Bits, Graph};
use serde::{Deserialize, Serialize};

pub const GENERATOR_MAX_ORDER: usize = 10;

/// Constraints applied during generation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenConstraints {
    pub min_degree: usize,
    pub max_degree: Option<usize>,
    pub min_connectivity: usize,
}

impl GenConstraints {
    fn degree_floor(&self) -> usize {
        self.min_degree.max(self.min_connectivity)
    }

    fn accepts_complete(&self, g: &Graph) -> bool {
        if g.min_degree() < self.degree_floor() {
            return false;
        }
        if self.max_degree.is_some_and(|d| g.max_degree() > d) {
            return false;
        }
        self.min_connectivity <= 1
            || (g.order() >= 2 && crate::graph::connectivity_at_least(g, self.min_connectivity))
    }
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::UnsupportedOrder(0));
    }
    if n > GENERATOR_MAX_ORDER {
        return Err(Error::GeneratorSize {
            order: n,
            limit: GENERATOR_MAX_ORDER,
        });
    }
    Ok(())
}

/// One representative of every isomorphism class of connected graphs of
/// order `n` meeting `constraints`.
pub fn generate_small(n: usize, constraints: GenConstraints) -> Result<impl Iterator<Item = Graph>> {
    check_order(n)?;
    let parents = if n == 1 { Vec::new() } else { parents(n, constraints)? };
    let single = (n == 1)
        .then(|| Graph::new(1).expect("order 1"))
        .filter(|g| constraints.accepts_complete(g));
    Ok(single
        .into_iter()
        .chain(parents.into_iter().flat_map(move |p| children(&p, n, constraints))))
}

/// All accepted graphs of order `n - 1` on the way to order `n`. Every
/// output graph of order `n` is a child of exactly one of them.
pub fn parents(n: usize, constraints: GenConstraints) -> Result<Vec<Graph>> {
    check_order(n)?;
    if n < 2 {
        return Err(Error::Parameter("order 1 has no parent level".into()));
    }
    let mut level = vec![Graph::new(1).expect("order 1")];
    for _ in 2..n {
        level = level.iter().flat_map(|p| children(p, n, constraints)).collect();
    }
    Ok(level)
}

/// Accepted one-vertex extensions of `parent` toward target order `n`.
/// When the child has order `n` the final constraints are applied as well.
pub fn children(parent: &Graph, n: usize, constraints: GenConstraints) -> Vec<Graph> {
    let m = parent.order();
    let child_order = m + 1;
    debug_assert!(child_order <= n);
    // each later vertex can add at most one to a degree
    let floor = constraints.degree_floor().saturating_sub(n - child_order);
    let minimal = orbit_minimal_masks(parent);
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << m) {
        if !minimal[mask as usize] {
            continue;
        }
        let d = mask.count_ones() as usize;
        if d < floor || !degrees_fit(parent, mask, floor, constraints.max_degree) {
            continue;
        }
        let mut child = parent.clone();
        child.push_vertex(mask).expect("order below 64");
        if !is_canonical_extension(&child, m) {
            continue;
        }
        if child_order == n && !constraints.accepts_complete(&child) {
            continue;
        }
        out.push(child);
    }
    out
}

fn degrees_fit(parent: &Graph, mask: u64, floor: usize, ceiling: Option<usize>) -> bool {
    (0..parent.order()).all(|v| {
        let deg = parent.degree(v) + usize::from(mask & bit(v) != 0);
        deg >= floor && ceiling.is_none_or(|c| deg <= c)
    })
}

/// `minimal[s]` is true when `s` is the smallest mask in its orbit under the
/// automorphism group of `g`.
fn orbit_minimal_masks(g: &Graph) -> Vec<bool> {
    let m = g.order();
    let size = 1usize << m;
    let gens = canonical_form(g).generators;
    if gens.is_empty() {
        return vec![true; size];
    }
    let mut parent: Vec<u32> = (0..size as u32).collect();
    fn find(p: &mut [u32], mut x: u32) -> u32 {
        while p[x as usize] != x {
            p[x as usize] = p[p[x as usize] as usize];
            x = p[x as usize];
        }
        x
    }
    for a in &gens {
        for s in 0..size as u64 {
            let image = Bits(s).fold(0u64, |acc, v| acc | bit(a[v]));
            let (x, y) = (find(&mut parent, s as u32), find(&mut parent, image as u32));
            if x != y {
                parent[x.max(y) as usize] = x.min(y);
            }
        }
    }
    (0..size as u32).map(|s| find(&mut parent, s) == s).collect()
}

/// Canonical deletion: among non-cut vertices of minimum degree, the one
/// placed last by the canonical labelling. The extension is accepted when
/// `new` lies in that vertex's orbit.
fn is_canonical_extension(child: &Graph, new: usize) -> bool {
    let all = child.vertex_mask();
    let non_cut: Vec<usize> = (0..child.order())
        .filter(|&v| child.order() == 1 || child.is_connected_within(all & !bit(v)))
        .collect();
    let d_new = child.degree(new);
    let min_deg = non_cut.iter().map(|&v| child.degree(v)).min().expect("some non-cut vertex");
    if d_new > min_deg {
        return false;
    }
    let candidates: Vec<usize> = non_cut.into_iter().filter(|&v| child.degree(v) == d_new).collect();
    if candidates.len() == 1 {
        return true;
    }
    let canon = canonical_form(child);
    let chosen = *candidates
        .iter()
        .max_by_key(|&&v| canon.position_of(v))
        .expect("nonempty");
    canon.same_orbit(chosen, new)
}
