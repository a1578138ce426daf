//! Exact longest-cycle and longest-path procedures.
//!
//! All searches iterate neighbours in ascending label order, so every
//! witness returned here is reproducible for a fixed labelled graph.

mod extend;
mod hamilton;
mod induced;
mod longest;
mod oracle;

pub use extend::extend_cycle;
pub use hamilton::{hamilton_cycle, hamilton_path};
pub use induced::{has_induced_path_from, induced_path_from, longest_induced_path_from};
pub use longest::{circumference, detour_order};
pub use oracle::{circumference_dp_oracle, ORACLE_MAX_ORDER};

use crate::error::{Error, Result};
use crate::graph::{bit, Graph};
use serde::{Deserialize, Serialize};

/// A cycle given by its cyclic vertex sequence (length at least 3).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CycleWitness(Vec<usize>);

/// A path given by its vertex sequence (length at least 1).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PathWitness(Vec<usize>);

fn distinct_in_range(g: &Graph, seq: &[usize]) -> bool {
    let mut seen = 0u64;
    for &v in seq {
        if v >= g.order() || seen & bit(v) != 0 {
            return false;
        }
        seen |= bit(v);
    }
    true
}

impl CycleWitness {
    /// Validates `vertices` as a cycle of `g`.
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Self> {
        let c = CycleWitness(vertices);
        if c.is_valid_in(g) {
            Ok(c)
        } else {
            Err(Error::InvalidWitness(format!("{:?} is not a cycle", c.0)))
        }
    }

    pub(crate) fn from_vec_unchecked(vertices: Vec<usize>) -> Self {
        CycleWitness(vertices)
    }

    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let s = &self.0;
        s.len() >= 3
            && distinct_in_range(g, s)
            && s.iter().zip(s.iter().cycle().skip(1)).all(|(&a, &b)| g.has_edge(a, b))
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vertex_mask(&self) -> u64 {
        self.0.iter().fold(0, |m, &v| m | bit(v))
    }

    /// Rotated to start at its smallest vertex and reflected so the second
    /// vertex is the smaller of that vertex's two cycle neighbours.
    pub fn canonical_orientation(&self) -> CycleWitness {
        let n = self.0.len();
        let start = (0..n).min_by_key(|&i| self.0[i]).unwrap_or(0);
        let fwd = self.0[(start + 1) % n];
        let back = self.0[(start + n - 1) % n];
        let seq = if fwd <= back {
            (0..n).map(|i| self.0[(start + i) % n]).collect()
        } else {
            (0..n).map(|i| self.0[(start + n - i) % n]).collect()
        };
        CycleWitness(seq)
    }

    pub(crate) fn map_labels(&self, labels: &[usize]) -> CycleWitness {
        CycleWitness(self.0.iter().map(|&v| labels[v]).collect())
    }
}

impl PathWitness {
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Self> {
        let p = PathWitness(vertices);
        if p.is_valid_in(g) {
            Ok(p)
        } else {
            Err(Error::InvalidWitness(format!("{:?} is not a path", p.0)))
        }
    }

    pub(crate) fn from_vec_unchecked(vertices: Vec<usize>) -> Self {
        PathWitness(vertices)
    }

    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let s = &self.0;
        !s.is_empty() && distinct_in_range(g, s) && s.windows(2).all(|w| g.has_edge(w[0], w[1]))
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vertex_mask(&self) -> u64 {
        self.0.iter().fold(0, |m, &v| m | bit(v))
    }

    /// The orientation whose vertex sequence is lexicographically smaller.
    pub fn canonical_orientation(&self) -> PathWitness {
        let rev: Vec<usize> = self.0.iter().rev().copied().collect();
        if rev < self.0 {
            PathWitness(rev)
        } else {
            self.clone()
        }
    }

    pub(crate) fn map_labels(&self, labels: &[usize]) -> PathWitness {
        PathWitness(self.0.iter().map(|&v| labels[v]).collect())
    }
}

/// Either kind of spanning or longest walk, as carried by verdicts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Walk {
    Cycle(CycleWitness),
    Path(PathWitness),
}

impl Walk {
    pub fn vertices(&self) -> &[usize] {
        match self {
            Walk::Cycle(c) => c.vertices(),
            Walk::Path(p) => p.vertices(),
        }
    }

    pub fn len(&self) -> usize {
        self.vertices().len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices().is_empty()
    }

    pub fn is_valid_in(&self, g: &Graph) -> bool {
        match self {
            Walk::Cycle(c) => c.is_valid_in(g),
            Walk::Path(p) => p.is_valid_in(g),
        }
    }
}
