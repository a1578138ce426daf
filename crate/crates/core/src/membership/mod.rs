//! Deciders for the cycle class `Γ(n;k)` and the path class `Π(n;k)`,
//! the structural necessary conditions, and the degree-bound pipeline.

mod bounds;
mod properties;

pub use bounds::{
    bound_pipeline, bound_pipeline_with, emptiness_threshold, min_degree_required, parameter_bounds,
    max_degree_bound, BoundReport, PruneRule, PruneRules,
};
pub use properties::{check_induced_path_property, connectivity_requirement};
pub(crate) use bounds::{first_violation, ratio_string};

use crate::error::{Error, Result};
use crate::graph::{induced_subgraph_with_labels, Graph, VertexSet};
use crate::walks::{circumference, detour_order, hamilton_cycle, hamilton_path, Walk};
use itertools::Itertools;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassKind {
    /// Longest cycles, Hamiltonian deletions.
    Gamma,
    /// Longest paths, traceable deletions.
    Pi,
}

impl ClassKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ClassKind::Gamma => "gamma",
            ClassKind::Pi => "pi",
        }
    }
}

impl fmt::Display for ClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for ClassKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "gamma" => Ok(ClassKind::Gamma),
            "pi" => Ok(ClassKind::Pi),
            other => Err(Error::Parameter(format!("unknown class {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClassParams {
    pub k: usize,
    pub kind: ClassKind,
}

impl ClassParams {
    pub fn gamma(k: usize) -> Self {
        ClassParams { k, kind: ClassKind::Gamma }
    }

    pub fn pi(k: usize) -> Self {
        ClassParams { k, kind: ClassKind::Pi }
    }

    /// Smallest number of vertices a deletion may leave: a cycle needs three.
    pub fn min_remaining(self) -> usize {
        match self.kind {
            ClassKind::Gamma => 3,
            ClassKind::Pi => 1,
        }
    }

    /// Checks `k >= 1` and that `n - k` leaves room for the spanning walk.
    pub fn validate_for(self, n: usize) -> Result<()> {
        if self.k == 0 {
            return Err(Error::Parameter("k must be at least 1".into()));
        }
        if n < self.k + self.min_remaining() {
            return Err(Error::Parameter(format!(
                "{} with k={} needs order at least {}, got {n}",
                self.kind,
                self.k,
                self.k + self.min_remaining()
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Member,
    Refuted,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reason {
    None,
    /// The longest cycle (path) does not have `n - k` vertices.
    WrongLongestWalkLength { found: usize },
    /// Deleting this `k`-set leaves no Hamilton cycle (path).
    BadDeletionSet { set: VertexSet },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipVerdict {
    pub params: ClassParams,
    pub status: Status,
    pub reason: Reason,
    /// The longest cycle (path) found, when one exists.
    pub witness: Option<Walk>,
    /// For members decided with witness collection: one spanning walk per
    /// `k`-set, in lexicographic order of the sets, in original labels.
    pub deletion_walks: Option<Vec<Walk>>,
}

impl MembershipVerdict {
    pub fn is_member(&self) -> bool {
        self.status == Status::Member
    }
}

/// `k`-subsets of `0..n` in lexicographic order of their sorted members.
pub fn deletion_sets(n: usize, k: usize) -> impl Iterator<Item = VertexSet> {
    (0..n).combinations(k).map(VertexSet::from_iter)
}

/// Spanning walk of `g - set` in the original labels, if any.
pub fn spanning_walk_after_deletion(g: &Graph, kind: ClassKind, set: VertexSet) -> Option<Walk> {
    let keep = g.vertices().difference(set);
    let (h, labels) = induced_subgraph_with_labels(g, keep).ok()?;
    match kind {
        ClassKind::Gamma => hamilton_cycle(&h).map(|c| Walk::Cycle(c.map_labels(&labels))),
        ClassKind::Pi => hamilton_path(&h).map(|p| Walk::Path(p.map_labels(&labels))),
    }
}

/// Longest cycle (path) length and witness.
pub fn longest_walk(g: &Graph, kind: ClassKind) -> (usize, Option<Walk>) {
    match kind {
        ClassKind::Gamma => {
            let (c, w) = circumference(g);
            (c, w.map(Walk::Cycle))
        }
        ClassKind::Pi => {
            let (p, w) = detour_order(g);
            (p, Some(Walk::Path(w)))
        }
    }
}

/// Full membership decision.
///
/// The longest-walk length is checked first; then deletion sets are tried
/// in lexicographic order and the first failure is reported.
pub fn decide(g: &Graph, params: ClassParams, collect_walks: bool) -> Result<MembershipVerdict> {
    let n = g.order();
    params.validate_for(n)?;
    let (found, witness) = longest_walk(g, params.kind);
    if found != n - params.k {
        return Ok(MembershipVerdict {
            params,
            status: Status::Refuted,
            reason: Reason::WrongLongestWalkLength { found },
            witness,
            deletion_walks: None,
        });
    }
    let mut walks = Vec::new();
    for set in deletion_sets(n, params.k) {
        match spanning_walk_after_deletion(g, params.kind, set) {
            Some(w) => {
                if collect_walks {
                    walks.push(w);
                }
            }
            None => {
                return Ok(MembershipVerdict {
                    params,
                    status: Status::Refuted,
                    reason: Reason::BadDeletionSet { set },
                    witness,
                    deletion_walks: None,
                })
            }
        }
    }
    Ok(MembershipVerdict {
        params,
        status: Status::Member,
        reason: Reason::None,
        witness,
        deletion_walks: collect_walks.then_some(walks),
    })
}

pub fn gamma_membership(g: &Graph, k: usize) -> Result<MembershipVerdict> {
    decide(g, ClassParams::gamma(k), false)
}

pub fn pi_membership(g: &Graph, k: usize) -> Result<MembershipVerdict> {
    decide(g, ClassParams::pi(k), false)
}

/// Membership in `Γ(n;1)`. Graphs of order below 4 are never hypohamiltonian.
pub fn is_hypohamiltonian(g: &Graph) -> bool {
    if g.order() < 4 {
        return false;
    }
    let member = gamma_membership(g, 1).map(|v| v.is_member()).unwrap_or(false);
    debug_assert_eq!(member, is_hypohamiltonian_direct(g));
    member
}

/// Non-Hamiltonian with every vertex-deleted subgraph Hamiltonian.
pub fn is_hypohamiltonian_direct(g: &Graph) -> bool {
    g.order() >= 4
        && hamilton_cycle(g).is_none()
        && (0..g.order()).all(|v| {
            spanning_walk_after_deletion(g, ClassKind::Gamma, VertexSet::from_iter([v])).is_some()
        })
}

/// Membership in `Π(n;1)`. Graphs of order below 4 are never hypotraceable.
pub fn is_hypotraceable(g: &Graph) -> bool {
    g.order() >= 4 && pi_membership(g, 1).map(|v| v.is_member()).unwrap_or(false)
}
