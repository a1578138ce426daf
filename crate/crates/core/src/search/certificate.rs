//! Line-delimited verdict certificates.

use crate::error::{Error, Result};
use crate::graph::{parse_graph6, write_graph6, Graph, VertexSet};
use crate::membership::{
    decide, deletion_sets, longest_walk, spanning_walk_after_deletion, ClassKind, ClassParams, Reason, Status,
};
use crate::walks::{CycleWitness, PathWitness};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CertReason {
    WrongLength,
    BadDeletionSet,
}

/// A self-contained membership verdict.
///
/// Members carry one spanning walk per deletion set, in lexicographic order
/// of the sets (or a count only, when walks were not emitted). Refutations
/// carry the longest walk found and, for a bad deletion set, the set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub graph6: String,
    pub class: ClassKind,
    pub k: usize,
    pub verdict: Status,
    pub reason: Option<CertReason>,
    pub found_length: usize,
    pub witness_set: Option<Vec<usize>>,
    pub witness_walks: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_count: Option<usize>,
}

impl Certificate {
    pub fn params(&self) -> ClassParams {
        ClassParams {
            k: self.k,
            kind: self.class,
        }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("certificate serializes")
    }

    pub fn from_json_line(line: &str) -> Result<Certificate> {
        serde_json::from_str(line).map_err(|e| Error::Certificate(e.to_string()))
    }

    /// Drops member walks in favour of their count.
    pub fn summarized(mut self) -> Certificate {
        if self.verdict == Status::Member {
            if let Some(walks) = self.witness_walks.take() {
                self.witness_count = Some(walks.len());
            }
        }
        self
    }
}

/// Decides membership and packages the verdict with every witness.
pub fn certify(g: &Graph, params: ClassParams) -> Result<Certificate> {
    let v = decide(g, params, true)?;
    let graph6 = write_graph6(g);
    let n = g.order();
    let longest = v.witness.map(|w| vec![w.vertices().to_vec()]);
    let cert = match v.reason {
        Reason::None => Certificate {
            graph6,
            class: params.kind,
            k: params.k,
            verdict: Status::Member,
            reason: None,
            found_length: n - params.k,
            witness_set: None,
            witness_walks: v
                .deletion_walks
                .map(|ws| ws.into_iter().map(|w| w.vertices().to_vec()).collect()),
            witness_count: None,
        },
        Reason::WrongLongestWalkLength { found } => Certificate {
            graph6,
            class: params.kind,
            k: params.k,
            verdict: Status::Refuted,
            reason: Some(CertReason::WrongLength),
            found_length: found,
            witness_set: None,
            witness_walks: longest,
            witness_count: None,
        },
        Reason::BadDeletionSet { set } => Certificate {
            graph6,
            class: params.kind,
            k: params.k,
            verdict: Status::Refuted,
            reason: Some(CertReason::BadDeletionSet),
            found_length: n - params.k,
            witness_set: Some(set.to_vec()),
            witness_walks: longest,
            witness_count: None,
        },
    };
    Ok(cert)
}

fn walk_valid(g: &Graph, kind: ClassKind, seq: &[usize]) -> bool {
    match kind {
        ClassKind::Gamma => CycleWitness::new(g, seq.to_vec()).is_ok(),
        ClassKind::Pi => PathWitness::new(g, seq.to_vec()).is_ok(),
    }
}

/// Replays a certificate against its embedded graph.
///
/// Walks are checked structurally. The longest-walk length and any
/// refuting set are re-established by exact search, since no finite list of
/// walks proves an upper bound.
pub fn verify_certificate(cert: &Certificate) -> Result<bool> {
    let g = parse_graph6(cert.graph6.as_bytes()).map_err(|e| Error::Certificate(e.to_string()))?;
    let params = cert.params();
    if params.validate_for(g.order()).is_err() {
        return Ok(false);
    }
    let n = g.order();
    let target = n - cert.k;
    let walks = cert.witness_walks.as_deref();
    let exact = longest_walk(&g, cert.class).0;

    let ok = match (cert.verdict, cert.reason) {
        (Status::Member, None) => {
            cert.witness_set.is_none()
                && cert.found_length == target
                && exact == target
                && match walks {
                    Some(ws) => {
                        let sets: Vec<VertexSet> = deletion_sets(n, cert.k).collect();
                        ws.len() == sets.len()
                            && ws.iter().zip(&sets).all(|(w, &set)| {
                                w.len() == target
                                    && walk_valid(&g, cert.class, w)
                                    && w.iter().all(|&v| !set.contains(v))
                            })
                    }
                    None => deletion_sets(n, cert.k)
                        .all(|set| spanning_walk_after_deletion(&g, cert.class, set).is_some()),
                }
        }
        (Status::Refuted, Some(CertReason::WrongLength)) => {
            cert.witness_set.is_none()
                && cert.found_length != target
                && exact == cert.found_length
                && longest_matches(&g, cert.class, walks, cert.found_length)
        }
        (Status::Refuted, Some(CertReason::BadDeletionSet)) => {
            let set = cert.witness_set.as_deref().and_then(|s| set_from(&g, s));
            cert.found_length == target
                && exact == target
                && longest_matches(&g, cert.class, walks, target)
                && set.is_some_and(|set| {
                    set.len() == cert.k && spanning_walk_after_deletion(&g, cert.class, set).is_none()
                })
        }
        _ => false,
    };
    Ok(ok)
}

fn longest_matches(g: &Graph, kind: ClassKind, walks: Option<&[Vec<usize>]>, length: usize) -> bool {
    match walks {
        Some([w]) => w.len() == length && walk_valid(g, kind, w),
        None => length == 0 && kind == ClassKind::Gamma,
        Some(_) => false,
    }
}

fn set_from(g: &Graph, s: &[usize]) -> Option<VertexSet> {
    let set: VertexSet = s.iter().copied().filter(|&v| v < g.order()).collect();
    (set.len() == s.len()).then_some(set)
}
