//! Segment inequalities on attachment configurations and the exchange
//! constructions that produce a longer cycle (path) whenever one fails.

use super::AttachmentConfig;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::membership::{ratio_string, ClassKind};
use crate::walks::{CycleWitness, PathWitness, Walk};
use num_rational::Ratio;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimRecord {
    /// Segment index: `1..=s` for `Q_i`; `0..=s` for `W_i`.
    pub index: usize,
    pub segment_size: usize,
    #[serde(serialize_with = "ratio_string")]
    pub required_bound: Ratio<i64>,
    pub satisfied: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimReport {
    pub kind: ClassKind,
    pub k: usize,
    pub n: usize,
    pub path_p: Vec<usize>,
    pub spine: Vec<usize>,
    pub attach_points: Vec<usize>,
    /// Empty when `k < 2`.
    pub per_index: Vec<ClaimRecord>,
    /// `|E(P', spine)|`, equal to the sum of `d_pprime`.
    pub edge_count_pprime_spine: usize,
    pub edge_count_lower_bound: usize,
    /// `s + Σ|segments| = |spine|`.
    pub partition_holds: bool,
    /// `Σ d_pprime = |E(P', spine)|`.
    pub edge_identity_holds: bool,
    /// `d(u1) = [k >= 2] + Σε + Σr`; `None` when `u1` has a neighbour
    /// outside `P` and the spine.
    pub degree_identity: Option<bool>,
    pub u1_has_max_degree: bool,
    /// `n - k - 2Δ + 2 >= k² - k + 1` (cycles) or
    /// `n - 2k - 2Δ + 2 >= k + (k-2)(k-1)` (paths).
    pub degree_chain_holds: bool,
    /// Longest walk built by the exchanges at violated indices.
    pub improvement: Option<Walk>,
}

impl ClaimReport {
    pub fn violations(&self) -> usize {
        self.per_index.iter().filter(|r| !r.satisfied).count()
    }

    pub fn all_satisfied(&self) -> bool {
        self.violations() == 0
    }
}

/// `k² - k + 1` for cycles, `k + (k-2)(k-1)` for paths (`k >= 2`).
pub fn edge_count_lower_bound(kind: ClassKind, k: usize) -> usize {
    match kind {
        ClassKind::Gamma => k * k - k + 1,
        ClassKind::Pi => k + (k.saturating_sub(2)) * (k.saturating_sub(1)),
    }
}

pub fn verify_gamma_claim(cfg: &AttachmentConfig) -> Result<ClaimReport> {
    if cfg.kind() != ClassKind::Gamma {
        return Err(Error::Parameter("configuration is not built on a cycle".into()));
    }
    Ok(evaluate(cfg))
}

pub fn verify_pi_claims(cfg: &AttachmentConfig) -> Result<ClaimReport> {
    if cfg.kind() != ClassKind::Pi {
        return Err(Error::Parameter("configuration is not built on a path".into()));
    }
    Ok(evaluate(cfg))
}

/// Full report including the summation chain; defined for `k >= 2` only.
pub fn degree_chain_audit(cfg: &AttachmentConfig) -> Result<ClaimReport> {
    if cfg.k() < 2 {
        return Err(Error::Parameter("degree chain needs k >= 2".into()));
    }
    Ok(evaluate(cfg))
}

/// For a cycle spine: two consecutive spine vertices both adjacent to `u1`
/// give a cycle one longer by inserting `u1` between them. `None` for path
/// spines.
pub fn consecutive_neighbor_check(cfg: &AttachmentConfig) -> Option<CycleWitness> {
    let Walk::Cycle(c) = cfg.spine() else {
        return None;
    };
    let (g, u1, seq) = (cfg.graph(), cfg.u1(), c.vertices());
    let len = seq.len();
    (0..len)
        .find(|&i| g.has_edge(seq[i], u1) && g.has_edge(seq[(i + 1) % len], u1))
        .map(|i| {
            let mut cyc: Vec<usize> = (1..=len).map(|t| seq[(i + t) % len]).collect();
            cyc.push(u1);
            CycleWitness::new(g, cyc).expect("insertion keeps adjacency")
        })
}

/// Path analogue, including an endpoint adjacent to `u1`.
fn path_insertion(g: &Graph, u1: usize, seq: &[usize]) -> Option<Vec<usize>> {
    let len = seq.len();
    if g.has_edge(seq[0], u1) {
        return Some(std::iter::once(u1).chain(seq.iter().copied()).collect());
    }
    if g.has_edge(seq[len - 1], u1) {
        return Some(seq.iter().copied().chain(std::iter::once(u1)).collect());
    }
    (0..len - 1)
        .find(|&i| g.has_edge(seq[i], u1) && g.has_edge(seq[i + 1], u1))
        .map(|i| {
            let mut out = seq[..=i].to_vec();
            out.push(u1);
            out.extend_from_slice(&seq[i + 1..]);
            out
        })
}

/// `u_a … u_b` along `P` (1-based, either direction).
fn p_range(p: &[usize], a: usize, b: usize) -> Vec<usize> {
    if a <= b {
        p[a - 1..b].to_vec()
    } else {
        p[b - 1..a].iter().rev().copied().collect()
    }
}

/// Spine vertices from position `from` forward to `to`, inclusive, around
/// the cycle.
fn cyc(seq: &[usize], from: usize, to: usize) -> Vec<usize> {
    let len = seq.len();
    let steps = (to + len - from) % len;
    (0..=steps).map(|t| seq[(from + t) % len]).collect()
}

fn cat(parts: &[&[usize]]) -> Vec<usize> {
    parts.concat()
}

fn bound(a: usize, b: usize, r: usize) -> Ratio<i64> {
    Ratio::new(a as i64 + b as i64, 2) + Ratio::from_integer(2 * r as i64)
}

struct Search<'a> {
    g: &'a Graph,
    kind: ClassKind,
    target: usize,
    best: Option<Vec<usize>>,
}

impl Search<'_> {
    fn offer(&mut self, seq: Vec<usize>) {
        let valid = match self.kind {
            ClassKind::Gamma => CycleWitness::new(self.g, seq.clone()).is_ok(),
            ClassKind::Pi => PathWitness::new(self.g, seq.clone()).is_ok(),
        };
        debug_assert!(valid, "exchange produced an invalid walk {seq:?}");
        if valid && seq.len() > self.target && self.best.as_ref().is_none_or(|b| seq.len() > b.len()) {
            self.best = Some(seq);
        }
    }

    fn into_walk(self) -> Option<Walk> {
        let kind = self.kind;
        self.best.map(|v| match kind {
            ClassKind::Gamma => Walk::Cycle(CycleWitness::from_vec_unchecked(v)),
            ClassKind::Pi => Walk::Path(PathWitness::from_vec_unchecked(v)),
        })
    }
}

/// First and last spine positions within `range` holding a `u1`-neighbour.
fn extreme_u1_neighbours(g: &Graph, u1: usize, seq: &[usize], positions: impl Iterator<Item = usize>) -> Option<(usize, usize)> {
    let hits: Vec<usize> = positions.filter(|&i| g.has_edge(seq[i], u1)).collect();
    Some((*hits.first()?, *hits.last()?))
}

fn evaluate(cfg: &AttachmentConfig) -> ClaimReport {
    let g = cfg.graph();
    let (k, kind, n) = (cfg.k(), cfg.kind(), g.order());
    let u1 = cfg.u1();
    let target = n - k;
    let mut search = Search {
        g,
        kind,
        target,
        best: None,
    };
    let mut per_index = Vec::new();
    if k >= 2 {
        match kind {
            ClassKind::Gamma => gamma_claims(cfg, &mut per_index, &mut search),
            ClassKind::Pi => pi_claims(cfg, &mut per_index, &mut search),
        }
    }

    let spine = cfg.spine_vertices();
    let pprime = cfg.pprime_mask();
    let edge_count: usize = spine.iter().map(|&v| (g.neighbors(v) & pprime).count_ones() as usize).sum();
    let d_sum: usize = cfg.d_pprime().iter().sum();
    let seg_total: usize = cfg.segments().iter().map(Vec::len).sum();
    let known = cfg.path_p().vertex_mask() | spine.iter().fold(0u64, |m, &v| m | crate::graph::bit(v));
    let degree_identity = (g.neighbors(u1) & !known == 0).then(|| {
        let eps: usize = cfg.eps().iter().filter(|&&e| e).count();
        let r: usize = cfg.r().iter().sum();
        g.degree(u1) == usize::from(k >= 2) + eps + r
    });
    let delta = g.max_degree() as i64;
    let (ni, ki) = (n as i64, k as i64);
    let lower = edge_count_lower_bound(kind, k);
    let lhs = match kind {
        ClassKind::Gamma => ni - ki - 2 * delta + 2,
        ClassKind::Pi => ni - 2 * ki - 2 * delta + 2,
    };

    ClaimReport {
        kind,
        k,
        n,
        path_p: cfg.path_p().vertices().to_vec(),
        spine: spine.to_vec(),
        attach_points: cfg.attach_points().to_vec(),
        per_index,
        edge_count_pprime_spine: edge_count,
        edge_count_lower_bound: lower,
        partition_holds: cfg.s() + seg_total == spine.len(),
        edge_identity_holds: d_sum == edge_count,
        degree_identity,
        u1_has_max_degree: g.degree(u1) == g.max_degree(),
        degree_chain_holds: lhs >= lower as i64,
        improvement: search.into_walk(),
    }
}

fn gamma_claims(cfg: &AttachmentConfig, out: &mut Vec<ClaimRecord>, search: &mut Search<'_>) {
    let g = cfg.graph();
    let (u1, p, seq) = (cfg.u1(), cfg.path_p().vertices(), cfg.spine_vertices());
    let pos = cfg.attach_positions();
    let s = pos.len();
    let len = seq.len();
    let mut violated = false;
    for i in 0..s {
        let j = (i + 1) % s;
        let q = &cfg.segments()[i];
        let r = cfg.r()[i];
        let req = bound(
            cfg.d_pprime()[i] + cfg.d_pprime()[j],
            usize::from(cfg.eps()[i]) + usize::from(cfg.eps()[j]),
            r,
        );
        let satisfied = Ratio::from_integer(q.len() as i64) >= req;
        out.push(ClaimRecord {
            index: i + 1,
            segment_size: q.len(),
            required_bound: req,
            satisfied,
        });
        if satisfied {
            continue;
        }
        violated = true;
        let ((mi, big_mi), (mj, big_mj)) = (cfg.min_max_indices()[i], cfg.min_max_indices()[j]);
        let rest = cyc(seq, pos[j], pos[i]);
        search.offer(cat(&[&p_range(p, mi, big_mj), &rest]));
        search.offer(cat(&[&p_range(p, big_mi, mj), &rest]));
        if r >= 1 {
            let inner = (1..=q.len()).map(|t| (pos[i] + t) % len);
            let (w, w2) = extreme_u1_neighbours(g, u1, seq, inner).expect("r >= 1");
            search.offer(cat(&[&p_range(p, big_mi, 1), &cyc(seq, w, pos[i])]));
            search.offer(cat(&[&cyc(seq, pos[j], w2), &p_range(p, 1, big_mj)]));
        }
    }
    if violated {
        if let Some(c) = consecutive_neighbor_check(cfg) {
            search.offer(c.into_vec());
        }
    }
}

fn pi_claims(cfg: &AttachmentConfig, out: &mut Vec<ClaimRecord>, search: &mut Search<'_>) {
    let g = cfg.graph();
    let k = cfg.k();
    let (u1, p, seq) = (cfg.u1(), cfg.path_p().vertices(), cfg.spine_vertices());
    let pos = cfg.attach_positions();
    let s = pos.len();
    let len = seq.len();
    let mut violated = false;

    let end_bound = |i: usize, r: usize| bound(cfg.d_pprime()[i] + k, usize::from(cfg.eps()[i]), r);

    // W_0, then the interior segments, then W_s
    let req = end_bound(0, cfg.r()[0]);
    let w0 = cfg.segments()[0].len();
    let ok = Ratio::from_integer(w0 as i64) >= req;
    out.push(ClaimRecord {
        index: 0,
        segment_size: w0,
        required_bound: req,
        satisfied: ok,
    });
    if !ok {
        violated = true;
        end_segment(g, u1, p, seq, pos[0], cfg.min_max_indices()[0], search);
    }

    for i in 0..s.saturating_sub(1) {
        let j = i + 1;
        let w = &cfg.segments()[j];
        let r = cfg.r()[j];
        let req = bound(
            cfg.d_pprime()[i] + cfg.d_pprime()[j],
            usize::from(cfg.eps()[i]) + usize::from(cfg.eps()[j]),
            r,
        );
        let satisfied = Ratio::from_integer(w.len() as i64) >= req;
        out.push(ClaimRecord {
            index: j,
            segment_size: w.len(),
            required_bound: req,
            satisfied,
        });
        if satisfied {
            continue;
        }
        violated = true;
        let ((mi, big_mi), (mj, big_mj)) = (cfg.min_max_indices()[i], cfg.min_max_indices()[j]);
        let (pre, post) = (&seq[..=pos[i]], &seq[pos[j]..]);
        search.offer(cat(&[pre, &p_range(p, mi, big_mj), post]));
        search.offer(cat(&[pre, &p_range(p, big_mi, mj), post]));
        if r >= 1 {
            let (w, w2) = extreme_u1_neighbours(g, u1, seq, pos[i] + 1..pos[j]).expect("r >= 1");
            search.offer(cat(&[pre, &p_range(p, big_mi, 1), &seq[w..]]));
            search.offer(cat(&[&seq[..=w2], &p_range(p, 1, big_mj), post]));
        }
    }

    let req = end_bound(s - 1, cfg.r()[s]);
    let ws = cfg.segments()[s].len();
    let ok = Ratio::from_integer(ws as i64) >= req;
    out.push(ClaimRecord {
        index: s,
        segment_size: ws,
        required_bound: req,
        satisfied: ok,
    });
    if !ok {
        violated = true;
        let rev: Vec<usize> = seq.iter().rev().copied().collect();
        end_segment(g, u1, p, &rev, len - 1 - pos[s - 1], cfg.min_max_indices()[s - 1], search);
    }

    if violated {
        if let Some(path) = path_insertion(g, u1, seq) {
            search.offer(path);
        }
    }
}

/// Exchanges for the end segment before the first attach point at `y1`.
fn end_segment(
    g: &Graph,
    u1: usize,
    p: &[usize],
    seq: &[usize],
    y1: usize,
    (m, big_m): (usize, usize),
    search: &mut Search<'_>,
) {
    let k = p.len();
    let post = &seq[y1..];
    search.offer(cat(&[&p_range(p, k, m), post]));
    search.offer(cat(&[&p_range(p, 1, big_m), post]));
    if let Some((w, w2)) = extreme_u1_neighbours(g, u1, seq, 0..y1) {
        search.offer(cat(&[&p_range(p, k, 1), &seq[w..]]));
        search.offer(cat(&[&seq[..=w2], &p_range(p, 1, big_m), post]));
    }
}
