//! Attachment configurations: an induced path `P = u1 … uk`, a spanning
//! cycle or path (the spine) of `G - V(P)`, and the way `P' = P - u1`
//! attaches to the spine. The segment inequalities and exchange
//! constructions evaluated on them live in [`claims`].

mod claims;

pub use claims::{
    consecutive_neighbor_check, degree_chain_audit, edge_count_lower_bound, verify_gamma_claim, verify_pi_claims,
    ClaimRecord, ClaimReport,
};

use crate::error::{Error, Result};
use crate::graph::{bit, Graph, VertexSet};
use crate::membership::{connectivity_requirement, min_degree_required, spanning_walk_after_deletion, ClassKind, ClassParams};
use crate::walks::{induced_path_from, PathWitness, Walk};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AttachmentConfig {
    graph: Graph,
    params: ClassParams,
    path_p: PathWitness,
    spine: Walk,
    attach_points: Vec<usize>,
    attach_positions: Vec<usize>,
    eps: Vec<bool>,
    d_pprime: Vec<usize>,
    min_max_indices: Vec<(usize, usize)>,
    segments: Vec<Vec<usize>>,
    r: Vec<usize>,
}

impl AttachmentConfig {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn params(&self) -> ClassParams {
        self.params
    }

    pub fn k(&self) -> usize {
        self.params.k
    }

    pub fn kind(&self) -> ClassKind {
        self.params.kind
    }

    /// `u1 … uk`, with `u1` first.
    pub fn path_p(&self) -> &PathWitness {
        &self.path_p
    }

    pub fn u1(&self) -> usize {
        self.path_p.vertices()[0]
    }

    pub fn spine(&self) -> &Walk {
        &self.spine
    }

    pub fn spine_vertices(&self) -> &[usize] {
        self.spine.vertices()
    }

    /// Spine vertices with a neighbour in `P'`, in spine order. When `k = 1`
    /// (`P'` empty) these are the spine neighbours of `u1` instead.
    pub fn attach_points(&self) -> &[usize] {
        &self.attach_points
    }

    pub(crate) fn attach_positions(&self) -> &[usize] {
        &self.attach_positions
    }

    pub fn s(&self) -> usize {
        self.attach_points.len()
    }

    pub fn eps(&self) -> &[bool] {
        &self.eps
    }

    pub fn d_pprime(&self) -> &[usize] {
        &self.d_pprime
    }

    /// 1-based smallest and largest indices along `P` adjacent to each
    /// attach point.
    pub fn min_max_indices(&self) -> &[(usize, usize)] {
        &self.min_max_indices
    }

    /// `Q_1 … Q_s` for cycles (gap after each attach point, cyclically);
    /// `W_0 … W_s` for paths.
    pub fn segments(&self) -> &[Vec<usize>] {
        &self.segments
    }

    /// Number of `u1`-neighbours in each segment.
    pub fn r(&self) -> &[usize] {
        &self.r
    }

    pub(crate) fn pprime_mask(&self) -> u64 {
        self.path_p.vertex_mask() & !bit(self.u1())
    }
}

/// Builds the configuration used by the segment inequalities.
///
/// `u1` defaults to the smallest maximum-degree vertex. `P` is the
/// lexicographically smallest induced path of order `k` from `u1`; the spine
/// is the spanning cycle (path) of `G - V(P)` found by the exact solver, in
/// canonical orientation.
pub fn build_config(g: &Graph, k: usize, kind: ClassKind, u1: Option<usize>) -> Result<AttachmentConfig> {
    let params = ClassParams { k, kind };
    let n = g.order();
    params.validate_for(n)?;
    if !connectivity_requirement(g, params) {
        return Err(Error::Connectivity(min_degree_required(params)));
    }
    let u1 = match u1 {
        Some(v) => {
            g.check_vertex(v)?;
            v
        }
        None => {
            let max = g.max_degree();
            (0..n).find(|&v| g.degree(v) == max).expect("nonempty graph")
        }
    };
    let path_p = induced_path_from(g, u1, k).ok_or(Error::Structure { vertex: u1, order: k })?;
    let removed = VertexSet::from_bits(path_p.vertex_mask());
    let spine = match spanning_walk_after_deletion(g, kind, removed) {
        Some(Walk::Cycle(c)) => Walk::Cycle(c.canonical_orientation()),
        Some(Walk::Path(p)) => Walk::Path(p.canonical_orientation()),
        None => {
            return Err(Error::Spine(match kind {
                ClassKind::Gamma => "cycle",
                ClassKind::Pi => "path",
            }))
        }
    };

    let p = path_p.vertices();
    let pprime = path_p.vertex_mask() & !bit(u1);
    let seq = spine.vertices();
    let attach_mask = if k >= 2 { pprime } else { bit(u1) };
    let attach_positions: Vec<usize> = (0..seq.len())
        .filter(|&i| g.neighbors(seq[i]) & attach_mask != 0)
        .collect();
    let attach_points: Vec<usize> = attach_positions.iter().map(|&i| seq[i]).collect();
    let eps = attach_points.iter().map(|&v| g.has_edge(v, u1)).collect();
    let d_pprime = attach_points
        .iter()
        .map(|&v| (g.neighbors(v) & pprime).count_ones() as usize)
        .collect();
    let min_max_indices = attach_points
        .iter()
        .map(|&v| {
            let idx: Vec<usize> = (1..=k).filter(|&j| g.has_edge(v, p[j - 1])).collect();
            (idx[0], idx[idx.len() - 1])
        })
        .collect();

    let s = attach_positions.len();
    let segments: Vec<Vec<usize>> = match kind {
        ClassKind::Gamma => (0..s)
            .map(|i| {
                let (a, b) = (attach_positions[i], attach_positions[(i + 1) % s]);
                let len = (b + seq.len() - a - 1) % seq.len();
                let len = if s == 1 { seq.len() - 1 } else { len };
                (1..=len).map(|t| seq[(a + t) % seq.len()]).collect()
            })
            .collect(),
        ClassKind::Pi => {
            let mut cuts = vec![0];
            for &a in &attach_positions {
                cuts.push(a);
                cuts.push(a + 1);
            }
            cuts.push(seq.len());
            cuts.chunks(2).map(|c| seq[c[0]..c[1]].to_vec()).collect()
        }
    };
    let r = segments
        .iter()
        .map(|seg| seg.iter().filter(|&&v| g.has_edge(v, u1)).count())
        .collect();

    Ok(AttachmentConfig {
        graph: g.clone(),
        params,
        path_p,
        spine,
        attach_points,
        attach_positions,
        eps,
        d_pprime,
        min_max_indices,
        segments,
        r,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn petersen_degenerate() {
        let cfg = build_config(&petersen(), 1, ClassKind::Gamma, None).unwrap();
        assert_eq!(cfg.u1(), 0);
        assert_eq!(cfg.path_p().vertices(), &[0]);
        assert_eq!(cfg.spine_vertices().len(), 9);
        assert_eq!(cfg.s(), 3);
        assert!(cfg.eps().iter().all(|&e| e));
        assert!(cfg.r().iter().all(|&r| r == 0));
    }

    #[test]
    fn complete_graph_k2() {
        let cfg = build_config(&complete(5), 2, ClassKind::Gamma, None).unwrap();
        assert_eq!(cfg.path_p().vertices(), &[0, 1]);
        assert_eq!(cfg.spine_vertices(), &[2, 3, 4]);
        assert_eq!(cfg.s(), 3);
        assert_eq!(cfg.eps(), &[true, true, true]);
        assert_eq!(cfg.d_pprime(), &[1, 1, 1]);
        assert_eq!(cfg.min_max_indices(), &[(1, 2), (1, 2), (1, 2)]);
        assert!(cfg.segments().iter().all(|q| q.is_empty()));
    }

    /// C8 on 2..=9 with 0 and 1 attached: `u1 = 0` sees 2, 4, 6, 8 and
    /// `u2 = 1` sees 3, 5, 7, 9.
    fn c8_fixture() -> Graph {
        let mut g = Graph::new(10).unwrap();
        g.add_edge(0, 1);
        for i in 0..8 {
            g.add_edge(2 + i, 2 + (i + 1) % 8);
            g.add_edge(i % 2, 2 + i);
        }
        g
    }

    #[test]
    fn c8_chord_fixture_by_hand() {
        let g = c8_fixture();
        let cfg = build_config(&g, 2, ClassKind::Pi, Some(0)).unwrap();
        assert_eq!(cfg.path_p().vertices(), &[0, 1]);
        // spanning path of the C8, oriented lexicographically smallest
        assert_eq!(cfg.spine_vertices(), &[2, 3, 4, 5, 6, 7, 8, 9]);
        assert_eq!(cfg.attach_points(), &[3, 5, 7, 9]);
        assert_eq!(cfg.eps(), &[false; 4]);
        assert_eq!(cfg.d_pprime(), &[1; 4]);
        assert_eq!(cfg.min_max_indices(), &[(2, 2); 4]);
        assert_eq!(cfg.segments(), &[vec![2], vec![4], vec![6], vec![8], vec![]]);
        assert_eq!(cfg.r(), &[1, 1, 1, 1, 0]);
    }

    #[test]
    fn preconditions() {
        assert!(matches!(
            build_config(&cycle(6), 1, ClassKind::Gamma, None),
            Err(Error::Connectivity(3))
        ));
        assert!(matches!(
            build_config(&complete(5), 3, ClassKind::Gamma, None),
            Err(Error::Parameter(_)) | Err(Error::Connectivity(_))
        ));
        assert!(matches!(
            build_config(&complete(6), 3, ClassKind::Pi, None),
            Err(Error::Structure { vertex: 0, order: 3 })
        ));
        assert!(matches!(
            build_config(&complete(5), 1, ClassKind::Gamma, Some(7)),
            Err(Error::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn invariants_on_fixture_configs() {
        for (g, k, kind) in [
            (complete(6), 2, ClassKind::Gamma),
            (complete(6), 2, ClassKind::Pi),
            (petersen(), 1, ClassKind::Pi),
            (c8_fixture(), 2, ClassKind::Pi),
        ] {
            let cfg = build_config(&g, k, kind, None).unwrap();
            let seg_total: usize = cfg.segments().iter().map(Vec::len).sum();
            assert_eq!(seg_total + cfg.s(), cfg.spine_vertices().len());
            assert_eq!(cfg.spine_vertices().len(), g.order() - k);
            assert!(crate::graph::is_induced_path(&g, cfg.path_p().vertices()).unwrap());
        }
    }
}
