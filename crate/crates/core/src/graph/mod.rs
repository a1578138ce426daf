//! Simple undirected graphs of order at most 64, stored as one neighbour
//! bitrow per vertex.

mod connectivity;
pub mod families;
mod graph6;

pub use connectivity::{connectivity_at_least, local_connectivity, vertex_connectivity};
pub use graph6::{parse_graph6, write_graph6, GRAPH6_HEADER};

use crate::error::{Error, Result};
use serde::Serialize;
use std::fmt;

pub const MAX_ORDER: usize = 64;

/// Mask with the lowest `n` bits set.
#[inline]
pub const fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
pub const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Iterator over the set bits of a word, ascending.
#[derive(Clone, Copy, Debug)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

/// A set of vertex labels in `0..64`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const fn empty() -> Self {
        VertexSet(0)
    }

    /// `{0, .., n-1}`.
    pub const fn full(n: usize) -> Self {
        VertexSet(low_bits(n))
    }

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & bit(v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < 64, "vertex label {v} exceeds 63");
        self.0 |= bit(v);
    }

    pub fn remove(&mut self, v: usize) {
        if v < 64 {
            self.0 &= !bit(v);
        }
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> Bits {
        Bits(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::empty();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Simple undirected graph on vertices `0..order`.
///
/// Rows are symmetric, irreflexive and carry no bits at or above `order`.
/// Every constructor and mutator maintains these invariants.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph of order `n`.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::UnsupportedOrder(n));
        }
        Ok(Graph { adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::InvalidSequence(format!("self-loop at {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from raw rows, validating every invariant.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || n > MAX_ORDER {
            return Err(Error::UnsupportedOrder(n));
        }
        let mask = low_bits(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::InvalidSequence(format!("row {v} has bits beyond order")));
            }
            if row & bit(v) != 0 {
                return Err(Error::InvalidSequence(format!("self-loop at {v}")));
            }
            for u in Bits(row) {
                if rows[u] & bit(v) == 0 {
                    return Err(Error::InvalidSequence(format!("asymmetric pair ({v},{u})")));
                }
            }
        }
        Ok(Graph { adj: rows })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_bits(self.order())
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| Bits(self.adj[u] & !low_bits(u + 1)).map(move |v| (u, v)))
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loop at {u}");
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
    }

    /// Appends a new vertex adjacent to `nbrs` and returns its label.
    pub fn push_vertex(&mut self, nbrs: u64) -> Result<usize> {
        let v = self.order();
        if v >= MAX_ORDER {
            return Err(Error::UnsupportedOrder(v + 1));
        }
        if nbrs & !low_bits(v) != 0 {
            return Err(Error::InvalidSequence("neighbour beyond current order".into()));
        }
        for u in Bits(nbrs) {
            self.adj[u] |= bit(v);
        }
        self.adj.push(nbrs);
        Ok(v)
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.order() {
            Err(Error::VertexOutOfRange { vertex: v, order: self.order() })
        } else {
            Ok(())
        }
    }

    /// Vertices reachable from `start` while staying inside `within`.
    /// `start` itself is always included.
    #[inline]
    pub fn reach_within(&self, start: usize, within: u64) -> u64 {
        let mut seen = bit(start);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Whether the subgraph induced by `set` is connected (empty counts as connected).
    pub fn is_connected_within(&self, set: u64) -> bool {
        if set == 0 {
            return true;
        }
        let s = set.trailing_zeros() as usize;
        self.reach_within(s, set) == set
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertex_mask())
    }

    /// Image of this graph under `perm`, where vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let n = self.order();
        debug_assert_eq!(perm.len(), n);
        let mut adj = vec![0u64; n];
        for v in 0..n {
            let mut row = 0;
            for u in Bits(self.adj[v]) {
                row |= bit(perm[u]);
            }
            adj[perm[v]] = row;
        }
        Graph { adj }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}, {})", self.order(), write_graph6(self))
    }
}

/// Degree statistics of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub min_degree: usize,
    pub max_degree: usize,
    /// Non-decreasing.
    pub degree_sequence: Vec<usize>,
}

pub fn degree_profile(g: &Graph) -> DegreeProfile {
    let mut seq: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
    seq.sort_unstable();
    DegreeProfile {
        min_degree: seq[0],
        max_degree: *seq.last().unwrap(),
        degree_sequence: seq,
    }
}

/// Subgraph induced by `keep`, relabelled `0..|keep|` in ascending original order.
pub fn induced_subgraph(g: &Graph, keep: VertexSet) -> Result<Graph> {
    induced_subgraph_with_labels(g, keep).map(|(h, _)| h)
}

/// Like [`induced_subgraph`], also returning the original label of each new vertex.
pub fn induced_subgraph_with_labels(g: &Graph, keep: VertexSet) -> Result<(Graph, Vec<usize>)> {
    let keep_bits = keep.bits();
    if keep_bits == 0 {
        return Err(Error::EmptySet);
    }
    if keep_bits & !g.vertex_mask() != 0 {
        let v = (keep_bits & !g.vertex_mask()).trailing_zeros() as usize;
        return Err(Error::VertexOutOfRange { vertex: v, order: g.order() });
    }
    let labels: Vec<usize> = keep.to_vec();
    let mut index = [usize::MAX; 64];
    for (i, &v) in labels.iter().enumerate() {
        index[v] = i;
    }
    let adj = labels
        .iter()
        .map(|&v| Bits(g.neighbors(v) & keep_bits).fold(0u64, |row, u| row | bit(index[u])))
        .collect();
    Ok((Graph { adj }, labels))
}

/// Whether `seq` spells an induced path: consecutive vertices adjacent and
/// no other pair adjacent.
pub fn is_induced_path(g: &Graph, seq: &[usize]) -> Result<bool> {
    let mut seen = 0u64;
    for &v in seq {
        g.check_vertex(v)?;
        if seen & bit(v) != 0 {
            return Err(Error::InvalidSequence(format!("vertex {v} repeated")));
        }
        seen |= bit(v);
    }
    for (i, &v) in seq.iter().enumerate() {
        let mut expected = 0u64;
        if i > 0 {
            expected |= bit(seq[i - 1]);
        }
        if i + 1 < seq.len() {
            expected |= bit(seq[i + 1]);
        }
        if g.neighbors(v) & seen != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::families::*;
    use super::*;

    #[test]
    fn order_bounds() {
        assert_eq!(Graph::new(0), Err(Error::UnsupportedOrder(0)));
        assert_eq!(Graph::new(65), Err(Error::UnsupportedOrder(65)));
        assert!(Graph::new(64).is_ok());
    }

    #[test]
    fn from_rows_rejects_broken_invariants() {
        assert!(Graph::from_rows(vec![0b10, 0b00]).is_err());
        assert!(Graph::from_rows(vec![0b01]).is_err());
        assert!(Graph::from_rows(vec![0b100, 0b000]).is_err());
        assert!(Graph::from_rows(vec![0b10, 0b01]).is_ok());
    }

    #[test]
    fn degree_profiles() {
        let p = degree_profile(&petersen());
        assert_eq!((p.min_degree, p.max_degree), (3, 3));
        let p = degree_profile(&complete(5));
        assert_eq!((p.min_degree, p.max_degree), (4, 4));
        let p = degree_profile(&star(5));
        assert_eq!((p.min_degree, p.max_degree), (1, 4));
        assert_eq!(p.degree_sequence, vec![1, 1, 1, 1, 4]);
    }

    #[test]
    fn induced_subgraphs() {
        let c5 = cycle(5);
        let h = induced_subgraph(&c5, VertexSet::from_iter([0, 1, 2, 3])).unwrap();
        assert_eq!(h, path(4));

        let k3 = induced_subgraph(&complete(5), VertexSet::from_iter([0, 2, 4])).unwrap();
        assert_eq!(k3, complete(3));

        let p = petersen();
        for v in 0..10 {
            let mut keep = p.vertices();
            keep.remove(v);
            let h = induced_subgraph(&p, keep).unwrap();
            assert_eq!(degree_profile(&h).degree_sequence, vec![2, 2, 2, 3, 3, 3, 3, 3, 3]);
        }

        assert_eq!(induced_subgraph(&c5, VertexSet::empty()), Err(Error::EmptySet));
        assert_eq!(induced_subgraph(&c5, c5.vertices()).unwrap(), c5);
    }

    #[test]
    fn induced_path_checks() {
        assert!(is_induced_path(&path(4), &[0, 1, 2, 3]).unwrap());
        let c4 = cycle(4);
        assert!(is_induced_path(&c4, &[0, 1, 2]).unwrap());
        assert!(is_induced_path(&c4, &[3, 0, 1]).unwrap());
        assert!(!is_induced_path(&c4, &[0, 1, 2, 3]).unwrap());
        assert!(is_induced_path(&c4, &[1, 0, 1]).is_err());
        assert!(is_induced_path(&c4, &[0, 7]).is_err());
        // not a path at all
        assert!(!is_induced_path(&c4, &[0, 2]).unwrap());
    }

    #[test]
    fn petersen_two_paths_are_induced() {
        let p = petersen();
        for v in 0..10 {
            for u in Bits(p.neighbors(v)) {
                for w in Bits(p.neighbors(u) & !bit(v)) {
                    assert!(is_induced_path(&p, &[v, u, w]).unwrap());
                }
            }
        }
    }

    #[test]
    fn push_vertex_keeps_symmetry() {
        let mut g = path(3);
        let v = g.push_vertex(0b101).unwrap();
        assert_eq!(v, 3);
        assert_eq!(g, cycle(4));
        assert!(Graph::from_rows(g.rows().to_vec()).is_ok());
    }
}
