//! Canonical labelling by partition refinement and individualisation, with
//! automorphism pruning. Sized for the small orders the generator uses but
//! correct for any order up to 64.

use crate::graph::{bit, Bits, Graph};

/// Result of canonical labelling.
#[derive(Clone, Debug)]
pub struct Canonical {
    /// `order[i]` is the original vertex placed at canonical position `i`.
    pub order: Vec<usize>,
    /// The relabelled graph; equal for isomorphic inputs.
    pub form: Graph,
    /// Smallest vertex in each vertex's automorphism orbit.
    pub orbits: Vec<usize>,
    /// Automorphisms found during the search, as `v -> image` maps. They
    /// generate the full automorphism group.
    pub generators: Vec<Vec<usize>>,
}

impl Canonical {
    pub fn position_of(&self, v: usize) -> usize {
        self.order.iter().position(|&u| u == v).expect("vertex in labelling")
    }

    pub fn same_orbit(&self, a: usize, b: usize) -> bool {
        self.orbits[a] == self.orbits[b]
    }
}

pub fn canonical_form(g: &Graph) -> Canonical {
    let n = g.order();
    let mut search = Search {
        g,
        first: None,
        best: None,
        autos: Vec::new(),
    };
    let mut cells = vec![(0..n).collect::<Vec<_>>()];
    refine(g, &mut cells);
    search.descend(cells, &mut Vec::new());
    let (order, cert) = search.best.expect("search reaches a leaf");
    let orbits = orbit_reps(n, search.autos.iter());
    let form = Graph::from_rows(cert).expect("relabelled rows are valid");
    Canonical {
        order,
        form,
        orbits,
        generators: search.autos,
    }
}

/// Whether two graphs are isomorphic (same canonical form).
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order()
        && a.edge_count() == b.edge_count()
        && canonical_form(a).form == canonical_form(b).form
}

/// Splits cells until every vertex in a cell has the same number of
/// neighbours in every cell. Subcells are ordered by that count, so the
/// procedure commutes with relabelling.
fn refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    'outer: loop {
        for si in 0..cells.len() {
            let splitter: u64 = cells[si].iter().fold(0, |m, &v| m | bit(v));
            let mut out: Vec<Vec<usize>> = Vec::with_capacity(cells.len() + 1);
            for cell in cells.iter() {
                if cell.len() == 1 {
                    out.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> =
                    cell.iter().map(|&v| ((g.neighbors(v) & splitter).count_ones(), v)).collect();
                keyed.sort_unstable();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        out.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                        start = i;
                    }
                }
            }
            if out.len() != cells.len() {
                *cells = out;
                continue 'outer;
            }
        }
        return;
    }
}

fn certificate(g: &Graph, order: &[usize]) -> Vec<u64> {
    let n = order.len();
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    order
        .iter()
        .map(|&v| Bits(g.neighbors(v)).fold(0u64, |row, u| row | bit(pos[u])))
        .collect()
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn orbit_reps<'a>(n: usize, autos: impl Iterator<Item = &'a Vec<usize>>) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    for a in autos {
        for v in 0..n {
            let (x, y) = (find(&mut parent, v), find(&mut parent, a[v]));
            if x != y {
                // keep the smaller label as root
                let (lo, hi) = if x < y { (x, y) } else { (y, x) };
                parent[hi] = lo;
            }
        }
    }
    (0..n).map(|v| find(&mut parent, v)).collect()
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<(Vec<usize>, Vec<u64>)>,
    best: Option<(Vec<usize>, Vec<u64>)>,
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn descend(&mut self, cells: Vec<Vec<usize>>, prefix: &mut Vec<usize>) {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(cells.into_iter().map(|c| c[0]).collect());
            return;
        };
        let candidates = cells[target].clone();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &candidates {
            if !explored.is_empty() {
                let fixing = self
                    .autos
                    .iter()
                    .filter(|a| prefix.iter().all(|&p| a[p] == p));
                let reps = orbit_reps(self.g.order(), fixing);
                if explored.iter().any(|&w| reps[w] == reps[v]) {
                    continue;
                }
            }
            explored.push(v);
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..target]);
            next.push(vec![v]);
            next.push(candidates.iter().copied().filter(|&u| u != v).collect());
            next.extend_from_slice(&cells[target + 1..]);
            refine(self.g, &mut next);
            prefix.push(v);
            self.descend(next, prefix);
            prefix.pop();
        }
    }

    fn leaf(&mut self, order: Vec<usize>) {
        let cert = certificate(self.g, &order);
        let Some((first_order, first_cert)) = &self.first else {
            self.first = Some((order.clone(), cert.clone()));
            self.best = Some((order, cert));
            return;
        };
        let n = order.len();
        let mut record = |from: &[usize]| {
            let mut a = vec![0usize; n];
            for i in 0..n {
                a[from[i]] = order[i];
            }
            if a.iter().enumerate().any(|(v, &w)| v != w) {
                self.autos.push(a);
            }
        };
        if cert == *first_cert {
            record(first_order);
        }
        let (best_order, best_cert) = self.best.as_ref().expect("set with first");
        if cert == *best_cert && best_cert != first_cert {
            let from = best_order.clone();
            record(&from);
        }
        if cert > self.best.as_ref().unwrap().1 {
            self.best = Some((order, cert));
        }
    }
}
