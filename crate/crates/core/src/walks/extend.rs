use super::CycleWitness;
use crate::error::{Error, Result};
use crate::graph::{bit, Bits, Graph};

/// Tries to lengthen `c` by replacing one of its edges `ab` with a path
/// `a x_1 .. x_m b` through vertices off the cycle (`m = 1` is the plain
/// insertion of a vertex adjacent to two consecutive cycle vertices).
///
/// Edges are tried in cycle order; for each, the detour found is a shortest
/// one. Returns `None` when no edge admits a detour.
pub fn extend_cycle(g: &Graph, c: &CycleWitness) -> Result<Option<CycleWitness>> {
    if !c.is_valid_in(g) {
        return Err(Error::InvalidWitness(format!("{:?} is not a cycle", c.vertices())));
    }
    let outside = g.vertex_mask() & !c.vertex_mask();
    if outside == 0 {
        return Ok(None);
    }
    let cyc = c.vertices();
    let len = cyc.len();
    let n = g.order();
    let mut parent = vec![usize::MAX; n];
    for i in 0..len {
        let (a, b) = (cyc[i], cyc[(i + 1) % len]);
        let sources = g.neighbors(a) & outside;
        if sources == 0 {
            continue;
        }
        parent.iter_mut().for_each(|p| *p = usize::MAX);
        let mut queue = std::collections::VecDeque::new();
        for s in Bits(sources) {
            parent[s] = s;
            queue.push_back(s);
        }
        let mut seen = sources;
        while let Some(x) = queue.pop_front() {
            if g.has_edge(x, b) {
                let mut detour = vec![x];
                let mut z = x;
                while parent[z] != z {
                    z = parent[z];
                    detour.push(z);
                }
                detour.reverse();
                let mut out = Vec::with_capacity(len + detour.len());
                out.extend_from_slice(&cyc[..=i]);
                out.extend_from_slice(&detour);
                out.extend_from_slice(&cyc[i + 1..]);
                debug_assert!(CycleWitness::from_vec_unchecked(out.clone()).is_valid_in(g));
                return Ok(Some(CycleWitness::from_vec_unchecked(out)));
            }
            for y in Bits(g.neighbors(x) & outside & !seen) {
                seen |= bit(y);
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    Ok(None)
}
