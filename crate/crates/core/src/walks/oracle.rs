use crate::error::{Error, Result};
use crate::graph::{bit, Bits, Graph};

pub const ORACLE_MAX_ORDER: usize = 20;

/// Circumference by dynamic programming over `(vertex subset, endpoint)`.
///
/// `ends[S]` holds the vertices `v` such that some path from `min(S)` to `v`
/// visits exactly `S`; a state closes to a cycle when `|S| >= 3` and its
/// endpoint is adjacent to `min(S)`. Independent of the search-based solver.
pub fn circumference_dp_oracle(g: &Graph) -> Result<usize> {
    let n = g.order();
    if n > ORACLE_MAX_ORDER {
        return Err(Error::OracleSize { order: n, limit: ORACLE_MAX_ORDER });
    }
    let mut ends = vec![0u32; 1usize << n];
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    let mut best = 0usize;
    for set in 1usize..(1 << n) {
        let reach = ends[set];
        if reach == 0 {
            continue;
        }
        let anchor = set.trailing_zeros() as usize;
        let size = set.count_ones() as usize;
        for v in Bits(reach as u64) {
            let nbrs = g.neighbors(v);
            if size >= 3 && nbrs & bit(anchor) != 0 {
                best = best.max(size);
            }
            // extend only by vertices above the anchor so min(S) stays fixed
            let ext = nbrs & !(set as u64) & !crate::graph::low_bits(anchor + 1);
            for w in Bits(ext) {
                ends[set | (1 << w)] |= 1 << w;
            }
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn examples() {
        assert_eq!(circumference_dp_oracle(&cycle(6)).unwrap(), 6);
        assert_eq!(circumference_dp_oracle(&petersen()).unwrap(), 9);
        assert_eq!(circumference_dp_oracle(&star(7)).unwrap(), 0);
        assert_eq!(circumference_dp_oracle(&complete(5)).unwrap(), 5);
        assert!(matches!(
            circumference_dp_oracle(&cycle(21)),
            Err(Error::OracleSize { order: 21, .. })
        ));
    }
}
