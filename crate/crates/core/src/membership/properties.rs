use super::{min_degree_required, ClassParams};
use crate::graph::{connectivity_at_least, Graph};
use crate::walks::has_induced_path_from;

/// Smallest vertex that is not the endpoint of an induced path of order at
/// least `k + 1`, or `None` when every vertex is.
pub fn check_induced_path_property(g: &Graph, k: usize) -> Option<usize> {
    (0..g.order()).find(|&v| !has_induced_path_from(g, v, k + 1))
}

/// `κ(G) >= k + 2` for `Γ`, `κ(G) >= k + 1` for `Π`.
pub fn connectivity_requirement(g: &Graph, params: ClassParams) -> bool {
    g.order() >= 2 && connectivity_at_least(g, min_degree_required(params))
}
