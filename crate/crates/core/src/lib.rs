//! Exact verification toolkit for longest-cycle and longest-path classes.
//!
//! A graph of order `n` belongs to the cycle class `Γ(n;k)` when its longest
//! cycle has `n-k` vertices and every induced subgraph on `n-k` vertices is
//! Hamiltonian; the path class `Π(n;k)` is the analogue with longest paths and
//! traceability. `Γ(n;1)` is exactly the family of hypohamiltonian graphs.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`]: bitrow graphs of order at most 64, graph6, connectivity.
//! * [`walks`]: exact Hamilton cycle/path search, circumference, detour order.
//! * [`membership`]: class deciders, structural properties, degree bounds.
//! * [`surgery`]: attachment configurations and the segment inequalities
//!   that drive the maximum-degree bounds, with constructive improvements.
//! * [`search`]: isomorph-free generation, staged scans, certificates.
//! * [`cli`]: the `hypocheck` command-line surface.

pub mod cli;
pub mod error;
pub mod graph;
pub mod membership;
pub mod search;
pub mod surgery;
pub mod walks;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use membership::{ClassKind, ClassParams, MembershipVerdict};
