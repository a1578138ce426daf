//! Canonical labelling, isomorph-free generation, staged scans and
//! verdict certificates.

pub mod canon;
mod generate;

pub use canon::{canonical_form, isomorphic, Canonical};
pub use generate::{children, generate_small, parents, GenConstraints, GENERATOR_MAX_ORDER};
mod certificate;
mod scan;

pub use certificate::{certify, verify_certificate, CertReason, Certificate};
pub use scan::{hypohamiltonian_census, scan, EmptinessReport, ScanSpec, Source};
