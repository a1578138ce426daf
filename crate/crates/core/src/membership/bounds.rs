use super::{connectivity_requirement, ClassKind, ClassParams};
use crate::error::{Error, Result};
use crate::graph::Graph;
use num_rational::Ratio;
use serde::{Deserialize, Serialize, Serializer};
use std::fmt;

/// Maximum-degree ceiling for class members: `(n - k² + 1)/2` for `Γ`,
/// `(n - k²)/2` for `Π`. Exact.
pub fn max_degree_bound(n: usize, params: ClassParams) -> Ratio<i64> {
    let (n, k) = (n as i64, params.k as i64);
    let numer = match params.kind {
        ClassKind::Gamma => n - k * k + 1,
        ClassKind::Pi => n - k * k,
    };
    Ratio::new(numer, 2)
}

/// Order below which the class is empty for `k >= 2`: `k² + 2k + 3` for
/// `Γ`, `k² + 2k + 2` for `Π`.
pub fn emptiness_threshold(params: ClassParams) -> usize {
    let k = params.k;
    match params.kind {
        ClassKind::Gamma => k * k + 2 * k + 3,
        ClassKind::Pi => k * k + 2 * k + 2,
    }
}

/// Minimum degree (and connectivity) every member must have: `k + 2` for
/// `Γ`, `k + 1` for `Π`.
pub fn min_degree_required(params: ClassParams) -> usize {
    match params.kind {
        ClassKind::Gamma => params.k + 2,
        ClassKind::Pi => params.k + 1,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PruneRule {
    /// `n` below the emptiness threshold (`k >= 2` only).
    OrderThreshold,
    /// Degree ceiling below the degree floor for this `(n, k)`.
    DegreeWindow,
    MinDegree,
    MaxDegree,
    /// `Δ <= (n - 4)/2` for hypohamiltonian graphs (`Γ`, `k = 1`).
    HoltonSheehan,
    Connectivity,
}

impl PruneRule {
    /// Pipeline order: parameter-only rules, then cheap degree checks, then
    /// connectivity.
    pub const ALL: [PruneRule; 6] = [
        PruneRule::OrderThreshold,
        PruneRule::DegreeWindow,
        PruneRule::MinDegree,
        PruneRule::MaxDegree,
        PruneRule::HoltonSheehan,
        PruneRule::Connectivity,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PruneRule::OrderThreshold => "order_threshold",
            PruneRule::DegreeWindow => "degree_window",
            PruneRule::MinDegree => "min_degree",
            PruneRule::MaxDegree => "max_degree",
            PruneRule::HoltonSheehan => "holton_sheehan",
            PruneRule::Connectivity => "connectivity",
        }
    }

    pub fn is_parameter_rule(self) -> bool {
        matches!(self, PruneRule::OrderThreshold | PruneRule::DegreeWindow)
    }
}

impl fmt::Display for PruneRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for PruneRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().replace('-', "_");
        PruneRule::ALL
            .into_iter()
            .find(|r| r.as_str() == norm)
            .ok_or_else(|| Error::Parameter(format!("unknown prune rule {s:?}")))
    }
}

/// Which prune rules are active.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PruneRules {
    pub order_threshold: bool,
    pub degree_window: bool,
    pub min_degree: bool,
    pub max_degree: bool,
    pub holton_sheehan: bool,
    pub connectivity: bool,
    /// Apply the degree-floor and connectivity rules (and the degree window)
    /// at `k = 1` as well.
    pub structural_for_k1: bool,
}

impl Default for PruneRules {
    fn default() -> Self {
        PruneRules {
            order_threshold: true,
            degree_window: true,
            min_degree: true,
            max_degree: true,
            holton_sheehan: false,
            connectivity: true,
            structural_for_k1: false,
        }
    }
}

impl PruneRules {
    pub fn all() -> Self {
        PruneRules {
            holton_sheehan: true,
            structural_for_k1: true,
            ..PruneRules::default()
        }
    }

    pub fn none() -> Self {
        PruneRules {
            order_threshold: false,
            degree_window: false,
            min_degree: false,
            max_degree: false,
            holton_sheehan: false,
            connectivity: false,
            structural_for_k1: false,
        }
    }

    pub fn enabled(&self, rule: PruneRule) -> bool {
        match rule {
            PruneRule::OrderThreshold => self.order_threshold,
            PruneRule::DegreeWindow => self.degree_window,
            PruneRule::MinDegree => self.min_degree,
            PruneRule::MaxDegree => self.max_degree,
            PruneRule::HoltonSheehan => self.holton_sheehan,
            PruneRule::Connectivity => self.connectivity,
        }
    }

    pub fn set(&mut self, rule: PruneRule, on: bool) {
        match rule {
            PruneRule::OrderThreshold => self.order_threshold = on,
            PruneRule::DegreeWindow => self.degree_window = on,
            PruneRule::MinDegree => self.min_degree = on,
            PruneRule::MaxDegree => self.max_degree = on,
            PruneRule::HoltonSheehan => self.holton_sheehan = on,
            PruneRule::Connectivity => self.connectivity = on,
        }
    }

    /// Whether `rule` actually applies to these parameters.
    pub fn applies(&self, rule: PruneRule, params: ClassParams) -> bool {
        if !self.enabled(rule) {
            return false;
        }
        let structural = params.k >= 2 || self.structural_for_k1;
        match rule {
            PruneRule::OrderThreshold => params.k >= 2,
            PruneRule::DegreeWindow | PruneRule::MinDegree | PruneRule::Connectivity => structural,
            PruneRule::MaxDegree => true,
            PruneRule::HoltonSheehan => params.kind == ClassKind::Gamma && params.k == 1,
        }
    }

    pub fn active_rules(&self, params: ClassParams) -> Vec<PruneRule> {
        PruneRule::ALL.into_iter().filter(|&r| self.applies(r, params)).collect()
    }
}

pub(crate) fn ratio_string<S: Serializer>(r: &Ratio<i64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

/// Necessary conditions for membership and which of them fail.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub params: ClassParams,
    pub min_degree_required: usize,
    #[serde(serialize_with = "ratio_string")]
    pub max_degree_allowed: Ratio<i64>,
    pub connectivity_required: usize,
    pub order_threshold: usize,
    /// Rules violated, in pipeline order.
    pub violated: Vec<PruneRule>,
}

impl BoundReport {
    /// A parameter-only rule fired, so no graph of this order is a member.
    pub fn implies_emptiness(&self) -> bool {
        self.violated.iter().any(|r| r.is_parameter_rule())
    }

    pub fn is_clean(&self) -> bool {
        self.violated.is_empty()
    }
}

fn check_parameter_rule(rule: PruneRule, n: usize, params: ClassParams) -> bool {
    match rule {
        PruneRule::OrderThreshold => n < emptiness_threshold(params),
        PruneRule::DegreeWindow => {
            max_degree_bound(n, params) < Ratio::from_integer(min_degree_required(params) as i64)
        }
        _ => false,
    }
}

/// Whether `g` violates `rule` (assumed applicable).
fn check_graph_rule(rule: PruneRule, g: &Graph, params: ClassParams) -> bool {
    let n = g.order();
    match rule {
        PruneRule::OrderThreshold | PruneRule::DegreeWindow => check_parameter_rule(rule, n, params),
        PruneRule::MinDegree => g.min_degree() < min_degree_required(params),
        PruneRule::MaxDegree => {
            Ratio::from_integer(g.max_degree() as i64) > max_degree_bound(n, params)
        }
        PruneRule::HoltonSheehan => 2 * g.max_degree() as i64 > n as i64 - 4,
        PruneRule::Connectivity => !connectivity_requirement(g, params),
    }
}

fn skeleton(n: usize, params: ClassParams) -> BoundReport {
    BoundReport {
        n,
        params,
        min_degree_required: min_degree_required(params),
        max_degree_allowed: max_degree_bound(n, params),
        connectivity_required: min_degree_required(params),
        order_threshold: emptiness_threshold(params),
        violated: Vec::new(),
    }
}

/// Evaluates only the rules that depend on `(n, k, kind)`; a violation
/// proves the class empty at this order without looking at any graph.
pub fn parameter_bounds(n: usize, params: ClassParams, rules: &PruneRules) -> BoundReport {
    let mut report = skeleton(n, params);
    report.violated = PruneRule::ALL
        .into_iter()
        .filter(|r| r.is_parameter_rule() && rules.applies(*r, params))
        .filter(|&r| check_parameter_rule(r, n, params))
        .collect();
    report
}

/// All active necessary conditions evaluated on `g`.
pub fn bound_pipeline_with(g: &Graph, params: ClassParams, rules: &PruneRules) -> BoundReport {
    let mut report = skeleton(g.order(), params);
    report.violated = rules
        .active_rules(params)
        .into_iter()
        .filter(|&r| check_graph_rule(r, g, params))
        .collect();
    report
}

/// [`bound_pipeline_with`] under the default rule set.
pub fn bound_pipeline(g: &Graph, params: ClassParams) -> BoundReport {
    bound_pipeline_with(g, params, &PruneRules::default())
}

/// First violated active rule in pipeline order; stops early.
pub(crate) fn first_violation(g: &Graph, params: ClassParams, rules: &PruneRules) -> Option<PruneRule> {
    rules
        .active_rules(params)
        .into_iter()
        .find(|&r| check_graph_rule(r, g, params))
}
