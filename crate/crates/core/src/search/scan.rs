use super::generate::{children, parents, GenConstraints, GENERATOR_MAX_ORDER};
use crate::error::{Error, Result};
use crate::graph::{parse_graph6, write_graph6, Graph};
use crate::membership::{
    decide, first_violation, min_degree_required, parameter_bounds, max_degree_bound, ClassKind, ClassParams, PruneRule,
    PruneRules,
};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::io::BufRead;
use std::time::Instant;

const STREAM_CHUNK: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    InternalGenerator,
    Stream,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanSpec {
    pub n: usize,
    pub params: ClassParams,
    pub source: Source,
    pub rules: PruneRules,
}

impl ScanSpec {
    pub fn new(n: usize, params: ClassParams, source: Source) -> Self {
        ScanSpec {
            n,
            params,
            source,
            rules: PruneRules::default(),
        }
    }

    pub fn with_rules(mut self, rules: PruneRules) -> Self {
        self.rules = rules;
        self
    }

    pub fn validate(&self) -> Result<()> {
        self.params.validate_for(self.n)?;
        if self.source == Source::InternalGenerator && self.n > GENERATOR_MAX_ORDER {
            return Err(Error::GeneratorSize {
                order: self.n,
                limit: GENERATOR_MAX_ORDER,
            });
        }
        Ok(())
    }

    /// Generator constraints implied by the active per-graph rules. Degrees
    /// only grow under augmentation, so ceilings are safe at every level.
    pub fn generator_constraints(&self) -> GenConstraints {
        let (n, params, rules) = (self.n, self.params, &self.rules);
        let mut c = GenConstraints::default();
        if rules.applies(PruneRule::MaxDegree, params) {
            let ceiling = max_degree_bound(n, params).floor().to_integer().max(0) as usize;
            c.max_degree = Some(ceiling);
        }
        if rules.applies(PruneRule::HoltonSheehan, params) {
            let ceiling = n.saturating_sub(4) / 2;
            c.max_degree = Some(c.max_degree.map_or(ceiling, |d| d.min(ceiling)));
        }
        if rules.applies(PruneRule::MinDegree, params) {
            c.min_degree = min_degree_required(params);
        }
        if rules.applies(PruneRule::Connectivity, params) {
            c.min_connectivity = min_degree_required(params);
        }
        c
    }
}

/// Outcome of a scan. `total_examined` equals the pruned counts plus
/// `fully_decided`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EmptinessReport {
    pub spec: ScanSpec,
    pub total_examined: u64,
    pub pruned_per_rule: BTreeMap<PruneRule, u64>,
    pub fully_decided: u64,
    /// graph6 records of members, sorted.
    pub members_found: Vec<String>,
    /// Parameter-only rules that already prove emptiness; when non-empty on
    /// the generator source no graph is generated.
    pub parameter_refutation: Vec<PruneRule>,
    pub generator_constraints: Option<GenConstraints>,
    pub stream_errors: u64,
    pub wall_seconds: f64,
}

impl EmptinessReport {
    pub fn is_empty(&self) -> bool {
        self.members_found.is_empty()
    }

    /// Serialization with `wall_seconds` zeroed, for comparing runs.
    pub fn without_timing(&self) -> EmptinessReport {
        EmptinessReport {
            wall_seconds: 0.0,
            ..self.clone()
        }
    }
}

#[derive(Default)]
struct Tally {
    total: u64,
    pruned: BTreeMap<PruneRule, u64>,
    decided: u64,
    members: Vec<String>,
}

impl Tally {
    fn examine(mut self, g: &Graph, spec: &ScanSpec) -> Tally {
        self.total += 1;
        if let Some(rule) = first_violation(g, spec.params, &spec.rules) {
            *self.pruned.entry(rule).or_default() += 1;
            return self;
        }
        self.decided += 1;
        let verdict = decide(g, spec.params, false).expect("parameters validated");
        if verdict.is_member() {
            self.members.push(write_graph6(g));
        }
        self
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.total += other.total;
        for (rule, count) in other.pruned {
            *self.pruned.entry(rule).or_default() += count;
        }
        self.decided += other.decided;
        self.members.extend(other.members);
        self
    }
}

fn examine_all(graphs: &[Graph], spec: &ScanSpec) -> Tally {
    graphs
        .par_iter()
        .fold(Tally::default, |t, g| t.examine(g, spec))
        .reduce(Tally::default, Tally::merge)
}

/// Runs the staged prune-then-decide pipeline over every graph of order
/// `spec.n` from the chosen source. `input` is required for
/// [`Source::Stream`].
pub fn scan(spec: &ScanSpec, input: Option<&mut dyn BufRead>) -> Result<EmptinessReport> {
    spec.validate()?;
    let start = Instant::now();
    let refutation = parameter_bounds(spec.n, spec.params, &spec.rules).violated;
    let mut generator_constraints = None;
    let mut stream_errors = 0;
    let tally = match spec.source {
        Source::InternalGenerator if !refutation.is_empty() => Tally::default(),
        Source::InternalGenerator => {
            let c = spec.generator_constraints();
            generator_constraints = Some(c);
            let level = parents(spec.n, c)?;
            level
                .par_iter()
                .fold(Tally::default, |t, p| {
                    children(p, spec.n, c).iter().fold(t, |t, g| t.examine(g, spec))
                })
                .reduce(Tally::default, Tally::merge)
        }
        Source::Stream => {
            let input = input.ok_or_else(|| Error::Parameter("stream source needs input".into()))?;
            let mut tally = Tally::default();
            let mut chunk = Vec::with_capacity(STREAM_CHUNK);
            for (lineno, line) in input.lines().enumerate() {
                let line = line?;
                let record = line.trim();
                if record.is_empty() || record == crate::graph::GRAPH6_HEADER {
                    continue;
                }
                match parse_graph6(record.as_bytes()) {
                    Ok(g) if g.order() == spec.n => chunk.push(g),
                    Ok(g) => {
                        stream_errors += 1;
                        log::warn!("line {}: order {} does not match {}", lineno + 1, g.order(), spec.n);
                    }
                    Err(e) => {
                        stream_errors += 1;
                        log::warn!("line {}: {e}", lineno + 1);
                    }
                }
                if chunk.len() == STREAM_CHUNK {
                    tally = tally.merge(examine_all(&chunk, spec));
                    chunk.clear();
                }
            }
            tally.merge(examine_all(&chunk, spec))
        }
    };
    let mut members = tally.members;
    members.sort();
    Ok(EmptinessReport {
        spec: *spec,
        total_examined: tally.total,
        pruned_per_rule: tally.pruned,
        fully_decided: tally.decided,
        members_found: members,
        parameter_refutation: refutation,
        generator_constraints,
        stream_errors,
        wall_seconds: start.elapsed().as_secs_f64(),
    })
}

/// Convenience for the `k = 1` cycle class.
pub fn hypohamiltonian_census(n: usize, rules: PruneRules) -> Result<EmptinessReport> {
    let spec = ScanSpec::new(n, ClassParams { k: 1, kind: ClassKind::Gamma }, Source::InternalGenerator)
        .with_rules(rules);
    scan(&spec, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use std::io::Cursor;

    #[test]
    fn threshold_short_circuit() {
        let spec = ScanSpec::new(10, ClassParams::gamma(2), Source::InternalGenerator);
        let r = scan(&spec, None).unwrap();
        assert_eq!(r.fully_decided, 0);
        assert_eq!(r.total_examined, 0);
        assert!(r.parameter_refutation.contains(&PruneRule::OrderThreshold));
        assert!(r.is_empty());
    }

    #[test]
    fn small_census_is_empty() {
        for n in 4..=7 {
            let r = hypohamiltonian_census(n, PruneRules::default()).unwrap();
            assert!(r.is_empty(), "n={n}");
            let pruned: u64 = r.pruned_per_rule.values().sum();
            assert_eq!(r.total_examined, pruned + r.fully_decided);
        }
    }

    #[test]
    fn stream_scan_counts_errors_and_members() {
        let p = write_graph6(&petersen());
        let text = format!(">>graph6<<{p}\nnot graph6 at all\n{}\n\n{}\n", write_graph6(&cycle(10)), write_graph6(&cycle(5)));
        let spec = ScanSpec::new(10, ClassParams::gamma(1), Source::Stream);
        let r = scan(&spec, Some(&mut Cursor::new(text))).unwrap();
        assert_eq!(r.members_found, vec![p]);
        assert_eq!(r.stream_errors, 2);
        assert_eq!(r.total_examined, 2);
        assert!(r.generator_constraints.is_none());
    }

    #[test]
    fn stream_requires_input() {
        let spec = ScanSpec::new(10, ClassParams::gamma(1), Source::Stream);
        assert!(matches!(scan(&spec, None), Err(Error::Parameter(_))));
    }

    #[test]
    fn generator_size_is_checked() {
        let spec = ScanSpec::new(11, ClassParams::gamma(1), Source::InternalGenerator);
        assert!(matches!(scan(&spec, None), Err(Error::GeneratorSize { .. })));
    }

    #[test]
    fn derived_constraints() {
        let spec = ScanSpec::new(10, ClassParams::gamma(1), Source::InternalGenerator).with_rules(PruneRules::all());
        let c = spec.generator_constraints();
        assert_eq!(c.max_degree, Some(3));
        assert_eq!(c.min_degree, 3);
        assert_eq!(c.min_connectivity, 3);
        let c = ScanSpec::new(10, ClassParams::gamma(1), Source::InternalGenerator).generator_constraints();
        assert_eq!(c, GenConstraints { min_degree: 0, max_degree: Some(5), min_connectivity: 0 });
    }
}
