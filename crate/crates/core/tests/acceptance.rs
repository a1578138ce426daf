//! Acceptance suite: runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any failed.

mod common;

use common::{connected_corpus, random_connected, random_graph};
use hypocheck::graph::{families, parse_graph6, write_graph6, Graph};
use hypocheck::membership::{
    check_induced_path_property, connectivity_requirement, decide, emptiness_threshold, min_degree_required,
    parameter_bounds, max_degree_bound, ClassKind, ClassParams, PruneRule, PruneRules,
};
use hypocheck::search::{canonical_form, certify, hypohamiltonian_census, verify_certificate};
use hypocheck::surgery::{build_config, verify_gamma_claim, verify_pi_claims};
use hypocheck::walks::{circumference, circumference_dp_oracle, detour_order};
use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::sync::Mutex;
use std::time::Instant;

type Outcome = Result<String, String>;

/// Members met anywhere in the suite, for the structural consequence check.
static MEMBERS: Mutex<Vec<(Graph, ClassParams)>> = Mutex::new(Vec::new());

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn census() -> Outcome {
    let with_hs = PruneRules::all();
    let without_hs = PruneRules {
        holton_sheehan: false,
        ..PruneRules::all()
    };
    for n in 4..=9 {
        let a = hypohamiltonian_census(n, with_hs).map_err(|e| e.to_string())?;
        let b = hypohamiltonian_census(n, without_hs).map_err(|e| e.to_string())?;
        let c = hypohamiltonian_census(n, PruneRules::default()).map_err(|e| e.to_string())?;
        ensure(a.members_found.is_empty(), || format!("n={n}: members {:?}", a.members_found))?;
        ensure(a.members_found == b.members_found && b.members_found == c.members_found, || {
            format!("n={n}: rule sets disagree")
        })?;
    }
    let petersen_form = canonical_form(&families::petersen()).form;
    let mut examined = Vec::new();
    for rules in [with_hs, without_hs] {
        let r = hypohamiltonian_census(10, rules).map_err(|e| e.to_string())?;
        ensure(r.members_found.len() == 1, || format!("n=10: {} members", r.members_found.len()))?;
        let g = parse_graph6(r.members_found[0].as_bytes()).map_err(|e| e.to_string())?;
        ensure(canonical_form(&g).form == petersen_form, || "n=10 member is not Petersen".into())?;
        MEMBERS.lock().unwrap().push((g, ClassParams::gamma(1)));
        examined.push(r.total_examined);
    }
    Ok(format!(
        "n=4..9 empty under three rule sets; n=10 yields Petersen only ({} graphs examined with the degree-3 ceiling, {} without)",
        examined[0], examined[1]
    ))
}

fn emptiness_by_parameters() -> Outcome {
    let rules = PruneRules::default();
    let mut pairs = 0;
    for k in 2..=20 {
        for kind in [ClassKind::Gamma, ClassKind::Pi] {
            let params = ClassParams { k, kind };
            let threshold = emptiness_threshold(params);
            let expected = match kind {
                ClassKind::Gamma => k * k + 2 * k + 3,
                ClassKind::Pi => k * k + 2 * k + 2,
            };
            ensure(threshold == expected, || format!("{params:?}: threshold {threshold}"))?;
            for n in 1..threshold {
                let r = parameter_bounds(n, params, &rules);
                let window = max_degree_bound(n, params) < Ratio::from_integer(min_degree_required(params) as i64);
                ensure(window && r.implies_emptiness() && r.violated.contains(&PruneRule::DegreeWindow), || {
                    format!("{params:?} n={n}: {r:?}")
                })?;
                pairs += 1;
            }
            // the window closes exactly at the threshold
            let at = max_degree_bound(threshold, params);
            ensure(at >= Ratio::from_integer(min_degree_required(params) as i64), || {
                format!("{params:?}: window still closed at n={threshold}")
            })?;
        }
    }
    Ok(format!("{pairs} (n, k, class) triples refuted from parameters alone"))
}

fn degree_conformance() -> Outcome {
    let corpus = connected_corpus(8);
    let mut members = 0;
    let mut checked = 0;
    for g in &corpus {
        let n = g.order();
        for k in [1, 2] {
            for params in [ClassParams::gamma(k), ClassParams::pi(k)] {
                if params.validate_for(n).is_err() {
                    continue;
                }
                checked += 1;
                let v = decide(g, params, false).map_err(|e| e.to_string())?;
                if !v.is_member() {
                    continue;
                }
                members += 1;
                MEMBERS.lock().unwrap().push((g.clone(), params));
                let delta = Ratio::from_integer(g.max_degree() as i64);
                ensure(delta <= max_degree_bound(n, params), || format!("{} {params:?}: Δ too large", write_graph6(g)))?;
                ensure(k < 2, || format!("{} is a member at k=2 {params:?}", write_graph6(g)))?;
            }
        }
    }
    Ok(format!(
        "{} graphs, {checked} decisions, {members} members; k=2 classes empty as predicted",
        corpus.len()
    ))
}

fn oracle_equivalence() -> Outcome {
    let corpus = connected_corpus(7);
    for g in &corpus {
        let (c, dp) = (circumference(g).0, circumference_dp_oracle(g).map_err(|e| e.to_string())?);
        ensure(c == dp, || format!("{}: {c} vs {dp}", write_graph6(g)))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for i in 0..500 {
        let n = rng.random_range(8..=14);
        let p = [0.1, 0.2, 0.3, 0.5][i % 4];
        let g = random_connected(&mut rng, n, p);
        let (c, dp) = (circumference(&g).0, circumference_dp_oracle(&g).map_err(|e| e.to_string())?);
        ensure(c == dp, || format!("{}: {c} vs {dp}", write_graph6(&g)))?;
    }
    Ok(format!("{} exhaustive graphs and 500 random graphs agree", corpus.len()))
}

fn claim_contrapositive() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (mut configs, mut violated, mut tight, mut records, mut satisfied_records) = (0, 0, 0, 0, 0);
    let mut attempts = 0;
    while configs < 400 && attempts < 200_000 {
        attempts += 1;
        let n = rng.random_range(6..=12);
        let p = rng.random_range(0.35..0.95);
        let g = random_graph(&mut rng, n, p);
        let k = rng.random_range(2..=3);
        let kind = if rng.random_bool(0.5) { ClassKind::Gamma } else { ClassKind::Pi };
        let Ok(cfg) = build_config(&g, k, kind, None) else {
            continue;
        };
        configs += 1;
        let rep = match kind {
            ClassKind::Gamma => verify_gamma_claim(&cfg),
            ClassKind::Pi => verify_pi_claims(&cfg),
        }
        .map_err(|e| e.to_string())?;
        let exact = match kind {
            ClassKind::Gamma => circumference(&g).0,
            ClassKind::Pi => detour_order(&g).0,
        };
        let label = || format!("{} k={k} {kind}", write_graph6(&g));
        ensure(rep.partition_holds && rep.edge_identity_holds, || format!("{}: identities", label()))?;
        ensure(rep.degree_identity == Some(true), || format!("{}: degree identity", label()))?;
        ensure(rep.edge_count_pprime_spine >= rep.edge_count_lower_bound, || format!("{}: edge bound", label()))?;
        records += rep.per_index.len();
        satisfied_records += rep.per_index.iter().filter(|r| r.satisfied).count();
        if !rep.all_satisfied() {
            violated += 1;
            let w = rep.improvement.as_ref().ok_or_else(|| format!("{}: violation without improvement", label()))?;
            ensure(w.is_valid_in(&g) && w.len() > n - k, || format!("{}: bad improvement", label()))?;
            ensure(exact > n - k, || format!("{}: exact solver disagrees", label()))?;
        }
        if exact == n - k {
            tight += 1;
            ensure(rep.all_satisfied(), || format!("{}: tight host violates a claim", label()))?;
        }
    }
    ensure(configs >= 100 && violated >= 10, || format!("corpus too small: {configs} configs, {violated} violated"))?;
    Ok(format!(
        "{configs} configs ({records} inequalities, {satisfied_records} satisfied), {violated} with a violation, all improved; {tight} tight hosts (none exist at these orders)"
    ))
}

fn member_consequences() -> Outcome {
    let members = MEMBERS.lock().unwrap().clone();
    ensure(!members.is_empty(), || "no members recorded".into())?;
    for (g, params) in &members {
        ensure(connectivity_requirement(g, *params), || format!("{}: connectivity", write_graph6(g)))?;
        if params.k >= 2 {
            ensure(check_induced_path_property(g, params.k).is_none(), || {
                format!("{}: induced path property", write_graph6(g))
            })?;
        }
    }
    Ok(format!("{} recorded members satisfy the structural conditions", members.len()))
}

fn format_fidelity() -> Outcome {
    let mut corpus = connected_corpus(7);
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let random: Vec<Graph> = (0..1000)
        .map(|_| {
            let n = rng.random_range(1..=64);
            let p = rng.random_range(0.0..1.0);
            random_graph(&mut rng, n, p)
        })
        .collect();
    for g in corpus.iter().chain(&random) {
        let s = write_graph6(g);
        let back = parse_graph6(s.as_bytes()).map_err(|e| e.to_string())?;
        ensure(back == *g && write_graph6(&back) == s, || format!("round trip failed for {s}"))?;
    }
    corpus.push(families::petersen());
    let mut certs = 0;
    for g in &corpus {
        for params in [ClassParams::gamma(1), ClassParams::pi(1), ClassParams::pi(2)] {
            if params.validate_for(g.order()).is_err() {
                continue;
            }
            let cert = certify(g, params).map_err(|e| e.to_string())?;
            let line = cert.to_json_line();
            let parsed = hypocheck::search::Certificate::from_json_line(&line).map_err(|e| e.to_string())?;
            ensure(parsed == cert, || format!("{line}: serialization"))?;
            ensure(verify_certificate(&parsed).map_err(|e| e.to_string())?, || format!("{line}: rejected"))?;
            certs += 1;
        }
    }
    let mut small_random = 0;
    for g in random.iter().filter(|g| g.order() <= 12) {
        for params in [ClassParams::gamma(1), ClassParams::pi(1)] {
            if params.validate_for(g.order()).is_err() {
                continue;
            }
            let cert = certify(g, params).map_err(|e| e.to_string())?;
            ensure(verify_certificate(&cert).map_err(|e| e.to_string())?, || {
                format!("{}: certificate rejected", cert.graph6)
            })?;
            small_random += 1;
        }
    }
    Ok(format!(
        "{} graph6 round trips; {certs} corpus and {small_random} random certificates verified",
        corpus.len() - 1 + random.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("1 hypohamiltonian census", census),
        ("2 emptiness from parameters", emptiness_by_parameters),
        ("3 degree-bound conformance", degree_conformance),
        ("4 oracle equivalence", oracle_equivalence),
        ("5 claim contrapositive", claim_contrapositive),
        ("6 member consequences", member_consequences),
        ("7 format fidelity", format_fidelity),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {name}: {detail} ({secs:.1}s)"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail} ({secs:.1}s)");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
