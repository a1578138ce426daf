//! Command-line front end. Payloads go to stdout as JSON (one document or
//! one line per graph); diagnostics go to stderr.
//!
//! Exit codes: 0 clean, 1 member found, 2 usage or I/O error.

use crate::error::{Error, Result};
use crate::graph::{parse_graph6, vertex_connectivity, Graph, GRAPH6_HEADER};
use crate::membership::{
    emptiness_threshold, min_degree_required, parameter_bounds, max_degree_bound, ClassKind, ClassParams,
    PruneRule, PruneRules, Status,
};
use crate::search::{certify, scan, ScanSpec, Source};
use crate::surgery::{build_config, degree_chain_audit};
use crate::walks::{circumference, detour_order, hamilton_cycle, hamilton_path};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::ffi::OsString;
use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::PathBuf;

pub const EXIT_CLEAN: i32 = 0;
pub const EXIT_MEMBER: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

/// Environment variable holding the worker thread count.
pub const THREADS_ENV: &str = "HYPOCHECK_THREADS";

#[derive(Debug, Parser)]
#[command(name = "hypocheck", version, about = "Exact verifier for longest-cycle and longest-path deletion classes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide membership for every graph6 record and print certificates.
    Check {
        /// graph6 file; stdin when absent or "-".
        input: Option<PathBuf>,
        #[arg(long, value_enum)]
        class: KindArg,
        #[arg(long)]
        k: usize,
        /// Include per-deletion walks in member certificates (default: on
        /// for k = 1, off otherwise).
        #[arg(long)]
        emit_witness: Option<bool>,
    },
    /// Prune-then-decide scan over all graphs of one order.
    Scan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum)]
        class: KindArg,
        /// "gen" for the internal generator, "-" for stdin, or a graph6 file.
        #[arg(long, default_value = "gen")]
        source: String,
        /// Comma-separated rule names, "all" or "none". Rule names:
        /// order_threshold, degree_window, min_degree, max_degree,
        /// holton_sheehan, connectivity, structural_for_k1.
        #[arg(long)]
        rules: Option<String>,
    },
    /// Order threshold and, with --n, the degree window.
    Bounds {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum)]
        class: KindArg,
    },
    /// Segment-inequality reports for attachment configurations.
    Audit {
        input: Option<PathBuf>,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum)]
        class: KindArg,
        /// Endpoint of the induced path (default: smallest max-degree vertex).
        #[arg(long)]
        u1: Option<usize>,
    },
    /// Exact invariants, one line per graph.
    Oracle {
        input: Option<PathBuf>,
        #[arg(long, value_enum)]
        op: OracleOp,
        /// Print a JSON object with the witness instead of the bare value.
        #[arg(long)]
        witness: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum KindArg {
    Gamma,
    Pi,
}

impl From<KindArg> for ClassKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Gamma => ClassKind::Gamma,
            KindArg::Pi => ClassKind::Pi,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum OracleOp {
    Circumference,
    Detour,
    Hamcycle,
    Hampath,
    Connectivity,
}

/// Parses a `--rules` value.
pub fn parse_rules(spec: &str) -> Result<PruneRules> {
    match spec.trim() {
        "all" => return Ok(PruneRules::all()),
        "none" | "" => return Ok(PruneRules::none()),
        _ => {}
    }
    let mut rules = PruneRules::none();
    for name in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        if matches!(name.replace('-', "_").as_str(), "structural_for_k1") {
            rules.structural_for_k1 = true;
        } else {
            rules.set(name.parse::<PruneRule>()?, true);
        }
    }
    Ok(rules)
}

fn open_input<'a>(path: Option<&PathBuf>, stdin: &'a mut dyn BufRead) -> Result<Box<dyn BufRead + 'a>> {
    match path {
        Some(p) if p.as_os_str() != "-" => Ok(Box::new(BufReader::new(File::open(p)?))),
        _ => Ok(Box::new(stdin)),
    }
}

/// graph6 records with their line numbers; blank and header lines skipped.
fn records(input: &mut dyn BufRead) -> impl Iterator<Item = Result<(usize, String)>> + '_ {
    input.lines().enumerate().filter_map(|(i, line)| match line {
        Err(e) => Some(Err(e.into())),
        Ok(l) => {
            let t = l.trim();
            (!t.is_empty() && t != GRAPH6_HEADER).then(|| Ok((i + 1, t.to_string())))
        }
    })
}

fn parse_record(lineno: usize, record: &str) -> Result<Graph> {
    parse_graph6(record.as_bytes()).map_err(|e| Error::Graph6(format!("line {lineno}: {e}")))
}

fn emit(out: &mut dyn Write, value: &impl serde::Serialize) -> Result<()> {
    serde_json::to_writer(&mut *out, value).map_err(|e| Error::Io(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

/// Parses `args` and runs the command. Returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_CLEAN };
            let _ = write!(err, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command, stdin, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn dispatch(cmd: Command, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Check {
            input,
            class,
            k,
            emit_witness,
        } => {
            let params = ClassParams { k, kind: class.into() };
            if k == 0 {
                return Err(Error::Parameter("k must be at least 1".into()));
            }
            let emit_walks = emit_witness.unwrap_or(k == 1);
            let mut reader = open_input(input.as_ref(), stdin)?;
            let mut code = EXIT_CLEAN;
            for rec in records(&mut reader) {
                let (lineno, record) = rec?;
                let g = parse_record(lineno, &record)?;
                let cert = certify(&g, params)?;
                if cert.verdict == Status::Member {
                    code = EXIT_MEMBER;
                }
                let cert = if emit_walks { cert } else { cert.summarized() };
                emit(out, &cert)?;
            }
            Ok(code)
        }
        Command::Scan {
            n,
            k,
            class,
            source,
            rules,
        } => {
            let params = ClassParams { k, kind: class.into() };
            let rules = rules.as_deref().map(parse_rules).transpose()?.unwrap_or_default();
            let report = if source == "gen" {
                let spec = ScanSpec::new(n, params, Source::InternalGenerator).with_rules(rules);
                scan(&spec, None)?
            } else {
                let spec = ScanSpec::new(n, params, Source::Stream).with_rules(rules);
                let mut reader = open_input(Some(&PathBuf::from(&source)), stdin)?;
                scan(&spec, Some(&mut reader))?
            };
            if report.stream_errors > 0 {
                writeln!(err, "{} malformed or mismatched records skipped", report.stream_errors)?;
            }
            emit(out, &report)?;
            Ok(if report.is_empty() { EXIT_CLEAN } else { EXIT_MEMBER })
        }
        Command::Bounds { k, n, class } => {
            if k == 0 {
                return Err(Error::Parameter("k must be at least 1".into()));
            }
            let params = ClassParams { k, kind: class.into() };
            let mut doc = json!({
                "class": params.kind,
                "k": k,
                "emptiness_threshold": emptiness_threshold(params),
                "min_degree_required": min_degree_required(params),
            });
            if let Some(n) = n {
                let report = parameter_bounds(n, params, &PruneRules::default());
                doc["n"] = json!(n);
                doc["max_degree_allowed"] = json!(max_degree_bound(n, params).to_string());
                doc["contradiction"] = json!(
                    max_degree_bound(n, params) < num_rational::Ratio::from_integer(min_degree_required(params) as i64)
                );
                doc["violated"] = json!(report.violated);
            }
            emit(out, &doc)?;
            Ok(EXIT_CLEAN)
        }
        Command::Audit { input, k, class, u1 } => {
            if k < 2 {
                return Err(Error::Parameter("audit needs k >= 2".into()));
            }
            let mut reader = open_input(input.as_ref(), stdin)?;
            for rec in records(&mut reader) {
                let (lineno, record) = rec?;
                let g = match parse_record(lineno, &record) {
                    Ok(g) => g,
                    Err(e) => {
                        writeln!(err, "skipped: {e}")?;
                        continue;
                    }
                };
                let cfg = match build_config(&g, k, class.into(), u1) {
                    Ok(c) => c,
                    Err(e) => {
                        writeln!(err, "skipped line {lineno} ({record}): {e}")?;
                        continue;
                    }
                };
                let report = degree_chain_audit(&cfg)?;
                emit(out, &json!({ "graph6": record, "report": report }))?;
            }
            Ok(EXIT_CLEAN)
        }
        Command::Oracle { input, op, witness } => {
            let mut reader = open_input(input.as_ref(), stdin)?;
            for rec in records(&mut reader) {
                let (lineno, record) = rec?;
                let g = parse_record(lineno, &record)?;
                let (value, walk): (serde_json::Value, Option<Vec<usize>>) = match op {
                    OracleOp::Circumference => {
                        let (c, w) = circumference(&g);
                        (json!(c), w.map(|w| w.into_vec()))
                    }
                    OracleOp::Detour => {
                        let (p, w) = detour_order(&g);
                        (json!(p), Some(w.into_vec()))
                    }
                    OracleOp::Hamcycle => {
                        let w = hamilton_cycle(&g);
                        (json!(w.is_some()), w.map(|w| w.into_vec()))
                    }
                    OracleOp::Hampath => {
                        let w = hamilton_path(&g);
                        (json!(w.is_some()), w.map(|w| w.into_vec()))
                    }
                    OracleOp::Connectivity => (json!(vertex_connectivity(&g)?), None),
                };
                if witness {
                    emit(out, &json!({ "value": value, "witness": walk }))?;
                } else {
                    emit(out, &value)?;
                }
            }
            Ok(EXIT_CLEAN)
        }
    }
}

/// Applies the thread-count environment variable to the global pool.
pub fn configure_threads() {
    if let Some(n) = std::env::var(THREADS_ENV).ok().and_then(|v| v.parse::<usize>().ok()) {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            log::warn!("could not size thread pool: {e}");
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::graph::write_graph6;
    use std::io::Cursor;

    fn call(args: &[&str], input: &str) -> (i32, String, String) {
        let mut stdin = Cursor::new(input.as_bytes().to_vec());
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut full = vec!["hypocheck"];
        full.extend_from_slice(args);
        let code = run(full, &mut stdin, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn rules_parsing() {
        assert_eq!(parse_rules("all").unwrap(), PruneRules::all());
        assert_eq!(parse_rules("none").unwrap(), PruneRules::none());
        let r = parse_rules("max_degree, holton-sheehan").unwrap();
        assert!(r.max_degree && r.holton_sheehan && !r.min_degree);
        assert!(parse_rules("max_degree,bogus").is_err());
    }

    #[test]
    fn check_exit_codes() {
        let p = write_graph6(&petersen());
        let (code, out, _) = call(&["check", "--class", "gamma", "--k", "1"], &format!("{p}\n"));
        assert_eq!(code, EXIT_MEMBER);
        assert!(out.contains("\"verdict\":\"member\""));
        let (code, out, _) = call(&["check", "--class", "gamma", "--k", "1"], &write_graph6(&complete(5)));
        assert_eq!(code, EXIT_CLEAN);
        assert!(out.contains("\"found_length\":5"));
        let (code, _, err) = call(&["check", "--class", "gamma", "--k", "1"], "garbage!\n");
        assert_eq!(code, EXIT_ERROR);
        assert!(err.contains("line 1"));
        let (code, _, _) = call(&["check", "--class", "delta", "--k", "1"], "");
        assert_eq!(code, EXIT_ERROR);
    }

    #[test]
    fn bounds_output() {
        let (code, out, _) = call(&["bounds", "--k", "2", "--class", "gamma"], "");
        assert_eq!(code, EXIT_CLEAN);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["emptiness_threshold"], 11);
        let (_, out, _) = call(&["bounds", "--k", "2", "--n", "10", "--class", "gamma"], "");
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["max_degree_allowed"], "7/2");
        assert_eq!(v["min_degree_required"], 4);
        assert_eq!(v["contradiction"], true);
        let (_, out, _) = call(&["bounds", "--k", "1", "--n", "10", "--class", "gamma"], "");
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["max_degree_allowed"], "5");
        assert_eq!(v["min_degree_required"], 3);
        assert_eq!(v["contradiction"], false);
    }

    #[test]
    fn oracle_values() {
        let input = format!("{}\n{}\n{}\n", write_graph6(&petersen()), write_graph6(&complete(4)), write_graph6(&star(5)));
        let (code, out, _) = call(&["oracle", "--op", "circumference"], &input);
        assert_eq!(code, EXIT_CLEAN);
        assert_eq!(out, "9\n4\n0\n");
        let (_, out, _) = call(&["oracle", "--op", "connectivity"], &input);
        assert_eq!(out, "3\n3\n1\n");
        let (_, out, _) = call(&["oracle", "--op", "hamcycle", "--witness"], &write_graph6(&petersen()));
        assert_eq!(out.trim(), r#"{"value":false,"witness":null}"#);
    }

    #[test]
    fn audit_skips_and_reports() {
        let (code, out, err) = call(&["audit", "--k", "2", "--class", "gamma"], "");
        assert_eq!((code, out.as_str(), err.as_str()), (EXIT_CLEAN, "", ""));
        let input = format!("{}\n{}\n", write_graph6(&cycle(6)), write_graph6(&complete(6)));
        let (code, out, err) = call(&["audit", "--k", "2", "--class", "gamma"], &input);
        assert_eq!(code, EXIT_CLEAN);
        assert!(err.contains("skipped line 1"));
        assert_eq!(out.lines().count(), 1);
        assert!(out.contains("\"improvement\":["));
        let (code, _, _) = call(&["audit", "--k", "1", "--class", "gamma"], "");
        assert_eq!(code, EXIT_ERROR);
    }
}
