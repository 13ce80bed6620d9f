//! Command-line front end. [`run`] takes the argument vector and output
//! streams and returns the process exit code, so it can be driven from
//! tests as well as from the binary.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::constructors::{formula_sweep, parse_graph_spec, FamilySpec};
use crate::graph::{common_unit, MetricGraph};
use crate::mfunction::{hot_classes, m_rational, m_signature, same_m};
use crate::search::{prefilter_soundness_audit, read_corpus, search, tree_search, CorpusEntry, Normalization, SearchConfig, SearchOutcome};
use crate::secular::secular_polynomial;
use crate::spectrum::{eigenfrequencies, is_isospectral, FrequencyValue, Window};
use crate::{Error, Result};

/// Exit code for malformed command lines.
pub const EXIT_USAGE: i32 = 64;
/// Exit code when a verification step fails.
pub const EXIT_VERIFY: i32 = 2;
/// Environment variable holding the default worker count.
pub const JOBS_ENV: &str = "ISOGRAPH_JOBS";

#[derive(Parser, Debug)]
#[command(name = "isograph", version, about = "Exact spectra and isospectrality of equilateral and commensurate quantum graphs")]
struct Cli {
    /// Machine-readable JSON on standard output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Normalize {
    /// Compare graphs with the lengths given instead of rescaling each to
    /// total length 1.
    #[arg(long)]
    native: bool,
}

#[derive(Args, Debug, Clone)]
struct SearchArgs {
    /// graph6 files, one graph per line.
    #[arg(required = true)]
    corpus: Vec<PathBuf>,
    /// Compare every graph instead of bucketing by characteristic polynomial.
    #[arg(long)]
    no_prefilter: bool,
    /// Give every edge length 1 instead of normalizing to total length 1.
    #[arg(long)]
    unit_edges: bool,
    /// Worker threads.
    #[arg(long, env = JOBS_ENV)]
    jobs: Option<usize>,
    /// Write JSONL here (plus `<path>.manifest.json`) instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Secular polynomial of a graph.
    Secular {
        graph: String,
        /// Print the graph in DOT format.
        #[arg(long)]
        dot: bool,
    },
    /// Eigenfrequencies k (eigenvalues k^2) of a graph.
    Spectrum {
        graph: String,
        /// List every k in (0, kmax].
        #[arg(long, conflicts_with = "count")]
        kmax: Option<f64>,
        /// List the first COUNT distinct nonzero k (default 10).
        #[arg(long)]
        count: Option<usize>,
    },
    /// Decides exact isospectrality of two graphs.
    Isospectral {
        g1: String,
        g2: String,
        #[command(flatten)]
        norm: Normalize,
    },
    /// Searches graph6 corpora for isospectral sets.
    Search(SearchArgs),
    /// Searches tree corpora; non-trees are skipped.
    TreeSearch(SearchArgs),
    /// M-function signature and rational M-function at a vertex.
    Msig { graph: String, vertex: usize },
    /// Whether two vertices have the same M-function.
    SameM {
        g1: String,
        v1: usize,
        g2: String,
        v2: usize,
        #[command(flatten)]
        norm: Normalize,
    },
    /// Classes of vertices with equal M-functions across graphs.
    HotClasses {
        #[arg(required = true)]
        graphs: Vec<String>,
        #[command(flatten)]
        norm: Normalize,
    },
    /// Builds a member of a named family.
    Build {
        family: String,
        #[arg(long)]
        dot: bool,
    },
    /// Checks closed-form secular equations against computed ones.
    ValidateFormulas {
        /// Restrict to one family.
        #[arg(long)]
        family: Option<String>,
        /// Upper bound of the family's size parameter.
        #[arg(long)]
        max: Option<usize>,
    },
    /// Compares search results with and without the prefilter.
    AuditPrefilter {
        #[arg(required = true)]
        corpus: Vec<PathBuf>,
        #[arg(long, env = JOBS_ENV)]
        jobs: Option<usize>,
    },
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
    json: bool,
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv: Vec<std::ffi::OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind::*;
            return if matches!(e.kind(), DisplayHelp | DisplayVersion | DisplayHelpOnMissingArgumentOrSubcommand) {
                let _ = write!(out, "{}", e.render());
                if e.kind() == DisplayHelpOnMissingArgumentOrSubcommand { EXIT_USAGE } else { 0 }
            } else {
                let _ = write!(err, "{}", e.render());
                EXIT_USAGE
            };
        }
    };
    let command_line: Vec<String> = argv.iter().map(|a| a.to_string_lossy().into_owned()).collect();
    let mut io = Io { out, err, json: cli.json };
    match dispatch(cli.command, &command_line, &mut io) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(io.err, "error: {e}");
            1
        }
    }
}

fn graph(spec: &str) -> Result<MetricGraph> {
    parse_graph_spec(spec)
}

fn emit(io: &mut Io, value: Value, text: impl FnOnce() -> String) -> Result<()> {
    if io.json {
        writeln!(io.out, "{value}")?;
    } else {
        write!(io.out, "{}", text())?;
    }
    Ok(())
}

fn default_jobs(jobs: Option<usize>) -> usize {
    jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get())).max(1)
}

/// Rescales graphs to total length 1 unless `native` is set.
fn normalize(graphs: Vec<MetricGraph>, native: bool) -> Vec<MetricGraph> {
    if native {
        graphs
    } else {
        graphs.iter().map(MetricGraph::normalized).collect()
    }
}

/// All graphs in the smallest unit that expresses every one of them.
fn to_common_unit(graphs: &[MetricGraph]) -> Result<Vec<MetricGraph>> {
    let unit = graphs.iter().skip(1).fold(graphs[0].unit().clone(), |u, g| common_unit(&u, g.unit()));
    graphs.iter().map(|g| g.to_unit(&unit)).collect()
}

fn dispatch(command: Command, command_line: &[String], io: &mut Io) -> Result<i32> {
    match command {
        Command::Secular { graph: spec, dot } => {
            let g = graph(&spec)?;
            let p = secular_polynomial(&g)?;
            if dot {
                write!(io.out, "{}", g.graph().to_dot(Some(g.lengths())))?;
            }
            emit(io, json!({ "graph": g.to_string(), "secular": p.to_json() }), || format!("{p}\n"))?;
        }
        Command::Spectrum { graph: spec, kmax, count } => {
            let g = graph(&spec)?;
            let window = match kmax {
                Some(k) => Window::UpTo(k),
                None => Window::First(count.unwrap_or(10)),
            };
            let report = eigenfrequencies(&secular_polynomial(&g)?, &window)?;
            emit(io, report.to_json(), || {
                let mut s = format!("k = 0  (x{})\n", report.k0_multiplicity);
                for e in &report.entries {
                    let label = match &e.value {
                        FrequencyValue::Exact { k_over_pi, .. } => format!("{k_over_pi} pi"),
                        FrequencyValue::Algebraic { factor, root_index, .. } => {
                            format!("root {root_index} of {factor}")
                        }
                    };
                    s.push_str(&format!("k = {label}  ~ {:.10}  (x{})\n", e.approx(), e.multiplicity));
                }
                s
            })?;
        }
        Command::Isospectral { g1, g2, norm } => {
            let gs = normalize(vec![graph(&g1)?, graph(&g2)?], norm.native);
            let verdict = match is_isospectral(&gs[0], &gs[1]) {
                Ok(b) => b,
                Err(Error::Incomparable(..)) => false,
                Err(e) => return Err(e),
            };
            let word = if verdict { "ISOSPECTRAL" } else { "NOT ISOSPECTRAL" };
            emit(io, json!({ "isospectral": verdict }), || format!("{word}\n"))?;
            return Ok(if verdict { 0 } else { 1 });
        }
        Command::Search(args) => return run_search(args, false, command_line, io),
        Command::TreeSearch(args) => return run_search(args, true, command_line, io),
        Command::Msig { graph: spec, vertex } => {
            let g = graph(&spec)?;
            let sig = m_signature(&g, vertex)?;
            let m = m_rational(&g, vertex)?;
            let mut v = sig.to_json();
            v["m_function"] = json!(m.to_string());
            emit(io, v, || {
                format!(
                    "signature Q(z, w) = {}\ndiscarded factor = {}\nM(k) = {m}\n",
                    sig.signature(),
                    sig.discarded_factor()
                )
            })?;
        }
        Command::SameM { g1, v1, g2, v2, norm } => {
            let gs = normalize(vec![graph(&g1)?, graph(&g2)?], norm.native);
            if gs[0].total_length() != gs[1].total_length() {
                writeln!(
                    io.err,
                    "warning: total lengths differ ({} vs {}); equal M-functions do not give isospectral attachments",
                    gs[0].total_length(),
                    gs[1].total_length()
                )?;
            }
            let gs = to_common_unit(&gs)?;
            let same = same_m(&gs[0], v1, &gs[1], v2)?;
            let word = if same { "SAME M-FUNCTION" } else { "DIFFERENT M-FUNCTIONS" };
            emit(io, json!({ "same": same }), || format!("{word}\n"))?;
            return Ok(if same { 0 } else { 1 });
        }
        Command::HotClasses { graphs, norm } => {
            let gs = graphs.iter().map(|s| graph(s)).collect::<Result<Vec<_>>>()?;
            let gs = to_common_unit(&normalize(gs, norm.native))?;
            let classes = hot_classes(&gs)?;
            emit(io, json!({ "classes": classes }), || {
                let mut s = String::new();
                for c in &classes {
                    let items: Vec<String> = c.iter().map(|(g, v)| format!("g{g}:v{v}")).collect();
                    s.push_str(&items.join(" "));
                    s.push('\n');
                }
                if classes.is_empty() {
                    s.push_str("no shared M-functions\n");
                }
                s
            })?;
        }
        Command::Build { family, dot } => {
            let spec: FamilySpec = family.parse()?;
            let g = spec.build()?;
            if dot {
                write!(io.out, "{}", g.graph().to_dot(Some(g.lengths())))?;
            }
            let edges: Vec<Value> = g
                .graph()
                .edges()
                .iter()
                .zip(g.lengths())
                .map(|(&(u, v), &l)| json!([u, v, l]))
                .collect();
            emit(
                io,
                json!({ "family": spec.to_string(), "vertices": g.n_vertices(), "unit": crate::json::rational(g.unit()), "edges": edges }),
                || format!("{g}\n"),
            )?;
        }
        Command::ValidateFormulas { family, max } => {
            let reports = formula_sweep(family.as_deref(), max)?;
            let bad = reports.iter().filter(|r| !r.matches).count();
            if io.json {
                for r in &reports {
                    writeln!(io.out, "{}", r.to_json())?;
                }
            } else {
                for r in reports.iter().filter(|r| !r.matches) {
                    writeln!(io.out, "MISMATCH {} ({}): computed {} expected {}", r.subject, r.formula, r.computed.poly(), r.expected)?;
                }
                writeln!(io.out, "{} checked, {} mismatches", reports.len(), bad)?;
            }
            return Ok(if bad == 0 { 0 } else { EXIT_VERIFY });
        }
        Command::AuditPrefilter { corpus, jobs } => {
            let (entries, _) = load(&corpus)?;
            let report = prefilter_soundness_audit(&entries, default_jobs(jobs))?;
            emit(io, report.to_json(), || {
                format!(
                    "prefilter on: {} sets ({} secular polynomials)\nprefilter off: {} sets ({} secular polynomials)\n{}\n{} sets with differing characteristic polynomials\n",
                    report.with_prefilter.sets.len(),
                    report.with_prefilter.secular_computed,
                    report.without_prefilter.sets.len(),
                    report.without_prefilter.secular_computed,
                    if report.identical { "IDENTICAL" } else { "DIFFERENT" },
                    report.discoveries.len()
                )
            })?;
            let failed = !report.with_prefilter.failures.is_empty() || !report.without_prefilter.failures.is_empty();
            return Ok(if failed { EXIT_VERIFY } else { 0 });
        }
    }
    Ok(0)
}

/// Content digest of an input file.
pub fn sha256_file(path: &Path) -> Result<String> {
    let bytes = std::fs::read(path)?;
    Ok(format!("{:x}", Sha256::digest(&bytes)))
}

fn load(paths: &[PathBuf]) -> Result<(Vec<CorpusEntry>, Vec<Value>)> {
    let mut entries = Vec::new();
    let mut inputs = Vec::new();
    for p in paths {
        let e = read_corpus(p)?;
        inputs.push(json!({ "path": p.display().to_string(), "sha256": sha256_file(p)?, "graphs": e.len() }));
        entries.extend(e);
    }
    Ok((entries, inputs))
}

/// Provenance record written next to every output file.
#[derive(Clone, Debug)]
pub struct RunManifest {
    pub command_line: Vec<String>,
    pub config: Value,
    pub inputs: Vec<Value>,
    pub output_sha256: String,
    pub tool_version: &'static str,
    pub wall_seconds: f64,
}

impl RunManifest {
    pub fn to_json(&self) -> Value {
        json!({
            "command_line": self.command_line,
            "config": self.config,
            "inputs": self.inputs,
            "output_sha256": self.output_sha256,
            "tool_version": self.tool_version,
            "wall_seconds": self.wall_seconds,
        })
    }
}

fn run_search(args: SearchArgs, trees: bool, command_line: &[String], io: &mut Io) -> Result<i32> {
    let start = Instant::now();
    let (entries, inputs) = load(&args.corpus)?;
    let config = SearchConfig {
        prefilter: !args.no_prefilter,
        normalization: if args.unit_edges { Normalization::UnitEdges } else { Normalization::TotalLengthOne },
        jobs: default_jobs(args.jobs),
        trees_only: trees,
    };
    let outcome = if trees { tree_search(&entries, &config)? } else { search(&entries, &config)? };
    for w in &outcome.warnings {
        writeln!(io.err, "warning: {w}")?;
    }
    for (a, b) in &outcome.duplicates {
        writeln!(io.err, "warning: {a} and {b} are isomorphic")?;
    }
    for f in &outcome.failures {
        writeln!(io.err, "verification failed: {f}")?;
    }
    let mut jsonl = Vec::new();
    outcome.write_jsonl(&mut jsonl)?;
    match &args.out {
        Some(path) => {
            std::fs::write(path, &jsonl)?;
            let manifest = RunManifest {
                command_line: command_line.to_vec(),
                config: json!({
                    "prefilter": config.prefilter,
                    "normalization": config.normalization.name(),
                    "jobs": config.jobs,
                    "trees_only": config.trees_only,
                }),
                inputs,
                output_sha256: format!("{:x}", Sha256::digest(&jsonl)),
                tool_version: env!("CARGO_PKG_VERSION"),
                wall_seconds: start.elapsed().as_secs_f64(),
            };
            let mpath = manifest_path(path);
            std::fs::write(&mpath, format!("{:#}\n", manifest.to_json()))?;
            emit(io, summary_json(&outcome), || summary_text(&outcome))?;
        }
        None => io.out.write_all(&jsonl)?,
    }
    Ok(if outcome.failures.is_empty() { 0 } else { EXIT_VERIFY })
}

/// `<out>.manifest.json`.
pub fn manifest_path(out: &Path) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(".manifest.json");
    PathBuf::from(s)
}

fn summary_json(o: &SearchOutcome) -> Value {
    json!({
        "sets": o.sets.len(),
        "size_counts": o.size_counts(),
        "secular_computed": o.secular_computed,
        "skipped": o.warnings.len(),
        "duplicates": o.duplicates.len(),
        "verification_failures": o.failures.len(),
    })
}

fn summary_text(o: &SearchOutcome) -> String {
    let counts = o.size_counts();
    let mut parts: Vec<String> = counts
        .iter()
        .enumerate()
        .filter(|&(s, &c)| s >= 2 && c > 0)
        .map(|(s, c)| format!("{c} of size {s}"))
        .collect();
    if parts.is_empty() {
        parts.push("none".into());
    }
    format!("{} isospectral sets: {}\n", o.sets.len(), parts.join(", "))
}
