//! Command-line front end.
//!
//! Exit codes: 0 success, 1 over budget or not interval (a report is still
//! printed), 2 usage or input errors, 3 a violated check.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use intcomp_core::dp::{default_cap, dp_check};
use intcomp_core::modular::{reduce_exhaustively, Reduction, RuleApplication};
use intcomp_core::recognition::{canonical_model, recognize, Recognition};
use intcomp_core::solver::{oracle_search_space, solve_oracle_all_minimal, SolveResult};
use intcomp_core::{augment, solve_branching, solve_oracle, Graph, SolveStatus, VertexSet};
use serde_json::{json, Value};

use crate::config::{Config, Format};
use crate::corpus::{generate, InstanceKind, InstanceSpec};
use crate::io::{read_graph, write_edge_list};
use crate::suite::{collect_reports, run_suite, SuiteName, SuiteOptions};

pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INFEASIBLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VIOLATED: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "intcomp", version, about = "Exact interval completion: solvers, checkers and test suites")]
pub struct Cli {
    /// Print the JSON output schema and exit.
    #[arg(long)]
    pub schema: bool,

    #[command(flatten)]
    pub config: Config,

    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SolverKind {
    Oracle,
    Branching,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    Exhaustive,
    Random,
    Named,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Minimum completion with at most k fill edges.
    Solve {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = SolverKind::Oracle)]
        solver: SolverKind,
        /// Also list every inclusion-minimal completion (oracle only).
        #[arg(long)]
        all_minimal: bool,
    },
    /// Apply the module rule until it no longer fires.
    Reduce {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Canonical solution and the canonical model of the completed graph.
    Canon {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Interval recognition; prints the canonical model or a witness.
    Recognize {
        #[arg(long)]
        input: PathBuf,
    },
    /// Run one structural checker over the exhaustive corpus.
    Verify {
        #[arg(long, value_enum)]
        lemma: VerifyTarget,
        #[arg(long)]
        nmax: Option<usize>,
        #[arg(long, default_value_t = 3)]
        kmax: usize,
        /// Print every report, not only the violated ones.
        #[arg(long)]
        all: bool,
        /// Kept for symmetry with the other commands; same as `--format json`.
        #[arg(long)]
        json: bool,
    },
    /// Rebuild the canonical model of an augmented instance through the DP.
    DpCheck {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        json: bool,
    },
    /// Write corpus graphs as edge-list files.
    Gen {
        #[arg(long, value_enum)]
        kind: GenKind,
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 10)]
        count: usize,
        /// Fixture name for `--kind named`.
        #[arg(long)]
        name: Option<String>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run a whole suite and summarise.
    Suite {
        #[arg(long, value_enum)]
        name: SuiteName,
        /// Also write the full report here.
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long)]
        nmax: Option<usize>,
        #[arg(long, default_value_t = 3)]
        kmax: usize,
        /// Seeded random graphs for solver-equivalence.
        #[arg(long, default_value_t = 0)]
        random: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VerifyTarget {
    PmcChar,
    Sections,
    FiStructure,
    LeftRight,
    Bounds,
    ModuleStays,
    Canonical,
}

impl VerifyTarget {
    fn suite(self) -> SuiteName {
        match self {
            VerifyTarget::PmcChar => SuiteName::PmcChar,
            VerifyTarget::Sections => SuiteName::Sections,
            VerifyTarget::FiStructure => SuiteName::FiStructure,
            VerifyTarget::LeftRight => SuiteName::LeftRight,
            VerifyTarget::Bounds => SuiteName::Bounds,
            VerifyTarget::ModuleStays => SuiteName::ModuleStays,
            VerifyTarget::Canonical => SuiteName::Canonical,
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code. Output goes to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    if cli.schema {
        let _ = writeln!(out, "{}", serde_json::to_string_pretty(&schema()).unwrap());
        return EXIT_OK;
    }
    let Some(command) = cli.command else {
        let _ = writeln!(err, "no subcommand given; see --help");
        return EXIT_USAGE;
    };
    let threads = cli.config.threads;
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "thread pool: {e}");
            return EXIT_USAGE;
        }
    };
    let mut buf = Vec::new();
    let res = pool.install(|| dispatch(&cli.config, command, &mut buf));
    let _ = out.write_all(&buf);
    match res {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            EXIT_USAGE
        }
    }
}

fn emit(out: &mut dyn Write, cfg: &Config, command: &str, body: Value, text: impl FnOnce() -> String) -> anyhow::Result<()> {
    match cfg.format {
        Format::Json => {
            let mut v = json!({ "schema_version": SCHEMA_VERSION, "command": command });
            if let (Value::Object(dst), Value::Object(src)) = (&mut v, body) {
                dst.extend(src);
            }
            writeln!(out, "{}", serde_json::to_string(&v)?)?;
        }
        Format::Text => writeln!(out, "{}", text())?,
    }
    Ok(())
}

fn load(path: &Path, cfg: &Config) -> anyhow::Result<Graph> {
    let g = read_graph(path)?;
    if g.n() as u64 > cfg.vertex_cap {
        bail!("{} has {} vertices; the vertex cap is {}", path.display(), g.n(), cfg.vertex_cap);
    }
    Ok(g)
}

fn check_oracle_cap(g: &Graph, k: usize, cfg: &Config) -> anyhow::Result<()> {
    let space = oracle_search_space(g, k);
    if space > cfg.oracle_cap as u128 {
        bail!("the oracle would test up to {space} fill sets; the cap is {} (--oracle-cap)", cfg.oracle_cap);
    }
    Ok(())
}

fn set_list(s: VertexSet) -> Vec<usize> {
    s.iter().collect()
}

fn solve_json(r: &SolveResult) -> Value {
    json!({
        "status": r.status,
        "opt": r.opt,
        "canonical": r.canonical,
        "solution": r.solution,
        "canonical_model": r.canonical_model.as_ref().map(|m| m.to_line()),
        "all_minimal": r.all_minimal,
    })
}

fn status_code(r: &SolveResult) -> i32 {
    if r.status == SolveStatus::Solved {
        EXIT_OK
    } else {
        EXIT_INFEASIBLE
    }
}

fn trace_json(trace: &[RuleApplication]) -> Value {
    trace
        .iter()
        .map(|a| {
            json!({
                "x": set_list(a.x),
                "modules": a.modules.iter().map(|m| set_list(*m)).collect::<Vec<_>>(),
                "removed": a.removed.map(set_list),
            })
        })
        .collect()
}

fn dispatch(cfg: &Config, command: Command, out: &mut dyn Write) -> anyhow::Result<i32> {
    match command {
        Command::Solve { input, k, solver, all_minimal } => {
            let g = load(&input, cfg)?;
            let r = match solver {
                SolverKind::Oracle => {
                    check_oracle_cap(&g, k, cfg)?;
                    if all_minimal {
                        solve_oracle_all_minimal(&g, k)?
                    } else {
                        solve_oracle(&g, k)
                    }
                }
                SolverKind::Branching => {
                    if all_minimal {
                        bail!("--all-minimal needs the oracle solver");
                    }
                    solve_branching(&g, k)
                }
            };
            emit(out, cfg, "solve", solve_json(&r), || match r.opt {
                Some(opt) => format!("opt {opt}\nfill {:?}", r.solution.as_ref().map(|f| f.edges().to_vec()).unwrap_or_default()),
                None => format!("over budget: no completion with at most {k} edges"),
            })?;
            Ok(status_code(&r))
        }
        Command::Reduce { input, k } => {
            let g = load(&input, cfg)?;
            let red = reduce_exhaustively(&g, k);
            let (body, code) = match &red {
                Reduction::Reduced { graph, map, trace } => (
                    json!({ "status": "reduced", "n": graph.n(), "edges": graph.edges(), "map": map, "trace": trace_json(trace) }),
                    EXIT_OK,
                ),
                Reduction::NoInstance { trace } => (json!({ "status": "no_instance", "trace": trace_json(trace) }), EXIT_INFEASIBLE),
            };
            emit(out, cfg, "reduce", body, || match &red {
                Reduction::Reduced { graph, trace, .. } => {
                    format!("{} rule applications\n{}", trace.len(), write_edge_list(graph).trim_end())
                }
                Reduction::NoInstance { .. } => format!("no instance: no completion with at most {k} edges"),
            })?;
            Ok(code)
        }
        Command::Canon { input, k } => {
            let g = load(&input, cfg)?;
            check_oracle_cap(&g, k, cfg)?;
            let r = solve_oracle(&g, k);
            let line = r.canonical_model.as_ref().map(|m| m.to_line());
            emit(out, cfg, "canon", json!({ "status": r.status, "opt": r.opt, "canonical": r.canonical, "model": line }), || {
                match (&r.canonical, &line) {
                    (Some(f), Some(l)) => format!("fill {:?}\n{l}", f.edges()),
                    _ => format!("over budget: no completion with at most {k} edges"),
                }
            })?;
            Ok(status_code(&r))
        }
        Command::Recognize { input } => {
            let g = load(&input, cfg)?;
            match recognize(&g) {
                Recognition::Interval { .. } => {
                    let line = canonical_model(&g)?.to_line();
                    emit(out, cfg, "recognize", json!({ "interval": true, "model": line }), || line.clone())?;
                    Ok(EXIT_OK)
                }
                Recognition::NotInterval { witness } => {
                    let w = set_list(witness);
                    emit(out, cfg, "recognize", json!({ "interval": false, "witness": w }), || {
                        format!("not interval; witness {w:?}")
                    })?;
                    Ok(EXIT_INFEASIBLE)
                }
            }
        }
        Command::Verify { lemma, nmax, kmax, all, json } => {
            let cfg = &Config { format: if json { Format::Json } else { cfg.format }, ..cfg.clone() };
            let name = lemma.suite();
            let reports = collect_reports(name, nmax.unwrap_or(name.default_n_max()), kmax)?;
            let violated = reports.iter().filter(|r| r.verdict.is_violated()).count();
            let holds = reports.iter().filter(|r| r.verdict.holds()).count();
            let skipped = reports.len() - violated - holds;
            let summary = format!("checked={} holds={holds} violated={violated} skipped={skipped}", reports.len());
            let shown: Vec<_> = reports.iter().filter(|r| all || r.verdict.is_violated()).collect();
            match cfg.format {
                Format::Json => {
                    for r in &shown {
                        writeln!(out, "{}", serde_json::to_string(r)?)?;
                    }
                    let v = json!({ "schema_version": SCHEMA_VERSION, "command": "verify", "lemma": name.name(),
                        "checked": reports.len(), "holds": holds, "violated": violated, "skipped": skipped });
                    writeln!(out, "{v}")?;
                }
                Format::Text => {
                    for r in &shown {
                        writeln!(out, "{} {} {:?}", r.lemma, r.instance, r.verdict)?;
                    }
                }
            }
            writeln!(out, "{summary}")?;
            Ok(if violated > 0 { EXIT_VIOLATED } else { EXIT_OK })
        }
        Command::DpCheck { input, k, json } => {
            let cfg = &Config { format: if json { Format::Json } else { cfg.format }, ..cfg.clone() };
            let base = load(&input, cfg)?;
            let g = augment(&base)?;
            check_oracle_cap(&g, k, cfg)?;
            let Some(f) = solve_oracle(&g, k).canonical else {
                emit(out, cfg, "dp-check", json!({ "status": "over_budget" }), || format!("over budget: no completion with at most {k} edges"))?;
                return Ok(EXIT_INFEASIBLE);
            };
            let cap = cfg.event_cap.map(|c| c as usize).unwrap_or(default_cap(k));
            let mut r = dp_check(&g, &f, k, cap)?;
            r.instance = input.display().to_string();
            let ok = r.ok();
            let mut body = serde_json::to_value(&r)?;
            body["ok"] = Value::Bool(ok);
            emit(out, cfg, "dp-check", body, || {
                format!(
                    "{}\ncanonical     {}\nreconstructed {}\nstates={} base={} glued={} unresolved={}",
                    if ok { "ok" } else { "MISMATCH" },
                    r.canonical,
                    r.reconstructed.as_deref().unwrap_or("-"),
                    r.stats.states,
                    r.stats.base_cases,
                    r.stats.glued,
                    r.stats.unresolved
                )
            })?;
            Ok(if ok { EXIT_OK } else { EXIT_VIOLATED })
        }
        Command::Gen { kind, n, p, count, name, out: dir } => {
            let kind = match kind {
                GenKind::Exhaustive => InstanceKind::Exhaustive { n },
                GenKind::Random => InstanceKind::Random { n, p, seed: cfg.seed, count },
                GenKind::Named => InstanceKind::Named { name: name.context("--kind named needs --name")? },
            };
            let spec = InstanceSpec { kind, k: 0 };
            let graphs = generate(&spec)?;
            std::fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
            let mut files = Vec::new();
            for (i, g) in graphs.iter().enumerate() {
                let path = dir.join(format!("g{i:05}.el"));
                std::fs::write(&path, write_edge_list(g)).with_context(|| format!("writing {}", path.display()))?;
                files.push(path.display().to_string());
            }
            emit(out, cfg, "gen", json!({ "spec": spec, "files": files }), || format!("wrote {} graphs to {}", files.len(), dir.display()))?;
            Ok(EXIT_OK)
        }
        Command::Suite { name, json, nmax, kmax, random } => {
            let opts = SuiteOptions { n_max: nmax, k_max: kmax, random, seed: cfg.seed, ..SuiteOptions::default() };
            let report = run_suite(name, &opts)?;
            if let Some(path) = json {
                let body = json!({ "schema_version": SCHEMA_VERSION, "report": report });
                std::fs::write(&path, serde_json::to_string_pretty(&body)? + "\n").with_context(|| format!("writing {}", path.display()))?;
            }
            let summary = report.tally.to_string();
            emit(out, cfg, "suite", json!({ "suite": name.name(), "ok": report.ok(), "tally": report.tally, "failures": report.failures }), || {
                let mut s = String::new();
                for f in &report.failures {
                    s.push_str(&format!("{} {}: {}\n", f.check, f.instance, f.details));
                }
                s + &format!("{name}: {summary}")
            })?;
            Ok(if report.ok() { EXIT_OK } else { EXIT_VIOLATED })
        }
    }
}

/// JSON schema of every document the tool writes, keyed by command.
pub fn schema() -> Value {
    let completion = json!({ "type": "array", "items": { "type": "array", "items": { "type": "integer" }, "minItems": 2, "maxItems": 2 } });
    let model = json!({ "type": "string", "description": "events separated by spaces, `v+` for a begin and `v-` for an end" });
    let set = json!({ "type": "array", "items": { "type": "integer" } });
    let tally = json!({ "type": "object", "properties": {
        "instances": { "type": "integer" }, "checked": { "type": "integer" }, "holds": { "type": "integer" },
        "violated": { "type": "integer" }, "precondition_failed": { "type": "integer" }, "skipped": { "type": "integer" } } });
    let header = json!({ "schema_version": { "const": SCHEMA_VERSION }, "command": { "type": "string" } });
    let with = |extra: Value| {
        let mut props = header.clone();
        if let (Value::Object(p), Value::Object(e)) = (&mut props, extra) {
            p.extend(e);
        }
        json!({ "type": "object", "required": ["schema_version", "command"], "properties": props })
    };
    json!({
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "title": "intcomp output",
        "version": SCHEMA_VERSION,
        "commands": {
            "solve": with(json!({
                "status": { "enum": ["solved", "over_budget"] },
                "opt": { "type": ["integer", "null"] },
                "canonical": { "oneOf": [completion, { "type": "null" }] },
                "solution": { "oneOf": [completion, { "type": "null" }] },
                "canonical_model": { "oneOf": [model, { "type": "null" }] },
                "all_minimal": { "type": ["array", "null"], "items": completion } })),
            "reduce": with(json!({
                "status": { "enum": ["reduced", "no_instance"] },
                "n": { "type": "integer" },
                "edges": completion,
                "map": set,
                "trace": { "type": "array", "items": { "type": "object", "properties": {
                    "x": set, "modules": { "type": "array", "items": set }, "removed": { "oneOf": [set, { "type": "null" }] } } } } })),
            "canon": with(json!({
                "status": { "enum": ["solved", "over_budget"] },
                "opt": { "type": ["integer", "null"] },
                "canonical": { "oneOf": [completion, { "type": "null" }] },
                "model": { "oneOf": [model, { "type": "null" }] } })),
            "recognize": with(json!({ "interval": { "type": "boolean" }, "model": model, "witness": set })),
            "verify": {
                "report": { "type": "object", "properties": {
                    "lemma": { "type": "string" }, "instance": { "type": "string" },
                    "verdict": { "enum": ["holds", "violated", "precondition_failed"] }, "details": { "type": "string" } } },
                "summary": with(json!({ "lemma": { "type": "string" }, "checked": { "type": "integer" }, "holds": { "type": "integer" },
                    "violated": { "type": "integer" }, "skipped": { "type": "integer" } })) },
            "dp-check": with(json!({
                "ok": { "type": "boolean" }, "instance": { "type": "string" }, "k": { "type": "integer" }, "cap": { "type": "integer" },
                "fill": completion, "canonical": model, "reconstructed": { "oneOf": [model, { "type": "null" }] },
                "matches": { "type": "boolean" }, "problems": { "type": "array", "items": { "type": "string" } },
                "stats": { "type": "object" } })),
            "gen": with(json!({ "spec": { "type": "object" }, "files": { "type": "array", "items": { "type": "string" } } })),
            "suite": with(json!({ "suite": { "type": "string" }, "ok": { "type": "boolean" }, "tally": tally,
                "failures": { "type": "array", "items": { "type": "object", "properties": {
                    "check": { "type": "string" }, "instance": { "type": "string" }, "details": { "type": "string" } } } } })),
        }
    })
}
