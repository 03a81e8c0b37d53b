//! Command-line front end for the identity suite.
//!
//! [`run`] parses an argument vector, executes the requested command and
//! returns the exit code together with the rendered report, so the binary
//! and the integration tests share one code path.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use catdet::identity_suite::{self, CheckResult, GridOverrides, SuiteError};
use catdet::modular_lab::{conjecture_search, ConjectureId, ConjectureReport, ModularError, SearchBounds};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value as Json};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Markdown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    List,
    Verify,
    Suite,
    Conjecture,
    Bench,
}

/// Everything that determines a run. Two runs with equal configs produce the
/// same report apart from the `timings` object.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub command: Command,
    pub ids: Vec<String>,
    pub overrides: GridOverrides,
    /// Full registered grids instead of the shortened ones.
    pub full: bool,
    pub modulus: Option<i64>,
    pub format: Format,
    pub jobs: Option<usize>,
    pub seed: Option<i64>,
    pub fail_fast: bool,
    #[serde(skip)]
    pub out: Option<String>,
}

#[derive(Parser, Debug)]
#[command(name = "catdet", about = "Exact verification of Catalan determinant identities", version)]
struct Cli {
    #[command(subcommand)]
    command: Option<Cmd>,
    #[command(flatten)]
    common: Common,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Prints the index of registered checks, conjectures and families.
    List {
        #[command(flatten)]
        common: Common,
    },
    /// Runs the selected checks over their grids.
    Verify {
        #[command(flatten)]
        common: Common,
    },
    /// Runs every check, then the conjecture searches.
    Suite {
        /// Use the full registered grids rather than the fast ones.
        #[arg(long)]
        full: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Searches the residue-lift conjectures for counterexamples.
    Conjecture {
        #[command(flatten)]
        common: Common,
    },
    /// Times each selected check on its grid.
    Bench {
        #[command(flatten)]
        common: Common,
    },
}

#[derive(clap::Args, Debug, Default, Clone)]
struct Common {
    /// Check or conjecture id; repeat or separate with commas.
    #[arg(long = "id", value_delimiter = ',', global = true)]
    ids: Vec<String>,
    /// Upper end of the n range
    #[arg(long, global = true)]
    n_max: Option<i64>,
    /// Upper end of the k range
    #[arg(long, global = true)]
    k_max: Option<i64>,
    /// Upper end of the m range
    #[arg(long, global = true)]
    m_max: Option<i64>,
    /// Pins the parameter r.
    #[arg(long, global = true, allow_hyphen_values = true)]
    r: Option<i64>,
    /// Pins the parameter x.
    #[arg(long, global = true, allow_hyphen_values = true)]
    x: Option<i64>,
    /// Restricts conjecture runs to one modulus (2 or 3).
    #[arg(long = "mod", global = true)]
    modulus: Option<i64>,
    /// Worker threads; defaults to the number of cores.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Offsets every seeded random case.
    #[arg(long, global = true, allow_hyphen_values = true)]
    seed: Option<i64>,
    /// Report format; markdown unless given
    #[arg(long, value_enum, global = true)]
    format: Option<Format>,
    /// Stops the run at the first failing point
    #[arg(long, global = true)]
    fail_fast: bool,
    /// Also writes the report to this path.
    #[arg(long, global = true)]
    out: Option<String>,
    /// Explicit range `name=lo..hi` (or `name=v`) for any parameter.
    #[arg(long = "param", global = true)]
    params: Vec<String>,
}

/// Exit code and rendered output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(msg: impl Into<String>) -> Outcome {
        Outcome { code: 2, stdout: String::new(), stderr: msg.into() }
    }
}

fn parse_range(spec: &str) -> Result<(String, (i64, i64)), String> {
    let (name, range) = spec.split_once('=').ok_or_else(|| format!("--param {spec:?}: expected name=lo..hi"))?;
    let bad = || format!("--param {spec:?}: malformed range {range:?}");
    let (lo, hi) = match range.split_once("..") {
        Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
        None => {
            let v = range.trim().parse().map_err(|_| bad())?;
            (v, v)
        }
    };
    if lo > hi || name.is_empty() {
        return Err(bad());
    }
    Ok((name.to_string(), (lo, hi)))
}

impl RunConfig {
    /// Parses `argv`, program name first. No subcommand means the fast suite.
    pub fn parse(argv: &[String]) -> Result<RunConfig, String> {
        let cli = Cli::try_parse_from(argv).map_err(|e| e.to_string())?;
        let (command, full, common) = match cli.command {
            None => (Command::Suite, false, cli.common),
            Some(Cmd::List { common }) => (Command::List, false, common),
            Some(Cmd::Verify { common }) => (Command::Verify, false, common),
            Some(Cmd::Suite { full, common }) => (Command::Suite, full, common),
            Some(Cmd::Conjecture { common }) => (Command::Conjecture, false, common),
            Some(Cmd::Bench { common }) => (Command::Bench, false, common),
        };
        for (flag, v) in [("--n-max", common.n_max), ("--k-max", common.k_max), ("--m-max", common.m_max)] {
            if v.is_some_and(|v| v < 0) {
                return Err(format!("{flag} must be non-negative"));
            }
        }
        if common.jobs == Some(0) {
            return Err("--jobs must be positive".into());
        }
        if let Some(p) = common.modulus {
            if p != 2 && p != 3 {
                return Err(format!("--mod {p}: only 2 and 3 are supported"));
            }
        }
        let ranges = common.params.iter().map(|s| parse_range(s)).collect::<Result<BTreeMap<_, _>, _>>()?;
        if command == Command::Verify && common.ids.is_empty() {
            return Err("verify needs at least one --id".into());
        }
        Ok(RunConfig {
            command,
            ids: common.ids,
            overrides: GridOverrides {
                n_max: common.n_max,
                k_max: common.k_max,
                m_max: common.m_max,
                r: common.r,
                x: common.x,
                seed: common.seed,
                ranges,
            },
            full,
            modulus: common.modulus,
            format: common.format.unwrap_or(Format::Markdown),
            jobs: common.jobs,
            seed: common.seed,
            fail_fast: common.fail_fast,
            out: common.out,
        })
    }
}

#[derive(Debug)]
enum RunError {
    Suite(SuiteError),
    Modular(ModularError),
    Usage(String),
}

impl From<SuiteError> for RunError {
    fn from(e: SuiteError) -> Self {
        RunError::Suite(e)
    }
}

impl From<ModularError> for RunError {
    fn from(e: ModularError) -> Self {
        RunError::Modular(e)
    }
}

impl std::fmt::Display for RunError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RunError::Suite(e) => write!(f, "{e}"),
            RunError::Modular(e) => write!(f, "{e}"),
            RunError::Usage(e) => write!(f, "{e}"),
        }
    }
}

/// Collected data of one run, rendered afterwards.
#[derive(Default)]
struct Report {
    results: Vec<CheckResult>,
    conjectures: Vec<ConjectureReport>,
    /// Wall time per check id.
    timings: BTreeMap<String, Duration>,
    total: Duration,
}

impl Report {
    fn passes(&self) -> usize {
        self.results.iter().filter(|r| r.passed()).count()
    }

    fn failures(&self) -> usize {
        self.results.len() - self.passes()
    }
}

fn is_conjecture(id: &str) -> bool {
    ConjectureId::parse(id).is_ok()
}

fn selected_conjectures(config: &RunConfig) -> Result<Vec<ConjectureId>, RunError> {
    let ids: Vec<ConjectureId> = if config.command == Command::Conjecture && !config.ids.is_empty() {
        config.ids.iter().map(|id| ConjectureId::parse(id)).collect::<Result<_, _>>()?
    } else if config.ids.iter().any(|id| is_conjecture(id)) {
        config.ids.iter().filter(|id| is_conjecture(id)).map(|id| ConjectureId::parse(id)).collect::<Result<_, _>>()?
    } else {
        ConjectureId::ALL.to_vec()
    };
    Ok(match config.modulus {
        Some(3) => ids.into_iter().filter(|c| *c == ConjectureId::C14).collect(),
        Some(_) => ids.into_iter().filter(|c| *c != ConjectureId::C14).collect(),
        None => ids,
    })
}

fn conjecture_bounds(id: ConjectureId, o: &GridOverrides) -> SearchBounds {
    let d = id.default_bounds();
    let pick = |v: Option<i64>, default: usize| if default == 0 { 0 } else { v.map_or(default, |v| v as usize) };
    SearchBounds {
        n_max: o.n_max.map_or(d.n_max, |v| v as usize),
        k_max: pick(o.k_max, d.k_max),
        m_max: pick(o.m_max, d.m_max),
    }
}

fn run_checks(ids: &[&str], config: &RunConfig, report: &mut Report) -> Result<(), RunError> {
    for id in ids {
        let check = identity_suite::lookup(id)?;
        let grid = config.overrides.apply(check, !config.full)?;
        let start = Instant::now();
        let results = identity_suite::verify_range(id, &grid, config.fail_fast)?;
        *report.timings.entry(id.to_string()).or_default() += start.elapsed();
        let failed = results.iter().any(|r| !r.passed());
        report.results.extend(results);
        if failed && config.fail_fast {
            break;
        }
    }
    Ok(())
}

fn run_conjectures(config: &RunConfig, report: &mut Report) -> Result<(), RunError> {
    for id in selected_conjectures(config)? {
        let r = conjecture_search(id, conjecture_bounds(id, &config.overrides))?;
        report.timings.insert(id.as_str().to_string(), r.elapsed);
        report.conjectures.push(r);
    }
    Ok(())
}

/// Check ids selected for `verify`, `suite` and `bench`; every check when
/// none is named. Suite-wide runs skip `--param` names a check lacks.
fn selected_checks(config: &RunConfig) -> Result<Vec<&'static str>, RunError> {
    let named: Vec<&String> = config.ids.iter().filter(|id| !is_conjecture(id)).collect();
    if named.is_empty() {
        return Ok(identity_suite::registry().iter().map(|c| c.id).collect());
    }
    named.into_iter().map(|id| Ok(identity_suite::lookup(id)?.id)).collect()
}

fn execute(config: &RunConfig) -> Result<Report, RunError> {
    let start = Instant::now();
    let mut report = Report::default();
    match config.command {
        Command::List => {}
        Command::Verify | Command::Bench => {
            let ids = selected_checks(config)?;
            let conj = config.ids.iter().any(|id| is_conjecture(id));
            if !(conj && config.ids.iter().all(|id| is_conjecture(id))) {
                run_checks(&ids, config, &mut report)?;
            }
            if conj {
                run_conjectures(config, &mut report)?;
            }
        }
        Command::Suite => {
            let only_conjectures = !config.ids.is_empty() && config.ids.iter().all(|id| is_conjecture(id));
            let ids = if only_conjectures { Vec::new() } else { selected_checks(config)? };
            let mut cfg = config.clone();
            if config.ids.is_empty() && !config.overrides.ranges.is_empty() {
                // A suite-wide --param applies only where the parameter exists.
                let mut failed = false;
                for id in ids {
                    let check = identity_suite::lookup(id)?;
                    cfg.overrides.ranges =
                        config.overrides.ranges.iter().filter(|(k, _)| check.params.iter().any(|p| p.name == *k)).map(|(k, v)| (k.clone(), *v)).collect();
                    run_checks(&[id], &cfg, &mut report)?;
                    failed |= report.failures() > 0;
                    if failed && config.fail_fast {
                        break;
                    }
                }
            } else {
                run_checks(&ids, config, &mut report)?;
            }
            let stop = config.fail_fast && report.failures() > 0;
            if !stop && config.ids.iter().all(|id| is_conjecture(id)) {
                run_conjectures(config, &mut report)?;
            }
        }
        Command::Conjecture => run_conjectures(config, &mut report)?,
    }
    report.total = start.elapsed();
    Ok(report)
}

fn millis(d: Duration) -> f64 {
    (d.as_secs_f64() * 1e6).round() / 1e3
}

fn json_report(config: &RunConfig, report: &Report) -> Json {
    let conjectures: Vec<Json> = report
        .conjectures
        .iter()
        .map(|c| {
            let mut v = serde_json::to_value(c).expect("serializable report");
            v["id"] = json!(c.id.as_str());
            v
        })
        .collect();
    let verified = report.conjectures.iter().filter(|c| c.status_str() == "verified-up-to").count();
    let timings: BTreeMap<&String, f64> = report.timings.iter().map(|(k, v)| (k, millis(*v))).collect();
    json!({
        "config": config,
        "results": report.results,
        "conjectures": conjectures,
        "summary": {
            "pass": report.passes(),
            "fail": report.failures(),
            "conjectures_verified": verified,
            "conjectures_with_counterexample": report.conjectures.len() - verified,
        },
        "timings": {"total_ms": millis(report.total), "per_id_ms": timings},
    })
}

fn list_markdown() -> String {
    let mut s = identity_suite::index_markdown();
    s.push_str("\n## Conjectures\n\n| id | statement |\n|---|---|\n");
    for c in ConjectureId::ALL {
        let _ = writeln!(s, "| {} | {} |", c.as_str(), c.statement());
    }
    s
}

fn list_json() -> Json {
    let checks: Vec<Json> = identity_suite::registry()
        .iter()
        .map(|c| {
            let params: Vec<Json> =
                c.params.iter().map(|p| json!({"name": p.name, "lo": p.lo, "hi": p.hi, "fast_hi": p.fast_hi})).collect();
            json!({"id": c.id, "kind": c.kind, "statement": c.statement, "params": params})
        })
        .collect();
    let conjectures: Vec<Json> =
        ConjectureId::ALL.iter().map(|c| json!({"id": c.as_str(), "statement": c.statement()})).collect();
    json!({"checks": checks, "conjectures": conjectures})
}

fn value_cell(v: &Option<catdet::value::Value>) -> String {
    v.as_ref().map_or_else(|| "-".to_string(), |v| v.to_string().replace('|', "\\|"))
}

fn markdown_report(config: &RunConfig, report: &Report) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "# catdet {:?} report\n", config.command);
    if !report.results.is_empty() {
        s.push_str("| id | params | status | lhs | rhs |\n|---|---|---|---|---|\n");
        for r in &report.results {
            let status = match (&r.error, r.passed()) {
                (_, true) => "pass".to_string(),
                (Some(e), false) => format!("FAIL ({e})"),
                (None, false) => "FAIL".to_string(),
            };
            let _ = writeln!(s, "| {} | {} | {} | {} | {} |", r.id, r.params, status, value_cell(&r.lhs), value_cell(&r.rhs));
        }
        s.push('\n');
    }
    for c in &report.conjectures {
        let _ = writeln!(s, "## {} {}: {} {}\n", c.label, c.id.as_str(), c.status_str(), c.verified_up_to);
        let _ = writeln!(s, "- statement: {}", c.statement);
        let grid: Vec<String> = c.grid.iter().map(|(k, (lo, hi))| format!("{k} ∈ {lo}..{hi}")).collect();
        let _ = writeln!(s, "- grid: {}\n- points checked: {}\n- counterexamples: {}", grid.join(", "), c.points_checked, c.counterexample_count);
        if let Some(ce) = &c.first_counterexample {
            let at: Vec<String> = ce.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let _ = writeln!(s, "- first counterexample at {}: lhs = {}, rhs = {} (re-verified: {})", at.join(", "), ce.lhs, ce.rhs, ce.reverified);
        }
        s.push('\n');
    }
    let _ = writeln!(s, "**summary:** pass {}, fail {}", report.passes(), report.failures());
    if config.command == Command::Bench || !report.timings.is_empty() {
        s.push_str("\n## Timings\n\n| id | ms |\n|---|---|\n");
        for (id, d) in &report.timings {
            let _ = writeln!(s, "| {id} | {} |", millis(*d));
        }
        let _ = writeln!(s, "| total | {} |", millis(report.total));
    }
    s
}

fn render(config: &RunConfig) -> Result<(String, bool), RunError> {
    if config.command == Command::List {
        return Ok(match config.format {
            Format::Json => (serde_json::to_string_pretty(&list_json()).expect("json") + "\n", true),
            Format::Markdown => (list_markdown(), true),
        });
    }
    let report = execute(config)?;
    let ok = report.failures() == 0;
    let text = match config.format {
        Format::Json => serde_json::to_string_pretty(&json_report(config, &report)).expect("json") + "\n",
        Format::Markdown => markdown_report(config, &report),
    };
    Ok((text, ok))
}

/// Runs one invocation. Exit code 0 means every identity check passed;
/// conjecture outcomes never change it. Usage and domain errors give 2.
pub fn run(argv: &[String]) -> Outcome {
    let config = match RunConfig::parse(argv) {
        Ok(c) => c,
        Err(msg) => {
            // clap renders --help and --version as "errors" too.
            let help = msg.starts_with("Usage") || msg.starts_with("catdet") || msg.contains("Print help");
            return if help && !msg.contains("error:") {
                Outcome { code: 0, stdout: msg, stderr: String::new() }
            } else {
                Outcome::usage(msg)
            };
        }
    };
    let work = || render(&config);
    let rendered = match config.jobs {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(work),
            Err(e) => Err(RunError::Usage(e.to_string())),
        },
        None => work(),
    };
    match rendered {
        Ok((text, ok)) => {
            if let Some(path) = &config.out {
                if let Err(e) = std::fs::write(path, &text) {
                    return Outcome { code: 1, stdout: text, stderr: format!("cannot write {path}: {e}") };
                }
            }
            Outcome { code: if ok { 0 } else { 1 }, stdout: text, stderr: String::new() }
        }
        Err(e) => Outcome::usage(format!("error: {e}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Result<RunConfig, String> {
        let argv: Vec<String> = std::iter::once("catdet").chain(args.iter().copied()).map(String::from).collect();
        RunConfig::parse(&argv)
    }

    #[test]
    fn bare_invocation_runs_the_fast_suite() {
        let c = parse(&[]).unwrap();
        assert_eq!(c.command, Command::Suite);
        assert!(!c.full);
        assert_eq!(c.format, Format::Markdown);
    }

    #[test]
    fn ids_split_on_commas_and_repeat() {
        let c = parse(&["verify", "--id", "a,b", "--id", "c"]).unwrap();
        assert_eq!(c.ids, ["a", "b", "c"]);
    }

    #[test]
    fn bounds_and_pins_reach_the_overrides() {
        let c = parse(&["suite", "--full", "--n-max", "7", "--x", "-2", "--format", "json"]).unwrap();
        assert!(c.full);
        assert_eq!(c.overrides.n_max, Some(7));
        assert_eq!(c.overrides.x, Some(-2));
        assert_eq!(c.format, Format::Json);
    }

    #[test]
    fn invalid_values_are_rejected() {
        assert!(parse(&["verify"]).is_err());
        assert!(parse(&["suite", "--n-max", "-1"]).is_err());
        assert!(parse(&["suite", "--jobs", "0"]).is_err());
        assert!(parse(&["conjecture", "--mod", "5"]).is_err());
        assert!(parse(&["suite", "--param", "n=3..x"]).is_err());
    }
}
