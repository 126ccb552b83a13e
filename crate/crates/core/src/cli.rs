//! Command-line front end: `construct`, `verify`, `search` and `table`.
//!
//! JSON goes to stdout and a one-line summary to stderr. Exit codes: 0 ok,
//! 1 negative verdict, 2 bad parameters, 3 I/O or parse failure,
//! 4 discrepancy between a claim and its verification.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use crate::constructions::{self, CliquePart, Construction};
use crate::error::{Error, Result};
use crate::graph::io::{parse_any, render, GraphFormat};
use crate::provenance::ConstructionSpec;
use crate::saturation::{self, Report, Target};
use crate::search::{self, append_jsonl, BaseStore, SearchMode, SearchOptions, SearchTarget, TableOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_PARAMS: i32 = 2;
pub const EXIT_IO: i32 = 3;
pub const EXIT_DISCREPANCY: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "satforge", version, about = "Regular saturated graphs from symmetric subsets of Z_n")]
pub struct Cli {
    /// TOML file presetting jobs, budget, max_orbit_pairs, mode, base_dir, first_hit_cap, certify_cap.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    /// Directory of stored K_s-saturated circulant bases.
    #[arg(long, global = true)]
    pub base_dir: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a family member, verify it and print the report.
    Construct(ConstructArgs),
    /// Check a graph6 or edge-list JSON graph for saturation.
    Verify(VerifyArgs),
    /// Search symmetric connection sets.
    Search(SearchArgs),
    /// Reproduce the C5 circulant table as CSV.
    Table(TableArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    G3,
    H4,
    Gprime,
    K4,
    K5,
    LargeClique,
    OddCycle,
    Petersen,
    Join,
    Blowup,
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    pub family: FamilyArg,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub alpha: Option<usize>,
    #[arg(long)]
    pub delta: Option<usize>,
    /// 1: K_{2δ+1} family, 2: K_{2δ+2} family.
    #[arg(long)]
    pub part: Option<usize>,
    /// Left operand of `join`, as an expression such as `g3(7,0)`.
    #[arg(long)]
    pub left: Option<String>,
    /// Right operand of `join`.
    #[arg(long)]
    pub right: Option<String>,
    /// Base graph of `blowup`.
    #[arg(long)]
    pub base: Option<String>,
    /// Blow-up factor.
    #[arg(long)]
    pub t: Option<usize>,
    /// Forbidden subgraph, `clique:s` or `cycle:m`; required for join and blowup.
    #[arg(long)]
    pub target: Option<Target>,
    /// Write the graph here.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value = "graph6")]
    pub format: GraphFormat,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// graph6 or edge-list JSON file; `-` reads stdin.
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub target: Target,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SearchTargetArg {
    CycleSets,
    CliqueCirculants,
    CompleteK1,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub target: SearchTargetArg,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub s: Option<usize>,
    #[arg(long)]
    pub mode: Option<SearchMode>,
    #[arg(long)]
    pub budget: Option<u64>,
    #[arg(long)]
    pub max_orbit_pairs: Option<usize>,
    /// Worker threads (0: all cores).
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Append the result to this JSONL file.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Do not store clique-circulant hits as base graphs.
    #[arg(long)]
    pub no_store: bool,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[arg(long)]
    pub jobs: Option<usize>,
    #[arg(long)]
    pub first_hit_cap: Option<usize>,
    /// Orbit cap for the exceptional orders; unrestricted by default.
    #[arg(long)]
    pub certify_cap: Option<usize>,
    /// Also write the CSV here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Presets read from `--config`; command-line flags take precedence.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub jobs: Option<usize>,
    pub budget: Option<u64>,
    pub max_orbit_pairs: Option<usize>,
    pub mode: Option<SearchMode>,
    pub base_dir: Option<PathBuf>,
    pub first_hit_cap: Option<usize>,
    pub certify_cap: Option<usize>,
}

impl Config {
    pub fn load(path: &Path) -> Result<Config> {
        toml::from_str(&fs::read_to_string(path)?).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidArgument(_) | Error::UnsupportedParameters { .. } => EXIT_PARAMS,
        Error::Parse(_) | Error::Io(_) | Error::Json(_) => EXIT_IO,
        Error::ConstructionDiscrepancy { .. } | Error::TableDiscrepancy(_) => EXIT_DISCREPANCY,
    }
}

fn need<T>(v: Option<T>, flag: &str, family: &str) -> Result<T> {
    v.ok_or_else(|| Error::invalid(format!("{family} needs --{flag}")))
}

fn build(a: &ConstructArgs, store: &BaseStore) -> Result<Construction> {
    let f = match a.family {
        FamilyArg::G3 => "g3",
        FamilyArg::H4 => "h4",
        FamilyArg::Gprime => "gprime",
        FamilyArg::K4 => "k4",
        FamilyArg::K5 => "k5",
        FamilyArg::LargeClique => "large-clique",
        FamilyArg::OddCycle => "odd-cycle",
        FamilyArg::Petersen => "petersen",
        FamilyArg::Join => "join",
        FamilyArg::Blowup => "blowup",
    };
    let mut c = match a.family {
        FamilyArg::G3 => constructions::g3(need(a.k, "k", f)?, need(a.r, "r", f)?)?,
        FamilyArg::H4 => constructions::h4(need(a.k, "k", f)?)?,
        FamilyArg::Gprime => constructions::gprime(need(a.k, "k", f)?)?,
        FamilyArg::K4 => constructions::k4_family(need(a.n, "n", f)?, store)?,
        FamilyArg::K5 => constructions::k5_family(need(a.n, "n", f)?)?,
        FamilyArg::LargeClique => constructions::large_clique_family(
            need(a.delta, "delta", f)?,
            need(a.k, "k", f)?,
            need(a.r, "r", f)?,
            CliquePart::from_index(need(a.part, "part", f)?)?,
        )?,
        FamilyArg::OddCycle => constructions::c_odd_cycle(need(a.alpha, "alpha", f)?, need(a.k, "k", f)?)?,
        FamilyArg::Petersen => constructions::g3(3, 1)?,
        FamilyArg::Join | FamilyArg::Blowup => {
            let spec = if a.family == FamilyArg::Join {
                let left: ConstructionSpec = need(a.left.as_deref(), "left", f)?.parse()?;
                let right: ConstructionSpec = need(a.right.as_deref(), "right", f)?.parse()?;
                ConstructionSpec::join(left, right)
            } else {
                let base: ConstructionSpec = need(a.base.as_deref(), "base", f)?.parse()?;
                ConstructionSpec::blow_up(base, need(a.t, "t", f)?)
            };
            let graph = spec.build()?;
            let claim = constructions::Claim { n: graph.order(), degree: None, target: need(a.target, "target", f)? };
            Construction { graph, spec, claim }
        }
    };
    if let Some(t) = a.target {
        c.claim.target = t;
    }
    Ok(c)
}

fn write_out(path: &Path, text: &str) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir)?;
    }
    fs::write(path, text)?;
    Ok(())
}

fn cmd_construct(a: &ConstructArgs, store: &BaseStore, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let c = build(a, store)?;
    if let Some(path) = &a.out {
        write_out(path, &render(&c.graph, a.format))?;
    }
    let report: Report = c.verify()?;
    writeln!(out, "{}", serde_json::to_string(&report)?)?;
    let ok = c.claim_holds(&report);
    writeln!(
        err,
        "{}: n={} degree={:?} target={} verdict={}{}",
        c.spec,
        report.n,
        report.degree,
        report.target,
        report.verdict,
        if ok { "" } else { " (claim not confirmed)" }
    )?;
    Ok(if ok { EXIT_OK } else { EXIT_DISCREPANCY })
}

fn read_input(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        Ok(fs::read_to_string(path)?)
    }
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let g = parse_any(&read_input(&a.graph)?)?;
    let v = saturation::check(&g, a.target)?;
    writeln!(out, "{}", serde_json::to_string(&v)?)?;
    writeln!(err, "n={} degree={:?} {}: {}", g.order(), v.regular, v.target, v.verdict)?;
    Ok(if v.is_saturated() { EXIT_OK } else { EXIT_NEGATIVE })
}

fn cmd_search(a: &SearchArgs, cfg: &Config, store: &BaseStore, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let target = match a.target {
        SearchTargetArg::CycleSets => SearchTarget::CycleSets { k: need(a.k, "k", "cycle-sets")? },
        SearchTargetArg::CliqueCirculants => SearchTarget::CliqueCirculants { s: need(a.s, "s", "clique-circulants")? },
        SearchTargetArg::CompleteK1 => SearchTarget::CompleteK1 { k: need(a.k, "k", "complete-k1")? },
    };
    let opts = SearchOptions {
        max_orbit_pairs: a.max_orbit_pairs.or(cfg.max_orbit_pairs),
        budget: a.budget.or(cfg.budget),
        mode: a.mode.or(cfg.mode).unwrap_or_default(),
        threads: a.jobs.or(cfg.jobs).unwrap_or(1),
    };
    let job = search::SearchJob {
        n: a.n,
        target,
        max_orbit_pairs: opts.max_orbit_pairs,
        budget: opts.budget,
        mode: opts.mode,
    };
    let result = search::run(&job, opts.threads)?;
    if let Some(path) = &a.out {
        append_jsonl(path, &result)?;
    }
    if let (SearchTarget::CliqueCirculants { s }, Some(hit), false) = (target, result.hits.first(), a.no_store) {
        store.store(&hit.set, s)?;
        if let Some(dir) = store.dir() {
            writeln!(err, "stored base {}_{s}.json in {}", a.n, dir.display())?;
        }
    }
    writeln!(out, "{}", serde_json::to_string(&result)?)?;
    writeln!(
        err,
        "n={} {}: {} hit(s), exhausted={}, nodes={}{}",
        a.n,
        target,
        result.hits.len(),
        result.exhausted,
        result.nodes_expanded,
        result.hits.first().map(|h| format!(", first {:?}", h.set)).unwrap_or_default()
    )?;
    Ok(EXIT_OK)
}

fn cmd_table(a: &TableArgs, cfg: &Config, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let defaults = TableOptions::default();
    let opts = TableOptions {
        threads: a.jobs.or(cfg.jobs).unwrap_or(defaults.threads),
        first_hit_cap: a.first_hit_cap.or(cfg.first_hit_cap).unwrap_or(defaults.first_hit_cap),
        certify_cap: a.certify_cap.or(cfg.certify_cap),
    };
    let report = search::reproduce_table(&opts)?;
    let text = report.render()?;
    if let Some(path) = &a.out {
        write_out(path, &text)?;
    }
    write!(out, "{text}")?;
    let verified = report.rows.iter().filter(|r| r.status == search::RowStatus::Verified).count();
    writeln!(err, "{verified} listed rows verified, {} deviation(s)", report.diff.len())?;
    Ok(if report.is_clean() { EXIT_OK } else { EXIT_DISCREPANCY })
}

/// Runs a parsed command line, writing JSON to `out` and summaries to `err`.
pub fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let cfg = match &cli.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    let store = match cli.base_dir.clone().or_else(|| cfg.base_dir.clone()) {
        Some(dir) => BaseStore::open(dir),
        None => BaseStore::from_env(),
    };
    match &cli.command {
        Command::Construct(a) => cmd_construct(a, &store, out, err),
        Command::Verify(a) => cmd_verify(a, out, err),
        Command::Search(a) => cmd_search(a, &cfg, &store, out, err),
        Command::Table(a) => cmd_table(a, &cfg, out, err),
    }
}

/// Parses `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_PARAMS } else { EXIT_OK };
        }
    };
    match execute(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
