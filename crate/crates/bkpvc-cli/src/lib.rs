//! The `bkpvc` command-line front end.
//!
//! Exit codes: 0 on success (verify passed, campaign clean), 1 on a semantic
//! failure (cover violation, not-a-cover, campaign violations), 2 on usage
//! or input errors.

pub mod campaign;

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use bkpvc::{
    gen_directed_extremal, gen_random, gen_undirected_extremal, lower_bound, peel_certificate,
    reduce_to_directed, solve, solve_bruteforce, verify_fast, CoverSet, Error, Forest, ForestDoc,
    ForestKind, Verdict,
};
use campaign::{CampaignConfig, CampaignReport, CampaignSummary};

#[derive(Parser)]
#[command(
    name = "bkpvc",
    version,
    about = "Branching k-path vertex covers of forests: verify, solve, bound, certify, reduce, generate, campaign"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Directed,
    Undirected,
}

impl From<KindArg> for ForestKind {
    fn from(kind: KindArg) -> Self {
        match kind {
            KindArg::Directed => ForestKind::Directed,
            KindArg::Undirected => ForestKind::Undirected,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    DirectedExtremal,
    UndirectedExtremal,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ForestFormat {
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Jsonl,
    Csv,
}

#[derive(Subcommand)]
pub enum Command {
    /// Check whether a vertex set is a branching k-path vertex cover.
    Verify {
        /// Forest document (JSON).
        #[arg(long)]
        forest: PathBuf,
        /// Window size (k ≥ 2).
        #[arg(long)]
        k: usize,
        /// Comma-separated vertex ids, a JSON array, or @file.
        #[arg(long)]
        cover: String,
    },
    /// Compute the minimum cover size and a witness.
    Solve {
        #[arg(long)]
        forest: PathBuf,
        #[arg(long)]
        k: usize,
        /// Use the brute-force oracle (errors above its cutoff).
        #[arg(long)]
        oracle: bool,
    },
    /// Evaluate the lower bound for a vertex count.
    Bound {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Produce a peeling certificate for a cover of a rooted directed forest.
    Certify {
        #[arg(long)]
        forest: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        cover: String,
    },
    /// Remove one leaf per component of an undirected forest and orient the
    /// rest away from the new roots.
    Reduce {
        #[arg(long)]
        forest: PathBuf,
    },
    /// Construct extremal family members or seeded random forests.
    Generate(GenerateArgs),
    /// Sweep random forests over an (n, k) grid and compare the exact cover
    /// size against the lower bound.
    Campaign(CampaignArgs),
}

#[derive(Args)]
pub struct GenerateArgs {
    /// Extremal family to construct.
    #[arg(long, value_enum, conflicts_with = "random")]
    pub family: Option<FamilyArg>,
    /// Family index (i ≥ 1).
    #[arg(long)]
    pub i: Option<usize>,
    /// Window size (k ≥ 2).
    #[arg(long)]
    pub k: Option<usize>,
    /// Generate a seeded random forest instead.
    #[arg(long)]
    pub random: bool,
    #[arg(long, value_enum)]
    pub kind: Option<KindArg>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Probability that a vertex starts a new component.
    #[arg(long, default_value_t = 0.2)]
    pub bias: f64,
    /// Emit DOT instead of JSON (same as --format dot).
    #[arg(long)]
    pub dot: bool,
    #[arg(long, value_enum, default_value_t = ForestFormat::Json)]
    pub format: ForestFormat,
}

#[derive(Args)]
pub struct CampaignArgs {
    #[arg(long, value_enum)]
    pub kind: KindArg,
    #[arg(long)]
    pub n_min: usize,
    #[arg(long)]
    pub n_max: usize,
    #[arg(long, default_value_t = 2)]
    pub k_min: usize,
    #[arg(long)]
    pub k_max: usize,
    /// Random forests per (n, k) cell.
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 0.2)]
    pub bias: f64,
    /// Also run the extremal family members that fit the n range.
    #[arg(long)]
    pub include_extremal: bool,
    #[arg(long, value_enum, default_value_t = ReportFormat::Jsonl)]
    pub format: ReportFormat,
}

#[derive(Debug)]
enum CliError {
    Input(String),
    Lib(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(msg) => write!(f, "{msg}"),
            CliError::Lib(e) => write!(f, "{e}"),
        }
    }
}

/// Runs a parsed command line; returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            2
        }
    }
}

fn dispatch(command: Command) -> Result<i32, CliError> {
    match command {
        Command::Verify { forest, k, cover } => {
            let forest = load_forest(&forest)?;
            let cover = parse_cover(&cover)?;
            match verify_fast(&forest, k, &cover)? {
                Verdict::Valid => {
                    println!("{}", json!({ "ok": true }));
                    Ok(0)
                }
                Verdict::Invalid(violation) => {
                    println!(
                        "{}",
                        serde_json::to_string(&violation).expect("serializable")
                    );
                    Ok(1)
                }
            }
        }
        Command::Solve { forest, k, oracle } => {
            let forest = load_forest(&forest)?;
            let result = if oracle {
                solve_bruteforce(&forest, k)?
            } else {
                solve(&forest, k)?
            };
            println!("{}", serde_json::to_string(&result).expect("serializable"));
            Ok(0)
        }
        Command::Bound { kind, n, k } => {
            let kind = ForestKind::from(kind);
            let bound = lower_bound(kind, n, k)?;
            let output = BoundOutput {
                kind: kind_name(kind),
                n,
                k,
                numerator: bound.numerator,
                denominator: bound.denominator,
                ceiling: bound.ceiling,
            };
            println!("{}", serde_json::to_string(&output).expect("serializable"));
            Ok(0)
        }
        Command::Certify { forest, k, cover } => {
            let forest = load_forest(&forest)?;
            let Forest::Directed(directed) = &forest else {
                return Err(CliError::Input(
                    "certify needs a directed forest document".into(),
                ));
            };
            let cover = parse_cover(&cover)?;
            match peel_certificate(directed, k, &cover) {
                Ok(trace) => {
                    println!("{}", serde_json::to_string(&trace).expect("serializable"));
                    Ok(0)
                }
                Err(Error::NotACover(violation)) => {
                    println!(
                        "{}",
                        serde_json::to_string(&violation).expect("serializable")
                    );
                    Ok(1)
                }
                Err(other) => Err(other.into()),
            }
        }
        Command::Reduce { forest } => {
            let forest = load_forest(&forest)?;
            let Forest::Undirected(undirected) = &forest else {
                return Err(CliError::Input(
                    "reduce needs an undirected forest document".into(),
                ));
            };
            let reduction = reduce_to_directed(undirected, 2)?;
            let output = ReduceOutput {
                h: Forest::Directed(reduction.forest.clone()).to_doc(),
                removed_per_component: reduction
                    .removed_per_component
                    .iter()
                    .map(|&(removed, new_root)| RemovedComponent { removed, new_root })
                    .collect(),
                p: reduction.component_count,
                to_original: reduction.to_original.clone(),
            };
            println!("{}", serde_json::to_string(&output).expect("serializable"));
            Ok(0)
        }
        Command::Generate(args) => {
            let forest = generate(&args)?;
            let dot = args.dot || args.format == ForestFormat::Dot;
            if dot {
                print!("{}", forest.to_dot());
            } else {
                println!("{}", forest.to_json_string());
            }
            Ok(0)
        }
        Command::Campaign(args) => {
            let config = CampaignConfig {
                kind: args.kind.into(),
                n_min: args.n_min,
                n_max: args.n_max,
                k_min: args.k_min,
                k_max: args.k_max,
                trials_per_cell: args.trials,
                seed: args.seed,
                component_bias: args.bias,
                include_extremal: args.include_extremal,
            };
            let report =
                campaign::run_campaign(&config).map_err(|e| CliError::Input(e.to_string()))?;
            print_report(&report, args.format);
            Ok(if report.summary.violations == 0 { 0 } else { 1 })
        }
    }
}

fn generate(args: &GenerateArgs) -> Result<Forest, CliError> {
    if let Some(family) = args.family {
        let i = args
            .i
            .ok_or_else(|| CliError::Input("--family needs --i".into()))?;
        let k = args
            .k
            .ok_or_else(|| CliError::Input("--family needs --k".into()))?;
        return Ok(match family {
            FamilyArg::DirectedExtremal => Forest::Directed(gen_directed_extremal(i, k)?),
            FamilyArg::UndirectedExtremal => Forest::Undirected(gen_undirected_extremal(i, k)?),
        });
    }
    if args.random {
        let kind = args
            .kind
            .ok_or_else(|| CliError::Input("--random needs --kind".into()))?;
        let n = args
            .n
            .ok_or_else(|| CliError::Input("--random needs --n".into()))?;
        let seed = args
            .seed
            .ok_or_else(|| CliError::Input("--random needs --seed".into()))?;
        return Ok(gen_random(kind.into(), n, seed, args.bias)?);
    }
    Err(CliError::Input(
        "generate needs either --family or --random".into(),
    ))
}

#[derive(Serialize)]
struct BoundOutput {
    kind: &'static str,
    n: usize,
    k: usize,
    numerator: usize,
    denominator: usize,
    ceiling: usize,
}

#[derive(Serialize)]
struct RemovedComponent {
    removed: usize,
    new_root: Option<usize>,
}

#[derive(Serialize)]
struct ReduceOutput {
    h: ForestDoc,
    removed_per_component: Vec<RemovedComponent>,
    p: usize,
    to_original: Vec<usize>,
}

#[derive(Serialize)]
struct SummaryLine<'a> {
    summary: &'a CampaignSummary,
}

fn print_report(report: &CampaignReport, format: ReportFormat) {
    let summary_line = serde_json::to_string(&SummaryLine {
        summary: &report.summary,
    })
    .expect("serializable");
    match format {
        ReportFormat::Jsonl => {
            for record in &report.records {
                println!("{}", serde_json::to_string(record).expect("serializable"));
            }
            println!("{summary_line}");
        }
        ReportFormat::Csv => {
            println!("kind,source,n,k,psi_b,bound_ceiling,gap");
            for r in &report.records {
                println!(
                    "{},{},{},{},{},{},{}",
                    r.kind, r.source, r.n, r.k, r.psi_b, r.bound_ceiling, r.gap
                );
            }
            eprintln!("{summary_line}");
        }
    }
}

fn kind_name(kind: ForestKind) -> &'static str {
    match kind {
        ForestKind::Directed => "directed",
        ForestKind::Undirected => "undirected",
    }
}

fn load_forest(path: &Path) -> Result<Forest, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    Ok(Forest::from_json_str(&text)?)
}

/// Accepts `0,3,7`, a JSON array like `[0,3,7]`, or `@file` holding either.
fn parse_cover(spec: &str) -> Result<CoverSet, CliError> {
    let text = match spec.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read {path}: {e}")))?,
        None => spec.to_string(),
    };
    let trimmed = text.trim();
    if trimmed.starts_with('[') {
        let ids: Vec<usize> = serde_json::from_str(trimmed)
            .map_err(|e| CliError::Input(format!("bad cover JSON: {e}")))?;
        return Ok(ids.into_iter().collect());
    }
    if trimmed.is_empty() {
        return Ok(CoverSet::new());
    }
    trimmed
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|e| CliError::Input(format!("bad cover id {part:?}: {e}")))
        })
        .collect::<Result<CoverSet, _>>()
}
