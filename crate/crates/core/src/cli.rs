//! Command-line front end.

use std::fs;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::bondage::{self, BondageOptions, BondageValue};
use crate::domination::{self, DEFAULT_CAP};
use crate::error::Error;
use crate::format;
use crate::graph::{Edge, EdgeSet, Graph, GridSpec, ProductKind, VertexSet};
use crate::oracle;
use crate::report;
use crate::verify::{self, grid_edge, Family, VerifyOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_RESOURCE_LIMIT: i32 = 2;
pub const EXIT_INPUT_ERROR: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "gridbond",
    version,
    about = "Exact domination and bondage numbers of path products"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Table,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyKind {
    Strong,
    Direct,
    Paths,
    Gadget,
}

#[derive(Debug, Clone, Args)]
pub struct GraphSource {
    /// Product of two paths: `--product strong 4 5`.
    #[arg(long, value_name = "KIND", conflicts_with = "file")]
    pub product: Option<ProductKind>,
    /// Path orders for `--product`.
    #[arg(num_args = 0..=2, value_name = "N M")]
    pub dims: Vec<usize>,
    /// Graph file in `p edge` format.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
    pub format: OutputFormat,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Worker threads; defaults to available parallelism.
    #[arg(long, env = "GRIDBOND_WORKERS")]
    pub workers: Option<usize>,
    /// Single worker, reproducible witnesses.
    #[arg(long)]
    pub deterministic: bool,
    /// Wall-clock budget in seconds per solver call.
    #[arg(long, value_name = "SECS")]
    pub time_budget: Option<f64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Domination number and one γ-set.
    Gamma {
        #[command(flatten)]
        source: GraphSource,
        #[command(flatten)]
        common: Common,
    },
    /// Exact bondage number and a witness edge set.
    Bondage {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long)]
        kmax: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Enumerate γ-sets.
    GammaSets {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        /// Keep only sets with pairwise disjoint closed neighborhoods.
        #[arg(long)]
        property_p: bool,
        #[command(flatten)]
        common: Common,
    },
    /// The explicit bondage set for `P_n ⊠ P_m`, checked by the solver.
    Witness {
        n: usize,
        m: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Replay the closed forms over a parameter rectangle.
    Verify(VerifyArgs),
    /// Same as `verify`.
    Sweep(VerifyArgs),
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub kind: VerifyKind,
    /// `a..b` (inclusive) or a single value.
    #[arg(long, value_parser = parse_range, default_value = "2..6")]
    pub n: RangeInclusive<usize>,
    #[arg(long, value_parser = parse_range, default_value = "2..6")]
    pub m: RangeInclusive<usize>,
    #[arg(long)]
    pub kmax: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    pub cap: usize,
    /// Budget for the whole sweep in seconds.
    #[arg(long, value_name = "SECS")]
    pub total_budget: Option<f64>,
    #[command(flatten)]
    pub common: Common,
}

pub fn parse_range(s: &str) -> std::result::Result<RangeInclusive<usize>, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("invalid number `{t}`"))
    };
    match s.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            let (a, b) = (num(a)?, num(b)?);
            if a > b {
                return Err(format!("empty range `{s}`"));
            }
            Ok(a..=b)
        }
        None => num(s).map(|v| v..=v),
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: EXIT_INPUT_ERROR,
            message: e.to_string(),
        }
    }
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_INPUT_ERROR,
        message: message.into(),
    }
}

/// A loaded graph, and its grid when it came from `--product`.
struct Loaded {
    graph: Graph,
    grid: Option<GridSpec>,
}

impl Loaded {
    fn vertex(&self, v: usize) -> serde_json::Value {
        match &self.grid {
            Some(g) => {
                let (i, j) = g.coords(v);
                json!([i, j])
            }
            None => json!(v + 1),
        }
    }

    fn vertex_text(&self, v: usize) -> String {
        match &self.grid {
            Some(g) => {
                let (i, j) = g.coords(v);
                format!("({i},{j})")
            }
            None => (v + 1).to_string(),
        }
    }

    fn set_json(&self, s: &VertexSet) -> serde_json::Value {
        s.members().iter().map(|&v| self.vertex(v)).collect()
    }

    fn set_text(&self, s: &VertexSet) -> String {
        let parts: Vec<String> = s.members().iter().map(|&v| self.vertex_text(v)).collect();
        format!("{{{}}}", parts.join(" "))
    }

    fn edge_json(&self, e: &Edge) -> serde_json::Value {
        match &self.grid {
            Some(g) => json!(grid_edge(g, e)),
            None => json!([e.u() + 1, e.v() + 1]),
        }
    }

    fn edges_text(&self, es: &EdgeSet) -> String {
        es.members()
            .iter()
            .map(|e| format!("{}-{}", self.vertex_text(e.u()), self.vertex_text(e.v())))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn load(source: &GraphSource) -> Result<Loaded, Failure> {
    match (&source.product, &source.file) {
        (Some(kind), None) => {
            let [n, m] = source.dims[..] else {
                return Err(input_error(
                    "--product needs two path orders, e.g. `--product strong 4 5`",
                ));
            };
            let grid = GridSpec::new(*kind, n, m)?;
            Ok(Loaded {
                graph: grid.graph(),
                grid: Some(grid),
            })
        }
        (None, Some(path)) => {
            if !source.dims.is_empty() {
                return Err(input_error("unexpected positional arguments with --file"));
            }
            let text = fs::read_to_string(path)
                .map_err(|e| input_error(format!("{}: {e}", path.display())))?;
            let graph = format::parse_graph(&text)
                .map_err(|e| input_error(format!("{}: {e}", path.display())))?;
            Ok(Loaded { graph, grid: None })
        }
        _ => Err(input_error(
            "exactly one graph source is required: --product KIND N M or --file PATH",
        )),
    }
}

fn workers(common: &Common) -> Result<usize, Failure> {
    if common.deterministic {
        return Ok(1);
    }
    match common.workers {
        Some(0) => Err(input_error("--workers must be at least 1")),
        Some(w) => Ok(w),
        None => Ok(std::thread::available_parallelism().map_or(1, |n| n.get())),
    }
}

fn budget(secs: Option<f64>, flag: &str) -> Result<Option<Duration>, Failure> {
    secs.map(|s| {
        Duration::try_from_secs_f64(s)
            .map_err(|_| input_error(format!("{flag} must be a non-negative number of seconds")))
    })
    .transpose()
}

fn emit(common: &Common, text: &str) -> Result<(), Failure> {
    match &common.output {
        Some(path) => fs::write(path, text).map_err(|e| Failure {
            code: EXIT_INPUT_ERROR,
            message: format!("{}: {e}", path.display()),
        }),
        None => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(text.as_bytes());
            Ok(())
        }
    }
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value");
    s.push('\n');
    s
}

fn unsupported_csv() -> Failure {
    input_error("csv output is only available for verify and sweep")
}

fn run_gamma(source: &GraphSource, common: &Common) -> Result<i32, Failure> {
    let g = load(source)?;
    let set = domination::minimum_dominating_set(&g.graph);
    let text = match common.format {
        OutputFormat::Json => pretty(&json!({
            "gamma": set.len(),
            "gamma_set": g.set_json(&set),
        })),
        OutputFormat::Table => format!("{}\ngamma-set: {}\n", set.len(), g.set_text(&set)),
        OutputFormat::Csv => return Err(unsupported_csv()),
    };
    emit(common, &text)?;
    Ok(EXIT_OK)
}

fn run_bondage(source: &GraphSource, kmax: Option<usize>, common: &Common) -> Result<i32, Failure> {
    let g = load(source)?;
    let opts = BondageOptions {
        k_max: kmax,
        workers: workers(common)?,
        deterministic: common.deterministic,
        grid: g.grid,
        time_budget: budget(common.time_budget, "--time-budget")?,
        ..Default::default()
    };
    let r = bondage::bondage_number(&g.graph, &opts)?;
    let l1 = bondage::lemma1_bound(&g.graph)?;
    let l2 = bondage::lemma2_bound(&g.graph).ok();
    let text = match common.format {
        OutputFormat::Json => pretty(&json!({
            "gamma": r.gamma,
            "bondage": r.value,
            "witness": r.witness.as_ref().map(|w| w.members().iter().map(|e| g.edge_json(e)).collect::<Vec<_>>()),
            "lemma1": l1,
            "lemma2": l2,
        })),
        OutputFormat::Table => {
            let mut s = format!("{}\n", r.value);
            if let Some(w) = &r.witness {
                s.push_str(&format!("witness: {}\n", g.edges_text(w)));
            }
            s.push_str(&format!(
                "gamma: {}  lemma1: {l1}  lemma2: {}\n",
                r.gamma,
                l2.map_or("-".into(), |v| v.to_string())
            ));
            s
        }
        OutputFormat::Csv => return Err(unsupported_csv()),
    };
    emit(common, &text)?;
    Ok(match r.value {
        BondageValue::Exact(_) => EXIT_OK,
        BondageValue::Above(_) => EXIT_RESOURCE_LIMIT,
    })
}

fn run_gamma_sets(
    source: &GraphSource,
    cap: usize,
    property_p: bool,
    common: &Common,
) -> Result<i32, Failure> {
    let g = load(source)?;
    let fam = if property_p {
        domination::property_p_gamma_sets(&g.graph, cap)?
    } else {
        domination::enumerate_gamma_sets(&g.graph, cap)?
    };
    let text = match common.format {
        OutputFormat::Json => pretty(&json!({
            "gamma": fam.gamma,
            "truncated": fam.truncated,
            "sets": fam.sets.iter().map(|s| g.set_json(s)).collect::<Vec<_>>(),
        })),
        OutputFormat::Table => {
            let mut s = format!(
                "gamma {}  sets {}{}\n",
                fam.gamma,
                fam.sets.len(),
                if fam.truncated { " (truncated)" } else { "" }
            );
            for set in &fam.sets {
                s.push_str(&g.set_text(set));
                s.push('\n');
            }
            s
        }
        OutputFormat::Csv => return Err(unsupported_csv()),
    };
    emit(common, &text)?;
    Ok(if fam.truncated {
        EXIT_RESOURCE_LIMIT
    } else {
        EXIT_OK
    })
}

fn run_witness(n: usize, m: usize, common: &Common) -> Result<i32, Failure> {
    let grid = GridSpec::new(ProductKind::Strong, n, m)?;
    let loaded = Loaded {
        graph: grid.graph(),
        grid: Some(grid),
    };
    let prediction = oracle::predict_bondage_strong(n, m)?;
    let witness = oracle::witness_bondage_set_strong(n, m)?;
    let verified = match &witness {
        Some(w) => Some(bondage::is_bondage_set(&loaded.graph, w)?),
        None => None,
    };
    let text = match common.format {
        OutputFormat::Json => pretty(&json!({
            "n": n,
            "m": m,
            "prediction": prediction,
            "witness": witness.as_ref().map(|w| w.members().iter().map(|e| loaded.edge_json(e)).collect::<Vec<_>>()),
            "verified": verified,
        })),
        OutputFormat::Table => match &witness {
            Some(w) => format!(
                "{}\nraises gamma: {}\n",
                loaded.edges_text(w),
                verified.unwrap()
            ),
            None => format!(
                "no construction for residue class {}\n",
                oracle::ResidueClass::of(n, m)
            ),
        },
        OutputFormat::Csv => return Err(unsupported_csv()),
    };
    emit(common, &text)?;
    Ok(if verified == Some(false) {
        EXIT_CHECK_FAILED
    } else {
        EXIT_OK
    })
}

fn run_verify(args: &VerifyArgs) -> Result<i32, Failure> {
    let common = &args.common;
    let opts = VerifyOptions {
        workers: workers(common)?,
        deterministic: common.deterministic,
        cap: args.cap,
        k_max: args.kmax,
        case_budget_ms: match budget(common.time_budget, "--time-budget")? {
            Some(d) => Some(d.as_millis() as u64),
            None => VerifyOptions::default().case_budget_ms,
        },
        total_budget_ms: budget(args.total_budget, "--total-budget")?.map(|d| d.as_millis() as u64),
    };
    let family = match args.kind {
        VerifyKind::Strong => Family::Strong,
        VerifyKind::Direct => Family::Direct,
        VerifyKind::Paths => Family::Path,
        VerifyKind::Gadget => Family::Gadget,
    };
    let rep = verify::sweep(family, args.n.clone(), args.m.clone(), &opts)?;
    let text = match common.format {
        OutputFormat::Json => report::to_json(&rep),
        OutputFormat::Table => report::to_table(&rep),
        OutputFormat::Csv => report::to_csv(&rep),
    };
    emit(common, &text)?;
    Ok(if rep.summary.blocking_failures() > 0 {
        EXIT_CHECK_FAILED
    } else if rep.resource_limited {
        EXIT_RESOURCE_LIMIT
    } else {
        EXIT_OK
    })
}

/// Executes a parsed command and returns the process exit status.
pub fn run(cli: &Cli) -> i32 {
    let result = match &cli.command {
        Command::Gamma { source, common } => run_gamma(source, common),
        Command::Bondage {
            source,
            kmax,
            common,
        } => run_bondage(source, *kmax, common),
        Command::GammaSets {
            source,
            cap,
            property_p,
            common,
        } => run_gamma_sets(source, *cap, *property_p, common),
        Command::Witness { n, m, common } => run_witness(*n, *m, common),
        Command::Verify(args) | Command::Sweep(args) => run_verify(args),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

/// Parses `args` (including the program name) and runs; clap usage errors map to exit 3.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let _ = e.print();
            match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    EXIT_OK
                }
                _ => EXIT_INPUT_ERROR,
            }
        }
    }
}
