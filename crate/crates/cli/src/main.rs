//! `operad-forest`: batch front end for the tree-algebra library.
//!
//! Exit codes: 0 all checks pass, 1 a mathematical assertion failed,
//! 2 usage or resource error.

mod commands;
mod config;
mod error;
mod report;
mod suites;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use commands::{EnumKind, MapName, Output, ProductOp, SeriesTarget};
use config::{Bounds, Limits};
use error::{usage, CliError};
use report::RunReport;
use suites::{Suite, SuiteArgs};

#[derive(Debug, Parser)]
#[command(name = "operad-forest", version, about = "Exact computations in free tree algebras")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for exhaustive scans and matrix assembly.
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: Option<u16>,
    /// Raise the arity bound to `big_n` (default 7).
    #[arg(long, global = true)]
    big: bool,
    /// TOML file with resource bounds.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Replace the arity bound.
    #[arg(long, global = true, env = "OPERAD_FOREST_MAX_N")]
    max_n: Option<usize>,
    /// Report wall-clock time (makes output run-dependent).
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List a basis in the term grammar.
    Enumerate {
        #[arg(long, value_enum)]
        kind: EnumKind,
        /// Arity (labels or leaves).
        #[arg(long)]
        n: Option<usize>,
        /// Leaves, for planar binary trees.
        #[arg(long, conflicts_with = "n")]
        leaves: Option<usize>,
        /// Generators labelling planar binary trees.
        #[arg(long, default_value_t = 1)]
        generators: u32,
        /// Print only the count.
        #[arg(long)]
        count_only: bool,
    },
    /// Multiply two terms (or JSON linear combinations).
    Product {
        #[arg(long, value_enum)]
        op: ProductOp,
        lhs: String,
        rhs: String,
        /// Evaluate λ-polynomial coefficients at this value.
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
    },
    /// Apply a morphism or structural map to a term.
    Map {
        #[arg(long, value_enum)]
        name: MapName,
        term: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        /// Leaf generators for mag-to-dend, e.g. "1:1,2:2,3:1".
        #[arg(long)]
        generators: Option<String>,
    },
    /// Red/black decomposition of one tree or of every tree on n vertices.
    Decompose {
        #[arg(required_unless_present = "all")]
        tree: Option<String>,
        #[arg(long, conflicts_with = "tree")]
        all: Option<usize>,
        /// With --all: print only the number of all-red trees.
        #[arg(long, requires = "all")]
        count_x: bool,
    },
    /// Run a certification suite.
    Check {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        order: Option<usize>,
        /// Filtration: restrict to trees T of this root degree.
        #[arg(long)]
        degree: Option<usize>,
        /// Injectivity: phi, phi-tilde, commag-to-mag or mag-to-dend@<λ>.
        #[arg(long)]
        map: Option<String>,
        /// Dend relations: also check at this value of λ.
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
    },
    /// Dimension sequences from generating series.
    Series {
        #[arg(long, value_enum, default_value = "x")]
        target: SeriesTarget,
        #[arg(long)]
        order: Option<usize>,
    },
    /// Dump the golden corpus of worked examples.
    Fixtures,
}

enum Done {
    Output(Output),
    Report(RunReport),
}

fn execute(cli: &Cli, argv: Vec<String>) -> Result<Done, CliError> {
    let limits = Limits::new(Bounds::load(cli.config.as_deref())?, cli.big, cli.max_n);
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs as usize)
            .build_global()
            .map_err(|e| usage(format!("cannot size the worker pool: {e}")))?;
    }
    let start = Instant::now();
    let out = match &cli.command {
        Command::Enumerate {
            kind,
            n,
            leaves,
            generators,
            count_only,
        } => commands::enumerate(*kind, n.or(*leaves), *generators, *count_only, &limits)?,
        Command::Product { op, lhs, rhs, lambda } => commands::product(*op, lhs, rhs, lambda.as_deref())?,
        Command::Map {
            name,
            term,
            lambda,
            generators,
        } => commands::map(*name, term, lambda.as_deref(), generators.as_deref())?,
        Command::Decompose { tree, all, count_x } => match (tree, all) {
            (_, Some(n)) => commands::decompose_all(*n, *count_x, &limits)?,
            (Some(t), None) => commands::decompose_one(t)?,
            (None, None) => return Err(usage("decompose needs a tree or --all")),
        },
        Command::Check {
            suite,
            n,
            order,
            degree,
            map,
            lambda,
        } => {
            let args = SuiteArgs {
                n: *n,
                order: *order,
                degree: *degree,
                map: map.clone(),
                lambda: lambda.clone(),
            };
            let outcome = suites::run(*suite, &args, &limits)?;
            let elapsed = cli.timings.then(|| start.elapsed());
            return Ok(Done::Report(RunReport::new(argv, &suite.name(), outcome, elapsed)));
        }
        Command::Series { target, order } => commands::series(*target, *order, &limits)?,
        Command::Fixtures => commands::fixtures(),
    };
    if cli.timings {
        eprintln!("elapsed: {} ms", start.elapsed().as_millis());
    }
    Ok(Done::Output(out))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let argv: Vec<String> = std::env::args().skip(1).collect();
    match execute(&cli, argv) {
        Ok(Done::Output(out)) => {
            if cli.json {
                println!("{}", out.json);
            } else {
                println!("{}", out.text);
            }
            ExitCode::SUCCESS
        }
        Ok(Done::Report(report)) => {
            if cli.json {
                println!("{}", serde_json::to_string(&report).expect("report serializes"));
            } else {
                println!("{}", report.to_text());
            }
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
