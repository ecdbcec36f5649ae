use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use cubmatch_cli::commands::{
    complex_report, fixture_dump, fixture_list, fixture_table, poly_report, read_graph, ComplexOptions, PolyKind,
};
use cubmatch_cli::corpus::{fixture_dir, write_fixtures, Corpus, FIXTURE_DIR_ENV};
use cubmatch_cli::verify::{self, Bounds, Context, Scope};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "cubmatch", version, about = "Cubical matching complexes of planar graphs")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Args, Clone)]
struct BoundArgs {
    /// Seed for randomized collapse restarts.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest ladder length (corpus and enumeration cross-checks).
    #[arg(long, default_value_t = 8)]
    max_n: usize,
    /// Largest d for the A_d identities.
    #[arg(long, default_value_t = 8)]
    max_d: usize,
    /// Randomized collapse restarts.
    #[arg(long, default_value_t = 64)]
    budget: usize,
}

impl BoundArgs {
    fn bounds(&self) -> Bounds {
        Bounds {
            max_n: self.max_n,
            max_d: self.max_d,
            budget: self.budget,
            seed: self.seed,
            ..Bounds::default()
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build the cubical matching complex of a graph and report its invariants.
    Complex {
        /// Graph JSON or polyomino text file.
        input: Option<PathBuf>,
        /// Use a corpus fixture instead of a file.
        #[arg(long, conflicts_with = "input")]
        fixture: Option<String>,
        /// Report Z/2 Betti numbers.
        #[arg(long)]
        betti: bool,
        /// Search for a collapse to a point.
        #[arg(long)]
        collapse: bool,
        /// Print cube coordinates of every vertex.
        #[arg(long)]
        coords: bool,
        #[command(flatten)]
        bounds: BoundArgs,
    },
    /// Compute F, P, A_d or closed-form polynomials with a cross-check.
    Poly {
        #[arg(value_enum)]
        kind: PolyArg,
        /// n for F, P and closed; d then argument coefficients for A.
        #[arg(required = true, allow_negative_numbers = true)]
        args: Vec<i64>,
        /// Bump position for F and P.
        #[arg(long)]
        bump: Option<usize>,
        #[command(flatten)]
        bounds: BoundArgs,
    },
    /// Run the property catalog over the fixture corpus.
    Verify {
        /// `all` or one of graphs, complex, links, topology, polynomials.
        #[arg(default_value = "all")]
        scope: String,
        #[command(flatten)]
        bounds: BoundArgs,
    },
    /// Inspect the fixture corpus.
    Fixtures {
        #[command(subcommand)]
        action: FixtureAction,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PolyArg {
    #[value(name = "F", alias = "f")]
    F,
    #[value(name = "P", alias = "p")]
    P,
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "closed")]
    Closed,
}

#[derive(Subcommand)]
enum FixtureAction {
    /// List every fixture.
    List {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
    },
    /// Print one fixture as graph JSON.
    Dump {
        name: String,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
    },
    /// Regenerate the pinned fixture files into a directory.
    Write { dir: PathBuf },
}

fn emit<T: Serialize>(format: Format, value: &T, table: impl FnOnce() -> String) -> Result<()> {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(value)?),
        Format::Table => print!("{}", table()),
    }
    Ok(())
}

fn load_corpus(max_n: usize) -> Result<Corpus> {
    let dir = fixture_dir();
    Corpus::load(&dir, max_n).map_err(|e| e.context(format!("loading fixtures (set {FIXTURE_DIR_ENV} to override)")))
}

fn run(cli: Cli) -> Result<bool> {
    let format = cli.format;
    match cli.command {
        Command::Complex { input, fixture, betti, collapse, coords, bounds } => {
            let opts = ComplexOptions {
                betti,
                collapse,
                coordinates: coords,
                budget: bounds.budget,
                seed: bounds.seed,
            };
            let report = match (input, fixture) {
                (Some(path), None) => complex_report(&path.display().to_string(), &read_graph(&path)?, opts)?,
                (None, Some(name)) => {
                    let corpus = load_corpus(bounds.max_n)?;
                    let Some(fx) = corpus.get(&name) else {
                        bail!("no fixture named {name:?}; try `fixtures list`");
                    };
                    complex_report(&name, &fx.graph, opts)?
                }
                _ => bail!("give an input file or --fixture NAME"),
            };
            emit(format, &report, || report.to_table())?;
            Ok(true)
        }
        Command::Poly { kind, args, bump, bounds } => {
            let kind = match kind {
                PolyArg::F => PolyKind::F,
                PolyArg::P => PolyKind::P,
                PolyArg::A => PolyKind::A,
                PolyArg::Closed => PolyKind::Closed,
            };
            let report = poly_report(kind, &args, bump, bounds.max_n)?;
            emit(format, &report, || report.to_table())?;
            Ok(report.agrees)
        }
        Command::Verify { scope, bounds } => {
            let scope: Scope = scope.parse().map_err(anyhow::Error::msg)?;
            let bounds = bounds.bounds();
            let corpus = load_corpus(bounds.max_n)?;
            let report = verify::run(scope, &Context { corpus: &corpus, bounds: &bounds });
            emit(format, &report, || report.to_table())?;
            Ok(report.all_passed())
        }
        Command::Fixtures { action } => match action {
            FixtureAction::List { max_n } => {
                let list = fixture_list(&load_corpus(max_n)?);
                emit(format, &list, || fixture_table(&list))?;
                Ok(true)
            }
            FixtureAction::Dump { name, max_n } => {
                print!("{}", fixture_dump(&load_corpus(max_n)?, &name)?);
                Ok(true)
            }
            FixtureAction::Write { dir } => {
                write_fixtures(&dir)?;
                Ok(true)
            }
        },
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
