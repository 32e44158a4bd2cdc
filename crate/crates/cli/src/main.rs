use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ls_crystal::explorer::{explore, weight_multiplicities};
use ls_crystal::export::{write_to, Format};
use ls_crystal::verify::{run, Suite, VerifyConfig};
use ls_crystal::weyl::act;
use ls_crystal::{BigGraph, BigPath, BigWeight, CartanMatrix, Error, OrderConfig, WeylGroup};
use num_bigint::BigInt;

const EXIT_VERIFY: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "lscrystal",
    version,
    about = "Explore and check LS path crystals in rank 2"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct CartanArgs {
    #[arg(long)]
    a1: u32,
    #[arg(long)]
    a2: u32,
}

impl CartanArgs {
    fn matrix(&self) -> Result<CartanMatrix, Failure> {
        CartanMatrix::new(self.a1, self.a2).map_err(Failure::Usage)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Operators,
    Order,
    Extremal,
    Similarity,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Explore B(shape) around a seed and export the graph.
    Explore {
        #[command(flatten)]
        cartan: CartanArgs,
        /// Shape as M1,M2.
        #[arg(long, default_value = "1,-1", allow_hyphen_values = true)]
        shape: String,
        #[arg(long)]
        depth: u32,
        /// Seed path in canonical text form; defaults to the straight path.
        #[arg(long)]
        seed: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the truncated weight tally as weight:count lines.
    Character {
        #[command(flatten)]
        cartan: CartanArgs,
        #[arg(long, default_value = "1,-1", allow_hyphen_values = true)]
        shape: String,
        #[arg(long)]
        depth: u32,
    },
    /// Print w -> w(weight) for all words up to a length.
    Orbit {
        #[command(flatten)]
        cartan: CartanArgs,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long)]
        max_length: u32,
    },
    /// Run a verification suite on the crystal of Lambda_1 - Lambda_2.
    Verify {
        #[command(flatten)]
        cartan: CartanArgs,
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long, default_value_t = 6)]
        depth: u32,
        #[arg(long, default_value_t = 6)]
        word_bound: u32,
    },
}

enum Failure {
    Usage(Error),
    Verify(String),
    Io(io::Error),
}

fn output(path: Option<&PathBuf>) -> Result<Box<dyn Write>, Failure> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).map_err(Failure::Io)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn seed_path(cm: CartanMatrix, shape: &BigWeight, seed: Option<&str>) -> Result<BigPath, Failure> {
    match seed {
        Some(text) => BigPath::parse(cm, shape.clone(), text).map_err(Failure::Usage),
        None => Ok(BigPath::highest(cm, shape.clone())),
    }
}

fn explore_graph(cm: CartanMatrix, shape: &str, depth: u32, seed: Option<&str>) -> Result<BigGraph, Failure> {
    let shape = BigWeight::parse(shape).map_err(Failure::Usage)?;
    let seed = seed_path(cm, &shape, seed)?;
    explore(&seed, depth, &OrderConfig::default()).map_err(|e| match e {
        Error::Audit(_) => Failure::Verify(e.to_string()),
        other => Failure::Usage(other),
    })
}

fn execute(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Explore {
            cartan,
            shape,
            depth,
            seed,
            format,
            out,
        } => {
            let g = explore_graph(cartan.matrix()?, &shape, depth, seed.as_deref())?;
            let format = match format {
                FormatArg::Json => Format::Json,
                FormatArg::Dot => Format::Dot,
            };
            write_to(&g, format, output(out.as_ref())?).map_err(Failure::Io)
        }
        Command::Character { cartan, shape, depth } => {
            let g = explore_graph(cartan.matrix()?, &shape, depth, None)?;
            let mut out = output(None)?;
            let write = |out: &mut Box<dyn Write>| -> io::Result<()> {
                writeln!(
                    out,
                    "# cartan=({},{}) shape={} depth={} nodes={} (tally truncated at depth)",
                    cartan.a1,
                    cartan.a2,
                    g.shape,
                    depth,
                    g.len()
                )?;
                for (wt, count) in weight_multiplicities(&g) {
                    writeln!(out, "{wt}:{count}")?;
                }
                out.flush()
            };
            write(&mut out).map_err(Failure::Io)
        }
        Command::Orbit {
            cartan,
            weight,
            max_length,
        } => {
            let cm = cartan.matrix()?;
            let mu = BigWeight::parse(&weight).map_err(Failure::Usage)?;
            let mut out = output(None)?;
            let write = |out: &mut Box<dyn Write>| -> io::Result<()> {
                for w in WeylGroup::of(&cm).words_up_to(max_length) {
                    writeln!(out, "{w}\t{}", act(&cm, &w, &mu))?;
                }
                out.flush()
            };
            write(&mut out).map_err(Failure::Io)
        }
        Command::Verify {
            cartan,
            suite,
            depth,
            word_bound,
        } => {
            let cm = cartan.matrix()?;
            let suite = match suite {
                SuiteArg::Operators => Suite::Operators,
                SuiteArg::Order => Suite::Order,
                SuiteArg::Extremal => Suite::Extremal,
                SuiteArg::Similarity => Suite::Similarity,
                SuiteArg::All => Suite::All,
            };
            let cfg = VerifyConfig {
                depth,
                word_bound,
                ..Default::default()
            };
            let report = run::<BigInt>(cm, suite, &cfg).map_err(|e| Failure::Verify(e.to_string()))?;
            println!("{report}");
            if report.passed() {
                Ok(())
            } else {
                Err(Failure::Verify(format!(
                    "{} check(s) failed",
                    report.failures().count()
                )))
            }
        }
    }
}

fn main() -> ExitCode {
    // clap exits with status 2 on malformed arguments.
    let cli = Cli::parse();
    match execute(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Verify(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(EXIT_VERIFY)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_VERIFY)
        }
    }
}
