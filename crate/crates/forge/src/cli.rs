//! `triangle-forge` command line. [`run`] returns the process exit code:
//! 0 on success, 1 when verification fails, 2 on usage or input errors.

use std::ffi::OsString;
use std::io::Write;

use clap::builder::{PossibleValuesParser, TypedValueParser};
use clap::{Parser, Subcommand};

use triangle_forge_core::constructions::{named_triangle_with_cap, sequence_terms, SequenceId, TriangleId};
use triangle_forge_core::nu_rho::{nu, rho};
use triangle_forge_core::perm::{beta_bruteforce_with_cap, entringer_bruteforce_with_cap, nu_bruteforce_with_cap, phi};
use triangle_forge_core::{Error, Path, Permutation, DEFAULT_PERMUTATION_CAP, DEFAULT_ROW_CAP};

use crate::format::{render_sequence, render_triangle, OutputFormat};
use crate::verification::{verify_suite_with, SuiteOptions};

pub const CAP_ENV: &str = "TRIANGLE_FORGE_CAP";

fn triangle_names() -> impl TypedValueParser<Value = TriangleId> {
    PossibleValuesParser::new(TriangleId::ALL.iter().map(|id| id.name()))
        .map(|s| s.parse::<TriangleId>().expect("listed name"))
}

fn sequence_names() -> impl TypedValueParser<Value = SequenceId> {
    PossibleValuesParser::new(SequenceId::ALL.iter().map(|id| id.name()))
        .map(|s| s.parse::<SequenceId>().expect("listed name"))
}

#[derive(Debug, Parser)]
#[command(
    name = "triangle-forge",
    version,
    about = "Exact number triangles generated by matrices"
)]
struct Cli {
    /// Override the size cap (rows, terms, or symmetric group size).
    #[arg(long, global = true)]
    cap: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a named triangle.
    Triangle {
        #[arg(value_parser = triangle_names())]
        name: TriangleId,
        #[arg(short, long, default_value_t = 6)]
        rows: usize,
        #[arg(short, long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
    },
    /// Print the first terms of a named sequence.
    Seq {
        #[arg(value_parser = sequence_names())]
        name: SequenceId,
        #[arg(short, long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
        #[arg(short, long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
    },
    /// Run the cross-method verification suite.
    Verify {
        #[arg(short, long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=3))]
        depth: u8,
        #[arg(short, long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
        /// Seed of the Monte Carlo checks.
        #[arg(long, default_value_t = 20_240_601)]
        seed: u64,
        /// Samples per Monte Carlo check.
        #[arg(long, default_value_t = 100_000, value_parser = clap::value_parser!(u64).range(100..))]
        samples: u64,
        #[arg(long, hide = true)]
        inject_failure: bool,
    },
    /// Brute-force and direct evaluations.
    Oracle {
        #[command(subcommand)]
        which: Oracle,
    },
}

#[derive(Debug, Subcommand)]
enum Oracle {
    /// The path of a permutation, e.g. `2,1,4,5,3`.
    Phi { permutation: String },
    /// Number of permutations mapping to a path, by sweeping the symmetric group.
    Nu {
        path: String,
        /// Use the memoized recursion instead of the sweep.
        #[arg(long)]
        fast: bool,
    },
    /// Product weight of a path.
    Rho { path: String },
    /// Zig-zag number by counting alternating permutations.
    Beta { n: usize },
    /// Entringer number by counting alternating permutations.
    Entringer { n: usize, k: usize },
}

/// A usage or input error; reported on stderr with exit code 2.
struct Failure(String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string())
    }
}

fn parse_permutation(s: &str) -> Result<Permutation, Failure> {
    let images = s
        .trim()
        .trim_start_matches('(')
        .trim_end_matches(')')
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Failure(format!("invalid permutation {s:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Permutation::new(images)?)
}

fn parse_path(s: &str) -> Result<Path, Failure> {
    s.parse::<Path>()
        .map_err(|e| Failure(format!("invalid path {s:?}: {e}")))
}

fn env_cap(raw: Option<&str>) -> Result<Option<usize>, Failure> {
    raw.map(|v| {
        v.trim()
            .parse::<usize>()
            .map_err(|_| Failure(format!("{CAP_ENV} must be a non-negative integer, got {v:?}")))
    })
    .transpose()
}

fn dispatch(cli: Cli, env: Option<&str>) -> Result<(String, bool), Failure> {
    let cap = match cli.cap {
        Some(c) => Some(c),
        None => env_cap(env)?,
    };
    let perm_cap = cap.unwrap_or(DEFAULT_PERMUTATION_CAP);
    Ok(match cli.command {
        Command::Triangle { name, rows, format } => {
            let t = named_triangle_with_cap(name, rows, cap.unwrap_or(DEFAULT_ROW_CAP))?;
            (render_triangle(name.name(), &t, format), true)
        }
        Command::Seq { name, count, format } => {
            let count = count as usize;
            let limit = cap.unwrap_or(DEFAULT_ROW_CAP);
            if count > limit {
                return Err(Error::EnumerationTooLarge { n: count, cap: limit }.into());
            }
            (render_sequence(&sequence_terms(name, count)?, format), true)
        }
        Command::Verify {
            depth,
            format,
            seed,
            samples,
            inject_failure,
        } => {
            let opts = SuiteOptions {
                depth,
                seed,
                samples,
                inject_failure,
            };
            let report = verify_suite_with(&opts);
            let text = match format {
                OutputFormat::Plain => report.to_table(),
                OutputFormat::Csv => report.to_csv(),
                OutputFormat::Json => report.to_json() + "\n",
            };
            (text, report.passed())
        }
        Command::Oracle { which } => {
            let v = match which {
                Oracle::Phi { permutation } => phi(&parse_permutation(&permutation)?)?.to_string(),
                Oracle::Nu { path, fast } => {
                    let p = parse_path(&path)?;
                    if fast {
                        nu(&p).to_string()
                    } else {
                        nu_bruteforce_with_cap(&p, perm_cap)?.to_string()
                    }
                }
                Oracle::Rho { path } => rho(&parse_path(&path)?).to_string(),
                Oracle::Beta { n } => beta_bruteforce_with_cap(n, perm_cap)?.to_string(),
                Oracle::Entringer { n, k } => entringer_bruteforce_with_cap(n, k, perm_cap)?.to_string(),
            };
            (v + "\n", true)
        }
    })
}

/// Runs the CLI with `env_cap` standing in for the `TRIANGLE_FORGE_CAP` variable.
pub fn run_with_env<I, T>(args: I, env_cap: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match dispatch(cli, env_cap) {
        Ok((text, ok)) => {
            let _ = out.write_all(text.as_bytes());
            if ok {
                0
            } else {
                1
            }
        }
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

/// Runs the CLI reading the cap override from the environment.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let env = std::env::var(CAP_ENV).ok();
    run_with_env(args, env.as_deref(), out, err)
}
