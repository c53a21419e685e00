//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verification or cross-check fails, 2 on usage
//! errors (bad flags, unreadable or malformed input files, violated preconditions).

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::field::Prime;
use crate::nottingham::{self, GroupElement};
use crate::order4;
use crate::series::Series;
use crate::text;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "nottingham", about = "Exact computation in the Nottingham group over F_p")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Method {
    Closed,
    Algebraic,
    Relation,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the order-4 element over F_2; without --method, build every route and cross-check.
    Sigma {
        #[arg(long)]
        trunc: usize,
        #[arg(long, value_enum)]
        method: Option<Method>,
    },
    /// Check every certifying identity, for the built-in element or one read from a file.
    Verify {
        #[arg(long, conflicts_with = "input")]
        trunc: Option<usize>,
        #[arg(long = "in", value_name = "FILE")]
        input: Option<PathBuf>,
    },
    /// Print lhs(rhs(t)).
    Compose {
        #[arg(long, value_name = "FILE")]
        lhs: PathBuf,
        #[arg(long, value_name = "FILE")]
        rhs: PathBuf,
    },
    /// Print the compositional inverse.
    Inverse {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
    },
    /// Print the k-fold composite of a group element.
    Power {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(short = 'k')]
        k: u64,
    },
    /// Print the least p-power order modulo the truncation, up to --cap (default p^6).
    Order {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long)]
        cap: Option<u64>,
    },
    /// Print the depth of a group element, or `inf` for the identity.
    Depth {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
    },
    /// Print the representative t (1 - a t^m)^(-1/m).
    Klopsch {
        #[arg(short = 'p')]
        p: u64,
        #[arg(short = 'm')]
        m: u64,
        #[arg(short = 'a', allow_hyphen_values = true)]
        a: i64,
        #[arg(long)]
        trunc: usize,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn failure(stdout: String, stderr: String) -> Self {
        Outcome { code: EXIT_FAILURE, stdout, stderr }
    }

    fn usage(stderr: String) -> Self {
        Outcome { code: EXIT_USAGE, stdout: String::new(), stderr }
    }
}

enum Failure {
    Usage(String),
    Check { stdout: String, stderr: String },
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(format!("error: {e}\n"))
    }
}

/// Runs the tool on `argv`, whose first element is the program name.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome::usage(rendered)
            } else {
                Outcome::ok(rendered)
            };
        }
    };
    match dispatch(cli.command) {
        Ok(stdout) => Outcome::ok(stdout),
        Err(Failure::Usage(msg)) => Outcome::usage(msg),
        Err(Failure::Check { stdout, stderr }) => Outcome::failure(stdout, stderr),
    }
}

fn read_series(path: &Path) -> Result<Series, Failure> {
    let raw = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("error: cannot read {}: {e}\n", path.display())))?;
    text::decode(&raw).map_err(|e| Failure::Usage(format!("error: {}: {e}\n", path.display())))
}

fn read_element(path: &Path) -> Result<GroupElement, Failure> {
    let series = read_series(path)?;
    GroupElement::new(series).map_err(|e| Failure::Usage(format!("error: {}: {e}\n", path.display())))
}

fn dispatch(command: Command) -> Result<String, Failure> {
    match command {
        Command::Sigma { trunc, method } => sigma(trunc, method),
        Command::Verify { trunc, input } => {
            let report = match input {
                Some(path) => order4::verify(&read_element(&path)?)?,
                None => order4::verify_all(trunc.unwrap_or(order4::DEFAULT_VERIFY_TRUNC))?,
            };
            let rendered = report.to_string();
            match report.first_failed() {
                None => Ok(rendered),
                Some(check) => Err(Failure::Check {
                    stderr: format!(
                        "verification failed: {} at exponent {}\n",
                        check.name,
                        check.first_failure.expect("failed check has an exponent")
                    ),
                    stdout: rendered,
                }),
            }
        }
        Command::Compose { lhs, rhs } => {
            let f = read_series(&lhs)?;
            let g = read_series(&rhs)?;
            Ok(text::encode(&f.compose(&g)?))
        }
        Command::Inverse { input } => Ok(text::encode(&read_series(&input)?.comp_inverse()?)),
        Command::Power { input, k } => Ok(text::encode(read_element(&input)?.power(k).series())),
        Command::Order { input, cap } => {
            let f = read_element(&input)?;
            let cap = cap.unwrap_or_else(|| nottingham::default_order_cap(f.prime()));
            if cap == 0 {
                return Err(Failure::Usage("error: --cap must be positive\n".into()));
            }
            match f.order_mod_truncation(cap) {
                Some(k) => Ok(format!("{k}\n")),
                None => Err(Failure::Check {
                    stdout: String::new(),
                    stderr: format!("no p-power order up to {cap}\n"),
                }),
            }
        }
        Command::Depth { input } => Ok(format!("{}\n", read_element(&input)?.depth())),
        Command::Klopsch { p, m, a, trunc } => {
            let prime = Prime::new(p)?;
            let rep = nottingham::klopsch_rep(prime, m, prime.element(a), trunc)?;
            Ok(text::encode(rep.series()))
        }
    }
}

fn sigma(trunc: usize, method: Option<Method>) -> Result<String, Failure> {
    let element = match method {
        Some(Method::Closed) => order4::sigma_closed(trunc)?,
        Some(Method::Algebraic) => order4::sigma_algebraic(trunc)?,
        Some(Method::Relation) => order4::sigma_relation(trunc)?,
        None => {
            let closed = order4::sigma_closed(trunc)?;
            for (name, other) in [
                ("algebraic", order4::sigma_algebraic(trunc)?),
                ("relation", order4::sigma_relation(trunc)?),
            ] {
                if let Some(e) = closed.series().first_difference(other.series())? {
                    return Err(Failure::Check {
                        stdout: String::new(),
                        stderr: format!("routes disagree: closed vs {name} at exponent {e}\n"),
                    });
                }
            }
            closed
        }
    };
    Ok(text::encode(element.series()))
}
