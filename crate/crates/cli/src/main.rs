mod commands;
mod examples;

use std::path::PathBuf;
use std::process::ExitCode;

use brodmann_core::polyhedra::{EdMode, DEFAULT_BUDGET};
use brodmann_core::Error;
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "brodmann", version, about = "Associated primes of powers of monomial ideals, closures, cones and stabilization bounds")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Tsv, global = true)]
    pub format: Format,

    /// Worker threads for per-degree work; 1 runs sequentially. Output does not depend on it.
    #[arg(long, default_value_t = 1, global = true)]
    pub jobs: usize,

    /// Lattice points a single enumeration may visit.
    #[arg(long, env = "BRODMANN_BUDGET", default_value_t = DEFAULT_BUDGET, global = true)]
    pub budget: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Quotient,
    Recursion,
    /// Run both and fail with exit code 4 if they disagree.
    Both,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Ass(I^n/I^(n+1)) for n = 0..=n_max and the observed stabilization.
    AssProfile {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long, default_value_t = 6)]
        n_max: u64,
        #[arg(long, value_enum, default_value_t = MethodArg::Quotient)]
        method: MethodArg,
    },
    /// Ass(I^n/I^(n+1)) for a single n.
    Ass {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = MethodArg::Quotient)]
        method: MethodArg,
    },
    /// Ratliff-Rush closure of I^n.
    Rr {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 8)]
        m_cap: u64,
    },
    /// Largest degree with nonzero H^0 of the associated graded ring, within a scan.
    A0 {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long, default_value_t = 6)]
        n_max: u64,
        #[arg(long, default_value_t = 8)]
        m_cap: u64,
    },
    /// The stabilization bounds B1..B4 and B for (r, s, d), or for an ideal.
    Bound {
        #[arg(long)]
        r: Option<u64>,
        #[arg(long)]
        s: Option<u64>,
        #[arg(long)]
        d: Option<u64>,
        /// Take (r, s, d) from this ideal and compare B with its observed profile.
        #[arg(long)]
        ideal: Option<PathBuf>,
        #[arg(long, default_value_t = 6)]
        n_max: u64,
    },
    /// Extreme rays, Hilbert basis, module generators and the generator bound of a cone.
    Cone {
        #[arg(long)]
        system: PathBuf,
        #[arg(long)]
        rays: bool,
        #[arg(long)]
        hilbert: bool,
        #[arg(long)]
        module: bool,
        /// Box side for --hilbert/--module; the certified bound is used when smaller.
        #[arg(long, default_value_t = 20)]
        cap: u64,
        #[arg(long)]
        bound: bool,
    },
    /// The constraint system ED1, ED2 or ED3 of an ideal, with its column-norm checks.
    BuildSystem {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long, value_parser = parse_mode)]
        mode: EdMode,
    },
    /// Bounded exhaustive search for an integer point of a system, or for t^b in I^n.
    Feasible {
        #[arg(long, conflicts_with = "ideal")]
        system: Option<PathBuf>,
        /// Fix a variable, as `label=value`; repeatable.
        #[arg(long = "fix")]
        fix: Vec<String>,
        #[arg(long = "box", default_value_t = 10)]
        box_cap: u64,
        #[arg(long, requires_all = ["n", "monomial"])]
        ideal: Option<PathBuf>,
        #[arg(long)]
        n: Option<u64>,
        /// A monomial such as `x1^3 x2`.
        #[arg(long)]
        monomial: Option<String>,
    },
    /// Run the built-in reference examples and print a pass/fail table.
    #[command(name = "paper-examples", alias = "examples")]
    ReferenceExamples,
}

fn parse_mode(s: &str) -> Result<EdMode, String> {
    s.parse::<EdMode>().map_err(|e| e.to_string())
}

/// A failure with its process exit code and optional extra output.
pub struct Failure {
    pub code: u8,
    pub message: String,
    pub dump: Option<String>,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } => 2,
            Error::Budget { .. } => 3,
            Error::Inconsistent(_) => 4,
            _ => 1,
        };
        Failure { code, message: e.to_string(), dump: None }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.jobs > 1 {
        // only fails if a pool already exists, which cannot happen here
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build_global();
    }
    match commands::run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            if let Some(dump) = &f.dump {
                eprintln!("{dump}");
            }
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn arguments_are_well_formed() {
        Cli::command().debug_assert();
    }

    #[test]
    fn exit_codes() {
        let code = |e: Error| Failure::from(e).code;
        assert_eq!(code(Error::Parse { line: 1, message: String::new() }), 2);
        assert_eq!(code(Error::Budget { needed: 2, budget: 1 }), 3);
        assert_eq!(code(Error::Inconsistent(String::new())), 4);
        assert_eq!(code(Error::PurePower), 1);
    }

    #[test]
    fn budget_from_environment_or_flag() {
        let cli = Cli::try_parse_from(["brodmann", "--budget", "7", "paper-examples"]).unwrap();
        assert_eq!(cli.budget, 7);
        let cli = Cli::try_parse_from(["brodmann", "examples"]).unwrap();
        assert!(matches!(cli.command, Command::ReferenceExamples));
    }
}
