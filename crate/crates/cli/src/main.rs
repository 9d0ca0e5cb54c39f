//! `diffrad`: command-line front end for the difference-calculus toolkit.
//!
//! Exit status: 0 success, 1 computational failure or counterexample,
//! 2 usage or parse error, 3 fixture mismatch.

mod exec;
mod verify;

use std::ffi::OsString;
use std::io::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use diffrad::scalar::{ExactScalar, NumericScalar, Tolerance};

use exec::{execute, Context, Failure, Report};

#[derive(Parser, Debug)]
#[command(
    name = "diffrad",
    version,
    about = "Shifting zeros, difference radicals and Mason-type checks"
)]
pub struct Cli {
    /// Coefficient arithmetic.
    #[arg(long, global = true, value_enum, default_value_t = Backend::Exact)]
    pub backend: Backend,
    /// Working precision in bits for the numeric backend.
    #[arg(long, global = true, default_value_t = 256)]
    pub precision: usize,
    /// Absolute tolerance for numeric decisions (default: relative, from the precision).
    #[arg(long, global = true)]
    pub tolerance: Option<f64>,
    /// Seed for randomized commands.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Backend {
    Exact,
    Numeric,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Form {
    Delta,
    Shift,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// k-th forward difference.
    Delta {
        expr: String,
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// Newton expansion in falling powers of (z - at).
    Newton {
        expr: String,
        #[arg(long)]
        at: String,
    },
    /// Height of a shifting zero.
    Height {
        expr: String,
        #[arg(long)]
        at: String,
    },
    /// Chain decomposition into runs of consecutive zeros.
    Chains { expr: String },
    /// Classical radical: product of the distinct linear factors.
    Rad { expr: String },
    /// Difference radical: one linear factor per chain start.
    RadDelta { expr: String },
    /// Kappa difference radical.
    RadKappa {
        expr: String,
        #[arg(long, value_parser = trimmed_i64)]
        kappa: i64,
    },
    /// Truncated difference radical, chains clamped to length q.
    RadQ {
        expr: String,
        #[arg(long)]
        q: usize,
    },
    /// gcd(P, ΔP, ..., Δ^n P).
    GcdTower {
        expr: String,
        #[arg(long)]
        n: usize,
    },
    /// Common shifting divisors of two polynomials.
    ShiftingPrime { f: String, g: String },
    /// Casoratian determinant of the inputs.
    Casoratian {
        #[arg(required = true)]
        exprs: Vec<String>,
        #[arg(long, value_enum, default_value_t = Form::Delta)]
        form: Form,
    },
    /// Mason-type check of a + b = c.
    Mason {
        #[arg(num_args = 3, required = true, value_names = ["A", "B", "C"])]
        exprs: Vec<String>,
        /// Classical (coprime) version instead of the difference version.
        #[arg(long)]
        classical: bool,
    },
    /// Extended difference Mason check of f_1 + ... + f_m = f_(m+1).
    MasonExt {
        #[arg(num_args = 3.., required = true)]
        exprs: Vec<String>,
    },
    /// a^(n) + b^(n) = c^(n) in falling powers.
    Fermat {
        #[arg(num_args = 3, required = true, value_names = ["A", "B", "C"])]
        exprs: Vec<String>,
        #[arg(long)]
        n: usize,
    },
    /// f_1^(n) + ... + f_m^(n) = f_(m+1)^(n), or = 1 with --rhs-one.
    FermatMulti {
        #[arg(num_args = 2.., required = true)]
        exprs: Vec<String>,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        rhs_one: bool,
    },
    /// Run a named worked instance, or list them.
    Catalog { name: Option<String> },
    /// Random shifting-prime instance of f_1 + ... + f_m = f_(m+1), from --seed.
    Generate {
        #[arg(long, default_value_t = 2)]
        m: usize,
    },
    /// Run the bundled fixture suite of worked examples.
    VerifyPaper {
        /// Only run fixtures whose name contains this text.
        #[arg(long)]
        filter: Option<String>,
    },
}

impl Cli {
    pub fn context(&self) -> Context {
        Context {
            precision: self.precision,
            tolerance: self.tolerance.map_or(Tolerance::Auto, Tolerance::Abs),
            seed: self.seed,
        }
    }

    /// Runs a non-fixture command on the selected backend.
    pub fn run(&self) -> Result<Report, Failure> {
        let ctx = self.context();
        match self.backend {
            Backend::Exact => execute::<ExactScalar>(&self.command, &ctx),
            Backend::Numeric => execute::<NumericScalar>(&self.command, &ctx),
        }
    }
}

/// Arguments such as `-(z-4)*(z-5)` or `-1` are values, not flags. A
/// leading space keeps the argument parser from reading them as options;
/// expression readers trim it again.
fn protect_negative_values(args: impl Iterator<Item = OsString>) -> Vec<OsString> {
    args.map(|a| match a.to_str() {
        Some(s) if s.starts_with('-') && !s.starts_with("--") && s.len() > 1 && s != "-h" && s != "-V" => {
            OsString::from(format!(" {s}"))
        }
        _ => a,
    })
    .collect()
}

/// Writes one block to stdout; a closed pipe (as in `| head`) is not an error.
pub fn print_out(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn trimmed_i64(s: &str) -> Result<i64, std::num::ParseIntError> {
    s.trim().parse()
}

fn main() -> ExitCode {
    let cli = Cli::parse_from(protect_negative_values(std::env::args_os()));
    if let Command::VerifyPaper { filter } = &cli.command {
        return ExitCode::from(verify::run(filter.as_deref(), cli.json));
    }
    match cli.run() {
        Ok(report) => {
            if cli.json {
                print_out(&serde_json::to_string_pretty(&report.json).expect("valid JSON"));
            } else {
                print_out(&report.text);
            }
            ExitCode::from(u8::from(report.counterexample))
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
