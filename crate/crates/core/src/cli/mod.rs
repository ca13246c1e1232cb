//! JSON-in, JSON-out command-line front end.
//!
//! Exit status: 0 success, 1 domain error, 2 schema error, 3 a checked
//! identity failed. Errors are reported as
//! `{"error": {"kind", "pointer", "message"}}` on the output stream.

mod commands;
pub mod schema;

use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::error::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_SCHEMA: i32 = 2;
pub const EXIT_CHECK_FAILED: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Subcommand)]
pub enum Command {
    /// Generalized Schur polynomial by its four determinantal routes
    Schur,
    /// Schur expansions, flow variables, basis data and matrix kernels
    Expand,
    /// Identity checks; exits 3 when one fails
    Verify,
    /// Classical-group characters
    Character,
    /// Littlewood's expansion of a character
    Littlewood,
    /// Truncated tau series
    Tau,
    /// Moment matrices and matrix-model coefficients
    Moments,
    /// Exclusion-process transition weights
    Walk,
    /// Partition utilities
    Partitions,
}

impl Command {
    pub const ALL: [Command; 9] = [
        Command::Schur,
        Command::Expand,
        Command::Verify,
        Command::Character,
        Command::Littlewood,
        Command::Tau,
        Command::Moments,
        Command::Walk,
        Command::Partitions,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::Schur => "schur",
            Command::Expand => "expand",
            Command::Verify => "verify",
            Command::Character => "character",
            Command::Littlewood => "littlewood",
            Command::Tau => "tau",
            Command::Moments => "moments",
            Command::Walk => "walk",
            Command::Partitions => "partitions",
        }
    }
}

/// Every operation and the one subcommand that serves it. The first entry for
/// a subcommand is its default when a request carries no `"op"`.
pub const OPERATIONS: &[(&str, Command)] = &[
    ("routes", Command::Schur),
    ("bialternant", Command::Schur),
    ("jacobi_trudi", Command::Schur),
    ("dual_jacobi_trudi", Command::Schur),
    ("giambelli", Command::Schur),
    ("build_H", Command::Schur),
    ("build_E", Command::Schur),
    ("expansion_coeffs", Command::Expand),
    ("monomial_sums", Command::Expand),
    ("complete_h", Command::Expand),
    ("schur_t", Command::Expand),
    ("monomial_basis", Command::Expand),
    ("from_recursion", Command::Expand),
    ("recursion_of", Command::Expand),
    ("evaluate", Command::Expand),
    ("window", Command::Expand),
    ("det", Command::Expand),
    ("invert_unitriangular", Command::Expand),
    ("exp_nilpotent", Command::Expand),
    ("sweep", Command::Verify),
    ("pluecker_check", Command::Verify),
    ("kp_coefficient_check", Command::Verify),
    ("character", Command::Character),
    ("schur_expansion_z", Command::Character),
    ("littlewood_rhs", Command::Littlewood),
    ("tau_phi", Command::Tau),
    ("tau_pair", Command::Tau),
    ("B_coefficient", Command::Moments),
    ("hankel", Command::Moments),
    ("eigenvalue_sum", Command::Moments),
    ("bimoment", Command::Moments),
    ("B2_coefficient", Command::Moments),
    ("monic_orthogonal", Command::Moments),
    ("transition_weight", Command::Walk),
    ("generator", Command::Walk),
    ("semigroup_check", Command::Walk),
    ("discrete_time_weights", Command::Walk),
    ("enumerate", Command::Partitions),
    ("conjugate", Command::Partitions),
    ("particle_coords", Command::Partitions),
    ("frobenius", Command::Partitions),
    ("doubles", Command::Partitions),
    ("littlewood_richardson", Command::Partitions),
];

/// Resolves the operation for a subcommand, defaulting to its first entry.
pub fn resolve_op(cmd: Command, op: Option<&str>) -> Result<&'static str, CliError> {
    let mut ops = OPERATIONS.iter().filter(|(_, c)| *c == cmd).map(|(o, _)| *o);
    match op {
        None => Ok(ops.next().expect("every subcommand has an operation")),
        Some(name) => ops.find(|o| *o == name).ok_or_else(|| {
            CliError::schema("/op", format!("unknown operation '{name}' for {}", cmd.name()))
        }),
    }
}

/// Global flags shared by all subcommands.
#[derive(Clone, Debug, Default)]
pub struct Options {
    pub seed: u64,
    pub cutoff: Option<usize>,
    pub truncation: Option<usize>,
}

#[derive(Debug)]
pub enum CliError {
    Domain(Error),
    Schema { pointer: String, message: String },
}

impl CliError {
    pub fn schema(pointer: impl Into<String>, message: impl Into<String>) -> Self {
        CliError::Schema {
            pointer: pointer.into(),
            message: message.into(),
        }
    }

    fn code(&self) -> i32 {
        match self {
            CliError::Domain(_) => EXIT_DOMAIN,
            CliError::Schema { .. } => EXIT_SCHEMA,
        }
    }

    fn to_json(&self) -> Value {
        match self {
            CliError::Domain(e) => json!({"error": {"kind": "domain", "pointer": null, "message": e.to_string()}}),
            CliError::Schema { pointer, message } => {
                json!({"error": {"kind": "schema", "pointer": pointer, "message": message}})
            }
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

/// Result of one request: the rendered JSON document and the exit status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub code: i32,
}

/// Runs one request given as JSON text.
pub fn run(cmd: Command, input: &str, opts: &Options) -> Outcome {
    let result = serde_json::from_str::<Value>(input)
        .map_err(|e| CliError::schema("", format!("invalid JSON: {e}")))
        .and_then(|v| commands::dispatch(cmd, v, opts));
    let (value, code) = match result {
        Ok(r) => (r.value, if r.passed { EXIT_OK } else { EXIT_CHECK_FAILED }),
        Err(e) => (e.to_json(), e.code()),
    };
    let mut output = serde_json::to_string_pretty(&value).expect("JSON values always render");
    output.push('\n');
    Outcome { output, code }
}

#[derive(Parser, Debug)]
#[command(name = "genschur", version, about = "Exact generalized Schur functions and their determinantal identities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Read the request from FILE instead of standard input
    #[arg(long, global = true, value_name = "FILE")]
    pub input: Option<PathBuf>,
    /// Write the response to FILE instead of standard output
    #[arg(long, global = true, value_name = "FILE")]
    pub output: Option<PathBuf>,
    /// Seed for generated evaluation points
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Default series or weight cutoff
    #[arg(long, global = true)]
    pub cutoff: Option<usize>,
    /// Default basis truncation N
    #[arg(long, global = true)]
    pub truncation: Option<usize>,
}

/// Entry point for the binary; returns the process exit status.
pub fn main_with(cli: Cli) -> i32 {
    let input = match &cli.input {
        Some(path) => std::fs::read_to_string(path),
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map(|_| s)
        }
    };
    let input = match input {
        Ok(s) => s,
        Err(e) => {
            eprintln!("genschur: cannot read request: {e}");
            return EXIT_SCHEMA;
        }
    };
    let opts = Options {
        seed: cli.seed,
        cutoff: cli.cutoff,
        truncation: cli.truncation,
    };
    let outcome = run(cli.command, &input, &opts);
    match &cli.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &outcome.output) {
                eprintln!("genschur: cannot write {}: {e}", path.display());
                return EXIT_DOMAIN;
            }
        }
        None => print!("{}", outcome.output),
    }
    outcome.code
}
