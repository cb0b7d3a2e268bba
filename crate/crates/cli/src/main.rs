//! `ncdepth`: classicality and nonclassicality depth of Gaussian states and
//! bosonic Gaussian channels, plus a phase-space oracle for Fock-diagonal
//! states. Reports go to stdout, diagnostics to stderr.

mod commands;
mod report;
mod schema;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

/// Errors carrying the exit-code contract: 2 parse, 3 physics-invalid,
/// 4 dimension mismatch.
#[derive(Debug)]
pub enum CliError {
    Parse(String),
    Physics(String),
    Shape(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Physics(_) => 3,
            CliError::Shape(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Parse(m) | CliError::Physics(m) | CliError::Shape(m) => m,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "ncdepth",
    version,
    about = "Classicality and nonclassicality depth of Gaussian states and bosonic Gaussian channels"
)]
struct Cli {
    /// Emit machine-readable JSON reports on stdout.
    #[arg(long, global = true)]
    json: bool,

    /// Tolerance for positive-semidefinite decisions (classicality, CP, NB).
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Nonclassicality depth and verdict for a Gaussian state file.
    State { path: PathBuf },

    /// Full verdict (CP, NB, QPN, depth) for a channel file.
    Channel {
        path: PathBuf,
        /// Which classicality notion drives the exit status (0 classical,
        /// 1 nonclassical).
        #[arg(long, value_enum, default_value_t = Scheme::Pon)]
        scheme: Scheme,
    },

    /// Emit a canonical single-mode channel as JSON.
    Canonical {
        kind: Kind,
        /// Channel parameter; ignored by `singular`.
        kappa: Option<f64>,
        /// Write the channel JSON here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also print the channel verdict.
        #[arg(long)]
        analyze: bool,
    },

    /// Depths of the canonical channel family against their closed forms;
    /// exits 0 only if every row matches.
    Table1,

    /// Noise threshold of a Fock-diagonal state by radial negativity scan
    /// and bisection.
    FockDepth {
        /// JSON file with {"probs": [...]}.
        path: Option<PathBuf>,
        /// Inline probabilities, e.g. --probs 0.5,0.5.
        #[arg(long)]
        probs: Option<String>,
        /// Bisection bracket width (also the lower bracket).
        #[arg(long, default_value_t = 1e-3)]
        eps: f64,
        /// Radial grid resolution.
        #[arg(long, default_value_t = 4096)]
        grid_points: usize,
        /// Scan radius; defaults to 2*sqrt(N+1) + 4 for cutoff N.
        #[arg(long)]
        r_max: Option<f64>,
    },

    /// Compose two channels as SECOND ∘ FIRST (FIRST acts on the input
    /// first); a bare {"n", "matrix"} file is taken as additive noise.
    Compose {
        second: PathBuf,
        first: PathBuf,
        /// Write the composed channel JSON here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also print the composed channel's verdict.
        #[arg(long)]
        analyze: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Scheme {
    /// Process-output nonclassicality: classical = nonclassicality breaking.
    Pon,
    /// Coherent-input nonclassicality: classical = coherent states map to
    /// classical outputs.
    Qpn,
}

impl Scheme {
    pub fn name(self) -> &'static str {
        match self {
            Scheme::Pon => "pon",
            Scheme::Qpn => "qpn",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Attenuator,
    Amplifier,
    PhaseConjugation,
    Singular,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Attenuator => "attenuator",
            Kind::Amplifier => "amplifier",
            Kind::PhaseConjugation => "phase-conjugation",
            Kind::Singular => "singular",
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::State { path } => commands::state(path, cli.json, cli.tol),
        Command::Channel { path, scheme } => commands::channel(path, *scheme, cli.json, cli.tol),
        Command::Canonical {
            kind,
            kappa,
            out,
            analyze,
        } => commands::canonical(*kind, *kappa, out.as_ref(), *analyze, cli.json, cli.tol),
        Command::Table1 => commands::table1(cli.json),
        Command::FockDepth {
            path,
            probs,
            eps,
            grid_points,
            r_max,
        } => commands::fock_depth(
            path.as_ref(),
            probs.as_deref(),
            *eps,
            *grid_points,
            *r_max,
            cli.json,
        ),
        Command::Compose {
            second,
            first,
            out,
            analyze,
        } => commands::compose(second, first, out.as_ref(), *analyze, cli.json, cli.tol),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {}", err.message());
            ExitCode::from(err.exit_code())
        }
    }
}
