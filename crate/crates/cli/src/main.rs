use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod input;

/// Marked bases over strongly stable ideals.
#[derive(Parser, Debug)]
#[command(name = "markedfam", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Number of variables x0..x{N-1}; inferred from the ideal when omitted.
    #[arg(long, global = true)]
    pub vars: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Worker threads for EK reductions (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

// A marked set given inline or as a JSON file.
#[derive(Args, Debug, Clone)]
pub struct MarkedArgs {
    /// JSON file with a marked set.
    #[arg(long, conflicts_with = "marked_polys")]
    pub marked: Option<PathBuf>,

    /// The marked polynomials, separated by `;`.
    #[arg(long)]
    pub marked_polys: Option<String>,

    /// Coefficient ring: ZZ, QQ, ZZ/p, ZZ[C] or ZZ[t].
    #[arg(long)]
    pub ring: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Strong stability, saturation and truncation data of an ideal.
    Check { ideal: String },
    /// Monomials of degree s outside the ideal.
    SousEscalier {
        ideal: String,
        #[arg(long)]
        degree: u32,
    },
    /// Split a monomial of the ideal as generator * cofactor.
    StarDecompose { ideal: String, monomial: String },
    /// The ideal J_{>=s}.
    Truncate {
        ideal: String,
        #[arg(long)]
        degree: u32,
    },
    /// Hilbert polynomial, Gotzmann number and rho.
    Hilbert { ideal: String },
    /// J-remainder of a homogeneous polynomial.
    Reduce {
        ideal: String,
        poly: String,
        #[command(flatten)]
        marked: MarkedArgs,
        #[arg(long)]
        trace: bool,
    },
    /// Exit 0 if the marked set is a marked basis, 1 if not.
    BasisTest {
        ideal: String,
        #[command(flatten)]
        marked: MarkedArgs,
    },
    /// The induced marked set on J_s.
    AuxBasis {
        ideal: String,
        #[command(flatten)]
        marked: MarkedArgs,
        #[arg(long)]
        degree: u32,
    },
    /// Generators of I_s intersected with the span of the sous-escalier.
    Obstructions {
        ideal: String,
        #[command(flatten)]
        marked: MarkedArgs,
        #[arg(long)]
        degree: u32,
    },
    /// Equations of the marked scheme.
    MfEquations { ideal: String },
    /// Equations of the Groebner stratum.
    GsEquations {
        ideal: String,
        #[arg(long, default_value = "deglex")]
        order: String,
        /// Set the vanishing parameters to zero before reducing.
        #[arg(long)]
        substituted: bool,
    },
    /// How the marked schemes of successive truncations compare.
    EmbeddingReport {
        ideal: String,
        #[arg(long)]
        from: Option<u32>,
        #[arg(long)]
        to: Option<u32>,
    },
    /// Parameters that are themselves generators of the marked-scheme ideal.
    StratumMembers { ideal: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match commands::run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let rendered = match cli.format {
        Format::Text => outcome.text,
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&outcome.json).expect("values serialize");
            s.push('\n');
            s
        }
    };
    let written = match &cli.output {
        Some(path) => std::fs::write(path, rendered.as_bytes()),
        None => std::io::stdout().write_all(rendered.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(2);
    }
    if let Some(msg) = &outcome.message {
        eprintln!("{msg}");
    }
    ExitCode::from(outcome.code)
}
