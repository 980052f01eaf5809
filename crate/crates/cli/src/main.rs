//! `cwl-degen`: Groebner bases, Betti tables and degeneration checks from the
//! command line.

mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use render::Mode;

#[derive(Parser, Debug)]
#[command(name = "cwl-degen", version, about = "Betti tables and square-free Groebner degeneration checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Input {
    /// Ideal file: a `ring` line followed by `NAME = poly, poly, ...` lines
    pub file: PathBuf,
    /// Name of the ideal to use
    #[arg(long, default_value = "I")]
    pub ideal: String,
    /// Output format
    #[arg(long, value_enum, default_value_t = Mode::Table)]
    pub mode: Mode,
    /// Where violations and counterexamples are appended
    #[arg(long, default_value = "findings.tsv")]
    pub findings: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Of {
    Ideal,
    Quotient,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Reduced Groebner basis
    Gb(Input),
    /// Minimal generators of the initial ideal
    Initial(Input),
    /// Graded Betti table
    Betti {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Of::Quotient)]
        of: Of,
    },
    /// Hilbert series numerator, or the Hilbert function at one degree
    Hilbert {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        degree: Option<u32>,
    },
    /// Castelnuovo-Mumford regularity of the ideal
    Reg(Input),
    /// Componentwise linearity with a per-degree report
    Cwl(Input),
    /// The three equivalent conditions on I_<d>
    Lemma2 {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        degree: u32,
    },
    /// Initial ideals and generator counts of m^d J
    Lemma3 {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        degree: u32,
    },
    /// Square-free degeneration theorem check
    Theorem(Input),
    /// Componentwise-linearity transfer under beta_0 equality
    Corollary(Input),
    /// Is in(I_<=h-1) square-free when h = reg(I)?
    Probe(Input),
    /// Weight vector realizing the order on the Groebner basis
    Weight(Input),
    /// w-homogenization of the Groebner basis
    Homogenize {
        #[command(flatten)]
        input: Input,
        /// Comma-separated weights; found automatically when omitted
        #[arg(long)]
        weight: Option<String>,
    },
    /// Betti agreement of R/I and R/in(I) for homological degrees <= h-2
    Fiberfull {
        #[command(flatten)]
        input: Input,
        #[arg(long = "h")]
        h: i64,
    },
    /// Fiber-full up to 3 versus full Betti equality
    FiberfullEquiv(Input),
    /// Every check in one consolidated report
    Report(Input),
    /// Seeded random corpus run of the lemma, theorem and weight checks
    Fuzz {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value = "findings.tsv")]
        findings: PathBuf,
    },
}

fn configure_threads() {
    if let Ok(v) = std::env::var("CWL_DEGEN_THREADS") {
        if let Ok(n) = v.trim().parse::<usize>() {
            if n > 0 {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    configure_threads();
    match commands::run(cli.command) {
        Ok(outcome) => {
            print!("{}", outcome.text);
            ExitCode::from(outcome.status)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
