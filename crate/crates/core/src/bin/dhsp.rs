//! Command-line driver for the dihedral HSP experiments.
//!
//! ```bash
//! dhsp hsp --n 16 --a 3 --samples 100000 --seed 1
//! dhsp eh --n 16 --a 5 --m 200 --seed 7 --format csv --out eh.csv
//! ```
//!
//! Exit status is nonzero iff a check in the report fails.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dihedral_hsp::experiments::{run_with_threads, Command, ExperimentConfig, OutputFormat};

#[derive(Parser)]
#[command(name = "dhsp", version, about = "Dihedral hidden subgroup problem experiments")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// List irreducible representations and run the Schur orthogonality check
    Irreps(Flags),
    /// Check unitarity of the dense QFT and the Fourier pipeline
    QftCheck(Flags),
    /// Run the standard HSP pipeline and report flatness statistics
    Hsp(Flags),
    /// Draw Hadamard-on-rows samples and recover the slope by maximum likelihood
    Eh(Flags),
    /// Known-slope cloning, slope recovery from clones, and no-cloning witnesses
    Clone(Flags),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct Flags {
    /// Rotation order n (the group has order 2n)
    #[arg(long)]
    n: usize,
    /// Hidden slope a; derived from the seed when absent
    #[arg(long)]
    a: Option<usize>,
    /// Monte Carlo samples (hsp outcomes, qft-check vectors, clone refuter trials)
    #[arg(long, default_value_t = 10_000)]
    samples: usize,
    /// Sample count for slope recovery (default 64·⌈log2 n⌉)
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Trials for success-rate sweeps and clone recovery (0 = command default)
    #[arg(long, default_value_t = 0)]
    trials: usize,
    /// Cloned pairs per recovery trial
    #[arg(long, default_value_t = 20)]
    pairs: usize,
    /// Comma-separated sample counts for an eh success-rate sweep
    #[arg(long, value_delimiter = ',')]
    sweep: Vec<usize>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Output path (stdout when absent)
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads (0 = one per core)
    #[arg(long, default_value_t = 0)]
    threads: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, flags) = match cli.command {
        Cmd::Irreps(f) => (Command::Irreps, f),
        Cmd::QftCheck(f) => (Command::QftCheck, f),
        Cmd::Hsp(f) => (Command::Hsp, f),
        Cmd::Eh(f) => (Command::Eh, f),
        Cmd::Clone(f) => (Command::Clone, f),
    };
    let config = ExperimentConfig {
        command,
        n: flags.n,
        a: flags.a,
        samples: flags.samples,
        m: flags.m,
        seed: flags.seed,
        trials: flags.trials,
        pairs: flags.pairs,
        sweep: flags.sweep,
        format: match flags.format {
            Format::Json => OutputFormat::Json,
            Format::Csv => OutputFormat::Csv,
        },
    };

    let report = match run_with_threads(&config, flags.threads) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };

    let written = (|| -> io::Result<()> {
        let mut out: Box<dyn Write> = match &flags.out {
            Some(path) => Box::new(BufWriter::new(File::create(path)?)),
            None => Box::new(BufWriter::new(io::stdout().lock())),
        };
        match config.format {
            OutputFormat::Json => {
                report.write_json(&mut out)?;
                writeln!(out)?;
            }
            OutputFormat::Csv => report.write_csv(&mut out)?,
        }
        out.flush()
    })();
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }

    for check in report.checks.iter().filter(|c| !c.passed) {
        eprintln!("check failed: {} = {} (threshold {})", check.name, check.value, check.threshold);
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
