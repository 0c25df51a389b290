use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use qsum::commands::{self, SettingArg};
use qsum::CliError;

/// Exact simulation and error analysis of quantum summation.
#[derive(Debug, Parser)]
#[command(name = "qsum", version)]
struct Cli {
    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Outcome probabilities and outputs for the mean k/2^n.
    Dist {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u64,
    },
    /// Run the gate-level simulator on a truth table and measure once.
    Simulate {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u32,
        /// Truth table in hex, f(0) in the most significant bit.
        #[arg(long)]
        f: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Worst or average error at one (M, p).
    Error {
        /// worst | avg
        setting: String,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u32,
        /// Level in (0, 1]; also 8/pi2 or 4/pi2.
        #[arg(long)]
        p: String,
        /// p1 | p2 (average setting only).
        #[arg(long, default_value = "p1")]
        measure: String,
        #[arg(long, default_value_t = qsum_core::analysis::DEFAULT_BETA)]
        beta: f64,
    },
    /// Worst or average error over a list of M and p.
    Curve {
        /// worst | avg
        setting: String,
        /// List or range: 4,8,16 | 2..64 | 2..64+2 | 4..64*2
        #[arg(long)]
        m: String,
        #[arg(long)]
        n: u32,
        /// Comma-separated levels.
        #[arg(long)]
        p: String,
        #[arg(long, default_value = "p1")]
        measure: String,
        #[arg(long, default_value_t = qsum_core::analysis::DEFAULT_BETA)]
        beta: f64,
    },
    /// Run a verification suite.
    Verify {
        /// unitarity | oracle-equivalence | bounds | calculus | average-case | all
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

fn run(command: Command) -> Result<(String, bool), CliError> {
    let text = match command {
        Command::Dist { m, n, k } => commands::cmd_dist(m, n, k)?,
        Command::Simulate { m, n, f, seed } => commands::cmd_simulate(m, n, &f, seed)?,
        Command::Error {
            setting,
            m,
            n,
            p,
            measure,
            beta,
        } => commands::cmd_error(
            setting.parse::<SettingArg>()?,
            m,
            n,
            commands::parse_level(&p)?,
            commands::parse_measure(&measure)?,
            beta,
        )?,
        Command::Curve {
            setting,
            m,
            n,
            p,
            measure,
            beta,
        } => commands::cmd_curve(
            setting.parse::<SettingArg>()?,
            &commands::parse_m_list(&m)?,
            n,
            &commands::parse_levels(&p)?,
            commands::parse_measure(&measure)?,
            beta,
        )?,
        Command::Verify { suite } => return commands::cmd_verify(&suite),
    };
    Ok((text, true))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (text, ok) = match run(cli.command) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("qsum: {e}");
            return ExitCode::from(2);
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("qsum: {}", CliError::from(e));
        return ExitCode::from(2);
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
