//! Thin command-line front end; all logic lives in the library.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use heegaard_rr::report::{cmd_analyze, cmd_certify, cmd_compare, cmd_derive, cmd_synth};

#[derive(Parser)]
#[command(name = "heegaard-rr", version, about = "R-R diagram pipeline for genus-two Heegaard splittings")]
struct Cli {
    /// Write the JSON report here.
    #[arg(long, global = true, value_name = "FILE")]
    json: Option<PathBuf>,
    /// Seed for randomized harnesses.
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a diagram and report words, complexity, graph form, rectangles.
    Analyze { diagram: PathBuf },
    /// Replay a Tietze script, checking its expectations.
    Derive {
        /// Script file; may embed the starting presentation.
        script: PathBuf,
        /// Optional starting presentation (text format), overriding the script's.
        #[arg(long)]
        start: Option<PathBuf>,
    },
    /// Synthesize a diagram from a Whitehead-minimal presentation.
    Synth {
        presentation: PathBuf,
        out: PathBuf,
        /// Mirror the A-hexagon labeling.
        #[arg(long)]
        mirrored: bool,
    },
    /// Produce SUMS/pair certificates and a distance bracket.
    Certify {
        diagram: PathBuf,
        /// Two marked-curve ids, comma separated, e.g. `alpha,beta`.
        #[arg(long, value_name = "A,B")]
        pair: Option<String>,
    },
    /// Compare two splittings by unique minimal complexity.
    Compare { first: PathBuf, second: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Analyze { diagram } => cmd_analyze(diagram),
        Command::Derive { script, start } => cmd_derive(start.as_deref(), script),
        Command::Synth { presentation, out, mirrored } => cmd_synth(presentation, out, *mirrored),
        Command::Certify { diagram, pair } => {
            let pair = pair.as_ref().map(|p| {
                let (a, b) = p.split_once(',').unwrap_or((p.as_str(), ""));
                (a.trim().to_string(), b.trim().to_string())
            });
            cmd_certify(diagram, pair, cli.seed)
        }
        Command::Compare { first, second } => cmd_compare(first, second),
    };
    match result {
        Ok(out) => {
            print!("{}", out.human);
            if let Some(path) = &cli.json {
                if let Err(e) = std::fs::write(path, out.report.to_string()) {
                    eprintln!("error writing report: {e}");
                    return ExitCode::from(2);
                }
            }
            ExitCode::from(out.exit_code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
