//! Command-line front end.

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use bgsat::cli::{self, Command};

#[derive(Parser)]
#[command(
    name = "bgsat",
    version,
    about = "Exact satellite/L-space calculus for Berge-Gabai patterns"
)]
struct Args {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Print only the one-line summary in text mode.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Cli,
}

#[derive(Subcommand)]
enum Cli {
    /// Validate a pattern (w, b, t) and print its invariants.
    Pattern { w: i64, b: i64, t: i64 },
    /// Genus, L-space status, and certified slopes of a knot descriptor.
    Check { descriptor: String },
    /// Total rank of the hat-flavor Floer homology of a surgery.
    Rank { descriptor: String, slope: String },
    /// Companion surgery slope corresponding to integral satellite surgery.
    Surgery { descriptor: String, p: i64 },
    /// Symmetrized Alexander polynomial of a descriptor.
    Alexander { descriptor: String },
    /// First homology of a solid-torus pattern-exterior filling.
    Homology { w: i64, slope: String },
    /// Extra full twists needed for the satellite L-space criterion.
    Mintwist { w: i64, b: i64, t: i64, gk: i64 },
    /// Build a surgery plan with prescribed JSJ piece counts.
    Jsj {
        #[arg(long, default_value_t = 0)]
        seifert: i64,
        #[arg(long, default_value_t = 0)]
        hyperbolic: i64,
    },
    /// Per-slope surgery identities for a pattern and companion genus.
    Identity { w: i64, b: i64, t: i64, gk: i64 },
}

impl From<Cli> for Command {
    fn from(c: Cli) -> Command {
        match c {
            Cli::Pattern { w, b, t } => Command::PatternInfo { w, b, t },
            Cli::Check { descriptor } => Command::Check { descriptor },
            Cli::Rank { descriptor, slope } => Command::Rank { descriptor, slope },
            Cli::Surgery { descriptor, p } => Command::Surgery { descriptor, p },
            Cli::Alexander { descriptor } => Command::Alexander { descriptor },
            Cli::Homology { w, slope } => Command::Homology { w, slope },
            Cli::Mintwist { w, b, t, gk } => Command::MinTwist { w, b, t, gk },
            Cli::Jsj { seifert, hyperbolic } => Command::Jsj { seifert, hyperbolic },
            Cli::Identity { w, b, t, gk } => Command::Identity { w, b, t, gk },
        }
    }
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match cli::run(&Command::from(args.command)) {
        Ok(out) => {
            if args.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("serializable"));
            } else if args.quiet {
                println!("{}", out.summary);
            } else {
                print!("{}", out.text);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
