use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};

use gl2_cli::commands::{self, Direction, Example, HandleKind, Params};
use gl2_cli::format::{Kind, Semantic};

/// Verifier, converter and horn filler for finite 2-categories, `GL(V)` and
/// 2-term representations up to homotopy.
///
/// Exit status: 0 on success, 1 when the mathematics fails, 2 on unreadable
/// or malformed input.
#[derive(Parser)]
#[command(name = "gl2", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a document against the laws of its kind.
    Verify {
        path: PathBuf,
        #[arg(long, value_enum)]
        kind: Option<Kind>,
    },
    /// Convert between representations and pseudo-functors, or their morphisms.
    Convert {
        path: PathBuf,
        #[arg(value_enum)]
        direction: Direction,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Fill a horn.
    Fill {
        path: PathBuf,
        #[arg(long, value_enum)]
        handle: HandleKind,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write an example document.
    Generate {
        #[arg(value_enum)]
        example: Example,
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// cyclic, symmetric, dihedral or quaternion.
        #[arg(long, default_value = "cyclic")]
        group: String,
        /// Spanning vectors separated by `;`, coordinates by `,`.
        #[arg(long, default_value = "1,0;1,1;2,1")]
        lines: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Count nerve simplices level by level three independent ways.
    Nerve {
        path: PathBuf,
        #[arg(long, default_value_t = 3)]
        level: usize,
    },
}

/// Writes to stdout; a closed pipe downstream is not an error.
fn say(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => {
            say(text);
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Verify { path, kind } => {
            commands::verify(&commands::read(&path)?, kind)?;
            say("ok\n");
            Ok(())
        }
        Command::Convert { path, direction, out } => {
            emit(&commands::convert(&commands::read(&path)?, direction)?, out.as_deref())
        }
        Command::Fill { path, handle, out } => emit(&commands::fill(&commands::read(&path)?, handle)?, out.as_deref()),
        Command::Generate { example, n, group, lines, seed, out } => {
            emit(&commands::generate(example, &Params { n, group, lines, seed })?, out.as_deref())
        }
        Command::Nerve { path, level } => emit(&commands::nerve(&commands::read(&path)?, level)?, None),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => match e.downcast_ref::<Semantic>() {
            Some(s) => {
                say(&format!("{s}\n"));
                ExitCode::from(1)
            }
            None => {
                eprintln!("error: {e:#}");
                ExitCode::from(2)
            }
        },
    }
}
