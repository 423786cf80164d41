use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};

use glspell_core::dict::{BuildOptions, DEFAULT_MEMORY_SIZE};
use glspell_core::gwdl::load;
use glspell_core::mkdict::{compile, inspect, CompileError};
use glspell_core::morph::expand_entry;

/// Compiles GWDL lexicons into .gwd dictionaries.
#[derive(Parser)]
#[command(name = "mkdict", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compile sources into a dictionary file.
    Build {
        #[arg(short, long, value_name = "OUT.gwd")]
        out: PathBuf,
        /// Frequency list, one "count<TAB>form" per line.
        #[arg(long, value_name = "FREQ.tsv")]
        freq: Option<PathBuf>,
        /// Forms kept in the memory-resident dictionary.
        #[arg(long, value_name = "N", default_value_t = DEFAULT_MEMORY_SIZE)]
        mem_size: usize,
        #[arg(required = true, value_name = "SRC")]
        sources: Vec<PathBuf>,
    },
    /// Print the statistics of a compiled dictionary.
    Report {
        #[arg(value_name = "FILE.gwd")]
        file: PathBuf,
    },
    /// Print every generated form, one "form<TAB>entry" per line.
    Expand {
        #[arg(required = true, value_name = "SRC")]
        sources: Vec<PathBuf>,
    },
    /// Check sources and print their diagnostics.
    Validate {
        #[arg(required = true, value_name = "SRC")]
        sources: Vec<PathBuf>,
    },
}

const DIAGNOSTICS: u8 = 1;
const IO: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("mkdict: {e:#}");
            ExitCode::from(IO)
        }
    }
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Build {
            out,
            freq,
            mem_size,
            sources,
        } => {
            let options = BuildOptions { memory_size: mem_size };
            match compile(&sources, freq.as_deref(), &out, options) {
                Ok(report) => {
                    for d in &report.diagnostics {
                        eprintln!("{d}");
                    }
                    print!("{report}");
                    Ok(0)
                }
                Err(CompileError::Diagnostics(diagnostics)) => {
                    for d in &diagnostics {
                        eprintln!("{d}");
                    }
                    eprintln!("mkdict: {} not written", out.display());
                    Ok(DIAGNOSTICS)
                }
                Err(e @ CompileError::Frequency(_)) => {
                    eprintln!("mkdict: {e}");
                    Ok(DIAGNOSTICS)
                }
                Err(e @ CompileError::Io { .. }) => Err(e.into()),
            }
        }
        Command::Report { file } => {
            let bytes = fs::read(&file).with_context(|| format!("reading {}", file.display()))?;
            let report = inspect(&bytes).with_context(|| format!("{} is not a valid dictionary", file.display()))?;
            print!("{report}");
            Ok(0)
        }
        Command::Expand { sources } => {
            let texts = read_sources(&sources)?;
            let loaded = load(texts.iter().map(|(n, t)| (n.as_str(), t.as_str())));
            for d in loaded.render_diagnostics() {
                eprintln!("{d}");
            }
            if loaded.has_errors() {
                return Ok(DIAGNOSTICS);
            }
            let mut out = String::new();
            for entry in &loaded.rules.entries {
                match expand_entry(entry) {
                    Ok(forms) => {
                        for f in forms {
                            out.push_str(&format!("{}\t{}\n", f.display, entry.id));
                        }
                    }
                    Err(e) => eprintln!("mkdict: entry {}: {e}", entry.id),
                }
            }
            print!("{out}");
            Ok(0)
        }
        Command::Validate { sources } => {
            let texts = read_sources(&sources)?;
            let loaded = load(texts.iter().map(|(n, t)| (n.as_str(), t.as_str())));
            for d in loaded.render_diagnostics() {
                eprintln!("{d}");
            }
            if loaded.has_errors() {
                return Ok(DIAGNOSTICS);
            }
            println!("{} entries ok", loaded.rules.entries.len());
            Ok(0)
        }
    }
}

fn read_sources(paths: &[PathBuf]) -> Result<Vec<(String, String)>> {
    paths.iter().map(|p| Ok((p.display().to_string(), read(p)?))).collect()
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}
