use std::fs::{self, OpenOptions};
use std::io::{self, BufRead, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use glspell_core::correct::{Checker, CheckerOptions};
use glspell_core::dict::{Dictionary, LoadPolicy, UserDictionary};
use glspell_core::mkdict::write_atomic;
use glspell_core::session::{check_document, line_col, Action, CorrectionSession, Flag, Next, Status};
use glspell_server::{AppState, ServerConfig};

/// Spelling checker and corrector for Modern Greek.
#[derive(Parser)]
#[command(name = "glspell", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct DictArgs {
    /// Compiled dictionary built by mkdict.
    #[arg(long, value_name = "D.gwd")]
    dict: PathBuf,
    /// User dictionary, one word per line; created on the first stored word.
    #[arg(long, value_name = "U.txt")]
    user: Option<PathBuf>,
    /// Map the record blocks instead of reading the whole file.
    #[arg(long)]
    mapped: bool,
    #[arg(long, value_name = "N", default_value_t = CheckerOptions::default().max_suggestions)]
    max_suggestions: usize,
}

impl DictArgs {
    fn open(&self) -> Result<(Dictionary, UserDictionary)> {
        let policy = if self.mapped { LoadPolicy::Mapped } else { LoadPolicy::Eager };
        let dict = Dictionary::open(&self.dict, policy).with_context(|| format!("opening {}", self.dict.display()))?;
        let user = match &self.user {
            Some(path) => {
                UserDictionary::load_or_default(path).with_context(|| format!("reading {}", path.display()))?
            }
            None => UserDictionary::new(),
        };
        Ok((dict, user))
    }

    fn options(&self) -> CheckerOptions {
        CheckerOptions {
            max_suggestions: self.max_suggestions,
            ..CheckerOptions::default()
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Report {
    Tsv,
    Pretty,
}

#[derive(Subcommand)]
enum Command {
    /// Report every flagged word. Exits with 1 when anything was flagged.
    Check {
        file: PathBuf,
        #[command(flatten)]
        dict: DictArgs,
        #[arg(long, value_enum, default_value = "tsv")]
        report: Report,
    },
    /// Walk through the flagged words interactively and rewrite the file.
    Fix {
        file: PathBuf,
        #[command(flatten)]
        dict: DictArgs,
        /// Log of decisions; an existing journal is replayed first, so an
        /// interrupted run resumes where it stopped.
        #[arg(long, value_name = "PATH")]
        journal: Option<PathBuf>,
        /// Write the result here instead of over FILE.
        #[arg(short, long, value_name = "PATH")]
        output: Option<PathBuf>,
    },
    /// Serve the HTTP API.
    Serve {
        #[command(flatten)]
        dict: DictArgs,
        #[arg(long, value_name = "ADDR", default_value = "127.0.0.1:8080")]
        listen: String,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse().command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("glspell: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Check { file, dict, report } => check(&file, &dict, report),
        Command::Fix {
            file,
            dict,
            journal,
            output,
        } => {
            let stdin = io::stdin();
            fix(&file, &dict, journal.as_deref(), output.as_deref(), &mut stdin.lock(), &mut io::stdout())
        }
        Command::Serve { dict, listen } => serve(&dict, &listen),
    }
}

fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn check(file: &Path, args: &DictArgs, report: Report) -> Result<u8> {
    let text = read_text(file)?;
    let (dict, user) = args.open()?;
    let checker = Checker::new(&dict, &user).with_options(args.options());
    let flags = check_document(&text, &checker);
    let mut out = io::BufWriter::new(io::stdout().lock());
    for flag in &flags {
        let (line, col) = line_col(&text, flag.span.start);
        let suggestions: Vec<&str> = flag.suggestions.iter().map(|s| s.display.as_str()).collect();
        match report {
            Report::Tsv => writeln!(out, "{line}\t{col}\t{}\t{}", flag.word, suggestions.join(";"))?,
            Report::Pretty if suggestions.is_empty() => {
                writeln!(out, "{}:{line}:{col}: {} (no suggestions)", file.display(), flag.word)?
            }
            Report::Pretty => writeln!(
                out,
                "{}:{line}:{col}: {} -> {}",
                file.display(),
                flag.word,
                suggestions.join(", ")
            )?,
        }
    }
    out.flush()?;
    Ok(u8::from(!flags.is_empty()))
}

fn save_user(args: &DictArgs, user: &UserDictionary) -> Result<()> {
    if let Some(path) = &args.user {
        user.save(path).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn fix(
    file: &Path,
    args: &DictArgs,
    journal: Option<&Path>,
    output: Option<&Path>,
    input: &mut impl BufRead,
    out: &mut impl Write,
) -> Result<u8> {
    let text = read_text(file)?;
    let (dict, mut user) = args.open()?;
    let mut session = CorrectionSession::new("fix", text).with_options(args.options());

    if let Some(path) = journal.filter(|p| p.exists()) {
        let lines = read_text(path)?;
        let mut replayed = 0;
        for line in lines.lines().filter(|l| !l.is_empty()) {
            let action = Action::parse_journal_line(line)
                .with_context(|| format!("{}: bad journal line {line:?}", path.display()))?;
            if action != Action::Exit {
                session.next_flag(&dict, &user)?;
            }
            session
                .apply_action(action, &dict, &mut user)
                .with_context(|| format!("{} does not match {}", path.display(), file.display()))?;
            replayed += 1;
        }
        writeln!(out, "resumed after {replayed} decision(s) from {}", path.display())?;
    }
    let mut log = match journal {
        Some(path) => Some(
            OpenOptions::new()
                .create(true)
                .append(true)
                .open(path)
                .with_context(|| format!("opening {}", path.display()))?,
        ),
        None => None,
    };

    while session.status() == Status::Active {
        let flag = match session.next_flag(&dict, &user)? {
            Next::Flag(flag) => flag,
            Next::Done => break,
        };
        show(out, &session, &flag)?;
        let Some(action) = prompt(input, out, &flag)? else {
            // end of input: stop as if asked to
            session.apply_action(Action::Exit, &dict, &mut user)?;
            break;
        };
        match session.apply_action(action.clone(), &dict, &mut user) {
            Ok(()) => {}
            Err(e) => {
                writeln!(out, "{e}")?;
                continue;
            }
        }
        if action == Action::Store {
            save_user(args, &user)?;
        }
        if let Some(log) = log.as_mut().filter(|_| action != Action::Exit) {
            writeln!(log, "{}", action.to_journal_line())?;
            log.sync_data()?;
        }
    }

    let target = output.unwrap_or(file);
    let result = session.export()?;
    write_atomic(target, result.as_bytes()).with_context(|| format!("writing {}", target.display()))?;
    let changed = session.decisions().iter().filter(|d| d.replacement.is_some()).count();
    writeln!(out, "{changed} word(s) changed, written to {}", target.display())?;
    // the result is on disk; the journal only guards against a crash
    if let Some(path) = journal {
        fs::remove_file(path).with_context(|| format!("removing {}", path.display()))?;
    }
    Ok(0)
}

fn show(out: &mut impl Write, session: &CorrectionSession, flag: &Flag) -> io::Result<()> {
    let text = session.text();
    let (line, col) = line_col(text, flag.span.start);
    let line_start = text[..flag.span.start].rfind('\n').map_or(0, |i| i + 1);
    let line_end = text[flag.span.end..].find('\n').map_or(text.len(), |i| flag.span.end + i);
    writeln!(out)?;
    writeln!(
        out,
        "{line}:{col}: {}[{}]{}",
        &text[line_start..flag.span.start],
        flag.word,
        &text[flag.span.end..line_end]
    )?;
    for s in &flag.suggestions {
        writeln!(out, "  {:>2}) {}  ({})", s.rank, s.display, s.class.name())?;
    }
    Ok(())
}

/// Reads one choice; `None` at end of input.
fn prompt(input: &mut impl BufRead, out: &mut impl Write, flag: &Flag) -> Result<Option<Action>> {
    loop {
        write!(out, "[N] correct, (s)kip, (e)dit, s(t)ore, e(x)it: ")?;
        out.flush()?;
        let Some(line) = read_line(input)? else { return Ok(None) };
        let choice = line.trim();
        let action = match choice {
            "s" | "skip" => Action::Skip,
            "t" | "store" => Action::Store,
            "x" | "exit" => Action::Exit,
            "e" | "edit" => {
                write!(out, "replacement for {}: ", flag.word)?;
                out.flush()?;
                let Some(text) = read_line(input)? else { return Ok(None) };
                Action::Edit(text.trim().to_string())
            }
            n => match n.parse::<usize>() {
                Ok(i) => Action::Correct(i),
                Err(_) => {
                    writeln!(out, "unknown choice {choice:?}")?;
                    continue;
                }
            },
        };
        return Ok(Some(action));
    }
}

fn read_line(input: &mut impl BufRead) -> Result<Option<String>> {
    let mut line = String::new();
    if input.read_line(&mut line)? == 0 {
        return Ok(None);
    }
    Ok(Some(line.trim_end_matches(['\n', '\r']).to_string()))
}

fn serve(args: &DictArgs, listen: &str) -> Result<u8> {
    let (dict, user) = args.open()?;
    let config = ServerConfig {
        user_path: args.user.clone(),
        options: args.options(),
    };
    let state = AppState::new(Arc::new(dict), user, config);
    let runtime = tokio::runtime::Runtime::new()?;
    runtime.block_on(async {
        let listener = tokio::net::TcpListener::bind(listen)
            .await
            .with_context(|| format!("binding {listen}"))?;
        eprintln!("glspell: listening on {}", listener.local_addr()?);
        glspell_server::serve(listener, state).await?;
        Ok::<u8, anyhow::Error>(0)
    })
}
