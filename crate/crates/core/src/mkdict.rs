//! Dictionary compiler: GWDL sources and an optional frequency list in,
//! `.gwd` bytes and a build report out.

use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::dict::format::{parse_container, TAGS};
use crate::dict::{build, parse_frequency_list, BuildOptions, DictStats, Dictionary};
use crate::error::FrequencyError;
use crate::gwdl::{load, Loaded};
use crate::morph::expand_entry;

#[derive(Debug, Error)]
pub enum CompileError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("{} error(s) in the lexicon", count_errors(.0))]
    Diagnostics(Vec<String>),
    #[error("frequency list: {0}")]
    Frequency(#[from] FrequencyError),
}

fn count_errors(rendered: &[String]) -> usize {
    rendered.iter().filter(|d| d.contains(": error: ")).count()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuildReport {
    pub entries: usize,
    /// Forms after per-entry deduplication.
    pub surface_forms: usize,
    pub stats: DictStats,
    /// Serialized size of each section, in file order.
    pub sections: Vec<(&'static str, usize)>,
    pub total_bytes: usize,
    /// Rendered diagnostics (warnings only on success).
    pub diagnostics: Vec<String>,
}

impl fmt::Display for BuildReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "entries            {}", self.entries)?;
        writeln!(f, "surface forms      {}", self.surface_forms)?;
        write_stats(f, &self.stats)?;
        write_sections(f, &self.sections, self.total_bytes)
    }
}

fn write_stats(f: &mut fmt::Formatter<'_>, s: &DictStats) -> fmt::Result {
    writeln!(f, "stems              {}", s.stems)?;
    writeln!(f, "records            {}", s.records)?;
    writeln!(f, "trie nodes         {}", s.trie_nodes)?;
    writeln!(f, "infixes            {}", s.infixes)?;
    writeln!(f, "inflections        {}", s.inflections)?;
    writeln!(f, "stress tuples      {}", s.stress_tuples)?;
    writeln!(f, "form triples       {}", s.forms)?;
    writeln!(f, "trigrams           {}", s.trigrams)?;
    writeln!(f, "memory words       {}", s.memory_words)
}

fn write_sections(f: &mut fmt::Formatter<'_>, sections: &[(&'static str, usize)], total: usize) -> fmt::Result {
    for (tag, size) in sections {
        writeln!(f, "section {tag}       {size} bytes")?;
    }
    writeln!(f, "total              {total} bytes")
}

/// Summary of an existing `.gwd` file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FileReport {
    pub stats: DictStats,
    pub sections: Vec<(&'static str, usize)>,
    pub total_bytes: usize,
}

impl fmt::Display for FileReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_stats(f, &self.stats)?;
        write_sections(f, &self.sections, self.total_bytes)
    }
}

pub fn inspect(bytes: &[u8]) -> Result<FileReport, crate::error::FormatError> {
    let sections = parse_container(bytes)?;
    let dict = Dictionary::from_bytes(bytes)?;
    Ok(FileReport {
        stats: dict.stats(),
        sections: sections.sizes().to_vec(),
        total_bytes: bytes.len(),
    })
}

/// Output of a successful compilation.
pub struct Compiled {
    pub dictionary: Dictionary,
    pub bytes: Vec<u8>,
    pub report: BuildReport,
}

/// Compiles in memory. Sources are (name, text) pairs.
pub fn compile_sources(
    sources: &[(String, String)],
    frequency: Option<&str>,
    options: BuildOptions,
) -> Result<Compiled, CompileError> {
    let loaded: Loaded = load(sources.iter().map(|(n, t)| (n.as_str(), t.as_str())));
    let diagnostics = loaded.render_diagnostics();
    if loaded.has_errors() {
        return Err(CompileError::Diagnostics(diagnostics));
    }
    let frequency = match frequency {
        Some(text) => parse_frequency_list(text)?,
        None => Vec::new(),
    };
    let dictionary = build(&loaded.rules, &frequency, options);
    let bytes = dictionary.to_bytes();
    let sections = parse_container(&bytes).expect("freshly serialized dictionary parses");
    let surface_forms = loaded
        .rules
        .entries
        .iter()
        .map(|e| expand_entry(e).map_or(0, |f| f.len()))
        .sum();
    let report = BuildReport {
        entries: loaded.rules.entries.len(),
        surface_forms,
        stats: dictionary.stats(),
        sections: sections.sizes().to_vec(),
        total_bytes: bytes.len(),
        diagnostics,
    };
    debug_assert_eq!(report.sections.len(), TAGS.len());
    Ok(Compiled {
        dictionary,
        bytes,
        report,
    })
}

fn read(path: &Path) -> Result<String, CompileError> {
    fs::read_to_string(path).map_err(|source| CompileError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Reads sources from disk, compiles, and writes `out` atomically. On
/// any error nothing is written.
pub fn compile(
    sources: &[PathBuf],
    frequency: Option<&Path>,
    out: &Path,
    options: BuildOptions,
) -> Result<BuildReport, CompileError> {
    let texts = sources
        .iter()
        .map(|p| Ok((p.display().to_string(), read(p)?)))
        .collect::<Result<Vec<_>, CompileError>>()?;
    let frequency = frequency.map(read).transpose()?;
    let compiled = compile_sources(&texts, frequency.as_deref(), options)?;
    write_atomic(out, &compiled.bytes).map_err(|source| CompileError::Io {
        path: out.to_path_buf(),
        source,
    })?;
    Ok(compiled.report)
}

/// Writes to a sibling temporary file, then renames it over `path`.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> io::Result<()> {
    let mut name = path.file_name().unwrap_or_default().to_os_string();
    name.push(".tmp");
    let tmp = path.with_file_name(name);
    let result = (|| {
        let mut file = fs::File::create(&tmp)?;
        file.write_all(bytes)?;
        file.sync_all()?;
        fs::rename(&tmp, path)
    })();
    if result.is_err() {
        let _ = fs::remove_file(&tmp);
    }
    result
}
