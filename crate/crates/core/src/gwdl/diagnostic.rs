use std::fmt;

use super::ast::Pos;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Severity {
    Warning,
    Error,
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Severity::Warning => "warning",
            Severity::Error => "error",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiagnosticKind {
    SyntaxError { expected: Vec<String>, found: String },
    BadLetters(String),
    DuplicateDefinition(String),
    UnresolvedReference(String),
    CycleDetected(String),
    StressOutOfRange(u8),
    StressTupleTooLong { tuple: usize, suffixes: usize },
    EmptyInflection,
    EmptyWord,
    NoVowel(String),
    HyphenMismatch(String),
    StressClamped { form: String, position: u8, syllables: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub severity: Severity,
    pub pos: Pos,
    pub kind: DiagnosticKind,
}

impl Diagnostic {
    pub fn error(pos: Pos, kind: DiagnosticKind) -> Diagnostic {
        Diagnostic {
            severity: Severity::Error,
            pos,
            kind,
        }
    }

    pub fn warning(pos: Pos, kind: DiagnosticKind) -> Diagnostic {
        Diagnostic {
            severity: Severity::Warning,
            pos,
            kind,
        }
    }

    pub fn is_error(&self) -> bool {
        self.severity == Severity::Error
    }

    pub fn message(&self) -> String {
        match &self.kind {
            DiagnosticKind::SyntaxError { expected, found } => {
                format!("syntax error: expected {}, found {found}", expected.join(" or "))
            }
            DiagnosticKind::BadLetters(detail) => detail.clone(),
            DiagnosticKind::DuplicateDefinition(name) => format!("duplicate definition of {name}"),
            DiagnosticKind::UnresolvedReference(name) => format!("unresolved reference {name}"),
            DiagnosticKind::CycleDetected(name) => format!("form rule {name} refers to itself"),
            DiagnosticKind::StressOutOfRange(p) => {
                format!("stress position out of range: {p} (allowed 1..=3)")
            }
            DiagnosticKind::StressTupleTooLong { tuple, suffixes } => format!(
                "stress tuple has {tuple} positions but the inflection has {suffixes} suffixes"
            ),
            DiagnosticKind::EmptyInflection => "inflection has no suffixes".to_string(),
            DiagnosticKind::EmptyWord => "entry produces an empty word".to_string(),
            DiagnosticKind::NoVowel(w) => format!("word {w:?} has no vowel"),
            DiagnosticKind::HyphenMismatch(stem) => {
                format!("hyphenation of {stem:?} disagrees with its syllables")
            }
            DiagnosticKind::StressClamped {
                form,
                position,
                syllables,
            } => format!(
                "stress position {position} exceeds the {syllables} syllables of {form:?}; clamped"
            ),
        }
    }

    /// `file:line:col: severity: message`
    pub fn render(&self, sources: &[String]) -> String {
        let file = sources
            .get(self.pos.file as usize)
            .map(String::as_str)
            .unwrap_or("<input>");
        format!(
            "{file}:{}:{}: {}: {}",
            self.pos.line,
            self.pos.col,
            self.severity,
            self.message()
        )
    }
}

pub fn has_errors(diagnostics: &[Diagnostic]) -> bool {
    diagnostics.iter().any(Diagnostic::is_error)
}
