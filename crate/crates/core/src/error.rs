use std::io;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TextError {
    #[error("not a Greek word: {0:?}")]
    NonGreekToken(String),
    #[error("no vowel in {0:?}")]
    NoVowel(String),
    #[error("stress position {position} out of range for {word:?} ({syllables} syllables)")]
    PositionOutOfRange {
        word: String,
        position: u8,
        syllables: usize,
    },
    #[error("unexpected stress mark in {0:?}")]
    UnexpectedStress(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorphError {
    #[error("entry {entry} produces an empty word")]
    EmptyWord { entry: usize },
}

/// Failures reading a compiled dictionary.
#[derive(Debug, Error)]
pub enum FormatError {
    #[error("bad magic number")]
    BadMagic,
    #[error("unsupported format version {0}")]
    UnsupportedVersion(u16),
    #[error("checksum mismatch: stored {stored:#010x}, computed {computed:#010x}")]
    ChecksumMismatch { stored: u32, computed: u32 },
    #[error("file truncated")]
    Truncated,
    #[error("malformed {section} section: {detail}")]
    Malformed {
        section: &'static str,
        detail: String,
    },
    #[error(transparent)]
    Io(#[from] io::Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: expected \"count<TAB>form\", found {content:?}")]
pub struct FrequencyError {
    pub line: usize,
    pub content: String,
}

#[derive(Debug, Error)]
pub enum UserDictError {
    #[error(transparent)]
    Text(#[from] TextError),
    #[error(transparent)]
    Io(#[from] io::Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SessionError {
    #[error("session is closed")]
    SessionClosed,
    #[error("session is still active")]
    SessionActive,
    #[error("suggestion index {index} out of range (1..={available})")]
    BadSuggestionIndex { index: usize, available: usize },
    #[error("no word is currently flagged")]
    NoCurrentFlag,
    #[error("replacement must not be empty")]
    EmptyReplacement,
    #[error("cannot store the word: {0}")]
    CannotStore(#[from] TextError),
}
