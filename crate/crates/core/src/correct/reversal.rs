//! Single typing errors undone: each of the four error types is applied
//! in reverse to the misspelling and the results are looked up.

use crate::dict::{Dictionary, TrigramTable, UserDictionary};
use crate::text::Letter;

/// The typing error the user made.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ErrorKind {
    /// A letter was left out; undone by inserting one.
    Deletion,
    /// A stray letter was typed; undone by deleting one.
    Insertion,
    Substitution,
    Transposition,
}

impl ErrorKind {
    pub fn name(self) -> &'static str {
        match self {
            ErrorKind::Deletion => "deletion",
            ErrorKind::Insertion => "insertion",
            ErrorKind::Substitution => "substitution",
            ErrorKind::Transposition => "transposition",
        }
    }
}

/// Dictionary probes made by each generator.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Probes {
    pub delete: usize,
    pub insert: usize,
    pub substitute: usize,
    pub transpose: usize,
}

impl Probes {
    pub fn total(&self) -> usize {
        self.delete + self.insert + self.substitute + self.transpose
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Reversal {
    /// Accepted displays with the error that explains them, without
    /// repeats; the first generator to find a display claims it.
    pub candidates: Vec<(String, ErrorKind)>,
    pub probes: Probes,
}

impl Reversal {
    pub fn displays(&self) -> impl Iterator<Item = &str> {
        self.candidates.iter().map(|(d, _)| d.as_str())
    }
}

struct Prober<'a> {
    dict: &'a Dictionary,
    user: &'a UserDictionary,
    out: Reversal,
}

impl Prober<'_> {
    fn probe(&mut self, letters: &[Letter], kind: ErrorKind) {
        let found = self
            .dict
            .lookup_letters(letters)
            .into_iter()
            .map(|m| m.display())
            .chain(self.user.lookup_letters(letters).map(|(_, _, d)| d.to_string()));
        for display in found {
            if !self.out.candidates.iter().any(|(d, _)| *d == display) {
                self.out.candidates.push((display, kind));
            }
        }
    }

    /// Whether every trigram around `position` occurs in some known word.
    fn plausible(&self, candidate: &[Letter], position: usize) -> bool {
        TrigramTable::covering(candidate, position)
            .all(|(a, b, c)| self.dict.trigrams().contains(a, b, c) || self.user.trigrams().contains(a, b, c))
    }
}

/// Runs the four generators over `word`. With `prune`, inserted and
/// substituted letters must form known trigrams before a lookup is made.
pub fn reversal_candidates(dict: &Dictionary, user: &UserDictionary, word: &[Letter], prune: bool) -> Reversal {
    let mut p = Prober {
        dict,
        user,
        out: Reversal::default(),
    };
    let n = word.len();
    let mut buf: Vec<Letter> = Vec::with_capacity(n + 1);

    if n > 1 {
        for i in 0..n {
            buf.clear();
            buf.extend_from_slice(&word[..i]);
            buf.extend_from_slice(&word[i + 1..]);
            p.out.probes.delete += 1;
            p.probe(&buf, ErrorKind::Insertion);
        }
    }

    for i in 0..=n {
        for letter in Letter::all() {
            buf.clear();
            buf.extend_from_slice(&word[..i]);
            buf.push(letter);
            buf.extend_from_slice(&word[i..]);
            if prune && !p.plausible(&buf, i) {
                continue;
            }
            p.out.probes.insert += 1;
            p.probe(&buf, ErrorKind::Deletion);
        }
    }

    for i in 0..n {
        for letter in Letter::all().filter(|&l| l != word[i]) {
            buf.clear();
            buf.extend_from_slice(word);
            buf[i] = letter;
            if prune && !p.plausible(&buf, i) {
                continue;
            }
            p.out.probes.substitute += 1;
            p.probe(&buf, ErrorKind::Substitution);
        }
    }

    for i in 1..n {
        if word[i - 1] == word[i] {
            continue;
        }
        buf.clear();
        buf.extend_from_slice(word);
        buf.swap(i - 1, i);
        p.out.probes.transpose += 1;
        p.probe(&buf, ErrorKind::Transposition);
    }

    p.out
}
