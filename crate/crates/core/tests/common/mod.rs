//! Shared fixtures: the seed dictionary and a typo generator that works
//! on displayed words, keeping each letter's accents attached to it.
#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::OnceLock;

use unicode_normalization::UnicodeNormalization;

use glspell_core::dict::{build, BuildOptions, Dictionary};
use glspell_core::gwdl::load;
use glspell_core::morph::expand_all;
use glspell_core::text::nfc;

pub const SEED: &str = include_str!("../../data/seed.gwdl");
pub const LOWER: &str = "αβγδεζηθικλμνξοπρστυφχψω";

pub fn seed_dict() -> &'static Dictionary {
    static DICT: OnceLock<Dictionary> = OnceLock::new();
    DICT.get_or_init(|| build(&load([("seed.gwdl", SEED)]).rules, &[], BuildOptions::default()))
}

/// Distinct displays of every generated form, sorted.
pub fn seed_forms() -> &'static [String] {
    static FORMS: OnceLock<Vec<String>> = OnceLock::new();
    FORMS.get_or_init(|| {
        let loaded = load([("seed.gwdl", SEED)]);
        let set: BTreeSet<String> = expand_all(&loaded.rules).map(|f| f.display).collect();
        set.into_iter().collect()
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Typo {
    /// Drop the letter at the index.
    Delete(usize),
    /// Type an extra letter before the index.
    Insert(usize, char),
    Substitute(usize, char),
    /// Swap the letters at the index and the next one.
    Transpose(usize),
}

/// Base letters with their combining marks.
pub fn clusters(display: &str) -> Vec<(char, Vec<char>)> {
    let mut out: Vec<(char, Vec<char>)> = Vec::new();
    for c in display.nfd() {
        match out.last_mut() {
            Some(last) if ('\u{300}'..='\u{36f}').contains(&c) => last.1.push(c),
            _ => out.push((if c == 'ς' { 'σ' } else { c }, Vec::new())),
        }
    }
    out
}

fn is_vowel(c: char) -> bool {
    "αεηιουω".contains(c)
}

/// Applies a typo; `None` when it does not apply or empties the word.
pub fn apply(display: &str, typo: Typo) -> Option<String> {
    let mut cs = clusters(display);
    match typo {
        Typo::Delete(i) if i < cs.len() && cs.len() > 1 => {
            cs.remove(i);
        }
        Typo::Insert(i, c) if i <= cs.len() => cs.insert(i, (c, Vec::new())),
        Typo::Substitute(i, c) if i < cs.len() && cs[i].0 != c => {
            cs[i].0 = c;
            if !is_vowel(c) {
                cs[i].1.clear();
            }
        }
        Typo::Transpose(i) if i + 1 < cs.len() && cs[i].0 != cs[i + 1].0 => cs.swap(i, i + 1),
        _ => return None,
    }
    let n = cs.len();
    let mut s = String::new();
    for (k, (base, marks)) in cs.into_iter().enumerate() {
        s.push(if base == 'σ' && k + 1 == n { 'ς' } else { base });
        s.extend(marks);
    }
    Some(nfc(&s))
}

/// Every typo of one type at every position; insertions and
/// substitutions use `letter` when given, else every letter.
pub fn all_typos(len: usize, kind: usize, letter: Option<char>) -> Vec<Typo> {
    let letters: Vec<char> = match letter {
        Some(c) => vec![c],
        None => LOWER.chars().collect(),
    };
    match kind {
        0 => (0..len).map(Typo::Delete).collect(),
        1 => (0..=len).flat_map(|i| letters.iter().map(move |&c| Typo::Insert(i, c))).collect(),
        2 => (0..len).flat_map(|i| letters.iter().map(move |&c| Typo::Substitute(i, c))).collect(),
        _ => (0..len.saturating_sub(1)).map(Typo::Transpose).collect(),
    }
}
