use crate::error::FormatError;
use crate::text::{Letter, ALPHABET_SIZE};

use super::codec::{Reader, Writer};

/// Symbol index of the word-boundary sentinel.
pub const BOUNDARY: usize = ALPHABET_SIZE;
const SYMBOLS: usize = ALPHABET_SIZE + 1;
const BITS: usize = SYMBOLS * SYMBOLS * SYMBOLS;

/// Set of letter trigrams seen in valid words, each word padded with one
/// boundary sentinel on either side.
#[derive(Clone, PartialEq, Eq)]
pub struct TrigramTable {
    bits: Vec<u8>,
}

impl Default for TrigramTable {
    fn default() -> Self {
        TrigramTable {
            bits: vec![0; BITS.div_ceil(8)],
        }
    }
}

impl std::fmt::Debug for TrigramTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "TrigramTable({} trigrams)", self.len())
    }
}

fn index(a: usize, b: usize, c: usize) -> usize {
    (a * SYMBOLS + b) * SYMBOLS + c
}

/// Symbol at `i` of the padded word (`0` and `len + 1` are boundaries).
fn padded(word: &[Letter], i: usize) -> usize {
    if i == 0 || i > word.len() {
        BOUNDARY
    } else {
        word[i - 1].index()
    }
}

impl TrigramTable {
    pub fn new() -> TrigramTable {
        TrigramTable::default()
    }

    pub fn insert(&mut self, a: usize, b: usize, c: usize) {
        let i = index(a, b, c);
        self.bits[i / 8] |= 1 << (i % 8);
    }

    pub fn contains(&self, a: usize, b: usize, c: usize) -> bool {
        let i = index(a, b, c);
        self.bits[i / 8] & (1 << (i % 8)) != 0
    }

    pub fn insert_word(&mut self, word: &[Letter]) {
        for i in 0..word.len() {
            self.insert(padded(word, i), padded(word, i + 1), padded(word, i + 2));
        }
    }

    /// Whether every trigram of the padded word is in the table.
    pub fn contains_word(&self, word: &[Letter]) -> bool {
        (0..word.len()).all(|i| self.contains(padded(word, i), padded(word, i + 1), padded(word, i + 2)))
    }

    /// Trigrams of the padded `word` that cover letter `position`: the only
    /// ones that can change when that letter is inserted or replaced.
    pub fn covering(word: &[Letter], position: usize) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let p = position + 1;
        (p.saturating_sub(2)..=p)
            .filter(move |&start| start < word.len())
            .map(move |s| (padded(word, s), padded(word, s + 1), padded(word, s + 2)))
    }

    /// Looks up a trigram written as three characters, `^` or `$` marking
    /// a word boundary, e.g. `"^πρ"`.
    pub fn contains_str(&self, trigram: &str) -> bool {
        let symbols: Option<Vec<usize>> = trigram
            .chars()
            .map(|c| match c {
                '^' | '$' => Some(BOUNDARY),
                c => Letter::from_char(c).map(|(l, _)| l.index()),
            })
            .collect();
        match symbols.as_deref() {
            Some(&[a, b, c]) => self.contains(a, b, c),
            _ => false,
        }
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&b| b == 0)
    }

    pub(crate) fn encode(&self, w: &mut Writer) {
        w.len32(BITS);
        w.buf.extend_from_slice(&self.bits);
    }

    pub(crate) fn decode(r: &mut Reader) -> Result<TrigramTable, FormatError> {
        let bits = r.u32()? as usize;
        if bits != BITS {
            return Err(r.malformed(format!("expected {BITS} trigram bits, found {bits}")));
        }
        Ok(TrigramTable {
            bits: r.bytes(BITS.div_ceil(8))?.to_vec(),
        })
    }
}
