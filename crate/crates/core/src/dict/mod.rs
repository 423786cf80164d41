//! Compiled dictionary: stem trie, symbol table, word records, trigram
//! table and memory-resident forms, plus the mutable user dictionary.

mod build;
mod codec;
pub mod format;
mod memory;
mod records;
mod symbols;
mod trie;
mod trigram;
mod user;

use std::borrow::Cow;

use crate::morph::{place_stress, stress_for};
use crate::text::{apply_stress, syllable_count, Letter, NormalizedWord, Spelling};

pub use build::{build, BuildOptions, DEFAULT_MEMORY_SIZE};
pub use format::LoadPolicy;
pub use memory::{parse_frequency_list, select_top, MemoryDictionary};
pub use records::{RecordBlock, RecordStore, WordRecord, NON_INFLECTED};
pub use symbols::{FormRef, SymbolTable, SymbolTableBuilder};
pub use trie::{CompressedTrie, Cursor, StemCandidate, StemLookup, TrieNode};
pub use trigram::{TrigramTable, BOUNDARY};
pub use user::UserDictionary;

/// Result of looking a normalized word up in the main dictionary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatchOutcome {
    Exact,
    /// The letters are known but the stress (or diaeresis) differs; holds
    /// the expected displays.
    StressOnly(Vec<String>),
    None,
}

/// A stored form with the given letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FormMatch {
    pub spelling: Spelling,
    pub stress: Option<u8>,
}

impl FormMatch {
    pub fn display(&self) -> String {
        match self.stress {
            Some(p) => apply_stress(&self.spelling, p).unwrap_or_else(|_| self.spelling.render()),
            None => self.spelling.render(),
        }
    }
}

/// An immutable compiled dictionary, shareable between threads.
#[derive(Debug)]
pub struct Dictionary {
    symbols: SymbolTable,
    trie: CompressedTrie,
    records: RecordStore,
    trigrams: TrigramTable,
    memory: MemoryDictionary,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DictStats {
    pub stems: usize,
    pub records: usize,
    pub trie_nodes: usize,
    pub infixes: usize,
    pub inflections: usize,
    pub stress_tuples: usize,
    pub forms: usize,
    pub trigrams: usize,
    pub memory_words: usize,
}

impl Dictionary {
    pub fn from_parts(
        symbols: SymbolTable,
        trie: CompressedTrie,
        records: RecordStore,
        trigrams: TrigramTable,
        memory: MemoryDictionary,
    ) -> Dictionary {
        Dictionary {
            symbols,
            trie,
            records,
            trigrams,
            memory,
        }
    }

    pub fn empty() -> Dictionary {
        Dictionary::from_parts(
            SymbolTable::default(),
            CompressedTrie::default(),
            RecordStore::owned(Vec::new()),
            TrigramTable::new(),
            MemoryDictionary::default(),
        )
    }

    pub fn symbols(&self) -> &SymbolTable {
        &self.symbols
    }

    pub fn trie(&self) -> &CompressedTrie {
        &self.trie
    }

    pub fn records(&self) -> &RecordStore {
        &self.records
    }

    pub fn trigrams(&self) -> &TrigramTable {
        &self.trigrams
    }

    pub fn memory(&self) -> &MemoryDictionary {
        &self.memory
    }

    pub(crate) fn set_memory(&mut self, memory: MemoryDictionary) {
        self.memory = memory;
    }

    pub fn stem_candidates(&self, letters: &[Letter]) -> StemLookup {
        self.trie.stem_candidates(letters)
    }

    /// Record fetches since load (or the last reset).
    pub fn record_fetches(&self) -> u64 {
        self.records.fetches()
    }

    pub fn reset_record_fetches(&self) {
        self.records.reset_fetches()
    }

    pub fn accepts(&self, word: &NormalizedWord) -> MatchOutcome {
        let mut expected: Vec<String> = Vec::new();
        let mut exact = false;
        self.for_each_match(word.letters(), |m| {
            if m.spelling == word.spelling && m.stress == word.stress {
                exact = true;
                return true;
            }
            let display = m.display();
            if !expected.contains(&display) {
                expected.push(display);
            }
            false
        });
        if exact {
            MatchOutcome::Exact
        } else if expected.is_empty() {
            MatchOutcome::None
        } else {
            MatchOutcome::StressOnly(expected)
        }
    }

    /// Every stored form spelled with exactly these letters.
    pub fn lookup_letters(&self, letters: &[Letter]) -> Vec<FormMatch> {
        let mut out = Vec::new();
        self.for_each_match(letters, |m| {
            if !out.contains(&m) {
                out.push(m);
            }
            false
        });
        out
    }

    /// Calls `f` on each form whose letters equal `letters`, trying the
    /// longest stem first; stops as soon as `f` returns true.
    fn for_each_match(&self, letters: &[Letter], mut f: impl FnMut(FormMatch) -> bool) {
        let lookup = self.trie.stem_candidates(letters);
        for cand in lookup.candidates.iter().rev() {
            let Ok(block) = self.records.fetch(cand.block) else {
                continue;
            };
            let residual = &letters[cand.len..];
            for record in block.iter() {
                if self.match_record(record, residual, &mut f) {
                    return;
                }
            }
        }
    }

    fn match_record(&self, record: &WordRecord, residual: &[Letter], f: &mut impl FnMut(FormMatch) -> bool) -> bool {
        for &id in &record.forms {
            let form = &self.symbols.forms[id as usize];
            let infix = self.symbols.infix(form);
            let infix_letters = infix.map_or(&[][..], |i| i.letters());
            let Some(rest) = residual.strip_prefix(infix_letters) else {
                continue;
            };
            for (i, suffix) in self.symbols.suffixes(form).iter().enumerate() {
                if suffix.letters() != rest {
                    continue;
                }
                let m = self.form(record, infix, suffix, self.symbols.stress(form), i);
                if f(m) {
                    return true;
                }
            }
        }
        false
    }

    fn form(&self, record: &WordRecord, infix: Option<&Spelling>, suffix: &Spelling, tuple: &[u8], i: usize) -> FormMatch {
        let mut spelling = record.stem.clone();
        if let Some(infix) = infix {
            spelling.append(infix);
        }
        spelling.append(suffix);
        let (stress, _) = place_stress(stress_for(tuple, i + 1), syllable_count(&spelling));
        FormMatch { spelling, stress }
    }

    /// Every form of every record of a block, without counting a fetch.
    pub fn block_forms(&self, block: u32) -> Vec<FormMatch> {
        let Ok(records) = self.records.peek(block) else {
            return Vec::new();
        };
        let mut out = Vec::new();
        for record in records.iter() {
            for &id in &record.forms {
                let form = &self.symbols.forms[id as usize];
                for (i, suffix) in self.symbols.suffixes(form).iter().enumerate() {
                    let m = self.form(record, self.symbols.infix(form), suffix, self.symbols.stress(form), i);
                    if !out.contains(&m) {
                        out.push(m);
                    }
                }
            }
        }
        out
    }

    /// Every stored form, in stem order.
    pub fn all_forms(&self) -> Vec<FormMatch> {
        (0..self.records.len() as u32).flat_map(|b| self.block_forms(b)).collect()
    }

    pub fn block(&self, block: u32) -> Option<Cow<'_, [WordRecord]>> {
        self.records.peek(block).ok()
    }

    pub fn stats(&self) -> DictStats {
        let records = (0..self.records.len() as u32)
            .map(|b| self.records.peek(b).map_or(0, |r| r.len()))
            .sum();
        DictStats {
            stems: self.records.len(),
            records,
            trie_nodes: self.trie.node_count(),
            infixes: self.symbols.infixes.len(),
            inflections: self.symbols.inflections.len(),
            stress_tuples: self.symbols.stress_tuples.len(),
            forms: self.symbols.forms.len(),
            trigrams: self.trigrams.len(),
            memory_words: self.memory.len(),
        }
    }
}
