use std::collections::BTreeMap;

use crate::gwdl::ResolvedRuleSet;
use crate::morph::expand_entry;
use crate::text::{Letter, Spelling};

use super::memory::{select_top, MemoryDictionary};
use super::records::{RecordStore, WordRecord, NON_INFLECTED};
use super::symbols::SymbolTableBuilder;
use super::trie::CompressedTrie;
use super::trigram::TrigramTable;
use super::{Dictionary, MatchOutcome};

pub const DEFAULT_MEMORY_SIZE: usize = 800;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuildOptions {
    /// Number of frequent forms kept in the memory dictionary.
    pub memory_size: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            memory_size: DEFAULT_MEMORY_SIZE,
        }
    }
}

/// Compiles resolved entries into a dictionary. Entries that cannot be
/// expanded are left out. `frequency` holds (count, form) pairs; only
/// forms the lexicon accepts reach the memory dictionary.
pub fn build(rules: &ResolvedRuleSet, frequency: &[(u64, String)], options: BuildOptions) -> Dictionary {
    let mut symbols = SymbolTableBuilder::default();
    let mut stems: BTreeMap<Vec<Letter>, BTreeMap<Spelling, WordRecord>> = BTreeMap::new();
    let mut trigrams = TrigramTable::new();

    for entry in &rules.entries {
        let Ok(forms) = expand_entry(entry) else {
            continue;
        };
        for form in &forms {
            trigrams.insert_word(form.spelling.letters());
        }
        let ids: Vec<u32> = entry.forms.iter().map(|f| symbols.intern_form(f)).collect();
        let record = stems
            .entry(entry.stem.letters().to_vec())
            .or_default()
            .entry(entry.stem.clone())
            .or_insert_with(|| WordRecord {
                stem: entry.stem.clone(),
                hyphens: entry.hyphens.iter().map(|&h| h as u16).collect(),
                flags: NON_INFLECTED,
                forms: Vec::new(),
            });
        if entry.inflected {
            record.flags &= !NON_INFLECTED;
        }
        for id in ids {
            if !record.forms.contains(&id) {
                record.forms.push(id);
            }
        }
    }

    let keys: Vec<Vec<Letter>> = stems.keys().cloned().collect();
    let blocks = stems.into_values().map(|b| b.into_values().collect()).collect();
    let mut dict = Dictionary::from_parts(
        symbols.finish(),
        CompressedTrie::build(&keys),
        RecordStore::owned(blocks),
        trigrams,
        MemoryDictionary::default(),
    );
    let top = select_top(frequency, options.memory_size, |w| dict.accepts(w) == MatchOutcome::Exact);
    dict.set_memory(MemoryDictionary::from_ranked(top));
    dict.reset_record_fetches();
    dict
}
