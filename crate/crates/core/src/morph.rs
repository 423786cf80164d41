//! Inflection generator: expands resolved lexicon entries into stressed
//! surface forms.

use std::collections::HashSet;

use crate::error::MorphError;
use crate::gwdl::{ResolvedEntry, ResolvedForm, ResolvedRuleSet};
use crate::text::{apply_stress, syllable_count, Spelling};

/// One generated word form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceForm {
    pub display: String,
    pub spelling: Spelling,
    pub stress: Option<u8>,
    pub entry_id: usize,
    pub form_index: usize,
    pub suffix_index: usize,
}

/// Stress position for the `index`-th suffix (1-based). Tuples shorter than
/// the suffix list repeat their last position.
pub fn stress_for(tuple: &[u8], index: usize) -> u8 {
    debug_assert!(index >= 1);
    let i = index.saturating_sub(1);
    tuple
        .get(i)
        .or_else(|| tuple.last())
        .copied()
        .unwrap_or(1)
}

/// Where the tonos actually lands on a word of `syllables` syllables when
/// `requested` is asked for. The second value tells whether the request
/// had to be clamped.
pub fn place_stress(requested: u8, syllables: usize) -> (Option<u8>, bool) {
    if syllables <= 1 {
        return (None, false);
    }
    let requested = requested.max(1);
    if requested as usize > syllables {
        (Some(syllables as u8), true)
    } else {
        (Some(requested), false)
    }
}

/// Expands one form of an entry: one surface form per suffix, in rule
/// order.
pub fn expand_form(
    entry_id: usize,
    form_index: usize,
    stem: &Spelling,
    form: &ResolvedForm,
) -> Result<Vec<SurfaceForm>, MorphError> {
    let mut out = Vec::with_capacity(form.suffixes.len());
    for (i, suffix) in form.suffixes.iter().enumerate() {
        let spelling = Spelling::concat([stem, &form.infix, suffix]);
        if spelling.is_empty() {
            return Err(MorphError::EmptyWord { entry: entry_id });
        }
        let (stress, _) = place_stress(stress_for(&form.stress, i + 1), syllable_count(&spelling));
        let display = match stress {
            Some(p) => apply_stress(&spelling, p).expect("stress placed within syllable count"),
            None => spelling.render(),
        };
        out.push(SurfaceForm {
            display,
            spelling,
            stress,
            entry_id,
            form_index,
            suffix_index: i,
        });
    }
    Ok(out)
}

/// All forms of an entry, deduplicated on the display string, in form then
/// suffix order.
pub fn expand_entry(entry: &ResolvedEntry) -> Result<Vec<SurfaceForm>, MorphError> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for (form_index, form) in entry.forms.iter().enumerate() {
        for surface in expand_form(entry.id, form_index, &entry.stem, form)? {
            if seen.insert(surface.display.clone()) {
                out.push(surface);
            }
        }
    }
    Ok(out)
}

/// Streams the paradigms of every entry. Entries that fail to expand are
/// skipped; `validate` reports them.
pub fn expand_all(rules: &ResolvedRuleSet) -> impl Iterator<Item = SurfaceForm> + '_ {
    rules
        .entries
        .iter()
        .flat_map(|entry| expand_entry(entry).unwrap_or_default())
}
