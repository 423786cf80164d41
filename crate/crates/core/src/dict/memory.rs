use std::collections::{HashMap, HashSet};

use crate::error::{FormatError, FrequencyError};
use crate::text::{normalize, NormalizedWord, Spelling};

use super::codec::{Reader, Writer};

/// The most frequent surface forms, held in memory for O(1) hits.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MemoryDictionary {
    /// Lowercase NFC forms, most frequent first.
    ranked: Vec<String>,
    keys: HashSet<(Spelling, Option<u8>)>,
}

impl MemoryDictionary {
    /// Forms must normalize; ones that do not are dropped.
    pub fn from_ranked(forms: Vec<String>) -> MemoryDictionary {
        let mut out = MemoryDictionary::default();
        for form in forms {
            if let Ok(word) = normalize(&form) {
                if out.keys.insert((word.spelling.clone(), word.stress)) {
                    out.ranked.push(word.lowercase().render());
                }
            }
        }
        out
    }

    pub fn contains(&self, word: &NormalizedWord) -> bool {
        // cheap clone of two small vectors; avoids a custom borrowed key
        self.keys.contains(&(word.spelling.clone(), word.stress))
    }

    pub fn contains_display(&self, display: &str) -> bool {
        normalize(display).is_ok_and(|w| self.contains(&w))
    }

    pub fn words(&self) -> &[String] {
        &self.ranked
    }

    pub fn len(&self) -> usize {
        self.ranked.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranked.is_empty()
    }

    pub(crate) fn encode(&self, w: &mut Writer) {
        w.len32(self.ranked.len());
        self.ranked.iter().for_each(|s| w.str(s));
    }

    pub(crate) fn decode(r: &mut Reader) -> Result<MemoryDictionary, FormatError> {
        let n = r.u32()?;
        let forms = (0..n).map(|_| r.str().map(str::to_string)).collect::<Result<Vec<_>, _>>()?;
        let count = forms.len();
        let out = MemoryDictionary::from_ranked(forms);
        if out.len() != count {
            return Err(r.malformed("invalid or repeated memory-dictionary form"));
        }
        Ok(out)
    }
}

/// Parses "count TAB form" lines. Blank lines and `;` comments are
/// skipped.
pub fn parse_frequency_list(text: &str) -> Result<Vec<(u64, String)>, FrequencyError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with(';') {
            continue;
        }
        let bad = || FrequencyError {
            line: i + 1,
            content: line.to_string(),
        };
        let (count, form) = line.split_once('\t').ok_or_else(bad)?;
        let count = count.trim().parse().map_err(|_| bad())?;
        let form = form.trim();
        if form.is_empty() {
            return Err(bad());
        }
        out.push((count, form.to_string()));
    }
    Ok(out)
}

/// Picks up to `limit` forms that `accepts` admits, by descending count;
/// ties go to the lexicographically smaller form. Repeated forms have
/// their counts summed. Forms are case-folded first.
pub fn select_top(
    entries: &[(u64, String)],
    limit: usize,
    accepts: impl Fn(&NormalizedWord) -> bool,
) -> Vec<String> {
    let mut totals: HashMap<String, u64> = HashMap::new();
    for (count, form) in entries {
        if let Ok(word) = normalize(form) {
            let word = word.lowercase();
            if accepts(&word) {
                *totals.entry(word.render()).or_default() += count;
            }
        }
    }
    let mut ranked: Vec<(u64, String)> = totals.into_iter().map(|(f, c)| (c, f)).collect();
    ranked.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.cmp(&b.1)));
    ranked.into_iter().take(limit).map(|(_, f)| f).collect()
}
