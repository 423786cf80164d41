use std::collections::HashMap;
use std::fs;
use std::io;
use std::path::Path;

use crate::error::{TextError, UserDictError};
use crate::text::{normalize, Letter, NormalizedWord, Spelling};

use super::trigram::TrigramTable;

/// Words added by the user, case-folded, with their own trigrams so the
/// correction pruning never discards them.
#[derive(Clone, Debug, Default)]
pub struct UserDictionary {
    /// Display form of every word, keyed by spelling and stress.
    words: HashMap<(Spelling, Option<u8>), String>,
    by_letters: HashMap<Vec<Letter>, Vec<(Spelling, Option<u8>)>>,
    trigrams: TrigramTable,
}

impl UserDictionary {
    pub fn new() -> UserDictionary {
        UserDictionary::default()
    }

    /// Adds a word; returns false when it was already present.
    pub fn add(&mut self, word: &str) -> Result<bool, TextError> {
        let word = normalize(word)?;
        Ok(self.add_word(&word))
    }

    pub fn add_word(&mut self, word: &NormalizedWord) -> bool {
        let key = (word.spelling.clone(), word.stress);
        if self.words.contains_key(&key) {
            return false;
        }
        self.words.insert(key.clone(), word.lowercase().render());
        self.trigrams.insert_word(word.letters());
        self.by_letters.entry(word.letters().to_vec()).or_default().push(key);
        true
    }

    pub fn contains(&self, word: &str) -> bool {
        normalize(word).is_ok_and(|w| self.contains_word(&w))
    }

    pub fn contains_word(&self, word: &NormalizedWord) -> bool {
        self.words.contains_key(&(word.spelling.clone(), word.stress))
    }

    /// Stored words with exactly these letters, as (spelling, stress,
    /// display).
    pub fn lookup_letters(&self, letters: &[Letter]) -> impl Iterator<Item = (&Spelling, Option<u8>, &str)> {
        self.by_letters
            .get(letters)
            .into_iter()
            .flatten()
            .map(|key| (&key.0, key.1, self.words[key].as_str()))
    }

    /// Every distinct letter sequence stored.
    pub fn letter_keys(&self) -> impl Iterator<Item = &[Letter]> {
        self.by_letters.keys().map(Vec::as_slice)
    }

    pub fn trigrams(&self) -> &TrigramTable {
        &self.trigrams
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Sorted NFC display forms.
    pub fn words(&self) -> Vec<&str> {
        let mut out: Vec<&str> = self.words.values().map(String::as_str).collect();
        out.sort_unstable();
        out
    }

    /// One word per line, sorted, each line newline-terminated.
    pub fn to_text(&self) -> String {
        self.words().iter().map(|w| format!("{w}\n")).collect()
    }

    pub fn from_text(text: &str) -> Result<UserDictionary, TextError> {
        let mut out = UserDictionary::new();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            out.add(line)?;
        }
        Ok(out)
    }

    pub fn save(&self, path: &Path) -> io::Result<()> {
        let tmp = path.with_extension("tmp");
        fs::write(&tmp, self.to_text())?;
        fs::rename(&tmp, path)
    }

    pub fn load(path: &Path) -> Result<UserDictionary, UserDictError> {
        let text = fs::read_to_string(path)?;
        Ok(UserDictionary::from_text(&text)?)
    }

    /// Like [`UserDictionary::load`], but a missing file gives an empty
    /// dictionary.
    pub fn load_or_default(path: &Path) -> Result<UserDictionary, UserDictError> {
        match fs::read_to_string(path) {
            Ok(text) => Ok(UserDictionary::from_text(&text)?),
            Err(e) if e.kind() == io::ErrorKind::NotFound => Ok(UserDictionary::new()),
            Err(e) => Err(e.into()),
        }
    }
}
