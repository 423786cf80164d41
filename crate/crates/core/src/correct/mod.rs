//! Checking words and proposing corrections.

mod ortho;
mod reversal;

pub use ortho::{orthographic_oracle, orthographic_search, ConfusionSets, Slot, ALLOPHONE_PAIRS, HOMOPHONE_SETS};
pub use reversal::{reversal_candidates, ErrorKind, Probes, Reversal};

use crate::dict::{Dictionary, MatchOutcome, UserDictionary};
use crate::error::TextError;
use crate::text::{normalize, NormalizedWord, Spelling};

pub const DEFAULT_MAX_SUGGESTIONS: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckerOptions {
    pub max_suggestions: usize,
    /// Trigram pruning of inserted and substituted letters.
    pub prune: bool,
}

impl Default for CheckerOptions {
    fn default() -> Self {
        CheckerOptions {
            max_suggestions: DEFAULT_MAX_SUGGESTIONS,
            prune: true,
        }
    }
}

/// Which dictionary accepted a word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    Memory,
    User,
    Main,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckResult {
    Accepted(Source),
    /// `stress` lists known spellings of the same letters, if any: the
    /// word is then most likely stressed on the wrong syllable.
    Flagged { stress: Vec<String> },
}

impl CheckResult {
    pub fn is_accepted(&self) -> bool {
        matches!(self, CheckResult::Accepted(_))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ErrorClass {
    Stress,
    Orthographic,
    Typographic(ErrorKind),
}

impl ErrorClass {
    pub fn name(self) -> &'static str {
        match self {
            ErrorClass::Stress => "stress",
            ErrorClass::Orthographic => "orthographic",
            ErrorClass::Typographic(_) => "typographic",
        }
    }

    pub fn kind(self) -> Option<ErrorKind> {
        match self {
            ErrorClass::Typographic(k) => Some(k),
            _ => None,
        }
    }

    fn priority(self) -> u8 {
        match self {
            ErrorClass::Stress => 0,
            ErrorClass::Orthographic => 1,
            ErrorClass::Typographic(_) => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Suggestion {
    pub display: String,
    pub class: ErrorClass,
    /// 1-based position in the list.
    pub rank: usize,
}

/// Checks words against the memory, user and main dictionaries, in that
/// order. Cheap to construct; holds only borrows.
#[derive(Clone, Copy)]
pub struct Checker<'a> {
    dict: &'a Dictionary,
    user: &'a UserDictionary,
    sets: &'a ConfusionSets,
    options: CheckerOptions,
}

fn default_sets() -> &'static ConfusionSets {
    static SETS: std::sync::OnceLock<ConfusionSets> = std::sync::OnceLock::new();
    SETS.get_or_init(ConfusionSets::default)
}

impl<'a> Checker<'a> {
    pub fn new(dict: &'a Dictionary, user: &'a UserDictionary) -> Checker<'a> {
        Checker {
            dict,
            user,
            sets: default_sets(),
            options: CheckerOptions::default(),
        }
    }

    pub fn with_options(self, options: CheckerOptions) -> Checker<'a> {
        Checker { options, ..self }
    }

    pub fn options(&self) -> CheckerOptions {
        self.options
    }

    pub fn check(&self, token: &str) -> Result<CheckResult, TextError> {
        Ok(self.check_word(&normalize(token)?))
    }

    pub fn check_word(&self, word: &NormalizedWord) -> CheckResult {
        if self.dict.memory().contains(word) {
            return CheckResult::Accepted(Source::Memory);
        }
        if self.user.contains_word(word) {
            return CheckResult::Accepted(Source::User);
        }
        let mut stress = match self.dict.accepts(word) {
            MatchOutcome::Exact => return CheckResult::Accepted(Source::Main),
            MatchOutcome::StressOnly(displays) => displays,
            MatchOutcome::None => Vec::new(),
        };
        let user_forms: Vec<&str> = self.user.lookup_letters(word.letters()).map(|(_, _, d)| d).collect();
        if is_all_caps(word) {
            // capitals are normally written without the tonos
            if !stress.is_empty() {
                return CheckResult::Accepted(Source::Main);
            }
            if !user_forms.is_empty() {
                return CheckResult::Accepted(Source::User);
            }
        }
        for d in user_forms {
            if !stress.iter().any(|s| s == d) {
                stress.push(d.to_string());
            }
        }
        CheckResult::Flagged { stress }
    }

    /// Known spellings that read like `word` under the confusion sets.
    pub fn orthographic_candidates(&self, word: &Spelling) -> Vec<String> {
        orthographic_search(self.sets, self.dict, self.user, word)
    }

    /// The brute-force counterpart of [`Self::orthographic_candidates`].
    pub fn orthographic_oracle(&self, word: &Spelling) -> Vec<String> {
        orthographic_oracle(self.sets, self.dict, self.user, word)
    }

    pub fn reversal_candidates(&self, word: &Spelling) -> Reversal {
        reversal_candidates(self.dict, self.user, word.letters(), self.options.prune)
    }

    /// Ranked corrections for a token; empty when the token is accepted.
    pub fn suggest(&self, token: &str) -> Result<Vec<Suggestion>, TextError> {
        let word = normalize(token)?;
        Ok(self.suggest_word(&word))
    }

    pub fn suggest_word(&self, word: &NormalizedWord) -> Vec<Suggestion> {
        let CheckResult::Flagged { stress } = self.check_word(word) else {
            return Vec::new();
        };
        let typed = word.lowercase().render();
        let mut pool: Vec<(String, ErrorClass)> = Vec::new();
        let mut offer = |display: String, class: ErrorClass| {
            if display == typed {
                return;
            }
            match pool.iter_mut().find(|(d, _)| *d == display) {
                Some(existing) if class.priority() < existing.1.priority() => existing.1 = class,
                Some(_) => {}
                None => pool.push((display, class)),
            }
        };
        for d in stress {
            offer(d, ErrorClass::Stress);
        }
        for d in self.orthographic_candidates(&word.spelling) {
            offer(d, ErrorClass::Orthographic);
        }
        for (d, kind) in self.reversal_candidates(&word.spelling).candidates {
            offer(d, ErrorClass::Typographic(kind));
        }

        let memory = self.dict.memory();
        let mut keyed: Vec<_> = pool
            .into_iter()
            .map(|(d, class)| {
                let letters = normalize(&d).map(|w| w.spelling).unwrap_or_default();
                (class.priority(), !memory.contains_display(&d), letters, d, class)
            })
            .collect();
        keyed.sort_by(|a, b| (a.0, a.1, &a.2, &a.3).cmp(&(b.0, b.1, &b.2, &b.3)));
        keyed
            .into_iter()
            .take(self.options.max_suggestions)
            .enumerate()
            .map(|(i, (_, _, _, d, class))| Suggestion {
                display: word.restore_case(&d),
                class,
                rank: i + 1,
            })
            .collect()
    }
}

fn is_all_caps(word: &NormalizedWord) -> bool {
    word.stress.is_none() && word.spelling.len() > 1 && word.uppercase.len() == word.spelling.len()
}
