//! Homophone and allophone substitution.
//!
//! A word is cut into graphemes (two-letter graphemes first); each
//! grapheme may be read as any member of its confusion class. Instead of
//! enumerating every reading, the search walks the stem trie and prunes a
//! reading as soon as no stem continues it.

use std::collections::{BTreeSet, HashMap};

use crate::dict::{Cursor, Dictionary, FormMatch, UserDictionary};
use crate::text::{Letter, Spelling};

/// Vowels and vowel pairs pronounced alike.
pub const HOMOPHONE_SETS: [&[&str]; 3] = [&["ε", "αι"], &["ο", "ω"], &["η", "ι", "υ", "ει", "οι"]];
/// Letter groups that sound alike and are spelled either way.
pub const ALLOPHONE_PAIRS: [(&str, &str); 6] = [
    ("χθ", "χτ"),
    ("φθ", "φτ"),
    ("σθ", "στ"),
    ("αυ", "αβ"),
    ("ψ", "πσ"),
    ("ξ", "κσ"),
];
/// Digraphs read as a unit that have no alternative spelling.
const ATOMIC: [&str; 2] = ["ου", "ευ"];
const VOWEL_DIGRAPHS: [&str; 6] = ["αι", "ει", "οι", "ου", "ευ", "αυ"];

fn letters(s: &str) -> Vec<Letter> {
    Spelling::parse(s).expect("Greek literal").letters().to_vec()
}

/// Grapheme table built from the confusion sets.
#[derive(Clone, Debug)]
pub struct ConfusionSets {
    alternatives: HashMap<Vec<Letter>, Vec<Vec<Letter>>>,
    vowel_digraphs: Vec<Vec<Letter>>,
}

impl Default for ConfusionSets {
    fn default() -> Self {
        let mut alternatives: HashMap<Vec<Letter>, Vec<Vec<Letter>>> = HashMap::new();
        let mut add_class = |class: &[&str]| {
            let members: Vec<Vec<Letter>> = class.iter().map(|s| letters(s)).collect();
            for m in &members {
                // the written grapheme comes first
                let mut alts = vec![m.clone()];
                alts.extend(members.iter().filter(|o| *o != m).cloned());
                alternatives.insert(m.clone(), alts);
            }
        };
        for set in HOMOPHONE_SETS {
            add_class(set);
        }
        for (a, b) in ALLOPHONE_PAIRS {
            add_class(&[a, b]);
        }
        for a in ATOMIC {
            add_class(&[a]);
        }
        ConfusionSets {
            alternatives,
            vowel_digraphs: VOWEL_DIGRAPHS.iter().map(|s| letters(s)).collect(),
        }
    }
}

/// One grapheme of the input with the letter sequences it may stand for;
/// the first alternative is the one written.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Slot {
    pub alternatives: Vec<Vec<Letter>>,
}

impl ConfusionSets {
    /// Longest-match segmentation. A diaeresis keeps a vowel pair apart.
    pub fn segment(&self, word: &Spelling) -> Vec<Slot> {
        let l = word.letters();
        let mut slots = Vec::new();
        let mut i = 0;
        while i < l.len() {
            if i + 1 < l.len() {
                let pair = &l[i..i + 2];
                let split = word.is_hiatus(i + 1) && self.vowel_digraphs.iter().any(|d| d == pair);
                if let (Some(alts), false) = (self.alternatives.get(pair), split) {
                    slots.push(Slot {
                        alternatives: alts.clone(),
                    });
                    i += 2;
                    continue;
                }
            }
            let single = &l[i..i + 1];
            let alternatives = self.alternatives.get(single).cloned().unwrap_or_else(|| vec![single.to_vec()]);
            slots.push(Slot { alternatives });
            i += 1;
        }
        slots
    }

    /// Graphemes of `word` that have more than one reading.
    pub fn substitutable_sites(&self, word: &Spelling) -> usize {
        self.segment(word).iter().filter(|s| s.alternatives.len() > 1).count()
    }
}

/// Whether `s` spells one reading of `slots`.
fn matches_slots(s: &[Letter], slots: &[Slot]) -> bool {
    match slots.split_first() {
        None => s.is_empty(),
        Some((slot, rest)) => slot
            .alternatives
            .iter()
            .any(|alt| s.strip_prefix(alt.as_slice()).is_some_and(|r| matches_slots(r, rest))),
    }
}

struct Search<'a> {
    dict: &'a Dictionary,
    slots: &'a [Slot],
    blocks: HashMap<u32, Vec<FormMatch>>,
    depth: usize,
    out: BTreeSet<String>,
}

impl Search<'_> {
    fn descend(&mut self, cursor: Cursor, i: usize) {
        let Some(slot) = self.slots.get(i) else {
            return;
        };
        for alt in &slot.alternatives {
            let mut c = cursor;
            let mut complete = true;
            for (j, &letter) in alt.iter().enumerate() {
                match self.dict.trie().advance(c, letter) {
                    Some(next) => c = next,
                    None => {
                        complete = false;
                        break;
                    }
                }
                if let Some(block) = self.dict.trie().terminal_at(c) {
                    self.collect(block, self.depth + j + 1, &alt[j + 1..], i + 1);
                }
            }
            if complete {
                self.depth += alt.len();
                self.descend(c, i + 1);
                self.depth -= alt.len();
            }
        }
    }

    /// Keeps the forms of `block` whose letters past the stem read as
    /// `head` followed by the slots from `next` on.
    fn collect(&mut self, block: u32, stem_len: usize, head: &[Letter], next: usize) {
        let dict = self.dict;
        let forms = self.blocks.entry(block).or_insert_with(|| dict.block_forms(block));
        for form in forms.iter() {
            let tail = &form.spelling.letters()[stem_len..];
            let ok = tail.strip_prefix(head).is_some_and(|r| matches_slots(r, &self.slots[next..]));
            if ok {
                self.out.insert(form.display());
            }
        }
    }
}

/// Displays of every stored form (main and user dictionary) that is one
/// reading of `word`, the written reading included.
pub fn orthographic_search(
    sets: &ConfusionSets,
    dict: &Dictionary,
    user: &UserDictionary,
    word: &Spelling,
) -> Vec<String> {
    let slots = sets.segment(word);
    let mut search = Search {
        dict,
        slots: &slots,
        blocks: HashMap::new(),
        depth: 0,
        out: BTreeSet::new(),
    };
    let root = dict.trie().root();
    if let Some(block) = dict.trie().terminal_at(root) {
        search.collect(block, 0, &[], 0);
    }
    search.descend(root, 0);
    let mut out = search.out;
    for key in user.letter_keys() {
        if matches_slots(key, &slots) {
            out.extend(user.lookup_letters(key).map(|(_, _, d)| d.to_string()));
        }
    }
    out.into_iter().collect()
}

/// Enumerates every reading and looks each one up. Exponential in the
/// number of substitutable sites; kept as a reference for the search.
pub fn orthographic_oracle(
    sets: &ConfusionSets,
    dict: &Dictionary,
    user: &UserDictionary,
    word: &Spelling,
) -> Vec<String> {
    let slots = sets.segment(word);
    let mut readings: Vec<Vec<Letter>> = vec![Vec::new()];
    for slot in &slots {
        readings = readings
            .iter()
            .flat_map(|r| {
                slot.alternatives.iter().map(move |alt| {
                    let mut next = r.clone();
                    next.extend_from_slice(alt);
                    next
                })
            })
            .collect();
    }
    let mut out = BTreeSet::new();
    for reading in readings {
        out.extend(dict.lookup_letters(&reading).iter().map(FormMatch::display));
        out.extend(user.lookup_letters(&reading).map(|(_, _, d)| d.to_string()));
    }
    out.into_iter().collect()
}
