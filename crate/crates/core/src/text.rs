//! Greek alphabet model: normalization, syllabification and stress placement.
//!
//! Words are kept internally as a sequence of the 24 lowercase base letters
//! plus a stress index counted in syllables from the end of the word
//! (1 = final, 2 = penultimate, 3 = antepenultimate). The tonos and the
//! final-sigma shape are rendering details and never stored.

use std::fmt;

use unicode_normalization::UnicodeNormalization;

use crate::error::TextError;

const COMBINING_ACUTE: char = '\u{301}';
const COMBINING_DIAERESIS: char = '\u{308}';
const COMBINING_DIALYTIKA_TONOS: char = '\u{344}';
const GREEK_TONOS: char = '\u{384}';

/// Number of base letters in the Greek alphabet.
pub const ALPHABET_SIZE: usize = 24;

const LOWER: [char; ALPHABET_SIZE] = [
    'α', 'β', 'γ', 'δ', 'ε', 'ζ', 'η', 'θ', 'ι', 'κ', 'λ', 'μ', 'ν', 'ξ', 'ο', 'π', 'ρ', 'σ', 'τ',
    'υ', 'φ', 'χ', 'ψ', 'ω',
];

const UPPER: [char; ALPHABET_SIZE] = [
    'Α', 'Β', 'Γ', 'Δ', 'Ε', 'Ζ', 'Η', 'Θ', 'Ι', 'Κ', 'Λ', 'Μ', 'Ν', 'Ξ', 'Ο', 'Π', 'Ρ', 'Σ', 'Τ',
    'Υ', 'Φ', 'Χ', 'Ψ', 'Ω',
];

/// One of the 24 base letters. Final sigma is not a separate letter.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(u8);

impl Letter {
    pub const ALPHA: Letter = Letter(0);
    pub const EPSILON: Letter = Letter(4);
    pub const ETA: Letter = Letter(6);
    pub const IOTA: Letter = Letter(8);
    pub const OMICRON: Letter = Letter(14);
    pub const SIGMA: Letter = Letter(17);
    pub const UPSILON: Letter = Letter(19);
    pub const OMEGA: Letter = Letter(23);

    pub fn from_index(index: usize) -> Option<Letter> {
        (index < ALPHABET_SIZE).then_some(Letter(index as u8))
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// Iterates the whole alphabet in order.
    pub fn all() -> impl Iterator<Item = Letter> {
        (0..ALPHABET_SIZE as u8).map(Letter)
    }

    /// Maps a base letter (either case, final sigma included) to its code.
    /// Returns the letter and whether the input was uppercase.
    pub fn from_char(c: char) -> Option<(Letter, bool)> {
        let code = c as u32;
        match code {
            0x3B1..=0x3C9 => {
                let offset = code - 0x3B1;
                // ς (0x3C2) and σ (0x3C3) share a code
                let index = if code >= 0x3C3 { offset - 1 } else { offset };
                Some((Letter(index as u8), false))
            }
            0x391..=0x3A9 if code != 0x3A2 => {
                let offset = code - 0x391;
                let index = if code > 0x3A2 { offset - 1 } else { offset };
                Some((Letter(index as u8), true))
            }
            _ => None,
        }
    }

    pub fn to_char(self) -> char {
        LOWER[self.index()]
    }

    pub fn to_upper_char(self) -> char {
        UPPER[self.index()]
    }

    pub fn is_vowel(self) -> bool {
        matches!(self.0, 0 | 4 | 6 | 8 | 14 | 19 | 23)
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// Vowel pairs pronounced as a single nucleus unless marked otherwise.
fn is_digraph(first: Letter, second: Letter) -> bool {
    use Letter as L;
    matches!(
        (first, second),
        (L::ALPHA, L::IOTA)
            | (L::EPSILON, L::IOTA)
            | (L::OMICRON, L::IOTA)
            | (L::OMICRON, L::UPSILON)
            | (L::UPSILON, L::IOTA)
            | (L::ALPHA, L::UPSILON)
            | (L::EPSILON, L::UPSILON)
    )
}

/// An unstressed letter sequence.
///
/// `hiatus` lists positions `p` where letters `p - 1` and `p` would form a
/// digraph but are pronounced as two syllables (written with a diaeresis,
/// or with the tonos on the first vowel). Only such positions are kept, so
/// two spellings of the same word compare equal.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Spelling {
    letters: Vec<Letter>,
    hiatus: Vec<u16>,
}

impl Spelling {
    pub fn new(letters: Vec<Letter>) -> Spelling {
        Spelling {
            letters,
            hiatus: Vec::new(),
        }
    }

    pub fn with_hiatus(letters: Vec<Letter>, hiatus: impl IntoIterator<Item = usize>) -> Spelling {
        let mut spelling = Spelling::new(letters);
        for p in hiatus {
            spelling.mark_hiatus(p);
        }
        spelling
    }

    /// Parses lowercase or uppercase Greek letters without stress marks.
    /// A diaeresis is accepted and recorded as hiatus.
    pub fn parse(text: &str) -> Result<Spelling, TextError> {
        let word = normalize(text)?;
        if word.stress.is_some() || word.marked_stress {
            return Err(TextError::UnexpectedStress(text.to_string()));
        }
        Ok(word.spelling)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn hiatus(&self) -> &[u16] {
        &self.hiatus
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_hiatus(&self, position: usize) -> bool {
        self.hiatus.binary_search(&(position as u16)).is_ok()
    }

    /// Records a hiatus at `position` if the letters there would otherwise
    /// bind into a digraph. Returns whether the mark was kept.
    pub fn mark_hiatus(&mut self, position: usize) -> bool {
        if position == 0 || position >= self.letters.len() {
            return false;
        }
        if !is_digraph(self.letters[position - 1], self.letters[position]) {
            return false;
        }
        let p = position as u16;
        if let Err(at) = self.hiatus.binary_search(&p) {
            self.hiatus.insert(at, p);
        }
        true
    }

    /// Appends `other`, shifting its hiatus marks.
    pub fn append(&mut self, other: &Spelling) {
        let offset = self.letters.len();
        self.letters.extend_from_slice(&other.letters);
        for &p in &other.hiatus {
            self.mark_hiatus(offset + p as usize);
        }
    }

    pub fn concat<'a>(parts: impl IntoIterator<Item = &'a Spelling>) -> Spelling {
        let mut out = Spelling::default();
        for part in parts {
            out.append(part);
        }
        out
    }

    /// Hiatus marks falling within `start..end`, re-based to `start`.
    pub fn slice(&self, start: usize, end: usize) -> Spelling {
        let mut out = Spelling::new(self.letters[start..end].to_vec());
        for &p in &self.hiatus {
            let p = p as usize;
            if p > start && p < end {
                out.mark_hiatus(p - start);
            }
        }
        out
    }

    /// Plain lowercase rendering, final sigma applied, no stress mark.
    pub fn render(&self) -> String {
        render_letters(self, None, &[], true)
    }

    /// Rendering for word fragments such as stems and infixes: like
    /// [`Spelling::render`] but σ never takes its final form.
    pub fn render_fragment(&self) -> String {
        render_letters(self, None, &[], false)
    }
}

impl From<Vec<Letter>> for Spelling {
    fn from(letters: Vec<Letter>) -> Self {
        Spelling::new(letters)
    }
}

impl fmt::Display for Spelling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for Spelling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.render())
    }
}

/// Vowel nuclei of a word as half-open letter spans, word start to end.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Syllabification {
    pub nuclei: Vec<(usize, usize)>,
}

impl Syllabification {
    pub fn syllable_count(&self) -> usize {
        self.nuclei.len()
    }

    /// Nucleus holding the letter at `position`, counted from the word end.
    pub fn position_of_letter(&self, letter: usize) -> Option<u8> {
        let idx = self
            .nuclei
            .iter()
            .position(|&(s, e)| (s..e).contains(&letter))?;
        Some((self.nuclei.len() - idx) as u8)
    }

    /// The vowel that carries the tonos when the syllable `position` (from
    /// the end) is stressed: the last letter of its nucleus.
    pub fn stress_vowel(&self, position: u8) -> Option<usize> {
        let position = position as usize;
        if position == 0 || position > self.nuclei.len() {
            return None;
        }
        let (_, end) = self.nuclei[self.nuclei.len() - position];
        Some(end - 1)
    }

    /// Start index of each syllable, consonants attaching to the following
    /// nucleus.
    pub fn syllable_starts(&self) -> Vec<usize> {
        let mut starts = Vec::with_capacity(self.nuclei.len());
        let mut prev_end = 0;
        for &(_, end) in &self.nuclei {
            starts.push(prev_end);
            prev_end = end;
        }
        starts
    }
}

/// Splits a word into vowel nuclei.
pub fn syllabify(word: &Spelling) -> Result<Syllabification, TextError> {
    let letters = word.letters();
    let mut nuclei = Vec::new();
    let mut i = 0;
    while i < letters.len() {
        if !letters[i].is_vowel() {
            i += 1;
            continue;
        }
        let binds = i + 1 < letters.len()
            && letters[i + 1].is_vowel()
            && is_digraph(letters[i], letters[i + 1])
            && !word.is_hiatus(i + 1);
        let end = if binds { i + 2 } else { i + 1 };
        nuclei.push((i, end));
        i = end;
    }
    if nuclei.is_empty() {
        return Err(TextError::NoVowel(word.letters.iter().map(|l| l.to_char()).collect()));
    }
    Ok(Syllabification { nuclei })
}

/// Number of syllables, zero for vowel-less sequences.
pub fn syllable_count(word: &Spelling) -> usize {
    syllabify(word).map(|s| s.syllable_count()).unwrap_or(0)
}

/// A token reduced to base letters, a stress index and a case mask.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NormalizedWord {
    pub spelling: Spelling,
    /// Syllable index from the end, `None` when unstressed or monosyllabic.
    pub stress: Option<u8>,
    /// Letter positions written in uppercase in the input.
    pub uppercase: Vec<u16>,
    // a monosyllable that carried a tonos; dropped from `stress`
    marked_stress: bool,
}

impl NormalizedWord {
    pub fn letters(&self) -> &[Letter] {
        self.spelling.letters()
    }

    pub fn is_uppercase(&self, position: usize) -> bool {
        self.uppercase.binary_search(&(position as u16)).is_ok()
    }

    /// NFC display form with the original capitalization.
    pub fn render(&self) -> String {
        render_letters(&self.spelling, self.stress, &self.uppercase, true)
    }

    /// Same word in lowercase.
    pub fn lowercase(&self) -> NormalizedWord {
        NormalizedWord {
            uppercase: Vec::new(),
            ..self.clone()
        }
    }

    /// Copies this word's capitalization onto another display string of
    /// equal or different length. Used when splicing suggestions.
    pub fn restore_case(&self, display: &str) -> String {
        if self.uppercase.is_empty() {
            return display.to_string();
        }
        let all_upper = self.uppercase.len() == self.spelling.len() && self.spelling.len() > 1;
        match normalize(display) {
            Ok(mut word) => {
                if all_upper && self.stress.is_none() {
                    // all-caps text conventionally omits the tonos
                    word.stress = None;
                }
                word.uppercase = if all_upper {
                    (0..word.spelling.len() as u16).collect()
                } else if self.is_uppercase(0) {
                    vec![0]
                } else {
                    Vec::new()
                };
                word.render()
            }
            Err(_) => display.to_string(),
        }
    }
}

/// Reduces a Greek token to base letters and stress position.
pub fn normalize(text: &str) -> Result<NormalizedWord, TextError> {
    let mut letters = Vec::new();
    let mut uppercase = Vec::new();
    let mut tonos: Option<usize> = None;
    let mut diaeresis = Vec::new();

    for c in text.nfd() {
        if let Some((letter, upper)) = Letter::from_char(c) {
            if upper {
                uppercase.push(letters.len() as u16);
            }
            letters.push(letter);
            continue;
        }
        match c {
            COMBINING_ACUTE | GREEK_TONOS => {
                let last = vowel_before(&letters, text)?;
                tonos = Some(last);
            }
            COMBINING_DIAERESIS => {
                let last = vowel_before(&letters, text)?;
                diaeresis.push(last);
            }
            COMBINING_DIALYTIKA_TONOS => {
                let last = vowel_before(&letters, text)?;
                diaeresis.push(last);
                tonos = Some(last);
            }
            '\'' | '’' | 'ʼ' => {}
            _ => return Err(TextError::NonGreekToken(text.to_string())),
        }
    }
    if letters.is_empty() {
        return Err(TextError::NonGreekToken(text.to_string()));
    }

    let mut spelling = Spelling::new(letters);
    for p in diaeresis {
        spelling.mark_hiatus(p);
    }

    let mut stress = None;
    let mut marked_stress = false;
    if let Some(vowel) = tonos {
        if let Ok(syl) = syllabify(&spelling) {
            // a tonos on the first vowel of a would-be digraph splits it
            let splits = syl
                .nuclei
                .iter()
                .any(|&(s, e)| e - s == 2 && s == vowel);
            let syl = if splits {
                spelling.mark_hiatus(vowel + 1);
                syllabify(&spelling)?
            } else {
                syl
            };
            if syl.syllable_count() > 1 {
                stress = syl.position_of_letter(vowel);
            } else {
                marked_stress = true;
            }
        }
    }

    Ok(NormalizedWord {
        spelling,
        stress,
        uppercase,
        marked_stress,
    })
}

fn vowel_before(letters: &[Letter], text: &str) -> Result<usize, TextError> {
    match letters.last() {
        Some(l) if l.is_vowel() => Ok(letters.len() - 1),
        _ => Err(TextError::NonGreekToken(text.to_string())),
    }
}

/// Renders `word` with the tonos on syllable `position` from the end.
pub fn apply_stress(word: &Spelling, position: u8) -> Result<String, TextError> {
    let count = syllable_count(word);
    if position == 0 || position as usize > count {
        return Err(TextError::PositionOutOfRange {
            word: word.render(),
            position,
            syllables: count,
        });
    }
    Ok(render_letters(word, Some(position), &[], true))
}

/// Drops the stress of a normalized word.
pub fn strip_stress(word: &NormalizedWord) -> Spelling {
    word.spelling.clone()
}

fn render_letters(
    word: &Spelling,
    stress: Option<u8>,
    uppercase: &[u16],
    final_sigma: bool,
) -> String {
    let letters = word.letters();
    let stress_vowel = match (stress, syllabify(word)) {
        (Some(p), Ok(syl)) if syl.syllable_count() > 1 => syl.stress_vowel(p),
        _ => None,
    };
    let mut out = String::with_capacity(letters.len() * 3);
    for (i, &letter) in letters.iter().enumerate() {
        let upper = uppercase.binary_search(&(i as u16)).is_ok();
        if upper {
            out.push(letter.to_upper_char());
        } else if final_sigma && letter == Letter::SIGMA && i + 1 == letters.len() {
            out.push('ς');
        } else {
            out.push(letter.to_char());
        }
        if word.is_hiatus(i) && stress_vowel != Some(i - 1) {
            out.push(COMBINING_DIAERESIS);
        }
        if stress_vowel == Some(i) {
            out.push(COMBINING_ACUTE);
        }
    }
    out.nfc().collect()
}

/// Composes `text` to Unicode normalization form C.
pub fn nfc(text: &str) -> String {
    text.nfc().collect()
}

/// Whether `c` may appear inside a Greek word token.
pub fn is_word_char(c: char) -> bool {
    if Letter::from_char(c).is_some() {
        return true;
    }
    match c {
        COMBINING_ACUTE | COMBINING_DIAERESIS | COMBINING_DIALYTIKA_TONOS => true,
        _ => {
            let mut buf = [0u8; 4];
            let s: &str = c.encode_utf8(&mut buf);
            let mut base = s.nfd();
            matches!(base.next(), Some(b) if Letter::from_char(b).is_some())
                && base.all(|m| {
                    matches!(
                        m,
                        COMBINING_ACUTE | COMBINING_DIAERESIS | COMBINING_DIALYTIKA_TONOS
                    )
                })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(s: &str) -> Spelling {
        Spelling::parse(s).unwrap()
    }

    fn spans(word: &str) -> Vec<String> {
        let w = sp(word);
        let syl = syllabify(&w).unwrap();
        let starts = syl.syllable_starts();
        let letters: Vec<char> = w.render().chars().collect();
        starts
            .iter()
            .enumerate()
            .map(|(i, &s)| {
                let e = starts.get(i + 1).copied().unwrap_or(letters.len());
                letters[s..e].iter().collect()
            })
            .collect()
    }

    #[test]
    fn alphabet_has_24_distinct_letters() {
        let chars: std::collections::BTreeSet<char> = Letter::all().map(Letter::to_char).collect();
        assert_eq!(chars.len(), 24);
        assert!(!chars.contains(&'ς'));
        for l in Letter::all() {
            assert_eq!(Letter::from_char(l.to_char()), Some((l, false)));
            assert_eq!(Letter::from_char(l.to_upper_char()), Some((l, true)));
        }
        assert_eq!(Letter::from_char('ς'), Some((Letter::SIGMA, false)));
        assert_eq!(Letter::from_char('\u{3A2}'), None);
    }

    #[test]
    fn normalize_examples() {
        let w = normalize("εδώ").unwrap();
        assert_eq!(w.spelling, sp("εδω"));
        assert_eq!(w.stress, Some(1));

        let w = normalize("προ").unwrap();
        assert_eq!(w.spelling, sp("προ"));
        assert_eq!(w.stress, None);

        let w = normalize("Τώρα").unwrap();
        assert_eq!(w.spelling, sp("τωρα"));
        assert_eq!(w.stress, Some(2));
        assert_eq!(w.uppercase, vec![0]);
        assert_eq!(w.render(), "Τώρα");
    }

    #[test]
    fn normalize_decomposed_input() {
        let w = normalize("εδω\u{301}").unwrap();
        assert_eq!(w.stress, Some(1));
        assert_eq!(w.render(), "εδώ");
    }

    #[test]
    fn normalize_rejects_non_greek() {
        assert!(matches!(normalize("abc"), Err(TextError::NonGreekToken(_))));
        assert!(matches!(normalize("λέξη1"), Err(TextError::NonGreekToken(_))));
        assert!(matches!(normalize(""), Err(TextError::NonGreekToken(_))));
    }

    #[test]
    fn apostrophe_is_dropped() {
        let w = normalize("παίζω''").unwrap();
        assert_eq!(w.render(), "παίζω");
    }

    #[test]
    fn monosyllables_lose_stress() {
        let w = normalize("ή").unwrap();
        assert_eq!(w.stress, None);
        assert_eq!(w.render(), "η");
        assert!(Spelling::parse("ή").is_err());
    }

    #[test]
    fn final_sigma() {
        let w = normalize("λόγοσ").unwrap();
        assert_eq!(w.render(), "λόγος");
        let w = normalize("σςσ").unwrap();
        assert_eq!(w.render(), "σσς");
    }

    #[test]
    fn syllabify_examples() {
        assert_eq!(spans("καποτε"), ["κα", "πο", "τε"]);
        assert_eq!(spans("προοδος"), ["προ", "ο", "δος"]);
        assert_eq!(spans("παιζουμε"), ["παι", "ζου", "με"]);
    }

    #[test]
    fn syllabify_requires_vowel() {
        assert!(matches!(syllabify(&sp("κτ")), Err(TextError::NoVowel(_))));
    }

    #[test]
    fn diaeresis_breaks_digraph() {
        let w = normalize("καΐκι").unwrap();
        assert_eq!(syllabify(&w.spelling).unwrap().syllable_count(), 3);
        assert_eq!(w.stress, Some(2));
        assert_eq!(w.render(), "καΐκι");

        let w = normalize("τσάι").unwrap();
        assert_eq!(syllabify(&w.spelling).unwrap().syllable_count(), 2);
        assert_eq!(w.stress, Some(2));
        assert_eq!(w.render(), "τσάι");

        let w = normalize("παϊδάκια").unwrap();
        assert_eq!(w.render(), "παϊδάκια");
    }

    #[test]
    fn apply_stress_examples() {
        assert_eq!(apply_stress(&sp("καποτε"), 3).unwrap(), "κάποτε");
        assert_eq!(apply_stress(&sp("εδω"), 1).unwrap(), "εδώ");
        assert_eq!(apply_stress(&sp("προοδους"), 2).unwrap(), "προόδους");
        assert_eq!(apply_stress(&sp("αγαπουσαμε"), 3).unwrap(), "αγαπούσαμε");
        assert_eq!(apply_stress(&sp("παιζουμε"), 3).unwrap(), "παίζουμε");
    }

    #[test]
    fn apply_stress_out_of_range() {
        assert!(matches!(
            apply_stress(&sp("εδω"), 3),
            Err(TextError::PositionOutOfRange { .. })
        ));
        assert!(apply_stress(&sp("εδω"), 0).is_err());
    }

    #[test]
    fn strip_stress_examples() {
        assert_eq!(strip_stress(&normalize("κεφάλι").unwrap()), sp("κεφαλι"));
        assert_eq!(strip_stress(&normalize("προ").unwrap()), sp("προ"));
        assert_eq!(
            strip_stress(&normalize("αγαπούσαμε").unwrap()),
            sp("αγαπουσαμε")
        );
    }

    #[test]
    fn render_matches_nfc_for_hand_list() {
        for x in [
            "Τώρα", "εδώ", "κάποτε", "πρόοδος", "προόδους", "αγαπούσανε", "ΠΡΌΟΔΟΣ", "Ιντραλέξ",
            "καΐκι", "τσάι", "ρολόι", "προϊόν", "Ελλάδα", "ευτυχία", "αϋπνία",
        ] {
            let w = normalize(x).unwrap();
            assert_eq!(w.render(), nfc(x), "{x}");
            let nfd: String = x.nfd().collect();
            assert_eq!(normalize(&nfd).unwrap(), w, "{x}");
        }
    }

    #[test]
    fn restore_case() {
        let w = normalize("Κέφαλι").unwrap();
        assert_eq!(w.restore_case("κεφάλι"), "Κεφάλι");
        let w = normalize("ΚΕΦΑΛΙ").unwrap();
        assert_eq!(w.restore_case("κεφάλι"), "ΚΕΦΑΛΙ");
        let w = normalize("κεφαλι").unwrap();
        assert_eq!(w.restore_case("κεφάλι"), "κεφάλι");
    }

    #[test]
    fn word_chars() {
        assert!("πρόοδος".chars().all(is_word_char));
        assert!(is_word_char('ΐ'));
        assert!(!is_word_char('a'));
        assert!(!is_word_char('.'));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn greek_token() -> impl Strategy<Value = String> {
            let base = prop::sample::select(
                "αβγδεζηθικλμνξοπρστυφχψωςΑΕΙΟΥάέήίόύώϊϋΐΰΆΈ".chars().collect::<Vec<_>>(),
            );
            prop::collection::vec(base, 1..12).prop_map(|v| v.into_iter().collect())
        }

        proptest! {
            #[test]
            fn normalize_is_idempotent(x in greek_token()) {
                let once = normalize(&x).unwrap();
                let twice = normalize(&once.render()).unwrap();
                prop_assert_eq!(&once.spelling, &twice.spelling);
                prop_assert_eq!(once.stress, twice.stress);
                prop_assert_eq!(&once.uppercase, &twice.uppercase);
            }

            #[test]
            fn stress_round_trip(x in greek_token()) {
                let w = normalize(&x).unwrap().lowercase();
                if let Some(p) = w.stress {
                    prop_assert_eq!(apply_stress(&strip_stress(&w), p).unwrap(), w.render());
                }
            }

            #[test]
            fn final_sigma_iff_last_letter_sigma(x in greek_token()) {
                let w = normalize(&x).unwrap().lowercase();
                let rendered = w.render();
                let ends_with_sigma = *w.letters().last().unwrap() == Letter::SIGMA;
                prop_assert_eq!(rendered.ends_with('ς'), ends_with_sigma);
                prop_assert_eq!(rendered.chars().filter(|&c| c == 'ς').count(), usize::from(ends_with_sigma));
            }

            #[test]
            fn stress_within_syllables(x in greek_token()) {
                let w = normalize(&x).unwrap();
                if let Some(p) = w.stress {
                    let n = syllable_count(&w.spelling);
                    prop_assert!(p >= 1 && (p as usize) <= n && n > 1);
                }
            }
        }
    }
}
