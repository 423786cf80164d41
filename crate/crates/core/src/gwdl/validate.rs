use std::collections::HashSet;

use crate::error::MorphError;
use crate::morph::{expand_form, place_stress, stress_for};
use crate::text::{syllabify, syllable_count, Spelling};

use super::ast::*;
use super::diagnostic::{Diagnostic, DiagnosticKind};
use super::parser::parse_sources;
use super::resolve::{resolve, ResolvedEntry, ResolvedRuleSet};

/// A parsed, resolved and checked lexicon.
#[derive(Clone, Debug, Default)]
pub struct Loaded {
    pub file: LexiconFile,
    pub rules: ResolvedRuleSet,
    pub diagnostics: Vec<Diagnostic>,
}

impl Loaded {
    pub fn has_errors(&self) -> bool {
        super::has_errors(&self.diagnostics)
    }

    pub fn render_diagnostics(&self) -> Vec<String> {
        self.diagnostics
            .iter()
            .map(|d| d.render(&self.file.sources))
            .collect()
    }
}

/// Parses, resolves and validates named sources in one go.
pub fn load<'a>(sources: impl IntoIterator<Item = (&'a str, &'a str)>) -> Loaded {
    let parsed = parse_sources(sources);
    let (rules, mut diagnostics) = check(&parsed.file);
    let mut all = parsed.diagnostics;
    all.append(&mut diagnostics);
    Loaded {
        file: parsed.file,
        rules,
        diagnostics: all,
    }
}

/// Resolution diagnostics plus semantic checks: stress positions within
/// 1..=3, stress tuples no longer than their suffix lists, every word
/// syllabifiable, stem hyphens in agreement with the syllables, and
/// clamped stresses (warnings).
pub fn validate(file: &LexiconFile) -> Vec<Diagnostic> {
    check(file).1
}

fn check(file: &LexiconFile) -> (ResolvedRuleSet, Vec<Diagnostic>) {
    let (rules, mut out) = resolve(file);
    check_stress_ranges(file, &mut out);

    let mut reported = HashSet::new();
    for forms in rules.form_rules.values() {
        for form in forms {
            check_tuple_length(form, &mut reported, &mut out);
        }
    }
    for entry in &rules.entries {
        for form in &entry.forms {
            check_tuple_length(form, &mut reported, &mut out);
        }
        check_entry(entry, &mut out);
    }
    (rules, out)
}

fn check_stress_ranges(file: &LexiconFile, out: &mut Vec<Diagnostic>) {
    let mut tuple = |positions: &[u8], pos: Pos| {
        if let Some(&bad) = positions.iter().find(|p| !(1..=3).contains(*p)) {
            out.push(Diagnostic::error(pos, DiagnosticKind::StressOutOfRange(bad)));
        }
    };
    let items = |items: &[FormItem], tuple: &mut dyn FnMut(&[u8], Pos)| {
        for item in items {
            if let FormItem::Form(Form {
                stress: StressSource::Inline(t),
                pos,
                ..
            }) = item
            {
                tuple(t, *pos);
            }
        }
    };
    for def in &file.definitions {
        match def {
            Definition::Stress(r) => tuple(&r.positions, r.name.pos),
            Definition::Form(r) => items(&r.alternatives, &mut tuple),
            Definition::Inflection(_) => {}
        }
    }
    for word in &file.words {
        match &word.body {
            EntryBody::Forms(f) => items(f, &mut tuple),
            EntryBody::Stress(StressSource::Inline(t)) => tuple(t, word.pos),
            EntryBody::Stress(StressSource::Ref(_)) => {}
        }
    }
}

fn check_tuple_length(
    form: &super::ResolvedForm,
    reported: &mut HashSet<(u16, u32, u32)>,
    out: &mut Vec<Diagnostic>,
) {
    if form.stress.len() <= form.suffixes.len() {
        return;
    }
    if reported.insert((form.pos.file, form.pos.line, form.pos.col)) {
        out.push(Diagnostic::error(
            form.pos,
            DiagnosticKind::StressTupleTooLong {
                tuple: form.stress.len(),
                suffixes: form.suffixes.len(),
            },
        ));
    }
}

fn check_entry(entry: &ResolvedEntry, out: &mut Vec<Diagnostic>) {
    let mut first_word: Option<Spelling> = None;
    for (form_index, form) in entry.forms.iter().enumerate() {
        let surfaces = match expand_form(entry.id, form_index, &entry.stem, form) {
            Ok(s) => s,
            Err(MorphError::EmptyWord { .. }) => {
                out.push(Diagnostic::error(entry.pos, DiagnosticKind::EmptyWord));
                return;
            }
        };
        for (i, surface) in surfaces.iter().enumerate() {
            let syllables = syllable_count(&surface.spelling);
            if syllables == 0 {
                out.push(Diagnostic::error(
                    entry.pos,
                    DiagnosticKind::NoVowel(surface.display.clone()),
                ));
                continue;
            }
            let requested = stress_for(&form.stress, i + 1);
            if let (_, true) = place_stress(requested, syllables) {
                out.push(Diagnostic::warning(
                    entry.pos,
                    DiagnosticKind::StressClamped {
                        form: surface.display.clone(),
                        position: requested,
                        syllables,
                    },
                ));
            }
            if first_word.is_none() {
                first_word = Some(surface.spelling.clone());
            }
        }
    }
    if let Some(word) = first_word {
        if !hyphens_agree(&word, &entry.hyphens) {
            out.push(Diagnostic::warning(
                entry.pos,
                DiagnosticKind::HyphenMismatch(entry.stem_display()),
            ));
        }
    }
}

/// Each hyphen must fall in the consonant gap between two consecutive
/// vowel nuclei, and no gap may hold two hyphens.
fn hyphens_agree(word: &Spelling, hyphens: &[usize]) -> bool {
    let Ok(syl) = syllabify(word) else {
        return hyphens.is_empty();
    };
    let mut used = HashSet::new();
    hyphens.iter().all(|&h| {
        let gap = syl
            .nuclei
            .windows(2)
            .position(|pair| pair[0].1 <= h && h <= pair[1].0);
        matches!(gap, Some(g) if used.insert(g))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gwdl::Severity;

    fn diags(src: &str) -> Vec<Diagnostic> {
        load([("t.gwdl", src)]).diagnostics
    }

    fn kinds(src: &str) -> Vec<DiagnosticKind> {
        diags(src).into_iter().map(|d| d.kind).collect()
    }

    #[test]
    fn stress_position_out_of_range() {
        let d = diags("!bad=(4).");
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].kind, DiagnosticKind::StressOutOfRange(4));
        assert!(d[0].message().contains("stress position out of range"));
        assert_eq!(kinds("#P=α. λ[#P(0)]."), vec![DiagnosticKind::StressOutOfRange(0)]);
    }

    #[test]
    fn coded_noun_is_clean() {
        assert!(diags(
            "!a14 = (3, 2, 3, 3, 2).\n#OUSOSb = ος|ου|ο|οι|ων|ους.\n$OUSOS7 = #OUSOSb !a14.\nπρο-ο-δ[$OUSOS7]."
        )
        .is_empty());
    }

    #[test]
    fn tuple_longer_than_suffix_list() {
        let k = kinds("!t=(1,1,1,1,1,1,1). #S=ος|ου|ο|οι|ων|ους. $F=#S!t. λο-γ[$F]. φι-λ[$F].");
        assert_eq!(
            k,
            vec![DiagnosticKind::StressTupleTooLong {
                tuple: 7,
                suffixes: 6
            }]
        );
    }

    #[test]
    fn clamp_is_a_warning() {
        let d = diags("#S=α|ος. λ[#S(3)].");
        assert_eq!(d.len(), 0, "monosyllables are not clamped: {d:?}");
        let d = diags("#S=ογος. λ[#S(3)].");
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].severity, Severity::Warning);
    }

    #[test]
    fn vowelless_and_empty_words() {
        assert_eq!(kinds("κτ(1)."), vec![DiagnosticKind::NoVowel("κτ".into())]);
        assert_eq!(kinds("#E=α|. [#E(1)]."), vec![DiagnosticKind::EmptyWord]);
    }

    #[test]
    fn hyphenation_agreement() {
        assert!(hyphens_agree(&Spelling::parse("προοδος").unwrap(), &[3, 4]));
        assert!(hyphens_agree(&Spelling::parse("προγραμμα").unwrap(), &[3, 7]));
        assert!(!hyphens_agree(&Spelling::parse("προοδος").unwrap(), &[1]));
        assert!(!hyphens_agree(&Spelling::parse("καποτε").unwrap(), &[2, 3]));
        let k = kinds("κ-απο-τε(3).");
        assert_eq!(k, vec![DiagnosticKind::HyphenMismatch("κ-απο-τε".into())]);
    }

    #[test]
    fn diagnostics_render_with_file_and_position() {
        let loaded = load([("lex.gwdl", "\n!bad=(4).")]);
        assert_eq!(
            loaded.render_diagnostics(),
            vec!["lex.gwdl:2:1: error: stress position out of range: 4 (allowed 1..=3)"]
        );
    }
}
