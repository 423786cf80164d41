use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::text::Spelling;

use super::ast::*;
use super::diagnostic::{Diagnostic, DiagnosticKind};

/// A form with every reference bound: stem + infix + suffix[i], stressed at
/// `stress[i]` (last value repeated when the tuple is short).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ResolvedForm {
    pub infix: Spelling,
    pub suffixes: Vec<Spelling>,
    pub stress: Vec<u8>,
    pub pos: Pos,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolvedEntry {
    /// Index of the entry in the source lexicon.
    pub id: usize,
    pub stem: Spelling,
    /// Letter offsets of the hyphens written in the stem.
    pub hyphens: Vec<usize>,
    pub forms: Vec<ResolvedForm>,
    /// False for `stem(p).` entries, which carry a stress but no endings.
    pub inflected: bool,
    pub pos: Pos,
}

impl ResolvedEntry {
    /// Stem as written, with hyphens.
    pub fn stem_display(&self) -> String {
        let letters = self.stem.render_fragment();
        let mut out = String::new();
        let mut cuts = self.hyphens.iter().peekable();
        for (i, c) in letters.chars().enumerate() {
            if cuts.peek() == Some(&&i) {
                out.push('-');
                cuts.next();
            }
            out.push(c);
        }
        out
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ResolvedRuleSet {
    pub sources: Vec<String>,
    pub stress_rules: BTreeMap<String, Vec<u8>>,
    pub inflections: BTreeMap<String, Vec<Spelling>>,
    pub form_rules: BTreeMap<String, Vec<ResolvedForm>>,
    pub entries: Vec<ResolvedEntry>,
}

impl ResolvedRuleSet {
    /// Distinct non-empty infixes used by the entries.
    pub fn infix_inventory(&self) -> BTreeSet<&Spelling> {
        self.used_forms()
            .map(|f| &f.infix)
            .filter(|i| !i.is_empty())
            .collect()
    }

    /// Distinct suffix lists used by the entries.
    pub fn inflection_inventory(&self) -> BTreeSet<&[Spelling]> {
        self.used_forms().map(|f| f.suffixes.as_slice()).collect()
    }

    /// Distinct stress tuples used by the entries.
    pub fn stress_inventory(&self) -> BTreeSet<&[u8]> {
        self.used_forms().map(|f| f.stress.as_slice()).collect()
    }

    fn used_forms(&self) -> impl Iterator<Item = &ResolvedForm> {
        self.entries.iter().flat_map(|e| e.forms.iter())
    }
}

/// Binds every rule reference. Entries with unresolvable references are
/// dropped and reported; the first of two same-named definitions wins.
pub fn resolve(file: &LexiconFile) -> (ResolvedRuleSet, Vec<Diagnostic>) {
    let mut resolver = Resolver {
        stress: HashMap::new(),
        inflection: HashMap::new(),
        forms: HashMap::new(),
        form_state: HashMap::new(),
        diagnostics: Vec::new(),
    };

    for def in &file.definitions {
        let name = def.name();
        let fresh = match def {
            Definition::Stress(r) => resolver.stress.insert_first(&name.text, r),
            Definition::Inflection(r) => resolver.inflection.insert_first(&name.text, r),
            Definition::Form(r) => resolver.forms.insert_first(&name.text, r),
        };
        if !fresh {
            resolver.diagnostics.push(Diagnostic::error(
                name.pos,
                DiagnosticKind::DuplicateDefinition(format!("{}{}", def.sigil(), name.text)),
            ));
        }
    }

    let mut out = ResolvedRuleSet {
        sources: file.sources.clone(),
        ..Default::default()
    };
    for (name, rule) in &resolver.stress {
        out.stress_rules.insert(name.to_string(), rule.positions.clone());
    }
    for (name, rule) in &resolver.inflection {
        out.inflections.insert(name.to_string(), rule.suffixes.clone());
    }
    for def in &file.definitions {
        if let Definition::Form(rule) = def {
            if let Some(forms) = resolver.form_rule(&rule.name.text, rule.name.pos) {
                out.form_rules.insert(rule.name.text.clone(), forms);
            }
        }
    }

    for (id, word) in file.words.iter().enumerate() {
        let resolved = match &word.body {
            EntryBody::Forms(items) => resolver.items(items).map(|forms| (forms, true)),
            EntryBody::Stress(s) => resolver.stress_source(s, word.pos).map(|stress| {
                let form = ResolvedForm {
                    infix: Spelling::default(),
                    suffixes: vec![Spelling::default()],
                    stress,
                    pos: word.pos,
                };
                (vec![form], false)
            }),
        };
        if let Some((forms, inflected)) = resolved {
            out.entries.push(ResolvedEntry {
                id,
                stem: word.stem.spelling(),
                hyphens: word.stem.hyphens(),
                forms,
                inflected,
                pos: word.pos,
            });
        }
    }
    (out, resolver.diagnostics)
}

trait InsertFirst<'a, V> {
    fn insert_first(&mut self, key: &'a str, value: V) -> bool;
}

impl<'a, V> InsertFirst<'a, V> for HashMap<&'a str, V> {
    fn insert_first(&mut self, key: &'a str, value: V) -> bool {
        if self.contains_key(key) {
            return false;
        }
        self.insert(key, value);
        true
    }
}

enum FormState {
    InProgress,
    Done(Option<Vec<ResolvedForm>>),
}

struct Resolver<'a> {
    stress: HashMap<&'a str, &'a StressRule>,
    inflection: HashMap<&'a str, &'a InflectionRule>,
    forms: HashMap<&'a str, &'a FormRule>,
    form_state: HashMap<&'a str, FormState>,
    diagnostics: Vec<Diagnostic>,
}

impl<'a> Resolver<'a> {
    fn unresolved(&mut self, sigil: char, name: &Name) {
        self.diagnostics.push(Diagnostic::error(
            name.pos,
            DiagnosticKind::UnresolvedReference(format!("{sigil}{}", name.text)),
        ));
    }

    fn form_rule(&mut self, name: &'a str, site: Pos) -> Option<Vec<ResolvedForm>> {
        match self.form_state.get(name) {
            Some(FormState::Done(forms)) => return forms.clone(),
            Some(FormState::InProgress) => {
                self.diagnostics.push(Diagnostic::error(
                    site,
                    DiagnosticKind::CycleDetected(format!("${name}")),
                ));
                return None;
            }
            None => {}
        }
        let rule = *self.forms.get(name)?;
        self.form_state.insert(name, FormState::InProgress);
        let forms = self.items(&rule.alternatives);
        self.form_state
            .insert(name, FormState::Done(forms.clone()));
        forms
    }

    fn items(&mut self, items: &'a [FormItem]) -> Option<Vec<ResolvedForm>> {
        let mut out = Vec::new();
        let mut ok = true;
        for item in items {
            match item {
                FormItem::Ref(name) => {
                    if !self.forms.contains_key(name.text.as_str()) {
                        self.unresolved('$', name);
                        ok = false;
                        continue;
                    }
                    match self.form_rule(&name.text, name.pos) {
                        Some(forms) => out.extend(forms),
                        None => ok = false,
                    }
                }
                FormItem::Form(form) => match self.form(form) {
                    Some(f) => out.push(f),
                    None => ok = false,
                },
            }
        }
        ok.then_some(out)
    }

    fn form(&mut self, form: &Form) -> Option<ResolvedForm> {
        let suffixes = match &form.inflection {
            InflectionSource::Inline(s) => Some(s.clone()),
            InflectionSource::Ref(name) => match self.inflection.get(name.text.as_str()) {
                Some(rule) => Some(rule.suffixes.clone()),
                None => {
                    self.unresolved('#', name);
                    None
                }
            },
        };
        let stress = self.stress_source(&form.stress, form.pos);
        Some(ResolvedForm {
            infix: form.infix.clone().unwrap_or_default(),
            suffixes: suffixes?,
            stress: stress?,
            pos: form.pos,
        })
    }

    fn stress_source(&mut self, source: &StressSource, _site: Pos) -> Option<Vec<u8>> {
        match source {
            StressSource::Inline(t) => Some(t.clone()),
            StressSource::Ref(name) => match self.stress.get(name.text.as_str()) {
                Some(rule) => Some(rule.positions.clone()),
                None => {
                    self.unresolved('!', name);
                    None
                }
            },
        }
    }
}
