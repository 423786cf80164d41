use std::fmt;

use crate::text::Spelling;

/// Source location of a node. File is an index into
/// [`LexiconFile::sources`].
///
/// Positions are diagnostic metadata: two nodes that differ only in their
/// positions compare equal.
#[derive(Clone, Copy, Debug, Default)]
pub struct Pos {
    pub file: u16,
    pub line: u32,
    pub col: u32,
}

impl PartialEq for Pos {
    fn eq(&self, _: &Self) -> bool {
        true
    }
}

impl Eq for Pos {}

impl std::hash::Hash for Pos {
    fn hash<H: std::hash::Hasher>(&self, _: &mut H) {}
}

impl PartialOrd for Pos {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Pos {
    fn cmp(&self, _: &Self) -> std::cmp::Ordering {
        std::cmp::Ordering::Equal
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Name {
    pub text: String,
    pub pos: Pos,
}

impl Name {
    pub fn new(text: impl Into<String>) -> Name {
        Name {
            text: text.into(),
            pos: Pos::default(),
        }
    }
}

impl fmt::Display for Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LexiconFile {
    /// File names, indexed by [`Pos::file`].
    pub sources: Vec<String>,
    pub header: Option<Header>,
    pub definitions: Vec<Definition>,
    pub words: Vec<LexiconEntry>,
}

impl LexiconFile {
    /// Appends the definitions and words of `other`, re-basing its file
    /// indices. The first header wins.
    pub fn merge(&mut self, mut other: LexiconFile) {
        let offset = self.sources.len() as u16;
        if offset > 0 {
            other.visit_positions(&mut |pos| pos.file += offset);
        }
        self.sources.append(&mut other.sources);
        if self.header.is_none() {
            self.header = other.header;
        }
        self.definitions.append(&mut other.definitions);
        self.words.append(&mut other.words);
    }

    fn visit_positions(&mut self, f: &mut impl FnMut(&mut Pos)) {
        if let Some(h) = &mut self.header {
            f(&mut h.pos);
        }
        for def in &mut self.definitions {
            match def {
                Definition::Stress(r) => {
                    f(&mut r.name.pos);
                }
                Definition::Inflection(r) => {
                    f(&mut r.name.pos);
                }
                Definition::Form(r) => {
                    f(&mut r.name.pos);
                    r.alternatives.iter_mut().for_each(|a| a.visit_positions(f));
                }
            }
        }
        for word in &mut self.words {
            f(&mut word.pos);
            match &mut word.body {
                EntryBody::Forms(items) => items.iter_mut().for_each(|a| a.visit_positions(f)),
                EntryBody::Stress(s) => s.visit_positions(f),
            }
        }
    }
}

/// The optional `%VERSION n` line. Stored, never interpreted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Header {
    pub version: String,
    pub pos: Pos,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Definition {
    Stress(StressRule),
    Inflection(InflectionRule),
    Form(FormRule),
}

impl Definition {
    pub fn name(&self) -> &Name {
        match self {
            Definition::Stress(r) => &r.name,
            Definition::Inflection(r) => &r.name,
            Definition::Form(r) => &r.name,
        }
    }

    pub fn sigil(&self) -> char {
        match self {
            Definition::Stress(_) => '!',
            Definition::Inflection(_) => '#',
            Definition::Form(_) => '$',
        }
    }
}

/// `!name = (p1, p2, ...)`: one syllable-from-end position per suffix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StressRule {
    pub name: Name,
    pub positions: Vec<u8>,
}

/// `#name = s1|s2|...`: ordered suffix alternatives. A trailing `|`
/// contributes an empty suffix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InflectionRule {
    pub name: Name,
    pub suffixes: Vec<Spelling>,
}

/// `$name = form | form ...`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormRule {
    pub name: Name,
    pub alternatives: Vec<FormItem>,
}

/// One alternative inside a form rule or a word's bracket list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FormItem {
    Ref(Name),
    Form(Form),
}

impl FormItem {
    fn visit_positions(&mut self, f: &mut impl FnMut(&mut Pos)) {
        match self {
            FormItem::Ref(n) => f(&mut n.pos),
            FormItem::Form(form) => {
                f(&mut form.pos);
                if let InflectionSource::Ref(n) = &mut form.inflection {
                    f(&mut n.pos);
                }
                form.stress.visit_positions(f);
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Form {
    pub infix: Option<Spelling>,
    pub inflection: InflectionSource,
    pub stress: StressSource,
    pub pos: Pos,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InflectionSource {
    Ref(Name),
    Inline(Vec<Spelling>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StressSource {
    Ref(Name),
    Inline(Vec<u8>),
}

impl StressSource {
    fn visit_positions(&mut self, f: &mut impl FnMut(&mut Pos)) {
        if let StressSource::Ref(n) = self {
            f(&mut n.pos);
        }
    }
}

/// A stem written as hyphen-separated syllable pieces, e.g. `προ-ο-δ`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Stem {
    pub pieces: Vec<Spelling>,
}

impl Stem {
    pub fn is_empty(&self) -> bool {
        self.pieces.iter().all(Spelling::is_empty)
    }

    /// Letters with hyphens removed. A hyphen between two vowels that would
    /// otherwise bind marks a hiatus.
    pub fn spelling(&self) -> Spelling {
        let mut out = Spelling::default();
        for (i, piece) in self.pieces.iter().enumerate() {
            let at = out.len();
            out.append(piece);
            if i > 0 {
                out.mark_hiatus(at);
            }
        }
        out
    }

    /// Letter offsets of the hyphens.
    pub fn hyphens(&self) -> Vec<usize> {
        let mut at = 0;
        let mut out = Vec::new();
        for (i, piece) in self.pieces.iter().enumerate() {
            if i > 0 {
                out.push(at);
            }
            at += piece.len();
        }
        out
    }
}

impl fmt::Display for Stem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, piece) in self.pieces.iter().enumerate() {
            if i > 0 {
                f.write_str("-")?;
            }
            f.write_str(&piece.render_fragment())?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EntryBody {
    /// Inflected word: `stem[form|form...].`
    Forms(Vec<FormItem>),
    /// Non-inflected word: `stem(p).` or `stem!name.`
    Stress(StressSource),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LexiconEntry {
    pub stem: Stem,
    pub body: EntryBody,
    pub pos: Pos,
}
