//! Documents, tokens and the interactive correction session shared by the
//! terminal and HTTP frontends.

use std::fmt;
use std::ops::Range;

use crate::correct::{CheckResult, Checker, CheckerOptions, Suggestion};
use crate::dict::{Dictionary, UserDictionary};
use crate::error::SessionError;
use crate::text::{is_word_char, normalize};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TokenKind {
    Word,
    Other,
}

/// A byte span of the document. Tokens tile the document exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub span: Range<usize>,
    pub kind: TokenKind,
}

impl Token {
    pub fn text<'a>(&self, document: &'a str) -> &'a str {
        &document[self.span.clone()]
    }
}

/// Splits text into maximal runs of Greek letters (with their accents)
/// and runs of everything else.
pub fn tokenize_document(text: &str) -> Vec<Token> {
    let mut tokens: Vec<Token> = Vec::new();
    for (i, c) in text.char_indices() {
        let kind = if is_word_char(c) { TokenKind::Word } else { TokenKind::Other };
        let end = i + c.len_utf8();
        match tokens.last_mut() {
            Some(t) if t.kind == kind => t.span.end = end,
            _ => tokens.push(Token { span: i..end, kind }),
        }
    }
    tokens
}

/// 1-based line and column (in characters) of a byte offset.
pub fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset];
    let line = before.matches('\n').count() + 1;
    let line_start = before.rfind('\n').map_or(0, |i| i + 1);
    (line, before[line_start..].chars().count() + 1)
}

/// A word the checker rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flag {
    /// Span in the original document.
    pub span: Range<usize>,
    /// Current text of the token (an edit may have replaced it).
    pub word: String,
    pub suggestions: Vec<Suggestion>,
}

/// Every flag of a document, without a session.
pub fn check_document(text: &str, checker: &Checker) -> Vec<Flag> {
    tokenize_document(text)
        .into_iter()
        .filter(|t| t.kind == TokenKind::Word)
        .filter_map(|t| flag_for(checker, t.span.clone(), t.text(text)))
        .collect()
}

fn flag_for(checker: &Checker, span: Range<usize>, word: &str) -> Option<Flag> {
    let normalized = normalize(word).ok()?;
    match checker.check_word(&normalized) {
        CheckResult::Accepted(_) => None,
        CheckResult::Flagged { .. } => Some(Flag {
            span,
            word: word.to_string(),
            suggestions: checker.suggest_word(&normalized),
        }),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Action {
    Skip,
    /// Replace the flagged word with free text.
    Edit(String),
    /// Add the flagged word to the user dictionary.
    Store,
    /// Take the suggestion with this 1-based rank.
    Correct(usize),
    Exit,
}

impl Action {
    pub fn name(&self) -> &'static str {
        match self {
            Action::Skip => "skip",
            Action::Edit(_) => "edit",
            Action::Store => "store",
            Action::Correct(_) => "correct",
            Action::Exit => "exit",
        }
    }

    /// One line of a session journal.
    pub fn to_journal_line(&self) -> String {
        match self {
            Action::Edit(text) => format!("edit\t{}", text.replace('\\', "\\\\").replace('\n', "\\n")),
            Action::Correct(i) => format!("correct\t{i}"),
            other => other.name().to_string(),
        }
    }

    pub fn parse_journal_line(line: &str) -> Option<Action> {
        let (name, arg) = line.split_once('\t').unwrap_or((line, ""));
        match name {
            "skip" => Some(Action::Skip),
            "store" => Some(Action::Store),
            "exit" => Some(Action::Exit),
            "correct" => arg.parse().ok().map(Action::Correct),
            "edit" => Some(Action::Edit(unescape(arg))),
            _ => None,
        }
    }
}

fn unescape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    let mut chars = s.chars();
    while let Some(c) = chars.next() {
        if c != '\\' {
            out.push(c);
            continue;
        }
        match chars.next() {
            Some('n') => out.push('\n'),
            Some(other) => out.push(other),
            None => out.push('\\'),
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Active,
    Exited,
    Completed,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Active => "active",
            Status::Exited => "exited",
            Status::Completed => "completed",
        })
    }
}

/// One logged action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decision {
    pub span: Range<usize>,
    pub action: Action,
    /// Text spliced in place of the span, if the action changed it.
    pub replacement: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Next {
    Flag(Flag),
    Done,
}

struct WordSlot {
    span: Range<usize>,
    replacement: Option<String>,
}

/// Walks a document flag by flag. Actions apply strictly left to right;
/// the original text is never modified, replacements are kept per token
/// and spliced in on export.
pub struct CorrectionSession {
    id: String,
    text: String,
    words: Vec<WordSlot>,
    cursor: usize,
    current: Option<Flag>,
    decisions: Vec<Decision>,
    status: Status,
    options: CheckerOptions,
}

impl CorrectionSession {
    pub fn new(id: impl Into<String>, text: impl Into<String>) -> CorrectionSession {
        let text = text.into();
        let words = tokenize_document(&text)
            .into_iter()
            .filter(|t| t.kind == TokenKind::Word)
            .map(|t| WordSlot {
                span: t.span,
                replacement: None,
            })
            .collect();
        CorrectionSession {
            id: id.into(),
            text,
            words,
            cursor: 0,
            current: None,
            decisions: Vec::new(),
            status: Status::Active,
            options: CheckerOptions::default(),
        }
    }

    pub fn with_options(mut self, options: CheckerOptions) -> CorrectionSession {
        self.options = options;
        self
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn text(&self) -> &str {
        &self.text
    }

    pub fn status(&self) -> Status {
        self.status
    }

    pub fn decisions(&self) -> &[Decision] {
        &self.decisions
    }

    pub fn current(&self) -> Option<&Flag> {
        self.current.as_ref()
    }

    fn ensure_active(&self) -> Result<(), SessionError> {
        match self.status {
            Status::Active => Ok(()),
            _ => Err(SessionError::SessionClosed),
        }
    }

    fn checker<'a>(&self, dict: &'a Dictionary, user: &'a UserDictionary) -> Checker<'a> {
        Checker::new(dict, user).with_options(self.options)
    }

    /// The current flag, or the next flagged word after it. Asking again
    /// without acting returns the same flag.
    pub fn next_flag(&mut self, dict: &Dictionary, user: &UserDictionary) -> Result<Next, SessionError> {
        self.ensure_active()?;
        if let Some(flag) = &self.current {
            return Ok(Next::Flag(flag.clone()));
        }
        let checker = self.checker(dict, user);
        while let Some(slot) = self.words.get(self.cursor) {
            let word = slot.replacement.as_deref().unwrap_or(&self.text[slot.span.clone()]);
            if let Some(flag) = flag_for(&checker, slot.span.clone(), word) {
                self.current = Some(flag.clone());
                return Ok(Next::Flag(flag));
            }
            self.cursor += 1;
        }
        self.status = Status::Completed;
        Ok(Next::Done)
    }

    fn advance(&mut self) {
        self.current = None;
        self.cursor += 1;
    }

    /// Applies one action to the current flag. `Store` adds the word to
    /// `user`; persisting the user dictionary is the caller's business.
    pub fn apply_action(
        &mut self,
        action: Action,
        dict: &Dictionary,
        user: &mut UserDictionary,
    ) -> Result<(), SessionError> {
        self.ensure_active()?;
        if action == Action::Exit {
            self.status = Status::Exited;
            self.current = None;
            return Ok(());
        }
        let flag = self.current.clone().ok_or(SessionError::NoCurrentFlag)?;
        let replacement = match &action {
            Action::Skip => None,
            Action::Store => {
                user.add(&flag.word)?;
                None
            }
            Action::Correct(i) => {
                let s = flag
                    .suggestions
                    .get(i.wrapping_sub(1))
                    .ok_or(SessionError::BadSuggestionIndex {
                        index: *i,
                        available: flag.suggestions.len(),
                    })?;
                Some(s.display.clone())
            }
            Action::Edit(text) if text.is_empty() => return Err(SessionError::EmptyReplacement),
            Action::Edit(text) => Some(text.clone()),
            Action::Exit => unreachable!("handled above"),
        };
        self.decisions.push(Decision {
            span: flag.span.clone(),
            action: action.clone(),
            replacement: replacement.clone(),
        });
        if let Some(text) = replacement {
            self.words[self.cursor].replacement = Some(text.clone());
            if let Action::Edit(_) = action {
                // an edit is checked again and may stay flagged
                if let Some(again) = flag_for(&self.checker(dict, user), flag.span.clone(), &text) {
                    self.current = Some(again);
                    return Ok(());
                }
            }
        }
        self.advance();
        Ok(())
    }

    /// The document with every replacement spliced in.
    pub fn export(&self) -> Result<String, SessionError> {
        if self.status == Status::Active {
            return Err(SessionError::SessionActive);
        }
        Ok(self.render())
    }

    /// Like [`Self::export`] but allowed mid-session.
    pub fn render(&self) -> String {
        let mut out = String::with_capacity(self.text.len());
        let mut at = 0;
        for slot in &self.words {
            if let Some(r) = &slot.replacement {
                out.push_str(&self.text[at..slot.span.start]);
                out.push_str(r);
                at = slot.span.end;
            }
        }
        out.push_str(&self.text[at..]);
        out
    }

    /// Re-applies journaled actions to a fresh session over the same text.
    pub fn replay(
        id: impl Into<String>,
        text: impl Into<String>,
        actions: impl IntoIterator<Item = Action>,
        dict: &Dictionary,
        user: &mut UserDictionary,
    ) -> Result<CorrectionSession, SessionError> {
        let mut session = CorrectionSession::new(id, text);
        for action in actions {
            if action != Action::Exit {
                session.next_flag(dict, user)?;
            }
            session.apply_action(action, dict, user)?;
        }
        Ok(session)
    }
}
