//! Recursive-descent parser for GWDL source.
//!
//! ```text
//! lexicon_file   ::= ['%' VERSION NUMBER] { definition | word }
//! definition     ::= stress_def | inflection_def | form_def
//! stress_def     ::= STRESSV '=' stress '.'
//! stress         ::= '(' NUMBER { ',' NUMBER } ')'
//! inflection_def ::= INFLECTIONV '=' ( inflection | suffixes ) '.'
//! inflection     ::= '[' suffixes ']'
//! suffixes       ::= SUFFIX { '|' SUFFIX } [ '|' ]
//! form_def       ::= FORMV '=' item { '|' item } '.'
//! item           ::= FORMV | form
//! form           ::= [INFIX] ( INFLECTIONV | inflection ) ( STRESSV | stress )
//! word           ::= [STEM] '[' item { '|' item } ']' '.'
//!                  | STEM ( stress | STRESSV ) '.'
//! ```
//!
//! Errors are collected as diagnostics; after an error the parser skips to
//! the next `.` and carries on.

use crate::text::Spelling;

use super::ast::*;
use super::diagnostic::{Diagnostic, DiagnosticKind};
use super::lexer::{tokenize, Token, TokenKind};

/// Result of parsing one or more sources.
#[derive(Clone, Debug, Default)]
pub struct Parsed {
    pub file: LexiconFile,
    pub diagnostics: Vec<Diagnostic>,
}

/// Parses a single anonymous source.
pub fn parse(source: &str) -> Parsed {
    parse_sources([("<input>", source)])
}

/// Parses several named sources as one concatenated lexicon.
pub fn parse_sources<'a>(sources: impl IntoIterator<Item = (&'a str, &'a str)>) -> Parsed {
    let mut out = Parsed::default();
    for (name, source) in sources {
        let mut parser = Parser {
            tokens: tokenize(source, 0),
            at: 0,
            diagnostics: Vec::new(),
        };
        let mut file = parser.lexicon_file();
        file.sources = vec![name.to_string()];
        let offset = out.file.sources.len() as u16;
        out.file.merge(file);
        for mut d in parser.diagnostics {
            d.pos.file += offset;
            out.diagnostics.push(d);
        }
    }
    out
}

struct Parser {
    tokens: Vec<Token>,
    at: usize,
    diagnostics: Vec<Diagnostic>,
}

type PResult<T> = Result<T, ()>;

impl Parser {
    fn peek(&self) -> &TokenKind {
        &self.tokens[self.at].kind
    }

    fn pos(&self) -> Pos {
        self.tokens[self.at].pos
    }

    fn advance(&mut self) -> Token {
        let token = self.tokens[self.at].clone();
        if token.kind != TokenKind::Eof {
            self.at += 1;
        }
        token
    }

    fn unexpected<T>(&mut self, expected: &[&str]) -> PResult<T> {
        let token = &self.tokens[self.at];
        self.diagnostics.push(Diagnostic::error(
            token.pos,
            DiagnosticKind::SyntaxError {
                expected: expected.iter().map(|s| s.to_string()).collect(),
                found: token.kind.to_string(),
            },
        ));
        Err(())
    }

    fn expect(&mut self, kind: TokenKind, label: &str) -> PResult<()> {
        if *self.peek() == kind {
            self.advance();
            Ok(())
        } else {
            self.unexpected(&[label])
        }
    }

    /// Skips past the next `.`.
    fn synchronize(&mut self) {
        loop {
            match self.advance().kind {
                TokenKind::Dot | TokenKind::Eof => return,
                _ => {}
            }
        }
    }

    fn lexicon_file(&mut self) -> LexiconFile {
        let mut file = LexiconFile::default();
        if *self.peek() == TokenKind::Percent {
            match self.header() {
                Ok(h) => file.header = Some(h),
                Err(()) => self.skip_line(),
            }
        }
        loop {
            let result = match self.peek() {
                TokenKind::Eof => break,
                TokenKind::StressName(_) | TokenKind::InflectionName(_) | TokenKind::FormName(_) => {
                    self.definition().map(|d| file.definitions.push(d))
                }
                TokenKind::Greek(_) | TokenKind::LBracket => {
                    self.word().map(|w| file.words.push(w))
                }
                _ => self.unexpected(&["definition", "word"]),
            };
            if result.is_err() {
                self.synchronize();
            }
        }
        file
    }

    fn skip_line(&mut self) {
        let line = self.pos().line;
        while self.pos().line == line && *self.peek() != TokenKind::Eof {
            self.advance();
        }
    }

    fn header(&mut self) -> PResult<Header> {
        let pos = self.pos();
        self.advance();
        if let TokenKind::Word(_) = self.peek() {
            self.advance();
        }
        match self.peek().clone() {
            TokenKind::Number(version) => {
                self.advance();
                Ok(Header { version, pos })
            }
            _ => self.unexpected(&["version number"]),
        }
    }

    fn definition(&mut self) -> PResult<Definition> {
        let token = self.advance();
        let name = |text: String| Name {
            text,
            pos: token.pos,
        };
        let def = match token.kind {
            TokenKind::StressName(n) => {
                self.expect(TokenKind::Eq, "'='")?;
                let positions = self.stress_tuple()?;
                Definition::Stress(StressRule {
                    name: name(n),
                    positions,
                })
            }
            TokenKind::InflectionName(n) => {
                self.expect(TokenKind::Eq, "'='")?;
                let suffixes = if *self.peek() == TokenKind::LBracket {
                    self.bracketed_suffixes()?
                } else {
                    self.suffix_list(&TokenKind::Dot)?
                };
                Definition::Inflection(InflectionRule {
                    name: name(n),
                    suffixes,
                })
            }
            TokenKind::FormName(n) => {
                self.expect(TokenKind::Eq, "'='")?;
                let alternatives = self.items(&TokenKind::Dot)?;
                Definition::Form(FormRule {
                    name: name(n),
                    alternatives,
                })
            }
            _ => unreachable!("definition() called on a non-sigil token"),
        };
        self.expect(TokenKind::Dot, "'.'")?;
        Ok(def)
    }

    fn stress_tuple(&mut self) -> PResult<Vec<u8>> {
        self.expect(TokenKind::LParen, "'('")?;
        let mut positions = Vec::new();
        loop {
            match self.peek().clone() {
                TokenKind::Number(n) if !n.contains('.') => {
                    self.advance();
                    positions.push(n.parse::<u8>().unwrap_or(u8::MAX));
                }
                _ => return self.unexpected(&["stress position"]),
            }
            match self.peek() {
                TokenKind::Comma => {
                    self.advance();
                }
                TokenKind::RParen => {
                    self.advance();
                    return Ok(positions);
                }
                _ => return self.unexpected(&["','", "')'"]),
            }
        }
    }

    fn bracketed_suffixes(&mut self) -> PResult<Vec<Spelling>> {
        self.expect(TokenKind::LBracket, "'['")?;
        let suffixes = self.suffix_list(&TokenKind::RBracket)?;
        self.expect(TokenKind::RBracket, "']'")?;
        Ok(suffixes)
    }

    /// `SUFFIX { '|' SUFFIX } [ '|' ]`, stopping before `end`. A trailing
    /// bar adds the empty suffix.
    fn suffix_list(&mut self, end: &TokenKind) -> PResult<Vec<Spelling>> {
        let mut suffixes = vec![self.fragment("suffix")?];
        while *self.peek() == TokenKind::Bar {
            self.advance();
            if self.peek() == end {
                suffixes.push(Spelling::default());
                break;
            }
            suffixes.push(self.fragment("suffix")?);
        }
        Ok(suffixes)
    }

    /// A hyphen-free letter run (suffix or infix).
    fn fragment(&mut self, what: &str) -> PResult<Spelling> {
        let pos = self.pos();
        let TokenKind::Greek(text) = self.peek().clone() else {
            return self.unexpected(&[what]);
        };
        self.advance();
        if text.contains('-') {
            return self.bad_letters(pos, format!("{what} {text:?} may not contain hyphens"));
        }
        self.letters(pos, &text, what)
    }

    fn letters(&mut self, pos: Pos, text: &str, what: &str) -> PResult<Spelling> {
        match Spelling::parse(text) {
            Ok(s) => Ok(s),
            Err(e) => self.bad_letters(pos, format!("bad {what} {text:?}: {e}")),
        }
    }

    fn bad_letters<T>(&mut self, pos: Pos, detail: String) -> PResult<T> {
        self.diagnostics
            .push(Diagnostic::error(pos, DiagnosticKind::BadLetters(detail)));
        Err(())
    }

    fn stem(&mut self, pos: Pos, text: &str) -> PResult<Stem> {
        let mut pieces = Vec::new();
        for piece in text.split('-') {
            if piece.is_empty() {
                return self.bad_letters(pos, format!("empty syllable in stem {text:?}"));
            }
            pieces.push(self.letters(pos, piece, "stem")?);
        }
        Ok(Stem { pieces })
    }

    fn items(&mut self, end: &TokenKind) -> PResult<Vec<FormItem>> {
        let mut items = vec![self.item()?];
        while *self.peek() == TokenKind::Bar {
            self.advance();
            items.push(self.item()?);
        }
        if self.peek() != end {
            let label = end.to_string();
            return self.unexpected(&["'|'", &label]);
        }
        Ok(items)
    }

    fn item(&mut self) -> PResult<FormItem> {
        if let TokenKind::FormName(n) = self.peek().clone() {
            let pos = self.pos();
            self.advance();
            return Ok(FormItem::Ref(Name { text: n, pos }));
        }
        self.form().map(FormItem::Form)
    }

    fn form(&mut self) -> PResult<Form> {
        let pos = self.pos();
        let infix = match self.peek() {
            TokenKind::Greek(_) => Some(self.fragment("infix")?),
            _ => None,
        };
        let inflection = match self.peek().clone() {
            TokenKind::InflectionName(n) => {
                let pos = self.pos();
                self.advance();
                InflectionSource::Ref(Name { text: n, pos })
            }
            TokenKind::LBracket => InflectionSource::Inline(self.bracketed_suffixes()?),
            _ => {
                let expected: &[&str] = if infix.is_some() {
                    &["inflection rule", "'['"]
                } else {
                    &["form rule", "infix", "inflection rule", "'['"]
                };
                return self.unexpected(expected);
            }
        };
        let stress = self.stress_source()?;
        Ok(Form {
            infix,
            inflection,
            stress,
            pos,
        })
    }

    fn stress_source(&mut self) -> PResult<StressSource> {
        match self.peek().clone() {
            TokenKind::StressName(n) => {
                let pos = self.pos();
                self.advance();
                Ok(StressSource::Ref(Name { text: n, pos }))
            }
            TokenKind::LParen => Ok(StressSource::Inline(self.stress_tuple()?)),
            _ => self.unexpected(&["stress rule", "'('"]),
        }
    }

    fn word(&mut self) -> PResult<LexiconEntry> {
        let pos = self.pos();
        let stem = match self.peek().clone() {
            TokenKind::Greek(text) => {
                self.advance();
                Some(self.stem(pos, &text)?)
            }
            _ => None,
        };
        let body = match (self.peek(), &stem) {
            (TokenKind::LBracket, _) => {
                self.advance();
                let items = self.items(&TokenKind::RBracket)?;
                self.expect(TokenKind::RBracket, "']'")?;
                EntryBody::Forms(items)
            }
            (TokenKind::LParen | TokenKind::StressName(_), Some(_)) => {
                EntryBody::Stress(self.stress_source()?)
            }
            (_, Some(_)) => return self.unexpected(&["'['", "stress rule", "'('"]),
            (_, None) => return self.unexpected(&["'['"]),
        };
        self.expect(TokenKind::Dot, "'.'")?;
        Ok(LexiconEntry {
            stem: stem.unwrap_or_default(),
            body,
            pos,
        })
    }
}
