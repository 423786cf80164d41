use std::fmt;

use crate::text;

use super::ast::Pos;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TokenKind {
    Percent,
    /// `!name`
    StressName(String),
    /// `#name`
    InflectionName(String),
    /// `$name`
    FormName(String),
    /// A sigil with no name after it.
    BareSigil(char),
    Eq,
    LParen,
    RParen,
    Comma,
    LBracket,
    RBracket,
    Bar,
    Dot,
    Number(String),
    /// ASCII word, only meaningful in the version header.
    Word(String),
    /// Run of Greek letters, diacritics and hyphens.
    Greek(String),
    Unexpected(char),
    Eof,
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TokenKind::Percent => f.write_str("'%'"),
            TokenKind::StressName(n) => write!(f, "'!{n}'"),
            TokenKind::InflectionName(n) => write!(f, "'#{n}'"),
            TokenKind::FormName(n) => write!(f, "'${n}'"),
            TokenKind::BareSigil(c) => write!(f, "'{c}'"),
            TokenKind::Eq => f.write_str("'='"),
            TokenKind::LParen => f.write_str("'('"),
            TokenKind::RParen => f.write_str("')'"),
            TokenKind::Comma => f.write_str("','"),
            TokenKind::LBracket => f.write_str("'['"),
            TokenKind::RBracket => f.write_str("']'"),
            TokenKind::Bar => f.write_str("'|'"),
            TokenKind::Dot => f.write_str("'.'"),
            TokenKind::Number(n) => write!(f, "number {n}"),
            TokenKind::Word(w) => write!(f, "'{w}'"),
            TokenKind::Greek(g) => write!(f, "'{g}'"),
            TokenKind::Unexpected(c) => write!(f, "{c:?}"),
            TokenKind::Eof => f.write_str("end of file"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Token {
    pub kind: TokenKind,
    pub pos: Pos,
}

/// Splits GWDL source into tokens. Whitespace separates tokens and is
/// otherwise insignificant; `;` starts a comment running to end of line.
pub fn tokenize(source: &str, file: u16) -> Vec<Token> {
    let mut lexer = Lexer {
        chars: source.chars().collect(),
        at: 0,
        line: 1,
        col: 1,
        file,
    };
    let mut out = Vec::new();
    loop {
        let token = lexer.next_token();
        let eof = token.kind == TokenKind::Eof;
        out.push(token);
        if eof {
            return out;
        }
    }
}

struct Lexer {
    chars: Vec<char>,
    at: usize,
    line: u32,
    col: u32,
    file: u16,
}

impl Lexer {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.at += 1;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn pos(&self) -> Pos {
        Pos {
            file: self.file,
            line: self.line,
            col: self.col,
        }
    }

    fn skip_trivia(&mut self) {
        while let Some(c) = self.peek() {
            if c == ';' {
                while let Some(c) = self.peek() {
                    if c == '\n' {
                        break;
                    }
                    self.bump();
                }
            } else if c.is_whitespace() || c == '\u{feff}' {
                self.bump();
            } else {
                break;
            }
        }
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> String {
        let mut s = String::new();
        while let Some(c) = self.peek() {
            if !pred(c) {
                break;
            }
            s.push(c);
            self.bump();
        }
        s
    }

    fn next_token(&mut self) -> Token {
        self.skip_trivia();
        let pos = self.pos();
        let Some(c) = self.peek() else {
            return Token {
                kind: TokenKind::Eof,
                pos,
            };
        };
        let kind = match c {
            '!' | '#' | '$' => {
                self.bump();
                // printed rules sometimes put a space after the sigil
                while matches!(self.peek(), Some(' ' | '\t')) {
                    self.bump();
                }
                let name = self.take_while(|c| c.is_ascii_alphanumeric() || c == '_');
                match (c, name.is_empty()) {
                    (_, true) => TokenKind::BareSigil(c),
                    ('!', false) => TokenKind::StressName(name),
                    ('#', false) => TokenKind::InflectionName(name),
                    _ => TokenKind::FormName(name),
                }
            }
            '%' => self.single(TokenKind::Percent),
            '=' => self.single(TokenKind::Eq),
            '(' => self.single(TokenKind::LParen),
            ')' => self.single(TokenKind::RParen),
            ',' => self.single(TokenKind::Comma),
            '[' => self.single(TokenKind::LBracket),
            ']' => self.single(TokenKind::RBracket),
            '|' => self.single(TokenKind::Bar),
            '.' => self.single(TokenKind::Dot),
            c if c.is_ascii_digit() => {
                let mut number = self.take_while(|c| c.is_ascii_digit());
                // `1.2` continues the number, `1.` ends a definition
                while self.peek() == Some('.')
                    && self.chars.get(self.at + 1).is_some_and(|c| c.is_ascii_digit())
                {
                    self.bump();
                    number.push('.');
                    number.push_str(&self.take_while(|c| c.is_ascii_digit()));
                }
                TokenKind::Number(number)
            }
            c if c.is_ascii_alphabetic() => {
                TokenKind::Word(self.take_while(|c| c.is_ascii_alphanumeric() || c == '_'))
            }
            c if is_greek_piece_char(c) => TokenKind::Greek(self.take_while(is_greek_piece_char)),
            c => {
                self.bump();
                TokenKind::Unexpected(c)
            }
        };
        Token { kind, pos }
    }

    fn single(&mut self, kind: TokenKind) -> TokenKind {
        self.bump();
        kind
    }
}

fn is_greek_piece_char(c: char) -> bool {
    c == '-' || text::is_word_char(c)
}
