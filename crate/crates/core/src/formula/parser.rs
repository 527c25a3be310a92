//! Recursive-descent parser for the formula language.
//!
//! ```text
//! expr  := or
//! or    := and ('|' and)*
//! and   := unary ('&' unary)*
//! unary := '~' unary | atom
//! atom  := ident | literal | '(' expr ')'
//! ```
//!
//! Literals are `true`, `false`, `#SYM` and `NV(p,r,s)[...]`. Positions in
//! errors are 1-based line and column, counted in characters.

use thiserror::Error;

use super::ast::{Formula, Literal, KNOWN_SYMBOLS};
use crate::error::ValueError;
use crate::text::scan_value;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseError {
    #[error("line {line}, column {column}: expected {}, found {found}", expected.join(" or "))]
    Syntax {
        line: usize,
        column: usize,
        expected: Vec<String>,
        found: String,
    },

    #[error("line {line}, column {column}: unknown literal `{literal}`")]
    UnknownLiteral {
        line: usize,
        column: usize,
        literal: String,
    },

    #[error("line {line}, column {column}: {source}")]
    InvalidValue {
        line: usize,
        column: usize,
        #[source]
        source: ValueError,
    },
}

impl ParseError {
    /// 1-based `(line, column)` of the error.
    pub fn position(&self) -> (usize, usize) {
        match self {
            ParseError::Syntax { line, column, .. }
            | ParseError::UnknownLiteral { line, column, .. }
            | ParseError::InvalidValue { line, column, .. } => (*line, *column),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Lit(Literal),
    And,
    Or,
    Not,
    LParen,
    RParen,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(name) => format!("identifier `{name}`"),
            Tok::Lit(lit) => format!("literal `{lit}`"),
            Tok::And => "`&`".into(),
            Tok::Or => "`|`".into(),
            Tok::Not => "`~`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

fn location(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset];
    let line = before.matches('\n').count() + 1;
    let line_start = before.rfind('\n').map_or(0, |k| k + 1);
    (line, before[line_start..].chars().count() + 1)
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let mut toks = Vec::new();
    let mut pos = 0;
    while pos < text.len() {
        let rest = &text[pos..];
        let c = rest.chars().next().expect("non-empty");
        if c.is_whitespace() {
            pos += c.len_utf8();
            continue;
        }
        let start = pos;
        let tok = match c {
            '&' => Tok::And,
            '|' => Tok::Or,
            '~' => Tok::Not,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '#' => {
                let name: String = rest[1..]
                    .chars()
                    .take_while(|c| c.is_ascii_alphanumeric())
                    .collect();
                if !KNOWN_SYMBOLS.contains(&name.as_str()) {
                    let (line, column) = location(text, start);
                    return Err(ParseError::UnknownLiteral {
                        line,
                        column,
                        literal: format!("#{name}"),
                    });
                }
                pos += 1 + name.len();
                toks.push((Tok::Lit(Literal::Symbol(name)), start));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let len = rest
                    .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
                    .unwrap_or(rest.len());
                let word = &rest[..len];
                if word == "NV" && rest[len..].trim_start().starts_with('(') {
                    let (value, used) =
                        scan_value(rest).map_err(|e| value_error(text, start, e))?;
                    pos += used;
                    toks.push((Tok::Lit(Literal::Value(value)), start));
                    continue;
                }
                pos += len;
                let tok = match word {
                    "true" => Tok::Lit(Literal::Bool(true)),
                    "false" => Tok::Lit(Literal::Bool(false)),
                    _ => Tok::Ident(word.to_string()),
                };
                toks.push((tok, start));
                continue;
            }
            other => {
                let (line, column) = location(text, start);
                return Err(ParseError::Syntax {
                    line,
                    column,
                    expected: vec!["a token".into()],
                    found: format!("`{other}`"),
                });
            }
        };
        pos += c.len_utf8();
        toks.push((tok, start));
    }
    toks.push((Tok::Eof, text.len()));
    Ok(toks)
}

// Column in a value error is relative to the literal start.
fn value_error(text: &str, start: usize, err: ValueError) -> ParseError {
    let offset = match &err {
        ValueError::Syntax { column, .. } => text[start..]
            .char_indices()
            .nth(column - 1)
            .map_or(text.len(), |(k, _)| start + k),
        _ => start,
    };
    let (line, column) = location(text, offset);
    ParseError::InvalidValue {
        line,
        column,
        source: err,
    }
}

struct Parser<'a> {
    text: &'a str,
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let tok = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        tok
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        let (tok, offset) = &self.toks[self.pos];
        let (line, column) = location(self.text, *offset);
        ParseError::Syntax {
            line,
            column,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: tok.describe(),
        }
    }

    fn or(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.and()?;
        while *self.peek() == Tok::Or {
            self.bump();
            let rhs = self.and()?;
            lhs = Formula::Or(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::And {
            self.bump();
            let rhs = self.unary()?;
            lhs = Formula::And(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        if *self.peek() == Tok::Not {
            self.bump();
            return Ok(Formula::Not(Box::new(self.unary()?)));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Formula, ParseError> {
        match self.peek() {
            Tok::Ident(_) | Tok::Lit(_) => match self.bump() {
                Tok::Ident(name) => Ok(Formula::Var(name)),
                Tok::Lit(lit) => Ok(Formula::Const(lit)),
                _ => unreachable!(),
            },
            Tok::LParen => {
                self.bump();
                let inner = self.or()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.error(&["`&`", "`|`", "`)`"]));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.error(&["identifier", "literal", "`~`", "`(`"])),
        }
    }
}

/// Parses a formula.
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let toks = lex(text)?;
    let mut parser = Parser { text, toks, pos: 0 };
    let formula = parser.or()?;
    if *parser.peek() != Tok::Eof {
        return Err(parser.error(&["`&`", "`|`", "end of input"]));
    }
    Ok(formula)
}

/// Parses a single literal: `true`, `false`, `#SYM` or `NV(...)[...]`.
pub fn parse_literal(text: &str) -> Result<Literal, ParseError> {
    let toks = lex(text)?;
    let parser = Parser { text, toks, pos: 0 };
    match parser.toks.as_slice() {
        [(Tok::Lit(lit), _), (Tok::Eof, _)] => Ok(lit.clone()),
        _ => Err(parser.error(&["literal"])),
    }
}
