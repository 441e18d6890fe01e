use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::ast::*;
use crate::IdealKind;

/// 1-based source position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax {
        found: String,
        expected: Vec<&'static str>,
    },
    UnboundVariable(String),
    DuplicateBinder(String),
    /// An element variable used as a set, or a subset variable inside `{}`.
    SortMismatch(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    fn at(pos: Pos, kind: ParseErrorKind) -> Self {
        ParseError {
            line: pos.line,
            column: pos.column,
            kind,
        }
    }

    pub fn expected(&self) -> &[&'static str] {
        match &self.kind {
            ParseErrorKind::Syntax { expected, .. } => expected,
            _ => &[],
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: ", self.line, self.column)?;
        match &self.kind {
            ParseErrorKind::Syntax { found, expected } => {
                write!(f, "expected {}, found {found}", expected.join(" or "))
            }
            ParseErrorKind::UnboundVariable(v) => write!(f, "unbound variable `{v}`"),
            ParseErrorKind::DuplicateBinder(v) => write!(f, "variable `{v}` is bound twice"),
            ParseErrorKind::SortMismatch(v) => write!(
                f,
                "variable `{v}` has the wrong sort here (elements need `{{{v}}}`, subsets cannot be braced)"
            ),
        }
    }
}

impl core::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(String),
    LParen,
    RParen,
    LBrace,
    RBrace,
    Star,
    Amp,
    Pipe,
    Caret,
    Le,
    Eq,
    Colon,
    Invalid(char),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) | Tok::Int(s) => write!(f, "`{s}`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::LBrace => f.write_str("`{`"),
            Tok::RBrace => f.write_str("`}`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Amp => f.write_str("`&`"),
            Tok::Pipe => f.write_str("`|`"),
            Tok::Caret => f.write_str("`^`"),
            Tok::Le => f.write_str("`<=`"),
            Tok::Eq => f.write_str("`=`"),
            Tok::Colon => f.write_str("`:`"),
            Tok::Invalid(c) => write!(f, "`{c}`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

fn lex(text: &str) -> Vec<(Tok, Pos)> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut column) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, column };
        if c == '\n' {
            i += 1;
            line += 1;
            column = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            column += 1;
            continue;
        }
        let start = i;
        let tok = if c.is_ascii_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            Tok::Ident(chars[start..i].iter().collect())
        } else if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            Tok::Int(chars[start..i].iter().collect())
        } else {
            i += 1;
            match c {
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '{' => Tok::LBrace,
                '}' => Tok::RBrace,
                '*' => Tok::Star,
                '&' => Tok::Amp,
                '|' => Tok::Pipe,
                '^' => Tok::Caret,
                '=' => Tok::Eq,
                ':' => Tok::Colon,
                '<' if chars.get(i) == Some(&'=') => {
                    i += 1;
                    Tok::Le
                }
                other => Tok::Invalid(other),
            }
        };
        column += i - start;
        out.push((tok, pos));
    }
    out.push((Tok::Eof, Pos { line, column }));
    out
}

const RESERVED: [&str; 7] = ["forall", "in", "where", "and", "cl", "S", "M"];

const EXPR_START: [&str; 5] = ["`S`", "identifier", "`{`", "`cl`", "`(`"];
const KIND_NAMES: [&str; 7] = [
    "`m_left`",
    "`m_right`",
    "`m_two_sided`",
    "`m_quasi`",
    "`m_bi`",
    "`m_interior`",
    "`m_bi_interior`",
];

struct Parser {
    toks: Vec<(Tok, Pos)>,
    i: usize,
    scope: BTreeMap<String, Range>,
}

type PResult<T> = Result<T, ParseError>;

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.i].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.i].1
    }

    fn bump(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.i].clone();
        if self.i + 1 < self.toks.len() {
            self.i += 1;
        }
        t
    }

    fn peek_keyword(&self, kw: &str) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s == kw)
    }

    fn fail<T>(&self, expected: &[&'static str]) -> PResult<T> {
        Err(ParseError::at(
            self.pos(),
            ParseErrorKind::Syntax {
                found: self.peek().to_string(),
                expected: expected.to_vec(),
            },
        ))
    }

    fn expect(&mut self, tok: Tok, label: &'static str) -> PResult<()> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.fail(&[label])
        }
    }

    fn expect_keyword(&mut self, kw: &str, label: &'static str) -> PResult<()> {
        if self.peek_keyword(kw) {
            self.bump();
            Ok(())
        } else {
            self.fail(&[label])
        }
    }

    fn identifier(&mut self) -> PResult<(String, Pos)> {
        match self.peek() {
            Tok::Ident(s) if !RESERVED.contains(&s.as_str()) => {
                let (tok, pos) = self.bump();
                let Tok::Ident(s) = tok else { unreachable!() };
                Ok((s, pos))
            }
            _ => self.fail(&["identifier"]),
        }
    }

    fn conjecture(&mut self) -> PResult<Conjecture> {
        let mut binders = Vec::new();
        if !self.peek_keyword("forall") {
            return self.fail(&["`forall`"]);
        }
        while self.peek_keyword("forall") {
            binders.push(self.binder()?);
        }
        let guard = if self.peek_keyword("where") {
            self.bump();
            let guard = match self.peek() {
                Tok::Ident(s) => Guard::ALL.into_iter().find(|g| g.keyword() == s),
                _ => None,
            };
            match guard {
                Some(g) => {
                    self.bump();
                    Some(g)
                }
                None => {
                    return self.fail(&[
                        "`regular`",
                        "`simple`",
                        "`left_simple`",
                        "`right_simple`",
                        "`biint_simple`",
                    ])
                }
            }
        } else {
            None
        };
        if *self.peek() != Tok::Colon {
            return if guard.is_some() {
                self.fail(&["`:`"])
            } else {
                self.fail(&["`forall`", "`where`", "`:`"])
            };
        }
        self.bump();
        let mut body = vec![self.relation()?];
        loop {
            if self.peek_keyword("and") {
                self.bump();
                body.push(self.relation()?);
            } else if *self.peek() == Tok::Eof {
                break;
            } else {
                return self.fail(&["`^`", "`*`", "`&`", "`|`", "`and`", "end of input"]);
            }
        }
        Ok(Conjecture {
            binders,
            guard,
            body,
        })
    }

    fn binder(&mut self) -> PResult<Binder> {
        self.expect_keyword("forall", "`forall`")?;
        let (name, name_pos) = self.identifier()?;
        if self.scope.contains_key(&name) {
            return Err(ParseError::at(
                name_pos,
                ParseErrorKind::DuplicateBinder(name),
            ));
        }
        self.expect_keyword("in", "`in`")?;
        let range = match self.peek() {
            Tok::Ident(s) if s == "all" => Range::All,
            Tok::Ident(s) if s == "downclosed" => Range::Downclosed,
            Tok::Ident(s) if s == "elements" => Range::Elements,
            Tok::Ident(s) if s == "kind" => {
                self.bump();
                self.expect(Tok::LParen, "`(`")?;
                let kind = match self.peek() {
                    Tok::Ident(s) => s.parse::<IdealKind>().ok(),
                    _ => None,
                };
                let Some(kind) = kind else {
                    return self.fail(&KIND_NAMES);
                };
                self.bump();
                self.expect(Tok::RParen, "`)`")?;
                self.scope.insert(name.clone(), Range::Kind(kind));
                return Ok(Binder {
                    name,
                    range: Range::Kind(kind),
                });
            }
            _ => return self.fail(&["`all`", "`downclosed`", "`elements`", "`kind`"]),
        };
        self.bump();
        self.scope.insert(name.clone(), range);
        Ok(Binder { name, range })
    }

    fn relation(&mut self) -> PResult<Relation> {
        let lhs = self.expr()?;
        let op = match self.peek() {
            Tok::Le => RelOp::Subset,
            Tok::Eq => RelOp::Equal,
            _ => return self.fail(&["`^`", "`*`", "`&`", "`|`", "`<=`", "`=`"]),
        };
        self.bump();
        let rhs = self.expr()?;
        Ok(Relation { lhs, op, rhs })
    }

    fn expr(&mut self) -> PResult<SetExpr> {
        let mut e = self.term()?;
        while *self.peek() == Tok::Pipe {
            self.bump();
            e = SetExpr::union(e, self.term()?);
        }
        Ok(e)
    }

    fn term(&mut self) -> PResult<SetExpr> {
        let mut e = self.factor()?;
        while *self.peek() == Tok::Amp {
            self.bump();
            e = SetExpr::intersection(e, self.factor()?);
        }
        Ok(e)
    }

    fn factor(&mut self) -> PResult<SetExpr> {
        let mut e = self.powered()?;
        while *self.peek() == Tok::Star {
            self.bump();
            e = SetExpr::product(e, self.powered()?);
        }
        Ok(e)
    }

    fn powered(&mut self) -> PResult<SetExpr> {
        let mut e = self.atom()?;
        while *self.peek() == Tok::Caret {
            self.bump();
            let exp = match self.peek() {
                Tok::Ident(s) if s == "M" => Exponent::Potency,
                Tok::Int(digits) => match digits.parse::<u32>() {
                    Ok(k) if k >= 1 => Exponent::Int(k),
                    _ => return self.fail(&["positive integer", "`M`"]),
                },
                _ => return self.fail(&["positive integer", "`M`"]),
            };
            self.bump();
            e = SetExpr::power(e, exp);
        }
        Ok(e)
    }

    fn atom(&mut self) -> PResult<SetExpr> {
        match self.peek().clone() {
            Tok::Ident(s) if s == "S" => {
                self.bump();
                Ok(SetExpr::Universe)
            }
            Tok::Ident(s) if s == "cl" => {
                self.bump();
                self.expect(Tok::LParen, "`(`")?;
                let inner = self.expr()?;
                self.close_paren()?;
                Ok(SetExpr::closure(inner))
            }
            Tok::Ident(s) if !RESERVED.contains(&s.as_str()) => {
                let (name, pos) = self.bump();
                let Tok::Ident(name) = name else {
                    unreachable!()
                };
                match self.scope.get(&name) {
                    None => Err(ParseError::at(pos, ParseErrorKind::UnboundVariable(name))),
                    Some(r) if r.is_element() => {
                        Err(ParseError::at(pos, ParseErrorKind::SortMismatch(name)))
                    }
                    Some(_) => Ok(SetExpr::Var(name)),
                }
            }
            Tok::LBrace => {
                self.bump();
                let (name, pos) = self.identifier()?;
                match self.scope.get(&name) {
                    None => return Err(ParseError::at(pos, ParseErrorKind::UnboundVariable(name))),
                    Some(r) if !r.is_element() => {
                        return Err(ParseError::at(pos, ParseErrorKind::SortMismatch(name)))
                    }
                    Some(_) => {}
                }
                self.expect(Tok::RBrace, "`}`")?;
                Ok(SetExpr::Singleton(name))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                self.close_paren()?;
                Ok(inner)
            }
            _ => self.fail(&EXPR_START),
        }
    }

    fn close_paren(&mut self) -> PResult<()> {
        if *self.peek() == Tok::RParen {
            self.bump();
            Ok(())
        } else {
            self.fail(&["`^`", "`*`", "`&`", "`|`", "`)`"])
        }
    }
}

/// Parses the concrete conjecture syntax.
///
/// ```text
/// forall B in kind(m_bi_interior): cl(B * S^M * B) & cl(S^M * B * S^M) <= B
/// ```
pub fn parse_conjecture(text: &str) -> Result<Conjecture, ParseError> {
    let mut p = Parser {
        toks: lex(text),
        i: 0,
        scope: BTreeMap::new(),
    };
    p.conjecture()
}

/// Canonical text; `parse_conjecture(&format_conjecture(c)) == Ok(c)`.
pub fn format_conjecture(c: &Conjecture) -> String {
    format!("{c}")
}
