//! Formulas of the logic: AST, parser and a printer that inserts only the
//! parentheses it needs.
//!
//! Binding strength, tightest first: `~`, `*`, `&`, `|`, `->` (right
//! associative), `<->` (left associative). `a <-> b` is read as
//! `(a -> b) & (b -> a)`. The constants are `t`, `f`, `top` and `bot`;
//! variables match `[a-z][a-z0-9_]*`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    Var(String),
    ConstT,
    ConstF,
    ConstTop,
    ConstBot,
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Fuse(Box<Formula>, Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
    Neg(Box<Formula>),
}

impl Formula {
    pub fn var(name: &str) -> Self {
        Formula::Var(name.to_string())
    }

    pub fn and(l: Formula, r: Formula) -> Self {
        Formula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Formula, r: Formula) -> Self {
        Formula::Or(Box::new(l), Box::new(r))
    }

    pub fn fuse(l: Formula, r: Formula) -> Self {
        Formula::Fuse(Box::new(l), Box::new(r))
    }

    pub fn imp(l: Formula, r: Formula) -> Self {
        Formula::Imp(Box::new(l), Box::new(r))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(f: Formula) -> Self {
        Formula::Neg(Box::new(f))
    }

    pub fn iff(l: Formula, r: Formula) -> Self {
        Formula::and(Formula::imp(l.clone(), r.clone()), Formula::imp(r, l))
    }

    /// The variables occurring in the formula, sorted.
    pub fn variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Var(v) => {
                out.insert(v.clone());
            }
            Formula::ConstT | Formula::ConstF | Formula::ConstTop | Formula::ConstBot => {}
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Fuse(l, r) | Formula::Imp(l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
            Formula::Neg(f) => f.collect_vars(out),
        }
    }

    /// `(l, r)` if the formula is `(l -> r) & (r -> l)`.
    fn as_iff(&self) -> Option<(&Formula, &Formula)> {
        match self {
            Formula::And(a, b) => match (&**a, &**b) {
                (Formula::Imp(l, r), Formula::Imp(r2, l2)) if l == l2 && r == r2 => Some((l, r)),
                _ => None,
            },
            _ => None,
        }
    }

    fn precedence(&self) -> u8 {
        if self.as_iff().is_some() {
            return 1;
        }
        match self {
            Formula::Imp(..) => 2,
            Formula::Or(..) => 3,
            Formula::And(..) => 4,
            Formula::Fuse(..) => 5,
            Formula::Neg(..) => 6,
            _ => 7,
        }
    }
}

fn write_child(f: &mut fmt::Formatter<'_>, child: &Formula, parens: bool) -> fmt::Result {
    if parens {
        write!(f, "({child})")
    } else {
        write!(f, "{child}")
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.precedence();
        let binary = |f: &mut fmt::Formatter<'_>, l: &Formula, op: &str, r: &Formula, right_assoc: bool| {
            let (lp, rp) = (l.precedence(), r.precedence());
            write_child(f, l, if right_assoc { lp <= p } else { lp < p })?;
            write!(f, " {op} ")?;
            write_child(f, r, if right_assoc { rp < p } else { rp <= p })
        };
        if let Some((l, r)) = self.as_iff() {
            return binary(f, l, "<->", r, false);
        }
        match self {
            Formula::Var(v) => write!(f, "{v}"),
            Formula::ConstT => write!(f, "t"),
            Formula::ConstF => write!(f, "f"),
            Formula::ConstTop => write!(f, "top"),
            Formula::ConstBot => write!(f, "bot"),
            Formula::And(l, r) => binary(f, l, "&", r, false),
            Formula::Or(l, r) => binary(f, l, "|", r, false),
            Formula::Fuse(l, r) => binary(f, l, "*", r, false),
            Formula::Imp(l, r) => binary(f, l, "->", r, true),
            Formula::Neg(g) => {
                write!(f, "~")?;
                write_child(f, g, g.precedence() < 6)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Neg,
    Fuse,
    And,
    Or,
    Imp,
    Iff,
    LParen,
    RParen,
    End,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '~' => Tok::Neg,
            '*' => Tok::Fuse,
            '&' => Tok::And,
            '|' => Tok::Or,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '-' if text[i..].starts_with("->") => {
                i += 1;
                Tok::Imp
            }
            '<' if text[i..].starts_with("<->") => {
                i += 2;
                Tok::Iff
            }
            'a'..='z' => {
                let len = text[i..]
                    .find(|ch: char| !(ch.is_ascii_lowercase() || ch.is_ascii_digit() || ch == '_'))
                    .unwrap_or(text.len() - i);
                i += len - 1;
                Tok::Ident(text[start..start + len].to_string())
            }
            _ => {
                let ch = text[i..].chars().next().unwrap_or(c);
                return Err(Error::parse(start, format!("unexpected character `{ch}`")));
            }
        };
        i += 1;
        out.push((start, tok));
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn iff(&mut self) -> Result<Formula> {
        let mut l = self.imp()?;
        while *self.peek() == Tok::Iff {
            self.bump();
            let r = self.imp()?;
            l = Formula::iff(l, r);
        }
        Ok(l)
    }

    fn imp(&mut self) -> Result<Formula> {
        let l = self.left_assoc(2)?;
        if *self.peek() == Tok::Imp {
            self.bump();
            let r = self.imp()?;
            return Ok(Formula::imp(l, r));
        }
        Ok(l)
    }

    /// Levels 2 (`|`), 3 (`&`) and 4 (`*`).
    fn left_assoc(&mut self, level: u8) -> Result<Formula> {
        if level > 4 {
            return self.unary();
        }
        let (tok, make): (Tok, fn(Formula, Formula) -> Formula) = match level {
            2 => (Tok::Or, Formula::or),
            3 => (Tok::And, Formula::and),
            _ => (Tok::Fuse, Formula::fuse),
        };
        let mut l = self.left_assoc(level + 1)?;
        while *self.peek() == tok {
            self.bump();
            let r = self.left_assoc(level + 1)?;
            l = make(l, r);
        }
        Ok(l)
    }

    fn unary(&mut self) -> Result<Formula> {
        let pos = self.pos();
        match self.bump() {
            Tok::Neg => Ok(Formula::neg(self.unary()?)),
            Tok::LParen => {
                let inner = self.iff()?;
                if *self.peek() != Tok::RParen {
                    return Err(Error::parse(self.pos(), "expected `)`"));
                }
                self.bump();
                Ok(inner)
            }
            Tok::Ident(name) => Ok(match name.as_str() {
                "t" => Formula::ConstT,
                "f" => Formula::ConstF,
                "top" => Formula::ConstTop,
                "bot" => Formula::ConstBot,
                _ => Formula::Var(name),
            }),
            Tok::End => Err(Error::parse(pos, "unexpected end of formula")),
            other => Err(Error::parse(pos, format!("unexpected {}", describe(&other)))),
        }
    }
}

fn describe(t: &Tok) -> &'static str {
    match t {
        Tok::Fuse => "`*`",
        Tok::And => "`&`",
        Tok::Or => "`|`",
        Tok::Imp => "`->`",
        Tok::Iff => "`<->`",
        Tok::RParen => "`)`",
        Tok::Neg => "`~`",
        Tok::LParen => "`(`",
        Tok::Ident(_) => "identifier",
        Tok::End => "end of formula",
    }
}

pub fn parse_formula(text: &str) -> Result<Formula> {
    let mut p = Parser {
        toks: tokenize(text)?,
        at: 0,
    };
    let f = p.iff()?;
    if *p.peek() != Tok::End {
        return Err(Error::parse(p.pos(), format!("unexpected {}", describe(p.peek()))));
    }
    Ok(f)
}

impl FromStr for Formula {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_formula(s)
    }
}

/// One formula per line; blank lines and `#` comments are skipped. Parse
/// errors report the position within the whole text.
pub fn parse_theory(text: &str) -> Result<Vec<Formula>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let content = line.split('#').next().unwrap_or("");
        if !content.trim().is_empty() {
            let f = parse_formula(content).map_err(|e| match e {
                Error::Parse { pos, msg } => Error::Parse { pos: offset + pos, msg },
                other => other,
            })?;
            out.push(f);
        }
        offset += line.len();
    }
    Ok(out)
}
