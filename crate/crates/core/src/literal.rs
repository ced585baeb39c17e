//! Text formats for group elements, chain elements, subgroup descriptors and
//! algebra descriptors. Every `Display` output here parses back to the same
//! value.
//!
//! ```text
//! group  := int | int "/" int | "<" [int ("," int)*] ">"
//! elem   := group | "(" elem "," second ")" | "TOP" | "BOT"
//! second := elem | "T" | "B"
//!
//! desc   := entry | "[" [entry ("," entry)*] "]"
//! entry  := "*" | "Z" | "Q" | "0" | rational "Z"
//! alg    := "Z" | "Z^" k | "Q" | "1" | "Z_" j | "Q_" j | "BND(" alg ")"
//!         | "PLPI(" alg "," desc "," alg ")" | "PLPII(" alg "," alg ")"
//!         | "PLPIII(" alg "," desc "," desc "," alg ")"
//!         | "PLPIV(" alg "," desc "," alg ")"
//! ```

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::{Algebra, Elem, Node, PlpKind, Second};
use crate::error::{Error, Result};
use crate::groups::{CoordConstraint, CoordKind, GroupChain, GroupElem, SubgroupDescriptor};
use crate::plp;
use crate::towers::{make_qj, make_zj};

impl fmt::Display for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElem::IntVector(v) if v.len() == 1 => write!(f, "{}", v[0]),
            GroupElem::IntVector(v) => {
                write!(f, "<")?;
                for (i, n) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{n}")?;
                }
                write!(f, ">")
            }
            GroupElem::Rational(q) => write!(f, "{q}"),
        }
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elem::Leaf(g) => write!(f, "{g}"),
            Elem::Pair(a, s) => write!(f, "({a}, {s})"),
            Elem::TopBound => write!(f, "TOP"),
            Elem::BotBound => write!(f, "BOT"),
        }
    }
}

impl fmt::Display for Second {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Second::Val(e) => write!(f, "{e}"),
            Second::Top => write!(f, "T"),
            Second::Bot => write!(f, "B"),
        }
    }
}

fn write_constraint(f: &mut fmt::Formatter<'_>, c: &CoordConstraint, kind: Option<CoordKind>) -> fmt::Result {
    match (c, kind) {
        (CoordConstraint::All, Some(CoordKind::Int)) => write!(f, "Z"),
        (CoordConstraint::All, Some(CoordKind::Rat)) => write!(f, "Q"),
        (CoordConstraint::All, None) => write!(f, "*"),
        (CoordConstraint::ZeroOnly, _) => write!(f, "0"),
        (CoordConstraint::MultiplesOf(d), _) if d.is_one() => write!(f, "Z"),
        (CoordConstraint::MultiplesOf(d), _) => write!(f, "{d}Z"),
    }
}

fn write_descriptor(f: &mut fmt::Formatter<'_>, d: &SubgroupDescriptor, kinds: Option<&[CoordKind]>) -> fmt::Result {
    let kind = |i: usize| kinds.map(|k| k[i]);
    if d.len() == 1 {
        return write_constraint(f, &d.0[0], kind(0));
    }
    write!(f, "[")?;
    for (i, c) in d.0.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write_constraint(f, c, kind(i))?;
    }
    write!(f, "]")
}

impl fmt::Display for SubgroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_descriptor(f, self, None)
    }
}

/// Index `j` if the algebra is structurally `Z_j`.
pub fn z_tower_index(a: &Algebra) -> Option<usize> {
    match a.node() {
        Node::Base(GroupChain::ZLex(1)) => Some(1),
        Node::PlpIV { x, y, .. } if a.plp_kind() == Some(PlpKind::II) && *x.node() == Node::Base(GroupChain::ZLex(1)) => {
            z_tower_index(y).map(|j| j + 1)
        }
        _ => None,
    }
}

/// Index `j` if the algebra is structurally `Q_j`.
pub fn q_tower_index(a: &Algebra) -> Option<usize> {
    match a.node() {
        Node::Base(GroupChain::QChain) => Some(1),
        Node::PlpIII { x, z, v, y }
            if *x.node() == Node::Base(GroupChain::QChain)
                && z == v
                && z.0 == [CoordConstraint::multiples_of(1)] =>
        {
            q_tower_index(y).map(|j| j + 1)
        }
        _ => None,
    }
}

fn write_algebra(f: &mut fmt::Formatter<'_>, a: &Algebra, top: bool) -> fmt::Result {
    if !top {
        if let Some(j) = z_tower_index(a).filter(|&j| j >= 2) {
            return write!(f, "Z_{j}");
        }
        if let Some(j) = q_tower_index(a).filter(|&j| j >= 2) {
            return write!(f, "Q_{j}");
        }
    }
    match a.node() {
        Node::Base(g) => write!(f, "{g}"),
        Node::PlpIII { x, z, v, y } => {
            let kinds = x.coord_kinds();
            if z == v {
                write!(f, "PLPI(")?;
                write_algebra(f, x, false)?;
                write!(f, ",")?;
                write_descriptor(f, z, Some(&kinds))?;
            } else {
                write!(f, "PLPIII(")?;
                write_algebra(f, x, false)?;
                write!(f, ",")?;
                write_descriptor(f, z, Some(&kinds))?;
                write!(f, ",")?;
                write_descriptor(f, v, Some(&kinds))?;
            }
            write!(f, ",")?;
            write_algebra(f, y, false)?;
            write!(f, ")")
        }
        Node::PlpIV { x, v, y } => {
            if a.plp_kind() == Some(PlpKind::II) {
                write!(f, "PLPII(")?;
                write_algebra(f, x, false)?;
            } else {
                write!(f, "PLPIV(")?;
                write_algebra(f, x, false)?;
                write!(f, ",")?;
                write_descriptor(f, v, Some(&x.coord_kinds()))?;
            }
            write!(f, ",")?;
            write_algebra(f, y, false)?;
            write!(f, ")")
        }
        Node::Bounded(inner) => {
            write!(f, "BND(")?;
            write_algebra(f, inner, false)?;
            write!(f, ")")
        }
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_algebra(f, self, true)
    }
}

// ----- parsing ------------------------------------------------------------

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.pos, msg)
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> &'a str {
        self.skip_ws();
        let rest = self.rest();
        let len = rest.find(|c: char| !pred(c)).unwrap_or(rest.len());
        self.pos += len;
        &rest[..len]
    }

    fn finish(&mut self) -> Result<()> {
        if self.peek().is_some() {
            Err(self.error("trailing input"))
        } else {
            Ok(())
        }
    }

    fn int(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        let neg = self.eat('-');
        let digits = self.take_while(|c| c.is_ascii_digit());
        if digits.is_empty() {
            self.pos = start;
            return Err(self.error("expected an integer"));
        }
        let n: BigInt = digits.parse().map_err(|_| Error::parse(start, "bad integer"))?;
        Ok(if neg { -n } else { n })
    }

    fn rational(&mut self) -> Result<BigRational> {
        let num = self.int()?;
        if self.eat('/') {
            let at = self.pos;
            let den = self.int()?;
            if den.is_zero() {
                return Err(Error::parse(at, "zero denominator"));
            }
            Ok(BigRational::new(num, den))
        } else {
            Ok(BigRational::from_integer(num))
        }
    }
}

fn small_int(c: &Cursor<'_>, n: BigInt) -> Result<i64> {
    i64::try_from(n).map_err(|_| c.error("integer out of range"))
}

fn parse_group(c: &mut Cursor<'_>) -> Result<GroupElem> {
    if c.eat('<') {
        let mut v = Vec::new();
        if !c.eat('>') {
            loop {
                let n = c.int()?;
                v.push(small_int(c, n)?);
                if c.eat('>') {
                    break;
                }
                c.expect(',')?;
            }
        }
        return Ok(GroupElem::IntVector(v));
    }
    let q = c.rational()?;
    if q.is_integer() {
        Ok(GroupElem::int(small_int(c, q.to_integer())?))
    } else {
        Ok(GroupElem::Rational(q))
    }
}

fn parse_elem_at(c: &mut Cursor<'_>) -> Result<Elem> {
    match c.peek() {
        Some('(') => {
            c.expect('(')?;
            let first = parse_elem_at(c)?;
            c.expect(',')?;
            let second = match c.peek() {
                Some('T') if !c.rest().starts_with("TOP") => {
                    c.pos += 1;
                    Second::Top
                }
                Some('B') if !c.rest().starts_with("BOT") => {
                    c.pos += 1;
                    Second::Bot
                }
                _ => Second::val(parse_elem_at(c)?),
            };
            c.expect(')')?;
            Ok(Elem::pair(first, second))
        }
        Some('T') | Some('B') => {
            let word = c.take_while(|ch| ch.is_ascii_alphabetic());
            match word {
                "TOP" => Ok(Elem::TopBound),
                "BOT" => Ok(Elem::BotBound),
                _ => Err(c.error(format!("unknown element keyword `{word}`"))),
            }
        }
        Some(_) => Ok(Elem::Leaf(parse_group(c)?)),
        None => Err(c.error("unexpected end of input")),
    }
}

/// Parses an element literal without reference to an algebra. Integer
/// leaves come out as integer vectors; see [`parse_elem_in`].
pub fn parse_elem(text: &str) -> Result<Elem> {
    let mut c = Cursor::new(text);
    let e = parse_elem_at(&mut c)?;
    c.finish()?;
    Ok(e)
}

/// Parses an element literal of the given algebra: integer leaves of
/// rational factors are read as rationals, and carrier membership is
/// checked.
pub fn parse_elem_in(a: &Algebra, text: &str) -> Result<Elem> {
    let e = conform(a, parse_elem(text)?);
    a.check(&e)?;
    Ok(e)
}

fn conform(a: &Algebra, e: Elem) -> Elem {
    match (a.node(), e) {
        (Node::Bounded(_), e @ (Elem::TopBound | Elem::BotBound)) => e,
        (Node::Bounded(inner), e) => conform(inner, e),
        (Node::Base(GroupChain::QChain), Elem::Leaf(GroupElem::IntVector(v))) if v.len() == 1 => {
            Elem::Leaf(GroupElem::Rational(BigRational::from_integer(v[0].into())))
        }
        (Node::Base(GroupChain::Trivial), Elem::Leaf(GroupElem::IntVector(v))) if v == [0] => {
            Elem::Leaf(GroupElem::IntVector(vec![]))
        }
        (Node::PlpIII { x, y, .. } | Node::PlpIV { x, y, .. }, Elem::Pair(f, s)) => {
            let s = match s {
                Second::Val(b) => Second::val(conform(y, *b)),
                other => other,
            };
            Elem::pair(conform(x, *f), s)
        }
        (_, e) => e,
    }
}

fn parse_constraint(c: &mut Cursor<'_>) -> Result<CoordConstraint> {
    match c.peek() {
        Some('*') | Some('Q') => {
            c.pos += 1;
            Ok(CoordConstraint::All)
        }
        Some('Z') => {
            c.pos += 1;
            Ok(CoordConstraint::multiples_of(1))
        }
        Some(ch) if ch == '-' || ch.is_ascii_digit() => {
            let at = c.pos;
            let q = c.rational()?;
            if c.eat('Z') {
                Ok(CoordConstraint::MultiplesOf(q))
            } else if q.is_zero() {
                Ok(CoordConstraint::ZeroOnly)
            } else {
                Err(Error::parse(at, "a nonzero step must be followed by `Z`"))
            }
        }
        _ => Err(c.error("expected a descriptor entry (`*`, `Z`, `Q`, `0` or `dZ`)")),
    }
}

fn parse_descriptor_at(c: &mut Cursor<'_>) -> Result<SubgroupDescriptor> {
    if !c.eat('[') {
        return Ok(SubgroupDescriptor(vec![parse_constraint(c)?]));
    }
    let mut entries = Vec::new();
    if !c.eat(']') {
        loop {
            entries.push(parse_constraint(c)?);
            if c.eat(']') {
                break;
            }
            c.expect(',')?;
        }
    }
    Ok(SubgroupDescriptor(entries))
}

pub fn parse_descriptor(text: &str) -> Result<SubgroupDescriptor> {
    let mut c = Cursor::new(text);
    let d = parse_descriptor_at(&mut c)?;
    c.finish()?;
    Ok(d)
}

impl FromStr for SubgroupDescriptor {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_descriptor(s)
    }
}

fn tower_index(digits: &str, at: usize) -> Result<usize> {
    match digits.parse::<usize>() {
        Ok(j) if j >= 1 => Ok(j),
        _ => Err(Error::parse(at, format!("bad index `{digits}`"))),
    }
}

fn parse_algebra_at(c: &mut Cursor<'_>) -> Result<Algebra> {
    c.skip_ws();
    let at = c.pos;
    let word = c.take_while(|ch| ch.is_ascii_alphanumeric() || ch == '_' || ch == '^');
    // Ill-defined products keep their own error; shape mismatches point at
    // the offending term.
    let wrap = |r: Result<Algebra>| {
        r.map_err(|e| match e {
            Error::PreconditionViolation(_) => e,
            other => Error::parse(at, other.to_string()),
        })
    };
    match word {
        "Z" => Ok(Algebra::integers()),
        "Q" => Ok(Algebra::rationals()),
        "1" => Ok(Algebra::base(GroupChain::Trivial)),
        w if w.starts_with("Z^") => {
            let k = tower_index(&w[2..], at)?;
            Ok(Algebra::base(GroupChain::ZLex(k)))
        }
        w if w.starts_with("Z_") => Ok(make_zj(tower_index(&w[2..], at)?)),
        w if w.starts_with("Q_") => Ok(make_qj(tower_index(&w[2..], at)?)),
        "BND" => {
            c.expect('(')?;
            let inner = parse_algebra_at(c)?;
            c.expect(')')?;
            wrap(inner.adjoin_bounds())
        }
        "PLPI" => {
            c.expect('(')?;
            let x = parse_algebra_at(c)?;
            c.expect(',')?;
            let z = parse_descriptor_at(c)?;
            c.expect(',')?;
            let y = parse_algebra_at(c)?;
            c.expect(')')?;
            wrap(plp::plp_i(&x, &z, &y))
        }
        "PLPII" => {
            c.expect('(')?;
            let x = parse_algebra_at(c)?;
            c.expect(',')?;
            let y = parse_algebra_at(c)?;
            c.expect(')')?;
            wrap(plp::plp_ii(&x, &y))
        }
        "PLPIII" => {
            c.expect('(')?;
            let x = parse_algebra_at(c)?;
            c.expect(',')?;
            let z = parse_descriptor_at(c)?;
            c.expect(',')?;
            let v = parse_descriptor_at(c)?;
            c.expect(',')?;
            let y = parse_algebra_at(c)?;
            c.expect(')')?;
            wrap(plp::plp_iii(&x, &z, &v, &y))
        }
        "PLPIV" => {
            c.expect('(')?;
            let x = parse_algebra_at(c)?;
            c.expect(',')?;
            let v = parse_descriptor_at(c)?;
            c.expect(',')?;
            let y = parse_algebra_at(c)?;
            c.expect(')')?;
            wrap(plp::plp_iv(&x, &v, &y))
        }
        "" => Err(Error::parse(at, "expected an algebra")),
        w => Err(Error::parse(at, format!("unknown algebra `{w}`"))),
    }
}

pub fn parse_algebra(text: &str) -> Result<Algebra> {
    let mut c = Cursor::new(text);
    let a = parse_algebra_at(&mut c)?;
    c.finish()?;
    Ok(a)
}

impl FromStr for Algebra {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_algebra(s)
    }
}
