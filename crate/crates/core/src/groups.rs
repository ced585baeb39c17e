//! Linearly ordered abelian groups used as building blocks: `Z^k` under the
//! lexicographic order, the rationals, and the one-element group.
//!
//! Viewed as odd FL_e-chains the monoid operation is `+`, negation is `-` and
//! `t = f = 0`. Subgroups are described coordinatewise by
//! [`SubgroupDescriptor`].

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A single coordinate of a group-part element. Integer coordinates are kept
/// as rationals with denominator one.
pub type Coord = BigRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoordKind {
    Int,
    Rat,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupElem {
    IntVector(Vec<i64>),
    /// Always in lowest terms with a positive denominator.
    Rational(BigRational),
}

impl GroupElem {
    pub fn int(n: i64) -> Self {
        GroupElem::IntVector(vec![n])
    }

    pub fn vector(coords: impl Into<Vec<i64>>) -> Self {
        GroupElem::IntVector(coords.into())
    }

    /// `p/q`, reduced. Panics if `q == 0`.
    pub fn rational(p: i64, q: i64) -> Self {
        GroupElem::Rational(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn coords(&self) -> Vec<Coord> {
        match self {
            GroupElem::IntVector(v) => v.iter().map(|&n| int_coord(n)).collect(),
            GroupElem::Rational(q) => vec![q.clone()],
        }
    }
}

pub(crate) fn int_coord(n: i64) -> Coord {
    BigRational::from_integer(BigInt::from(n))
}

fn coord_to_i64(c: &Coord) -> Option<i64> {
    if !c.is_integer() {
        return None;
    }
    i64::try_from(c.to_integer()).ok()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupChain {
    /// `Z^k` ordered lexicographically, `k >= 1`.
    ZLex(usize),
    QChain,
    /// The one-element group, carried as the empty integer vector.
    Trivial,
}

impl GroupChain {
    pub fn zlex(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::Shape("Z^k requires k >= 1".into()));
        }
        Ok(GroupChain::ZLex(k))
    }

    /// Number of coordinates of an element.
    pub fn rank(&self) -> usize {
        match self {
            GroupChain::ZLex(k) => *k,
            GroupChain::QChain => 1,
            GroupChain::Trivial => 0,
        }
    }

    pub fn coord_kinds(&self) -> Vec<CoordKind> {
        match self {
            GroupChain::QChain => vec![CoordKind::Rat],
            _ => vec![CoordKind::Int; self.rank()],
        }
    }

    pub fn is_discretely_ordered(&self) -> bool {
        matches!(self, GroupChain::ZLex(_))
    }

    pub fn contains(&self, a: &GroupElem) -> bool {
        match (self, a) {
            (GroupChain::ZLex(k), GroupElem::IntVector(v)) => v.len() == *k,
            (GroupChain::Trivial, GroupElem::IntVector(v)) => v.is_empty(),
            (GroupChain::QChain, GroupElem::Rational(_)) => true,
            _ => false,
        }
    }

    fn check(&self, a: &GroupElem) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::Shape(format!("{a} does not belong to {self}")))
        }
    }

    pub fn compare(&self, a: &GroupElem, b: &GroupElem) -> Result<Ordering> {
        self.check(a)?;
        self.check(b)?;
        Ok(compare_unchecked(a, b))
    }

    pub fn unit(&self) -> GroupElem {
        match self {
            GroupChain::QChain => GroupElem::Rational(BigRational::zero()),
            _ => GroupElem::IntVector(vec![0; self.rank()]),
        }
    }

    pub fn op(&self, a: &GroupElem, b: &GroupElem) -> Result<GroupElem> {
        self.check(a)?;
        self.check(b)?;
        Ok(op_unchecked(a, b))
    }

    pub fn inv(&self, a: &GroupElem) -> Result<GroupElem> {
        self.check(a)?;
        Ok(inv_unchecked(a))
    }

    /// Upper cover: the last coordinate incremented.
    pub fn succ(&self, a: &GroupElem) -> Result<GroupElem> {
        self.step(a, 1)
    }

    /// Lower cover: the last coordinate decremented.
    pub fn pred(&self, a: &GroupElem) -> Result<GroupElem> {
        self.step(a, -1)
    }

    fn step(&self, a: &GroupElem, delta: i64) -> Result<GroupElem> {
        if !self.is_discretely_ordered() {
            return Err(Error::NotDiscretelyOrdered(self.to_string()));
        }
        self.check(a)?;
        Ok(step_unchecked(a, delta))
    }

    pub fn from_coords(&self, coords: &[Coord]) -> Result<GroupElem> {
        if coords.len() != self.rank() {
            return Err(Error::Shape(format!(
                "{self} expects {} coordinates, got {}",
                self.rank(),
                coords.len()
            )));
        }
        match self {
            GroupChain::QChain => Ok(GroupElem::Rational(coords[0].clone())),
            _ => coords
                .iter()
                .map(|c| {
                    coord_to_i64(c)
                        .ok_or_else(|| Error::Shape(format!("coordinate {c} is not a machine integer")))
                })
                .collect::<Result<Vec<_>>>()
                .map(GroupElem::IntVector),
        }
    }
}

impl std::fmt::Display for GroupChain {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GroupChain::ZLex(1) => write!(f, "Z"),
            GroupChain::ZLex(k) => write!(f, "Z^{k}"),
            GroupChain::QChain => write!(f, "Q"),
            GroupChain::Trivial => write!(f, "1"),
        }
    }
}

pub(crate) fn compare_unchecked(a: &GroupElem, b: &GroupElem) -> Ordering {
    match (a, b) {
        // Vec's Ord is lexicographic, which is exactly the order on Z^k.
        (GroupElem::IntVector(x), GroupElem::IntVector(y)) => x.cmp(y),
        (GroupElem::Rational(x), GroupElem::Rational(y)) => x.cmp(y),
        _ => panic!("mixed group element kinds: {a} vs {b}"),
    }
}

pub(crate) fn op_unchecked(a: &GroupElem, b: &GroupElem) -> GroupElem {
    match (a, b) {
        (GroupElem::IntVector(x), GroupElem::IntVector(y)) => {
            GroupElem::IntVector(x.iter().zip(y).map(|(p, q)| p + q).collect())
        }
        (GroupElem::Rational(x), GroupElem::Rational(y)) => GroupElem::Rational(x + y),
        _ => panic!("mixed group element kinds: {a} vs {b}"),
    }
}

pub(crate) fn inv_unchecked(a: &GroupElem) -> GroupElem {
    match a {
        GroupElem::IntVector(x) => GroupElem::IntVector(x.iter().map(|p| -p).collect()),
        GroupElem::Rational(x) => GroupElem::Rational(-x),
    }
}

pub(crate) fn step_unchecked(a: &GroupElem, delta: i64) -> GroupElem {
    match a {
        GroupElem::IntVector(x) => {
            let mut x = x.clone();
            if let Some(last) = x.last_mut() {
                *last += delta;
            }
            GroupElem::IntVector(x)
        }
        GroupElem::Rational(_) => panic!("rationals have no covers"),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CoordConstraint {
    /// Integer multiples of a positive step; the step is an integer on
    /// integer coordinates and may be any positive rational on `Q`.
    MultiplesOf(BigRational),
    ZeroOnly,
    All,
}

impl CoordConstraint {
    pub fn multiples_of(d: i64) -> Self {
        CoordConstraint::MultiplesOf(int_coord(d))
    }

    pub fn accepts(&self, c: &Coord) -> bool {
        match self {
            CoordConstraint::All => true,
            CoordConstraint::ZeroOnly => c.is_zero(),
            CoordConstraint::MultiplesOf(d) => (c / d).is_integer(),
        }
    }

    /// `self` accepts a subset of what `other` accepts. Both sides must be
    /// normalized against the same coordinate kind.
    fn refines(&self, other: &CoordConstraint) -> bool {
        use CoordConstraint::*;
        match (self, other) {
            (ZeroOnly, _) | (_, All) => true,
            (MultiplesOf(a), MultiplesOf(b)) => (a / b).is_integer(),
            _ => false,
        }
    }
}

/// A subgroup of a lexicographic product of groups, given by one constraint
/// per coordinate.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubgroupDescriptor(pub Vec<CoordConstraint>);

impl SubgroupDescriptor {
    pub fn full(len: usize) -> Self {
        SubgroupDescriptor(vec![CoordConstraint::All; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[CoordConstraint] {
        &self.0
    }

    pub fn contains_coords(&self, coords: &[Coord]) -> Result<bool> {
        if coords.len() != self.len() {
            return Err(Error::Shape(format!(
                "descriptor of length {} applied to {} coordinates",
                self.len(),
                coords.len()
            )));
        }
        Ok(self.0.iter().zip(coords).all(|(d, c)| d.accepts(c)))
    }

    /// Validates the descriptor against the coordinate kinds it constrains
    /// and rewrites `MultiplesOf(1)` on integer coordinates to `All`, so that
    /// structural equality coincides with equality of subgroups.
    pub fn normalized(&self, kinds: &[CoordKind]) -> Result<Self> {
        if kinds.len() != self.len() {
            return Err(Error::Shape(format!(
                "descriptor has {} entries but the group part has {} coordinates",
                self.len(),
                kinds.len()
            )));
        }
        self.0
            .iter()
            .zip(kinds)
            .map(|(c, kind)| match c {
                CoordConstraint::MultiplesOf(d) => {
                    if !d.is_positive() {
                        return Err(Error::Shape(format!("subgroup step {d} must be positive")));
                    }
                    match kind {
                        CoordKind::Int if !d.is_integer() => Err(Error::Shape(format!(
                            "subgroup step {d} is not an integer on an integer coordinate"
                        ))),
                        CoordKind::Int if d.is_one() => Ok(CoordConstraint::All),
                        _ => Ok(c.clone()),
                    }
                }
                other => Ok(other.clone()),
            })
            .collect::<Result<Vec<_>>>()
            .map(SubgroupDescriptor)
    }

    /// Subgroup inclusion `self <= other`, for descriptors normalized
    /// against the same kinds.
    pub fn refines(&self, other: &SubgroupDescriptor) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a.refines(b))
    }

    pub fn concat(&self, other: &SubgroupDescriptor) -> Self {
        SubgroupDescriptor(self.0.iter().chain(&other.0).cloned().collect())
    }
}

/// Membership of a base-group element in a coordinatewise subgroup.
pub fn subgroup_contains(d: &SubgroupDescriptor, a: &GroupElem) -> Result<bool> {
    d.contains_coords(&a.coords())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: &[i64]) -> GroupElem {
        GroupElem::vector(x.to_vec())
    }

    #[test]
    fn lex_compare() {
        let g = GroupChain::ZLex(2);
        assert_eq!(g.compare(&v(&[1, -5]), &v(&[1, 3])).unwrap(), Ordering::Less);
        assert_eq!(g.compare(&v(&[2, -100]), &v(&[1, 100])).unwrap(), Ordering::Greater);
        let q = GroupChain::QChain;
        let half = GroupElem::rational(1, 2);
        assert_eq!(q.compare(&half, &GroupElem::rational(2, 4)).unwrap(), Ordering::Equal);
    }

    #[test]
    fn rank_mismatch_is_shape_error() {
        let g = GroupChain::ZLex(2);
        assert!(matches!(g.compare(&v(&[1]), &v(&[1, 2])), Err(Error::Shape(_))));
        assert!(matches!(g.op(&v(&[1, 2, 3]), &v(&[1, 2])), Err(Error::Shape(_))));
        assert!(matches!(g.inv(&GroupElem::rational(1, 2)), Err(Error::Shape(_))));
    }

    #[test]
    fn group_operations() {
        let q = GroupChain::QChain;
        assert_eq!(
            q.op(&GroupElem::rational(1, 2), &GroupElem::rational(1, 3)).unwrap(),
            GroupElem::rational(5, 6)
        );
        assert_eq!(GroupChain::ZLex(2).inv(&v(&[3, -1])).unwrap(), v(&[-3, 1]));
        assert_eq!(GroupChain::ZLex(3).unit(), v(&[0, 0, 0]));
        assert_eq!(GroupChain::Trivial.unit(), v(&[]));
    }

    #[test]
    fn covers() {
        assert_eq!(GroupChain::ZLex(1).pred(&v(&[-3])).unwrap(), v(&[-4]));
        assert_eq!(GroupChain::ZLex(2).succ(&v(&[1, 7])).unwrap(), v(&[1, 8]));
        assert!(matches!(
            GroupChain::QChain.succ(&GroupElem::rational(1, 2)),
            Err(Error::NotDiscretelyOrdered(_))
        ));
        assert!(matches!(
            GroupChain::Trivial.pred(&v(&[])),
            Err(Error::NotDiscretelyOrdered(_))
        ));
    }

    #[test]
    fn subgroup_membership() {
        use CoordConstraint::*;
        let ints_in_q = SubgroupDescriptor(vec![CoordConstraint::multiples_of(1)]);
        assert!(subgroup_contains(&ints_in_q, &GroupElem::rational(7, 1)).unwrap());
        assert!(!subgroup_contains(&ints_in_q, &GroupElem::rational(1, 2)).unwrap());
        let even_first = SubgroupDescriptor(vec![CoordConstraint::multiples_of(2), All]);
        assert!(subgroup_contains(&even_first, &v(&[4, -9])).unwrap());
        let zero_first = SubgroupDescriptor(vec![ZeroOnly, CoordConstraint::multiples_of(3)]);
        assert!(!subgroup_contains(&zero_first, &v(&[1, 3])).unwrap());
        assert!(subgroup_contains(&zero_first, &v(&[0, -6])).unwrap());
        assert!(matches!(subgroup_contains(&zero_first, &v(&[0])), Err(Error::Shape(_))));
    }

    #[test]
    fn normalization_and_refinement() {
        use CoordConstraint::*;
        let kinds = [CoordKind::Int, CoordKind::Rat];
        let d = SubgroupDescriptor(vec![CoordConstraint::multiples_of(1), CoordConstraint::multiples_of(1)]);
        let n = d.normalized(&kinds).unwrap();
        assert_eq!(n.0[0], All);
        assert_eq!(n.0[1], CoordConstraint::multiples_of(1));

        let half = SubgroupDescriptor(vec![All, MultiplesOf(BigRational::new(1.into(), 2.into()))]);
        assert!(n.refines(&half.normalized(&kinds).unwrap()));
        assert!(!half.refines(&n));
        let four = SubgroupDescriptor(vec![CoordConstraint::multiples_of(4), ZeroOnly]);
        let two = SubgroupDescriptor(vec![CoordConstraint::multiples_of(2), All]);
        assert!(four.refines(&two));
        assert!(!two.refines(&four));

        let bad = SubgroupDescriptor(vec![MultiplesOf(BigRational::new(1.into(), 2.into())), All]);
        assert!(bad.normalized(&kinds).is_err());
        let neg = SubgroupDescriptor(vec![CoordConstraint::multiples_of(-2), All]);
        assert!(neg.normalized(&kinds).is_err());
    }
}
