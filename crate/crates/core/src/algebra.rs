//! Odd FL_e-chains: elements, algebra descriptors and the chain operations.
//!
//! An [`Algebra`] is a recursive descriptor: a base group, a partial
//! lexicographic product of a chain with a chain (types I to IV), or a chain
//! with adjoined global bounds. Descriptors are only produced through the
//! validating constructors in [`crate::plp`] and [`Algebra::base`], so every
//! `Algebra` value is well defined.
//!
//! Operations come in two layers. The public methods check carrier
//! membership of their arguments and return [`Error::NotMember`]; the
//! crate-private `*_raw` functions assume membership and do no checking.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groups::{self, Coord, CoordKind, GroupChain, GroupElem, SubgroupDescriptor};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Elem {
    Leaf(GroupElem),
    Pair(Box<Elem>, Second),
    /// Adjoined global top of a bounded algebra.
    TopBound,
    /// Adjoined global bottom of a bounded algebra.
    BotBound,
}

/// Second component of a product element: a value of the second factor or
/// one of the two adjoined markers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Second {
    Val(Box<Elem>),
    Top,
    Bot,
}

impl Elem {
    pub fn leaf(g: GroupElem) -> Self {
        Elem::Leaf(g)
    }

    pub fn int(n: i64) -> Self {
        Elem::Leaf(GroupElem::int(n))
    }

    pub fn rational(p: i64, q: i64) -> Self {
        Elem::Leaf(GroupElem::rational(p, q))
    }

    pub fn pair(first: Elem, second: Second) -> Self {
        Elem::Pair(Box::new(first), second)
    }

    pub fn with_val(first: Elem, second: Elem) -> Self {
        Elem::Pair(Box::new(first), Second::Val(Box::new(second)))
    }

    pub fn with_top(first: Elem) -> Self {
        Elem::Pair(Box::new(first), Second::Top)
    }

    pub fn with_bot(first: Elem) -> Self {
        Elem::Pair(Box::new(first), Second::Bot)
    }

    pub fn is_bound(&self) -> bool {
        matches!(self, Elem::TopBound | Elem::BotBound)
    }
}

impl Second {
    pub fn val(e: Elem) -> Self {
        Second::Val(Box::new(e))
    }

    fn rank(&self) -> u8 {
        match self {
            Second::Bot => 0,
            Second::Val(_) => 1,
            Second::Top => 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PlpKind {
    I,
    II,
    III,
    IV,
}

/// The shape of an algebra. Obtain it through [`Algebra::node`].
#[derive(Debug, PartialEq, Eq, Hash)]
pub enum Node {
    Base(GroupChain),
    /// Type III product; type I is the case `v == z`.
    PlpIII {
        x: Algebra,
        z: SubgroupDescriptor,
        v: SubgroupDescriptor,
        y: Algebra,
    },
    /// Type IV product; type II is the case where `v` is the full group part
    /// of `x`.
    PlpIV {
        x: Algebra,
        v: SubgroupDescriptor,
        y: Algebra,
    },
    Bounded(Algebra),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Algebra(Arc<Node>);

impl Algebra {
    pub(crate) fn from_node(node: Node) -> Self {
        Algebra(Arc::new(node))
    }

    pub fn base(g: GroupChain) -> Self {
        Algebra::from_node(Node::Base(g))
    }

    pub fn integers() -> Self {
        Algebra::base(GroupChain::ZLex(1))
    }

    pub fn rationals() -> Self {
        Algebra::base(GroupChain::QChain)
    }

    pub fn node(&self) -> &Node {
        &self.0
    }

    pub fn is_bounded(&self) -> bool {
        matches!(self.node(), Node::Bounded(_))
    }

    /// The algebra without its adjoined bounds, if any.
    pub fn unbounded_part(&self) -> &Algebra {
        match self.node() {
            Node::Bounded(inner) => inner,
            _ => self,
        }
    }

    /// Which construction produced this algebra, with types I and II
    /// recognised as special cases of III and IV.
    pub fn plp_kind(&self) -> Option<PlpKind> {
        match self.node() {
            Node::PlpIII { z, v, .. } => Some(if z == v { PlpKind::I } else { PlpKind::III }),
            Node::PlpIV { x, v, .. } => Some(if *v == x.group_part_descriptor() {
                PlpKind::II
            } else {
                PlpKind::IV
            }),
            _ => None,
        }
    }

    /// Adjoin a global top and bottom; the bottom dominates as annihilator.
    pub fn adjoin_bounds(&self) -> Result<Algebra> {
        if self.is_bounded() {
            return Err(Error::AlreadyBounded(self.to_string()));
        }
        Ok(Algebra::from_node(Node::Bounded(self.clone())))
    }

    pub fn unit(&self) -> Elem {
        match self.node() {
            Node::Base(g) => Elem::Leaf(g.unit()),
            Node::PlpIII { x, y, .. } | Node::PlpIV { x, y, .. } => Elem::with_val(x.unit(), y.unit()),
            Node::Bounded(inner) => inner.unit(),
        }
    }

    /// The falsum constant; equal to the unit in every constructed algebra.
    pub fn falsum(&self) -> Elem {
        self.unit()
    }

    /// Sign of the comparison of `t` with `f`: always 0 here, since every
    /// construction preserves oddness.
    pub fn rank(&self) -> i8 {
        match self.cmp_raw(&self.unit(), &self.neg_raw(&self.unit())) {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        }
    }

    // ----- carrier --------------------------------------------------------

    /// Carrier membership, validating every component recursively.
    pub fn contains(&self, e: &Elem) -> bool {
        match (self.node(), e) {
            (Node::Base(g), Elem::Leaf(a)) => g.contains(a),
            (Node::PlpIII { x, z, v, y }, Elem::Pair(f, s)) => {
                x.contains(f)
                    && match s {
                        Second::Bot => true,
                        Second::Top => x.in_subgroup_raw(z, f),
                        Second::Val(b) => x.in_subgroup_raw(v, f) && y.contains(b),
                    }
            }
            (Node::PlpIV { x, v, y }, Elem::Pair(f, s)) => {
                x.contains(f)
                    && match s {
                        Second::Bot => false,
                        Second::Top => true,
                        Second::Val(b) => x.in_subgroup_raw(v, f) && y.contains(b),
                    }
            }
            (Node::Bounded(_), Elem::TopBound | Elem::BotBound) => true,
            (Node::Bounded(inner), e) => inner.contains(e),
            _ => false,
        }
    }

    pub(crate) fn check(&self, e: &Elem) -> Result<()> {
        if self.contains(e) {
            Ok(())
        } else {
            Err(Error::NotMember {
                elem: e.to_string(),
                algebra: self.to_string(),
            })
        }
    }

    // ----- group part -----------------------------------------------------

    /// Kinds of the coordinates of a group-part element.
    pub fn coord_kinds(&self) -> Vec<CoordKind> {
        match self.node() {
            Node::Base(g) => g.coord_kinds(),
            Node::PlpIII { x, y, .. } | Node::PlpIV { x, y, .. } => {
                let mut k = x.coord_kinds();
                k.extend(y.coord_kinds());
                k
            }
            Node::Bounded(inner) => inner.coord_kinds(),
        }
    }

    pub fn coord_count(&self) -> usize {
        match self.node() {
            Node::Base(g) => g.rank(),
            Node::PlpIII { x, y, .. } | Node::PlpIV { x, y, .. } => x.coord_count() + y.coord_count(),
            Node::Bounded(inner) => inner.coord_count(),
        }
    }

    /// The group part as a coordinatewise subgroup of the product of the
    /// base groups: `V x Y_gr` for both product types.
    pub fn group_part_descriptor(&self) -> SubgroupDescriptor {
        match self.node() {
            Node::Base(g) => SubgroupDescriptor::full(g.rank()),
            Node::PlpIII { v, y, .. } | Node::PlpIV { v, y, .. } => v.concat(&y.group_part_descriptor()),
            Node::Bounded(inner) => inner.group_part_descriptor(),
        }
    }

    /// `x o ~x = t`, decided by definition.
    pub fn group_part_contains(&self, a: &Elem) -> Result<bool> {
        self.check(a)?;
        Ok(self.mult_raw(a, &self.neg_raw(a)) == self.unit())
    }

    /// Structural group-part test; agrees with [`Algebra::group_part_contains`].
    pub(crate) fn in_group_part_raw(&self, e: &Elem) -> bool {
        match (self.node(), e) {
            (Node::Base(_), Elem::Leaf(_)) => true,
            (Node::PlpIII { x, v, y, .. } | Node::PlpIV { x, v, y }, Elem::Pair(f, Second::Val(b))) => {
                x.in_subgroup_raw(v, f) && y.in_group_part_raw(b)
            }
            (Node::Bounded(inner), e) if !e.is_bound() => inner.in_group_part_raw(e),
            _ => false,
        }
    }

    /// Coordinates of a group-part element.
    pub(crate) fn coords_raw(&self, e: &Elem) -> Vec<Coord> {
        let mut out = Vec::with_capacity(self.coord_count());
        self.push_coords(e, &mut out);
        out
    }

    fn push_coords(&self, e: &Elem, out: &mut Vec<Coord>) {
        match (self.node(), e) {
            (Node::Base(_), Elem::Leaf(g)) => out.extend(g.coords()),
            (Node::PlpIII { x, y, .. } | Node::PlpIV { x, y, .. }, Elem::Pair(f, Second::Val(b))) => {
                x.push_coords(f, out);
                y.push_coords(b, out);
            }
            (Node::Bounded(inner), e) => inner.push_coords(e, out),
            _ => panic!("coordinates requested for a non-group-part element {e}"),
        }
    }

    /// Coordinates of a group-part element, checked.
    pub fn group_coords(&self, e: &Elem) -> Result<Vec<Coord>> {
        self.check(e)?;
        if !self.in_group_part_raw(e) {
            return Err(Error::Shape(format!("{e} is not in the group part of {self}")));
        }
        Ok(self.coords_raw(e))
    }

    /// Inverse of [`Algebra::group_coords`]: builds the group-part element
    /// with the given coordinates. The result is a member only when the
    /// coordinates satisfy [`Algebra::group_part_descriptor`].
    pub fn elem_from_coords(&self, coords: &[Coord]) -> Result<Elem> {
        if coords.len() != self.coord_count() {
            return Err(Error::Shape(format!(
                "{self} has {} group coordinates, got {}",
                self.coord_count(),
                coords.len()
            )));
        }
        match self.node() {
            Node::Base(g) => Ok(Elem::Leaf(g.from_coords(coords)?)),
            Node::PlpIII { x, y, .. } | Node::PlpIV { x, y, .. } => {
                let n = x.coord_count();
                Ok(Elem::with_val(x.elem_from_coords(&coords[..n])?, y.elem_from_coords(&coords[n..])?))
            }
            Node::Bounded(inner) => inner.elem_from_coords(coords),
        }
    }

    /// Membership of an element of `self` in the subgroup `d` of its group part.
    pub(crate) fn in_subgroup_raw(&self, d: &SubgroupDescriptor, e: &Elem) -> bool {
        self.in_group_part_raw(e)
            && d.contains_coords(&self.coords_raw(e))
                .expect("descriptor length is validated at construction")
    }

    pub fn subgroup_contains(&self, d: &SubgroupDescriptor, e: &Elem) -> Result<bool> {
        self.check(e)?;
        if d.len() != self.coord_count() {
            return Err(Error::Shape(format!(
                "descriptor of length {} for a group part with {} coordinates",
                d.len(),
                self.coord_count()
            )));
        }
        Ok(self.in_subgroup_raw(d, e))
    }

    // ----- order ----------------------------------------------------------

    pub fn compare(&self, a: &Elem, b: &Elem) -> Result<Ordering> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.cmp_raw(a, b))
    }

    pub fn leq(&self, a: &Elem, b: &Elem) -> Result<bool> {
        Ok(self.compare(a, b)? != Ordering::Greater)
    }

    pub fn meet(&self, a: &Elem, b: &Elem) -> Result<Elem> {
        Ok(if self.compare(a, b)? == Ordering::Greater { b.clone() } else { a.clone() })
    }

    pub fn join(&self, a: &Elem, b: &Elem) -> Result<Elem> {
        Ok(if self.compare(a, b)? == Ordering::Less { b.clone() } else { a.clone() })
    }

    pub(crate) fn cmp_raw(&self, a: &Elem, b: &Elem) -> Ordering {
        match (self.node(), a, b) {
            (Node::Bounded(inner), a, b) => match (a, b) {
                (Elem::BotBound, Elem::BotBound) | (Elem::TopBound, Elem::TopBound) => Ordering::Equal,
                (Elem::BotBound, _) | (_, Elem::TopBound) => Ordering::Less,
                (_, Elem::BotBound) | (Elem::TopBound, _) => Ordering::Greater,
                _ => inner.cmp_raw(a, b),
            },
            (Node::Base(_), Elem::Leaf(x), Elem::Leaf(y)) => groups::compare_unchecked(x, y),
            (Node::PlpIII { x, y, .. } | Node::PlpIV { x, y, .. }, Elem::Pair(a1, s1), Elem::Pair(b1, s2)) => {
                x.cmp_raw(a1, b1).then_with(|| match (s1, s2) {
                    (Second::Val(p), Second::Val(q)) => y.cmp_raw(p, q),
                    _ => s1.rank().cmp(&s2.rank()),
                })
            }
            _ => panic!("element shapes {a} and {b} do not match {self}"),
        }
    }

    pub(crate) fn min_raw<'a>(&self, a: &'a Elem, b: &'a Elem) -> &'a Elem {
        if self.cmp_raw(a, b) == Ordering::Greater { b } else { a }
    }

    pub(crate) fn max_raw<'a>(&self, a: &'a Elem, b: &'a Elem) -> &'a Elem {
        if self.cmp_raw(a, b) == Ordering::Less { b } else { a }
    }

    // ----- monoid ---------------------------------------------------------

    pub fn mult(&self, a: &Elem, b: &Elem) -> Result<Elem> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mult_raw(a, b))
    }

    pub(crate) fn mult_raw(&self, a: &Elem, b: &Elem) -> Elem {
        match (self.node(), a, b) {
            (Node::Bounded(_), Elem::BotBound, _) | (Node::Bounded(_), _, Elem::BotBound) => Elem::BotBound,
            (Node::Bounded(_), Elem::TopBound, _) | (Node::Bounded(_), _, Elem::TopBound) => Elem::TopBound,
            (Node::Bounded(inner), a, b) => inner.mult_raw(a, b),
            (Node::Base(_), Elem::Leaf(x), Elem::Leaf(y)) => Elem::Leaf(groups::op_unchecked(x, y)),
            (Node::PlpIII { x, y, .. } | Node::PlpIV { x, y, .. }, Elem::Pair(a1, s1), Elem::Pair(b1, s2)) => {
                // Bot was adjoined after Top, so it absorbs Top as well.
                let s = match (s1, s2) {
                    (Second::Bot, _) | (_, Second::Bot) => Second::Bot,
                    (Second::Top, _) | (_, Second::Top) => Second::Top,
                    (Second::Val(p), Second::Val(q)) => Second::val(y.mult_raw(p, q)),
                };
                Elem::pair(x.mult_raw(a1, b1), s)
            }
            _ => panic!("element shapes {a} and {b} do not match {self}"),
        }
    }

    // ----- negation -------------------------------------------------------

    pub fn neg(&self, a: &Elem) -> Result<Elem> {
        self.check(a)?;
        Ok(self.neg_raw(a))
    }

    pub(crate) fn neg_raw(&self, a: &Elem) -> Elem {
        match (self.node(), a) {
            (Node::Bounded(_), Elem::TopBound) => Elem::BotBound,
            (Node::Bounded(_), Elem::BotBound) => Elem::TopBound,
            (Node::Bounded(inner), a) => inner.neg_raw(a),
            (Node::Base(_), Elem::Leaf(g)) => Elem::Leaf(groups::inv_unchecked(g)),
            (Node::PlpIII { x, z, y, .. }, Elem::Pair(f, s)) => {
                if x.in_subgroup_raw(z, f) {
                    let s = match s {
                        Second::Top => Second::Bot,
                        Second::Bot => Second::Top,
                        Second::Val(b) => Second::val(y.neg_raw(b)),
                    };
                    Elem::pair(x.neg_raw(f), s)
                } else {
                    Elem::with_bot(x.neg_raw(f))
                }
            }
            (Node::PlpIV { x, y, .. }, Elem::Pair(f, s)) => match s {
                Second::Top => {
                    let nf = x.neg_raw(f);
                    if x.in_group_part_raw(f) {
                        let down = x
                            .cover_down_raw(&nf)
                            .expect("type IV construction requires a discretely embedded group part");
                        Elem::with_top(down)
                    } else {
                        Elem::with_top(nf)
                    }
                }
                Second::Val(b) => Elem::with_val(x.neg_raw(f), y.neg_raw(b)),
                Second::Bot => panic!("type IV products have no bottom marker"),
            },
            _ => panic!("element shape {a} does not match {self}"),
        }
    }

    // ----- residuum and tau ----------------------------------------------

    /// `a -> b = ~(a o ~b)`, the greatest `v` with `a o v <= b`.
    pub fn residuum(&self, a: &Elem, b: &Elem) -> Result<Elem> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.residuum_raw(a, b))
    }

    pub(crate) fn residuum_raw(&self, a: &Elem, b: &Elem) -> Elem {
        self.neg_raw(&self.mult_raw(a, &self.neg_raw(b)))
    }

    pub fn tau(&self, a: &Elem) -> Result<Elem> {
        self.check(a)?;
        Ok(self.tau_raw(a))
    }

    pub(crate) fn tau_raw(&self, a: &Elem) -> Elem {
        self.residuum_raw(a, a)
    }

    pub fn is_positive_idempotent(&self, a: &Elem) -> Result<bool> {
        self.check(a)?;
        Ok(self.mult_raw(a, a) == *a && self.cmp_raw(&self.unit(), a) != Ordering::Greater)
    }

    // ----- covers ---------------------------------------------------------

    /// Lower cover of a group-part element, when the group part is discretely
    /// embedded. Never falls back to the element itself.
    pub fn cover_down(&self, a: &Elem) -> Result<Elem> {
        self.cover(a, -1)
    }

    pub fn cover_up(&self, a: &Elem) -> Result<Elem> {
        self.cover(a, 1)
    }

    fn cover(&self, a: &Elem, delta: i64) -> Result<Elem> {
        self.check(a)?;
        if !self.in_group_part_raw(a) {
            return Err(Error::UndefinedCover(format!("{a} is not in the group part of {self}")));
        }
        self.cover_raw(a, delta).ok_or_else(|| {
            Error::UndefinedCover(format!("the group part of {self} is not discretely embedded"))
        })
    }

    pub(crate) fn cover_down_raw(&self, a: &Elem) -> Option<Elem> {
        self.cover_raw(a, -1)
    }

    /// Steps the last discretely ordered lex factor of a group-part element.
    fn cover_raw(&self, a: &Elem, delta: i64) -> Option<Elem> {
        match (self.node(), a) {
            (Node::Base(g), Elem::Leaf(x)) if g.is_discretely_ordered() => {
                Some(Elem::Leaf(groups::step_unchecked(x, delta)))
            }
            (Node::Base(_), _) => None,
            (Node::PlpIII { y, .. } | Node::PlpIV { y, .. }, Elem::Pair(f, Second::Val(b))) => {
                let b = y.cover_raw(b, delta)?;
                Some(Elem::with_val((**f).clone(), b))
            }
            (Node::Bounded(inner), a) if !a.is_bound() => inner.cover_raw(a, delta),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plp;
    use crate::towers::{make_qj, make_zj};

    fn q_z_q() -> Algebra {
        make_qj(2)
    }

    #[test]
    fn lex_order_in_type_one() {
        let a = q_z_q();
        let lo = Elem::with_val(Elem::rational(0, 1), Elem::rational(7, 1));
        let hi = Elem::with_bot(Elem::rational(1, 2));
        assert!(a.leq(&lo, &hi).unwrap());
        assert!(!a.leq(&hi, &lo).unwrap());
        assert!(a.leq(&a.unit(), &a.unit()).unwrap());
    }

    #[test]
    fn bounds_are_extremes() {
        let b = Algebra::integers().adjoin_bounds().unwrap();
        assert!(b.leq(&Elem::BotBound, &Elem::int(-1_000_000)).unwrap());
        assert!(b.leq(&Elem::int(1_000_000), &Elem::TopBound).unwrap());
        assert_eq!(b.mult(&Elem::TopBound, &Elem::BotBound).unwrap(), Elem::BotBound);
        assert_eq!(b.mult(&Elem::TopBound, &Elem::int(-4)).unwrap(), Elem::TopBound);
        assert_eq!(b.neg(&Elem::TopBound).unwrap(), Elem::BotBound);
        assert_eq!(b.residuum(&Elem::TopBound, &Elem::TopBound).unwrap(), Elem::TopBound);
        assert!(matches!(b.adjoin_bounds(), Err(Error::AlreadyBounded(_))));
    }

    #[test]
    fn type_two_markers() {
        let z2 = make_zj(2);
        let a = Elem::with_top(Elem::int(1));
        let b = Elem::with_val(Elem::int(2), Elem::int(5));
        assert_eq!(z2.mult(&a, &b).unwrap(), Elem::with_top(Elem::int(3)));
        // (x, T) with x in the group part negates to the lower cover.
        assert_eq!(
            z2.neg(&Elem::with_top(Elem::int(3))).unwrap(),
            Elem::with_top(Elem::int(-4))
        );
        assert_eq!(z2.neg(&b).unwrap(), Elem::with_val(Elem::int(-2), Elem::int(-5)));
        let top0 = Elem::with_top(Elem::int(0));
        assert_eq!(z2.residuum(&top0, &top0).unwrap(), top0);
        assert_eq!(z2.tau(&Elem::with_top(Elem::int(3))).unwrap(), top0);
        assert_eq!(z2.tau(&b).unwrap(), z2.unit());
    }

    #[test]
    fn type_one_bottom_dominates_top() {
        let a = q_z_q();
        let x = Elem::with_top(Elem::rational(1, 1));
        let y = Elem::with_bot(Elem::rational(0, 1));
        assert_eq!(a.mult(&x, &y).unwrap(), Elem::with_bot(Elem::rational(1, 1)));
        assert_eq!(
            a.neg(&Elem::with_bot(Elem::rational(1, 2))).unwrap(),
            Elem::with_bot(Elem::rational(-1, 2))
        );
        // Inside Z the markers swap.
        assert_eq!(
            a.neg(&Elem::with_bot(Elem::rational(1, 1))).unwrap(),
            Elem::with_top(Elem::rational(-1, 1))
        );
    }

    #[test]
    fn residuum_in_integers() {
        let z = Algebra::integers();
        assert_eq!(z.residuum(&Elem::int(2), &Elem::int(1)).unwrap(), Elem::int(-1));
        assert_eq!(Algebra::rationals().tau(&Elem::rational(5, 7)).unwrap(), Elem::rational(0, 1));
    }

    #[test]
    fn group_part_by_definition() {
        let z2 = make_zj(2);
        assert!(!z2.group_part_contains(&Elem::with_top(Elem::int(3))).unwrap());
        assert!(z2.group_part_contains(&Elem::with_val(Elem::int(2), Elem::int(5))).unwrap());
        assert!(Algebra::integers().group_part_contains(&Elem::int(-17)).unwrap());
    }

    #[test]
    fn covers_of_group_part() {
        let z = Algebra::integers();
        assert_eq!(z.cover_down(&Elem::int(-3)).unwrap(), Elem::int(-4));
        let z2 = make_zj(2);
        let e = Elem::with_val(Elem::int(2), Elem::int(5));
        assert_eq!(z2.cover_down(&e).unwrap(), Elem::with_val(Elem::int(2), Elem::int(4)));
        assert_eq!(z2.cover_up(&z2.cover_down(&e).unwrap()).unwrap(), e);
        assert!(matches!(
            Algebra::rationals().cover_down(&Elem::rational(1, 2)),
            Err(Error::UndefinedCover(_))
        ));
        assert!(matches!(
            z2.cover_down(&Elem::with_top(Elem::int(0))),
            Err(Error::UndefinedCover(_))
        ));
        assert!(matches!(q_z_q().cover_up(&q_z_q().unit()), Err(Error::UndefinedCover(_))));
    }

    #[test]
    fn non_members_are_rejected() {
        let a = q_z_q();
        let bad = Elem::with_val(Elem::rational(1, 2), Elem::rational(3, 1));
        assert!(matches!(a.neg(&bad), Err(Error::NotMember { .. })));
        assert!(matches!(a.leq(&bad, &a.unit()), Err(Error::NotMember { .. })));
        let z2 = make_zj(2);
        assert!(!z2.contains(&Elem::with_bot(Elem::int(0))));
        assert!(!z2.contains(&Elem::int(0)));
    }

    #[test]
    fn all_constructions_are_odd() {
        let z = Algebra::integers();
        let p = plp::build_plp(PlpKind::II, &z, None, None, &make_qj(2)).unwrap();
        for a in [make_zj(3), make_qj(3), p.clone(), p.adjoin_bounds().unwrap()] {
            assert_eq!(a.rank(), 0, "{a}");
            assert_eq!(a.neg(&a.unit()).unwrap(), a.unit());
        }
    }
}
