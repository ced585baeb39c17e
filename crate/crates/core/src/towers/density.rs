use std::cmp::Ordering;

use num_rational::BigRational;
use num_traits::One;

use crate::algebra::{Algebra, Elem, Node, Second};
use crate::error::{Error, Result};
use crate::groups::{self, GroupChain, GroupElem};
use crate::plp::{covers_within_group_part, is_densely_ordered, is_unbounded};

/// An element strictly between `x < y`.
///
/// The order of `a` must be dense, which is decided structurally first; if
/// it is not, the error names the construction step that produces covering
/// pairs. The witness is built by cases on the two elements: if the first
/// coordinates differ, a dense witness between them paired with the lowest
/// admissible marker; if they agree, a witness in the second component,
/// falling back to a successor or predecessor there when one side is a
/// marker.
pub fn between(a: &Algebra, x: &Elem, y: &Elem) -> Result<Elem> {
    a.check(x)?;
    a.check(y)?;
    if a.cmp_raw(x, y) != Ordering::Less {
        return Err(Error::PreconditionViolation(format!("{x} < {y} does not hold")));
    }
    if let Some(reason) = density_obstruction(a) {
        return Err(Error::NotDense(reason));
    }
    find_between(a, x, y).ok_or_else(|| Error::NotDense(format!("no element found between {x} and {y}")))
}

/// Why the order of `a` has covering pairs, or `None` if it is dense.
pub fn density_obstruction(a: &Algebra) -> Option<String> {
    if is_densely_ordered(a) {
        return None;
    }
    Some(match a.node() {
        Node::Base(g) => format!("{g} is discretely ordered"),
        Node::PlpIII { x, z, v, y } => {
            if z != v {
                format!("in {a}, (z, B) is covered by (z, T) for z in Z outside V")
            } else if !is_unbounded(y) {
                format!("in {a}, the second factor {y} is bounded")
            } else if !is_densely_ordered(x) {
                density_obstruction(x).unwrap_or_default()
            } else {
                density_obstruction(y).unwrap_or_default()
            }
        }
        Node::PlpIV { x, v, y } => {
            if !is_unbounded(y) {
                format!("in {a}, the second factor {y} is bounded")
            } else if !is_densely_ordered(y) {
                density_obstruction(y).unwrap_or_default()
            } else if !covers_within_group_part(x) {
                density_obstruction(x).unwrap_or_default()
            } else if *v != x.group_part_descriptor() {
                format!("in {a}, (x, T) is covered by its successor for x in the group part of {x} outside V")
            } else {
                density_obstruction(x).unwrap_or_default()
            }
        }
        Node::Bounded(inner) => {
            if !is_unbounded(inner) {
                format!("{inner} has a least or greatest element, adjacent to an adjoined bound")
            } else {
                density_obstruction(inner).unwrap_or_default()
            }
        }
    })
}

fn rat(e: &Elem) -> &BigRational {
    match e {
        Elem::Leaf(GroupElem::Rational(q)) => q,
        _ => unreachable!("rational base holds rational leaves"),
    }
}

fn leaf_rat(q: BigRational) -> Elem {
    Elem::Leaf(GroupElem::Rational(q))
}

/// An element strictly above `e`, if any.
pub fn above(a: &Algebra, e: &Elem) -> Option<Elem> {
    step(a, e, 1)
}

/// An element strictly below `e`, if any.
pub fn below(a: &Algebra, e: &Elem) -> Option<Elem> {
    step(a, e, -1)
}

fn step(a: &Algebra, e: &Elem, dir: i64) -> Option<Elem> {
    match (a.node(), e) {
        (Node::Base(GroupChain::QChain), e) => {
            Some(leaf_rat(rat(e) + BigRational::from_integer(dir.into())))
        }
        (Node::Base(GroupChain::ZLex(_)), Elem::Leaf(g)) => Some(Elem::Leaf(groups::step_unchecked(g, dir))),
        (Node::Base(_), _) => None,
        (Node::PlpIII { x, .. } | Node::PlpIV { x, .. }, Elem::Pair(f, s)) => {
            let same_first = if dir > 0 { seconds_above(a, f, s) } else { seconds_below(a, f, s) };
            same_first.map(|s| Elem::pair((**f).clone(), s)).or_else(|| {
                let f2 = step(x, f, dir)?;
                lowest_or_highest(a, f2, dir)
            })
        }
        (Node::Bounded(inner), Elem::TopBound) if dir < 0 => Some(inner.unit()),
        (Node::Bounded(inner), Elem::BotBound) if dir > 0 => Some(inner.unit()),
        (Node::Bounded(_), Elem::TopBound | Elem::BotBound) => None,
        (Node::Bounded(inner), e) => {
            step(inner, e, dir).or(Some(if dir > 0 { Elem::TopBound } else { Elem::BotBound }))
        }
        _ => None,
    }
}

/// Some element with first coordinate `f`: the lowest marker when moving up
/// onto `f` from below, the highest when moving down.
fn lowest_or_highest(a: &Algebra, f: Elem, dir: i64) -> Option<Elem> {
    let candidates = if dir > 0 {
        [Second::Bot, Second::Top]
    } else {
        [Second::Top, Second::Bot]
    };
    candidates
        .into_iter()
        .map(|s| Elem::pair(f.clone(), s))
        .find(|e| a.contains(e))
        .or_else(|| {
            let e = Elem::with_val(f, second_factor(a).unit());
            a.contains(&e).then_some(e)
        })
}

fn second_factor(a: &Algebra) -> &Algebra {
    match a.node() {
        Node::PlpIII { y, .. } | Node::PlpIV { y, .. } => y,
        _ => unreachable!("product algebras only"),
    }
}

/// A second component for `f` strictly above `s`.
fn seconds_above(a: &Algebra, f: &Elem, s: &Second) -> Option<Second> {
    let y = second_factor(a);
    let admissible = |s: Second| a.contains(&Elem::pair(f.clone(), s.clone())).then_some(s);
    match s {
        Second::Top => None,
        Second::Bot => admissible(Second::val(y.unit())).or_else(|| admissible(Second::Top)),
        Second::Val(b) => step(y, b, 1)
            .map(Second::val)
            .or_else(|| admissible(Second::Top)),
    }
}

/// A second component for `f` strictly below `s`.
fn seconds_below(a: &Algebra, f: &Elem, s: &Second) -> Option<Second> {
    let y = second_factor(a);
    let admissible = |s: Second| a.contains(&Elem::pair(f.clone(), s.clone())).then_some(s);
    match s {
        Second::Bot => None,
        Second::Top => admissible(Second::val(y.unit())).or_else(|| admissible(Second::Bot)),
        Second::Val(b) => step(y, b, -1)
            .map(Second::val)
            .or_else(|| admissible(Second::Bot)),
    }
}

/// Generic witness search for `x < y`; `None` when `y` covers `x`.
fn find_between(a: &Algebra, x: &Elem, y: &Elem) -> Option<Elem> {
    match (a.node(), x, y) {
        (Node::Base(GroupChain::QChain), x, y) => {
            let two = BigRational::one() + BigRational::one();
            Some(leaf_rat((rat(x) + rat(y)) / two))
        }
        (Node::Base(_), _, _) => {
            let up = step(a, x, 1)?;
            (a.cmp_raw(&up, y) == Ordering::Less).then_some(up)
        }
        (Node::Bounded(inner), Elem::BotBound, Elem::TopBound) => Some(inner.unit()),
        (Node::Bounded(inner), Elem::BotBound, y) => step(inner, y, -1),
        (Node::Bounded(inner), x, Elem::TopBound) => step(inner, x, 1),
        (Node::Bounded(inner), x, y) => find_between(inner, x, y),
        (Node::PlpIII { x: xa, .. } | Node::PlpIV { x: xa, .. }, Elem::Pair(x1, s1), Elem::Pair(y1, s2)) => {
            if xa.cmp_raw(x1, y1) == Ordering::Less {
                if let Some(m) = find_between(xa, x1, y1) {
                    return lowest_or_highest(a, m, 1);
                }
                // y1 covers x1: stay on one of the two first coordinates.
                seconds_above(a, x1, s1)
                    .map(|s| Elem::pair((**x1).clone(), s))
                    .or_else(|| seconds_below(a, y1, s2).map(|s| Elem::pair((**y1).clone(), s)))
            } else {
                let s = match (s1, s2) {
                    (Second::Val(p), Second::Val(q)) => Second::val(find_between(second_factor(a), p, q)?),
                    (s1, Second::Top) => seconds_above(a, x1, s1).filter(|s| *s != Second::Top)?,
                    (Second::Bot, s2) => seconds_below(a, x1, s2).filter(|s| *s != Second::Bot)?,
                    _ => return None,
                };
                Some(Elem::pair((**x1).clone(), s))
            }
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::literal::parse_algebra;
    use crate::towers::{make_qj, make_zj};

    #[test]
    fn rational_tower_witnesses() {
        let q2 = make_qj(2);
        let x = Elem::with_val(Elem::rational(0, 1), Elem::rational(3, 1));
        let y = Elem::with_top(Elem::rational(0, 1));
        assert_eq!(between(&q2, &x, &y).unwrap(), Elem::with_val(Elem::rational(0, 1), Elem::rational(4, 1)));
        let x = Elem::with_bot(Elem::rational(1, 2));
        let y = Elem::with_bot(Elem::rational(3, 4));
        assert_eq!(between(&q2, &x, &y).unwrap(), Elem::with_bot(Elem::rational(5, 8)));
        // Bot below Top at an integer first coordinate.
        let x = Elem::with_bot(Elem::rational(1, 1));
        let y = Elem::with_top(Elem::rational(1, 1));
        assert_eq!(between(&q2, &x, &y).unwrap(), Elem::with_val(Elem::rational(1, 1), Elem::rational(0, 1)));
    }

    #[test]
    fn integer_algebras_are_not_dense() {
        let err = between(&Algebra::integers(), &Elem::int(0), &Elem::int(1)).unwrap_err();
        assert!(matches!(err, Error::NotDense(ref m) if m.contains("Z is discretely ordered")), "{err}");
        let z2 = make_zj(2);
        assert!(matches!(
            between(&z2, &Elem::with_top(Elem::int(0)), &Elem::with_top(Elem::int(5))),
            Err(Error::NotDense(_))
        ));
        let a = parse_algebra("PLPIII(Q,Z,2Z,Q)").unwrap();
        let err = between(&a, &Elem::with_bot(Elem::rational(1, 1)), &Elem::with_top(Elem::rational(1, 1))).unwrap_err();
        assert!(matches!(err, Error::NotDense(ref m) if m.contains("outside V")), "{err}");
    }

    #[test]
    fn bounded_dense_chain() {
        let a = make_qj(2).adjoin_bounds().unwrap();
        let m = between(&a, &Elem::BotBound, &Elem::TopBound).unwrap();
        assert_eq!(m, a.unit());
        let m = between(&a, &Elem::with_top(Elem::rational(2, 1)), &Elem::TopBound).unwrap();
        assert!(a.cmp_raw(&m, &Elem::TopBound).is_lt());
        assert!(matches!(between(&a, &Elem::TopBound, &Elem::BotBound), Err(Error::PreconditionViolation(_))));
    }
}
