use crate::algebra::{Algebra, Elem, PlpKind, Second};
use crate::error::{Error, Result};
use crate::plp;

use super::make_zj;

/// The two ways of nesting type II products of `A`, `B`, `C`:
/// `left = PLPII(PLPII(A, B), C)` and `right = PLPII(A, PLPII(B, C))`,
/// with the canonical bijection between them.
#[derive(Clone, Debug)]
pub struct Type2Fusion {
    pub left: Algebra,
    pub right: Algebra,
}

/// Both nestings of type II products, which are well defined under the same
/// hypotheses (`A` and `B` have discretely embedded group parts).
pub fn fuse_type2_iso(a: &Algebra, b: &Algebra, c: &Algebra) -> Result<Type2Fusion> {
    let left = plp::plp_ii(a, b).and_then(|ab| plp::plp_ii(&ab, c));
    let right = plp::plp_ii(b, c).and_then(|bc| plp::plp_ii(a, &bc));
    match (left, right) {
        (Ok(left), Ok(right)) => Ok(Type2Fusion { left, right }),
        (Err(l), Err(r)) => Err(Error::PreconditionViolation(format!(
            "neither nesting is well defined: left: {l}; right: {r}"
        ))),
        (Err(e), Ok(_)) | (Ok(_), Err(e)) => Err(Error::PreconditionViolation(format!(
            "only one nesting is well defined: {e}"
        ))),
    }
}

impl Type2Fusion {
    /// `((a, T), T) -> (a, T)`, `((a, b), T) -> (a, (b, T))`,
    /// `((a, b), c) -> (a, (b, c))`.
    pub fn to_right(&self, e: &Elem) -> Result<Elem> {
        self.left.check(e)?;
        Ok(reassociate_right(e))
    }

    pub fn to_left(&self, e: &Elem) -> Result<Elem> {
        self.right.check(e)?;
        Ok(reassociate_left(e))
    }
}

fn reassociate_right(e: &Elem) -> Elem {
    let Elem::Pair(ab, s) = e else {
        unreachable!("type II elements are pairs")
    };
    let Elem::Pair(a, inner) = &**ab else {
        unreachable!("type II elements are pairs")
    };
    match (inner, s) {
        (Second::Top, Second::Top) => Elem::with_top((**a).clone()),
        (Second::Val(b), s) => Elem::with_val((**a).clone(), Elem::pair((**b).clone(), s.clone())),
        _ => unreachable!("((a, T), c) is not a member of a type II product"),
    }
}

fn reassociate_left(e: &Elem) -> Elem {
    let Elem::Pair(a, s) = e else {
        unreachable!("type II elements are pairs")
    };
    match s {
        Second::Top => Elem::with_top(Elem::with_top((**a).clone())),
        Second::Val(bc) => {
            let Elem::Pair(b, c) = &**bc else {
                unreachable!("type II elements are pairs")
            };
            Elem::pair(Elem::with_val((**a).clone(), (**b).clone()), c.clone())
        }
        Second::Bot => unreachable!("type II products have no bottom marker"),
    }
}

fn zjk_check(j: usize, k: usize, e: &Elem) -> Result<()> {
    if j == 0 || k == 0 {
        return Err(Error::Shape("tower indices start at 1".into()));
    }
    let p = plp::build_plp(PlpKind::II, &make_zj(j), None, None, &make_zj(k)).expect("Z_j has a discrete group part");
    p.check(e)
}

/// The isomorphism `PLPII(Z_j, Z_k) -> Z_{j+k}`, obtained by re-associating
/// the leading `Z` out of `Z_j` one level at a time.
pub fn zjk_iso(j: usize, k: usize, e: &Elem) -> Result<Elem> {
    zjk_check(j, k, e)?;
    Ok(zjk_raw(j, e))
}

fn zjk_raw(j: usize, e: &Elem) -> Elem {
    if j == 1 {
        return e.clone();
    }
    // PLPII(PLPII(Z, Z_{j-1}), Z_k) -> PLPII(Z, PLPII(Z_{j-1}, Z_k)).
    match reassociate_right(e) {
        Elem::Pair(a, Second::Val(inner)) => Elem::with_val(*a, zjk_raw(j - 1, &inner)),
        other => other,
    }
}

/// Inverse of [`zjk_iso`].
pub fn zjk_iso_inverse(j: usize, k: usize, e: &Elem) -> Result<Elem> {
    if j == 0 || k == 0 {
        return Err(Error::Shape("tower indices start at 1".into()));
    }
    make_zj(j + k).check(e)?;
    Ok(zjk_inverse_raw(j, e))
}

fn zjk_inverse_raw(j: usize, e: &Elem) -> Elem {
    if j == 1 {
        return e.clone();
    }
    let e = match e {
        Elem::Pair(a, Second::Val(inner)) => Elem::with_val((**a).clone(), zjk_inverse_raw(j - 1, inner)),
        other => other.clone(),
    };
    reassociate_left(&e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reassociation_examples() {
        let z = Algebra::integers();
        let f = fuse_type2_iso(&z, &z, &z).unwrap();
        let l = Elem::with_top(Elem::with_top(Elem::int(1)));
        assert_eq!(f.to_right(&l).unwrap(), Elem::with_top(Elem::int(1)));
        let l = Elem::with_val(Elem::with_val(Elem::int(0), Elem::int(2)), Elem::int(3));
        let r = Elem::with_val(Elem::int(0), Elem::with_val(Elem::int(2), Elem::int(3)));
        assert_eq!(f.to_right(&l).unwrap(), r);
        assert_eq!(f.to_left(&r).unwrap(), l);
        assert_eq!(f.to_right(&f.left.unit()).unwrap(), f.right.unit());
    }

    #[test]
    fn fusion_requires_discrete_factors() {
        let q = Algebra::rationals();
        let z = Algebra::integers();
        assert!(matches!(fuse_type2_iso(&q, &z, &z), Err(Error::PreconditionViolation(_))));
        assert!(matches!(fuse_type2_iso(&z, &q, &z), Err(Error::PreconditionViolation(_))));
        assert!(fuse_type2_iso(&z, &z, &q).is_ok());
    }

    #[test]
    fn zjk_examples() {
        let e = Elem::with_top(Elem::int(3));
        assert_eq!(zjk_iso(1, 1, &e).unwrap(), e);
        let e = Elem::with_val(Elem::int(3), Elem::int(5));
        assert_eq!(zjk_iso(1, 1, &e).unwrap(), e);
        let z2 = make_zj(2);
        let unit = Elem::with_val(z2.unit(), Algebra::integers().unit());
        assert_eq!(zjk_iso(2, 1, &unit).unwrap(), make_zj(3).unit());
        let e = Elem::with_val(Elem::with_top(Elem::int(4)), Elem::int(0));
        assert!(zjk_iso(2, 1, &e).is_err());
        let e = Elem::with_val(Elem::with_val(Elem::int(4), Elem::int(1)), Elem::int(7));
        let img = zjk_iso(2, 1, &e).unwrap();
        assert_eq!(img, Elem::with_val(Elem::int(4), Elem::with_val(Elem::int(1), Elem::int(7))));
        assert_eq!(zjk_iso_inverse(2, 1, &img).unwrap(), e);
    }
}
