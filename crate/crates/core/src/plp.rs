//! Partial lexicographic products of types I to IV.
//!
//! Hypotheses are checked eagerly in [`build_plp`]; an [`Algebra`] that
//! exists is well defined.

use crate::algebra::{Algebra, Elem, Node, PlpKind};
use crate::error::{Error, Result};
use crate::groups::{GroupChain, SubgroupDescriptor};

pub const NOT_DISCRETELY_EMBEDDED: &str = "group part not discretely embedded";

/// Builds `PLP_kind(x, z, v, y)`.
///
/// * `III`: `v <= z <= x_gr`, both required.
/// * `I`: `z <= x_gr`; `v` may be omitted and must equal `z` if given.
/// * `IV`: `v <= x_gr`, and `x_gr` discretely embedded into `x`.
/// * `II`: as IV with `v` the full group part (may be omitted).
///
/// `z` is ignored for types II and IV.
pub fn build_plp(
    kind: PlpKind,
    x: &Algebra,
    z: Option<&SubgroupDescriptor>,
    v: Option<&SubgroupDescriptor>,
    y: &Algebra,
) -> Result<Algebra> {
    if x.is_bounded() {
        return Err(violation("first operand has adjoined bounds"));
    }
    if y.is_bounded() {
        return Err(violation("second operand has adjoined bounds"));
    }
    let kinds = x.coord_kinds();
    let grpart = x.group_part_descriptor();
    let norm = |d: &SubgroupDescriptor, name: &str| {
        d.normalized(&kinds)
            .map_err(|e| violation(format!("descriptor {name}: {e}")))
    };

    match kind {
        PlpKind::I | PlpKind::III => {
            let z = norm(z.ok_or_else(|| violation("descriptor Z is required"))?, "Z")?;
            let v = match (kind, v) {
                (PlpKind::I, None) => z.clone(),
                (_, Some(v)) => norm(v, "V")?,
                (PlpKind::III, None) => return Err(violation("descriptor V is required")),
                _ => unreachable!(),
            };
            if !z.refines(&grpart) {
                return Err(violation("descriptor Z is not a subgroup of the group part (Z <= X_gr fails)"));
            }
            if !v.refines(&z) {
                return Err(violation("descriptor V does not refine Z (V <= Z fails)"));
            }
            if kind == PlpKind::I && v != z {
                return Err(violation("type I requires V = Z"));
            }
            Ok(Algebra::from_node(Node::PlpIII {
                x: x.clone(),
                z,
                v,
                y: y.clone(),
            }))
        }
        PlpKind::II | PlpKind::IV => {
            let v = match (kind, v) {
                (PlpKind::II, None) => grpart.clone(),
                (_, Some(v)) => norm(v, "V")?,
                (PlpKind::IV, None) => return Err(violation("descriptor V is required")),
                _ => unreachable!(),
            };
            if !v.refines(&grpart) {
                return Err(violation("descriptor V is not a subgroup of the group part (V <= X_gr fails)"));
            }
            if kind == PlpKind::II && v != grpart {
                return Err(violation("type II requires V = X_gr"));
            }
            if !is_grpart_discretely_embedded(x) {
                return Err(violation(NOT_DISCRETELY_EMBEDDED));
            }
            Ok(Algebra::from_node(Node::PlpIV {
                x: x.clone(),
                v,
                y: y.clone(),
            }))
        }
    }
}

fn violation(msg: impl Into<String>) -> Error {
    Error::PreconditionViolation(msg.into())
}

pub fn plp_i(x: &Algebra, z: &SubgroupDescriptor, y: &Algebra) -> Result<Algebra> {
    build_plp(PlpKind::I, x, Some(z), None, y)
}

pub fn plp_ii(x: &Algebra, y: &Algebra) -> Result<Algebra> {
    build_plp(PlpKind::II, x, None, None, y)
}

pub fn plp_iii(x: &Algebra, z: &SubgroupDescriptor, v: &SubgroupDescriptor, y: &Algebra) -> Result<Algebra> {
    build_plp(PlpKind::III, x, Some(z), Some(v), y)
}

pub fn plp_iv(x: &Algebra, v: &SubgroupDescriptor, y: &Algebra) -> Result<Algebra> {
    build_plp(PlpKind::IV, x, None, Some(v), y)
}

/// Carrier membership for a product algebra.
pub fn plp_contains(p: &Algebra, e: &Elem) -> Result<bool> {
    match p.node() {
        Node::PlpIII { .. } | Node::PlpIV { .. } => {}
        _ => return Err(Error::Shape(format!("{p} is not a partial lexicographic product"))),
    }
    match e {
        Elem::Pair(..) => Ok(p.contains(e)),
        _ => Err(Error::Shape(format!("{e} is not a pair"))),
    }
}

/// Whether every group-part element has both covers and they stay in the
/// group part. Decided structurally: for a product the question reduces to
/// the second factor, and in the end to the last lex factor being a
/// discretely ordered group.
pub fn is_grpart_discretely_embedded(a: &Algebra) -> bool {
    match a.node() {
        Node::Base(g) => g.is_discretely_ordered(),
        Node::PlpIII { y, .. } | Node::PlpIV { y, .. } => is_grpart_discretely_embedded(y),
        Node::Bounded(inner) => is_grpart_discretely_embedded(inner),
    }
}

/// No least and no greatest element.
pub fn is_unbounded(a: &Algebra) -> bool {
    match a.node() {
        Node::Base(g) => *g != GroupChain::Trivial,
        Node::PlpIII { x, .. } | Node::PlpIV { x, .. } => is_unbounded(x),
        Node::Bounded(_) => false,
    }
}

/// The order has no covering pairs.
pub fn is_densely_ordered(a: &Algebra) -> bool {
    match a.node() {
        Node::Base(GroupChain::ZLex(_)) => false,
        Node::Base(_) => true,
        Node::PlpIII { x, z, v, y } => {
            // (x1, top-of-fiber) covers nothing only if x is dense; (z, Bot)
            // is covered by (z, Top) for z in Z \ V.
            is_densely_ordered(x) && z == v && is_unbounded(y) && is_densely_ordered(y)
        }
        Node::PlpIV { x, v, y } => {
            let covers_land_in_v = is_densely_ordered(x)
                || (covers_within_group_part(x) && *v == x.group_part_descriptor());
            covers_land_in_v && is_unbounded(y) && is_densely_ordered(y)
        }
        Node::Bounded(inner) => is_unbounded(inner) && is_densely_ordered(inner),
    }
}

/// Every covering pair consists of two group-part elements.
pub fn covers_within_group_part(a: &Algebra) -> bool {
    match a.node() {
        Node::Base(_) => true,
        Node::PlpIII { x, z, v, y } => {
            is_densely_ordered(x) && z == v && is_unbounded(y) && covers_within_group_part(y)
        }
        Node::PlpIV { x, v, y } => {
            let covers_land_in_v = is_densely_ordered(x)
                || (covers_within_group_part(x) && *v == x.group_part_descriptor());
            covers_land_in_v && is_unbounded(y) && covers_within_group_part(y)
        }
        Node::Bounded(inner) => is_unbounded(inner) && covers_within_group_part(inner),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Second;
    use crate::groups::CoordConstraint;
    use crate::towers::{make_qj, make_zj};

    fn ints() -> SubgroupDescriptor {
        SubgroupDescriptor(vec![CoordConstraint::multiples_of(1)])
    }

    #[test]
    fn builds_the_towers() {
        let z = Algebra::integers();
        let q = Algebra::rationals();
        assert_eq!(plp_ii(&z, &z).unwrap(), make_zj(2));
        assert_eq!(plp_i(&q, &ints(), &q).unwrap(), make_qj(2));
        assert_eq!(make_zj(2).plp_kind(), Some(PlpKind::II));
        assert_eq!(make_qj(2).plp_kind(), Some(PlpKind::I));
    }

    #[test]
    fn type_two_over_rationals_is_rejected() {
        let q = Algebra::rationals();
        let z = Algebra::integers();
        let err = plp_ii(&q, &z).unwrap_err();
        assert_eq!(err, Error::PreconditionViolation(NOT_DISCRETELY_EMBEDDED.into()));
        let err = plp_iv(&q, &ints(), &z).unwrap_err();
        assert_eq!(err, Error::PreconditionViolation(NOT_DISCRETELY_EMBEDDED.into()));
        assert!(plp_ii(&make_qj(2), &z).is_err());
    }

    #[test]
    fn descriptor_preconditions() {
        let z = Algebra::integers();
        let two = SubgroupDescriptor(vec![CoordConstraint::multiples_of(2)]);
        let four = SubgroupDescriptor(vec![CoordConstraint::multiples_of(4)]);
        assert!(plp_iii(&z, &two, &four, &z).is_ok());
        let err = plp_iii(&z, &four, &two, &z).unwrap_err();
        assert!(err.to_string().contains("V <= Z"), "{err}");
        let short = SubgroupDescriptor(vec![]);
        assert!(plp_i(&z, &short, &z).is_err());
        let bounded = z.adjoin_bounds().unwrap();
        assert!(plp_ii(&bounded, &z).is_err());
        assert!(plp_ii(&z, &bounded).is_err());
        // Z <= X_gr: Q_2's group part has an integer first coordinate.
        let q = Algebra::rationals();
        let half = SubgroupDescriptor(vec![
            CoordConstraint::MultiplesOf(num_rational::BigRational::new(1.into(), 2.into())),
            CoordConstraint::All,
        ]);
        let err = plp_i(&make_qj(2), &half, &q).unwrap_err();
        assert!(err.to_string().contains("Z <= X_gr"), "{err}");
    }

    #[test]
    fn carrier_equations() {
        let q2 = make_qj(2);
        let half = Elem::rational(1, 2);
        assert!(!plp_contains(&q2, &Elem::with_val(half.clone(), Elem::rational(3, 1))).unwrap());
        assert!(plp_contains(&q2, &Elem::with_bot(half.clone())).unwrap());
        assert!(!plp_contains(&q2, &Elem::with_top(half)).unwrap());
        assert!(plp_contains(&make_zj(2), &Elem::with_top(Elem::int(7))).unwrap());
        assert!(plp_contains(&Algebra::integers(), &Elem::int(1)).is_err());

        // Type III: Z \ V admits only the markers.
        let z = Algebra::integers();
        let two = SubgroupDescriptor(vec![CoordConstraint::multiples_of(2)]);
        let four = SubgroupDescriptor(vec![CoordConstraint::multiples_of(4)]);
        let p = plp_iii(&z, &two, &four, &z).unwrap();
        assert!(p.contains(&Elem::with_top(Elem::int(2))));
        assert!(p.contains(&Elem::with_bot(Elem::int(2))));
        assert!(!p.contains(&Elem::with_val(Elem::int(2), Elem::int(0))));
        assert!(p.contains(&Elem::with_val(Elem::int(4), Elem::int(0))));
        assert!(!p.contains(&Elem::pair(Elem::int(3), Second::Top)));
        assert!(p.contains(&Elem::pair(Elem::int(3), Second::Bot)));
    }

    #[test]
    fn discrete_embedding_predicate() {
        assert!(is_grpart_discretely_embedded(&Algebra::integers()));
        for j in 1..5 {
            assert!(is_grpart_discretely_embedded(&make_zj(j)));
        }
        assert!(!is_grpart_discretely_embedded(&make_qj(2)));
        assert!(!is_grpart_discretely_embedded(&Algebra::base(GroupChain::Trivial)));
    }

    #[test]
    fn density_predicate() {
        assert!(is_densely_ordered(&make_qj(3)));
        assert!(!is_densely_ordered(&make_zj(2)));
        let z = Algebra::integers();
        assert!(is_densely_ordered(&plp_ii(&z, &Algebra::rationals()).unwrap()));
        assert!(is_densely_ordered(&plp_ii(&make_zj(2), &make_qj(2)).unwrap()));
        let two = SubgroupDescriptor(vec![CoordConstraint::multiples_of(2)]);
        assert!(!is_densely_ordered(&plp_iv(&z, &two, &Algebra::rationals()).unwrap()));
        let q = Algebra::rationals();
        let four = SubgroupDescriptor(vec![CoordConstraint::multiples_of(4)]);
        assert!(!is_densely_ordered(&plp_iii(&q, &two, &four, &q).unwrap()));
        assert!(!is_densely_ordered(&plp_i(&q, &two, &z).unwrap()));
    }
}
