//! Tower constructions: the `Z_j`/`Q_j` series, representation chains from a
//! [`RepresentationSpec`], the dense standard target they embed into, the
//! canonical isomorphisms between nested type II products, density
//! witnesses and the tau-closure experiment.
//!
//! `Q_j` plays the role of the real tower `R_j`: it is countable, dense and
//! unbounded, which is everything the embedding needs that can be checked
//! on exact values.

mod build;
mod closure;
mod density;
mod iso;
mod spec;

pub use build::{build_paired, build_representation, build_standard_target, Countertower, StandardTarget, TowerMode};
pub use closure::{closure_tau_count, closure_tau_values, DEFAULT_CLOSURE_BUDGET};
pub use density::{above, below, between, density_obstruction};
pub use iso::{fuse_type2_iso, zjk_iso, zjk_iso_inverse, Type2Fusion};
pub use spec::{Iota, RepresentationSpec};

use crate::algebra::Algebra;
use crate::groups::{CoordConstraint, SubgroupDescriptor};
use crate::plp;

/// `Z_1 = Z`, `Z_{j+1} = PLPII(Z, Z_j)`.
///
/// # Panics
///
/// If `j == 0`.
pub fn make_zj(j: usize) -> Algebra {
    assert!(j >= 1, "tower index must be at least 1");
    let mut a = Algebra::integers();
    for _ in 1..j {
        a = plp::plp_ii(&Algebra::integers(), &a).expect("Z is discretely ordered");
    }
    a
}

/// `Q_1 = Q`, `Q_{j+1} = PLPI(Q, Z, Q_j)`.
///
/// # Panics
///
/// If `j == 0`.
pub fn make_qj(j: usize) -> Algebra {
    assert!(j >= 1, "tower index must be at least 1");
    let ints = SubgroupDescriptor(vec![CoordConstraint::multiples_of(1)]);
    let mut a = Algebra::rationals();
    for _ in 1..j {
        a = plp::plp_i(&Algebra::rationals(), &ints, &a).expect("Z is a subgroup of Q");
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Elem;
    use crate::groups::GroupChain;

    #[test]
    fn first_stages_are_base_groups() {
        assert_eq!(make_zj(1), Algebra::base(GroupChain::ZLex(1)));
        assert_eq!(make_qj(1), Algebra::rationals());
    }

    #[test]
    fn z2_carrier() {
        let z2 = make_zj(2);
        assert!(z2.contains(&Elem::with_top(Elem::int(-3))));
        assert!(z2.contains(&Elem::with_val(Elem::int(-3), Elem::int(8))));
        assert!(!z2.contains(&Elem::with_bot(Elem::int(0))));
    }

    #[test]
    fn zj_group_part_is_lex_power() {
        assert_eq!(make_zj(3).group_part_descriptor(), SubgroupDescriptor::full(3));
        let q3 = make_qj(3).group_part_descriptor();
        assert_eq!(
            q3.0,
            vec![
                CoordConstraint::multiples_of(1),
                CoordConstraint::multiples_of(1),
                CoordConstraint::All
            ]
        );
    }
}
