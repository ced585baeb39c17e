use proptest::prelude::*;

use oddchain::logic::{check_consequence, eval, parse_formula, unit_interval_render, Assignment, Formula};
use oddchain::sample::Sampler;
use oddchain::towers::{between, make_qj, make_zj, zjk_iso, zjk_iso_inverse};
use oddchain::{parse_algebra, parse_elem_in, Algebra, Elem};

fn algebras() -> Vec<Algebra> {
    vec![
        Algebra::integers(),
        Algebra::rationals(),
        make_zj(2),
        make_zj(3),
        make_qj(2),
        make_qj(3),
        parse_algebra("PLPIII(Z,2Z,4Z,Z_2)").unwrap(),
        parse_algebra("PLPIV(Z_2,[3Z,Z],Q)").unwrap(),
        make_zj(2).adjoin_bounds().unwrap(),
    ]
}

fn algebra_and_seed() -> impl Strategy<Value = (Algebra, u64)> {
    (0..algebras().len(), any::<u64>()).prop_map(|(i, seed)| (algebras()[i].clone(), seed))
}

fn formula() -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![
        prop::sample::select(vec!["p", "q", "r"]).prop_map(Formula::var),
        Just(Formula::ConstT),
        Just(Formula::ConstF),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::neg),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Formula::and(l, r)),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Formula::or(l, r)),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Formula::fuse(l, r)),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Formula::imp(l, r)),
            (inner.clone(), inner).prop_map(|(l, r)| Formula::iff(l, r)),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn element_literals_round_trip((a, seed) in algebra_and_seed()) {
        let e = Sampler::new(seed).elem(&a);
        prop_assert_eq!(parse_elem_in(&a, &e.to_string()).unwrap(), e);
    }

    #[test]
    fn algebra_literals_round_trip((a, _) in algebra_and_seed()) {
        prop_assert_eq!(parse_algebra(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn formulas_round_trip(phi in formula()) {
        prop_assert_eq!(parse_formula(&phi.to_string()).unwrap(), phi);
    }

    #[test]
    fn residuum_is_adjoint((a, seed) in algebra_and_seed()) {
        let mut s = Sampler::new(seed);
        let (x, y, v) = (s.elem(&a), s.elem(&a), s.elem(&a));
        let r = a.residuum(&x, &y).unwrap();
        prop_assert_eq!(a.leq(&a.mult(&x, &v).unwrap(), &y).unwrap(), a.leq(&v, &r).unwrap());
        // x o (x -> y) <= y always holds.
        prop_assert!(a.leq(&a.mult(&x, &r).unwrap(), &y).unwrap());
    }

    #[test]
    fn negation_is_an_order_reversing_involution((a, seed) in algebra_and_seed()) {
        let mut s = Sampler::new(seed);
        let (x, y) = (s.elem(&a), s.elem(&a));
        let (nx, ny) = (a.neg(&x).unwrap(), a.neg(&y).unwrap());
        prop_assert_eq!(a.neg(&nx).unwrap(), x.clone());
        prop_assert_eq!(a.compare(&x, &y).unwrap(), a.compare(&ny, &nx).unwrap());
        prop_assert_eq!(a.neg(&a.unit()).unwrap(), a.unit());
    }

    #[test]
    fn product_is_monotone_and_commutative((a, seed) in algebra_and_seed()) {
        let mut s = Sampler::new(seed);
        let (x, y, z) = (s.elem(&a), s.elem(&a), s.elem(&a));
        prop_assert_eq!(a.mult(&x, &y).unwrap(), a.mult(&y, &x).unwrap());
        prop_assert_eq!(
            a.mult(&a.mult(&x, &y).unwrap(), &z).unwrap(),
            a.mult(&x, &a.mult(&y, &z).unwrap()).unwrap()
        );
        if a.leq(&x, &y).unwrap() {
            prop_assert!(a.leq(&a.mult(&x, &z).unwrap(), &a.mult(&y, &z).unwrap()).unwrap());
        }
    }

    #[test]
    fn tau_is_a_positive_idempotent((a, seed) in algebra_and_seed()) {
        let x = Sampler::new(seed).elem(&a);
        let t = a.tau(&x).unwrap();
        prop_assert!(a.is_positive_idempotent(&t).unwrap(), "tau({}) = {}", x, t);
    }

    #[test]
    fn rendering_preserves_order((a, seed) in algebra_and_seed(), n in 1usize..30) {
        let mut s = Sampler::new(seed);
        let mut elems: Vec<Elem> = Vec::new();
        for _ in 0..n {
            let e = s.elem(&a);
            if !elems.contains(&e) {
                elems.push(e);
            }
        }
        let rendered = unit_interval_render(&a, &elems).unwrap();
        for (x, vx) in &rendered {
            for (y, vy) in &rendered {
                prop_assert_eq!(a.compare(x, y).unwrap(), vx.cmp(vy));
            }
        }
    }

    #[test]
    fn zjk_splits_round_trip(j in 1usize..4, k in 1usize..4, seed in any::<u64>()) {
        let x = Sampler::new(seed).elem(&make_zj(j + k));
        let y = zjk_iso_inverse(j, k, &x).unwrap();
        prop_assert_eq!(zjk_iso(j, k, &y).unwrap(), x);
    }

    #[test]
    fn between_is_strict(i in 0usize..2, seed in any::<u64>()) {
        let a = [make_qj(2), make_qj(3)][i].clone();
        let mut s = Sampler::new(seed);
        let (x, y) = (s.elem(&a), s.elem(&a));
        prop_assume!(x != y);
        let (x, y) = if a.leq(&x, &y).unwrap() { (x, y) } else { (y, x) };
        let m = between(&a, &x, &y).unwrap();
        prop_assert!(a.compare(&x, &m).unwrap().is_lt() && a.compare(&m, &y).unwrap().is_lt());
    }

    #[test]
    fn evaluation_respects_the_residuum((a, seed) in algebra_and_seed()) {
        let mut s = Sampler::new(seed);
        let env: Assignment = [("p", s.elem(&a)), ("q", s.elem(&a))]
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect();
        let imp = eval(&a, &parse_formula("p -> q").unwrap(), &env).unwrap();
        let neg = eval(&a, &parse_formula("~(p * ~q)").unwrap(), &env).unwrap();
        prop_assert_eq!(imp, neg);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn search_is_deterministic(phi in formula(), seed in any::<u64>()) {
        let a = make_zj(2).adjoin_bounds().unwrap();
        let first = check_consequence(&a, &[], &phi, 300, seed).unwrap();
        let second = check_consequence(&a, &[], &phi, 300, seed).unwrap();
        prop_assert_eq!(first, second);
    }
}
