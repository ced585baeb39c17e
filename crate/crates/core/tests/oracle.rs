//! Cross-checks of the recursive algebra against hand-written tuple models.

use std::cmp::Ordering;

use oddchain::sample::{window, Sampler};
use oddchain::towers::{make_qj, make_zj};
use oddchain::{Algebra, Elem, GroupElem, Second};
use num_rational::BigRational;

/// Z_2 as pairs `(a, b)` with `b = None` standing for the top marker.
type Z2 = (i64, Option<i64>);

fn z2_cmp(x: Z2, y: Z2) -> Ordering {
    let rank = |s: Option<i64>| s.map_or((1, 0), |b| (0, b));
    x.0.cmp(&y.0).then(rank(x.1).cmp(&rank(y.1)))
}

fn z2_mult(x: Z2, y: Z2) -> Z2 {
    (x.0 + y.0, x.1.zip(y.1).map(|(p, q)| p + q))
}

fn z2_neg(x: Z2) -> Z2 {
    match x.1 {
        Some(b) => (-x.0, Some(-b)),
        None => (-x.0 - 1, None),
    }
}

fn z2_to_elem(x: Z2) -> Elem {
    match x.1 {
        Some(b) => Elem::with_val(Elem::int(x.0), Elem::int(b)),
        None => Elem::with_top(Elem::int(x.0)),
    }
}

fn z2_grid(r: i64) -> Vec<Z2> {
    let mut out = Vec::new();
    for a in -r..=r {
        for b in -r..=r {
            out.push((a, Some(b)));
        }
        out.push((a, None));
    }
    out
}

#[test]
fn z2_matches_tuple_model() {
    let z2 = make_zj(2);
    let grid = z2_grid(3);
    for &x in &grid {
        let ex = z2_to_elem(x);
        assert_eq!(z2.neg(&ex).unwrap(), z2_to_elem(z2_neg(x)), "neg {ex}");
        for &y in &grid {
            let ey = z2_to_elem(y);
            assert_eq!(z2.compare(&ex, &ey).unwrap(), z2_cmp(x, y), "cmp {ex} {ey}");
            assert_eq!(z2.mult(&ex, &ey).unwrap(), z2_to_elem(z2_mult(x, y)), "mult {ex} {ey}");
        }
    }
}

#[test]
fn z2_residuum_is_the_greatest_solution() {
    // For arguments within radius 2 the residuum lies within radius 6, so the
    // maximum over that grid is the true maximum.
    let z2 = make_zj(2);
    let candidates = z2_grid(6);
    let args = z2_grid(2);
    for &x in &args {
        for &y in &args {
            let best = candidates
                .iter()
                .copied()
                .filter(|&v| z2_cmp(z2_mult(x, v), y) != Ordering::Greater)
                .max_by(|&p, &q| z2_cmp(p, q))
                .unwrap();
            let got = z2.residuum(&z2_to_elem(x), &z2_to_elem(y)).unwrap();
            assert_eq!(got, z2_to_elem(best), "{x:?} -> {y:?}");
        }
    }
}

/// Q_2 as `(q, s)` where `s` is the marker or a rational. Only integer `q`
/// carry a value or the top marker.
#[derive(Clone, Debug, PartialEq)]
enum Mark {
    Bot,
    Val(BigRational),
    Top,
}

fn q(p: i64, d: i64) -> BigRational {
    BigRational::new(p.into(), d.into())
}

fn q2_mult(x: &(BigRational, Mark), y: &(BigRational, Mark)) -> (BigRational, Mark) {
    let s = match (&x.1, &y.1) {
        (Mark::Bot, _) | (_, Mark::Bot) => Mark::Bot,
        (Mark::Top, _) | (_, Mark::Top) => Mark::Top,
        (Mark::Val(a), Mark::Val(b)) => Mark::Val(a + b),
    };
    (&x.0 + &y.0, s)
}

fn q2_neg(x: &(BigRational, Mark)) -> (BigRational, Mark) {
    if !x.0.is_integer() {
        return (-&x.0, Mark::Bot);
    }
    let s = match &x.1 {
        Mark::Bot => Mark::Top,
        Mark::Top => Mark::Bot,
        Mark::Val(a) => Mark::Val(-a),
    };
    (-&x.0, s)
}

fn q2_cmp(x: &(BigRational, Mark), y: &(BigRational, Mark)) -> Ordering {
    let rank = |m: &Mark| match m {
        Mark::Bot => 0,
        Mark::Val(_) => 1,
        Mark::Top => 2,
    };
    x.0.cmp(&y.0).then_with(|| match (&x.1, &y.1) {
        (Mark::Val(a), Mark::Val(b)) => a.cmp(b),
        (a, b) => rank(a).cmp(&rank(b)),
    })
}

fn q2_to_elem(x: &(BigRational, Mark)) -> Elem {
    let leaf = |r: &BigRational| Elem::leaf(GroupElem::Rational(r.clone()));
    let s = match &x.1 {
        Mark::Bot => Second::Bot,
        Mark::Top => Second::Top,
        Mark::Val(a) => Second::val(leaf(a)),
    };
    Elem::pair(leaf(&x.0), s)
}

fn q2_grid() -> Vec<(BigRational, Mark)> {
    let values = [q(-3, 2), q(-1, 1), q(-1, 3), q(0, 1), q(1, 4), q(1, 1), q(5, 2), q(3, 1)];
    let mut out = Vec::new();
    for a in &values {
        out.push((a.clone(), Mark::Bot));
        if !a.is_integer() {
            continue;
        }
        out.push((a.clone(), Mark::Top));
        for b in &values {
            out.push((a.clone(), Mark::Val(b.clone())));
        }
    }
    out
}

#[test]
fn q2_matches_tuple_model() {
    let q2 = make_qj(2);
    let grid = q2_grid();
    for x in &grid {
        let ex = q2_to_elem(x);
        assert!(q2.contains(&ex), "{ex}");
        assert_eq!(q2.neg(&ex).unwrap(), q2_to_elem(&q2_neg(x)));
        for y in &grid {
            let ey = q2_to_elem(y);
            assert_eq!(q2.compare(&ex, &ey).unwrap(), q2_cmp(x, y));
            assert_eq!(q2.mult(&ex, &ey).unwrap(), q2_to_elem(&q2_mult(x, y)));
            let r = q2_neg(&q2_mult(x, &q2_neg(y)));
            assert_eq!(q2.residuum(&ex, &ey).unwrap(), q2_to_elem(&r));
        }
    }
}

#[test]
fn q2_tuple_model_is_residuated_on_grid() {
    // Guards the model itself: x o v <= y iff v <= x -> y.
    let grid = q2_grid();
    for x in &grid {
        for y in &grid {
            let r = q2_neg(&q2_mult(x, &q2_neg(y)));
            for v in &grid {
                let lhs = q2_cmp(&q2_mult(x, v), y) != Ordering::Greater;
                let rhs = q2_cmp(v, &r) != Ordering::Greater;
                assert_eq!(lhs, rhs, "{x:?} {v:?} {y:?}");
            }
        }
    }
}

fn exhaustive_adjointness(a: &Algebra, elems: &[Elem]) {
    for x in elems {
        for y in elems {
            let r = a.residuum(x, y).unwrap();
            for v in elems {
                let lhs = a.leq(&a.mult(x, v).unwrap(), y).unwrap();
                let rhs = a.leq(v, &r).unwrap();
                assert_eq!(lhs, rhs, "{a}: x={x} v={v} y={y}");
            }
        }
    }
}

#[test]
fn window_adjointness_is_exhaustive() {
    for (a, radius) in [(make_zj(2), 2), (make_qj(2), 1), (make_zj(3), 1)] {
        let elems = window(&a, radius, 2);
        assert!(elems.len() > 10, "{a}: {}", elems.len());
        exhaustive_adjointness(&a, &elems);
    }
    let bnd = make_zj(2).adjoin_bounds().unwrap();
    let mut elems = window(&bnd, 1, 2);
    elems.extend([Elem::TopBound, Elem::BotBound]);
    exhaustive_adjointness(&bnd, &elems);
}

#[test]
fn sampled_elements_belong_to_their_algebra() {
    let mut s = Sampler::new(7);
    for a in [make_zj(3), make_qj(3), make_zj(2).adjoin_bounds().unwrap()] {
        for _ in 0..500 {
            let e = s.elem(&a);
            assert!(a.contains(&e), "{e} not in {a}");
        }
    }
}
