use std::collections::BTreeMap;

use crate::algebra::{Algebra, Elem};
use crate::error::{Error, Result};

use super::formula::Formula;

/// Values of the variables.
pub type Assignment = BTreeMap<String, Elem>;

/// Value of `phi` in `a` under `e`. `t` and `f` both denote the unit;
/// `top` and `bot` denote the adjoined bounds and need a bounded algebra.
pub fn eval(a: &Algebra, phi: &Formula, e: &Assignment) -> Result<Elem> {
    for v in e.values() {
        a.check(v)?;
    }
    eval_raw(a, phi, e, &mut |_| {})
}

/// Values of `phi` and of every subformula, in evaluation order (children
/// before parents, the value of `phi` last).
pub fn eval_all(a: &Algebra, phi: &Formula, e: &Assignment) -> Result<Vec<Elem>> {
    for v in e.values() {
        a.check(v)?;
    }
    let mut out = Vec::new();
    eval_raw(a, phi, e, &mut |v| out.push(v.clone()))?;
    Ok(out)
}

pub(crate) fn eval_raw(a: &Algebra, phi: &Formula, e: &Assignment, visit: &mut dyn FnMut(&Elem)) -> Result<Elem> {
    let value = match phi {
        Formula::Var(name) => e
            .get(name)
            .cloned()
            .ok_or_else(|| Error::UnassignedVariable(name.clone()))?,
        Formula::ConstT | Formula::ConstF => a.unit(),
        Formula::ConstTop | Formula::ConstBot => {
            if !a.is_bounded() {
                return Err(Error::PreconditionViolation(format!(
                    "the constant `{phi}` needs an algebra with adjoined bounds, got {a}"
                )));
            }
            if *phi == Formula::ConstTop {
                Elem::TopBound
            } else {
                Elem::BotBound
            }
        }
        Formula::Neg(f) => a.neg_raw(&eval_raw(a, f, e, visit)?),
        Formula::And(l, r) | Formula::Or(l, r) | Formula::Fuse(l, r) | Formula::Imp(l, r) => {
            let x = eval_raw(a, l, e, visit)?;
            let y = eval_raw(a, r, e, visit)?;
            match phi {
                Formula::And(..) => a.min_raw(&x, &y).clone(),
                Formula::Or(..) => a.max_raw(&x, &y).clone(),
                Formula::Fuse(..) => a.mult_raw(&x, &y),
                _ => a.residuum_raw(&x, &y),
            }
        }
    };
    visit(&value);
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::parse_formula;

    fn bz() -> Algebra {
        Algebra::integers().adjoin_bounds().unwrap()
    }

    #[test]
    fn contraction_fails_at_one() {
        let e = Assignment::from([("p".to_string(), Elem::int(1))]);
        let phi = parse_formula("(p*p)->p").unwrap();
        assert_eq!(eval(&bz(), &phi, &e).unwrap(), Elem::int(-1));
    }

    #[test]
    fn constants() {
        let a = bz();
        let e = Assignment::new();
        assert_eq!(eval(&a, &parse_formula("t <-> f").unwrap(), &e).unwrap(), a.unit());
        assert_eq!(eval(&a, &parse_formula("top * bot").unwrap(), &e).unwrap(), Elem::BotBound);
        assert_eq!(eval(&a, &parse_formula("~top").unwrap(), &e).unwrap(), Elem::BotBound);
        assert!(matches!(
            eval(&Algebra::integers(), &parse_formula("top").unwrap(), &e),
            Err(Error::PreconditionViolation(_))
        ));
    }

    #[test]
    fn errors() {
        let a = bz();
        assert_eq!(
            eval(&a, &parse_formula("p & q").unwrap(), &Assignment::from([("p".into(), Elem::int(0))])),
            Err(Error::UnassignedVariable("q".into()))
        );
        let bad = Assignment::from([("p".to_string(), Elem::rational(1, 2))]);
        assert!(matches!(eval(&a, &parse_formula("p").unwrap(), &bad), Err(Error::NotMember { .. })));
    }

    #[test]
    fn subformula_values() {
        let e = Assignment::from([("p".to_string(), Elem::int(1))]);
        let vals = eval_all(&bz(), &parse_formula("(p*p)->p").unwrap(), &e).unwrap();
        assert_eq!(vals, vec![Elem::int(1), Elem::int(1), Elem::int(2), Elem::int(1), Elem::int(-1)]);
    }
}
