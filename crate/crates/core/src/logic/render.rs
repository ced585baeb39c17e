use std::cmp::Ordering;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::{Algebra, Elem};
use crate::error::{Error, Result};

/// Incremental order embedding of chain elements into the rationals of
/// `(0, 1)`: each new element goes to the midpoint of the gap it falls into,
/// and the adjoined bounds go to 0 and 1.
#[derive(Clone, Debug)]
pub struct UnitRenderer {
    algebra: Algebra,
    /// Sorted ascending by the algebra's order.
    entries: Vec<(Elem, BigRational)>,
}

impl UnitRenderer {
    pub fn new(algebra: &Algebra) -> Self {
        UnitRenderer {
            algebra: algebra.clone(),
            entries: Vec::new(),
        }
    }

    pub fn insert(&mut self, e: &Elem) -> Result<BigRational> {
        self.algebra.check(e)?;
        let a = &self.algebra;
        let idx = match self.entries.binary_search_by(|(x, _)| a.cmp_raw(x, e)) {
            Ok(_) => return Err(Error::DuplicateElement(e.to_string())),
            Err(i) => i,
        };
        let two = BigRational::one() + BigRational::one();
        let value = match e {
            Elem::BotBound => BigRational::zero(),
            Elem::TopBound => BigRational::one(),
            _ => {
                let lo = idx
                    .checked_sub(1)
                    .map_or_else(BigRational::zero, |i| self.entries[i].1.clone());
                let hi = self
                    .entries
                    .get(idx)
                    .map_or_else(BigRational::one, |(_, v)| v.clone());
                (lo + hi) / two
            }
        };
        self.entries.insert(idx, (e.clone(), value.clone()));
        Ok(value)
    }

    pub fn get(&self, e: &Elem) -> Option<&BigRational> {
        self.entries
            .binary_search_by(|(x, _)| self.algebra.cmp_raw(x, e))
            .ok()
            .map(|i| &self.entries[i].1)
    }

    /// Rendered elements in ascending order.
    pub fn entries(&self) -> &[(Elem, BigRational)] {
        &self.entries
    }

    /// Whether the rendering is strictly increasing, every value lies in
    /// `[0, 1]`, and only the bounds reach 0 or 1.
    pub fn is_order_preserving(&self) -> bool {
        let zero = BigRational::zero();
        let one = BigRational::one();
        let values_ok = self.entries.iter().all(|(e, v)| match e {
            Elem::BotBound => *v == zero,
            Elem::TopBound => *v == one,
            _ => *v > zero && *v < one,
        });
        values_ok
            && self.entries.windows(2).all(|w| {
                self.algebra.cmp_raw(&w[0].0, &w[1].0) == Ordering::Less && w[0].1 < w[1].1
            })
    }
}

/// Renders `elems` in insertion order; see [`UnitRenderer`].
pub fn unit_interval_render(a: &Algebra, elems: &[Elem]) -> Result<Vec<(Elem, BigRational)>> {
    let mut r = UnitRenderer::new(a);
    elems
        .iter()
        .map(|e| r.insert(e).map(|v| (e.clone(), v)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(p.into(), d.into())
    }

    #[test]
    fn midpoints() {
        let a = Algebra::integers().adjoin_bounds().unwrap();
        let r = unit_interval_render(&a, &[Elem::int(0), Elem::int(10), Elem::int(5), Elem::int(-1), Elem::TopBound])
            .unwrap();
        let vals: Vec<_> = r.into_iter().map(|(_, v)| v).collect();
        assert_eq!(vals, vec![q(1, 2), q(3, 4), q(5, 8), q(1, 4), q(1, 1)]);
    }

    #[test]
    fn duplicates_are_rejected() {
        let a = Algebra::integers().adjoin_bounds().unwrap();
        let mut r = UnitRenderer::new(&a);
        r.insert(&Elem::int(2)).unwrap();
        assert!(matches!(r.insert(&Elem::int(2)), Err(Error::DuplicateElement(_))));
        r.insert(&Elem::BotBound).unwrap();
        assert_eq!(r.get(&Elem::BotBound), Some(&q(0, 1)));
        assert!(r.is_order_preserving());
    }
}
