use std::collections::HashSet;

use crate::algebra::{Algebra, Elem};
use crate::error::{Error, Result};

/// Default cap on the number of distinct elements a closure may visit.
pub const DEFAULT_CLOSURE_BUDGET: usize = 200_000;

/// The distinct tau-values of all elements reachable from `generators` by
/// at most `depth` rounds of `o`, `->`, `~`, meet and join, sorted
/// ascending.
///
/// Each round combines every element found so far with every element new in
/// the previous round, so no pair is evaluated twice. Exceeding `budget`
/// distinct elements stops the closure with [`Error::BudgetExceeded`],
/// reporting how far it got.
pub fn closure_tau_values(a: &Algebra, generators: &[Elem], depth: usize, budget: usize) -> Result<Vec<Elem>> {
    for g in generators {
        a.check(g)?;
    }
    let mut seen: HashSet<Elem> = HashSet::new();
    let mut all: Vec<Elem> = Vec::new();
    let mut frontier: Vec<Elem> = Vec::new();
    for g in generators {
        if seen.insert(g.clone()) {
            all.push(g.clone());
            frontier.push(g.clone());
        }
    }
    let tau_count = |all: &[Elem]| all.iter().map(|e| a.tau_raw(e)).collect::<HashSet<_>>().len();

    for level in 1..=depth {
        if frontier.is_empty() {
            break;
        }
        let mut next = Vec::new();
        let push = |e: Elem, seen: &mut HashSet<Elem>, next: &mut Vec<Elem>| {
            if seen.contains(&e) {
                return true;
            }
            if seen.len() >= budget {
                return false;
            }
            seen.insert(e.clone());
            next.push(e);
            true
        };
        let mut within = true;
        'outer: for p in &frontier {
            if !push(a.neg_raw(p), &mut seen, &mut next) {
                within = false;
                break;
            }
            for q in &all {
                for e in [
                    a.mult_raw(p, q),
                    a.residuum_raw(p, q),
                    a.residuum_raw(q, p),
                    a.min_raw(p, q).clone(),
                    a.max_raw(p, q).clone(),
                ] {
                    if !push(e, &mut seen, &mut next) {
                        within = false;
                        break 'outer;
                    }
                }
            }
        }
        if !within {
            all.extend(next);
            return Err(Error::BudgetExceeded {
                budget,
                depth: level,
                explored: all.len(),
                distinct_tau: tau_count(&all),
            });
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }

    let mut taus: Vec<Elem> = all
        .iter()
        .map(|e| a.tau_raw(e))
        .collect::<HashSet<_>>()
        .into_iter()
        .collect();
    taus.sort_by(|p, q| a.cmp_raw(p, q));
    Ok(taus)
}

/// Number of distinct tau-values in the depth-bounded closure, with
/// [`DEFAULT_CLOSURE_BUDGET`].
pub fn closure_tau_count(a: &Algebra, generators: &[Elem], depth: usize) -> Result<usize> {
    closure_tau_values(a, generators, depth, DEFAULT_CLOSURE_BUDGET).map(|t| t.len())
}
