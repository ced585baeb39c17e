use std::cmp::Ordering;

use num_rational::BigRational;
use serde_json::{json, Map, Value};

use crate::algebra::{Algebra, Elem};
use crate::error::{Error, Result};
use crate::literal::{parse_algebra, parse_elem_in};
use crate::sample::{window, Sampler};

use super::eval::{eval_raw, Assignment};
use super::formula::{parse_formula, Formula};
use super::render::UnitRenderer;

/// Coordinates of sweep elements lie in `[-WINDOW_RADIUS, WINDOW_RADIUS]`.
const WINDOW_RADIUS: i64 = 3;
const WINDOW_DEPTH: usize = 2;

/// An assignment under which every theory member is true (at least `t`)
/// and the goal formula is not.
#[derive(Clone, Debug, PartialEq)]
pub struct Countermodel {
    pub algebra: Algebra,
    pub theory: Vec<Formula>,
    pub formula: Formula,
    pub assignment: Assignment,
    pub value: Elem,
    pub theory_values: Vec<Elem>,
    /// Unit-interval values of every element met during evaluation, in
    /// ascending order.
    pub rendering: Option<Vec<(Elem, BigRational)>>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum SearchOutcome {
    Found(Box<Countermodel>),
    /// No countermodel among `tried` assignments. This does not mean the
    /// consequence holds.
    NotFound { tried: usize },
}

/// Searches for an assignment making all of `theory` true and `phi` false.
///
/// The search first sweeps all tuples of window elements (small
/// coordinates, shallow nesting, plus any adjoined bounds) in ascending
/// order, then draws seeded random elements, trying `budget` assignments
/// in total. The result depends only on the inputs and `seed`.
pub fn check_consequence(
    a: &Algebra,
    theory: &[Formula],
    phi: &Formula,
    budget: usize,
    seed: u64,
) -> Result<SearchOutcome> {
    if budget == 0 {
        return Err(Error::PreconditionViolation("the search budget must be positive".into()));
    }
    let mut vars = phi.variables();
    for psi in theory {
        vars.extend(psi.variables());
    }
    let vars: Vec<String> = vars.into_iter().collect();
    let unit = a.unit();

    let try_assignment = |e: Assignment| -> Result<Option<Countermodel>> {
        let mut theory_values = Vec::with_capacity(theory.len());
        for psi in theory {
            let v = eval_raw(a, psi, &e, &mut |_| {})?;
            if a.cmp_raw(&v, &unit) == Ordering::Less {
                return Ok(None);
            }
            theory_values.push(v);
        }
        let value = eval_raw(a, phi, &e, &mut |_| {})?;
        if a.cmp_raw(&value, &unit) != Ordering::Less {
            return Ok(None);
        }
        Ok(Some(Countermodel {
            algebra: a.clone(),
            theory: theory.to_vec(),
            formula: phi.clone(),
            assignment: e,
            value,
            theory_values,
            rendering: None,
        }))
    };
    let found = |c: Countermodel| Ok(SearchOutcome::Found(Box::new(c)));

    let win = window(a, WINDOW_RADIUS, WINDOW_DEPTH);
    let tuples = (0..vars.len()).try_fold(1usize, |acc, _| acc.checked_mul(win.len()));
    let sweep = match tuples {
        Some(t) if t <= budget / 2 || vars.is_empty() => t.min(budget),
        _ => budget / 2,
    };
    for n in 0..sweep {
        let mut rest = n;
        let e: Assignment = vars
            .iter()
            .map(|v| {
                let d = rest % win.len();
                rest /= win.len();
                (v.clone(), win[d].clone())
            })
            .collect();
        if let Some(c) = try_assignment(e)? {
            return found(c);
        }
    }
    if vars.is_empty() {
        return Ok(SearchOutcome::NotFound { tried: sweep });
    }
    let mut sampler = Sampler::new(seed);
    for _ in sweep..budget {
        let e: Assignment = vars.iter().map(|v| (v.clone(), sampler.elem(a))).collect();
        if let Some(c) = try_assignment(e)? {
            return found(c);
        }
    }
    Ok(SearchOutcome::NotFound { tried: budget })
}

impl Countermodel {
    /// Renders the assignment, `t`, and the values of every subformula of
    /// the theory and goal into `(0, 1)`, inserting them in evaluation
    /// order.
    pub fn render_unit(&mut self) -> Result<()> {
        let mut seen: Vec<Elem> = self.assignment.values().cloned().collect();
        seen.push(self.algebra.unit());
        for psi in self.theory.iter().chain(std::iter::once(&self.formula)) {
            eval_raw(&self.algebra, psi, &self.assignment, &mut |v| seen.push(v.clone()))?;
        }
        let mut r = UnitRenderer::new(&self.algebra);
        for e in &seen {
            if r.get(e).is_none() {
                r.insert(e)?;
            }
        }
        self.rendering = Some(r.entries().to_vec());
        Ok(())
    }

    /// Re-checks every claim the record makes.
    pub fn validate(&self) -> Result<()> {
        let a = &self.algebra;
        let fail = |msg: String| Err(Error::PreconditionViolation(msg));
        for (name, v) in &self.assignment {
            if !a.contains(v) {
                return fail(format!("assigned value {v} of `{name}` is not in {a}"));
            }
        }
        let unit = a.unit();
        if self.theory_values.len() != self.theory.len() {
            return fail("one value per theory formula is required".into());
        }
        for (psi, recorded) in self.theory.iter().zip(&self.theory_values) {
            let v = eval_raw(a, psi, &self.assignment, &mut |_| {})?;
            if v != *recorded {
                return fail(format!("`{psi}` evaluates to {v}, recorded {recorded}"));
            }
            if a.cmp_raw(&v, &unit) == Ordering::Less {
                return fail(format!("theory formula `{psi}` is not true: {v}"));
            }
        }
        let v = eval_raw(a, &self.formula, &self.assignment, &mut |_| {})?;
        if v != self.value {
            return fail(format!("`{}` evaluates to {v}, recorded {}", self.formula, self.value));
        }
        if a.cmp_raw(&v, &unit) != Ordering::Less {
            return fail(format!("`{}` is true: {v}", self.formula));
        }
        if let Some(rendering) = &self.rendering {
            let mut r = UnitRenderer::new(a);
            for (e, _) in rendering {
                r.insert(e)?;
            }
            let sorted_and_strict = rendering.windows(2).all(|w| {
                a.cmp_raw(&w[0].0, &w[1].0) == Ordering::Less && w[0].1 < w[1].1
            });
            let in_range = rendering.iter().all(|(e, q)| match e {
                Elem::BotBound => *q == BigRational::from_integer(0.into()),
                Elem::TopBound => *q == BigRational::from_integer(1.into()),
                _ => *q > BigRational::from_integer(0.into()) && *q < BigRational::from_integer(1.into()),
            });
            if !sorted_and_strict || !in_range {
                return fail("rendering is not a strictly increasing map into [0, 1]".into());
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let assignment: Map<String, Value> = self
            .assignment
            .iter()
            .map(|(k, v)| (k.clone(), Value::String(v.to_string())))
            .collect();
        let mut out = json!({
            "algebra": self.algebra.to_string(),
            "formula": self.formula.to_string(),
            "theory": self.theory.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
            "assignment": assignment,
            "value": self.value.to_string(),
            "theory_values": self.theory_values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        });
        if let Some(r) = &self.rendering {
            out["rendering"] = r
                .iter()
                .map(|(e, q)| json!({"elem": e.to_string(), "value": q.to_string()}))
                .collect();
        }
        out
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let s = |field: &str| -> Result<&str> {
            v.get(field)
                .and_then(Value::as_str)
                .ok_or_else(|| Error::field(field, "expected a string"))
        };
        let strings = |field: &str| -> Result<Vec<&str>> {
            v.get(field)
                .and_then(Value::as_array)
                .ok_or_else(|| Error::field(field, "expected an array"))?
                .iter()
                .map(|x| x.as_str().ok_or_else(|| Error::field(field, "expected strings")))
                .collect()
        };
        let algebra = parse_algebra(s("algebra")?)?;
        let formula = parse_formula(s("formula")?)?;
        let theory = strings("theory")?
            .into_iter()
            .map(parse_formula)
            .collect::<Result<Vec<_>>>()?;
        let assignment = v
            .get("assignment")
            .and_then(Value::as_object)
            .ok_or_else(|| Error::field("assignment", "expected an object"))?
            .iter()
            .map(|(k, x)| {
                let text = x.as_str().ok_or_else(|| Error::field(format!("assignment.{k}"), "expected a string"))?;
                Ok((k.clone(), parse_elem_in(&algebra, text)?))
            })
            .collect::<Result<Assignment>>()?;
        let value = parse_elem_in(&algebra, s("value")?)?;
        let theory_values = strings("theory_values")?
            .into_iter()
            .map(|t| parse_elem_in(&algebra, t))
            .collect::<Result<Vec<_>>>()?;
        let rendering = match v.get("rendering") {
            None | Some(Value::Null) => None,
            Some(Value::Array(items)) => Some(
                items
                    .iter()
                    .map(|item| {
                        let e = item.get("elem").and_then(Value::as_str);
                        let q = item.get("value").and_then(Value::as_str);
                        match (e, q) {
                            (Some(e), Some(q)) => Ok((
                                parse_elem_in(&algebra, e)?,
                                q.parse::<BigRational>()
                                    .map_err(|_| Error::field("rendering", format!("bad rational `{q}`")))?,
                            )),
                            _ => Err(Error::field("rendering", "expected {\"elem\", \"value\"} strings")),
                        }
                    })
                    .collect::<Result<Vec<_>>>()?,
            ),
            Some(_) => return Err(Error::field("rendering", "expected an array")),
        };
        Ok(Countermodel {
            algebra,
            theory,
            formula,
            assignment,
            value,
            theory_values,
            rendering,
        })
    }
}
