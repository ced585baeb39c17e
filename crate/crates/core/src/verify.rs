//! Sampled property suites: residuation, involution and oddness, the range
//! of tau, tau of compound terms, maps that should be isomorphisms or
//! embeddings, and density witnesses.
//!
//! Every check draws from a [`Sampler`] seeded by the caller, so reports are
//! reproducible.

use std::collections::HashSet;
use std::fmt;

use rand::Rng;
use serde_json::{json, Value};

use crate::algebra::{Algebra, Elem, Node, PlpKind};
use crate::error::{Error, Result};
use crate::plp::is_densely_ordered;
use crate::sample::{window, Sampler};
use crate::towers::{
    above, between, build_paired, build_representation, build_standard_target, density_obstruction, fuse_type2_iso,
    zjk_iso, RepresentationSpec, TowerMode,
};
use crate::literal::z_tower_index;

/// At most this many failing witnesses are kept per property.
const MAX_WITNESSES: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyResult {
    pub name: String,
    pub checked: usize,
    pub failed: usize,
    pub witnesses: Vec<String>,
    pub note: Option<String>,
}

impl PropertyResult {
    fn new(name: impl Into<String>) -> Self {
        PropertyResult {
            name: name.into(),
            checked: 0,
            failed: 0,
            witnesses: Vec::new(),
            note: None,
        }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(witness());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "checked": self.checked,
            "failed": self.failed,
            "passed": self.passed(),
            "witnesses": self.witnesses,
            "note": self.note,
        })
    }
}

impl fmt::Display for PropertyResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}: {}/{} passed",
            if self.passed() { "PASS" } else { "FAIL" },
            self.name,
            self.checked - self.failed,
            self.checked
        )?;
        if let Some(note) = &self.note {
            write!(f, " ({note})")?;
        }
        for w in &self.witnesses {
            write!(f, "\n    witness: {w}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub properties: Vec<PropertyResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(PropertyResult::passed)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "passed": self.passed(),
            "properties": self.properties.iter().map(PropertyResult::to_json).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.properties {
            writeln!(f, "{p}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    All,
    Adjoint,
    Involution,
    Tau,
    Iso,
    Density,
}

impl std::str::FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "all" => Suite::All,
            "adjoint" => Suite::Adjoint,
            "involution" => Suite::Involution,
            "tau" => Suite::Tau,
            "iso" => Suite::Iso,
            "density" => Suite::Density,
            other => {
                return Err(Error::field(
                    "suite",
                    format!("unknown suite \"{other}\"; expected all, adjoint, involution, tau, iso or density"),
                ))
            }
        })
    }
}

/// `a o v <= b` iff `v <= a -> b`. Half of the triples take `b = a o v`,
/// the boundary case.
pub fn check_adjoint(a: &Algebra, samples: usize, seed: u64) -> PropertyResult {
    let mut s = Sampler::new(seed);
    let mut r = PropertyResult::new(format!("adjointness in {a}"));
    for _ in 0..samples {
        let x = s.elem(a);
        let v = s.elem(a);
        let b = if s.rng().gen_bool(0.5) { s.elem(a) } else { a.mult_raw(&x, &v) };
        let lhs = a.cmp_raw(&a.mult_raw(&x, &v), &b).is_le();
        let rhs = a.cmp_raw(&v, &a.residuum_raw(&x, &b)).is_le();
        r.record(lhs == rhs, || format!("a = {x}, v = {v}, b = {b}"));
    }
    r
}

/// `~~a = a` on samples, and `~t = t`, `f = t`.
pub fn check_involution(a: &Algebra, samples: usize, seed: u64) -> Vec<PropertyResult> {
    let mut s = Sampler::new(seed);
    let mut inv = PropertyResult::new(format!("involution in {a}"));
    for _ in 0..samples {
        let x = s.elem(a);
        let nn = a.neg_raw(&a.neg_raw(&x));
        inv.record(nn == x, || format!("~~{x} = {nn}"));
    }
    let mut odd = PropertyResult::new(format!("oddness in {a}"));
    let t = a.unit();
    let nt = a.neg_raw(&t);
    odd.record(nt == t, || format!("~t = {nt}"));
    odd.record(a.falsum() == t, || format!("f = {}", a.falsum()));
    vec![inv, odd]
}

fn is_positive_idempotent(a: &Algebra, e: &Elem) -> bool {
    a.mult_raw(e, e) == *e && a.cmp_raw(&a.unit(), e).is_le()
}

/// Tau-values of sampled elements are positive idempotents; reports how
/// many distinct ones were seen. The window cross-check compares the
/// tau-values of all window elements with the positive idempotents in the
/// window.
pub fn check_tau(a: &Algebra, samples: usize, seed: u64) -> Vec<PropertyResult> {
    let mut s = Sampler::new(seed);
    let mut range = PropertyResult::new(format!("tau values are positive idempotents in {a}"));
    let mut taus: Vec<Elem> = Vec::new();
    let mut seen = HashSet::new();
    for _ in 0..samples {
        let x = s.elem(a);
        let t = a.tau_raw(&x);
        range.record(is_positive_idempotent(a, &t), || format!("tau({x}) = {t}"));
        if seen.insert(t.clone()) {
            taus.push(t);
        }
    }
    taus.sort_by(|p, q| a.cmp_raw(p, q));
    range.note = Some(format!(
        "{} distinct positive idempotents: {}",
        taus.len(),
        taus.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(", ")
    ));

    let mut win = PropertyResult::new(format!("tau range equals positive idempotents on a window of {a}"));
    let w = window(a, 3, 2);
    let from_tau: HashSet<Elem> = w.iter().map(|e| a.tau_raw(e)).collect();
    let idem: HashSet<Elem> = w.iter().filter(|e| is_positive_idempotent(a, e)).cloned().collect();
    win.record(from_tau == idem, || {
        format!("tau values {} vs idempotents {}", from_tau.len(), idem.len())
    });
    win.note = Some(format!("{} window elements, {} positive idempotents", w.len(), idem.len()));
    vec![range, win]
}

/// Distinct tau-values over `samples` sampled elements, sorted.
pub fn sampled_tau_values(a: &Algebra, samples: usize, seed: u64) -> Vec<Elem> {
    let mut s = Sampler::new(seed);
    let set: HashSet<Elem> = (0..samples).map(|_| a.tau_raw(&s.elem(a))).collect();
    let mut v: Vec<Elem> = set.into_iter().collect();
    v.sort_by(|p, q| a.cmp_raw(p, q));
    v
}

#[derive(Clone, Debug)]
enum Term {
    Leaf(usize),
    Unit,
    Mult(Box<Term>, Box<Term>),
    Res(Box<Term>, Box<Term>),
    Neg(Box<Term>),
}

fn random_term(s: &mut Sampler, leaves: usize, depth: usize) -> Term {
    let r = s.rng().gen_range(0..10);
    if depth == 0 || r < 2 {
        return if s.rng().gen_range(0..8) == 0 {
            Term::Unit
        } else {
            Term::Leaf(s.rng().gen_range(0..leaves))
        };
    }
    match r % 3 {
        0 => Term::Mult(Box::new(random_term(s, leaves, depth - 1)), Box::new(random_term(s, leaves, depth - 1))),
        1 => Term::Res(Box::new(random_term(s, leaves, depth - 1)), Box::new(random_term(s, leaves, depth - 1))),
        _ => Term::Neg(Box::new(random_term(s, leaves, depth - 1))),
    }
}

/// Value of the term and the largest tau-value among its leaves.
fn eval_term(a: &Algebra, t: &Term, leaves: &[Elem]) -> (Elem, Elem) {
    match t {
        Term::Leaf(i) => (leaves[*i].clone(), a.tau_raw(&leaves[*i])),
        Term::Unit => (a.unit(), a.unit()),
        Term::Neg(x) => {
            let (v, m) = eval_term(a, x, leaves);
            (a.neg_raw(&v), m)
        }
        Term::Mult(x, y) | Term::Res(x, y) => {
            let (v, m) = eval_term(a, x, leaves);
            let (w, n) = eval_term(a, y, leaves);
            let value = match t {
                Term::Mult(..) => a.mult_raw(&v, &w),
                _ => a.residuum_raw(&v, &w),
            };
            (value, a.max_raw(&m, &n).clone())
        }
    }
}

/// The tau-value of a `{o, ->, ~}`-term is the largest tau-value of its
/// leaves.
pub fn check_tau_terms(a: &Algebra, samples: usize, seed: u64) -> PropertyResult {
    let mut s = Sampler::new(seed);
    let mut r = PropertyResult::new(format!("tau of terms is the largest leaf tau in {a}"));
    for _ in 0..samples {
        let leaves: Vec<Elem> = (0..3).map(|_| s.elem(a)).collect();
        let term = random_term(&mut s, leaves.len(), 4);
        let (value, max_tau) = eval_term(a, &term, &leaves);
        let tau = a.tau_raw(&value);
        r.record(tau == max_tau, || {
            format!(
                "term {term:?} over [{}] has value {value}, tau {tau}, largest leaf tau {max_tau}",
                leaves.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(", ")
            )
        });
    }
    r
}

/// A fallible element map between two algebras.
pub type ElemMap<'a> = &'a dyn Fn(&Elem) -> Result<Elem>;

/// Checks that `map` sends `src` into `dst` preserving order, `o`, `~` and
/// the unit on sampled pairs. With `inverse`, also checks that it is
/// inverted on sampled elements of `dst`.
pub fn check_map(
    name: &str,
    src: &Algebra,
    dst: &Algebra,
    map: ElemMap<'_>,
    inverse: Option<ElemMap<'_>>,
    samples: usize,
    seed: u64,
) -> PropertyResult {
    let mut s = Sampler::new(seed);
    let mut r = PropertyResult::new(name);
    let apply = |e: &Elem| map(e).ok().filter(|m| dst.contains(m));
    r.record(apply(&src.unit()) == Some(dst.unit()), || "unit is not preserved".into());
    for _ in 0..samples {
        let x = s.elem(src);
        let y = s.elem(src);
        let (Some(mx), Some(my)) = (apply(&x), apply(&y)) else {
            r.record(false, || format!("{x} or {y} is not mapped into {dst}"));
            continue;
        };
        let order = src.cmp_raw(&x, &y) == dst.cmp_raw(&mx, &my);
        let mult = apply(&src.mult_raw(&x, &y)) == Some(dst.mult_raw(&mx, &my));
        let neg = apply(&src.neg_raw(&x)) == Some(dst.neg_raw(&mx));
        r.record(order && mult && neg, || {
            format!("x = {x}, y = {y}: order {order}, product {mult}, negation {neg}")
        });
        if let Some(inv) = inverse {
            let z = s.elem(dst);
            let back = inv(&z).ok().filter(|b| src.contains(b));
            let round = back.as_ref().map(|b| apply(b) == Some(z.clone())).unwrap_or(false);
            r.record(round, || format!("{z} has no preimage"));
        }
    }
    r
}

/// Strict intermediates on sampled pairs, or a `NotDense` report for an
/// algebra with covers.
pub fn check_density(a: &Algebra, samples: usize, seed: u64) -> PropertyResult {
    let mut r = PropertyResult::new(format!("density witnesses in {a}"));
    if !is_densely_ordered(a) {
        let x = a.unit();
        let ok = match above(a, &x) {
            Some(y) => matches!(between(a, &x, &y), Err(Error::NotDense(_))),
            None => true,
        };
        r.record(ok, || "non-dense algebra accepted by between".into());
        r.note = density_obstruction(a).map(|m| format!("not dense: {m}"));
        return r;
    }
    let mut s = Sampler::new(seed);
    for _ in 0..samples {
        let x = s.elem(a);
        let y = s.elem(a);
        let (x, y) = match a.cmp_raw(&x, &y) {
            std::cmp::Ordering::Less => (x, y),
            std::cmp::Ordering::Greater => (y, x),
            std::cmp::Ordering::Equal => continue,
        };
        match between(a, &x, &y) {
            Ok(m) => {
                let ok = a.contains(&m) && a.cmp_raw(&x, &m).is_lt() && a.cmp_raw(&m, &y).is_lt();
                r.record(ok, || format!("between({x}, {y}) = {m}"));
            }
            Err(e) => r.record(false, || format!("between({x}, {y}): {e}")),
        }
    }
    r
}

/// Canonical isomorphism checks that apply to `a`: splittings
/// `PLPII(Z_j, Z_k) = Z_{j+k}` when `a` is a `Z` tower stage, and the
/// re-association of nested type II products.
pub fn check_isos_for(a: &Algebra, samples: usize, seed: u64) -> Vec<PropertyResult> {
    let mut out = Vec::new();
    if let Some(n) = z_tower_index(a).filter(|&n| n >= 2) {
        for j in 1..n {
            out.push(check_zjk(j, n - j, samples, seed));
        }
    }
    if let Node::PlpIV { x, y: c, .. } = a.node() {
        if let (Some(PlpKind::II), Node::PlpIV { x: pa, y: pb, .. }) = (a.plp_kind(), x.node()) {
            if x.plp_kind() == Some(PlpKind::II) {
                if let Ok(f) = fuse_type2_iso(pa, pb, c) {
                    let to_r = |e: &Elem| f.to_right(e);
                    let to_l = |e: &Elem| f.to_left(e);
                    out.push(check_map(
                        &format!("re-association {} ~ {}", f.left, f.right),
                        &f.left,
                        &f.right,
                        &to_r,
                        Some(&to_l),
                        samples,
                        seed,
                    ));
                }
            }
        }
    }
    out
}

/// `PLPII(Z_j, Z_k) -> Z_{j+k}` on samples.
pub fn check_zjk(j: usize, k: usize, samples: usize, seed: u64) -> PropertyResult {
    use crate::towers::{make_zj, zjk_iso_inverse};
    let src = crate::plp::plp_ii(&make_zj(j), &make_zj(k)).expect("Z_j has a discrete group part");
    let dst = make_zj(j + k);
    let fwd = move |e: &Elem| zjk_iso(j, k, e);
    let back = move |e: &Elem| zjk_iso_inverse(j, k, e);
    check_map(
        &format!("PLPII(Z_{j}, Z_{k}) ~ Z_{}", j + k),
        &src,
        &dst,
        &fwd,
        Some(&back),
        samples,
        seed,
    )
}

fn algebra_suites(a: &Algebra, suite: Suite, samples: usize, seed: u64, out: &mut Vec<PropertyResult>) {
    let all = suite == Suite::All;
    if all || suite == Suite::Adjoint {
        out.push(check_adjoint(a, samples, seed));
    }
    if all || suite == Suite::Involution {
        out.extend(check_involution(a, samples, seed));
    }
    if all || suite == Suite::Tau {
        out.extend(check_tau(a, samples, seed));
        out.push(check_tau_terms(a, samples.min(1000), seed));
    }
    if all || suite == Suite::Density {
        out.push(check_density(a, samples.min(1000), seed));
    }
    if all || suite == Suite::Iso {
        out.extend(check_isos_for(a, samples.min(1000), seed));
    }
}

/// Runs `suite` on a single algebra.
pub fn verify_algebra(a: &Algebra, suite: Suite, samples: usize, seed: u64) -> Report {
    let mut properties = Vec::new();
    algebra_suites(a, suite, samples, seed, &mut properties);
    Report { properties }
}

/// Runs `suite` on the top stage of the I-II tower of `spec`; the `iso`
/// suite also checks the stage-wise inclusion of the III-IV tower and, when
/// it can be built, the embedding into the standard target.
pub fn verify_spec(spec: &RepresentationSpec, suite: Suite, samples: usize, seed: u64) -> Result<Report> {
    let tower = build_representation(spec, TowerMode::OneTwo)?;
    let mut properties = Vec::new();
    algebra_suites(tower.top(), suite, samples, seed, &mut properties);
    if suite == Suite::All || suite == Suite::Iso {
        let samples = samples.min(1000);
        let (lower, upper) = build_paired(spec)?;
        for i in 1..=spec.n() {
            let id = |e: &Elem| Ok(e.clone());
            properties.push(check_map(
                &format!("stage {i} inclusion {} <= {}", lower.stage(i), upper.stage(i)),
                lower.stage(i),
                upper.stage(i),
                &id,
                None,
                samples,
                seed,
            ));
        }
        if let Ok(target) = build_standard_target(spec) {
            for i in 1..=spec.n() {
                let embed = |e: &Elem| target.embed(i, e);
                properties.push(check_map(
                    &format!("stage {i} embedding {} -> {}", target.source.stage(i), target.target.stage(i)),
                    target.source.stage(i),
                    target.target.stage(i),
                    &embed,
                    None,
                    samples,
                    seed,
                ));
            }
        }
    }
    Ok(Report { properties })
}
