use std::fmt;
use std::str::FromStr;

use crate::algebra::{Algebra, Elem, Node, Second};
use crate::error::{Error, Result};
use crate::groups::{int_coord, CoordConstraint, CoordKind, GroupChain, GroupElem, SubgroupDescriptor};
use crate::plp;

use super::spec::{Iota, RepresentationSpec};
use super::{make_qj, make_zj};

/// Which pair of constructions a representation tower uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TowerMode {
    /// Types III and IV with the spec's `Z` and `V` subgroups.
    ThreeFour,
    /// Types I and II, using only the `Z` subgroups.
    OneTwo,
}

impl fmt::Display for TowerMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TowerMode::ThreeFour => "III-IV",
            TowerMode::OneTwo => "I-II",
        })
    }
}

impl FromStr for TowerMode {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "III-IV" => Ok(TowerMode::ThreeFour),
            "I-II" => Ok(TowerMode::OneTwo),
            other => Err(format!("expected \"III-IV\" or \"I-II\", got \"{other}\"")),
        }
    }
}

/// The stages `X_1, ..., X_n` of a tower, each a well-defined algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Countertower {
    pub stages: Vec<Algebra>,
}

impl Countertower {
    /// Stage `i`, 1-based.
    pub fn stage(&self, i: usize) -> &Algebra {
        &self.stages[i - 1]
    }

    pub fn top(&self) -> &Algebra {
        self.stages.last().expect("towers have at least one stage")
    }

    pub fn len(&self) -> usize {
        self.stages.len()
    }

    pub fn is_empty(&self) -> bool {
        self.stages.is_empty()
    }
}

fn at_stage(i: usize, e: Error) -> Error {
    match e {
        Error::PreconditionViolation(m) => Error::PreconditionViolation(format!("stage {i}: {m}")),
        other => other,
    }
}

/// Builds the tower; `z_override` replaces the spec's `Z` descriptors.
/// Returns the tower and the `Z` descriptor in effect at each step.
fn build(
    spec: &RepresentationSpec,
    mode: TowerMode,
    z_override: Option<&[SubgroupDescriptor]>,
) -> Result<(Countertower, Vec<SubgroupDescriptor>)> {
    spec.validate()?;
    let mut stages = vec![Algebra::base(spec.group(1))];
    let mut zs = Vec::new();
    for i in 2..=spec.n() {
        let prev = &stages[i - 2];
        let g = Algebra::base(spec.group(i));
        let full = prev.group_part_descriptor();
        let z = match z_override {
            Some(zs) => zs[i - 2].clone(),
            None => spec.zdescs[i - 2].clone().unwrap_or_else(|| full.clone()),
        };
        let next = match (mode, spec.iota_at(i)) {
            (TowerMode::ThreeFour, Iota::III) => {
                let v = spec.vdescs[i - 2].clone().unwrap_or_else(|| z.clone());
                plp::plp_iii(prev, &z, &v, &g)
            }
            (TowerMode::ThreeFour, Iota::IV) => {
                let v = spec.vdescs[i - 2].clone().unwrap_or_else(|| full.clone());
                plp::plp_iv(prev, &v, &g)
            }
            (TowerMode::OneTwo, Iota::III) => plp::plp_i(prev, &z, &g),
            (TowerMode::OneTwo, Iota::IV) => plp::plp_ii(prev, &g),
        }
        .map_err(|e| at_stage(i, e))?;
        zs.push(match (spec.iota_at(i), next.node()) {
            (Iota::III, Node::PlpIII { z, .. }) => z.clone(),
            _ => full,
        });
        stages.push(next);
    }
    Ok((Countertower { stages }, zs))
}

/// Builds `X_1 = G_1` and `X_i` from `X_{i-1}` and `G_i` by the construction
/// selected by `iota_i` and `mode`. Precondition violations carry the
/// stage index.
pub fn build_representation(spec: &RepresentationSpec, mode: TowerMode) -> Result<Countertower> {
    build(spec, mode, None).map(|(t, _)| t)
}

/// Builds the type III-IV tower and the type I-II tower over the same
/// groups and `Z` subgroups; stage `i` of the first is a subalgebra of
/// stage `i` of the second under the identity map. For type IV steps the
/// `Z` subgroup is the full group part of the previous III-IV stage.
pub fn build_paired(spec: &RepresentationSpec) -> Result<(Countertower, Countertower)> {
    let (lower, zs) = build(spec, TowerMode::ThreeFour, None)?;
    let (upper, _) = build(spec, TowerMode::OneTwo, Some(&zs))?;
    Ok((lower, upper))
}

/// The type I-II tower together with the dense target tower it embeds
/// into, stage by stage.
#[derive(Clone, Debug)]
pub struct StandardTarget {
    pub source: Countertower,
    pub target: Countertower,
    /// Whether stage `i`'s group is sent into an integer tower `Z_k`
    /// (when stage `i + 1` is type IV) rather than `Q_k`.
    integer_component: Vec<bool>,
}

/// Builds the target `X_1*, ..., X_n*`:
///
/// * `X_1* = T_1`,
/// * `X_i* = PLPI(X_{i-1}*, Z_{i-1}, T_i)` if `iota_i = III`,
/// * `X_i* = PLPII(X_{i-1}*, T_i)` if `iota_i = IV`,
///
/// where `T_i` is `Z_{k_i}` if `iota_{i+1} = IV` and `Q_{k_i}` otherwise
/// (index 1 for `k_i = 0`), and `Z_{i-1}` is carried over along the
/// embedding of the group parts. Consecutive type IV steps are kept as
/// nested type II products; [`super::fuse_type2_iso`] relates them to the
/// fused form.
pub fn build_standard_target(spec: &RepresentationSpec) -> Result<StandardTarget> {
    if let Some(i) = spec.groups.iter().position(|g| matches!(g, Some(GroupChain::QChain))) {
        return Err(Error::PreconditionViolation(format!(
            "stage {}: the standard target needs groups of the form Z^k",
            i + 1
        )));
    }
    let source = build_representation(spec, TowerMode::OneTwo)?;
    let n = spec.n();
    let integer_component: Vec<bool> = (1..=n).map(|i| i < n && spec.iota_at(i + 1) == Iota::IV).collect();
    let component = |i: usize| {
        let k = spec.ranks[i - 1].max(1);
        if integer_component[i - 1] {
            make_zj(k)
        } else {
            make_qj(k)
        }
    };
    let mut stages = vec![component(1)];
    for i in 2..=n {
        let prev = &stages[i - 2];
        let next = match source.stage(i).node() {
            Node::PlpIII { z, .. } => {
                let lifted = lift_descriptor(spec, z, &prev.coord_kinds());
                plp::plp_i(prev, &lifted, &component(i))
            }
            _ => plp::plp_ii(prev, &component(i)),
        }
        .map_err(|e| at_stage(i, e))?;
        stages.push(next);
    }
    Ok(StandardTarget {
        source,
        target: Countertower { stages },
        integer_component,
    })
}

/// Carries a descriptor on the coordinates of `G_1 x ... x G_m` over to the
/// coordinates of `T_1 x ... x T_m`: trivial groups gain a zero coordinate
/// and integer coordinates become multiples of 1 inside `Q`.
fn lift_descriptor(spec: &RepresentationSpec, d: &SubgroupDescriptor, target_kinds: &[CoordKind]) -> SubgroupDescriptor {
    let mut entries = Vec::with_capacity(target_kinds.len());
    let mut src = d.0.iter();
    for &k in &spec.ranks {
        if entries.len() >= target_kinds.len() {
            break;
        }
        if k == 0 {
            entries.push(CoordConstraint::ZeroOnly);
        } else {
            entries.extend(src.by_ref().take(k).cloned());
        }
    }
    let entries = entries
        .into_iter()
        .zip(target_kinds)
        .map(|(c, kind)| match (c, kind) {
            (CoordConstraint::All, CoordKind::Rat) => CoordConstraint::multiples_of(1),
            (c, _) => c,
        })
        .collect();
    SubgroupDescriptor(entries)
}

impl StandardTarget {
    /// The embedding of source stage `i` into target stage `i`: group
    /// vectors `(a_1, ..., a_k)` go to nested pairs `(a_1, (a_2, ...))`, and
    /// markers are kept.
    pub fn embed(&self, i: usize, e: &Elem) -> Result<Elem> {
        if i == 0 || i > self.source.len() {
            return Err(Error::Shape(format!("no stage {i} in a tower of {} stages", self.source.len())));
        }
        self.source.stage(i).check(e)?;
        Ok(self.embed_raw(i, e))
    }

    fn embed_raw(&self, i: usize, e: &Elem) -> Elem {
        if i == 1 {
            return self.embed_group(1, e);
        }
        match e {
            Elem::Pair(f, s) => {
                let s = match s {
                    Second::Val(b) => Second::val(self.embed_group(i, b)),
                    other => other.clone(),
                };
                Elem::pair(self.embed_raw(i - 1, f), s)
            }
            _ => unreachable!("product stages have pair elements"),
        }
    }

    fn embed_group(&self, i: usize, e: &Elem) -> Elem {
        let Elem::Leaf(GroupElem::IntVector(v)) = e else {
            unreachable!("source groups are Z^k or trivial")
        };
        let coords: Vec<i64> = if v.is_empty() { vec![0] } else { v.clone() };
        let leaf = |n: i64| {
            if self.integer_component[i - 1] {
                Elem::int(n)
            } else {
                Elem::Leaf(GroupElem::Rational(int_coord(n)))
            }
        };
        let mut it = coords.iter().rev();
        let mut acc = leaf(*it.next().expect("at least one coordinate"));
        for &n in it {
            acc = Elem::with_val(leaf(n), acc);
        }
        acc
    }
}
