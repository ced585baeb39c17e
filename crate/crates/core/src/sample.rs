//! Seeded element samplers and small-window enumeration.
//!
//! Random elements are drawn from a mixture that hits every clause of the
//! carrier: group-part elements, elements whose first coordinate lies in the
//! `Z` or `V` subgroup of a product, and arbitrary first coordinates with
//! whichever markers they admit.

use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, Elem, Node, Second};
use crate::groups::{int_coord, Coord, CoordConstraint, CoordKind, GroupChain, GroupElem, SubgroupDescriptor};

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    fn small_int(&mut self) -> i64 {
        if self.rng.gen_bool(0.85) {
            self.rng.gen_range(-5..=5)
        } else {
            self.rng.gen_range(-1000..=1000)
        }
    }

    /// A random coordinate of the given kind: mostly small, occasionally large.
    pub fn coord(&mut self, kind: CoordKind) -> Coord {
        match kind {
            CoordKind::Int => int_coord(self.small_int()),
            CoordKind::Rat => {
                let den = self.rng.gen_range(1..=6i64);
                BigRational::new(self.small_int().into(), den.into())
            }
        }
    }

    fn coord_in(&mut self, c: &CoordConstraint, kind: CoordKind) -> Coord {
        match c {
            CoordConstraint::All => self.coord(kind),
            CoordConstraint::ZeroOnly => Coord::zero(),
            CoordConstraint::MultiplesOf(d) => d * int_coord(self.small_int()),
        }
    }

    /// A random group-part element of `a` lying in the subgroup `d`.
    pub fn in_descriptor(&mut self, a: &Algebra, d: &SubgroupDescriptor) -> Elem {
        let kinds = a.coord_kinds();
        let coords: Vec<Coord> = d.0.iter().zip(kinds).map(|(c, k)| self.coord_in(c, k)).collect();
        a.elem_from_coords(&coords)
            .expect("sampled coordinates fit the group part")
    }

    pub fn group_part_elem(&mut self, a: &Algebra) -> Elem {
        self.in_descriptor(a, &a.group_part_descriptor())
    }

    /// A random carrier element of `a`.
    pub fn elem(&mut self, a: &Algebra) -> Elem {
        match a.node() {
            Node::Base(_) => self.group_part_elem(a),
            Node::PlpIII { x, z, v, y } => {
                let r = self.rng.gen_range(0..10);
                if r < 4 {
                    let f = self.in_descriptor(x, v);
                    Elem::with_val(f, self.elem(y))
                } else if r < 6 {
                    let f = self.in_descriptor(x, z);
                    let s = if self.rng.gen_bool(0.5) { Second::Top } else { Second::Bot };
                    Elem::pair(f, s)
                } else {
                    let f = self.elem(x);
                    let in_v = x.in_subgroup_raw(v, &f);
                    let in_z = in_v || x.in_subgroup_raw(z, &f);
                    let s = match self.rng.gen_range(0..3) {
                        0 if in_v => Second::val(self.elem(y)),
                        1 if in_z => Second::Top,
                        _ => Second::Bot,
                    };
                    Elem::pair(f, s)
                }
            }
            Node::PlpIV { x, v, y } => {
                let r = self.rng.gen_range(0..10);
                if r < 4 {
                    let f = self.in_descriptor(x, v);
                    Elem::with_val(f, self.elem(y))
                } else if r < 6 {
                    Elem::with_top(self.group_part_elem(x))
                } else {
                    let f = self.elem(x);
                    if x.in_subgroup_raw(v, &f) && self.rng.gen_bool(0.5) {
                        Elem::with_val(f, self.elem(y))
                    } else {
                        Elem::with_top(f)
                    }
                }
            }
            Node::Bounded(inner) => match self.rng.gen_range(0..20) {
                0 => Elem::TopBound,
                1 => Elem::BotBound,
                _ => self.elem(inner),
            },
        }
    }
}

/// All elements of `a` whose group coordinates lie in `[-radius, radius]`
/// (half-integers on `Q`), with at most `depth` nested product levels
/// taking a value in their second component, sorted ascending.
pub fn window(a: &Algebra, radius: i64, depth: usize) -> Vec<Elem> {
    let mut out = window_unsorted(a, radius, depth);
    out.sort_by(|p, q| a.cmp_raw(p, q));
    out
}

fn window_unsorted(a: &Algebra, radius: i64, depth: usize) -> Vec<Elem> {
    match a.node() {
        Node::Base(GroupChain::QChain) => (-2 * radius..=2 * radius)
            .map(|n| Elem::Leaf(GroupElem::Rational(BigRational::new(n.into(), 2.into()))))
            .collect(),
        Node::Base(g) => {
            let mut vs: Vec<Vec<i64>> = vec![vec![]];
            for _ in 0..g.rank() {
                vs = vs
                    .into_iter()
                    .flat_map(|v| {
                        (-radius..=radius).map(move |n| {
                            let mut w = v.clone();
                            w.push(n);
                            w
                        })
                    })
                    .collect();
            }
            vs.into_iter().map(|v| Elem::Leaf(GroupElem::IntVector(v))).collect()
        }
        Node::PlpIII { x, y, .. } | Node::PlpIV { x, y, .. } => {
            let seconds: Vec<Elem> = if depth > 0 {
                window_unsorted(y, radius, depth - 1)
            } else {
                vec![y.unit()]
            };
            let mut out = Vec::new();
            for f in window_unsorted(x, radius, depth) {
                for s in [Second::Bot, Second::Top] {
                    let e = Elem::pair(f.clone(), s);
                    if a.contains(&e) {
                        out.push(e);
                    }
                }
                for b in &seconds {
                    let e = Elem::with_val(f.clone(), b.clone());
                    if a.contains(&e) {
                        out.push(e);
                    }
                }
            }
            out
        }
        Node::Bounded(inner) => {
            let mut out = window_unsorted(inner, radius, depth);
            out.push(Elem::BotBound);
            out.push(Elem::TopBound);
            out
        }
    }
}
