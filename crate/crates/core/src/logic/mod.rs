//! The logic interpreted by odd chains: formulas, evaluation, a seeded
//! countermodel search for finite theories, and rendering of countermodel
//! values into the open unit interval.

mod eval;
mod formula;
mod render;
mod search;

pub use eval::{eval, eval_all, Assignment};
pub use formula::{parse_formula, parse_theory, Formula};
pub use render::{unit_interval_render, UnitRenderer};
pub use search::{check_consequence, Countermodel, SearchOutcome};
