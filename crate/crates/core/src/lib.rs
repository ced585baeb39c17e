//! Exact odd FL_e-chains built from ordered abelian groups by partial
//! lexicographic products, with the tower constructions used to embed
//! finitely generated odd chains into dense ones, and a countermodel search
//! for the logic they interpret.
//!
//! ```
//! use oddchain::{towers::make_zj, Elem};
//!
//! let z2 = make_zj(2);
//! let x = Elem::with_top(Elem::int(1));
//! assert_eq!(z2.tau(&x).unwrap(), Elem::with_top(Elem::int(0)));
//! ```

pub mod algebra;
pub mod error;
pub mod groups;
pub mod literal;
pub mod logic;
pub mod plp;
pub mod sample;
pub mod towers;
pub mod verify;

pub use algebra::{Algebra, Elem, Node, PlpKind, Second};
pub use error::{Error, Result};
pub use groups::{CoordConstraint, CoordKind, GroupChain, GroupElem, SubgroupDescriptor};
pub use literal::{parse_algebra, parse_descriptor, parse_elem, parse_elem_in};
