//! Goto numbers, Apery sets and associated-graded invariants of numerical
//! semigroup rings `k[[S]]`, computed entirely on the semigroup side.

pub mod classify;
pub mod cli;
pub mod error;
pub mod formulas;
pub mod goto;
pub mod harness;
pub mod num;
pub mod order;
pub mod semigroup;

pub use classify::{DeltaGamma, Flags, InvariantReport};
pub use error::{Error, Result};
pub use formulas::{Ee5Case, Ele4Case, FamilyTag};
pub use goto::{GotoBounds, GotoVector};
pub use semigroup::{
    parse_generators, AperyTable, ExtremalApery, NumericalSemigroup, Relation, SemigroupOptions,
};
