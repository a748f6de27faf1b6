//! Exact-arithmetic Lie theory engine: root systems, highest-weight
//! representations, isotropy representations of symmetric pairs, extension
//! obstructions, characteristic classes from weights, and the Type 1 / Type 2
//! classification tables.

pub mod charclass;
pub mod classify;
pub mod config;
pub mod error;
pub mod num;
pub mod obstruction;
pub mod repthy;
pub mod rootsys;
pub mod sympair;
pub mod verify;
pub mod weight;

pub use error::{Error, Result};
pub use rootsys::{Family, RootSystem, SimpleType};
pub use weight::{Basis, Weight, WeightMultiset};
