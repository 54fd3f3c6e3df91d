//! Finite permutation groups, chief series and subgroup embedding predicates.

pub mod arith;
pub mod catalog;
pub mod classify;
pub mod embedding;
pub mod error;
pub mod group;
pub mod harness;
pub mod normal;
pub mod perm;
pub mod subgroup;

pub use classify::GroupAnalysis;
pub use error::{Error, Result};
pub use group::{generate_group, FiniteGroup, DEFAULT_ELEMENT_CAP};
pub use normal::{quotient, restrict, ChiefSeries, NormalLattice, QuotientMap, Restriction};
pub use perm::{parse_cycles, Permutation};
pub use subgroup::Subgroup;
