//! Computational laboratory for finite p-groups given by power-commutator
//! presentations: collection, explicit subgroup machinery, central series,
//! and exhaustive enumeration of central automorphisms.

pub mod catalog;
pub mod central_aut;
pub mod error;
pub mod group;
pub mod invariants;
pub mod pcp;
pub mod profile;
pub mod report;
pub mod theorems;

pub use error::{Error, Result};
