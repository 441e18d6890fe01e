//! Finite ordered semigroups and their ideals.
//!
//! The crate covers validated ordered semigroups on at most
//! [`MAX_ORDER`] elements, the subset algebra over them (products, powers
//! of the universe, downward closure), decision procedures for the
//! `m`-potent ideal notions, enumeration of ideals, exhaustive generation
//! of small ordered semigroups, a set-expression conjecture language and
//! a registry of named checks that can be run over a corpus.
//!
//! Everything here is pure and allocation-only; file formats, reports and
//! the command-line tool live in the `osg` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod error;
mod subset;

pub mod conjecture;
pub mod enumeration;
pub mod generation;
pub mod ideals;
mod oracle;
pub mod outcome;
pub mod structure;
pub mod verifier;
pub mod zoo;

#[cfg(test)]
pub(crate) mod fixtures;

pub use error::{Error, OrderAxiom, Result};
pub use ideals::{Conventions, IdealKind, PrincipalPattern, SimplicityKind};
pub use structure::{OrderedSemigroup, Potency, MAX_ORDER, MAX_POTENCY};
pub use subset::Subset;

/// Version string recorded in reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
