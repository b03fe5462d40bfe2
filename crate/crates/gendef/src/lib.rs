//! Decide membership of regular languages in the finite, cofinite, definite,
//! reverse-definite and generalized-definite classes, starting from a
//! complete DFA.
//!
//! The classifier works on the minimal automaton and searches for four small
//! forbidden patterns (`Pf`, `Pd`, `Pr`, `Pg`); a language belongs to a class
//! exactly when its minimal automaton avoids the corresponding pattern, and
//! when a pattern is admitted a concrete witness is produced. Alongside the
//! classifier the crate ships the supporting machinery: transition-semigroup
//! enumeration and analysis, a definiteness-preserving automaton construction
//! that trades prefix information for alphabet size, a reduction from DAG
//! reachability, and independent brute-force oracles used to cross-check
//! everything at small scale.
//!
//! Start with [`Dfa`] and [`classify`]; the `examples/` directory of the
//! crate demonstrates each capability as a runnable program.

pub mod cli;
pub mod components;
pub mod constructions;
pub mod dfa;
mod error;
pub mod format;
pub mod gen;
pub mod minimize;
pub mod oracle;
pub mod patterns;
pub mod selftest;
pub mod semigroup;

#[cfg(test)]
pub(crate) mod fixtures;

pub use dfa::{Dfa, PatternId, PatternWitness, Transformation, Word};
pub use error::{Error, Result};
pub use minimize::{is_reduced, minimize, MinimizationResult};
// pub use patterns::{classify, ClassReport};
