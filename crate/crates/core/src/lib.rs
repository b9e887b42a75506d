//! Finite truncated decomposition spaces: axiom checks, incidence algebras
//! and the Crapo complementation formula, all over exact arithmetic.

pub mod axioms;
pub mod builder;
pub mod crapo;
pub mod delta;
pub mod document;
pub mod fixtures;
pub mod incidence;
pub mod nerve;
pub mod pullback;
pub mod sset;
