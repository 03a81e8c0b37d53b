//! Exact verification engine for Catalan-type determinant identities, their
//! q-analogues and residue-lift variants.

pub mod exact_arith;
pub mod qseries;
pub mod combinatorics;
pub mod linalg;
pub mod orthopoly;
pub mod value;
pub mod modular_lab;
pub mod identity_suite;

pub use exact_arith::ring::{Field, Fraction, HasFractionField, Ring, RingTag};
