//! Exact computational algebra for equivariant Verlinde data.
//!
//! The crate builds finite-group-graded ("crossed") fusion data from a
//! finite group together with a 3-cocycle, derives the associated action
//! and braiding structure constants from first principles, assembles the
//! extended Verlinde algebra spanned by commuting pairs, computes
//! orbifold (equivariantization) modular data exactly, and cross-checks
//! the result against an independent conjugation-orbit oracle.
//!
//! All arithmetic is exact: scalars live in cyclotomic fields over
//! arbitrary-precision rationals, so every identity in the test batteries
//! is an equality of algebraic numbers, never a floating-point tolerance.

pub mod cyclotomic;
pub mod zmod;
pub mod group_core;
pub mod cocycle;
pub mod calculus;
pub mod skeletal;
pub mod linalg;
pub mod proj_rep;
pub mod rep_theory;
pub mod ext_verlinde;
pub mod modular_ops;
pub mod orbifold;
pub mod oracle;
pub mod suite;
