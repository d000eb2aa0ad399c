//! Exact algebra for weighted projective stacks of binary forms: cyclotomic
//! arithmetic, weighted polynomials, graded-ring operations, binary
//! polyhedral symmetry and moduli invariants.

pub mod acceptance;
pub mod exactnum;
pub mod grading;
pub mod invariants;
pub mod locus;
pub mod polyalg;
pub mod scalar;
pub mod symmetry;

pub use exactnum::{Cyclotomic, Rational};

/// Weighted polynomial with cyclotomic coefficients.
pub type Poly = polyalg::MultiPoly<Cyclotomic>;
/// Binary form with cyclotomic coefficients.
pub type Form = polyalg::BinaryForm<Cyclotomic>;
/// 2×2 matrix with cyclotomic entries.
pub type Matrix = polyalg::Mat2<Cyclotomic>;
