//! Exact arithmetic backing the concrete realizations of matrix, permutation
//! and quaternion groups.
//!
//! `F_9` is always `F_3[x]/(x^2 + 1)` so matrix keys are reproducible.

mod field;
mod mat;
mod perm;
mod quat;

pub use field::{FieldDesc, Fq};
pub use mat::{classical_generators, solve_conjugation, ClassicalKind, ConjugationSolution, Mat};
pub use perm::{alternating_generators, symmetric_generators, Perm, MAX_DEGREE};
pub use quat::{binary_icosahedral_generators, binary_tetrahedral_generators, Quat};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("unsupported field: p = {p}, degree {d}")]
    UnsupportedField { p: u8, d: u8 },
    #[error("modulus is reducible")]
    ReduciblePolynomial,
    #[error("operands have different fields or dimensions")]
    DimensionMismatch,
    #[error("matrix is singular")]
    Singular,
    #[error("not a permutation of 0..n (n <= 64)")]
    BadPermutation,
    #[error("the intertwining system has only the zero solution")]
    NoSolution,
    #[error("every nonzero intertwiner is singular")]
    NoInvertibleSolution,
}
