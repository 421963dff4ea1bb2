//! Finite matrix groups acting on the graded generators of a polynomial ring:
//! Molien series, fundamental degrees, Solomon's supplement, symmetric-power
//! characters and explicit invariants.

use thiserror::Error;

pub mod character;
pub mod group;
pub mod matrix;
pub mod molien;
pub mod reynolds;

pub use character::{
    builtin_table, decompose, sym_power_character, ClassFunction, Irreducible,
    RationalCharacterTable, BUILTIN_TABLES,
};
pub use group::{
    conjugacy_classes, generate_group, GradedBlock, GradedGroupRep, GroupElement, DEFAULT_ORDER_CAP,
};
pub use matrix::RationalMatrix;
pub use molien::{
    extract_polynomial_degrees, molien_series, pseudoreflection_count, solomon_supplement,
    verify_solomon, MolienReport, SolomonCheck, Twist,
};
pub use reynolds::{invariant_basis, reynolds, Polynomial, DEFAULT_MONOMIAL_BOUND};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantsError {
    #[error("InvalidGroup: {0}")]
    InvalidGroup(String),
    #[error("OrderCapExceeded: group closure exceeds {0} elements")]
    OrderCapExceeded(usize),
    #[error("NotPolynomial: {0}")]
    NotPolynomial(String),
    #[error("LengthMismatch: {0} generator degrees vs {1} invariant degrees")]
    LengthMismatch(usize, usize),
    #[error("InvalidCharacterTable: {0}")]
    InvalidCharacterTable(String),
    #[error("NonIntegralMultiplicity: {0}")]
    NonIntegralMultiplicity(String),
    #[error("UnsupportedDecomposition: {0}")]
    UnsupportedDecomposition(String),
    #[error("MonomialBoundExceeded: {0} monomials exceed the bound {1}")]
    MonomialBoundExceeded(usize, usize),
}
