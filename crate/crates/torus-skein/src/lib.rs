//! Exact computer algebra for the Kauffman bracket skein algebra of the
//! torus, specialized at a parameter t.
//!
//! Elements live in the T-basis indexed by integer pairs (p,q) modulo
//! sign, with the empty skein as identity. Multiplication of basis curves
//! follows the product-to-sum formula, coefficients are exact rational
//! functions in t (or complex numbers once specialized), and the quotient
//! by commutators is five dimensional: its coordinates are classwise
//! coefficient sums, and membership in the commutator span is certified
//! by explicit witnesses that re-expand to the original element.
//!
//! The `examples/` directory walks through each capability:
//!
//! - `product_to_sum`: multiplying and commutating basis curves
//! - `chebyshev_bases`: simple-diagram vs T-basis conversions
//! - `five_traces`: the trace functionals and the class map
//! - `commutator_witness`: closed-form witnesses for curve differences
//! - `reduction_certificate`: certified reduction modulo commutators
//! - `numeric_specialization`: complex specializations and degeneracy
//! - `expressions`: the expression grammar and JSON wire format
//! - `selftest_harness`: the seeded randomized invariant suites

pub mod algebra;
pub mod error;
pub mod format;
pub mod json;
pub mod parse;
pub mod quotient;
pub mod scalar;
pub mod selftest;

pub use algebra::{multiply_basis, CurveIndex, SimpleElement, SkeinElement};
pub use error::SkeinError;
pub use quotient::{
    commutator_witness, phi_map, reduce_mod_commutators, trace, verify_certificate,
    CommutatorCertificate, ParityClass, QuotientVector, Witness,
};
pub use scalar::{Scalar, ScalarContext, ScalarMode};
