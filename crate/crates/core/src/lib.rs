//! Construction and exhaustive verification of 2-generator quasi-cyclic
//! two-weight codes over prime fields and the 3-generator binary
//! self-complementary codes derived from them.
//!
//! - [`field`]: prime fields GF(q)
//! - [`poly`]: polynomials, residues mod x^m - 1, cyclic simplex generators
//! - [`qc`]: circulants and block-circulant generator matrices
//! - [`code`]: rank reduction, enumeration, weight distributions, predicates
//! - [`constructions`]: the two-weight and self-complementary builders
//! - [`reproduce`]: fixture-driven reproduction suites

pub mod code;
pub mod constructions;
pub mod error;
pub mod field;
pub mod poly;
pub mod qc;
pub mod reproduce;

pub use code::{analyze, LinearCode, PropertyReport, WeightDistribution};
pub use error::{CodeError, ConstructionError, FieldError, MatrixError, PolyError};
pub use field::{FieldElement, FieldSpec};
pub use poly::{CyclicWord, Polynomial};
pub use qc::{Matrix, QcGeneratorSpec};
