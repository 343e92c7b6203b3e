//! Exact symbolic engine for the Calogero-Sutherland model.
//!
//! Everything here is exact: coefficients live in `Q(β)`, the field of
//! rational functions in the coupling `β` with rational coefficients, and
//! polynomials are sparse Laurent polynomials in `z_1..z_N` over that field.
//!
//! The main entry point is [`rodrigues::jack`], which builds Jack
//! polynomials by applying ordered strings of creation operators `B_i^+`
//! (assembled from Dunkl operators) to the constant `1`. The [`oracle`]
//! module carries three independent constructions used to check it.
//!
//! Variable and operator indices are zero-based throughout the API: `z_1`
//! in the usual notation is index `0`.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

pub mod error;
pub mod field;
pub mod linalg;
pub mod operators;
pub mod oracle;
pub mod partitions;
pub mod poly;
pub mod rodrigues;
pub mod spectrum;
pub mod symbases;

pub use error::{Error, Result};
pub use field::{BetaPoly, FieldElement, Rational};
pub use operators::{IndexSet, Operator};
pub use partitions::{DominanceOrdering, Partition};
pub use poly::{Exponent, LaurentPoly, VarContext};
pub use rodrigues::{JackResult, Normalization};
pub use symbases::{Basis, BasisExpansion};
