//! Exact rational scalars, sparse polynomials in four variables and exact
//! linear algebra (dense row reduction and an incremental sparse echelon basis).

mod echelon;
mod matrix;
mod poly;
mod scalar;

pub(crate) use echelon::axpy;
pub use echelon::SparseEchelon;
pub use matrix::{nullspace, rref, solve, span_contains, ExactMatrix};
pub use poly::{Exponents, SparsePoly};
pub use scalar::{format_scalar, int, parse_scalar, q, Scalar};
