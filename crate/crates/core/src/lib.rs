//! Exact computations for the conformal embedding of the simple affine
//! vertex algebra of type B4 into the one of type F4 at level −5/2.

pub mod affine;
pub mod checks;
pub mod classify;
pub mod error;
pub mod exact;
pub mod liealg;
pub mod rootsys;
pub mod uea;
pub mod verma;

pub use error::{Error, Result};
