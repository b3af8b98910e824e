//! Exact computer algebra for the cohomology and quantum cohomology of
//! moduli of rank-2 stable bundles on a curve.
//!
//! The crate is `no_std` with `alloc`. File formats and the command line
//! live in the `qhm` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod degree_one;
pub mod degree_two;
pub mod evaluation;
pub mod iso;
pub mod linalg;
pub mod presentations;
pub mod scalar;
pub mod series;

pub use algebra::{Element, Presentation, ReductionEngine};
pub use scalar::Scalar;
