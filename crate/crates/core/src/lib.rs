//! Exact, matrix-level semistability criteria for abelian varieties.
//!
//! Monodromy operators are modeled by integer matrices (exact representatives
//! of ℓ-adic operators) or by residue-class matrices modulo `n`. On top of an
//! exact big-integer linear algebra layer the crate provides:
//!
//! - exterior powers and the induced action on cohomology ([`exterior`]),
//! - the exceptional moduli sets `N(r)`, `N'(r)` and cyclotomic ideal
//!   membership ([`cyclotomic`]),
//! - unipotency, quasi-unipotency and Jordan-partition analysis ([`spectral`]),
//! - the inertia-image data model and the classification decision table
//!   ([`inertia`]),
//! - family generators and brute-force verification suites ([`verify`]).
//!
//! The crate is `no_std` and only needs `alloc`; file formats, timing and the
//! command-line front end live in the `monodromy` crate.

#![no_std]
#![deny(rust_2018_idioms)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod arith;
pub mod cyclotomic;
mod error;
pub mod exterior;
pub mod inertia;
pub mod matrix;
pub mod modular;
pub mod poly;
pub mod spectral;
pub mod verify;

pub use cyclotomic::{n_prime_set, n_set, PrimePowerSet};
pub use error::{Error, Result};
pub use exterior::{cohomology_action, wedge_power, WedgeBasisIndex};
pub use inertia::{classify, Classification, CoefficientMode, InertiaRep, Verdict};
pub use matrix::ExactMatrix;
pub use poly::IntPolynomial;
pub use spectral::{JordanPartition, QuasiUnipotentReport};

/// Default cap on the dimension of input operators.
pub const DEFAULT_MAX_DIM: usize = 24;
