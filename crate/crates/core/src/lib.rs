//! Desk-scale arithmetic theta series for Shimura curves: quaternion algebras,
//! trace-zero lattices, Green functions, star-product heights and the
//! degree identities they satisfy.

// `!(x > 0.0)` is used deliberately so that NaN is rejected.
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::needless_range_loop)]

pub mod arith;
pub mod config;
pub mod error;
pub mod greens;
pub mod identities;
pub mod lattice;
pub mod linalg;
pub mod quatalg;
pub mod suites;

pub use error::{Error, Result};
pub use greens::{ModelVector, UHPoint};
pub use lattice::{LatticeVector, Order, TraceZeroLattice};
pub use quatalg::{definite_twin, hilbert_symbol, twin, Place, QuaternionAlgebra, QuaternionElement};
