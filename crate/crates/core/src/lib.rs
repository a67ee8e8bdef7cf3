//! Schur functions, orthogonal polynomials on the unit circle and the unitary
//! colligation of a probability measure, with numerical tests for
//! pseudocontinuability of Schur functions.
//!
//! The modules follow the pipeline: [`grid_fourier`] samples the circle,
//! [`rational_hardy`] handles rational data exactly, [`triples`] moves between
//! `Θ`, `Φ` and `μ`, [`opuc_basis`] builds the canonical orthonormal basis of
//! `L²_μ`, [`colligation`] writes multiplication by `t̄` in that basis, and
//! [`pcont`] runs the pseudocontinuability criteria.

pub mod colligation;
pub mod error;
pub mod grid_fourier;
pub mod io;
pub mod opuc_basis;
pub mod pcont;
pub mod rational_hardy;
pub mod triples;

pub use error::{Error, Result};
