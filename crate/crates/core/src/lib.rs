//! Exact conversion between transfer matrices and state-space models of
//! linear stationary systems, with controllability/observability analysis,
//! Kalman canonical decomposition and minimal realization.
//!
//! All algebra runs over arbitrary-precision rationals; floating point is
//! only used when evaluating rational functions numerically and when
//! simulating impulse responses.

pub mod error;
pub mod matrix;
pub mod ratfunc;
pub mod rational;
pub mod realize;
pub mod sample;
pub mod statespace;
pub mod structure;
pub mod sweep;
pub mod tfparse;
pub mod verify;

pub use error::{Error, Position, Result};
pub use matrix::{rank_exact, Matrix};
pub use ratfunc::{Polynomial, RationalFunction};
pub use rational::Rational;
pub use realize::{realize_mimo, realize_siso, SisoRealization};
pub use statespace::{impulse_response, similarity_transform, transfer_matrix, ImpulseRecord, StateSpace};
pub use structure::{kalman_decompose, minimal_realization, KalmanDecomposition};
pub use tfparse::{parse_transfer_matrix, print_transfer_matrix, TransferMatrix};
pub use verify::{verify_realization, VerifyReport};
