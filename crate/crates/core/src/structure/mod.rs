//! Controllability and observability, the Kalman canonical decomposition
//! and minimal realization. Every rank and null space here is computed by
//! exact elimination.

mod analysis;
mod kalman;
mod subspace;

pub use analysis::{controllability_matrix, dual, is_controllable, is_observable, observability_matrix};
pub use kalman::{kalman_decompose, minimal_realization, Groups, KalmanDecomposition};
pub use subspace::{
    complete_basis, controllable_space, observable_space, orthogonal_complement, subspace_intersection, Subspace,
};

pub use crate::matrix::{float_rank, rank_exact};

#[cfg(test)]
pub(crate) mod tests {
    pub(crate) use crate::statespace::tests::worked_example;
}
