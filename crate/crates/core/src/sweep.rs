//! Seeded batch evaluation of independent cases.
//!
//! Each case draws from its own ChaCha stream derived from `(seed, index)`,
//! so results do not depend on scheduling: sequential and parallel runs
//! produce identical output. With the `parallel` feature disabled,
//! [`Execution::Parallel`] falls back to the sequential path.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::realize::realize_mimo;
use crate::sample::{random_state_space, random_transfer_matrix};
use crate::statespace::transfer_matrix;
use crate::structure::{is_controllable, is_observable, kalman_decompose};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

/// Whether [`Execution::Parallel`] actually runs on the rayon pool.
pub const fn parallel_available() -> bool {
    cfg!(feature = "parallel")
}

pub fn case_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

/// Runs `f(index, rng)` for `index in 0..count` and returns results in
/// index order.
pub fn run_cases<T, F>(seed: u64, count: usize, exec: Execution, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize, &mut ChaCha8Rng) -> T + Sync + Send,
{
    let case = |i: usize| f(i, &mut case_rng(seed, i));
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => (0..count).into_par_iter().map(case).collect(),
        _ => (0..count).map(case).collect(),
    }
}

/// Indices of the cases for which `check` returned false.
pub fn failing_cases<F>(seed: u64, count: usize, exec: Execution, check: F) -> Vec<usize>
where
    F: Fn(usize, &mut ChaCha8Rng) -> bool + Sync + Send,
{
    run_cases(seed, count, exec, |i, rng| (!check(i, rng)).then_some(i)).into_iter().flatten().collect()
}

/// `transfer(realize(G)) = G` for `count` random strictly proper matrices
/// with at most `max_dim` rows and columns and entry degree ≤ `max_degree`.
pub fn roundtrip_sweep(seed: u64, count: usize, max_dim: usize, max_degree: usize, exec: Execution) -> Vec<usize> {
    failing_cases(seed, count, exec, |_, rng| {
        let g = random_transfer_matrix(rng, max_dim, max_dim, max_degree);
        realize_mimo(&g).is_ok_and(|ss| transfer_matrix(&ss).exact_eq(&g))
    })
}

/// Decomposes `count` random systems and checks that the minimal part is
/// controllable, observable and transfer-preserving.
pub fn minimal_sweep(seed: u64, count: usize, max_states: usize, exec: Execution) -> Vec<usize> {
    failing_cases(seed, count, exec, |_, rng| {
        let ss = random_state_space(rng, max_states);
        let min = kalman_decompose(&ss).minimal();
        is_controllable(&min) && is_observable(&min) && transfer_matrix(&min).exact_eq(&transfer_matrix(&ss))
    })
}
