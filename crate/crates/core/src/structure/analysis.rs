use crate::matrix::{rank_exact, Matrix};
use crate::statespace::StateSpace;

/// `[B, AB, …, Aⁿ⁻¹B]`, an `n × n·r` matrix.
pub fn controllability_matrix(ss: &StateSpace) -> Matrix {
    let n = ss.states();
    let mut blocks = Vec::with_capacity(n);
    let mut power = ss.b().clone();
    for _ in 0..n {
        let next = ss.a().mul(&power).expect("A is n x n");
        blocks.push(std::mem::replace(&mut power, next));
    }
    if blocks.is_empty() {
        return Matrix::zeros(0, 0);
    }
    let refs: Vec<&Matrix> = blocks.iter().collect();
    Matrix::hstack(&refs).expect("equal row counts")
}

/// `[C; CA; …; CAⁿ⁻¹]`, obtained as the transposed controllability matrix
/// of the dual system.
pub fn observability_matrix(ss: &StateSpace) -> Matrix {
    controllability_matrix(&dual(ss)).transpose()
}

/// `(Aᵗ, Cᵗ, Bᵗ)`.
pub fn dual(ss: &StateSpace) -> StateSpace {
    StateSpace::new(ss.a().transpose(), ss.c().transpose(), ss.b().transpose()).expect("transposed dimensions")
}

pub fn is_controllable(ss: &StateSpace) -> bool {
    rank_exact(&controllability_matrix(ss)) == ss.states()
}

pub fn is_observable(ss: &StateSpace) -> bool {
    rank_exact(&observability_matrix(ss)) == ss.states()
}
