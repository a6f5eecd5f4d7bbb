//! Reference systems and seeded random generators for property sweeps.

use num_bigint::BigInt;
use rand::Rng;

use crate::matrix::Matrix;
use crate::ratfunc::{Polynomial, RationalFunction};
use crate::rational::Rational;
use crate::statespace::StateSpace;
use crate::tfparse::TransferMatrix;

/// `G(s) = [1/(s + 1), s/(s² − 1)]`: one output driven by two inputs whose
/// impulse responses are `e^{−t}` and `cosh t`.
pub fn two_input_transfer() -> TransferMatrix {
    let entries = vec![
        RationalFunction::new(Polynomial::from_ints(&[1]), Polynomial::from_ints(&[1, 1])).unwrap(),
        RationalFunction::new(Polynomial::from_ints(&[0, 1]), Polynomial::from_ints(&[-1, 0, 1])).unwrap(),
    ];
    TransferMatrix::new(1, 2, entries).unwrap()
}

/// The three-state companion realization of [`two_input_transfer`].
pub fn two_input_system() -> StateSpace {
    StateSpace::new(
        Matrix::from_ints(&[&[-1, 0, 0], &[0, 0, 1], &[0, 1, 0]]),
        Matrix::from_ints(&[&[1, 0], &[0, 0], &[0, 1]]),
        Matrix::from_ints(&[&[1, 0, 1]]),
    )
    .unwrap()
}

/// Small integer, or with probability 1/4 a fraction with denominator ≤ 4.
fn small_rational<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Rational {
    let p = rng.gen_range(-bound..=bound);
    let q = if rng.gen_bool(0.25) { rng.gen_range(1..=4) } else { 1 };
    Rational::new(BigInt::from(p), BigInt::from(q))
}

fn nonzero_rational<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Rational {
    loop {
        let v = small_rational(rng, bound);
        if v != Rational::from_integer(BigInt::from(0)) {
            return v;
        }
    }
}

/// A random strictly proper entry with denominator degree in `1..=max_degree`.
pub fn random_strictly_proper<R: Rng + ?Sized>(rng: &mut R, max_degree: usize) -> RationalFunction {
    let d = rng.gen_range(1..=max_degree.max(1));
    let mut den: Vec<Rational> = (0..d).map(|_| small_rational(rng, 5)).collect();
    den.push(Rational::from_integer(BigInt::from(1)));
    let num_degree = rng.gen_range(0..d);
    let mut num: Vec<Rational> = (0..num_degree).map(|_| small_rational(rng, 5)).collect();
    num.push(nonzero_rational(rng, 5));
    RationalFunction::new(Polynomial::from_coeffs(num), Polynomial::from_coeffs(den)).expect("monic denominator")
}

/// Random `m × r` strictly proper transfer matrix with `m ≤ max_rows`,
/// `r ≤ max_cols`; about one entry in five is zero.
pub fn random_transfer_matrix<R: Rng + ?Sized>(
    rng: &mut R,
    max_rows: usize,
    max_cols: usize,
    max_degree: usize,
) -> TransferMatrix {
    let m = rng.gen_range(1..=max_rows.max(1));
    let r = rng.gen_range(1..=max_cols.max(1));
    let entries = (0..m * r)
        .map(|_| if rng.gen_bool(0.2) { RationalFunction::zero() } else { random_strictly_proper(rng, max_degree) })
        .collect();
    TransferMatrix::new(m, r, entries).expect("nonempty grid")
}

pub fn random_integer_matrix<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize, bound: i64) -> Matrix {
    let data = (0..rows)
        .map(|_| (0..cols).map(|_| Rational::from_integer(BigInt::from(rng.gen_range(-bound..=bound)))).collect())
        .collect();
    Matrix::from_rows_with_cols(data, cols).expect("rectangular")
}

fn sparse_matrix<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize, density: f64) -> Matrix {
    let mut m = Matrix::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            if rng.gen_bool(density) {
                m[(i, j)] = small_rational(rng, 3);
            }
        }
    }
    m
}

/// Nonsingular by construction: `P·L·U` with unit lower `L`, upper `U`
/// with nonzero diagonal, and a random row permutation `P`.
pub fn random_nonsingular<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Matrix {
    let mut l = Matrix::identity(n);
    let mut u = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            if j < i {
                l[(i, j)] = small_rational(rng, 2);
            } else if j == i {
                u[(i, j)] = nonzero_rational(rng, 3);
            } else {
                u[(i, j)] = small_rational(rng, 2);
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        order.swap(i, rng.gen_range(0..=i));
    }
    l.mul(&u).expect("square").select_rows(&order)
}

/// Random system with `1 ≤ n ≤ max_states`, at most three inputs and
/// outputs. Roughly half of the draws are deliberately degenerate: zero
/// input or output maps, hidden (block-triangular) modes, sparse or
/// repeated structure.
pub fn random_state_space<R: Rng + ?Sized>(rng: &mut R, max_states: usize) -> StateSpace {
    let n = rng.gen_range(1..=max_states.max(1));
    let r = rng.gen_range(1..=3);
    let m = rng.gen_range(1..=3);
    let (mut a, mut b, mut c) =
        (random_integer_matrix(rng, n, n, 3), random_integer_matrix(rng, n, r, 2), random_integer_matrix(rng, m, n, 2));
    match rng.gen_range(0..8) {
        0 => b = Matrix::zeros(n, r),
        1 => c = Matrix::zeros(m, n),
        2 | 3 if n > 1 => {
            // Modes `split..n` are not reachable from u; optionally the
            // leading modes are invisible at y as well.
            let split = rng.gen_range(1..n);
            for i in split..n {
                for j in 0..split {
                    a[(i, j)] = Rational::from_integer(BigInt::from(0));
                }
                for j in 0..r {
                    b[(i, j)] = Rational::from_integer(BigInt::from(0));
                }
            }
            if rng.gen_bool(0.5) {
                for i in 0..m {
                    for j in 0..split.min(n - 1) {
                        c[(i, j)] = Rational::from_integer(BigInt::from(0));
                    }
                }
            }
        }
        4 => {
            a = sparse_matrix(rng, n, n, 0.3);
            b = sparse_matrix(rng, n, r, 0.4);
            c = sparse_matrix(rng, m, n, 0.4);
        }
        5 => {
            let d: Vec<i64> = (0..n).map(|_| rng.gen_range(-2..=2)).collect();
            a = Matrix::zeros(n, n);
            for (i, v) in d.iter().enumerate() {
                a[(i, i)] = Rational::from_integer(BigInt::from(*v));
            }
        }
        _ => {}
    }
    StateSpace::new(a, b, c).expect("consistent dimensions")
}
