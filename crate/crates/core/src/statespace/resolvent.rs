use num_bigint::BigInt;
use num_traits::One;

use super::StateSpace;
use crate::matrix::Matrix;
use crate::ratfunc::{rf_normalize, Polynomial};
use crate::rational::Rational;
use crate::tfparse::TransferMatrix;

/// `det(sI − A)` together with `adj(sI − A)` as a matrix polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct Resolvent {
    /// Monic characteristic polynomial of degree `n`.
    pub char_poly: Polynomial,
    /// `adjugate[k]` is the coefficient matrix of `s^k`, `k < n`.
    pub adjugate: Vec<Matrix>,
}

/// Faddeev–LeVerrier recurrence:
///
/// ```text
/// M₁ = I,  c_{n−k} = −tr(A·M_k)/k,  M_{k+1} = A·M_k + c_{n−k}·I
/// ```
///
/// so that `adj(sI − A) = Σ M_k s^{n−k}` and
/// `det(sI − A) = sⁿ + c_{n−1}sⁿ⁻¹ + … + c₀`.
pub fn faddeev_leverrier(a: &Matrix) -> Resolvent {
    assert!(a.is_square(), "A must be square");
    let n = a.rows();
    let mut coeffs = vec![Rational::one(); n + 1];
    let mut adjugate = vec![Matrix::zeros(n, n); n];
    let mut m = Matrix::identity(n);
    for k in 1..=n {
        adjugate[n - k] = m.clone();
        let am = a.mul(&m).expect("square");
        let c = -am.trace() / Rational::from_integer(BigInt::from(k));
        m = am.add(&Matrix::scalar(n, &c)).expect("square");
        coeffs[n - k] = c;
    }
    debug_assert!(m.is_zero(), "Cayley-Hamilton residue must vanish");
    Resolvent { char_poly: Polynomial::from_coeffs(coeffs), adjugate }
}

/// Monic `det(sI − A)`.
pub fn char_poly(a: &Matrix) -> Polynomial {
    faddeev_leverrier(a).char_poly
}

/// `p(A)` by Horner's scheme.
pub fn eval_poly_at_matrix(p: &Polynomial, a: &Matrix) -> Matrix {
    let n = a.rows();
    p.coeffs()
        .iter()
        .rev()
        .fold(Matrix::zeros(n, n), |acc, c| acc.mul(a).expect("square").add(&Matrix::scalar(n, c)).expect("square"))
}

/// `G(s) = C (sI − A)⁻¹ B`, exact and entrywise reduced.
pub fn transfer_matrix(ss: &StateSpace) -> TransferMatrix {
    let (m, r, n) = (ss.outputs(), ss.inputs(), ss.states());
    if n == 0 {
        return TransferMatrix::zeros(m, r);
    }
    let res = faddeev_leverrier(ss.a());
    let weighted: Vec<Matrix> = res
        .adjugate
        .iter()
        .map(|adj| ss.c().mul(adj).and_then(|ca| ca.mul(ss.b())).expect("consistent dimensions"))
        .collect();
    let mut entries = Vec::with_capacity(m * r);
    for i in 0..m {
        for j in 0..r {
            let num = Polynomial::from_coeffs(weighted.iter().map(|w| w[(i, j)].clone()).collect());
            entries.push(rf_normalize(&num, &res.char_poly).expect("monic denominator"));
        }
    }
    TransferMatrix::from_parts(m, r, entries)
}
