//! Oracles shared by the property and acceptance suites. They avoid the
//! library routines they are used to check.

#![allow(dead_code)]

use num_traits::Zero;
use realizer::matrix::Matrix;
use realizer::structure::KalmanDecomposition;
use realizer::{Polynomial, Rational, StateSpace, TransferMatrix};

pub fn q(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

/// `det(sI − A)` by cofactor expansion along the first row of the
/// polynomial matrix.
pub fn det_by_cofactors(a: &Matrix) -> Polynomial {
    let n = a.rows();
    let entries: Vec<Vec<Polynomial>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = Polynomial::constant(-a[(i, j)].clone());
                    if i == j {
                        &c + &Polynomial::s()
                    } else {
                        c
                    }
                })
                .collect()
        })
        .collect();
    cofactor(&entries)
}

fn cofactor(m: &[Vec<Polynomial>]) -> Polynomial {
    let n = m.len();
    if n == 0 {
        return Polynomial::one();
    }
    let mut acc = Polynomial::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Polynomial>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, p)| p.clone()).collect())
            .collect();
        let term = &m[0][j] * &cofactor(&minor);
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// `Σ c_k A^k` with explicit powers.
pub fn poly_at_matrix(p: &Polynomial, a: &Matrix) -> Matrix {
    let n = a.rows();
    let mut power = Matrix::identity(n);
    let mut acc = Matrix::zeros(n, n);
    for c in p.coeffs() {
        acc = acc.add(&power.scale(c)).unwrap();
        power = power.mul(a).unwrap();
    }
    acc
}

/// Sum over the given simple poles of the rank of the residue matrix of
/// `G` (Gilbert's count of the minimal state dimension).
pub fn residue_rank_sum(g: &TransferMatrix, poles: &[Rational]) -> usize {
    let mut distinct: Vec<Rational> = Vec::new();
    for p in poles {
        if !distinct.contains(p) {
            distinct.push(p.clone());
        }
    }
    distinct
        .iter()
        .map(|lambda| {
            let rows = (0..g.rows())
                .map(|i| {
                    (0..g.cols())
                        .map(|j| {
                            let f = g.get(i, j);
                            if f.den().eval(lambda).is_zero() {
                                let d = f.den().derivative().eval(lambda);
                                assert!(!d.is_zero(), "pole must be simple");
                                f.num().eval(lambda) / d
                            } else {
                                Rational::zero()
                            }
                        })
                        .collect()
                })
                .collect();
            elimination_rank(Matrix::from_rows(rows).unwrap())
        })
        .sum()
}

/// Plain row-echelon rank with first-nonzero pivots, written out here so
/// the suites do not depend on the library's elimination.
pub fn elimination_rank(mut m: Matrix) -> usize {
    let (rows, cols) = m.shape();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&i| !m[(i, c)].is_zero()) else { continue };
        for j in 0..cols {
            let tmp = m[(rank, j)].clone();
            m[(rank, j)] = m[(p, j)].clone();
            m[(p, j)] = tmp;
        }
        for i in rank + 1..rows {
            let f = &m[(i, c)] / &m[(rank, c)];
            if f.is_zero() {
                continue;
            }
            for j in c..cols {
                let v = &f * &m[(rank, j)];
                m[(i, j)] -= v;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// `[B, AB, …, Aⁿ⁻¹B]` assembled by repeated products.
pub fn brute_controllability(ss: &StateSpace) -> Matrix {
    let n = ss.states();
    let mut cols = Vec::new();
    let mut p = ss.b().clone();
    for _ in 0..n {
        cols.extend(p.columns());
        p = ss.a().mul(&p).unwrap();
    }
    Matrix::from_columns(n, &cols)
}

/// `[C; CA; …; CAⁿ⁻¹]` assembled directly.
pub fn brute_observability(ss: &StateSpace) -> Matrix {
    let n = ss.states();
    let mut rows = Vec::new();
    let mut p = ss.c().clone();
    for _ in 0..n {
        rows.extend(p.to_rows());
        p = p.mul(ss.a()).unwrap();
    }
    Matrix::from_rows_with_cols(rows, n).unwrap()
}

fn block_zero(m: &Matrix, rows: &[usize], cols: &[usize]) -> bool {
    rows.iter().all(|&i| cols.iter().all(|&j| m[(i, j)].is_zero()))
}

/// Every zero block the decomposition promises, checked entry by entry.
pub fn kalman_zero_blocks_hold(kd: &KalmanDecomposition) -> Result<(), String> {
    let g = &kd.groups;
    let ss = &kd.transformed;
    let (ctrl, unc, obs, unobs) = (g.controllable(), g.uncontrollable(), g.observable(), g.unobservable());
    let inputs: Vec<usize> = (0..ss.inputs()).collect();
    let outputs: Vec<usize> = (0..ss.outputs()).collect();
    if !block_zero(ss.a(), &unc, &ctrl) {
        return Err("A(uncontrollable, controllable) != 0".into());
    }
    if !block_zero(ss.a(), &obs, &unobs) {
        return Err("A(observable, unobservable) != 0".into());
    }
    if !block_zero(ss.b(), &unc, &inputs) {
        return Err("B(uncontrollable, :) != 0".into());
    }
    if !block_zero(ss.c(), &outputs, &unobs) {
        return Err("C(:, unobservable) != 0".into());
    }
    Ok(())
}
