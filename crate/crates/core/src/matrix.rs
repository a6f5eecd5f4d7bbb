//! Dense matrices over exact rationals and the elimination routines the
//! structural analysis is built on.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{format_rational, int, to_f64, Coeff, Rational};

/// Row-major dense matrix. Zero-sized shapes (`0×k`, `k×0`) are valid.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn scalar(n: usize, c: &Rational) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = c.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_rows_with_cols(rows, cols)
    }

    /// Like [`Matrix::from_rows`] but fixes the column count, so an empty
    /// row list still yields a `0×cols` matrix.
    pub fn from_rows_with_cols(rows: Vec<Vec<Rational>>, cols: usize) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Shape(format!("row {} has {} entries, expected {}", i + 1, row.len(), cols)));
            }
            data.extend(row);
        }
        Ok(Self { rows: n, cols, data })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect();
        Self::from_rows_with_cols(rows, cols).expect("rectangular")
    }

    pub fn from_columns(n: usize, columns: &[Vec<Rational>]) -> Self {
        let mut m = Self::zeros(n, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), n, "column length");
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Rational>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows).map(|i| self.row(i).iter().zip(v).fold(Rational::zero(), |acc, (a, b)| acc + a * b)).collect()
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, |a, b| a - b)
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Result<Self> {
        if self.shape() != rhs.shape() {
            return Err(Error::Dimension(format!(
                "shape {}x{} does not match {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect();
        Ok(Self { rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * c).collect() }
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).fold(Rational::zero(), |acc, i| acc + &self[(i, i)])
    }

    pub fn hstack(blocks: &[&Matrix]) -> Result<Self> {
        let rows = blocks.first().map_or(0, |b| b.rows);
        if blocks.iter().any(|b| b.rows != rows) {
            return Err(Error::Dimension("hstack blocks differ in row count".into()));
        }
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let mut offset = 0;
        for b in blocks {
            out.set_block(0, offset, b);
            offset += b.cols;
        }
        Ok(out)
    }

    pub fn vstack(blocks: &[&Matrix]) -> Result<Self> {
        let cols = blocks.first().map_or(0, |b| b.cols);
        if blocks.iter().any(|b| b.cols != cols) {
            return Err(Error::Dimension("vstack blocks differ in column count".into()));
        }
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut out = Self::zeros(rows, cols);
        let mut offset = 0;
        for b in blocks {
            out.set_block(offset, 0, b);
            offset += b.rows;
        }
        Ok(out)
    }

    pub fn set_block(&mut self, row: usize, col: usize, block: &Matrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self[(row + i, col + j)] = block[(i, j)].clone();
            }
        }
    }

    /// Submatrix picking the given row and column indices, in order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut out = Self::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                out[(a, b)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let rows: Vec<usize> = (0..self.rows).collect();
        self.select(&rows, cols)
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let cols: Vec<usize> = (0..self.cols).collect();
        self.select(rows, &cols)
    }

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        (0..self.rows).map(|i| self.row(i).iter().map(to_f64).collect()).collect()
    }

    /// Reduced row echelon form and the pivot column of each nonzero row.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let factor = m[(i, c)].clone();
                for j in c..m.cols {
                    let v = &factor * &m[(r, j)];
                    m[(i, j)] -= v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        rank_exact(self)
    }

    /// Basis of `{x : self * x = 0}`, one vector per free column, with a 1 in
    /// that free position.
    pub fn null_space(&self) -> Vec<Vec<Rational>> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|free| {
                let mut v = vec![Rational::zero(); self.cols];
                v[free] = Rational::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r[(row, free)].clone();
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Dimension(format!("{}x{} matrix has no inverse", self.rows, self.cols)));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Self::zeros(0, 0));
        }
        let aug = Self::hstack(&[self, &Self::identity(n)])?;
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::SingularTransform);
        }
        let cols: Vec<usize> = (n..2 * n).collect();
        Ok(r.select_columns(&cols))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> =
            (0..self.rows).map(|i| self.row(i).iter().map(format_rational).collect()).collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in &cells {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "[{}]", line.join("  "))?;
        }
        Ok(())
    }
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<Coeff>> = (0..self.rows).map(|i| self.row(i).iter().cloned().map(Coeff).collect()).collect();
        rows.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<Coeff>>::deserialize(deserializer)?;
        let rows = rows.into_iter().map(|r| r.into_iter().map(|c| c.0).collect()).collect();
        Matrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

/// Rank by exact Gaussian elimination; no tolerance is involved.
pub fn rank_exact(m: &Matrix) -> usize {
    m.rref().1.len()
}

/// Incrementally maintained echelon basis used to test linear independence
/// of vectors against everything accepted so far.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    dim: usize,
    // (pivot index, reduced vector with 1 at the pivot)
    rows: Vec<(usize, Vec<Rational>)>,
}

impl EchelonBasis {
    pub fn new(dim: usize) -> Self {
        Self { dim, rows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.dim
    }

    fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut w = v.to_vec();
        for (p, row) in &self.rows {
            if w[*p].is_zero() {
                continue;
            }
            let factor = w[*p].clone();
            for (wi, ri) in w.iter_mut().zip(row) {
                if !ri.is_zero() {
                    *wi -= &factor * ri;
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Adds `v` when it is independent of the current set; reports whether
    /// it was added.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.dim, "vector dimension");
        let w = self.reduce(v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[p].recip();
        let w: Vec<Rational> = w.iter().map(|x| x * &inv).collect();
        self.rows.push((p, w));
        true
    }
}

/// Floating-point rank for measured data: pivots with magnitude at most
/// `max(rows, cols) * f64::EPSILON * max|entry|` count as zero.
pub fn float_rank(rows: &[Vec<f64>]) -> usize {
    let mut m: Vec<Vec<f64>> = rows.to_vec();
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let max_entry = m.iter().flatten().fold(0.0f64, |acc, v| acc.max(v.abs()));
    let tol = nrows.max(ncols) as f64 * f64::EPSILON * max_entry;
    let mut rank = 0;
    for c in 0..ncols {
        if rank == nrows {
            break;
        }
        let (p, best) =
            (rank..nrows).map(|i| (i, m[i][c].abs())).fold((rank, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
        if best <= tol {
            continue;
        }
        m.swap(rank, p);
        for i in rank + 1..nrows {
            let (top, rest) = m.split_at_mut(i);
            let (pivot, row) = (&top[rank], &mut rest[0]);
            let factor = row[c] / pivot[c];
            for (x, y) in row[c..ncols].iter_mut().zip(&pivot[c..ncols]) {
                *x -= factor * y;
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn rank_examples() {
        assert_eq!(rank_exact(&Matrix::identity(3)), 3);
        assert_eq!(rank_exact(&Matrix::from_ints(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank_exact(&Matrix::zeros(2, 3)), 0);
        assert_eq!(rank_exact(&Matrix::zeros(0, 0)), 0);
    }

    #[test]
    fn null_space_annihilates() {
        let m = Matrix::from_ints(&[&[1, 0, 1], &[-1, 1, 0]]);
        let ns = m.null_space();
        assert_eq!(ns, vec![vec![int(-1), int(-1), int(1)]]);
        assert!(m.mul_vec(&ns[0]).iter().all(Zero::is_zero));
        assert_eq!(Matrix::zeros(0, 3).null_space().len(), 3);
    }

    #[test]
    fn inverse_round_trip() {
        let t = Matrix::from_ints(&[&[2, 1], &[1, 1]]);
        let inv = t.inverse().unwrap();
        assert_eq!(t.mul(&inv).unwrap(), Matrix::identity(2));
        assert_eq!(Matrix::from_ints(&[&[1, 2], &[2, 4]]).inverse(), Err(Error::SingularTransform));
        assert_eq!(Matrix::zeros(0, 0).inverse().unwrap(), Matrix::zeros(0, 0));
        let h = Matrix::from_rows(vec![vec![int(1), ratio(1, 2)], vec![ratio(1, 2), ratio(1, 3)]]).unwrap();
        assert_eq!(h.inverse().unwrap(), Matrix::from_ints(&[&[4, -6], &[-6, 12]]));
    }

    #[test]
    fn echelon_basis_independence() {
        let mut e = EchelonBasis::new(3);
        assert!(e.insert(&[int(1), int(1), int(-1)]));
        assert!(e.insert(&[int(1), int(0), int(0)]));
        assert!(!e.insert(&[int(0), int(1), int(-1)]));
        assert!(e.contains(&[int(2), int(1), int(-1)]));
        assert!(e.insert(&[int(0), int(0), int(1)]));
        assert!(e.is_full());
        assert!(!e.insert(&[int(0), int(1), int(0)]));
    }

    #[test]
    fn float_rank_tolerance() {
        assert_eq!(float_rank(&[vec![1.0, 2.0], vec![2.0, 4.0 + 1e-17]]), 1);
        assert_eq!(float_rank(&[vec![1.0, 0.0], vec![0.0, 1e-3]]), 2);
        assert_eq!(float_rank(&[]), 0);
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(matches!(Matrix::from_rows(vec![vec![int(1)], vec![]]), Err(Error::Shape(_))));
    }
}
