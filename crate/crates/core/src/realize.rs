//! Companion-form realization of transfer matrices.
//!
//! Each nonzero entry `G_ij` becomes a SISO block in controllable companion
//! form; the blocks are placed on the diagonal of `A` in experiment order
//! (input `j` outer, output `i` inner), the block's `b` is routed into
//! column `j` of `B` and its `c` into row `i` of `C`. The result is not
//! minimal in general.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ratfunc::RationalFunction;
use crate::rational::Rational;
use crate::statespace::StateSpace;
use crate::tfparse::TransferMatrix;

/// Companion-form triple for one strictly proper entry.
#[derive(Clone, Debug, PartialEq)]
pub struct SisoRealization {
    pub a: Matrix,
    /// `n × 1`, equal to `(0, …, 0, 1)ᵀ`.
    pub b: Matrix,
    /// `1 × n`, the numerator coefficients in ascending order.
    pub c: Matrix,
    pub source: RationalFunction,
}

impl SisoRealization {
    pub fn states(&self) -> usize {
        self.a.rows()
    }

    pub fn to_state_space(&self) -> StateSpace {
        StateSpace::new(self.a.clone(), self.b.clone(), self.c.clone()).expect("companion dimensions")
    }
}

fn improper(row: usize, col: usize, g: &RationalFunction) -> Error {
    Error::Improper { row, col, entry: g.to_string() }
}

fn realize_entry(g: &RationalFunction, row: usize, col: usize) -> Result<SisoRealization> {
    let n = g.den().degree().unwrap_or(0);
    let (_, strictly) = g.properness();
    if n == 0 || !strictly {
        return Err(improper(row, col, g));
    }
    let mut a = Matrix::zeros(n, n);
    for i in 0..n - 1 {
        a[(i, i + 1)] = Rational::one();
    }
    for (j, d) in g.den().coeffs().iter().take(n).enumerate() {
        a[(n - 1, j)] = -d.clone();
    }
    let mut b = Matrix::zeros(n, 1);
    b[(n - 1, 0)] = Rational::one();
    let mut c = Matrix::zeros(1, n);
    for (j, coef) in g.num().coeffs().iter().enumerate() {
        c[(0, j)] = coef.clone();
    }
    Ok(SisoRealization { a, b, c, source: g.clone() })
}

/// Companion realization of a strictly proper `g`; constants (including
/// zero) and improper functions are rejected.
pub fn realize_siso(g: &RationalFunction) -> Result<SisoRealization> {
    realize_entry(g, 0, 0)
}

/// Block-diagonal realization of `G`. Zero entries contribute no states.
pub fn realize_mimo(g: &TransferMatrix) -> Result<StateSpace> {
    let (m, r) = (g.rows(), g.cols());
    let mut blocks = Vec::new();
    for j in 0..r {
        for i in 0..m {
            let entry = g.get(i, j);
            if entry.is_zero() {
                continue;
            }
            blocks.push((i, j, realize_entry(entry, i, j)?));
        }
    }
    let n: usize = blocks.iter().map(|(_, _, b)| b.states()).sum();
    let mut a = Matrix::zeros(n, n);
    let mut b = Matrix::zeros(n, r);
    let mut c = Matrix::zeros(m, n);
    let mut offset = 0;
    for (i, j, block) in &blocks {
        a.set_block(offset, offset, &block.a);
        b.set_block(offset, *j, &block.b);
        c.set_block(*i, offset, &block.c);
        offset += block.states();
    }
    debug_assert!(b.to_rows().iter().all(|row| row.iter().filter(|v| !v.is_zero()).count() <= 1));
    StateSpace::new(a, b, c)
}
