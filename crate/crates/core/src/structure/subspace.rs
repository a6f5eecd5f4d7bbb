use crate::error::{Error, Result};
use crate::matrix::{EchelonBasis, Matrix};
use crate::rational::Rational;
use crate::statespace::StateSpace;

use super::analysis::dual;

/// A subspace of `Qⁿ` given by linearly independent basis columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    basis: Matrix,
}

impl Subspace {
    pub fn from_vectors(ambient_dim: usize, vectors: &[Vec<Rational>]) -> Result<Self> {
        let mut echelon = EchelonBasis::new(ambient_dim);
        for v in vectors {
            if v.len() != ambient_dim {
                return Err(Error::Dimension(format!("vector of length {} in Q^{ambient_dim}", v.len())));
            }
            if !echelon.insert(v) {
                return Err(Error::InvalidInput("basis vectors are linearly dependent".into()));
            }
        }
        Ok(Self { basis: Matrix::from_columns(ambient_dim, vectors) })
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Self { basis: Matrix::zeros(ambient_dim, 0) }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self { basis: Matrix::identity(ambient_dim) }
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    /// `n × k` matrix of basis columns.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn vectors(&self) -> Vec<Vec<Rational>> {
        self.basis.columns()
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        let mut echelon = EchelonBasis::new(self.ambient_dim());
        for b in self.vectors() {
            echelon.insert(&b);
        }
        echelon.contains(v)
    }
}

/// Basis of the controllable space built chain by chain: for each column
/// `b` of `B`, the vectors `b, Ab, A²b, …` are appended while each is
/// independent of everything accepted so far; a chain ends at its first
/// dependent power.
pub fn controllable_space(ss: &StateSpace) -> Subspace {
    let n = ss.states();
    let mut echelon = EchelonBasis::new(n);
    let mut accepted = Vec::new();
    for alpha in 0..ss.inputs() {
        if echelon.is_full() {
            break;
        }
        let mut v = ss.b().column(alpha);
        while echelon.insert(&v) {
            let next = ss.a().mul_vec(&v);
            accepted.push(std::mem::replace(&mut v, next));
        }
    }
    Subspace { basis: Matrix::from_columns(n, &accepted) }
}

/// Controllable space of the dual system, i.e. the row space of the
/// observability matrix.
pub fn observable_space(ss: &StateSpace) -> Subspace {
    controllable_space(&dual(ss))
}

/// Null space of `basisᵗ`.
pub fn orthogonal_complement(s: &Subspace) -> Subspace {
    let n = s.ambient_dim();
    Subspace { basis: Matrix::from_columns(n, &s.basis.transpose().null_space()) }
}

/// `span(E) ∩ null(Fᵗ)`: solves `Fᵗ E α = 0` and maps the fundamental
/// solutions back through `E`.
pub(crate) fn intersect_with_annihilator(e: &Matrix, f: &Matrix) -> Subspace {
    let n = e.rows();
    let system = f.transpose().mul(e).expect("F and E share the ambient dimension");
    let vectors: Vec<Vec<Rational>> = system.null_space().iter().map(|alpha| e.mul_vec(alpha)).collect();
    Subspace { basis: Matrix::from_columns(n, &vectors) }
}

pub fn subspace_intersection(s1: &Subspace, s2: &Subspace) -> Result<Subspace> {
    if s1.ambient_dim() != s2.ambient_dim() {
        return Err(Error::InvalidInput(format!(
            "subspaces of Q^{} and Q^{} cannot be intersected",
            s1.ambient_dim(),
            s2.ambient_dim()
        )));
    }
    let annihilator = orthogonal_complement(s2);
    Ok(intersect_with_annihilator(s1.basis(), annihilator.basis()))
}

/// Greedy left-to-right scan of `candidates`, keeping each one independent
/// of `fixed` and of the candidates kept before it. Returns the kept
/// indices.
pub fn complete_basis(fixed: &[Vec<Rational>], candidates: &[Vec<Rational>]) -> Result<Vec<usize>> {
    let Some(dim) = fixed.first().or(candidates.first()).map(Vec::len) else {
        return Ok(Vec::new());
    };
    let mut echelon = EchelonBasis::new(dim);
    for v in fixed {
        if v.len() != dim {
            return Err(Error::Dimension("vectors differ in length".into()));
        }
        if !echelon.insert(v) {
            return Err(Error::InvalidInput("fixed vectors are linearly dependent".into()));
        }
    }
    let mut selected = Vec::new();
    for (idx, v) in candidates.iter().enumerate() {
        if v.len() != dim {
            return Err(Error::Dimension("vectors differ in length".into()));
        }
        if echelon.is_full() {
            break;
        }
        if echelon.insert(v) {
            selected.push(idx);
        }
    }
    Ok(selected)
}
