use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{EchelonBasis, Matrix};
use crate::rational::Rational;
use crate::statespace::{similarity_transform, StateSpace};

use super::subspace::{
    complete_basis, controllable_space, intersect_with_annihilator, observable_space, orthogonal_complement,
};

/// State indices of the transformed system, split by
/// controllability × observability. Groups are contiguous and appear in
/// this order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Groups {
    /// Controllable and unobservable.
    #[serde(rename = "co_bar_o")]
    pub controllable_unobservable: Vec<usize>,
    /// Controllable and observable: the states of a minimal realization.
    #[serde(rename = "co_o")]
    pub controllable_observable: Vec<usize>,
    #[serde(rename = "unc_unobs")]
    pub uncontrollable_unobservable: Vec<usize>,
    #[serde(rename = "unc_obs")]
    pub uncontrollable_observable: Vec<usize>,
}

impl Groups {
    fn from_dims(q: usize, k: usize, l: usize, n: usize) -> Self {
        let range = |a: usize, b: usize| (a..b).collect::<Vec<_>>();
        Self {
            controllable_unobservable: range(0, q),
            controllable_observable: range(q, k),
            uncontrollable_unobservable: range(k, k + l - q),
            uncontrollable_observable: range(k + l - q, n),
        }
    }

    /// `(q, k − q, l − q, n − k − l + q)`.
    pub fn dims(&self) -> (usize, usize, usize, usize) {
        (
            self.controllable_unobservable.len(),
            self.controllable_observable.len(),
            self.uncontrollable_unobservable.len(),
            self.uncontrollable_observable.len(),
        )
    }

    pub fn controllable(&self) -> Vec<usize> {
        self.controllable_unobservable.iter().chain(&self.controllable_observable).copied().collect()
    }

    pub fn uncontrollable(&self) -> Vec<usize> {
        self.uncontrollable_unobservable.iter().chain(&self.uncontrollable_observable).copied().collect()
    }

    pub fn observable(&self) -> Vec<usize> {
        self.controllable_observable.iter().chain(&self.uncontrollable_observable).copied().collect()
    }

    pub fn unobservable(&self) -> Vec<usize> {
        self.controllable_unobservable.iter().chain(&self.uncontrollable_unobservable).copied().collect()
    }

    fn total(&self) -> usize {
        let (a, b, c, d) = self.dims();
        a + b + c + d
    }
}

/// Change of basis `T`, the transformed triple `(T⁻¹AT, T⁻¹B, CT)` and the
/// four state groups.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "KalmanWire", into = "KalmanWire")]
pub struct KalmanDecomposition {
    pub t: Matrix,
    pub transformed: StateSpace,
    pub groups: Groups,
}

impl KalmanDecomposition {
    pub fn dims(&self) -> (usize, usize, usize, usize) {
        self.groups.dims()
    }

    /// The controllable and observable subsystem.
    pub fn minimal(&self) -> StateSpace {
        self.transformed.restrict(&self.groups.controllable_observable)
    }
}

#[derive(Serialize, Deserialize)]
struct KalmanWire {
    #[serde(rename = "T")]
    t: Matrix,
    #[serde(flatten)]
    transformed: StateSpace,
    groups: Groups,
}

impl From<KalmanDecomposition> for KalmanWire {
    fn from(k: KalmanDecomposition) -> Self {
        Self { t: k.t, transformed: k.transformed, groups: k.groups }
    }
}

impl TryFrom<KalmanWire> for KalmanDecomposition {
    type Error = Error;

    fn try_from(w: KalmanWire) -> Result<Self> {
        let n = w.transformed.states();
        let t = if w.t.rows() == 0 { Matrix::zeros(0, 0) } else { w.t };
        if t.shape() != (n, n) {
            return Err(Error::Dimension(format!("T is {}x{}, expected {n}x{n}", t.rows(), t.cols())));
        }
        let (q, a, b, _) = w.groups.dims();
        let expected = Groups::from_dims(q, q + a, q + b, n);
        if w.groups.total() != n || w.groups != expected {
            return Err(Error::InvalidInput("groups are not a contiguous ordered partition of the states".into()));
        }
        Ok(Self { t, transformed: w.transformed, groups: w.groups })
    }
}

/// Kalman canonical decomposition.
///
/// 1. `E` ← basis of the controllable space (`k = dim`).
/// 2. `F` ← basis of the observable space (`p = dim`).
/// 3. `G` ← `E_c ∩ E_no` from the fundamental solutions of `Fᵗ E α = 0`
///    (`q = dim`).
/// 4. Greedily complete `G` to a basis of `E_c` with columns of `E`.
/// 5. `H` ← basis of `E_no = E_o^⊥` (`l = n − p`).
/// 6. Greedily complete `G` to a basis of `E_no` with columns of `H`.
/// 7. If `k + l − q < n`, complete everything with canonical vectors
///    `e₁ … eₙ`.
/// 8. `T = [G | E_sel | H_sel | V_sel]`.
/// 9. Transform by `T`.
pub fn kalman_decompose(ss: &StateSpace) -> KalmanDecomposition {
    let n = ss.states();
    let ec = controllable_space(ss);
    let eo = observable_space(ss);
    let intersection = intersect_with_annihilator(ec.basis(), eo.basis());
    let eno = orthogonal_complement(&eo);
    let (k, l, q) = (ec.dim(), eno.dim(), intersection.dim());

    let g = intersection.vectors();
    let e = ec.vectors();
    let h = eno.vectors();
    let e_sel = complete_basis(&g, &e).expect("intersection basis is independent");
    let h_sel = complete_basis(&g, &h).expect("intersection basis is independent");
    debug_assert_eq!(e_sel.len(), k - q);
    debug_assert_eq!(h_sel.len(), l - q);

    let mut columns: Vec<Vec<Rational>> = g;
    columns.extend(e_sel.iter().map(|&i| e[i].clone()));
    columns.extend(h_sel.iter().map(|&i| h[i].clone()));
    if columns.len() < n {
        let canonical = Matrix::identity(n).columns();
        let v_sel = complete_basis(&columns, &canonical).expect("E_c + E_no basis is independent");
        columns.extend(v_sel.iter().map(|&i| canonical[i].clone()));
    }
    debug_assert!({
        let mut check = EchelonBasis::new(n);
        columns.iter().all(|c| check.insert(c))
    });
    assert_eq!(columns.len(), n, "change of basis must be square");

    let t = Matrix::from_columns(n, &columns);
    let transformed = similarity_transform(ss, &t).expect("T is nonsingular by construction");
    KalmanDecomposition { t, transformed, groups: Groups::from_dims(q, k, l, n) }
}

/// Controllable and observable part of the Kalman decomposition; realizes
/// the same transfer matrix with the fewest states.
pub fn minimal_realization(ss: &StateSpace) -> StateSpace {
    kalman_decompose(ss).minimal()
}
