//! State models `ẋ = Ax + Bu, y = Cx`, their transfer matrices and impulse
//! responses.

mod impulse;
mod resolvent;

pub use impulse::{impulse_response, ImpulseRecord};
pub use resolvent::{char_poly, eval_poly_at_matrix, faddeev_leverrier, transfer_matrix, Resolvent};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// The triple `(A, B, C)` with `A: n×n`, `B: n×r`, `C: m×n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StateSpace {
    a: Matrix,
    b: Matrix,
    c: Matrix,
}

impl StateSpace {
    pub fn new(a: Matrix, b: Matrix, c: Matrix) -> Result<Self> {
        if !a.is_square() {
            return Err(Error::Dimension(format!("A must be square, got {}x{}", a.rows(), a.cols())));
        }
        let n = a.rows();
        if b.rows() != n {
            return Err(Error::Dimension(format!("B has {} rows, A is {n}x{n}", b.rows())));
        }
        if c.cols() != n {
            return Err(Error::Dimension(format!("C has {} columns, A is {n}x{n}", c.cols())));
        }
        Ok(Self { a, b, c })
    }

    /// The system with no states, `inputs` inputs and `outputs` outputs.
    pub fn empty(inputs: usize, outputs: usize) -> Self {
        Self { a: Matrix::zeros(0, 0), b: Matrix::zeros(0, inputs), c: Matrix::zeros(outputs, 0) }
    }

    pub fn a(&self) -> &Matrix {
        &self.a
    }

    pub fn b(&self) -> &Matrix {
        &self.b
    }

    pub fn c(&self) -> &Matrix {
        &self.c
    }

    /// State dimension `n`.
    pub fn states(&self) -> usize {
        self.a.rows()
    }

    /// Input count `r`.
    pub fn inputs(&self) -> usize {
        self.b.cols()
    }

    /// Output count `m`.
    pub fn outputs(&self) -> usize {
        self.c.rows()
    }

    pub fn into_parts(self) -> (Matrix, Matrix, Matrix) {
        (self.a, self.b, self.c)
    }

    /// Change of state basis `x = T z`: returns `(T⁻¹AT, T⁻¹B, CT)`.
    pub fn similarity_transform(&self, t: &Matrix) -> Result<Self> {
        similarity_transform(self, t)
    }

    pub fn transfer_matrix(&self) -> crate::tfparse::TransferMatrix {
        transfer_matrix(self)
    }

    /// Keeps the listed states, in order, dropping the rest.
    pub fn restrict(&self, states: &[usize]) -> Self {
        let all_inputs: Vec<usize> = (0..self.inputs()).collect();
        let all_outputs: Vec<usize> = (0..self.outputs()).collect();
        Self {
            a: self.a.select(states, states),
            b: self.b.select(states, &all_inputs),
            c: self.c.select(&all_outputs, states),
        }
    }
}

/// `(T⁻¹AT, T⁻¹B, CT)`; `T`'s columns are the new basis vectors in old
/// coordinates.
pub fn similarity_transform(ss: &StateSpace, t: &Matrix) -> Result<StateSpace> {
    let n = ss.states();
    if t.shape() != (n, n) {
        return Err(Error::Dimension(format!("T is {}x{}, expected {n}x{n}", t.rows(), t.cols())));
    }
    let t_inv = t.inverse()?;
    let a = t_inv.mul(&ss.a)?.mul(t)?;
    let b = t_inv.mul(&ss.b)?;
    let c = ss.c.mul(t)?;
    StateSpace::new(a, b, c)
}

#[derive(Serialize, Deserialize)]
struct StateSpaceWire {
    #[serde(rename = "A")]
    a: Vec<Vec<crate::rational::Coeff>>,
    #[serde(rename = "B")]
    b: Vec<Vec<crate::rational::Coeff>>,
    #[serde(rename = "C")]
    c: Vec<Vec<crate::rational::Coeff>>,
    // Only needed to recover m and r when n = 0.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    inputs: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    outputs: Option<usize>,
}

fn to_wire(m: &Matrix) -> Vec<Vec<crate::rational::Coeff>> {
    m.to_rows().into_iter().map(|r| r.into_iter().map(crate::rational::Coeff).collect()).collect()
}

fn from_wire(rows: Vec<Vec<crate::rational::Coeff>>, cols: Option<usize>) -> Result<Matrix> {
    let cols = cols.or_else(|| rows.first().map(Vec::len)).unwrap_or(0);
    Matrix::from_rows_with_cols(rows.into_iter().map(|r| r.into_iter().map(|c| c.0).collect()).collect(), cols)
}

impl StateSpace {
    /// Decodes `{"A": [[...]], "B": [[...]], "C": [[...]]}`, with optional
    /// `"inputs"`/`"outputs"` counts for the state-free case.
    pub fn from_json(text: &str) -> Result<Self> {
        let wire: StateSpaceWire =
            serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("state-space JSON: {e}")))?;
        Self::from_wire(wire)
    }

    fn from_wire(wire: StateSpaceWire) -> Result<Self> {
        let n = wire.a.len();
        let a = from_wire(wire.a, Some(n))?;
        let b = from_wire(wire.b, if n == 0 { Some(wire.inputs.unwrap_or(0)) } else { None })?;
        let c = from_wire(wire.c, Some(n))?;
        let ss = Self::new(a, b, c)?;
        if let Some(r) = wire.inputs.filter(|&r| r != ss.inputs()) {
            return Err(Error::Dimension(format!("\"inputs\" is {r} but B has {} columns", ss.inputs())));
        }
        if let Some(m) = wire.outputs.filter(|&m| m != ss.outputs()) {
            return Err(Error::Dimension(format!("\"outputs\" is {m} but C has {} rows", ss.outputs())));
        }
        Ok(ss)
    }

    fn to_wire(&self) -> StateSpaceWire {
        let empty = self.states() == 0;
        StateSpaceWire {
            a: to_wire(&self.a),
            b: to_wire(&self.b),
            c: to_wire(&self.c),
            inputs: empty.then(|| self.inputs()),
            outputs: empty.then(|| self.outputs()),
        }
    }
}

impl Serialize for StateSpace {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_wire().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for StateSpace {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Self::from_wire(StateSpaceWire::deserialize(deserializer)?).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::rational::int;

    pub(crate) fn worked_example() -> StateSpace {
        crate::sample::two_input_system()
    }

    #[test]
    fn dimension_checks() {
        let a = Matrix::identity(2);
        assert!(StateSpace::new(Matrix::zeros(2, 3), Matrix::zeros(2, 1), Matrix::zeros(1, 2)).is_err());
        assert!(StateSpace::new(a.clone(), Matrix::zeros(3, 1), Matrix::zeros(1, 2)).is_err());
        assert!(StateSpace::new(a, Matrix::zeros(2, 1), Matrix::zeros(1, 3)).is_err());
    }

    #[test]
    fn identity_and_scaling_transforms() {
        let ss = worked_example();
        assert_eq!(ss.similarity_transform(&Matrix::identity(3)).unwrap(), ss);
        let two = ss.similarity_transform(&Matrix::scalar(3, &int(2))).unwrap();
        assert_eq!(two.a(), ss.a());
        assert_eq!(two.b(), &ss.b().scale(&crate::rational::ratio(1, 2)));
        assert_eq!(two.c(), &ss.c().scale(&int(2)));
        assert!(two.transfer_matrix().exact_eq(&ss.transfer_matrix()));
        let singular = Matrix::from_ints(&[&[1, 1, 0], &[1, 1, 0], &[0, 0, 1]]);
        assert_eq!(ss.similarity_transform(&singular), Err(Error::SingularTransform));
    }

    #[test]
    fn json_round_trip() {
        let ss = worked_example();
        let text = serde_json::to_string(&ss).unwrap();
        assert_eq!(text, r#"{"A":[[-1,0,0],[0,0,1],[0,1,0]],"B":[[1,0],[0,0],[0,1]],"C":[[1,0,1]]}"#);
        assert_eq!(StateSpace::from_json(&text).unwrap(), ss);

        let empty = StateSpace::empty(2, 1);
        let text = serde_json::to_string(&empty).unwrap();
        assert_eq!(text, r#"{"A":[],"B":[],"C":[[]],"inputs":2,"outputs":1}"#);
        assert_eq!(StateSpace::from_json(&text).unwrap(), empty);

        assert!(matches!(StateSpace::from_json(r#"{"A":[[1]],"B":[[1],[2]],"C":[[1]]}"#), Err(Error::Dimension(_))));
        assert!(matches!(StateSpace::from_json("{"), Err(Error::InvalidInput(_))));
        assert!(StateSpace::from_json(r#"{"A":[["1/2"]],"B":[["0.5"]],"C":[[1]]}"#).is_ok());
    }
}
