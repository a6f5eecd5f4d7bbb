//! End-to-end check that a state model realizes a transfer matrix.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ratfunc::RationalFunction;
use crate::realize::realize_mimo;
use crate::statespace::{transfer_matrix, StateSpace};
use crate::structure::minimal_realization;
use crate::tfparse::TransferMatrix;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EntryCheck {
    /// 1-based row and column.
    pub row: usize,
    pub col: usize,
    pub expected: String,
    pub realized: String,
    pub minimal: String,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub passed: bool,
    pub states: usize,
    pub minimal_states: usize,
    pub entries: Vec<EntryCheck>,
}

impl VerifyReport {
    pub fn failures(&self) -> impl Iterator<Item = &EntryCheck> {
        self.entries.iter().filter(|e| !e.ok)
    }
}

/// Checks `C(sI − A)⁻¹B = G` and that minimal realization preserves it.
/// Without `state`, the companion realization of `G` is checked.
pub fn verify_realization(g: &TransferMatrix, state: Option<&StateSpace>) -> Result<VerifyReport> {
    let realized_owned;
    let ss = match state {
        Some(ss) => ss,
        None => {
            realized_owned = realize_mimo(g)?;
            &realized_owned
        }
    };
    if (ss.outputs(), ss.inputs()) != (g.rows(), g.cols()) {
        return Err(Error::Dimension(format!(
            "state model has {} outputs and {} inputs, transfer matrix is {}x{}",
            ss.outputs(),
            ss.inputs(),
            g.rows(),
            g.cols()
        )));
    }
    let realized = transfer_matrix(ss);
    let min = minimal_realization(ss);
    let reduced = transfer_matrix(&min);
    let entries: Vec<EntryCheck> = g
        .iter()
        .map(|((i, j), expected)| {
            let (r, m): (&RationalFunction, &RationalFunction) = (realized.get(i, j), reduced.get(i, j));
            EntryCheck {
                row: i + 1,
                col: j + 1,
                expected: expected.to_string(),
                realized: r.to_string(),
                minimal: m.to_string(),
                ok: r.exact_eq(expected) && m.exact_eq(expected),
            }
        })
        .collect();
    Ok(VerifyReport {
        passed: entries.iter().all(|e| e.ok),
        states: ss.states(),
        minimal_states: min.states(),
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Matrix;
    use crate::sample::{two_input_system, two_input_transfer};

    #[test]
    fn companion_realization_verifies() {
        let report = verify_realization(&two_input_transfer(), None).unwrap();
        assert!(report.passed);
        assert_eq!((report.states, report.minimal_states, report.entries.len()), (3, 2, 2));
    }

    #[test]
    fn corrupted_state_fails() {
        let ss = two_input_system();
        let mut a = ss.a().clone();
        a[(0, 0)] = crate::rational::int(-2);
        let bad = StateSpace::new(a, ss.b().clone(), ss.c().clone()).unwrap();
        let report = verify_realization(&two_input_transfer(), Some(&bad)).unwrap();
        assert!(!report.passed);
        let fail: Vec<_> = report.failures().collect();
        assert_eq!(fail.len(), 1);
        assert_eq!((fail[0].row, fail[0].col), (1, 1));
        assert_eq!(fail[0].realized, "1/(s + 2)");
    }

    #[test]
    fn shape_mismatch_is_an_error() {
        let ss = StateSpace::new(Matrix::identity(1), Matrix::identity(1), Matrix::identity(1)).unwrap();
        assert!(matches!(verify_realization(&two_input_transfer(), Some(&ss)), Err(Error::Dimension(_))));
    }
}
