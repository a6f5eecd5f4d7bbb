use std::fmt;

use super::TransferMatrix;

/// Canonical text form: entries joined by `, `, rows by `; `.
pub fn print_transfer_matrix(g: &TransferMatrix) -> String {
    let rows: Vec<String> =
        g.to_rows().iter().map(|row| row.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")).collect();
    format!("[{}]", rows.join("; "))
}

impl fmt::Display for TransferMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_transfer_matrix(self))
    }
}
