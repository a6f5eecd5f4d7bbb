use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ratfunc::RationalFunction;

/// An `m × r` grid of normalized rational functions `G(s)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TransferMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<RationalFunction>,
}

impl TransferMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<RationalFunction>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Shape(format!("transfer matrix must be at least 1x1, got {rows}x{cols}")));
        }
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!("{} entries do not fill a {rows}x{cols} grid", entries.len())));
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<RationalFunction>>) -> Result<Self> {
        let m = rows.len();
        let r = rows.first().map_or(0, Vec::len);
        if let Some(i) = rows.iter().position(|row| row.len() != r) {
            return Err(Error::Shape(format!("row {} has {} entries, row 1 has {r}", i + 1, rows[i].len())));
        }
        Self::new(m, r, rows.into_iter().flatten().collect())
    }

    /// All-zero `rows × cols` matrix. Zero-sized shapes are allowed here so
    /// that systems without inputs or outputs have a transfer matrix.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![RationalFunction::zero(); rows * cols] }
    }

    pub(crate) fn from_parts(rows: usize, cols: usize, entries: Vec<RationalFunction>) -> Self {
        debug_assert_eq!(entries.len(), rows * cols);
        Self { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &RationalFunction {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of range");
        &self.entries[i * self.cols + j]
    }

    /// Entries with their `(row, col)` indices in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), &RationalFunction)> {
        self.entries.iter().enumerate().map(move |(k, f)| ((k / self.cols, k % self.cols), f))
    }

    pub fn to_rows(&self) -> Vec<Vec<RationalFunction>> {
        if self.cols == 0 {
            return vec![Vec::new(); self.rows];
        }
        self.entries.chunks(self.cols).map(<[_]>::to_vec).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(RationalFunction::is_zero)
    }

    /// Entrywise cross-multiplication equality.
    pub fn exact_eq(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.entries.iter().zip(&other.entries).all(|(a, b)| a.exact_eq(b))
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        Self { rows: self.cols, cols: self.rows, entries }
    }
}

#[derive(Serialize, Deserialize)]
struct TransferMatrixWire {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<RationalFunction>>,
}

impl Serialize for TransferMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        TransferMatrixWire { rows: self.rows, cols: self.cols, entries: self.to_rows() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TransferMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let wire = TransferMatrixWire::deserialize(deserializer)?;
        if wire.entries.len() != wire.rows || wire.entries.iter().any(|r| r.len() != wire.cols) {
            return Err(D::Error::custom(format!("entries do not form the declared {}x{} grid", wire.rows, wire.cols)));
        }
        let (rows, cols) = (wire.rows, wire.cols);
        let entries = wire.entries.into_iter().flatten().collect();
        if rows == 0 || cols == 0 {
            return Ok(Self::from_parts(rows, cols, entries));
        }
        TransferMatrix::new(rows, cols, entries).map_err(D::Error::custom)
    }
}
