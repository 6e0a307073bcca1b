use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::laurent::det_bigint;

use super::InvariantError;

/// A Seifert matrix: a square integer matrix `A` with `A - Aᵗ`
/// unimodular (the defining property of the Seifert pairing on a basis
/// of a genus-g spanning surface, size 2g).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertMatrix {
    entries: Vec<Vec<BigInt>>,
}

impl SeifertMatrix {
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self, InvariantError> {
        Self::from_bigint(
            entries
                .into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect(),
        )
    }

    pub fn from_bigint(entries: Vec<Vec<BigInt>>) -> Result<Self, InvariantError> {
        let n = entries.len();
        if entries.iter().any(|r| r.len() != n) {
            return Err(InvariantError::BadSeifertMatrix("matrix is not square".into()));
        }
        // A - Aᵗ must be unimodular.
        let skew: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| &entries[i][j] - &entries[j][i]).collect())
            .collect();
        let det = det_bigint(skew);
        if !det.abs().is_one() {
            return Err(InvariantError::BadSeifertMatrix(format!(
                "det(A - Aᵗ) = {det}, expected ±1"
            )));
        }
        Ok(Self { entries })
    }

    /// The 0×0 matrix of the unknot.
    pub fn empty() -> Self {
        Self { entries: vec![] }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<BigInt>] {
        &self.entries
    }

    /// Parse either a JSON integer matrix `[[0,2],[1,0]]` or CSV rows.
    pub fn parse(text: &str) -> Result<Self, InvariantError> {
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Ok(Self::empty());
        }
        if trimmed.starts_with('[') {
            let rows: Vec<Vec<i64>> = serde_json::from_str(trimmed)
                .map_err(|e| InvariantError::BadSeifertMatrix(format!("bad JSON: {e}")))?;
            return Self::new(rows);
        }
        let mut rows = Vec::new();
        for line in trimmed.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let row: Result<Vec<i64>, _> =
                line.split(',').map(|t| t.trim().parse::<i64>()).collect();
            rows.push(row.map_err(|e| {
                InvariantError::BadSeifertMatrix(format!("bad CSV entry: {e}"))
            })?);
        }
        Self::new(rows)
    }
}
