use std::fmt;

use serde::Serialize;

use crate::error::SequencyError;
use crate::vector::SignVector;

/// A square matrix over {+1, -1}, stored as packed columns.
///
/// Rows and columns are 0-indexed; `sign(i, j)` reads row `i` of column `j`.
#[derive(Clone, PartialEq, Eq)]
pub struct SignMatrix {
    columns: Vec<SignVector>,
    order: usize,
}

impl SignMatrix {
    /// Assembles a matrix from its columns. All columns must share one length
    /// equal to the number of columns.
    pub fn from_columns(columns: Vec<SignVector>) -> Result<Self, SequencyError> {
        if columns.is_empty() {
            return Err(SequencyError::EmptyVector);
        }
        let order = columns[0].len();
        for c in &columns {
            if c.len() != order {
                return Err(SequencyError::ColumnLengthMismatch {
                    expected: order,
                    found: c.len(),
                });
            }
        }
        if columns.len() != order {
            return Err(SequencyError::NotSquare {
                rows: order,
                cols: columns.len(),
            });
        }
        Ok(Self { columns, order })
    }

    /// Builds a matrix from row-major ±1 entries.
    pub fn from_rows(rows: &[Vec<i8>]) -> Result<Self, SequencyError> {
        let n = rows.len();
        if n == 0 {
            return Err(SequencyError::EmptyVector);
        }
        for row in rows {
            if row.len() != n {
                return Err(SequencyError::NotSquare {
                    rows: n,
                    cols: row.len(),
                });
            }
        }
        let mut columns = Vec::with_capacity(n);
        for j in 0..n {
            let col: Vec<i8> = (0..n).map(|i| rows[i][j]).collect();
            columns.push(SignVector::from_signs(&col)?);
        }
        Ok(Self { columns, order: n })
    }

    /// Builds an `order` x `order` matrix where entry (i, j) is -1 exactly
    /// when `negative(i, j)` returns true.
    pub(crate) fn build(order: usize, mut negative: impl FnMut(usize, usize) -> bool) -> Self {
        debug_assert!(order >= 1);
        let columns = (0..order)
            .map(|j| SignVector::from_neg_bits(order, |i| negative(i, j)))
            .collect();
        Self { columns, order }
    }

    /// Projects a real square matrix onto signs: positive entries map to +1,
    /// negative entries to -1, and exact zeros to +1. Non-finite entries are
    /// rejected.
    pub fn project_real(rows: &[Vec<f64>]) -> Result<Self, SequencyError> {
        let n = rows.len();
        if n == 0 {
            return Err(SequencyError::EmptyVector);
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(SequencyError::NotSquare {
                    rows: n,
                    cols: row.len(),
                });
            }
            for (j, &x) in row.iter().enumerate() {
                if !x.is_finite() {
                    return Err(SequencyError::NonFiniteEntry { row: i, col: j });
                }
            }
        }
        Ok(Self::build(n, |i, j| rows[i][j] < 0.0))
    }

    /// Number of rows (equal to the number of columns).
    pub fn order(&self) -> usize {
        self.order
    }

    /// Sign at row `i`, column `j`. Panics if out of bounds.
    pub fn sign(&self, i: usize, j: usize) -> i8 {
        self.columns[j].sign(i)
    }

    #[inline]
    pub(crate) fn is_negative(&self, i: usize, j: usize) -> bool {
        self.columns[j].is_negative(i)
    }

    pub fn column(&self, j: usize) -> &SignVector {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[SignVector] {
        &self.columns
    }

    /// Row-major copy of the entries as +1/-1 values.
    pub fn to_rows(&self) -> Vec<Vec<i8>> {
        (0..self.order)
            .map(|i| (0..self.order).map(|j| self.sign(i, j)).collect())
            .collect()
    }

    /// Per-column sequencies, in column order.
    pub fn profile(&self) -> SequencyProfile {
        SequencyProfile(self.columns.iter().map(SignVector::sequency).collect())
    }

    /// A copy of the matrix with columns rearranged in order of ascending
    /// sequency (stable with respect to the original column order).
    pub fn columns_sorted_by_sequency(&self) -> SignMatrix {
        let mut indices: Vec<usize> = (0..self.order).collect();
        indices.sort_by_key(|&j| self.columns[j].sequency());
        let columns = indices.iter().map(|&j| self.columns[j].clone()).collect();
        Self {
            columns,
            order: self.order,
        }
    }

    /// A copy with columns rearranged so that new column `j` is old column
    /// `permutation[j]`. The slice must be a permutation of 0..order.
    pub fn permuted_columns(&self, permutation: &[usize]) -> Result<SignMatrix, SequencyError> {
        if permutation.len() != self.order {
            return Err(SequencyError::NotSquare {
                rows: self.order,
                cols: permutation.len(),
            });
        }
        let mut seen = vec![false; self.order];
        for &j in permutation {
            if j >= self.order || seen[j] {
                return Err(SequencyError::IndexOutOfRange {
                    what: "column index",
                    index: j,
                    limit: self.order,
                });
            }
            seen[j] = true;
        }
        let columns = permutation
            .iter()
            .map(|&j| self.columns[j].clone())
            .collect();
        Ok(Self {
            columns,
            order: self.order,
        })
    }

    /// True when all pairs of distinct columns have zero dot product
    /// (exact integer arithmetic).
    pub fn is_orthogonal(&self) -> bool {
        let n = self.order as i64;
        for a in 0..self.order {
            for b in a + 1..self.order {
                let distance = self.columns[a].hamming_distance(&self.columns[b]) as i64;
                if n - 2 * distance != 0 {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for SignMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.order {
            for j in 0..self.order {
                f.write_str(if self.is_negative(i, j) { "-" } else { "+" })?;
            }
            if i + 1 < self.order {
                f.write_str("\n")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SignMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignMatrix(order {})\n{self}", self.order)
    }
}

/// Per-column sequencies of a matrix. Serializes as a plain integer array.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(transparent)]
pub struct SequencyProfile(Vec<usize>);

impl SequencyProfile {
    pub(crate) fn new(values: Vec<usize>) -> Self {
        Self(values)
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl fmt::Display for SequencyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_rows_requires_square() {
        let err = SignMatrix::from_rows(&[vec![1, -1], vec![1]]).unwrap_err();
        assert_eq!(err, SequencyError::NotSquare { rows: 2, cols: 1 });
    }

    #[test]
    fn from_columns_rejects_mismatched_lengths() {
        let a = SignVector::from_signs(&[1, -1]).unwrap();
        let b = SignVector::from_signs(&[1, -1, 1]).unwrap();
        let err = SignMatrix::from_columns(vec![a, b]).unwrap_err();
        assert_eq!(
            err,
            SequencyError::ColumnLengthMismatch {
                expected: 2,
                found: 3
            }
        );
    }

    #[test]
    fn project_real_zero_maps_to_plus_one() {
        let m = SignMatrix::project_real(&[vec![0.0]]).unwrap();
        assert_eq!(m.sign(0, 0), 1);
    }

    #[test]
    fn project_real_extracts_signs() {
        let m = SignMatrix::project_real(&[vec![-3.2, 5.0], vec![7.0, -0.1]]).unwrap();
        assert_eq!(m.to_rows(), vec![vec![-1, 1], vec![1, -1]]);
    }

    #[test]
    fn project_real_identity_goes_all_plus() {
        let m = SignMatrix::project_real(&[vec![1.0, 0.0], vec![0.0, 1.0]]).unwrap();
        assert_eq!(m.to_rows(), vec![vec![1, 1], vec![1, 1]]);
    }

    #[test]
    fn project_real_rejects_non_finite() {
        let err = SignMatrix::project_real(&[vec![1.0, f64::NAN], vec![0.0, 1.0]]).unwrap_err();
        assert_eq!(err, SequencyError::NonFiniteEntry { row: 0, col: 1 });
        let err =
            SignMatrix::project_real(&[vec![1.0, 1.0], vec![f64::INFINITY, 1.0]]).unwrap_err();
        assert_eq!(err, SequencyError::NonFiniteEntry { row: 1, col: 0 });
    }

    #[test]
    fn project_real_is_idempotent_on_sign_matrices() {
        let rows = vec![vec![1.0, -1.0], vec![-1.0, 1.0]];
        let once = SignMatrix::project_real(&rows).unwrap();
        let as_real: Vec<Vec<f64>> = once
            .to_rows()
            .iter()
            .map(|r| r.iter().map(|&s| f64::from(s)).collect())
            .collect();
        let twice = SignMatrix::project_real(&as_real).unwrap();
        assert_eq!(once, twice);
    }

    #[test]
    fn profile_of_all_ones_is_zero() {
        let m = SignMatrix::from_rows(&[vec![1, 1, 1], vec![1, 1, 1], vec![1, 1, 1]]).unwrap();
        assert_eq!(m.profile().values(), &[0, 0, 0]);
    }

    #[test]
    fn sorted_columns_are_nondecreasing_in_sequency() {
        let m = SignMatrix::from_rows(&[
            vec![1, 1, 1, 1],
            vec![-1, 1, 1, -1],
            vec![1, 1, -1, 1],
            vec![-1, 1, 1, 1],
        ])
        .unwrap();
        let sorted = m.columns_sorted_by_sequency();
        let profile = sorted.profile().into_vec();
        assert!(profile.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn orthogonality_detects_hadamard() {
        let h2 = SignMatrix::from_rows(&[vec![1, 1], vec![1, -1]]).unwrap();
        assert!(h2.is_orthogonal());
        let not = SignMatrix::from_rows(&[vec![1, 1], vec![1, 1]]).unwrap();
        assert!(!not.is_orthogonal());
    }

    #[test]
    fn permuted_columns_validates_permutation() {
        let m = SignMatrix::from_rows(&[vec![1, 1], vec![1, -1]]).unwrap();
        assert!(m.permuted_columns(&[1, 0]).is_ok());
        assert!(m.permuted_columns(&[0, 0]).is_err());
        assert!(m.permuted_columns(&[0, 2]).is_err());
        assert!(m.permuted_columns(&[0]).is_err());
    }

    #[test]
    fn profile_serializes_as_integer_array() {
        let m = SignMatrix::from_rows(&[vec![1, 1], vec![1, -1]]).unwrap();
        let json = serde_json::to_string(&m.profile()).unwrap();
        assert_eq!(json, "[0,1]");
    }
}
