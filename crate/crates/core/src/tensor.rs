//! Kronecker products of sign matrices and closed-form sequency prediction
//! for their columns.
//!
//! A column of `A ⊗ B` is addressed by a digit pair `(k1, k0)`: the product
//! column `q0*k1 + k0` is the elementwise product of column `k1` of `A`
//! (stretched) with column `k0` of `B` (tiled). Its sequency is determined by
//! the factor columns' sequencies and boundary flips alone, which is what
//! [`predict_pair`] and [`predict_nfold`] compute without materializing the
//! product.

use crate::error::SequencyError;
use crate::matrix::SignMatrix;
use crate::vector::SignVector;

/// Kronecker product of two square sign matrices. The result has order
/// `a.order() * b.order()`; entry `(q0*i1 + i0, q0*k1 + k0)` equals
/// `a[i1, k1] * b[i0, k0]`.
pub fn kronecker(a: &SignMatrix, b: &SignMatrix) -> SignMatrix {
    let qa = a.order();
    let qb = b.order();
    let n = qa * qb;
    let columns: Vec<SignVector> = (0..n)
        .map(|k| {
            let (k1, k0) = (k / qb, k % qb);
            SignVector::from_neg_bits(n, |i| {
                a.is_negative(i / qb, k1) ^ b.is_negative(i % qb, k0)
            })
        })
        .collect();
    SignMatrix::from_columns(columns).expect("kronecker product of squares is square")
}

/// `exponent`-fold Kronecker power of `a`; the zeroth power is the 1x1
/// all-(+1) matrix.
pub fn kronecker_power(a: &SignMatrix, exponent: u32) -> SignMatrix {
    let mut out = SignMatrix::build(1, |_, _| false);
    for _ in 0..exponent {
        out = kronecker(&out, a);
    }
    out
}

/// Single column `q0*k1 + k0` of `a ⊗ b`, built without forming the product.
pub fn kronecker_column(
    a: &SignMatrix,
    b: &SignMatrix,
    k1: usize,
    k0: usize,
) -> Result<SignVector, SequencyError> {
    check_index("column index", k1, a.order())?;
    check_index("column index", k0, b.order())?;
    let qb = b.order();
    let n = a.order() * qb;
    Ok(SignVector::from_neg_bits(n, |i| {
        a.is_negative(i / qb, k1) ^ b.is_negative(i % qb, k0)
    }))
}

/// Single column of the n-fold Kronecker power of `a`, addressed by a
/// mixed-radix index in base `a.order()`.
pub fn kronecker_power_column(
    a: &SignMatrix,
    index: &MixedRadixIndex,
) -> Result<SignVector, SequencyError> {
    let q = a.order();
    if index.base() != q {
        return Err(SequencyError::BaseMismatch {
            index_base: index.base(),
            columns: q,
        });
    }
    let digits = index.digits();
    let n = digits.len();
    let len = q
        .checked_pow(n as u32)
        .ok_or(SequencyError::Overflow("kronecker power column length"))?;
    // Entry i has base-q digits (i_{n-1}, ..., i_0); the entry is the product
    // of a[i_r, k_r] over all digit positions.
    Ok(SignVector::from_neg_bits(len, |i| {
        let mut rem = i;
        let mut negative = false;
        for r in 0..n {
            let i_r = rem % q;
            rem /= q;
            negative ^= a.is_negative(i_r, digits[n - 1 - r]);
        }
        negative
    }))
}

fn check_index(what: &'static str, index: usize, limit: usize) -> Result<(), SequencyError> {
    if index >= limit {
        return Err(SequencyError::IndexOutOfRange { what, index, limit });
    }
    Ok(())
}

/// Per-column sequency and boundary flip of one factor matrix: everything
/// the prediction formulas need, in O(q) space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorSummary {
    sequencies: Vec<usize>,
    boundary_flips: Vec<u8>,
}

impl FactorSummary {
    pub fn of(matrix: &SignMatrix) -> Self {
        Self {
            sequencies: matrix.columns().iter().map(SignVector::sequency).collect(),
            boundary_flips: matrix
                .columns()
                .iter()
                .map(SignVector::boundary_flip)
                .collect(),
        }
    }

    pub fn column_count(&self) -> usize {
        self.sequencies.len()
    }

    pub fn sequencies(&self) -> &[usize] {
        &self.sequencies
    }

    pub fn boundary_flips(&self) -> &[u8] {
        &self.boundary_flips
    }

    fn require_pair_capable(&self) -> Result<(), SequencyError> {
        if self.column_count() < 2 {
            return Err(SequencyError::SizeTooSmall {
                n: self.column_count(),
                min: 2,
            });
        }
        Ok(())
    }
}

/// Sequency of column `q0*k1 + k0` of `A ⊗ B` from the factor summaries:
/// `q1*S_B(k0) + (q1-1)*p_B(k0) + (-1)^{p_B(k0)} * S_A(k1)`,
/// where `q1` is the order of `A` and `p` is the boundary flip.
///
/// Both factors must have at least two columns; a 1x1 factor is the identity
/// for the product itself and needs no prediction.
pub fn predict_pair(
    left: &FactorSummary,
    right: &FactorSummary,
    k1: usize,
    k0: usize,
) -> Result<usize, SequencyError> {
    left.require_pair_capable()?;
    right.require_pair_capable()?;
    check_index("column index", k1, left.column_count())?;
    check_index("column index", k0, right.column_count())?;
    let q1 = left.column_count() as i64;
    let s_right = right.sequencies[k0] as i64;
    let p_right = i64::from(right.boundary_flips[k0]);
    let s_left = left.sequencies[k1] as i64;
    let sign = 1 - 2 * p_right;
    let value = q1 * s_right + (q1 - 1) * p_right + sign * s_left;
    debug_assert!(value >= 0);
    Ok(value as usize)
}

/// [`predict_pair`] specialized to `A ⊗ A`.
pub fn predict_pair_special(
    factor: &FactorSummary,
    k1: usize,
    k0: usize,
) -> Result<usize, SequencyError> {
    predict_pair(factor, factor, k1, k0)
}

/// Sequency of one column of the n-fold Kronecker power of a single factor,
/// computed in O(n) from the factor summary.
///
/// For digits `(k_{n-1}, ..., k_0)` in base `q` the value is
/// `sum over r of (-1)^(p_{k_0} + ... + p_{k_{r-1}}) *
/// (q^{n-1-r} * S(k_r) + (q^{n-1-r} - 1) * p_{k_r})`,
/// with an empty flip sum at `r = 0`.
pub fn predict_nfold(
    factor: &FactorSummary,
    index: &MixedRadixIndex,
) -> Result<usize, SequencyError> {
    factor.require_pair_capable()?;
    let q = factor.column_count();
    if index.base() != q {
        return Err(SequencyError::BaseMismatch {
            index_base: index.base(),
            columns: q,
        });
    }
    let digits = index.digits();
    let n = digits.len();
    let mut total: i128 = 0;
    let mut flip_parity: u32 = 0;
    for r in 0..n {
        let k_r = digits[n - 1 - r];
        let s = factor.sequencies[k_r] as i128;
        let p = i128::from(factor.boundary_flips[k_r]);
        let power: i128 = (q as u128)
            .checked_pow((n - 1 - r) as u32)
            .and_then(|v| i128::try_from(v).ok())
            .ok_or(SequencyError::Overflow("factor order power"))?;
        let term = power
            .checked_mul(s)
            .and_then(|v| v.checked_add((power - 1) * p))
            .ok_or(SequencyError::Overflow("predicted sequency"))?;
        let signed = if flip_parity % 2 == 0 { term } else { -term };
        total = total
            .checked_add(signed)
            .ok_or(SequencyError::Overflow("predicted sequency"))?;
        flip_parity += p as u32;
    }
    debug_assert!(total >= 0);
    usize::try_from(total).map_err(|_| SequencyError::Overflow("predicted sequency"))
}

/// Closed-form column sequency of the 25x25 product of the order-5
/// sequency-ordered matrix with itself, as a residue-class formula in the
/// column index.
pub fn mod_residue_profile_5(j: usize) -> Result<usize, SequencyError> {
    check_index("column index", j, 25)?;
    Ok(match j % 5 {
        0 => j / 5,
        1 => 9 - (j - 1) / 5,
        2 => 10 + (j - 2) / 5,
        3 => 19 - (j - 3) / 5,
        _ => 20 + (j - 4) / 5,
    })
}

/// Digits `(k_{n-1}, ..., k_0)` in a fixed base, addressing a column of an
/// n-fold Kronecker power. The most significant digit comes first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedRadixIndex {
    digits: Vec<usize>,
    base: usize,
    value: usize,
}

impl MixedRadixIndex {
    /// Validates the digits against the base and precomputes the flat value.
    pub fn new(digits: Vec<usize>, base: usize) -> Result<Self, SequencyError> {
        if digits.is_empty() {
            return Err(SequencyError::EmptyVector);
        }
        if base < 1 {
            return Err(SequencyError::SizeTooSmall { n: base, min: 1 });
        }
        let mut value: usize = 0;
        for (position, &digit) in digits.iter().enumerate() {
            if digit >= base {
                return Err(SequencyError::InvalidDigit {
                    position,
                    digit,
                    base,
                });
            }
            value = value
                .checked_mul(base)
                .and_then(|v| v.checked_add(digit))
                .ok_or(SequencyError::Overflow("mixed-radix value"))?;
        }
        Ok(Self {
            digits,
            base,
            value,
        })
    }

    /// Expands a flat column index into `digit_count` base-`base` digits.
    pub fn from_value(
        value: usize,
        base: usize,
        digit_count: usize,
    ) -> Result<Self, SequencyError> {
        if digit_count == 0 {
            return Err(SequencyError::EmptyVector);
        }
        if base < 1 {
            return Err(SequencyError::SizeTooSmall { n: base, min: 1 });
        }
        let mut digits = vec![0usize; digit_count];
        let mut rem = value;
        for slot in digits.iter_mut().rev() {
            *slot = rem % base;
            rem /= base;
        }
        if rem != 0 {
            let limit = base.checked_pow(digit_count as u32).unwrap_or(usize::MAX);
            return Err(SequencyError::IndexOutOfRange {
                what: "column index",
                index: value,
                limit,
            });
        }
        Ok(Self {
            digits,
            base,
            value,
        })
    }

    /// Digits, most significant first.
    pub fn digits(&self) -> &[usize] {
        &self.digits
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn digit_count(&self) -> usize {
        self.digits.len()
    }

    /// The flat column index `sum of k_r * base^r`.
    pub fn value(&self) -> usize {
        self.value
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h2() -> SignMatrix {
        SignMatrix::from_rows(&[vec![1, 1], vec![1, -1]]).unwrap()
    }

    #[test]
    fn kronecker_of_h2_with_itself() {
        let m = kronecker(&h2(), &h2());
        assert_eq!(m.order(), 4);
        assert_eq!(m.profile().values(), &[0, 3, 1, 2]);
        assert_eq!(
            m.to_rows(),
            vec![
                vec![1, 1, 1, 1],
                vec![1, -1, 1, -1],
                vec![1, 1, -1, -1],
                vec![1, -1, -1, 1],
            ]
        );
    }

    #[test]
    fn one_by_one_factor_is_identity() {
        let a = SignMatrix::from_rows(&[vec![1, -1, 1], vec![-1, 1, 1], vec![1, 1, -1]]).unwrap();
        let unit = SignMatrix::from_rows(&[vec![1]]).unwrap();
        assert_eq!(kronecker(&a, &unit), a);
        assert_eq!(kronecker(&unit, &a), a);
    }

    #[test]
    fn kronecker_column_matches_full_product() {
        let a = SignMatrix::from_rows(&[vec![1, -1, 1], vec![-1, 1, 1], vec![1, 1, -1]]).unwrap();
        let b = h2();
        let full = kronecker(&a, &b);
        for k1 in 0..3 {
            for k0 in 0..2 {
                let col = kronecker_column(&a, &b, k1, k0).unwrap();
                assert_eq!(&col, full.column(2 * k1 + k0));
            }
        }
        assert!(kronecker_column(&a, &b, 3, 0).is_err());
    }

    #[test]
    fn power_column_matches_full_power() {
        let a = h2();
        let full = kronecker_power(&a, 3);
        for k in 0..8 {
            let index = MixedRadixIndex::from_value(k, 2, 3).unwrap();
            let col = kronecker_power_column(&a, &index).unwrap();
            assert_eq!(&col, full.column(k), "column {k}");
        }
    }

    #[test]
    fn predict_pair_on_h2() {
        let s = FactorSummary::of(&h2());
        assert_eq!(predict_pair(&s, &s, 0, 1).unwrap(), 3);
        assert_eq!(predict_pair_special(&s, 1, 1).unwrap(), 2);
        assert_eq!(predict_pair_special(&s, 0, 0).unwrap(), 0);
        assert!(predict_pair(&s, &s, 2, 0).is_err());
    }

    #[test]
    fn predict_rejects_one_column_factors() {
        let unit = FactorSummary::of(&SignMatrix::from_rows(&[vec![1]]).unwrap());
        assert_eq!(
            predict_pair_special(&unit, 0, 0),
            Err(SequencyError::SizeTooSmall { n: 1, min: 2 })
        );
    }

    #[test]
    fn nfold_on_h2_all_ones_digits() {
        let s = FactorSummary::of(&h2());
        let index = MixedRadixIndex::new(vec![1, 1, 1], 2).unwrap();
        assert_eq!(predict_nfold(&s, &index).unwrap(), 5);
        let zero = MixedRadixIndex::new(vec![0, 0, 0], 2).unwrap();
        assert_eq!(predict_nfold(&s, &zero).unwrap(), 0);
    }

    #[test]
    fn nfold_reduces_to_pair_at_two_digits() {
        let s = FactorSummary::of(&h2());
        for k1 in 0..2 {
            for k0 in 0..2 {
                let index = MixedRadixIndex::new(vec![k1, k0], 2).unwrap();
                assert_eq!(
                    predict_nfold(&s, &index).unwrap(),
                    predict_pair_special(&s, k1, k0).unwrap()
                );
            }
        }
    }

    #[test]
    fn nfold_base_must_match_factor() {
        let s = FactorSummary::of(&h2());
        let index = MixedRadixIndex::new(vec![2, 0], 3).unwrap();
        assert_eq!(
            predict_nfold(&s, &index),
            Err(SequencyError::BaseMismatch {
                index_base: 3,
                columns: 2
            })
        );
    }

    #[test]
    fn mod_residue_profile_examples() {
        assert_eq!(mod_residue_profile_5(0).unwrap(), 0);
        assert_eq!(mod_residue_profile_5(6).unwrap(), 8);
        assert_eq!(mod_residue_profile_5(24).unwrap(), 24);
        assert!(mod_residue_profile_5(25).is_err());
    }

    #[test]
    fn mixed_radix_round_trip() {
        let idx = MixedRadixIndex::new(vec![2, 0, 1], 3).unwrap();
        assert_eq!(idx.value(), 19);
        let back = MixedRadixIndex::from_value(19, 3, 3).unwrap();
        assert_eq!(back, idx);
        // single digit: value equals the digit
        assert_eq!(MixedRadixIndex::new(vec![4], 5).unwrap().value(), 4);
        assert_eq!(
            MixedRadixIndex::new(vec![3, 1], 3),
            Err(SequencyError::InvalidDigit {
                position: 0,
                digit: 3,
                base: 3
            })
        );
        assert!(MixedRadixIndex::from_value(9, 3, 2).is_err());
    }
}
