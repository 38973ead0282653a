//! Constructors for the built-in sign-matrix families.
//!
//! Three parametric families exist for every order n >= 2:
//!
//! * [`power_residue`]: entry (i, j) is `(-1)^(i*j mod n)`. Sequency-complete
//!   for odd n, sequency-incomplete for even n > 2.
//! * [`threshold`]: +1 exactly when `i*j mod n` falls below `ceil(n/2)`.
//!   Sequency-complete for every n.
//! * [`ordered_threshold`]: +1 exactly when `floor(i*(j+1)/2) mod n` falls
//!   below a parity-dependent cutoff. Sequency-ordered for every n: column j
//!   has sequency exactly j.
//!
//! Walsh-Hadamard matrices come in two column orders: [`walsh_natural`] is
//! the plain Kronecker power of the order-2 Hadamard matrix and
//! [`walsh_sequency`] samples the Walsh basis functions at interval
//! midpoints, which arranges the same columns by ascending sequency.
//!
//! All construction is exact integer arithmetic; no floating point is
//! involved anywhere.

use crate::error::SequencyError;
use crate::matrix::{SequencyProfile, SignMatrix};
use crate::tensor::kronecker_power;

/// The matrix families exposed by this crate, for dispatch by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorKind {
    PowerResidue,
    Threshold,
    OrderedThreshold,
    WalshNatural,
    WalshSequency,
}

impl GeneratorKind {
    pub const ALL: [GeneratorKind; 5] = [
        GeneratorKind::PowerResidue,
        GeneratorKind::Threshold,
        GeneratorKind::OrderedThreshold,
        GeneratorKind::WalshNatural,
        GeneratorKind::WalshSequency,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GeneratorKind::PowerResidue => "power-residue",
            GeneratorKind::Threshold => "threshold",
            GeneratorKind::OrderedThreshold => "ordered-threshold",
            GeneratorKind::WalshNatural => "walsh-natural",
            GeneratorKind::WalshSequency => "walsh-sequency",
        }
    }

    /// Runs the matching constructor for size `n`.
    pub fn generate(self, n: usize) -> Result<SignMatrix, SequencyError> {
        match self {
            GeneratorKind::PowerResidue => power_residue(n),
            GeneratorKind::Threshold => threshold(n),
            GeneratorKind::OrderedThreshold => ordered_threshold(n),
            GeneratorKind::WalshNatural => walsh_natural(n),
            GeneratorKind::WalshSequency => walsh_sequency(n),
        }
    }
}

impl std::str::FromStr for GeneratorKind {
    type Err = SequencyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| SequencyError::Parse {
                line: 1,
                column: 1,
                message: format!(
                    "unknown generator kind {s:?}; expected one of power-residue, threshold, \
                     ordered-threshold, walsh-natural, walsh-sequency"
                ),
            })
    }
}

fn require_at_least(n: usize, min: usize) -> Result<(), SequencyError> {
    if n < min {
        return Err(SequencyError::SizeTooSmall { n, min });
    }
    Ok(())
}

/// Matrix with entry (i, j) equal to `(-1)^t` where `i*j = t mod n`.
pub fn power_residue(n: usize) -> Result<SignMatrix, SequencyError> {
    require_at_least(n, 2)?;
    let m = SignMatrix::build(n, |i, j| (i * j) % n % 2 == 1);
    debug_assert!((0..n).all(|j| m.sign(0, j) == 1));
    Ok(m)
}

/// Closed-form column sequencies of [`power_residue`]: for odd n the profile
/// is 0, then j-1 at even j and n-j at odd j; for even n it alternates
/// between 0 and n-1.
pub fn power_residue_profile(n: usize) -> Result<SequencyProfile, SequencyError> {
    require_at_least(n, 2)?;
    let values = (0..n)
        .map(|j| {
            if n % 2 == 0 {
                if j % 2 == 0 {
                    0
                } else {
                    n - 1
                }
            } else if j == 0 {
                0
            } else if j % 2 == 0 {
                j - 1
            } else {
                n - j
            }
        })
        .collect();
    Ok(SequencyProfile::new(values))
}

/// Number of sign changes in rows 0..=i of column `j` of [`power_residue`],
/// in closed form: for odd n it is `floor(i*j/n)` at even j and
/// `i - floor(i*j/n)` at odd j; for even n it is 0 at even j and `i` at odd j.
pub fn prefix_sign_changes(n: usize, j: usize, i: usize) -> Result<usize, SequencyError> {
    require_at_least(n, 2)?;
    if j > n - 1 {
        return Err(SequencyError::IndexOutOfRange {
            what: "column index",
            index: j,
            limit: n,
        });
    }
    if i == 0 || i > n - 1 {
        return Err(SequencyError::IndexOutOfRange {
            what: "row index",
            index: i,
            limit: n,
        });
    }
    if n % 2 == 0 {
        return Ok(if j % 2 == 0 { 0 } else { i });
    }
    let q = (i * j) / n;
    Ok(if j % 2 == 0 { q } else { i - q })
}

/// Matrix with entry (i, j) equal to +1 exactly when `i*j mod n` lies below
/// `ceil(n/2)`; sequency-complete for every n >= 2.
pub fn threshold(n: usize) -> Result<SignMatrix, SequencyError> {
    require_at_least(n, 2)?;
    let m = n / 2;
    // residues 0..=m-1 map to +1 for n = 2m, residues 0..=m for n = 2m+1
    let cutoff = if n % 2 == 0 { m - 1 } else { m };
    let matrix = SignMatrix::build(n, |i, j| (i * j) % n > cutoff);
    debug_assert!((0..n).all(|j| matrix.sign(0, j) == 1));
    Ok(matrix)
}

/// Closed-form column sequencies of [`threshold`]: 0, then 2j-1 up to the
/// midpoint and 2(n-j) beyond it.
pub fn threshold_profile(n: usize) -> Result<SequencyProfile, SequencyError> {
    require_at_least(n, 2)?;
    let values = (0..n)
        .map(|j| {
            if j == 0 {
                0
            } else if j <= n / 2 {
                2 * j - 1
            } else {
                2 * (n - j)
            }
        })
        .collect();
    Ok(SequencyProfile::new(values))
}

/// Sequency-ordered matrix for any n >= 2: column j has sequency exactly j.
///
/// Entry (i, j) is +1 exactly when `u = floor(i*(j+1)/2) mod n` lies below a
/// cutoff: below `n/2` for even n; for odd n = 2m+1 the cutoff is m inclusive
/// when `i*(j+1)` is even and m-1 inclusive when it is odd.
pub fn ordered_threshold(n: usize) -> Result<SignMatrix, SequencyError> {
    require_at_least(n, 2)?;
    let m = n / 2;
    let matrix = SignMatrix::build(n, |i, j| {
        let product = i * (j + 1);
        let u = (product / 2) % n;
        let cutoff = if n % 2 == 0 {
            m - 1
        } else if product % 2 == 0 {
            m
        } else {
            m - 1
        };
        u > cutoff
    });
    debug_assert!((0..n).all(|j| matrix.sign(0, j) == 1));
    Ok(matrix)
}

/// Kronecker power of the order-2 Hadamard matrix: the Walsh-Hadamard matrix
/// of order `n = 2^m` with columns in natural order. `n = 1` yields `[[+1]]`.
pub fn walsh_natural(n: usize) -> Result<SignMatrix, SequencyError> {
    let log2 = require_power_of_two(n)?;
    let h2 = SignMatrix::build(2, |i, j| i == 1 && j == 1);
    let matrix = kronecker_power(&h2, log2);
    debug_assert!((0..n).all(|i| matrix.sign(i, 0) == 1));
    Ok(matrix)
}

/// Walsh-Hadamard matrix of order `n = 2^m` with columns in sequency order:
/// column k is the k-th Walsh basis function sampled at the interval
/// midpoints `(i + 1/2) / n`. Equals [`walsh_natural`] with its columns
/// sorted by ascending sequency.
pub fn walsh_sequency(n: usize) -> Result<SignMatrix, SequencyError> {
    require_power_of_two(n)?;
    let den = 2 * n as i64;
    let matrix = SignMatrix::build(n, |i, k| {
        let value = walsh_value(k, 2 * i as i64 + 1, den);
        debug_assert!(value == 1 || value == -1, "W_{k} at ({}+1/2)/{n} = {value}", i);
        value < 0
    });
    debug_assert!((0..n).all(|i| matrix.sign(i, 0) == 1));
    Ok(matrix)
}

/// Walsh basis function W_k evaluated at the rational point num/den.
///
/// W_0 is 1 on [0, 1] and 0 outside; higher orders split the interval:
/// `W_{2k}(x) = W_k(2x) + (-1)^k W_k(2x - 1)` and
/// `W_{2k+1}(x) = W_k(2x) - (-1)^k W_k(2x - 1)`.
/// At most one of the two child arguments lands inside [0, 1] for interior
/// points, so each evaluation walks a single chain of halvings. Midpoint
/// sampling never hits the dyadic discontinuities.
fn walsh_value(k: usize, num: i64, den: i64) -> i64 {
    if num < 0 || num > den {
        return 0;
    }
    if k == 0 {
        return 1;
    }
    let half = k / 2;
    let sign = if half % 2 == 0 { 1 } else { -1 };
    let left = walsh_value(half, 2 * num, den);
    let right = walsh_value(half, 2 * num - den, den);
    if k % 2 == 0 {
        left + sign * right
    } else {
        left - sign * right
    }
}

fn require_power_of_two(n: usize) -> Result<u32, SequencyError> {
    if n == 0 || !n.is_power_of_two() {
        return Err(SequencyError::NotPowerOfTwo(n));
    }
    Ok(n.trailing_zeros())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn power_residue_profiles_small() {
        assert_eq!(power_residue(3).unwrap().profile().values(), &[0, 2, 1]);
        assert_eq!(power_residue(5).unwrap().profile().values(), &[0, 4, 1, 2, 3]);
        assert_eq!(
            power_residue(8).unwrap().profile().values(),
            &[0, 7, 0, 7, 0, 7, 0, 7]
        );
    }

    #[test]
    fn power_residue_at_two() {
        assert_eq!(
            power_residue(2).unwrap().to_rows(),
            vec![vec![1, 1], vec![1, -1]]
        );
    }

    #[test]
    fn power_residue_profile_closed_form() {
        assert_eq!(
            power_residue_profile(7).unwrap().values(),
            &[0, 6, 1, 4, 3, 2, 5]
        );
        assert_eq!(
            power_residue_profile(6).unwrap().values(),
            &[0, 5, 0, 5, 0, 5]
        );
        assert_eq!(power_residue_profile(4).unwrap().values(), &[0, 3, 0, 3]);
        for n in 2..=64 {
            assert_eq!(
                power_residue(n).unwrap().profile(),
                power_residue_profile(n).unwrap(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn prefix_sign_changes_examples() {
        assert_eq!(prefix_sign_changes(5, 2, 4).unwrap(), 1);
        assert_eq!(prefix_sign_changes(5, 3, 4).unwrap(), 2);
        assert_eq!(prefix_sign_changes(6, 3, 5).unwrap(), 5);
    }

    #[test]
    fn prefix_sign_changes_rejects_out_of_range() {
        assert!(prefix_sign_changes(5, 5, 1).is_err());
        assert!(prefix_sign_changes(5, 0, 0).is_err());
        assert!(prefix_sign_changes(5, 0, 5).is_err());
        assert!(prefix_sign_changes(1, 0, 0).is_err());
    }

    #[test]
    fn prefix_full_column_equals_profile() {
        for n in 2..=12 {
            let profile = power_residue_profile(n).unwrap();
            for j in 0..n {
                assert_eq!(
                    prefix_sign_changes(n, j, n - 1).unwrap(),
                    profile.values()[j],
                    "n = {n}, j = {j}"
                );
            }
        }
    }

    #[test]
    fn threshold_profiles_small() {
        assert_eq!(threshold(2).unwrap().profile().values(), &[0, 1]);
        assert_eq!(threshold(4).unwrap().profile().values(), &[0, 1, 3, 2]);
        assert_eq!(threshold(5).unwrap().profile().values(), &[0, 1, 3, 4, 2]);
    }

    #[test]
    fn threshold_profile_closed_form() {
        for n in 2..=64 {
            assert_eq!(
                threshold(n).unwrap().profile(),
                threshold_profile(n).unwrap(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn ordered_threshold_is_sequency_ordered() {
        for n in 2..=64 {
            let profile = ordered_threshold(n).unwrap().profile().into_vec();
            let identity: Vec<usize> = (0..n).collect();
            assert_eq!(profile, identity, "n = {n}");
        }
    }

    #[test]
    fn ordered_threshold_at_two() {
        assert_eq!(
            ordered_threshold(2).unwrap().to_rows(),
            vec![vec![1, 1], vec![1, -1]]
        );
    }

    #[test]
    fn small_sizes_rejected() {
        for f in [power_residue, threshold, ordered_threshold] {
            assert_eq!(f(0).unwrap_err(), SequencyError::SizeTooSmall { n: 0, min: 2 });
            assert_eq!(f(1).unwrap_err(), SequencyError::SizeTooSmall { n: 1, min: 2 });
        }
    }

    #[test]
    fn walsh_natural_small() {
        assert_eq!(walsh_natural(1).unwrap().to_rows(), vec![vec![1]]);
        assert_eq!(
            walsh_natural(2).unwrap().to_rows(),
            vec![vec![1, 1], vec![1, -1]]
        );
        assert_eq!(
            walsh_natural(8).unwrap().profile().values(),
            &[0, 7, 3, 4, 1, 6, 2, 5]
        );
    }

    #[test]
    fn walsh_natural_matches_bit_parity_rule() {
        // Independent characterization: entry (i, k) is (-1)^popcount(i & k).
        let m = walsh_natural(16).unwrap();
        for i in 0..16usize {
            for k in 0..16usize {
                let expected = if (i & k).count_ones() % 2 == 0 { 1 } else { -1 };
                assert_eq!(m.sign(i, k), expected, "({i}, {k})");
            }
        }
    }

    #[test]
    fn walsh_sequency_small() {
        assert_eq!(walsh_sequency(1).unwrap().to_rows(), vec![vec![1]]);
        assert_eq!(
            walsh_sequency(2).unwrap().to_rows(),
            vec![vec![1, 1], vec![1, -1]]
        );
        assert_eq!(
            walsh_sequency(4).unwrap().to_rows(),
            vec![
                vec![1, 1, 1, 1],
                vec![1, 1, -1, -1],
                vec![1, -1, -1, 1],
                vec![1, -1, 1, -1],
            ]
        );
    }

    #[test]
    fn walsh_sequency_equals_sorted_natural() {
        for m in 0..=6 {
            let n = 1usize << m;
            assert_eq!(
                walsh_sequency(n).unwrap(),
                walsh_natural(n).unwrap().columns_sorted_by_sequency(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn walsh_rejects_non_powers_of_two() {
        for f in [walsh_natural, walsh_sequency] {
            assert_eq!(f(0).unwrap_err(), SequencyError::NotPowerOfTwo(0));
            assert_eq!(f(3).unwrap_err(), SequencyError::NotPowerOfTwo(3));
            assert_eq!(f(12).unwrap_err(), SequencyError::NotPowerOfTwo(12));
        }
    }

    #[test]
    fn kind_dispatch_and_names() {
        for kind in GeneratorKind::ALL {
            assert_eq!(kind.name().parse::<GeneratorKind>().unwrap(), kind);
        }
        assert!("walsh".parse::<GeneratorKind>().is_err());
        let m = GeneratorKind::OrderedThreshold.generate(5).unwrap();
        assert_eq!(m.profile().values(), &[0, 1, 2, 3, 4]);
    }
}
