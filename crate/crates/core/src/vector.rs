use std::fmt;

use crate::error::SequencyError;

const WORD_BITS: usize = 64;

/// A finite sequence of signs, each +1 or -1.
///
/// Storage is one bit per entry (0 for +1, 1 for -1), so counting adjacent
/// sign changes is a shifted XOR plus popcount. That keeps exhaustive scans
/// over all sign patterns cheap. Bits past `len` in the last word are always
/// zero; equality relies on it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignVector {
    words: Vec<u64>,
    len: usize,
}

impl SignVector {
    /// Builds a vector from explicit signs. Every entry must be +1 or -1.
    pub fn from_signs(signs: &[i8]) -> Result<Self, SequencyError> {
        if signs.is_empty() {
            return Err(SequencyError::EmptyVector);
        }
        let mut v = Self::zeroed(signs.len());
        for (k, &s) in signs.iter().enumerate() {
            match s {
                1 => {}
                -1 => v.set_negative(k),
                other => return Err(SequencyError::InvalidSign(i64::from(other))),
            }
        }
        Ok(v)
    }

    /// All-(+1) vector of the given length.
    pub fn all_plus(len: usize) -> Result<Self, SequencyError> {
        if len == 0 {
            return Err(SequencyError::EmptyVector);
        }
        Ok(Self::zeroed(len))
    }

    /// Builds a vector of length `len` where entry `k` is -1 exactly when
    /// `negative(k)` returns true.
    pub(crate) fn from_neg_bits(len: usize, mut negative: impl FnMut(usize) -> bool) -> Self {
        debug_assert!(len >= 1);
        let mut v = Self::zeroed(len);
        for k in 0..len {
            if negative(k) {
                v.set_negative(k);
            }
        }
        v
    }

    fn zeroed(len: usize) -> Self {
        Self {
            words: vec![0; len.div_ceil(WORD_BITS)],
            len,
        }
    }

    fn set_negative(&mut self, k: usize) {
        self.words[k / WORD_BITS] |= 1u64 << (k % WORD_BITS);
    }

    #[inline]
    pub(crate) fn is_negative(&self, k: usize) -> bool {
        (self.words[k / WORD_BITS] >> (k % WORD_BITS)) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        // Construction guarantees at least one entry.
        false
    }

    /// Sign at position `k`, as +1 or -1. Panics if `k` is out of bounds.
    pub fn sign(&self, k: usize) -> i8 {
        assert!(k < self.len, "index {k} out of range for length {}", self.len);
        if self.is_negative(k) {
            -1
        } else {
            1
        }
    }

    /// The entries unpacked to +1/-1 values.
    pub fn signs(&self) -> Vec<i8> {
        (0..self.len).map(|k| self.sign(k)).collect()
    }

    /// Number of adjacent sign changes in the vector. Zero for length 1.
    pub fn sequency(&self) -> usize {
        if self.len <= 1 {
            return 0;
        }
        let pairs = self.len - 1;
        let mut count = 0u32;
        let mut j = 0;
        while WORD_BITS * j < pairs {
            let w = self.words[j];
            let next = self.words.get(j + 1).copied().unwrap_or(0);
            // Pair k within this word compares bits k and k+1; the topmost
            // pair crosses into the next word.
            let diff = w ^ ((w >> 1) | (next << (WORD_BITS - 1)));
            let valid = pairs - WORD_BITS * j;
            let masked = if valid >= WORD_BITS {
                diff
            } else {
                diff & ((1u64 << valid) - 1)
            };
            count += masked.count_ones();
            j += 1;
        }
        count as usize
    }

    /// 0 when the first and last entries agree, 1 otherwise.
    pub fn boundary_flip(&self) -> u8 {
        u8::from(self.is_negative(0) != self.is_negative(self.len - 1))
    }

    /// Adjacent-difference indicator: entry `k` is 1 exactly when entries `k`
    /// and `k+1` differ. Its Hamming weight equals the sequency; it is also
    /// the positionwise difference between the vector and its one-step shift.
    pub fn derived_sequence(&self) -> Result<Vec<u8>, SequencyError> {
        if self.len < 2 {
            return Err(SequencyError::DegenerateLength(self.len));
        }
        Ok((0..self.len - 1)
            .map(|k| u8::from(self.is_negative(k) != self.is_negative(k + 1)))
            .collect())
    }

    /// Number of positions at which two equal-length vectors differ.
    pub(crate) fn hamming_distance(&self, other: &SignVector) -> usize {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a ^ b).count_ones() as usize)
            .sum()
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for k in 0..self.len {
            f.write_str(if self.is_negative(k) { "-" } else { "+" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignVector({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_sequency(signs: &[i8]) -> usize {
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    #[test]
    fn constant_vector_has_sequency_zero() {
        let v = SignVector::from_signs(&[1, 1, 1, 1, 1, 1, 1, 1]).unwrap();
        assert_eq!(v.sequency(), 0);
    }

    #[test]
    fn reference_column_has_sequency_five() {
        let v = SignVector::from_signs(&[1, -1, -1, 1, -1, 1, 1, -1]).unwrap();
        assert_eq!(v.sequency(), 5);
    }

    #[test]
    fn alternating_length_three_attains_maximum() {
        let v = SignVector::from_signs(&[1, -1, 1]).unwrap();
        assert_eq!(v.sequency(), 2);
    }

    #[test]
    fn length_one_has_sequency_zero() {
        let v = SignVector::from_signs(&[-1]).unwrap();
        assert_eq!(v.sequency(), 0);
        assert_eq!(v.boundary_flip(), 0);
    }

    #[test]
    fn derived_sequence_examples() {
        let v = SignVector::from_signs(&[1, -1, -1, 1]).unwrap();
        assert_eq!(v.derived_sequence().unwrap(), vec![1, 0, 1]);
        let v = SignVector::from_signs(&[1, 1, 1]).unwrap();
        assert_eq!(v.derived_sequence().unwrap(), vec![0, 0]);
        let v = SignVector::from_signs(&[1, -1, 1, -1]).unwrap();
        assert_eq!(v.derived_sequence().unwrap(), vec![1, 1, 1]);
    }

    #[test]
    fn derived_sequence_rejects_length_one() {
        let v = SignVector::from_signs(&[1]).unwrap();
        assert_eq!(v.derived_sequence(), Err(SequencyError::DegenerateLength(1)));
    }

    #[test]
    fn boundary_flip_examples() {
        let v = SignVector::from_signs(&[1, 1, 1, 1]).unwrap();
        assert_eq!(v.boundary_flip(), 0);
        let v = SignVector::from_signs(&[1, -1]).unwrap();
        assert_eq!(v.boundary_flip(), 1);
        let v = SignVector::from_signs(&[1, 1, -1, -1, 1, 1, -1, -1]).unwrap();
        assert_eq!(v.boundary_flip(), 1);
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert_eq!(SignVector::from_signs(&[]), Err(SequencyError::EmptyVector));
        assert_eq!(
            SignVector::from_signs(&[1, 0, -1]),
            Err(SequencyError::InvalidSign(0))
        );
        assert_eq!(SignVector::all_plus(0), Err(SequencyError::EmptyVector));
    }

    #[test]
    fn sequency_matches_naive_count_across_word_boundaries() {
        // Exercise lengths around the 64-bit word boundary.
        for len in [1, 2, 63, 64, 65, 127, 128, 129, 200] {
            let signs: Vec<i8> = (0..len)
                .map(|k| if (k * 7 + k / 3) % 5 < 2 { -1 } else { 1 })
                .collect();
            let v = SignVector::from_signs(&signs).unwrap();
            assert_eq!(v.sequency(), naive_sequency(&signs), "len {len}");
            assert_eq!(v.signs(), signs);
        }
    }

    #[test]
    fn display_renders_signs() {
        let v = SignVector::from_signs(&[1, -1, -1, 1]).unwrap();
        assert_eq!(v.to_string(), "+--+");
    }
}
