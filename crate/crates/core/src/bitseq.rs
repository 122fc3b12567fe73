//! Bit combinatorics: Hamming weights, Thue-Morse signs, entries of
//! Pascal's triangle modulo 2, and the 0/±1 masks built from them.

use crate::{Error, Result};

/// Number of 1-digits in the binary expansion of `n`.
pub fn hamming_weight(n: u64) -> u32 {
    n.count_ones()
}

/// Signed Thue-Morse sequence: `(-1)^hamming_weight(n)`.
pub fn thue_morse_sign(n: u64) -> i8 {
    if n.count_ones().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Entry `(n, k)` of Pascal's triangle modulo 2.
///
/// Equals 1 exactly when `(n - k) & k == 0`, i.e. when `k` is a binary
/// submask of `n`.
pub fn sierpinski_entry(n: u64, k: u64) -> Result<u8> {
    if k > n {
        return Err(Error::ColumnPastRow { n, k });
    }
    Ok(u8::from((n - k) & k == 0))
}

/// A fixed-length mask whose entries are -1, 0 or 1.
///
/// Masks never enter the coefficient ring as values; they select,
/// cancel or sign-flip entries of a series termwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitMask {
    values: Vec<i8>,
}

impl BitMask {
    pub fn new(values: Vec<i8>) -> Result<Self> {
        if let Some(&bad) = values.iter().find(|v| !(-1..=1).contains(*v)) {
            return Err(Error::BadMaskEntry(bad));
        }
        Ok(BitMask { values })
    }

    pub(crate) fn from_raw(values: Vec<i8>) -> Self {
        BitMask { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Entry at `i`; zero past the stored length.
    pub fn get(&self, i: usize) -> i8 {
        self.values.get(i).copied().unwrap_or(0)
    }

    pub fn values(&self) -> &[i8] {
        &self.values
    }

    /// The same mask moved up by `offset` and cut or zero-extended to
    /// `len` entries.
    pub fn shifted(&self, offset: usize, len: usize) -> BitMask {
        let mut values = vec![0i8; len];
        for (i, &v) in self.values.iter().enumerate() {
            let j = offset + i;
            if j < len {
                values[j] = v;
            }
        }
        BitMask::from_raw(values)
    }

    /// Termwise product with the Thue-Morse signs.
    pub fn signed(&self) -> BitMask {
        let values = self
            .values
            .iter()
            .enumerate()
            .map(|(m, &v)| v * thue_morse_sign(m as u64))
            .collect();
        BitMask::from_raw(values)
    }
}

/// Coefficient support of row `k` of the triangle, length `k + 1`.
///
/// This is the coefficient vector of the product of `(1 + x^(2^j))`
/// over the set bits `j` of `k`.
pub fn sierpinski_row_mask(k: usize) -> BitMask {
    let values = (0..=k)
        .map(|m| ((k - m) & m == 0) as i8)
        .collect();
    BitMask::from_raw(values)
}

/// Row `k` with Thue-Morse signs: the coefficient vector of the product
/// of `(1 - x^(2^j))` over the set bits `j` of `k`.
pub fn signed_row_mask(k: usize) -> BitMask {
    sierpinski_row_mask(k).signed()
}

/// First `n` entries of the `k`-th diagonal of the triangle: entry `m`
/// is 1 iff `m & k == 0`.
///
/// Equivalently, the first `n` coefficients of the series expansion of
/// `1 / ((1 - x) * S_k)` where `S_k` is the row-`k` polynomial; the
/// long-division route is kept as a test oracle only.
pub fn delta_mask(k: usize, n: usize) -> BitMask {
    let values = (0..n).map(|m| (m & k == 0) as i8).collect();
    BitMask::from_raw(values)
}

/// First `n` Thue-Morse signs as a mask.
pub fn thue_morse_mask(n: usize) -> BitMask {
    let values = (0..n).map(|m| thue_morse_sign(m as u64)).collect();
    BitMask::from_raw(values)
}
