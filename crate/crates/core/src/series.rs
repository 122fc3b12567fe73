//! Dense polynomial / truncated power-series container over a
//! coefficient ring, plus the schoolbook convolution oracle that every
//! structured method is verified against.
//!
//! A series holds exactly `N` coefficients with `N` a power of two and
//! represents a polynomial or a power series modulo `x^N`.

use crate::bitseq::BitMask;
use crate::coeff::CoefficientRing;
use crate::{Error, Result};

/// Sign selector for multiplication by `(1 ± x^n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Series<R: CoefficientRing> {
    ring: R,
    coeffs: Vec<R::Elem>,
}

impl<R: CoefficientRing> Series<R> {
    /// Wrap a coefficient vector whose length is already a power of two.
    pub fn new(ring: R, coeffs: Vec<R::Elem>) -> Result<Self> {
        if !coeffs.len().is_power_of_two() {
            return Err(Error::NotPowerOfTwo(coeffs.len()));
        }
        Ok(Series { ring, coeffs })
    }

    /// Zero-pad `coeffs` up to length `n`. More than `n` coefficients is
    /// an error, never a silent truncation.
    pub fn from_coeffs(ring: R, mut coeffs: Vec<R::Elem>, n: usize) -> Result<Self> {
        if !n.is_power_of_two() {
            return Err(Error::NotPowerOfTwo(n));
        }
        if coeffs.len() > n {
            return Err(Error::TooManyCoefficients {
                len: coeffs.len(),
                n,
            });
        }
        coeffs.resize(n, ring.zero());
        Ok(Series { ring, coeffs })
    }

    pub fn zeros(ring: R, n: usize) -> Result<Self> {
        Series::from_coeffs(ring, Vec::new(), n)
    }

    /// The convolution identity: 1 at index 0.
    pub fn impulse(ring: R, n: usize) -> Result<Self> {
        let one = ring.one();
        Series::from_coeffs(ring, vec![one], n)
    }

    /// Embed small integers; test and CLI convenience.
    pub fn from_i64(ring: R, values: &[i64], n: usize) -> Result<Self> {
        let coeffs = values.iter().map(|&v| ring.embed(v)).collect();
        Series::from_coeffs(ring, coeffs, n)
    }

    /// Read a 0/±1 mask as ring elements.
    pub fn from_mask(ring: R, mask: &BitMask, n: usize) -> Result<Self> {
        let coeffs = (0..n.min(mask.len()))
            .map(|m| ring.embed(i64::from(mask.get(m))))
            .collect();
        Series::from_coeffs(ring, coeffs, n)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        false // length is a positive power of two by construction
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &R::Elem {
        &self.coeffs[i]
    }

    pub fn into_coeffs(self) -> Vec<R::Elem> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        let zero = self.ring.zero();
        self.coeffs.iter().all(|c| self.ring.eq_elems(c, &zero))
    }

    /// Same ring instance and same length, or an error.
    pub fn check_like(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_like(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| self.ring.add(a, b))
            .collect::<Result<_>>()?;
        Ok(Series {
            ring: self.ring.clone(),
            coeffs,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_like(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| self.ring.sub(a, b))
            .collect::<Result<_>>()?;
        Ok(Series {
            ring: self.ring.clone(),
            coeffs,
        })
    }

    pub fn negate(&self) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| self.ring.neg(a))
            .collect::<Result<_>>()?;
        Ok(Series {
            ring: self.ring.clone(),
            coeffs,
        })
    }

    /// Termwise (Hadamard) product; no convolution happens here.
    pub fn termwise(&self, other: &Self) -> Result<Self> {
        self.check_like(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| self.ring.mul(a, b))
            .collect::<Result<_>>()?;
        Ok(Series {
            ring: self.ring.clone(),
            coeffs,
        })
    }

    /// Keep, drop or sign-flip each entry according to a 0/±1 mask.
    /// Masks shorter than the series are treated as zero-extended.
    pub fn apply_mask(&self, mask: &BitMask) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(m, a)| match mask.get(m) {
                1 => Ok(a.clone()),
                -1 => self.ring.neg(a),
                _ => Ok(self.ring.zero()),
            })
            .collect::<Result<_>>()?;
        Ok(Series {
            ring: self.ring.clone(),
            coeffs,
        })
    }

    /// Multiplication by `x^n` modulo `x^N`.
    pub fn shift_up(&self, n: usize) -> Result<Self> {
        if n >= self.len() {
            return Err(Error::ShiftOutOfRange {
                shift: n,
                len: self.len(),
            });
        }
        let zero = self.ring.zero();
        let mut coeffs = vec![zero; self.len()];
        coeffs[n..].clone_from_slice(&self.coeffs[..self.len() - n]);
        Ok(Series {
            ring: self.ring.clone(),
            coeffs,
        })
    }

    /// Multiplication by `(1 ± x^n)` modulo `x^N`, with `n` a power of
    /// two below `N`.
    pub fn mul_one_plus_xn(&self, n: usize, sign: Sign) -> Result<Self> {
        if !n.is_power_of_two() {
            return Err(Error::NotPowerOfTwo(n));
        }
        let shifted = self.shift_up(n)?;
        match sign {
            Sign::Plus => self.add(&shifted),
            Sign::Minus => self.sub(&shifted),
        }
    }

    /// Schoolbook convolution modulo `x^N`: the oracle.
    pub fn convolve_naive(&self, other: &Self) -> Result<Self> {
        self.check_like(other)?;
        let n = self.len();
        let mut coeffs = vec![self.ring.zero(); n];
        for i in 0..n {
            for j in 0..n - i {
                let prod = self.ring.mul(&self.coeffs[i], &other.coeffs[j])?;
                coeffs[i + j] = self.ring.add(&coeffs[i + j], &prod)?;
            }
        }
        Ok(Series {
            ring: self.ring.clone(),
            coeffs,
        })
    }
}

/// Untruncated schoolbook product of two polynomials, length
/// `f.len() + g.len() - 1`. The oracle for the polynomial identity.
pub fn convolve_naive_full<R: CoefficientRing>(
    ring: &R,
    f: &[R::Elem],
    g: &[R::Elem],
) -> Result<Vec<R::Elem>> {
    if f.is_empty() || g.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = vec![ring.zero(); f.len() + g.len() - 1];
    for (i, a) in f.iter().enumerate() {
        for (j, b) in g.iter().enumerate() {
            let prod = ring.mul(a, b)?;
            out[i + j] = ring.add(&out[i + j], &prod)?;
        }
    }
    Ok(out)
}

/// Parse the coefficient text format: one decimal integer per line,
/// `#` comment lines and blank lines ignored.
pub fn parse_coeff_text<R: CoefficientRing>(ring: &R, text: &str) -> Result<Vec<R::Elem>> {
    let mut out = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        out.push(ring.parse(line)?);
    }
    Ok(out)
}

/// Render coefficients in the same one-per-line format.
pub fn format_coeffs<R: CoefficientRing>(ring: &R, coeffs: &[R::Elem]) -> String {
    let mut out = String::new();
    for c in coeffs {
        out.push_str(&ring.format(c));
        out.push('\n');
    }
    out
}
