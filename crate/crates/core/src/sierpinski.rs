//! Structured multiplication and masking by Sierpinski objects: the
//! row polynomials `S_k`, their signed counterparts, the diagonal
//! masks, and the interleaved low/high index split.
//!
//! Multiplying by `S_k` never runs a generic convolution: row `k`
//! factors into popcount(k) binomials `(1 + x^(2^j))`, so the product
//! is a cascade of shifted additions costing `O(N * popcount(k))`.

use crate::bitseq::delta_mask;
use crate::coeff::CoefficientRing;
use crate::series::{Series, Sign};
use crate::{Error, Result};

fn binomial_cascade<R: CoefficientRing>(
    f: &Series<R>,
    k: usize,
    sign: Sign,
) -> Result<Series<R>> {
    if k >= f.len() {
        return Err(Error::IndexOutOfRange {
            index: k,
            len: f.len(),
        });
    }
    let mut acc = f.clone();
    // Ascending bit order; the factors commute, the order is fixed only
    // so intermediate dumps are reproducible.
    for j in 0..usize::BITS {
        if k >> j & 1 == 1 {
            acc = acc.mul_one_plus_xn(1 << j, sign)?;
        }
    }
    Ok(acc)
}

/// Product `S_k * f` modulo `x^N`.
pub fn mul_sk<R: CoefficientRing>(f: &Series<R>, k: usize) -> Result<Series<R>> {
    binomial_cascade(f, k, Sign::Plus)
}

/// Product `S̄_k * f` modulo `x^N`, the `(1 - x^(2^j))` cascade.
pub fn mul_sbar_k<R: CoefficientRing>(f: &Series<R>, k: usize) -> Result<Series<R>> {
    binomial_cascade(f, k, Sign::Minus)
}

/// Termwise product with the diagonal mask `δ_k`.
pub fn mask_delta<R: CoefficientRing>(f: &Series<R>, k: usize) -> Result<Series<R>> {
    f.apply_mask(&delta_mask(k, f.len()))
}

fn check_split<R: CoefficientRing>(u: &Series<R>, n: usize) -> Result<()> {
    if !n.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(n));
    }
    if n >= u.len() {
        return Err(Error::IndexOutOfRange {
            index: n,
            len: u.len(),
        });
    }
    Ok(())
}

/// Keep, in place, the entries whose index has bit log2(n) clear.
pub fn split_low<R: CoefficientRing>(u: &Series<R>, n: usize) -> Result<Series<R>> {
    check_split(u, n)?;
    u.apply_mask(&delta_mask(n, u.len()))
}

/// Keep, in place, the entries whose index has bit log2(n) set.
pub fn split_high<R: CoefficientRing>(u: &Series<R>, n: usize) -> Result<Series<R>> {
    check_split(u, n)?;
    u.apply_mask(&delta_mask(n, u.len()).shifted(n, u.len()))
}
