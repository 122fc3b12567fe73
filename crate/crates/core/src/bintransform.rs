//! The binomial modulo-2 transform and its inverse.
//!
//! `transform` sends `A` to `B_n = Σ_{k ≤ n} T(n,k) A_k` with `T` the
//! triangle modulo 2; `inverse` inserts the Thue-Morse sign
//! `σ_(n-k)`. Since `T(n,k) = 1` exactly when `k` is a binary submask
//! of `n`, the forward transform is a sum over submasks and admits the
//! standard subset-lattice butterfly: for each bit `b`, every index
//! with bit `b` set absorbs the index with the bit cleared. The inverse
//! runs the same sweep with subtraction. Both are `O(N log N)` and are
//! checked against the quadratic definitions rather than trusted.

use crate::bitseq::thue_morse_sign;
use crate::coeff::CoefficientRing;
use crate::series::Series;
use crate::{Error, Result};

/// Selects the quadratic reference loops or the butterfly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransformAlgo {
    Naive,
    Fast,
}

/// Quadratic transform straight from the definition.
pub fn transform_naive<R: CoefficientRing>(f: &Series<R>) -> Result<Series<R>> {
    let ring = f.ring().clone();
    let n = f.len();
    let mut out = Vec::with_capacity(n);
    for m in 0..n {
        let mut acc = ring.zero();
        for k in 0..=m {
            if (m - k) & k == 0 {
                acc = ring.add(&acc, f.coeff(k))?;
            }
        }
        out.push(acc);
    }
    Series::new(ring, out)
}

/// Quadratic inverse transform straight from the definition.
pub fn inverse_naive<R: CoefficientRing>(f: &Series<R>) -> Result<Series<R>> {
    let ring = f.ring().clone();
    let n = f.len();
    let mut out = Vec::with_capacity(n);
    for m in 0..n {
        let mut acc = ring.zero();
        for k in 0..=m {
            if (m - k) & k == 0 {
                acc = if thue_morse_sign((m - k) as u64) == 1 {
                    ring.add(&acc, f.coeff(k))?
                } else {
                    ring.sub(&acc, f.coeff(k))?
                };
            }
        }
        out.push(acc);
    }
    Series::new(ring, out)
}

fn butterfly<R: CoefficientRing>(f: &Series<R>, subtract: bool) -> Result<Series<R>> {
    let ring = f.ring().clone();
    let n = f.len();
    let mut work = f.coeffs().to_vec();
    let mut bit = 1usize;
    while bit < n {
        for m in 0..n {
            if m & bit != 0 {
                let other = work[m ^ bit].clone();
                work[m] = if subtract {
                    ring.sub(&work[m], &other)?
                } else {
                    ring.add(&work[m], &other)?
                };
            }
        }
        bit <<= 1;
    }
    Series::new(ring, work)
}

/// Butterfly transform; output identical to [`transform_naive`].
pub fn transform_fast<R: CoefficientRing>(f: &Series<R>) -> Result<Series<R>> {
    butterfly(f, false)
}

/// Butterfly inverse; output identical to [`inverse_naive`].
pub fn inverse_fast<R: CoefficientRing>(f: &Series<R>) -> Result<Series<R>> {
    butterfly(f, true)
}

pub fn transform_with<R: CoefficientRing>(
    algo: TransformAlgo,
    f: &Series<R>,
) -> Result<Series<R>> {
    match algo {
        TransformAlgo::Naive => transform_naive(f),
        TransformAlgo::Fast => transform_fast(f),
    }
}

pub fn inverse_with<R: CoefficientRing>(
    algo: TransformAlgo,
    f: &Series<R>,
) -> Result<Series<R>> {
    match algo {
        TransformAlgo::Naive => inverse_naive(f),
        TransformAlgo::Fast => inverse_fast(f),
    }
}

/// Inverse transform of the coefficient sequence of `f` shifted down by
/// `k` and zero-padded back to length `N`.
pub fn shifted_inverse<R: CoefficientRing>(f: &Series<R>, k: usize) -> Result<Series<R>> {
    let n = f.len();
    if k >= n {
        return Err(Error::IndexOutOfRange { index: k, len: n });
    }
    let mut coeffs = f.coeffs()[k..].to_vec();
    coeffs.resize(n, f.ring().zero());
    let shifted = Series::new(f.ring().clone(), coeffs)?;
    inverse_fast(&shifted)
}
