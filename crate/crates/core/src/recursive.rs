//! Non-symmetric divide-and-conquer convolution.
//!
//! The top-level formula feeds the two inverse transforms into a
//! recursively defined operator that walks the binary digits of the
//! summation index from least significant to most significant: at
//! parameter `n` the "digit 0" branch keeps its operands, the
//! "digit 1" branch folds each operand across the index bit log2(n)
//! and post-multiplies by `(1 + x^n)`. The u-side folds with a
//! subtraction and the v-side with an addition; that sign asymmetry is
//! what carries the Thue-Morse signs without an external mask.
//!
//! The operator as written recurses forever over powers of two; here
//! it returns zero once `n` reaches the series length, because those
//! branches produce only terms of valuation `>= N`, invisible modulo
//! `x^N`.

use crate::bintransform::{inverse_with, transform_with, TransformAlgo};
use crate::bitseq::thue_morse_mask;
use crate::coeff::CoefficientRing;
use crate::series::{Series, Sign};
use crate::sierpinski::{split_high, split_low};
use crate::{Error, Result};

/// One fold of the interleaved splitting scheme:
/// `x^n u_low ± u_high` with both parts kept in place.
pub fn fold_low_high<R: CoefficientRing>(
    u: &Series<R>,
    n: usize,
    sign: Sign,
) -> Result<Series<R>> {
    let low = split_low(u, n)?.shift_up(n)?;
    let high = split_high(u, n)?;
    match sign {
        Sign::Plus => low.add(&high),
        Sign::Minus => low.sub(&high),
    }
}

/// The recursive operator, with a transform-algorithm switch for
/// differential debugging.
pub fn diamond_with<R: CoefficientRing>(
    u: &Series<R>,
    v: &Series<R>,
    n: usize,
    algo: TransformAlgo,
) -> Result<Series<R>> {
    if !n.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(n));
    }
    u.check_like(v)?;
    if n >= u.len() {
        return Series::zeros(u.ring().clone(), u.len());
    }
    let a = fold_low_high(u, n, Sign::Minus)?;
    let b = fold_low_high(v, n, Sign::Plus)?;
    let folded = transform_with(algo, &a.termwise(&b)?)?.mul_one_plus_xn(n, Sign::Plus)?;
    let same_digit = diamond_with(u, v, 2 * n, algo)?;
    let next_digit = diamond_with(&a, &b, 2 * n, algo)?.mul_one_plus_xn(n, Sign::Plus)?;
    folded.add(&same_digit)?.add(&next_digit)
}

/// The recursive operator with the butterfly transform.
pub fn diamond<R: CoefficientRing>(u: &Series<R>, v: &Series<R>, n: usize) -> Result<Series<R>> {
    diamond_with(u, v, n, TransformAlgo::Fast)
}

/// Convolution modulo `x^N` by the recursion.
///
/// The left input is carried as the sign-conjugated inverse transform
/// `σ ⊙ f*` (the conjugation happens after the inverse transform; the
/// two do not commute), the right input as the plain inverse transform.
pub fn convolve_recursive_with<R: CoefficientRing>(
    f: &Series<R>,
    g: &Series<R>,
    algo: TransformAlgo,
) -> Result<Series<R>> {
    f.check_like(g)?;
    let sigma = thue_morse_mask(f.len());
    let u = inverse_with(algo, f)?.apply_mask(&sigma)?;
    let v = inverse_with(algo, g)?;
    let head = transform_with(algo, &u.termwise(&v)?)?;
    head.add(&diamond_with(&u, &v, 1, algo)?)
}

/// Convolution modulo `x^N` by the recursion, butterfly transforms.
pub fn convolve_recursive<R: CoefficientRing>(
    f: &Series<R>,
    g: &Series<R>,
) -> Result<Series<R>> {
    convolve_recursive_with(f, g, TransformAlgo::Fast)
}
