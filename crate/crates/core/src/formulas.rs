//! Direct summation evaluators for the four closed-form convolution
//! identities.
//!
//! The first identity multiplies two degree-(n-1) polynomials exactly
//! and is evaluated in an untruncated buffer of length 2n. The other
//! three convolve power series modulo `x^N`; their sums run over all
//! k ≥ 0, but term `k` carries a mask shifted up by `k`, so its
//! valuation is at least `k` and summation stops at `k = N - 1`. The
//! per-term entry points exist so that tests can check exactly that.

use crate::bintransform::{inverse_fast, shifted_inverse, transform_fast};
use crate::bitseq::{delta_mask, sierpinski_row_mask, thue_morse_mask, thue_morse_sign};
use crate::coeff::CoefficientRing;
use crate::series::Series;
use crate::sierpinski::{mul_sbar_k, mul_sk};
use crate::{Error, Result};

/// The two equivalent shapes of the first two identities: sign the row
/// factors, or sign the inputs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    /// `S̄_k f ⊙ S̄_k g`
    BarS,
    /// `S_k f̄ ⊙ S_k ḡ`
    BarF,
}

impl Variant {
    pub const ALL: [Variant; 2] = [Variant::BarS, Variant::BarF];

    pub fn as_str(self) -> &'static str {
        match self {
            Variant::BarS => "barS",
            Variant::BarF => "barF",
        }
    }
}

impl std::fmt::Display for Variant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "barS" => Ok(Variant::BarS),
            "barF" => Ok(Variant::BarF),
            _ => Err(Error::ParseCoeff(s.to_owned())),
        }
    }
}

/// The six convolution methods.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Method {
    Naive,
    T1,
    T2,
    T3,
    T4,
    Recursive,
}

impl Method {
    pub const ALL: [Method; 6] = [
        Method::Naive,
        Method::T1,
        Method::T2,
        Method::T3,
        Method::T4,
        Method::Recursive,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Naive => "naive",
            Method::T1 => "t1",
            Method::T2 => "t2",
            Method::T3 => "t3",
            Method::T4 => "t4",
            Method::Recursive => "recursive",
        }
    }

    /// Whether the method takes a variant selector.
    pub fn has_variants(self) -> bool {
        matches!(self, Method::T1 | Method::T2)
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "naive" => Ok(Method::Naive),
            "t1" => Ok(Method::T1),
            "t2" => Ok(Method::T2),
            "t3" => Ok(Method::T3),
            "t4" => Ok(Method::T4),
            "recursive" => Ok(Method::Recursive),
            _ => Err(Error::ParseCoeff(s.to_owned())),
        }
    }
}

fn signed_inputs<R: CoefficientRing>(
    f: &Series<R>,
    g: &Series<R>,
    k: usize,
    variant: Variant,
) -> Result<(Series<R>, Series<R>)> {
    match variant {
        Variant::BarS => Ok((mul_sbar_k(f, k)?, mul_sbar_k(g, k)?)),
        Variant::BarF => {
            let sigma = thue_morse_mask(f.len());
            Ok((
                mul_sk(&f.apply_mask(&sigma)?, k)?,
                mul_sk(&g.apply_mask(&sigma)?, k)?,
            ))
        }
    }
}

fn scale_by_sign<R: CoefficientRing>(w: Series<R>, k: usize) -> Result<Series<R>> {
    if thue_morse_sign(k as u64) == -1 {
        w.negate()
    } else {
        Ok(w)
    }
}

/// Term `k` of the polynomial identity in a buffer of length `2n`,
/// returned truncated to the product length `2n - 1`.
pub fn t1_term<R: CoefficientRing>(
    ring: &R,
    f: &[R::Elem],
    g: &[R::Elem],
    k: usize,
    variant: Variant,
) -> Result<Vec<R::Elem>> {
    let n = check_t1_lengths(f.len(), g.len())?;
    if k >= n {
        return Err(Error::IndexOutOfRange { index: k, len: n });
    }
    let fp = Series::from_coeffs(ring.clone(), f.to_vec(), 2 * n)?;
    let gp = Series::from_coeffs(ring.clone(), g.to_vec(), 2 * n)?;
    let term = t1_term_padded(&fp, &gp, n, k, variant)?;
    let mut out = term.into_coeffs();
    out.truncate(2 * n - 1);
    Ok(out)
}

fn t1_term_padded<R: CoefficientRing>(
    fp: &Series<R>,
    gp: &Series<R>,
    n: usize,
    k: usize,
    variant: Variant,
) -> Result<Series<R>> {
    let (u, v) = signed_inputs(fp, gp, k, variant)?;
    let mask = sierpinski_row_mask(n - 1 - k).shifted(k, 2 * n);
    let t = u.termwise(&v)?.apply_mask(&mask)?;
    let w = mul_sk(&t, n - 1 - k)?;
    scale_by_sign(w, k)
}

fn check_t1_lengths(flen: usize, glen: usize) -> Result<usize> {
    if flen != glen {
        return Err(Error::LengthMismatch {
            left: flen,
            right: glen,
        });
    }
    if !flen.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(flen));
    }
    Ok(flen)
}

/// Exact product of two length-`n` polynomials (`n` a power of two) by
/// the masked summation identity; output length `2n - 1`.
pub fn convolve_t1<R: CoefficientRing>(
    ring: &R,
    f: &[R::Elem],
    g: &[R::Elem],
    variant: Variant,
) -> Result<Vec<R::Elem>> {
    let n = check_t1_lengths(f.len(), g.len())?;
    let fp = Series::from_coeffs(ring.clone(), f.to_vec(), 2 * n)?;
    let gp = Series::from_coeffs(ring.clone(), g.to_vec(), 2 * n)?;
    let mut acc = Series::zeros(ring.clone(), 2 * n)?;
    for k in 0..n {
        acc = acc.add(&t1_term_padded(&fp, &gp, n, k, variant)?)?;
    }
    let mut out = acc.into_coeffs();
    out.truncate(2 * n - 1);
    Ok(out)
}

/// Term `k` of the series identity with diagonal masks: mask by
/// `x^k δ_k`, then multiply by the series `δ_k` itself (realized as a
/// naive convolution with the 0/1 mask read as ring elements).
pub fn t2_term<R: CoefficientRing>(
    f: &Series<R>,
    g: &Series<R>,
    k: usize,
    variant: Variant,
) -> Result<Series<R>> {
    let n = f.len();
    let (u, v) = signed_inputs(f, g, k, variant)?;
    let mask = delta_mask(k, n).shifted(k, n);
    let t = u.termwise(&v)?.apply_mask(&mask)?;
    let delta = Series::from_mask(f.ring().clone(), &delta_mask(k, n), n)?;
    let w = t.convolve_naive(&delta)?;
    scale_by_sign(w, k)
}

/// Convolution modulo `x^N` by the diagonal-mask summation.
pub fn convolve_t2<R: CoefficientRing>(
    f: &Series<R>,
    g: &Series<R>,
    variant: Variant,
) -> Result<Series<R>> {
    let mut acc = Series::zeros(f.ring().clone(), f.len())?;
    for k in 0..f.len() {
        acc = acc.add(&t2_term(f, g, k, variant)?)?;
    }
    Ok(acc)
}

/// Term `k` of the transform-side identity: termwise product of the
/// signed diagonal mask with the two shifted inverse transforms, then
/// a forward transform, shifted up by `k`.
pub fn t3_term<R: CoefficientRing>(f: &Series<R>, g: &Series<R>, k: usize) -> Result<Series<R>> {
    let n = f.len();
    let fk = shifted_inverse(f, k)?;
    let gk = shifted_inverse(g, k)?;
    let mask = delta_mask(k, n).signed();
    let t = fk.termwise(&gk)?.apply_mask(&mask)?;
    transform_fast(&t)?.shift_up(k)
}

/// Convolution modulo `x^N` through shifted inverse transforms.
pub fn convolve_t3<R: CoefficientRing>(f: &Series<R>, g: &Series<R>) -> Result<Series<R>> {
    f.check_like(g)?;
    let mut acc = Series::zeros(f.ring().clone(), f.len())?;
    for k in 0..f.len() {
        acc = acc.add(&t3_term(f, g, k)?)?;
    }
    Ok(acc)
}

fn t4_term_from_inverses<R: CoefficientRing>(
    fi: &Series<R>,
    gi: &Series<R>,
    k: usize,
) -> Result<Series<R>> {
    let n = fi.len();
    let mask = delta_mask(k, n).signed().shifted(k, n);
    let u = mul_sk(fi, k)?;
    let v = mul_sk(gi, k)?;
    let t = u.termwise(&v)?.apply_mask(&mask)?;
    mul_sk(&transform_fast(&t)?, k)
}

/// Term `k` of the single-inverse identity. The two inverse transforms
/// are recomputed here; [`convolve_t4`] computes them once.
pub fn t4_term<R: CoefficientRing>(f: &Series<R>, g: &Series<R>, k: usize) -> Result<Series<R>> {
    t4_term_from_inverses(&inverse_fast(f)?, &inverse_fast(g)?, k)
}

/// Convolution modulo `x^N` with one inverse transform per input.
pub fn convolve_t4<R: CoefficientRing>(f: &Series<R>, g: &Series<R>) -> Result<Series<R>> {
    f.check_like(g)?;
    let fi = inverse_fast(f)?;
    let gi = inverse_fast(g)?;
    let mut acc = Series::zeros(f.ring().clone(), f.len())?;
    for k in 0..f.len() {
        acc = acc.add(&t4_term_from_inverses(&fi, &gi, k)?)?;
    }
    Ok(acc)
}
