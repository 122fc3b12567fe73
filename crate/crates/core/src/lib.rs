//! Exact convolution of polynomials and truncated power series through
//! Sierpinski-triangle structure.
//!
//! The library provides four closed-form summation evaluators for the
//! product of two series (built from Sierpinski polynomial masks,
//! Thue-Morse signs and the binomial modulo-2 transform), a
//! non-symmetric divide-and-conquer recursion equivalent to the last of
//! them, and a schoolbook convolution oracle that every other method is
//! verified against. All arithmetic is exact: coefficients live in a
//! checked 64-bit integer ring or in a prime field.

pub mod bintransform;
pub mod bitseq;
pub mod coeff;
mod error;
pub mod formulas;
pub mod recursive;
pub mod series;
pub mod sierpinski;

pub use bintransform::TransformAlgo;
pub use bitseq::BitMask;
pub use coeff::{CoefficientRing, Int64Checked, PrimeField};
pub use error::Error;
pub use formulas::{Method, Variant};
pub use series::{Series, Sign};

pub type Result<T> = std::result::Result<T, Error>;
