//! Coefficient rings: an exact-arithmetic contract with two instances,
//! checked 64-bit integers and a prime-modulus field.
//!
//! Ring operations take the ring instance as context so that the field
//! modulus stays configurable at runtime. Elements are plain machine
//! integers; instance mixing is caught where instances actually meet,
//! at the series level.

use std::fmt;

use crate::{Error, Result};

/// Contract for exact coefficient arithmetic.
pub trait CoefficientRing: Clone + PartialEq + fmt::Debug {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;
    fn neg(&self, a: &Self::Elem) -> Result<Self::Elem>;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;

    fn eq_elems(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        a == b
    }

    /// Canonical embedding of a machine integer.
    fn embed(&self, v: i64) -> Self::Elem;

    /// Parse one coefficient in the text file format.
    fn parse(&self, text: &str) -> Result<Self::Elem>;

    /// Render one coefficient for the text file format.
    fn format(&self, a: &Self::Elem) -> String;

    /// Stable name used in reports (`int64`, `mod:<p>`).
    fn name(&self) -> String;
}

/// Signed 64-bit integers; overflow is reported, never wrapped.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct Int64Checked;

impl CoefficientRing for Int64Checked {
    type Elem = i64;

    fn zero(&self) -> i64 {
        0
    }

    fn one(&self) -> i64 {
        1
    }

    fn add(&self, a: &i64, b: &i64) -> Result<i64> {
        a.checked_add(*b).ok_or(Error::Overflow)
    }

    fn sub(&self, a: &i64, b: &i64) -> Result<i64> {
        a.checked_sub(*b).ok_or(Error::Overflow)
    }

    fn neg(&self, a: &i64) -> Result<i64> {
        a.checked_neg().ok_or(Error::Overflow)
    }

    fn mul(&self, a: &i64, b: &i64) -> Result<i64> {
        a.checked_mul(*b).ok_or(Error::Overflow)
    }

    fn embed(&self, v: i64) -> i64 {
        v
    }

    fn parse(&self, text: &str) -> Result<i64> {
        text.parse()
            .map_err(|_| Error::ParseCoeff(text.to_owned()))
    }

    fn format(&self, a: &i64) -> String {
        a.to_string()
    }

    fn name(&self) -> String {
        "int64".to_owned()
    }
}

/// Integers modulo a prime `p`; elements are kept fully reduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Primality of `p` is checked here (deterministic Miller-Rabin).
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Reduce an arbitrary nonnegative value into the field.
    pub fn element(&self, v: u64) -> u64 {
        v % self.p
    }

    /// Fermat inverse power, used by self-tests and nowhere else.
    pub fn pow(&self, base: u64, mut exp: u64) -> u64 {
        let mut base = base % self.p;
        let mut acc = 1 % self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = mul_mod(acc, base, self.p);
            }
            base = mul_mod(base, base, self.p);
            exp >>= 1;
        }
        acc
    }
}

impl CoefficientRing for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.p
    }

    fn add(&self, a: &u64, b: &u64) -> Result<u64> {
        // a, b < p; stay in u64 even for p close to 2^64.
        Ok(if *a >= self.p - b { a - (self.p - b) } else { a + b })
    }

    fn sub(&self, a: &u64, b: &u64) -> Result<u64> {
        Ok(if a >= b { a - b } else { self.p - (b - a) })
    }

    fn neg(&self, a: &u64) -> Result<u64> {
        Ok(if *a == 0 { 0 } else { self.p - a })
    }

    fn mul(&self, a: &u64, b: &u64) -> Result<u64> {
        Ok(mul_mod(*a, *b, self.p))
    }

    fn embed(&self, v: i64) -> u64 {
        (i128::from(v).rem_euclid(i128::from(self.p))) as u64
    }

    fn parse(&self, text: &str) -> Result<u64> {
        let v: i128 = text
            .parse()
            .map_err(|_| Error::ParseCoeff(text.to_owned()))?;
        Ok(v.rem_euclid(i128::from(self.p)) as u64)
    }

    fn format(&self, a: &u64) -> String {
        a.to_string()
    }

    fn name(&self) -> String {
        format!("mod:{}", self.p)
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    if p <= u32::MAX as u64 {
        a * b % p
    } else {
        (u128::from(a) * u128::from(b) % u128::from(p)) as u64
    }
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == small {
            return true;
        }
        if n.is_multiple_of(small) {
            return false;
        }
    }
    // Deterministic Miller-Rabin witness set for the full u64 range.
    let d = (n - 1) >> (n - 1).trailing_zeros();
    let s = (n - 1).trailing_zeros();
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = (u128::from(x) * u128::from(x) % u128::from(n)) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = (u128::from(acc) * u128::from(base) % u128::from(p)) as u64;
        }
        base = (u128::from(base) * u128::from(base) % u128::from(p)) as u64;
        exp >>= 1;
    }
    acc
}
