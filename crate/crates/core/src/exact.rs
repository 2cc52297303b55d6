//! Exact arithmetic in `Z[sqrt 2, 1/2]`.
//!
//! Every coefficient that shows up in a lift of a signed permutation matrix
//! has the form `(a + b*sqrt2) / 2^k`, so this small ring is all the Clifford
//! module ever needs. Integers are machine-width with checked arithmetic:
//! an overflow is reported, never wrapped.

use core::fmt;
use core::ops::Neg;

use thiserror::Error;

/// Raised whenever an exact operation would leave the `i64` range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("integer overflow in exact arithmetic")]
pub struct Overflow;

/// The value `(a + b*sqrt2) / 2^k`, always stored normalized.
///
/// Normal form: `k == 0` or at least one of `a`, `b` is odd, and zero is
/// `(0, 0, 0)`. Two normalized values are equal iff their fields are equal.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExactCoefficient {
    a: i64,
    b: i64,
    k: u32,
}

/// Outcome of [`ExactCoefficient::unit_sign`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnitSign {
    Plus,
    Minus,
    Neither,
}

impl ExactCoefficient {
    pub const ZERO: Self = Self { a: 0, b: 0, k: 0 };
    pub const ONE: Self = Self { a: 1, b: 0, k: 0 };
    pub const MINUS_ONE: Self = Self { a: -1, b: 0, k: 0 };
    /// `1/sqrt2 = sqrt2/2`.
    pub const FRAC_1_SQRT_2: Self = Self { a: 0, b: 1, k: 1 };

    /// Builds `(a + b*sqrt2) / 2^k` and normalizes it.
    pub fn new(a: i64, b: i64, k: u32) -> Self {
        let mut c = Self { a, b, k };
        c.normalize();
        c
    }

    pub const fn from_int(a: i64) -> Self {
        Self { a, b: 0, k: 0 }
    }

    pub fn parts(self) -> (i64, i64, u32) {
        (self.a, self.b, self.k)
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// True when the `sqrt2` part vanishes.
    pub fn is_rational(self) -> bool {
        self.b == 0
    }

    fn normalize(&mut self) {
        if self.a == 0 && self.b == 0 {
            self.k = 0;
            return;
        }
        while self.k > 0 && self.a % 2 == 0 && self.b % 2 == 0 {
            self.a /= 2;
            self.b /= 2;
            self.k -= 1;
        }
    }

    /// Rescales to denominator `2^k` with `k >= self.k`.
    fn lifted(self, k: u32) -> Result<(i64, i64), Overflow> {
        let shift = k - self.k;
        let factor = 1i64.checked_shl(shift).filter(|_| shift < 63).ok_or(Overflow)?;
        Ok((self.a.checked_mul(factor).ok_or(Overflow)?, self.b.checked_mul(factor).ok_or(Overflow)?))
    }

    pub fn checked_add(self, other: Self) -> Result<Self, Overflow> {
        let k = self.k.max(other.k);
        let (a1, b1) = self.lifted(k)?;
        let (a2, b2) = other.lifted(k)?;
        Ok(Self::new(a1.checked_add(a2).ok_or(Overflow)?, b1.checked_add(b2).ok_or(Overflow)?, k))
    }

    pub fn checked_sub(self, other: Self) -> Result<Self, Overflow> {
        self.checked_add(other.checked_neg()?)
    }

    /// `(a + b r)(c + d r) = (ac + 2bd) + (ad + bc) r` with `r = sqrt2`.
    pub fn checked_mul(self, other: Self) -> Result<Self, Overflow> {
        let ac = self.a.checked_mul(other.a).ok_or(Overflow)?;
        let bd2 = self.b.checked_mul(other.b).and_then(|v| v.checked_mul(2)).ok_or(Overflow)?;
        let ad = self.a.checked_mul(other.b).ok_or(Overflow)?;
        let bc = self.b.checked_mul(other.a).ok_or(Overflow)?;
        let k = self.k.checked_add(other.k).ok_or(Overflow)?;
        Ok(Self::new(ac.checked_add(bd2).ok_or(Overflow)?, ad.checked_add(bc).ok_or(Overflow)?, k))
    }

    pub fn checked_neg(self) -> Result<Self, Overflow> {
        Ok(Self { a: self.a.checked_neg().ok_or(Overflow)?, b: self.b.checked_neg().ok_or(Overflow)?, k: self.k })
    }

    pub fn unit_sign(self) -> UnitSign {
        match (self.a, self.b, self.k) {
            (1, 0, 0) => UnitSign::Plus,
            (-1, 0, 0) => UnitSign::Minus,
            _ => UnitSign::Neither,
        }
    }

    /// Floating-point value, for diagnostics and tests only.
    pub fn to_f64(self) -> f64 {
        (self.a as f64 + self.b as f64 * core::f64::consts::SQRT_2) / pow2(self.k)
    }
}

fn pow2(k: u32) -> f64 {
    let mut v = 1.0;
    for _ in 0..k {
        v *= 2.0;
    }
    v
}

impl Default for ExactCoefficient {
    fn default() -> Self {
        Self::ZERO
    }
}

impl From<i64> for ExactCoefficient {
    fn from(a: i64) -> Self {
        Self::from_int(a)
    }
}

impl Neg for ExactCoefficient {
    type Output = Self;

    /// Panics only for `i64::MIN` parts, which normalization never produces
    /// from the lifts this crate builds.
    fn neg(self) -> Self {
        self.checked_neg().expect("negation overflow")
    }
}

impl fmt::Debug for ExactCoefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}+{}*sqrt2)/2^{}", self.a, self.b, self.k)
    }
}

impl fmt::Display for ExactCoefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b, k) = (self.a, self.b, self.k);
        let numer_is_compound = a != 0 && b != 0;
        if numer_is_compound && k > 0 {
            f.write_str("(")?;
        }
        match (a, b) {
            (_, 0) => write!(f, "{a}")?,
            (0, 1) => f.write_str("sqrt2")?,
            (0, -1) => f.write_str("-sqrt2")?,
            (0, _) => write!(f, "{b}*sqrt2")?,
            (_, 1) => write!(f, "{a}+sqrt2")?,
            (_, -1) => write!(f, "{a}-sqrt2")?,
            (_, b) if b < 0 => write!(f, "{a}-{}*sqrt2", -b)?,
            _ => write!(f, "{a}+{b}*sqrt2")?,
        }
        if numer_is_compound && k > 0 {
            f.write_str(")")?;
        }
        if k > 0 {
            if k < 63 {
                write!(f, "/{}", 1u64 << k)?;
            } else {
                write!(f, "/2^{k}")?;
            }
        }
        Ok(())
    }
}
