//! The Clifford algebra `C_n` (`e_i^2 = -1`, `e_i e_j = -e_j e_i`), its three
//! involutions, `Spin(n)` membership and the covering map onto `SO(n)`.
//!
//! Basis blades are bitmasks: bit `i - 1` stands for `e_i`, and a mask denotes
//! the product of its generators in ascending index order.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::exact::{ExactCoefficient, Overflow, UnitSign};
use crate::matrix::{RatMatrix, Rational};

/// Largest supported dimension.
pub const MAX_DIM: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliffordError {
    #[error("Clifford dimension {0} outside 1..={MAX_DIM}")]
    InvalidDimension(usize),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("generator index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("x e_{0} x̄ is not a vector; input is not in Spin(n)")]
    NotVector(usize),
    #[error("covering map produced an irrational entry")]
    IrrationalEntry,
    #[error(transparent)]
    Overflow(#[from] Overflow),
}

/// A basis blade `e_{i_1} ... e_{i_k}` with `i_1 < ... < i_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Blade(pub u8);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    /// `e_i`, 1-indexed.
    pub fn generator(i: usize) -> Blade {
        assert!((1..=MAX_DIM).contains(&i), "generator index out of range");
        Blade(1 << (i - 1))
    }

    /// The blade with the given 1-indexed generators. Panics on repeats.
    pub fn from_indices(indices: &[usize]) -> Blade {
        let mut mask = 0u8;
        for &i in indices {
            let bit = Blade::generator(i).0;
            assert!(mask & bit == 0, "repeated generator in blade");
            mask |= bit;
        }
        Blade(mask)
    }

    pub fn grade(self) -> u32 {
        self.0.count_ones()
    }

    /// 1-indexed generators in ascending order.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        (0..8).filter(move |b| self.0 & (1 << b) != 0).map(|b| b + 1)
    }

    fn fits(self, dim: usize) -> bool {
        dim >= 8 || (self.0 as u16) >> dim == 0
    }
}

/// Product of two basis blades: `(A xor B, sign)`.
///
/// The sign counts the transpositions needed to move each generator of `b`
/// past the larger generators of `a`, plus one `-1` per shared generator.
pub fn blade_mul(a: Blade, b: Blade) -> (Blade, i8) {
    let mut swaps = 0u32;
    let mut shifted = a.0 >> 1;
    while shifted != 0 {
        swaps += (shifted & b.0).count_ones();
        shifted >>= 1;
    }
    swaps += (a.0 & b.0).count_ones();
    (Blade(a.0 ^ b.0), if swaps.is_multiple_of(2) { 1 } else { -1 })
}

fn reversion_sign(grade: u32) -> bool {
    // (-1)^{k(k-1)/2}: negative for k = 2, 3 mod 4
    matches!(grade % 4, 2 | 3)
}

fn grade_involution_sign(grade: u32) -> bool {
    grade % 2 == 1
}

fn conjugation_sign(grade: u32) -> bool {
    // (-1)^{k(k+1)/2}: negative for k = 1, 2 mod 4
    matches!(grade % 4, 1 | 2)
}

/// An element of `C_n`, stored as a sparse map from blades to nonzero
/// coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CliffordElement {
    dim: usize,
    terms: BTreeMap<Blade, ExactCoefficient>,
}

impl CliffordElement {
    pub fn zero(dim: usize) -> Result<Self, CliffordError> {
        if !(1..=MAX_DIM).contains(&dim) {
            return Err(CliffordError::InvalidDimension(dim));
        }
        Ok(Self { dim, terms: BTreeMap::new() })
    }

    pub fn scalar(dim: usize, c: ExactCoefficient) -> Result<Self, CliffordError> {
        Self::monomial(dim, Blade::SCALAR, c)
    }

    pub fn one(dim: usize) -> Result<Self, CliffordError> {
        Self::scalar(dim, ExactCoefficient::ONE)
    }

    /// `c * blade`.
    pub fn monomial(dim: usize, blade: Blade, c: ExactCoefficient) -> Result<Self, CliffordError> {
        let mut x = Self::zero(dim)?;
        if !blade.fits(dim) {
            return Err(CliffordError::IndexOutOfRange { index: 8 - blade.0.leading_zeros() as usize, dim });
        }
        if !c.is_zero() {
            x.terms.insert(blade, c);
        }
        Ok(x)
    }

    /// The generator `e_i`, 1-indexed.
    pub fn generator(dim: usize, i: usize) -> Result<Self, CliffordError> {
        if i == 0 || i > dim {
            return Err(CliffordError::IndexOutOfRange { index: i, dim });
        }
        Self::monomial(dim, Blade::generator(i), ExactCoefficient::ONE)
    }

    /// Build from `(blade, coefficient)` pairs; repeated blades are summed.
    pub fn from_terms(
        dim: usize,
        terms: impl IntoIterator<Item = (Blade, ExactCoefficient)>,
    ) -> Result<Self, CliffordError> {
        let mut x = Self::zero(dim)?;
        for (blade, c) in terms {
            x.add_term(blade, c)?;
        }
        Ok(x)
    }

    fn add_term(&mut self, blade: Blade, c: ExactCoefficient) -> Result<(), CliffordError> {
        if !blade.fits(self.dim) {
            return Err(CliffordError::IndexOutOfRange { index: 8 - blade.0.leading_zeros() as usize, dim: self.dim });
        }
        let sum = match self.terms.get(&blade) {
            Some(&old) => old.checked_add(c)?,
            None => c,
        };
        if sum.is_zero() {
            self.terms.remove(&blade);
        } else {
            self.terms.insert(blade, sum);
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Nonzero terms in ascending mask order.
    pub fn terms(&self) -> impl Iterator<Item = (Blade, ExactCoefficient)> + '_ {
        self.terms.iter().map(|(&b, &c)| (b, c))
    }

    pub fn coefficient(&self, blade: Blade) -> ExactCoefficient {
        self.terms.get(&blade).copied().unwrap_or(ExactCoefficient::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Plus`/`Minus` when the element is the scalar `1`/`-1`.
    pub fn unit_sign(&self) -> UnitSign {
        match (self.terms.len(), self.terms.get(&Blade::SCALAR)) {
            (1, Some(c)) => c.unit_sign(),
            _ => UnitSign::Neither,
        }
    }

    fn check_dim(&self, other: &Self) -> Result<(), CliffordError> {
        if self.dim != other.dim {
            return Err(CliffordError::DimensionMismatch(self.dim, other.dim));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, CliffordError> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (b, c) in other.terms() {
            out.add_term(b, c)?;
        }
        Ok(out)
    }

    pub fn scale(&self, c: ExactCoefficient) -> Result<Self, CliffordError> {
        let mut out = Self::zero(self.dim)?;
        if c.is_zero() {
            return Ok(out);
        }
        for (b, x) in self.terms() {
            out.terms.insert(b, x.checked_mul(c)?);
        }
        Ok(out)
    }

    pub fn neg(&self) -> Result<Self, CliffordError> {
        self.scale(ExactCoefficient::MINUS_ONE)
    }

    /// The algebra product, bilinear in the blade products.
    pub fn mul(&self, other: &Self) -> Result<Self, CliffordError> {
        self.check_dim(other)?;
        let mut out = Self::zero(self.dim)?;
        for (a, x) in self.terms() {
            for (b, y) in other.terms() {
                let (blade, sign) = blade_mul(a, b);
                let mut c = x.checked_mul(y)?;
                if sign < 0 {
                    c = c.checked_neg()?;
                }
                out.add_term(blade, c)?;
            }
        }
        Ok(out)
    }

    fn map_signs(&self, negate: impl Fn(u32) -> bool) -> Self {
        let terms = self.terms().map(|(b, c)| (b, if negate(b.grade()) { -c } else { c })).collect();
        Self { dim: self.dim, terms }
    }

    /// Reversion `(e_{i_1} ... e_{i_k})^* = e_{i_k} ... e_{i_1}`.
    pub fn star(&self) -> Self {
        self.map_signs(reversion_sign)
    }

    /// Grade involution `e_i' = -e_i`.
    pub fn prime(&self) -> Self {
        self.map_signs(grade_involution_sign)
    }

    /// Conjugation `x̄ = (x')^*`.
    pub fn bar(&self) -> Self {
        self.map_signs(conjugation_sign)
    }

    /// `x' = x` and `x x̄ = 1`.
    pub fn is_spin(&self) -> Result<bool, CliffordError> {
        if self.terms().any(|(b, _)| b.grade() % 2 == 1) {
            return Ok(false);
        }
        Ok(self.mul(&self.bar())?.unit_sign() == UnitSign::Plus)
    }

    /// Matrix of `v -> x v x̄` on `R^n = span{e_1, ..., e_n}`; column `i` is the
    /// image of `e_i`.
    pub fn lambda_matrix(&self) -> Result<RatMatrix, CliffordError> {
        let n = self.dim;
        let xbar = self.bar();
        let mut m = RatMatrix::zeros(n, n);
        for i in 1..=n {
            let image = self.mul(&Self::generator(n, i)?)?.mul(&xbar)?;
            for (b, c) in image.terms() {
                if b.grade() != 1 {
                    return Err(CliffordError::NotVector(i));
                }
                let (a, sqrt2_part, k) = c.parts();
                if sqrt2_part != 0 || k >= 63 {
                    return Err(CliffordError::IrrationalEntry);
                }
                let row = b.0.trailing_zeros() as usize;
                m.set(row, i - 1, Rational::new(a, 1 << k));
            }
        }
        Ok(m)
    }

    /// Terms ordered by grade, then mask: the order used for display.
    fn display_order(&self) -> Vec<(Blade, ExactCoefficient)> {
        let mut v: Vec<_> = self.terms().collect();
        v.sort_by_key(|(b, _)| (b.grade(), b.0));
        v
    }
}

impl fmt::Debug for CliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C{}[{}]", self.dim, self)
    }
}

/// Sum of terms such as `e2 e4`, `-e1`, `sqrt2/2 e2 e3`; the zero element
/// prints as `0`.
impl fmt::Display for CliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.display_order();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (pos, (blade, c)) in terms.into_iter().enumerate() {
            let (negative, magnitude) = match c.unit_sign() {
                UnitSign::Minus => (true, ExactCoefficient::ONE),
                _ => {
                    let (a, b, _) = c.parts();
                    if a < 0 || (a == 0 && b < 0) {
                        (true, -c)
                    } else {
                        (false, c)
                    }
                }
            };
            match (pos, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let unit = magnitude.unit_sign() == UnitSign::Plus;
            if blade == Blade::SCALAR {
                write!(f, "{magnitude}")?;
                continue;
            }
            if !unit {
                write!(f, "{magnitude} ")?;
            }
            for (k, i) in blade.indices().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "e{i}")?;
            }
        }
        Ok(())
    }
}
