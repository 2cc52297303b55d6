//! Small dense matrices over `i64` and exact rationals with checked arithmetic.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Zero};

use crate::exact::Overflow;

pub type Rational = Ratio<i64>;

/// Entry type of a [`Matrix`].
pub trait Scalar: Copy + Eq + Ord + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(self, other: Self) -> Result<Self, Overflow>;
    fn sub(self, other: Self) -> Result<Self, Overflow>;
    fn mul(self, other: Self) -> Result<Self, Overflow>;
}

impl Scalar for i64 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn add(self, other: Self) -> Result<Self, Overflow> {
        self.checked_add(other).ok_or(Overflow)
    }
    fn sub(self, other: Self) -> Result<Self, Overflow> {
        self.checked_sub(other).ok_or(Overflow)
    }
    fn mul(self, other: Self) -> Result<Self, Overflow> {
        self.checked_mul(other).ok_or(Overflow)
    }
}

impl Scalar for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn add(self, other: Self) -> Result<Self, Overflow> {
        CheckedAdd::checked_add(&self, &other).ok_or(Overflow)
    }
    fn sub(self, other: Self) -> Result<Self, Overflow> {
        CheckedSub::checked_sub(&self, &other).ok_or(Overflow)
    }
    fn mul(self, other: Self) -> Result<Self, Overflow> {
        CheckedMul::checked_mul(&self, &other).ok_or(Overflow)
    }
}

/// Row-major `rows x cols` matrix.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type IntMatrix = Matrix<i64>;
pub type RatMatrix = Matrix<Rational>;

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = T::one();
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: &[Vec<T>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged matrix rows");
            data.extend_from_slice(row);
        }
        Self { rows: r, cols: c, data }
    }

    pub fn diagonal(entries: &[T]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, &e) in entries.iter().enumerate() {
            m.set(i, i, e);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows)
                .all(|i| (0..self.cols).all(|j| self.get(i, j) == if i == j { T::one() } else { T::zero() }))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// Panics on shape mismatch.
    pub fn checked_mul(&self, other: &Self) -> Result<Self, Overflow> {
        assert_eq!(self.cols, other.rows, "matrix shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == T::zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b == T::zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = out.data[idx].add(a.mul(b)?)?;
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>, Overflow> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).try_fold(T::zero(), |acc, (&a, &b)| acc.add(a.mul(b)?)))
            .collect()
    }

    pub fn trace(&self) -> Result<T, Overflow> {
        (0..self.rows.min(self.cols)).try_fold(T::zero(), |acc, i| acc.add(self.get(i, i)))
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&x| f(x)).collect() }
    }

    /// Block-diagonal sum of square blocks.
    pub fn block_diagonal(blocks: &[Self]) -> Self {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let mut out = Self::zeros(n, n);
        let mut offset = 0;
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(offset + i, offset + j, b.get(i, j));
                }
            }
            offset += b.rows;
        }
        out
    }
}

impl IntMatrix {
    pub fn to_rational(&self) -> RatMatrix {
        self.map(Rational::from_integer)
    }

    /// Column `j` holds the unique nonzero entry of column `j`; returns for
    /// each column `(row, sign)`, or `None` when not a signed permutation.
    pub fn signed_permutation(&self) -> Option<Vec<(usize, i64)>> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for j in 0..n {
            let mut hit = None;
            for (i, &taken) in seen.iter().enumerate() {
                match self.get(i, j) {
                    0 => {}
                    s @ (1 | -1) if hit.is_none() && !taken => hit = Some((i, s)),
                    _ => return None,
                }
            }
            let (i, s) = hit?;
            seen[i] = true;
            out.push((i, s));
        }
        Some(out)
    }

    pub fn is_signed_permutation(&self) -> bool {
        self.signed_permutation().is_some()
    }

    pub fn determinant(&self) -> Result<i64, Overflow> {
        let d = self.to_rational().determinant()?;
        debug_assert!(d.is_integer());
        Ok(d.to_integer())
    }
}

impl RatMatrix {
    /// Integer matrix if every entry is integral.
    pub fn to_integer(&self) -> Option<IntMatrix> {
        if self.data.iter().all(Ratio::is_integer) {
            Some(Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(Ratio::to_integer).collect() })
        } else {
            None
        }
    }

    /// Determinant by fraction-exact Gaussian elimination.
    pub fn determinant(&self) -> Result<Rational, Overflow> {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = <Rational as One>::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !m.get(r, col).is_zero()) else {
                return Ok(<Rational as Zero>::zero());
            };
            if pivot != col {
                m.swap_rows(pivot, col);
                det = -det;
            }
            let p = m.get(col, col);
            det = Scalar::mul(det, p)?;
            for r in col + 1..n {
                let f = div(m.get(r, col), p)?;
                if f.is_zero() {
                    continue;
                }
                for c in col..n {
                    let v = Scalar::sub(m.get(r, c), Scalar::mul(f, m.get(col, c))?)?;
                    m.set(r, c, v);
                }
            }
        }
        Ok(det)
    }

    /// Gauss-Jordan inverse; `Ok(None)` for singular input.
    pub fn inverse(&self) -> Result<Option<Self>, Overflow> {
        assert!(self.is_square(), "inverse of a non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !m.get(r, col).is_zero()) else {
                return Ok(None);
            };
            m.swap_rows(pivot, col);
            inv.swap_rows(pivot, col);
            let p = m.get(col, col);
            for c in 0..n {
                m.set(col, c, div(m.get(col, c), p)?);
                inv.set(col, c, div(inv.get(col, c), p)?);
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = m.get(r, col);
                if f.is_zero() {
                    continue;
                }
                for c in 0..n {
                    m.set(r, c, Scalar::sub(m.get(r, c), Scalar::mul(f, m.get(col, c))?)?);
                    inv.set(r, c, Scalar::sub(inv.get(r, c), Scalar::mul(f, inv.get(col, c))?)?);
                }
            }
        }
        Ok(Some(inv))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

fn div(a: Rational, b: Rational) -> Result<Rational, Overflow> {
    CheckedDiv::checked_div(&a, &b).ok_or(Overflow)
}

impl<T: Scalar> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<T: Scalar> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str("; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        f.write_str("]")
    }
}
