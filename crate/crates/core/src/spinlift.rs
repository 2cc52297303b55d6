//! Preimages in `Spin(n)` of signed permutation matrices of determinant 1.
//!
//! `X` is factored as `P'_{σ_1} ... P'_{σ_k} D'` where each `P'_{(p q)}` is
//! the transposition matrix with its `p`-th row negated and `D'` is diagonal.
//! The factors lift to `(1 + e_p e_q)/sqrt2` and `e_{n_1} ... e_{n_l}`
//! respectively; their product is one of the two preimages, the other being
//! its negative.

use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::clifford::{Blade, CliffordElement, CliffordError};
use crate::exact::{ExactCoefficient, Overflow};
use crate::matrix::IntMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiftError {
    #[error("matrix is not a signed permutation matrix")]
    NotSignedPermutation,
    #[error("matrix has determinant -1")]
    NegativeDeterminant,
    #[error("diagonal factor has an odd number of -1 entries")]
    OddDiagonal,
    #[error("factorization does not reassemble to the input")]
    ReassemblyMismatch,
    #[error("lift does not map back to the input matrix")]
    LiftMismatch,
    #[error(transparent)]
    Clifford(#[from] CliffordError),
    #[error(transparent)]
    Overflow(#[from] Overflow),
}

/// `X = P'_{σ_1} ... P'_{σ_k} · diag(diagonal)`, transpositions 1-indexed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedPermutationFactorization {
    pub transpositions: Vec<(usize, usize)>,
    pub diagonal: Vec<i64>,
}

impl SignedPermutationFactorization {
    pub fn reassemble(&self) -> Result<IntMatrix, Overflow> {
        let n = self.diagonal.len();
        let mut acc = IntMatrix::identity(n);
        for &(p, q) in &self.transpositions {
            acc = acc.checked_mul(&modified_transposition(n, p, q))?;
        }
        acc.checked_mul(&IntMatrix::diagonal(&self.diagonal))
    }

    /// 1-indexed positions of the `-1` entries of the diagonal factor.
    pub fn negated_positions(&self) -> Vec<usize> {
        self.diagonal.iter().enumerate().filter(|(_, &d)| d < 0).map(|(i, _)| i + 1).collect()
    }
}

/// `diag(1, ..., -1 (at p), ..., 1) · P_{(p q)}` for `p < q`, 1-indexed.
pub fn modified_transposition(n: usize, p: usize, q: usize) -> IntMatrix {
    let mut m = IntMatrix::identity(n);
    let (p0, q0) = (p - 1, q - 1);
    m.set(p0, p0, 0);
    m.set(q0, q0, 0);
    // P e_p = e_q, P e_q = e_p; then row p is negated
    m.set(q0, p0, 1);
    m.set(p0, q0, -1);
    m
}

/// Factors a matrix of `SO(n, Z)`.
///
/// Transpositions come from the cycles of the underlying permutation, cycles
/// taken in order of their smallest element, each cycle `(c_1 c_2 ... c_m)`
/// written as `(c_1 c_2)(c_2 c_3)...(c_{m-1} c_m)`.
pub fn factor(x: &IntMatrix) -> Result<SignedPermutationFactorization, LiftError> {
    let columns = x.signed_permutation().ok_or(LiftError::NotSignedPermutation)?;
    let n = columns.len();
    // permutation: column j maps to row columns[j].0
    let image: Vec<usize> = columns.iter().map(|&(i, _)| i).collect();
    let mut visited = vec![false; n];
    let mut transpositions = Vec::new();
    for start in 0..n {
        if visited[start] {
            continue;
        }
        let mut cycle = vec![start];
        visited[start] = true;
        let mut next = image[start];
        while next != start {
            visited[next] = true;
            cycle.push(next);
            next = image[next];
        }
        for pair in cycle.windows(2) {
            let (a, b) = (pair[0] + 1, pair[1] + 1);
            transpositions.push((a.min(b), a.max(b)));
        }
    }
    let mut prefix = IntMatrix::identity(n);
    for &(p, q) in &transpositions {
        prefix = prefix.checked_mul(&modified_transposition(n, p, q))?;
    }
    // prefix is orthogonal, so its inverse is its transpose
    let d = prefix.transpose().checked_mul(x)?;
    let mut diagonal = Vec::with_capacity(n);
    for i in 0..n {
        for j in 0..n {
            if i != j && d.get(i, j) != 0 {
                return Err(LiftError::ReassemblyMismatch);
            }
        }
        diagonal.push(d.get(i, i));
    }
    let minus = diagonal.iter().filter(|&&v| v == -1).count();
    if minus % 2 == 1 {
        return Err(LiftError::NegativeDeterminant);
    }
    let f = SignedPermutationFactorization { transpositions, diagonal };
    if &f.reassemble()? != x {
        return Err(LiftError::ReassemblyMismatch);
    }
    Ok(f)
}

/// The element of [`Spin(n)`](CliffordElement) assembled from a factorization.
pub fn lift_factorization(f: &SignedPermutationFactorization) -> Result<CliffordElement, LiftError> {
    let n = f.diagonal.len();
    let mut x = CliffordElement::one(n)?;
    for &(p, q) in &f.transpositions {
        let factor = CliffordElement::from_terms(
            n,
            [
                (Blade::SCALAR, ExactCoefficient::FRAC_1_SQRT_2),
                (Blade::from_indices(&[p, q]), ExactCoefficient::FRAC_1_SQRT_2),
            ],
        )?;
        x = x.mul(&factor)?;
    }
    let negated = f.negated_positions();
    if negated.len() % 2 == 1 {
        return Err(LiftError::OddDiagonal);
    }
    let diag = CliffordElement::monomial(n, Blade::from_indices(&negated), ExactCoefficient::ONE)?;
    Ok(x.mul(&diag)?)
}

/// One preimage `x` of `X` under the covering map; the other is `-x`.
pub fn lift(x: &IntMatrix) -> Result<CliffordElement, LiftError> {
    lift_factorization(&factor(x)?)
}

/// [`lift`] followed by the round-trip check `λ(x) = X`.
pub fn lift_checked(x: &IntMatrix) -> Result<CliffordElement, LiftError> {
    let y = lift(x)?;
    if y.lambda_matrix()? != x.to_rational() {
        return Err(LiftError::LiftMismatch);
    }
    Ok(y)
}
