//! Elements `(A, t)` of `GL(n, Q) ⋉ Q^n`, crystallographic group input with
//! translation lattice `Z^n`, and evaluation of words to lattice elements.

use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::exact::Overflow;
use crate::matrix::{IntMatrix, RatMatrix, Rational, Scalar};
use crate::word::Letter;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AffineError {
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("linear part is {rows}x{cols}, expected {dim}x{dim}")]
    Shape { rows: usize, cols: usize, dim: usize },
    #[error("generator {generator}: linear part is not an integer matrix")]
    NonIntegralLinearPart { generator: usize },
    #[error("generator {generator}: linear part has determinant {det}, expected ±1")]
    NotUnimodular { generator: usize, det: Rational },
    #[error("linear part is singular")]
    Singular,
    #[error("word does not evaluate to a pure translation")]
    NonIdentityLinearPart,
    #[error("word evaluates to a non-integral translation")]
    NonIntegralTranslation,
    #[error("generator index {index} out of range ({count} available)")]
    UnknownGenerator { index: usize, count: usize },
    #[error("lattice index {index} out of range for dimension {dim}")]
    UnknownLattice { index: usize, dim: usize },
    #[error(transparent)]
    Overflow(#[from] Overflow),
}

/// The map `x -> A x + t`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineIsometry {
    linear: RatMatrix,
    translation: Vec<Rational>,
}

impl AffineIsometry {
    pub fn new(linear: RatMatrix, translation: Vec<Rational>) -> Result<Self, AffineError> {
        let dim = translation.len();
        if linear.rows() != dim || linear.cols() != dim {
            return Err(AffineError::Shape { rows: linear.rows(), cols: linear.cols(), dim });
        }
        Ok(Self { linear, translation })
    }

    pub fn identity(dim: usize) -> Self {
        Self { linear: RatMatrix::identity(dim), translation: vec![Rational::from_integer(0); dim] }
    }

    /// Translation by an integer vector.
    pub fn translation(vector: &[i64]) -> Self {
        Self {
            linear: RatMatrix::identity(vector.len()),
            translation: vector.iter().map(|&v| Rational::from_integer(v)).collect(),
        }
    }

    /// The lattice generator `a_i = (I, e_i)`, 1-indexed.
    pub fn lattice_generator(dim: usize, i: usize) -> Self {
        let mut v = vec![0; dim];
        v[i - 1] = 1;
        Self::translation(&v)
    }

    /// Splits a homogeneous `(n+1)x(n+1)` matrix with last row `(0, ..., 0, 1)`.
    pub fn from_homogeneous(m: &RatMatrix) -> Option<Self> {
        if !m.is_square() || m.rows() < 2 {
            return None;
        }
        let n = m.rows() - 1;
        let last_ok =
            (0..n).all(|j| m.get(n, j) == Rational::from_integer(0)) && m.get(n, n) == Rational::from_integer(1);
        if !last_ok {
            return None;
        }
        let mut linear = RatMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                linear.set(i, j, m.get(i, j));
            }
        }
        let translation = (0..n).map(|i| m.get(i, n)).collect();
        Some(Self { linear, translation })
    }

    pub fn dim(&self) -> usize {
        self.translation.len()
    }

    pub fn linear(&self) -> &RatMatrix {
        &self.linear
    }

    pub fn translation_part(&self) -> &[Rational] {
        &self.translation
    }

    /// `(A1, t1)(A2, t2) = (A1 A2, A1 t2 + t1)`.
    pub fn compose(&self, other: &Self) -> Result<Self, AffineError> {
        let linear = self.linear.checked_mul(&other.linear)?;
        let moved = self.linear.mul_vec(&other.translation)?;
        let translation = moved.into_iter().zip(&self.translation).map(|(a, &b)| a.add(b)).collect::<Result<_, _>>()?;
        Ok(Self { linear, translation })
    }

    /// `(A, t)^{-1} = (A^{-1}, -A^{-1} t)`.
    pub fn inverse(&self) -> Result<Self, AffineError> {
        let inv = self.linear.inverse()?.ok_or(AffineError::Singular)?;
        let moved = inv.mul_vec(&self.translation)?;
        Ok(Self { linear: inv, translation: moved.into_iter().map(|v| -v).collect() })
    }

    pub fn integral_linear_part(&self) -> Option<IntMatrix> {
        self.linear.to_integer()
    }

    /// Integral translation vector when the linear part is the identity.
    pub fn as_lattice_element(&self) -> Result<Vec<i64>, AffineError> {
        if !self.linear.is_identity() {
            return Err(AffineError::NonIdentityLinearPart);
        }
        self.translation
            .iter()
            .map(|t| if t.is_integer() { Ok(t.to_integer()) } else { Err(AffineError::NonIntegralTranslation) })
            .collect()
    }
}

/// A crystallographic group `⟨a_1, ..., a_n, γ_1, ..., γ_t⟩` with lattice
/// `Z^n` and integral linear parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrystalGroupInput {
    dim: usize,
    gens: Vec<AffineIsometry>,
}

impl CrystalGroupInput {
    /// Validates that every linear part lies in `GL(n, Z)`.
    pub fn new(dim: usize, gens: Vec<AffineIsometry>) -> Result<Self, AffineError> {
        if dim == 0 {
            return Err(AffineError::ZeroDimension);
        }
        for (g, gen) in gens.iter().enumerate() {
            if gen.dim() != dim {
                return Err(AffineError::Shape { rows: gen.linear.rows(), cols: gen.linear.cols(), dim });
            }
            let int = gen.integral_linear_part().ok_or(AffineError::NonIntegralLinearPart { generator: g })?;
            let det = int.determinant()?;
            if det.abs() != 1 {
                return Err(AffineError::NotUnimodular { generator: g, det: Rational::from_integer(det) });
            }
        }
        Ok(Self { dim, gens })
    }

    /// The free abelian group `Z^n`, no non-lattice generators.
    pub fn torus(dim: usize) -> Result<Self, AffineError> {
        Self::new(dim, Vec::new())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[AffineIsometry] {
        &self.gens
    }

    /// Linear parts of the non-lattice generators: the integral holonomy
    /// representation on generators.
    pub fn holonomy_matrices(&self) -> Vec<IntMatrix> {
        self.gens.iter().map(|g| g.integral_linear_part().expect("validated at construction")).collect()
    }

    pub fn is_orientable(&self) -> Result<bool, AffineError> {
        for m in self.holonomy_matrices() {
            if m.determinant()? != 1 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn word_to_lattice(&self, word: &[AffineLetter]) -> Result<LatticeWord, AffineError> {
        word_to_lattice(self.dim, &self.gens, word)
    }
}

/// A letter of a word in `Γ`: a non-lattice generator or a lattice generator,
/// either possibly inverted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AffineLetter {
    Generator(Letter),
    Lattice { index: usize, inverse: bool },
}

impl From<Letter> for AffineLetter {
    fn from(l: Letter) -> Self {
        AffineLetter::Generator(l)
    }
}

/// The lattice element `a_1^{α_1} ... a_n^{α_n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticeWord {
    pub exponents: Vec<i64>,
}

/// Evaluates `word` by affine composition over `gens` (and the lattice
/// generators) and returns the exponents of the resulting lattice element.
pub fn word_to_lattice(dim: usize, gens: &[AffineIsometry], word: &[AffineLetter]) -> Result<LatticeWord, AffineError> {
    let value = evaluate_word(dim, gens, word)?;
    Ok(LatticeWord { exponents: value.as_lattice_element()? })
}

pub fn evaluate_word(
    dim: usize,
    gens: &[AffineIsometry],
    word: &[AffineLetter],
) -> Result<AffineIsometry, AffineError> {
    let inverses = gens.iter().map(AffineIsometry::inverse).collect::<Result<Vec<_>, _>>()?;
    let mut acc = AffineIsometry::identity(dim);
    for letter in word {
        let factor = match *letter {
            AffineLetter::Generator(Letter { gen, inverse }) => {
                let g = gens.get(gen).ok_or(AffineError::UnknownGenerator { index: gen, count: gens.len() })?;
                if inverse {
                    inverses[gen].clone()
                } else {
                    g.clone()
                }
            }
            AffineLetter::Lattice { index, inverse } => {
                if index == 0 || index > dim {
                    return Err(AffineError::UnknownLattice { index, dim });
                }
                let mut v = vec![0; dim];
                v[index - 1] = if inverse { -1 } else { 1 };
                AffineIsometry::translation(&v)
            }
        };
        acc = acc.compose(&factor)?;
    }
    Ok(acc)
}
