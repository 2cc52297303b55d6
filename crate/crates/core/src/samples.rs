//! Small built-in groups used by tests, benchmarks and the CLI.

use alloc::vec::Vec;

use crate::affine::{AffineIsometry, CrystalGroupInput};
use crate::matrix::{IntMatrix, Rational};

fn isometry(linear: &[&[i64]], translation: &[(i64, i64)]) -> AffineIsometry {
    let rows: Vec<Vec<i64>> = linear.iter().map(|r| r.to_vec()).collect();
    let t = translation.iter().map(|&(p, q)| Rational::new(p, q)).collect();
    AffineIsometry::new(IntMatrix::from_rows(&rows).to_rational(), t).expect("well-formed sample")
}

fn group(dim: usize, gens: Vec<AffineIsometry>) -> CrystalGroupInput {
    CrystalGroupInput::new(dim, gens).expect("valid sample group")
}

/// Generators of the 5-dimensional Bieberbach group CARAT calls
/// `min.134.1.2.2` (holonomy `S_4`).
pub fn min_134_1_2_2_generators() -> Vec<AffineIsometry> {
    alloc::vec![
        isometry(
            &[&[1, 0, 0, 0, 0], &[0, 0, -1, 0, 0], &[0, 1, -1, 0, 0], &[0, 0, -1, 1, 0], &[0, 0, -1, 0, 1],],
            &[(-1, 3), (0, 1), (0, 1), (0, 1), (0, 1)],
        ),
        isometry(
            &[&[-1, 0, 0, 0, 0], &[0, 0, -1, 1, 1], &[0, -1, 0, 1, 1], &[0, 0, 0, 1, 0], &[0, 0, 0, 0, 1],],
            &[(0, 1), (1, 2), (0, 1), (-1, 2), (0, 1)],
        ),
    ]
}

pub fn min_134_1_2_2() -> CrystalGroupInput {
    group(5, min_134_1_2_2_generators())
}

/// The two non-lattice generators `A`, `B` of the preimage of a Sylow
/// 2-subgroup (holonomy `D_8`) of `min.134.1.2.2`.
pub fn min_134_1_2_2_sylow_generators() -> Vec<AffineIsometry> {
    alloc::vec![
        isometry(
            &[&[1, 0, 0, 0, 0], &[0, -1, 0, 1, 1], &[0, 0, -1, 1, 1], &[0, 0, 0, 1, 0], &[0, 0, 0, 0, 1],],
            &[(0, 1), (0, 1), (1, 2), (1, 2), (1, 2)],
        ),
        isometry(
            &[&[-1, 0, 0, 0, 0], &[0, 1, 0, -1, -1], &[0, 1, -1, 0, 0], &[0, 1, 0, 0, -1], &[0, 1, 0, -1, 0],],
            &[(2, 3), (0, 1), (1, 2), (1, 2), (0, 1)],
        ),
    ]
}

pub fn min_134_1_2_2_sylow_preimage() -> CrystalGroupInput {
    group(5, min_134_1_2_2_sylow_generators())
}

/// `Z^n`, the fundamental group of the flat `n`-torus.
pub fn torus(dim: usize) -> CrystalGroupInput {
    group(dim, Vec::new())
}

/// The Klein bottle: a glide reflection `(diag(1, -1), (1/2, 0))`.
pub fn klein_bottle() -> CrystalGroupInput {
    group(2, alloc::vec![isometry(&[&[1, 0], &[0, -1]], &[(1, 2), (0, 1)])])
}

/// Orientable 3-manifold with holonomy `C_2`: a screw half-turn.
pub fn dicosm() -> CrystalGroupInput {
    group(3, alloc::vec![isometry(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, -1]], &[(1, 2), (0, 1), (0, 1)])])
}

/// The Hantzsche-Wendt manifold, holonomy `C_2 x C_2`.
pub fn hantzsche_wendt() -> CrystalGroupInput {
    group(
        3,
        alloc::vec![
            isometry(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, -1]], &[(1, 2), (1, 2), (0, 1)]),
            isometry(&[&[-1, 0, 0], &[0, 1, 0], &[0, 0, -1]], &[(0, 1), (1, 2), (1, 2)]),
        ],
    )
}
