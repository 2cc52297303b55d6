//! Deciding whether a flat manifold `R^n / Γ` admits a spin structure, and
//! counting them.
//!
//! The pipeline lives in [`decide::analyze`]: restrict the holonomy to a
//! Sylow 2-subgroup, replace it by an equivalent representation in
//! `SO(n, Z)` built from induced monomial representations, lift the
//! generator images to `Spin(n)` exactly, and turn the relations of `Γ` into
//! a linear system over `F_2` whose solutions are the admissible sign
//! choices.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod affine;
pub mod clifford;
pub mod decide;
pub mod exact;
pub mod group;
pub mod matrix;
pub mod repmatch;
pub mod samples;
pub mod spinlift;
pub mod word;

pub use affine::{AffineIsometry, CrystalGroupInput};
pub use clifford::CliffordElement;
pub use decide::{analyze, AnalyzeOptions, SpinReport};
pub use exact::ExactCoefficient;
pub use group::FiniteMatrixGroup;
pub use matrix::{IntMatrix, RatMatrix, Rational};
