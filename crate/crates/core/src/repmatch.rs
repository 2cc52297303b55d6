//! Replacing the holonomy representation of a 2-group by an equivalent one
//! with values in `SO(n, Z)`.
//!
//! Every rational irreducible representation of a 2-group is induced from a
//! degree-one character of some subgroup, so the candidates are the induced
//! representations `Ind_H^G τ`; a multiset of them whose characters add up
//! to the character of the holonomy is found by a depth-first search and
//! assembled block-diagonally. Matching characters is enough: equal rational
//! characters mean equivalent representations.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use thiserror::Error;

use crate::exact::Overflow;
use crate::group::{FiniteMatrixGroup, GroupError, LinearCharacter, RelatorSet, Subgroup};
use crate::matrix::IntMatrix;
use crate::word::Letter;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchError {
    #[error("holonomy group of order {0} is not a 2-group")]
    NotTwoGroup(usize),
    #[error("no sum of induced monomial characters matches the holonomy character")]
    NoCover,
    #[error("assembled representation violates a relator")]
    NotHomomorphism,
    #[error("assembled representation has a generator of determinant -1")]
    NotSpecial,
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Overflow(#[from] Overflow),
}

/// `Ind_H^G τ` as signed permutation matrices on the generators of `G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialRep {
    /// Position of `H` in the subgroup enumeration.
    pub subgroup: usize,
    /// Position of `τ` among the linear characters of `H`.
    pub tau: usize,
    pub degree: usize,
    pub matrices: Vec<IntMatrix>,
    /// Character values, one per conjugacy class.
    pub character: Vec<i64>,
}

/// `φ: G -> SO(n, Z)` given on generators, with its block structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthogonalIntegralRep {
    pub matrices: Vec<IntMatrix>,
    pub blocks: Vec<MonomialRep>,
}

impl OrthogonalIntegralRep {
    pub fn dim(&self) -> usize {
        self.blocks.iter().map(|b| b.degree).sum()
    }

    /// The image of a word in the generators of `G`.
    pub fn evaluate(&self, word: &[Letter]) -> Result<IntMatrix, Overflow> {
        evaluate_signed(self.dim(), &self.matrices, word)
    }
}

fn evaluate_signed(dim: usize, matrices: &[IntMatrix], word: &[Letter]) -> Result<IntMatrix, Overflow> {
    let mut acc = IntMatrix::identity(dim);
    for l in word {
        let m = &matrices[l.gen];
        // signed permutation matrices are orthogonal
        acc = if l.inverse { acc.checked_mul(&m.transpose())? } else { acc.checked_mul(m)? };
    }
    Ok(acc)
}

/// The matrix of `g` in `Ind_H^G τ`: entry `τ(h)` at `(σ(i), i)` where
/// `g t_i = t_{σ(i)} h`.
fn induced_matrix(g: &FiniteMatrixGroup, h: &Subgroup, tau: &LinearCharacter, x: usize) -> IntMatrix {
    let r = h.index();
    let mut m = IntMatrix::zeros(r, r);
    for (i, &ti) in h.coset_reps.iter().enumerate() {
        let gti = g.product(x, ti);
        let (j, hval) = h
            .coset_reps
            .iter()
            .enumerate()
            .find_map(|(j, &tj)| {
                let hh = g.product(g.inverse(tj), gti);
                tau.value(h, hh).map(|v| (j, v))
            })
            .expect("cosets partition the group");
        m.set(j, i, i64::from(hval));
    }
    m
}

/// Builds `Ind_H^G τ`; `subgroup` and `tau` are labels recorded in the result.
pub fn induce(
    g: &FiniteMatrixGroup,
    classes: &[Vec<usize>],
    h: &Subgroup,
    tau: &LinearCharacter,
    subgroup: usize,
    tau_index: usize,
) -> MonomialRep {
    let generator_elements: Vec<usize> = g.generators().iter().map(|m| g.index_of(m).expect("generator")).collect();
    let matrices = generator_elements.iter().map(|&x| induced_matrix(g, h, tau, x)).collect();
    let character = classes
        .iter()
        .map(|class| {
            let x = class[0];
            // χ(x) = Σ over fixed cosets of τ(t_i^{-1} x t_i)
            h.coset_reps
                .iter()
                .filter_map(|&t| tau.value(h, g.product(g.product(g.inverse(t), x), t)))
                .map(i64::from)
                .sum()
        })
        .collect();
    MonomialRep { subgroup, tau: tau_index, degree: h.index(), matrices, character }
}

/// Character of the inclusion `G ⊂ GL(n, Z)` on each class.
pub fn holonomy_character(g: &FiniteMatrixGroup, classes: &[Vec<usize>]) -> Result<Vec<i64>, Overflow> {
    classes.iter().map(|c| g.element(c[0]).trace()).collect()
}

/// All distinct induced monomial characters, ordered by degree, then
/// subgroup discovery index, then character.
pub fn candidates(g: &FiniteMatrixGroup, classes: &[Vec<usize>]) -> Result<Vec<MonomialRep>, MatchError> {
    if !g.is_two_group() {
        return Err(MatchError::NotTwoGroup(g.order()));
    }
    let subgroups = g.subgroups_2group()?;
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for (si, h) in subgroups.iter().enumerate() {
        for (ti, tau) in g.linear_characters(h).iter().enumerate() {
            let rep = induce(g, classes, h, tau, si, ti);
            if seen.insert(rep.character.clone()) {
                out.push(rep);
            }
        }
    }
    out.sort_by(|a, b| (a.degree, a.subgroup, &a.character).cmp(&(b.degree, b.subgroup, &b.character)));
    Ok(out)
}

/// First multiset (in candidate order, non-decreasing indices) whose
/// characters sum to `target`.
fn cover(candidates: &[MonomialRep], target: &[i64], dim: usize) -> Option<Vec<usize>> {
    fn search(
        candidates: &[MonomialRep],
        remaining: &mut Vec<i64>,
        degree_left: usize,
        from: usize,
        chosen: &mut Vec<usize>,
    ) -> bool {
        if degree_left == 0 {
            return remaining.iter().all(|&v| v == 0);
        }
        for i in from..candidates.len() {
            let c = &candidates[i];
            if c.degree > degree_left {
                continue;
            }
            // |χ(g)| <= χ(1) for the remainder, which is itself a character
            let ok = remaining.iter().zip(&c.character).all(|(&r, &v)| {
                let rest = r - v;
                rest.unsigned_abs() as usize <= degree_left - c.degree
            });
            if !ok {
                continue;
            }
            for (r, v) in remaining.iter_mut().zip(&c.character) {
                *r -= v;
            }
            chosen.push(i);
            if search(candidates, remaining, degree_left - c.degree, i, chosen) {
                return true;
            }
            chosen.pop();
            for (r, v) in remaining.iter_mut().zip(&c.character) {
                *r += v;
            }
        }
        false
    }
    let mut remaining = target.to_vec();
    let mut chosen = Vec::new();
    search(candidates, &mut remaining, dim, 0, &mut chosen).then_some(chosen)
}

/// Assembles `φ` from an explicit candidate list (in the order to be
/// searched) and verifies it on `relators`.
pub fn match_with_candidates(
    g: &FiniteMatrixGroup,
    classes: &[Vec<usize>],
    candidates: &[MonomialRep],
    relators: &RelatorSet,
) -> Result<OrthogonalIntegralRep, MatchError> {
    let target = holonomy_character(g, classes)?;
    let chosen = cover(candidates, &target, g.dim()).ok_or(MatchError::NoCover)?;
    let blocks: Vec<MonomialRep> = chosen.into_iter().map(|i| candidates[i].clone()).collect();
    let matrices: Vec<IntMatrix> = (0..g.generators().len())
        .map(|k| {
            let parts: Vec<IntMatrix> = blocks.iter().map(|b| b.matrices[k].clone()).collect();
            IntMatrix::block_diagonal(&parts)
        })
        .collect();
    let rep = OrthogonalIntegralRep { matrices, blocks };
    for r in relators.iter() {
        if !rep.evaluate(r)?.is_identity() {
            return Err(MatchError::NotHomomorphism);
        }
    }
    for m in &rep.matrices {
        if m.determinant()? != 1 {
            return Err(MatchError::NotSpecial);
        }
    }
    Ok(rep)
}

/// `φ: G -> SO(n, Z)` with the same character as the inclusion of `G`.
pub fn match_representation(g: &FiniteMatrixGroup) -> Result<OrthogonalIntegralRep, MatchError> {
    let classes = g.conjugacy_classes();
    let cands = candidates(g, &classes)?;
    match_with_candidates(g, &classes, &cands, &g.relators())
}

/// Character of `φ` on each class, computed from the matrices of class
/// representatives.
pub fn character_of(
    rep: &OrthogonalIntegralRep,
    g: &FiniteMatrixGroup,
    classes: &[Vec<usize>],
) -> Result<Vec<i64>, Overflow> {
    classes.iter().map(|c| rep.evaluate(g.word(c[0]))?.trace()).collect()
}
