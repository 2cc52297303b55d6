//! Spin structures as sign choices.
//!
//! On the Sylow cover `Γ = ⟨a_1, ..., a_n, γ_1, ..., γ_m⟩` a homomorphism
//! `ε: Γ -> Spin(n)` over `φ` must send `a_i -> (-1)^{u_i}` and
//! `γ_j -> (-1)^{s_j} x_j` with `x_j` a fixed lift of `φ(g_j)`. Since the
//! `±1` are central, each relation of `Γ` becomes one affine equation over
//! `F_2` in the `u` and `s` variables:
//!
//! * commutators of the lattice: always satisfied;
//! * `γ_j a_i γ_j^{-1} = Π_k a_k^{ϱ_{ki}(g_j)}`: `Σ_k ϱ_{ki} u_k + u_i = 0`;
//! * a relator `w` of `G` with `γ_w = a^α` and `Π x_w = c = ±1`:
//!   `Σ s + Σ α_t u_t + [c = -1] = 0`.
//!
//! The solution count of that system is the number of spin structures on
//! the cover. [`brute_force_count`] checks every sign assignment by direct
//! Clifford multiplication instead and serves as the oracle for the solver.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::affine::{evaluate_word, word_to_lattice, AffineError, AffineIsometry, AffineLetter, CrystalGroupInput};
use crate::clifford::{CliffordElement, CliffordError};
use crate::exact::{ExactCoefficient, Overflow, UnitSign};
use crate::group::{two_part, FiniteMatrixGroup, GroupError, RelatorSet, DEFAULT_CAP};
use crate::matrix::IntMatrix;
use crate::repmatch::{self, MatchError, OrthogonalIntegralRep};
use crate::spinlift::{self, LiftError};
use crate::word::{Letter, Word};

/// Largest `n + m` the brute-force oracle will enumerate.
pub const BRUTE_FORCE_MAX_VARS: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecideError {
    #[error("relator {relator}: product of lifts is not ±1")]
    NonCentralRelator { relator: usize },
    #[error("generator {generator}: linear part differs from the holonomy generator")]
    LinearPartMismatch { generator: usize },
    #[error("brute force over {vars} sign variables exceeds the bound of {BRUTE_FORCE_MAX_VARS}")]
    BoundExceeded { vars: usize },
    #[error("solver count {solver} disagrees with brute-force count {oracle}")]
    OracleMismatch { solver: u128, oracle: u128 },
    #[error("skipping the Sylow step needs 2-group holonomy, got order {0}")]
    NotTwoGroup(usize),
    #[error("{0} free sign variables do not fit the count type")]
    CountOverflow(usize),
    #[error(transparent)]
    Affine(#[from] AffineError),
    #[error(transparent)]
    Clifford(#[from] CliffordError),
    #[error(transparent)]
    Lift(#[from] LiftError),
    #[error(transparent)]
    Match(#[from] MatchError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Overflow(#[from] Overflow),
}

/// A row over `F_2`: `Σ bits[v] x_v + constant = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct F2Row {
    words: Vec<u64>,
    nvars: usize,
    pub constant: bool,
}

impl F2Row {
    pub fn zero(nvars: usize) -> Self {
        Self { words: vec![0; nvars.div_ceil(64)], nvars, constant: false }
    }

    pub fn get(&self, v: usize) -> bool {
        self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn flip(&mut self, v: usize) {
        self.words[v / 64] ^= 1 << (v % 64);
    }

    pub fn set(&mut self, v: usize, value: bool) {
        if self.get(v) != value {
            self.flip(v);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn xor_assign(&mut self, other: &Self) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
        self.constant ^= other.constant;
    }

    /// `Σ bits · assignment` (without the constant).
    pub fn evaluate(&self, assignment: &[bool]) -> bool {
        (0..self.nvars).filter(|&v| self.get(v) && assignment[v]).count() % 2 == 1
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.nvars).filter(|&v| self.get(v)).collect()
    }
}

/// Where a row of the sign system comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowOrigin {
    /// `γ_j a_i γ_j^{-1}`, lattice index 1-based.
    LatticeAction { generator: usize, lattice: usize },
    /// A relator of the holonomy group, by position in the relator set.
    Relator(usize),
}

/// Variables `u_1..u_n` (indices `0..n`) then `s_1..s_m` (indices `n..n+m`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignSystem {
    pub lattice_vars: usize,
    pub generator_vars: usize,
    pub rows: Vec<(F2Row, RowOrigin)>,
}

impl SignSystem {
    pub fn nvars(&self) -> usize {
        self.lattice_vars + self.generator_vars
    }

    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        self.rows.iter().all(|(r, _)| r.evaluate(assignment) == r.constant)
    }
}

/// Result of Gaussian elimination over `F_2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct F2Solution {
    pub nvars: usize,
    pub rank: usize,
    /// `None` when inconsistent.
    pub particular: Option<Vec<bool>>,
    /// Basis of the homogeneous solution space.
    pub basis: Vec<Vec<bool>>,
}

impl F2Solution {
    pub fn is_consistent(&self) -> bool {
        self.particular.is_some()
    }

    pub fn free_dimension(&self) -> usize {
        self.nvars - self.rank
    }

    /// `0` or `2^{nvars - rank}`.
    pub fn count(&self) -> Result<u128, DecideError> {
        if !self.is_consistent() {
            return Ok(0);
        }
        let d = self.free_dimension();
        1u128.checked_shl(d as u32).filter(|_| d < 128).ok_or(DecideError::CountOverflow(d))
    }

    /// Up to `limit` solutions in the order of the basis bit patterns.
    pub fn solutions(&self, limit: usize) -> Vec<Vec<bool>> {
        let Some(p) = &self.particular else { return Vec::new() };
        let d = self.basis.len();
        let total = if d >= usize::BITS as usize { usize::MAX } else { 1usize << d };
        (0..total.min(limit))
            .map(|mask| {
                let mut x = p.clone();
                for (k, b) in self.basis.iter().enumerate() {
                    if mask >> k & 1 == 1 {
                        for (xi, &bi) in x.iter_mut().zip(b) {
                            *xi ^= bi;
                        }
                    }
                }
                x
            })
            .collect()
    }
}

/// Gaussian elimination to reduced row echelon form.
pub fn solve(system: &SignSystem) -> F2Solution {
    solve_rows(system.nvars(), system.rows.iter().map(|(r, _)| r.clone()).collect())
}

pub fn solve_rows(nvars: usize, mut rows: Vec<F2Row>) -> F2Solution {
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0;
    for col in 0..nvars {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r].get(col)) else { continue };
        rows.swap(rank, p);
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row.get(col) {
                row.xor_assign(&pivot_row);
            }
        }
        pivots.push(col);
        rank += 1;
    }
    let consistent = rows[rank..].iter().all(|r| !r.constant);
    let pivot_of: Vec<Option<usize>> = {
        let mut v = vec![None; nvars];
        for (r, &c) in pivots.iter().enumerate() {
            v[c] = Some(r);
        }
        v
    };
    let particular = consistent.then(|| {
        let mut x = vec![false; nvars];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = rows[r].constant;
        }
        x
    });
    let basis = (0..nvars)
        .filter(|&c| pivot_of[c].is_none())
        .map(|free| {
            let mut x = vec![false; nvars];
            x[free] = true;
            for (r, &c) in pivots.iter().enumerate() {
                x[c] = rows[r].get(free);
            }
            x
        })
        .collect();
    F2Solution { nvars, rank, particular, basis }
}

/// Everything needed to set up the sign problem on the Sylow cover.
#[derive(Debug, Clone)]
pub struct SylowCover {
    pub dim: usize,
    /// The 2-group `G` with generators `g_j`.
    pub holonomy: FiniteMatrixGroup,
    /// `γ_j ∈ Γ` with linear part `g_j`.
    pub gammas: Vec<AffineIsometry>,
    pub phi: OrthogonalIntegralRep,
    /// `x_j` with `λ(x_j) = φ(g_j)`.
    pub lifts: Vec<CliffordElement>,
    pub relators: RelatorSet,
}

/// How the representation matcher orders its candidates before the search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CandidateOrder {
    #[default]
    Canonical,
    Reversed,
    Rotated(usize),
}

impl SylowCover {
    pub fn build(
        holonomy: FiniteMatrixGroup,
        gammas: Vec<AffineIsometry>,
        order: CandidateOrder,
    ) -> Result<Self, AnalyzeError> {
        let dim = holonomy.dim();
        for (j, (g, m)) in gammas.iter().zip(holonomy.generators()).enumerate() {
            if g.integral_linear_part().as_ref() != Some(m) {
                return Err(AnalyzeError::new(Stage::Representation, DecideError::LinearPartMismatch { generator: j }));
            }
        }
        let classes = holonomy.conjugacy_classes();
        let relators = holonomy.relators();
        let phi = (|| {
            let mut cands = repmatch::candidates(&holonomy, &classes)?;
            match order {
                CandidateOrder::Canonical => {}
                CandidateOrder::Reversed => cands.reverse(),
                CandidateOrder::Rotated(k) if !cands.is_empty() => {
                    let k = k % cands.len();
                    cands.rotate_left(k);
                }
                CandidateOrder::Rotated(_) => {}
            }
            repmatch::match_with_candidates(&holonomy, &classes, &cands, &relators)
        })()
        .map_err(|e| AnalyzeError::new(Stage::Representation, e.into()))?;
        let lifts = phi
            .matrices
            .iter()
            .map(spinlift::lift_checked)
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| AnalyzeError::new(Stage::Lifting, e.into()))?;
        Ok(Self { dim, holonomy, gammas, phi, lifts, relators })
    }

    pub fn generator_count(&self) -> usize {
        self.gammas.len()
    }

    fn affine_word(word: &[Letter]) -> Vec<AffineLetter> {
        word.iter().copied().map(AffineLetter::Generator).collect()
    }

    /// `Π x_{i_l}^{±1}` over a word, inverses taken as conjugates.
    pub fn lift_product(&self, word: &[Letter]) -> Result<CliffordElement, DecideError> {
        let mut acc = CliffordElement::one(self.dim)?;
        for l in word {
            let x = &self.lifts[l.gen];
            acc = if l.inverse { acc.mul(&x.bar())? } else { acc.mul(x)? };
        }
        Ok(acc)
    }

    /// The row for the relation coming from a relator word of `G`.
    pub fn relator_row(&self, word: &[Letter], relator: usize) -> Result<F2Row, DecideError> {
        let n = self.dim;
        let alpha = word_to_lattice(n, &self.gammas, &Self::affine_word(word))?;
        let c = self.lift_product(word)?;
        let constant = match c.unit_sign() {
            UnitSign::Plus => false,
            UnitSign::Minus => true,
            UnitSign::Neither => return Err(DecideError::NonCentralRelator { relator }),
        };
        let mut row = F2Row::zero(n + self.generator_count());
        for l in word {
            row.flip(n + l.gen);
        }
        for (t, &a) in alpha.exponents.iter().enumerate() {
            row.set(t, a.rem_euclid(2) == 1);
        }
        row.constant = constant;
        Ok(row)
    }
}

fn lattice_action_rows(n: usize, nvars: usize, holonomy: &[IntMatrix]) -> Vec<(F2Row, RowOrigin)> {
    let mut rows = Vec::new();
    for (j, m) in holonomy.iter().enumerate() {
        for i in 0..n {
            let mut row = F2Row::zero(nvars);
            for k in 0..n {
                row.set(k, m.get(k, i).rem_euclid(2) == 1);
            }
            row.flip(i);
            rows.push((row, RowOrigin::LatticeAction { generator: j, lattice: i + 1 }));
        }
    }
    rows
}

/// Assembles the affine system over `F_2` for the cover.
pub fn build_system(cover: &SylowCover) -> Result<SignSystem, DecideError> {
    let n = cover.dim;
    let m = cover.generator_count();
    let mut rows = lattice_action_rows(n, n + m, cover.holonomy.generators());
    for (k, w) in cover.relators.iter().enumerate() {
        rows.push((cover.relator_row(w, k)?, RowOrigin::Relator(k)));
    }
    Ok(SignSystem { lattice_vars: n, generator_vars: m, rows })
}

/// `ε(a_i)` and `ε(γ_j)` for a sign assignment.
fn signed_images(
    cover: &SylowCover,
    u: &[bool],
    s: &[bool],
) -> Result<(Vec<CliffordElement>, Vec<CliffordElement>), DecideError> {
    let n = cover.dim;
    let sign = |b: bool| if b { ExactCoefficient::MINUS_ONE } else { ExactCoefficient::ONE };
    let lattice = u.iter().map(|&b| CliffordElement::scalar(n, sign(b))).collect::<Result<Vec<_>, _>>()?;
    let gens = cover.lifts.iter().zip(s).map(|(x, &b)| x.scale(sign(b))).collect::<Result<Vec<_>, _>>()?;
    Ok((lattice, gens))
}

fn signed_power(x: &CliffordElement, exponent: i64) -> Result<CliffordElement, DecideError> {
    let base = if exponent < 0 { x.bar() } else { x.clone() };
    let mut acc = CliffordElement::one(x.dim())?;
    for _ in 0..exponent.unsigned_abs() {
        acc = acc.mul(&base)?;
    }
    Ok(acc)
}

/// Precomputed lattice exponents of the relators, shared by the checks.
struct RelatorData {
    words: Vec<Word>,
    alphas: Vec<Vec<i64>>,
}

impl RelatorData {
    fn new(cover: &SylowCover) -> Result<Self, DecideError> {
        let words: Vec<Word> = cover.relators.iter().cloned().collect();
        let alphas = words
            .iter()
            .map(|w| Ok(word_to_lattice(cover.dim, &cover.gammas, &SylowCover::affine_word(w))?.exponents))
            .collect::<Result<_, DecideError>>()?;
        Ok(Self { words, alphas })
    }
}

fn check_with(cover: &SylowCover, data: &RelatorData, u: &[bool], s: &[bool]) -> Result<bool, DecideError> {
    let n = cover.dim;
    let (eps_a, eps_g) = signed_images(cover, u, s)?;
    let one = CliffordElement::one(n)?;
    for (j, m) in cover.holonomy.generators().iter().enumerate() {
        let g = &eps_g[j];
        for i in 0..n {
            let lhs = g.mul(&eps_a[i])?.mul(&g.bar())?;
            let mut rhs = one.clone();
            for (k, a) in eps_a.iter().enumerate() {
                rhs = rhs.mul(&signed_power(a, m.get(k, i))?)?;
            }
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    for (w, alpha) in data.words.iter().zip(&data.alphas) {
        let mut acc = one.clone();
        for l in w {
            let g = &eps_g[l.gen];
            acc = if l.inverse { acc.mul(&g.bar())? } else { acc.mul(g)? };
        }
        for (a, &e) in eps_a.iter().zip(alpha) {
            // γ_w = a^α, so ε(γ_w) ε(a)^{-α} must be 1
            acc = acc.mul(&signed_power(a, -e)?)?;
        }
        if acc != one {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks every relation of the cover under the signs `u`, `s` by exact
/// multiplication in the Clifford algebra.
pub fn check_assignment(cover: &SylowCover, u: &[bool], s: &[bool]) -> Result<bool, DecideError> {
    check_with(cover, &RelatorData::new(cover)?, u, s)
}

/// Number of sign assignments that extend to a homomorphism, by exhaustive
/// enumeration.
pub fn brute_force_count(cover: &SylowCover) -> Result<u128, DecideError> {
    let n = cover.dim;
    let m = cover.generator_count();
    if n + m > BRUTE_FORCE_MAX_VARS {
        return Err(DecideError::BoundExceeded { vars: n + m });
    }
    let data = RelatorData::new(cover)?;
    let mut count = 0u128;
    for mask in 0u32..(1 << (n + m)) {
        let bits: Vec<bool> = (0..n + m).map(|v| mask >> v & 1 == 1).collect();
        if check_with(cover, &data, &bits[..n], &bits[n..])? {
            count += 1;
        }
    }
    Ok(count)
}

/// `|Hom(Γ', Z_2)|`: the homogeneous version of the same system over the
/// full holonomy group and the input generators.
pub fn hom_count_z2(input: &CrystalGroupInput, cap: usize) -> Result<u128, DecideError> {
    let full = FiniteMatrixGroup::close(input.dim(), input.holonomy_matrices(), cap)?;
    hom_count_with_holonomy(input, &full)
}

fn hom_count_with_holonomy(input: &CrystalGroupInput, full: &FiniteMatrixGroup) -> Result<u128, DecideError> {
    let n = input.dim();
    let t = input.generators().len();
    let mut rows: Vec<F2Row> = lattice_action_rows(n, n + t, full.generators()).into_iter().map(|(r, _)| r).collect();
    for w in full.relators().iter() {
        let alpha = input.word_to_lattice(&SylowCover::affine_word(w))?;
        let mut row = F2Row::zero(n + t);
        for l in w {
            row.flip(n + l.gen);
        }
        for (k, &a) in alpha.exponents.iter().enumerate() {
            row.set(k, a.rem_euclid(2) == 1);
        }
        rows.push(row);
    }
    solve_rows(n + t, rows).count()
}

/// Pipeline stage, attached to errors from [`analyze`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stage {
    Orientation,
    Holonomy,
    Sylow,
    Representation,
    Lifting,
    Relations,
    Oracle,
    Cohomology,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Stage::Orientation => "orientation",
            Stage::Holonomy => "holonomy closure",
            Stage::Sylow => "Sylow 2-subgroup",
            Stage::Representation => "representation matching",
            Stage::Lifting => "spin lifting",
            Stage::Relations => "relation system",
            Stage::Oracle => "brute-force oracle",
            Stage::Cohomology => "H^1 count",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{stage}: {error}")]
pub struct AnalyzeError {
    pub stage: Stage,
    pub error: DecideError,
}

impl AnalyzeError {
    pub fn new(stage: Stage, error: DecideError) -> Self {
        Self { stage, error }
    }

    pub fn is_cap_exceeded(&self) -> bool {
        matches!(self.error, DecideError::Group(GroupError::CapExceeded { .. }))
    }
}

fn at<E: Into<DecideError>>(stage: Stage) -> impl FnOnce(E) -> AnalyzeError {
    move |e| AnalyzeError::new(stage, e.into())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnalyzeOptions {
    /// Hard cap on the holonomy group order.
    pub cap: usize,
    /// Restrict to a Sylow 2-subgroup first (required unless the holonomy
    /// is already a 2-group).
    pub use_sylow: bool,
    pub candidate_order: CandidateOrder,
    /// Cross-check the solver against [`brute_force_count`].
    pub oracle: bool,
    /// Record up to this many explicit sign assignments (0: none).
    pub solution_limit: usize,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        Self {
            cap: DEFAULT_CAP,
            use_sylow: true,
            candidate_order: CandidateOrder::Canonical,
            oracle: false,
            solution_limit: 0,
        }
    }
}

/// Explicit homomorphisms on the cover's generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpsilonAssignments {
    /// `γ_j` as words in the input generators.
    pub generator_words: Vec<Word>,
    /// The reference lifts `x_j`.
    pub lifts: Vec<CliffordElement>,
    /// Each solution as `(u, s)`: `ε(a_i) = (-1)^{u_i}`, `ε(γ_j) = (-1)^{s_j} x_j`.
    pub solutions: Vec<(Vec<bool>, Vec<bool>)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpinReport {
    pub orientable: bool,
    pub holonomy_order: usize,
    pub sylow_order: usize,
    pub spin_exists: bool,
    /// Homomorphisms `ε` on the Sylow cover `r^{-1}(S)`.
    pub count_cover: u128,
    /// `|Hom(Γ', Z_2)| = |H^1(R^n/Γ', Z_2)|`.
    pub hom_z2: u128,
    /// Spin structures on `R^n/Γ'`.
    pub count_manifold: u128,
    pub oracle_count: Option<u128>,
    pub epsilon: Option<EpsilonAssignments>,
}

/// Decides spin existence for `R^n / Γ'` and counts spin structures.
pub fn analyze(input: &CrystalGroupInput, options: &AnalyzeOptions) -> Result<SpinReport, AnalyzeError> {
    let orientable = input.is_orientable().map_err(at(Stage::Orientation))?;
    let full =
        FiniteMatrixGroup::close(input.dim(), input.holonomy_matrices(), options.cap).map_err(at(Stage::Holonomy))?;
    let hom_z2 = hom_count_with_holonomy(input, &full).map_err(at(Stage::Cohomology))?;
    let sylow_order = two_part(full.order());
    if !orientable {
        return Ok(SpinReport {
            orientable,
            holonomy_order: full.order(),
            sylow_order,
            spin_exists: false,
            count_cover: 0,
            hom_z2,
            count_manifold: 0,
            oracle_count: None,
            epsilon: None,
        });
    }

    let (holonomy, generator_words) = if options.use_sylow {
        let sub = full.sylow2(options.cap).map_err(at(Stage::Sylow))?;
        (sub.group, sub.ambient_words)
    } else {
        if !full.is_two_group() {
            return Err(AnalyzeError::new(Stage::Sylow, DecideError::NotTwoGroup(full.order())));
        }
        let words = (0..input.generators().len()).map(|j| vec![Letter::new(j)]).collect();
        (full.clone(), words)
    };
    let gammas = generator_words
        .iter()
        .map(|w| evaluate_word(input.dim(), input.generators(), &SylowCover::affine_word(w)))
        .collect::<Result<Vec<_>, _>>()
        .map_err(at(Stage::Sylow))?;

    let cover = SylowCover::build(holonomy, gammas, options.candidate_order)?;
    let system = build_system(&cover).map_err(at(Stage::Relations))?;
    let solution = solve(&system);
    let count_cover = solution.count().map_err(at(Stage::Relations))?;

    let oracle_count = if options.oracle {
        let oracle = brute_force_count(&cover).map_err(at(Stage::Oracle))?;
        if oracle != count_cover {
            return Err(AnalyzeError::new(Stage::Oracle, DecideError::OracleMismatch { solver: count_cover, oracle }));
        }
        Some(oracle)
    } else {
        None
    };

    let epsilon = (options.solution_limit > 0).then(|| {
        let n = cover.dim;
        EpsilonAssignments {
            generator_words: generator_words.clone(),
            lifts: cover.lifts.clone(),
            solutions: solution
                .solutions(options.solution_limit)
                .into_iter()
                .map(|x| (x[..n].to_vec(), x[n..].to_vec()))
                .collect(),
        }
    });

    let spin_exists = count_cover > 0;
    Ok(SpinReport {
        orientable,
        holonomy_order: full.order(),
        sylow_order,
        spin_exists,
        count_cover,
        hom_z2,
        count_manifold: if spin_exists { hom_z2 } else { 0 },
        oracle_count,
        epsilon,
    })
}
