//! Acceptance suite: one pass/fail line per criterion, non-zero exit if any
//! criterion fails. Runs without the libtest harness so the lines are always
//! printed.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use spinflat_core::clifford::{blade_mul, Blade, CliffordElement};
use spinflat_core::decide::{analyze, AnalyzeOptions, CandidateOrder, SpinReport, SylowCover};
use spinflat_core::exact::ExactCoefficient;
use spinflat_core::group::{FiniteMatrixGroup, DEFAULT_CAP};
use spinflat_core::repmatch::{character_of, holonomy_character};
use spinflat_core::spinlift::lift;
use spinflat_core::{samples, CrystalGroupInput, IntMatrix};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn load(name: &str) -> Result<CrystalGroupInput, String> {
    let text = std::fs::read_to_string(data(name)).map_err(|e| format!("{name}: {e}"))?;
    spinflat::format::parse_group(&text).map_err(|e| format!("{name}: {e}"))
}

fn run(input: &CrystalGroupInput, options: AnalyzeOptions) -> Result<SpinReport, String> {
    analyze(input, &options).map_err(|e| e.to_string())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || format!("took {elapsed:?}, limit {limit:?}"))
}

fn summary(r: &SpinReport) -> (bool, usize, usize, bool, u128, u128) {
    (r.orientable, r.holonomy_order, r.sylow_order, r.spin_exists, r.count_cover, r.count_manifold)
}

const EXPECTED_134: (bool, usize, usize, bool, u128, u128) = (true, 24, 8, true, 8, 4);

fn worked_example() -> Outcome {
    let start = Instant::now();
    let input = load("min.134.1.2.2.grp")?;
    let r = run(&input, AnalyzeOptions::default())?;
    let elapsed = start.elapsed();
    ensure(summary(&r) == EXPECTED_134, || format!("got {:?}", summary(&r)))?;
    within(elapsed, Duration::from_secs(1))?;
    Ok(format!("orientable, |G'|=24, |S|=8, count_cover=8, count_manifold=4 in {elapsed:?}"))
}

fn tori() -> Outcome {
    for n in 2..=6 {
        let r = run(&samples::torus(n), AnalyzeOptions::default())?;
        let want = 1u128 << n;
        ensure(r.count_cover == want && r.count_manifold == want, || {
            format!("n={n}: count_cover={} count_manifold={}", r.count_cover, r.count_manifold)
        })?;
    }
    Ok("count = 2^n for n = 2..6".into())
}

/// Column `j` is `±e_{perm_j}`.
fn signed_permutation(perm: &[usize], negative: &[bool]) -> IntMatrix {
    let n = perm.len();
    let mut m = IntMatrix::zeros(n, n);
    for (j, (&i, &neg)) in perm.iter().zip(negative).enumerate() {
        m.set(i, j, if neg { -1 } else { 1 });
    }
    m
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn round_trip(m: &IntMatrix) -> Result<(), String> {
    let x = lift(m).map_err(|e| format!("{m}: {e}"))?;
    let back = x.lambda_matrix().map_err(|e| e.to_string())?;
    ensure(back == m.to_rational(), || format!("λ(lift({m})) = {back}"))?;
    ensure(x.is_spin().map_err(|e| e.to_string())?, || format!("lift({m}) = {x} is not in Spin"))
}

fn lifting() -> Outcome {
    let start = Instant::now();
    let mut exhaustive = 0;
    let mut rank_four = 0;
    for n in 1..=4 {
        for p in permutations(n) {
            for mask in 0u32..(1 << n) {
                let neg: Vec<bool> = (0..n).map(|k| mask >> k & 1 == 1).collect();
                let m = signed_permutation(&p, &neg);
                if m.determinant().map_err(|e| e.to_string())? != 1 {
                    continue;
                }
                round_trip(&m)?;
                exhaustive += 1;
                rank_four += usize::from(n == 4);
            }
        }
    }
    ensure(rank_four == 192, || format!("{rank_four} rotations at n = 4"))?;
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for n in [5, 6] {
        for _ in 0..10_000 {
            let mut p: Vec<usize> = (0..n).collect();
            p.shuffle(&mut rng);
            let mut neg: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
            if signed_permutation(&p, &neg).determinant().map_err(|e| e.to_string())? == -1 {
                neg[0] = !neg[0];
            }
            round_trip(&signed_permutation(&p, &neg))?;
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(5))?;
    Ok(format!("{exhaustive} exhaustive (192 at n=4) + 2×10^4 random in {elapsed:?}"))
}

fn oracle_equivalence() -> Outcome {
    let mut cases: Vec<(String, CrystalGroupInput, Option<u128>)> = vec![
        ("min.134.1.2.2".into(), samples::min_134_1_2_2(), Some(8)),
        ("dicosm3".into(), load("dicosm3.grp")?, Some(8)),
        ("hantzsche-wendt3".into(), load("hantzsche-wendt3.grp")?, Some(4)),
    ];
    for n in 2..=6 {
        cases.push((format!("torus{n}"), samples::torus(n), Some(1 << n)));
    }
    let mut seen = Vec::new();
    for (name, input, frozen) in cases {
        let r = run(&input, AnalyzeOptions { oracle: true, ..Default::default() })?;
        ensure(r.oracle_count == Some(r.count_cover), || {
            format!("{name}: oracle {:?} vs {}", r.oracle_count, r.count_cover)
        })?;
        ensure(frozen == Some(r.count_cover), || format!("{name}: count {} differs from {frozen:?}", r.count_cover))?;
        if input.dim() <= 3 {
            ensure(r.count_cover > 0, || format!("{name}: oriented 3-manifold without spin structure"))?;
        }
        seen.push(format!("{name}={}", r.count_cover));
    }
    Ok(seen.join(" "))
}

fn basis(n: usize) -> Vec<CliffordElement> {
    (0..1u16 << n).map(|m| CliffordElement::monomial(n, Blade(m as u8), ExactCoefficient::ONE).unwrap()).collect()
}

fn random_spin(n: usize, rng: &mut StdRng) -> CliffordElement {
    let h = ExactCoefficient::FRAC_1_SQRT_2;
    let mut acc = CliffordElement::one(n).unwrap();
    for _ in 0..rng.gen_range(0..5) {
        let p = rng.gen_range(1..=n);
        let mut q = rng.gen_range(1..=n);
        while q == p {
            q = rng.gen_range(1..=n);
        }
        let pq = Blade::from_indices(&[p.min(q), p.max(q)]);
        let f = if rng.gen() {
            CliffordElement::monomial(n, pq, ExactCoefficient::ONE).unwrap()
        } else {
            CliffordElement::from_terms(n, [(Blade::SCALAR, h), (pq, h)]).unwrap()
        };
        acc = acc.mul(&f).unwrap();
    }
    acc
}

fn clifford_identities() -> Outcome {
    let start = Instant::now();
    for n in 1..=4 {
        let b = basis(n);
        for x in &b {
            for y in &b {
                let xy = x.mul(y).unwrap();
                for z in &b {
                    ensure(xy.mul(z).unwrap() == x.mul(&y.mul(z).unwrap()).unwrap(), || {
                        format!("associativity fails for {x}, {y}, {z}")
                    })?;
                }
            }
        }
    }
    for n in 1..=8 {
        for i in 1..=n {
            let (sq, sign) = blade_mul(Blade::generator(i), Blade::generator(i));
            ensure(sq == Blade::SCALAR && sign == -1, || format!("e{i}^2 != -1 in C_{n}"))?;
            for j in i + 1..=n {
                let (a, sa) = blade_mul(Blade::generator(i), Blade::generator(j));
                let (b, sb) = blade_mul(Blade::generator(j), Blade::generator(i));
                ensure(a == b && sa == -sb, || format!("e{i} e{j} != -e{j} e{i}"))?;
            }
        }
    }
    for n in 1..=5 {
        let b = basis(n);
        for x in &b {
            for y in &b {
                let xy = x.mul(y).unwrap();
                ensure(xy.prime() == x.prime().mul(&y.prime()).unwrap(), || format!("prime({x} {y})"))?;
                ensure(xy.star() == y.star().mul(&x.star()).unwrap(), || format!("star({x} {y})"))?;
                ensure(xy.bar() == y.bar().mul(&x.bar()).unwrap(), || format!("bar({x} {y})"))?;
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(0xc11f);
    for _ in 0..1_000 {
        let n = rng.gen_range(2..=6);
        let (x, y) = (random_spin(n, &mut rng), random_spin(n, &mut rng));
        let lhs = x.mul(&y).unwrap().lambda_matrix().unwrap();
        let rhs = x.lambda_matrix().unwrap().checked_mul(&y.lambda_matrix().unwrap()).unwrap();
        ensure(lhs == rhs, || format!("λ({x} · {y}) != λ({x}) λ({y})"))?;
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(5))?;
    Ok(format!("associativity n≤4, generator relations n≤8, involutions n≤5, 10^3 λ pairs in {elapsed:?}"))
}

fn representation_matcher() -> Outcome {
    let input = samples::min_134_1_2_2();
    let full = FiniteMatrixGroup::close(5, input.holonomy_matrices(), DEFAULT_CAP).map_err(|e| e.to_string())?;
    let sylow = full.sylow2(DEFAULT_CAP).map_err(|e| e.to_string())?;
    let gammas = sylow
        .ambient_words
        .iter()
        .map(|w| {
            let letters: Vec<_> = w.iter().copied().map(spinflat_core::affine::AffineLetter::Generator).collect();
            spinflat_core::affine::evaluate_word(5, input.generators(), &letters)
        })
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    let cover = SylowCover::build(sylow.group, gammas, CandidateOrder::Canonical).map_err(|e| e.to_string())?;
    let g = &cover.holonomy;
    let classes = g.conjugacy_classes();
    ensure(classes.len() == 5, || format!("{} classes", classes.len()))?;
    let chi_rho = holonomy_character(g, &classes).map_err(|e| e.to_string())?;
    let chi_phi = character_of(&cover.phi, g, &classes).map_err(|e| e.to_string())?;
    ensure(chi_rho == chi_phi, || format!("χ_ϱ = {chi_rho:?}, χ_φ = {chi_phi:?}"))?;
    for r in cover.relators.iter() {
        ensure(cover.phi.evaluate(r).map_err(|e| e.to_string())?.is_identity(), || "φ fails a relator".into())?;
    }
    for e in 0..g.order() {
        let m = cover.phi.evaluate(g.word(e)).map_err(|e| e.to_string())?;
        ensure(m.is_signed_permutation() && m.determinant().map_err(|e| e.to_string())? == 1, || {
            format!("φ(g) = {m} is not in SO(5, Z)")
        })?;
    }
    for order in
        [CandidateOrder::Reversed, CandidateOrder::Rotated(1), CandidateOrder::Rotated(3), CandidateOrder::Rotated(7)]
    {
        let r = run(&input, AnalyzeOptions { candidate_order: order, ..Default::default() })?;
        ensure(summary(&r) == EXPECTED_134, || format!("{order:?}: {:?}", summary(&r)))?;
    }
    Ok(format!("χ = {chi_phi:?} on 5 classes, {} relators, invariant under 4 reorderings", cover.relators.len()))
}

fn sylow_consistency() -> Outcome {
    let full = run(&load("min.134.1.2.2.grp")?, AnalyzeOptions::default())?;
    let cover = run(&load("min.134.1.2.2-sylow.grp")?, AnalyzeOptions::default())?;
    ensure(cover.count_cover == 8 && full.count_cover == cover.count_cover, || {
        format!("cover file {} vs full run {}", cover.count_cover, full.count_cover)
    })?;
    Ok("Sylow preimage count_cover = 8 = full run's cover count".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("worked example min.134.1.2.2", worked_example),
        ("torus family", tori),
        ("lifting round trip", lifting),
        ("oracle equivalence", oracle_equivalence),
        ("Clifford identities", clifford_identities),
        ("representation matcher", representation_matcher),
        ("Sylow consistency", sylow_consistency),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {} PASS  {name}: {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} FAIL  {name}: {why}", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
