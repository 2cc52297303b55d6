use proptest::prelude::*;
use spinflat_core::affine::AffineIsometry;
use spinflat_core::decide::{
    analyze, brute_force_count, build_system, check_assignment, solve, AnalyzeOptions, CandidateOrder, DecideError,
    SpinReport, Stage, SylowCover,
};
use spinflat_core::group::{FiniteMatrixGroup, DEFAULT_CAP};
use spinflat_core::matrix::{RatMatrix, Rational};
use spinflat_core::{samples, CrystalGroupInput, IntMatrix};

fn orientable_samples() -> Vec<(&'static str, CrystalGroupInput)> {
    vec![
        ("min.134.1.2.2", samples::min_134_1_2_2()),
        ("sylow cover", samples::min_134_1_2_2_sylow_preimage()),
        ("dicosm", samples::dicosm()),
        ("hantzsche-wendt", samples::hantzsche_wendt()),
        ("torus3", samples::torus(3)),
        ("torus5", samples::torus(5)),
    ]
}

fn two_group_samples() -> Vec<(&'static str, CrystalGroupInput)> {
    orientable_samples().into_iter().filter(|(name, _)| *name != "min.134.1.2.2").collect()
}

fn report(input: &CrystalGroupInput, options: AnalyzeOptions) -> SpinReport {
    analyze(input, &options).unwrap()
}

fn counts(r: &SpinReport) -> (bool, usize, usize, bool, u128, u128, u128) {
    (r.orientable, r.holonomy_order, r.sylow_order, r.spin_exists, r.count_cover, r.hom_z2, r.count_manifold)
}

fn map_generators(input: &CrystalGroupInput, f: impl Fn(&AffineIsometry) -> AffineIsometry) -> CrystalGroupInput {
    CrystalGroupInput::new(input.dim(), input.generators().iter().map(f).collect()).unwrap()
}

#[test]
fn known_answers() {
    let expected = [
        ("min.134.1.2.2", (true, 24, 8, true, 8, 4, 4)),
        ("sylow cover", (true, 8, 8, true, 8, 8, 8)),
        ("dicosm", (true, 2, 2, true, 8, 8, 8)),
        ("hantzsche-wendt", (true, 4, 4, true, 4, 4, 4)),
        ("torus3", (true, 1, 1, true, 8, 8, 8)),
        ("torus5", (true, 1, 1, true, 32, 32, 32)),
    ];
    for ((name, input), (ename, e)) in orientable_samples().into_iter().zip(expected) {
        assert_eq!(name, ename);
        assert_eq!(counts(&report(&input, AnalyzeOptions::default())), e, "{name}");
    }
    let k = report(&samples::klein_bottle(), AnalyzeOptions::default());
    assert_eq!(counts(&k), (false, 2, 2, false, 0, 4, 0));
}

#[test]
fn solver_agrees_with_brute_force() {
    for (name, input) in orientable_samples() {
        let r = report(&input, AnalyzeOptions { oracle: true, ..Default::default() });
        assert_eq!(r.oracle_count, Some(r.count_cover), "{name}");
    }
}

#[test]
fn enumerated_solutions_are_homomorphisms() {
    for (name, input) in two_group_samples() {
        let g = FiniteMatrixGroup::close(input.dim(), input.holonomy_matrices(), DEFAULT_CAP).unwrap();
        let cover = SylowCover::build(g, input.generators().to_vec(), CandidateOrder::Canonical).unwrap();
        let system = build_system(&cover).unwrap();
        let sol = solve(&system);
        let n = input.dim();
        let sols = sol.solutions(usize::MAX);
        assert_eq!(sols.len() as u128, sol.count().unwrap(), "{name}");
        for x in sols {
            assert!(check_assignment(&cover, &x[..n], &x[n..]).unwrap(), "{name}");
        }
        assert_eq!(brute_force_count(&cover).unwrap(), sol.count().unwrap(), "{name}");
    }
}

#[test]
fn invariant_under_choice_of_representation() {
    for (name, input) in orientable_samples() {
        let base = counts(&report(&input, AnalyzeOptions::default()));
        for order in [
            CandidateOrder::Reversed,
            CandidateOrder::Rotated(1),
            CandidateOrder::Rotated(2),
            CandidateOrder::Rotated(5),
        ] {
            let r = report(&input, AnalyzeOptions { candidate_order: order, oracle: true, ..Default::default() });
            assert_eq!(counts(&r), base, "{name} {order:?}");
        }
    }
}

#[test]
fn sylow_step_is_transparent_for_two_groups() {
    for (name, input) in two_group_samples() {
        let with = report(&input, AnalyzeOptions::default());
        let without = report(&input, AnalyzeOptions { use_sylow: false, ..Default::default() });
        assert_eq!(counts(&with), counts(&without), "{name}");
    }
    let err =
        analyze(&samples::min_134_1_2_2(), &AnalyzeOptions { use_sylow: false, ..Default::default() }).unwrap_err();
    assert_eq!(err.stage, Stage::Sylow);
    assert_eq!(err.error, DecideError::NotTwoGroup(24));
}

#[test]
fn sylow_cover_counts_match() {
    let full = report(&samples::min_134_1_2_2(), AnalyzeOptions::default());
    let cover = report(&samples::min_134_1_2_2_sylow_preimage(), AnalyzeOptions::default());
    assert_eq!(full.count_cover, cover.count_cover);
}

#[test]
fn redundant_generators_do_not_change_the_answer() {
    for (name, input) in orientable_samples() {
        let mut gens = input.generators().to_vec();
        if gens.is_empty() {
            continue;
        }
        gens.push(gens[0].compose(gens.last().unwrap()).unwrap());
        gens.push(AffineIsometry::translation(&vec![1; input.dim()]));
        gens.rotate_left(1);
        let bigger = CrystalGroupInput::new(input.dim(), gens).unwrap();
        let a = counts(&report(&input, AnalyzeOptions::default()));
        let b = counts(&report(&bigger, AnalyzeOptions { oracle: true, ..Default::default() }));
        assert_eq!(a, b, "{name}");
    }
}

#[test]
fn cap_is_reported() {
    let err = analyze(&samples::min_134_1_2_2(), &AnalyzeOptions { cap: 10, ..Default::default() }).unwrap_err();
    assert_eq!(err.stage, Stage::Holonomy);
    assert!(err.is_cap_exceeded());
}

#[test]
fn explicit_assignments_are_reported() {
    let r = report(&samples::min_134_1_2_2(), AnalyzeOptions { solution_limit: 100, ..Default::default() });
    let eps = r.epsilon.unwrap();
    assert_eq!(eps.solutions.len(), 8);
    assert_eq!(eps.lifts.len(), eps.generator_words.len());
    for x in &eps.lifts {
        assert!(x.is_spin().unwrap());
    }
}

fn signed_permutation(perm: &[usize], signs: &[bool]) -> IntMatrix {
    let n = perm.len();
    let mut m = IntMatrix::zeros(n, n);
    for (j, (&i, &neg)) in perm.iter().zip(signs).enumerate() {
        m.set(i, j, if neg { -1 } else { 1 });
    }
    m
}

fn conjugate_by(p: &AffineIsometry, g: &AffineIsometry) -> AffineIsometry {
    p.compose(g).unwrap().compose(&p.inverse().unwrap()).unwrap()
}

fn sample_index() -> impl Strategy<Value = usize> {
    0..orientable_samples().len()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn invariant_under_lattice_shifts(k in sample_index(), shifts in proptest::collection::vec(-2i64..=2, 40)) {
        let (name, input) = orientable_samples().swap_remove(k);
        let n = input.dim();
        let gens = input
            .generators()
            .iter()
            .enumerate()
            .map(|(j, g)| {
                let start = (j * n) % (40 - n);
                AffineIsometry::translation(&shifts[start..start + n]).compose(g).unwrap()
            })
            .collect();
        let shifted = CrystalGroupInput::new(n, gens).unwrap();
        let a = counts(&report(&input, AnalyzeOptions::default()));
        let b = counts(&report(&shifted, AnalyzeOptions { oracle: true, ..Default::default() }));
        prop_assert_eq!(a, b, "{}", name);
    }

    #[test]
    fn invariant_under_change_of_origin(k in sample_index(), halves in proptest::collection::vec(-3i64..=3, 5)) {
        let (name, input) = orientable_samples().swap_remove(k);
        let n = input.dim();
        let c: Vec<Rational> = halves[..n].iter().map(|&h| Rational::new(h, 2)).collect();
        let shift = AffineIsometry::new(RatMatrix::identity(n), c).unwrap();
        let moved = map_generators(&input, |g| conjugate_by(&shift, g));
        let a = counts(&report(&input, AnalyzeOptions::default()));
        let b = counts(&report(&moved, AnalyzeOptions::default()));
        prop_assert_eq!(a, b, "{}", name);
    }

    #[test]
    fn invariant_under_signed_permutation_of_coordinates(
        k in sample_index(),
        perm in Just((0..5).collect::<Vec<usize>>()).prop_shuffle(),
        signs in proptest::collection::vec(any::<bool>(), 5),
    ) {
        let (name, input) = orientable_samples().swap_remove(k);
        let n = input.dim();
        let perm: Vec<usize> = perm.into_iter().filter(|&i| i < n).collect();
        let p = signed_permutation(&perm, &signs[..n]);
        let p = AffineIsometry::new(p.to_rational(), vec![Rational::from_integer(0); n]).unwrap();
        let moved = map_generators(&input, |g| conjugate_by(&p, g));
        let a = counts(&report(&input, AnalyzeOptions::default()));
        let b = counts(&report(&moved, AnalyzeOptions::default()));
        prop_assert_eq!(a, b, "{}", name);
    }
}
