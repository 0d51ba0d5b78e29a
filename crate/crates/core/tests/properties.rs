use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use proptest::prelude::*;

use hurwitz::combinatorics::{
    factorial, generates_transitively, partitions_of, transpositions_of, Partition, Permutation,
};
use hurwitz::elsv::{bracket_from_hurwitz, bracket_from_table, elsv_rhs, monomial_symmetric, HodgeIntegralTable};
use hurwitz::engine::{
    brute_fixed_target_factorizations, cycle_factorization_count, hurwitz_brute, hurwitz_class_algebra,
    multiplicity_m_alpha, EngineChoice, EngineOptions, HurwitzInstance,
};
use hurwitz::hodge::{build_plan, design_row, extract_table, monomial_basis, ExtractionPlan};
use hurwitz::linalg::Matrix;
use hurwitz::{ExactRational, Scalar};

fn all_perms(d: usize) -> Vec<Permutation> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
        if prefix.len() == used.len() {
            out.push(Permutation::from_images(prefix.clone()).unwrap());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                prefix.push(x);
                rec(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; d], &mut out);
    out
}

fn q(n: i64, d: i64) -> ExactRational {
    ExactRational::new(n.into(), d.into())
}

#[test]
fn transposition_pool_sizes() {
    for d in 1..=6 {
        assert_eq!(transpositions_of(d).len(), d * (d - 1) / 2);
    }
}

#[test]
fn cycle_type_is_conjugation_invariant() {
    for d in 1..=5 {
        let perms = all_perms(d);
        for s in &perms {
            let ty = s.cycle_type();
            assert_eq!(ty.size(), d);
            for rho in &perms {
                assert_eq!(s.conjugate_by(rho).cycle_type(), ty);
            }
        }
    }
}

#[test]
fn aut_count_divides_length_factorial() {
    for d in 1..=10 {
        for alpha in partitions_of(d) {
            let m_fact = factorial(alpha.len());
            assert!((m_fact % alpha.aut_count()).is_zero(), "{alpha}");
        }
    }
}

// Orbit of point 0 under the group generated by the transpositions.
fn orbit_is_everything(taus: &[Permutation], d: usize) -> bool {
    let mut orbit = BTreeSet::from([0]);
    loop {
        let before = orbit.len();
        for t in taus {
            let images: Vec<usize> = orbit.iter().map(|&x| t.apply(x)).collect();
            orbit.extend(images);
        }
        if orbit.len() == before {
            return orbit.len() == d;
        }
    }
}

#[test]
fn transitivity_matches_orbit_closure_on_all_subsets() {
    for d in 1..=4 {
        let pool = transpositions_of(d);
        for mask in 0u32..(1 << pool.len()) {
            let subset: Vec<Permutation> =
                pool.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, t)| t.clone()).collect();
            assert_eq!(generates_transitively(&subset, d).unwrap(), orbit_is_everything(&subset, d), "d={d} mask={mask}");
        }
    }
}

#[test]
fn fixed_target_counts_are_class_uniform() {
    let opts = EngineOptions::default();
    for d in 1..=4 {
        let perms = all_perms(d);
        for t in 0..=4 {
            let mut by_type: std::collections::HashMap<Partition, BigUint> = Default::default();
            for xi in &perms {
                let n = brute_fixed_target_factorizations(xi, t, &opts).unwrap();
                let seen = by_type.entry(xi.cycle_type()).or_insert_with(|| n.clone());
                assert_eq!(*seen, n, "xi={xi} t={t}");
            }
        }
    }
}

#[test]
fn minimal_and_lemma_factorizations() {
    let opts = EngineOptions::default();
    for a in 1..=6 {
        let c = Permutation::of_type(&Partition::new(vec![a]).unwrap());
        assert_eq!(brute_fixed_target_factorizations(&c, a - 1, &opts).unwrap(), cycle_factorization_count(a));
    }
    for d in 1..=5 {
        for alpha in partitions_of(d) {
            let xi = Permutation::of_type(&alpha);
            let n = brute_fixed_target_factorizations(&xi, alpha.branching(), &opts).unwrap();
            assert_eq!(ExactRational::from_integer(BigInt::from(n)), multiplicity_m_alpha(&alpha));
        }
    }
}

#[test]
fn g0_m3_extraction_is_one() {
    let opts = EngineOptions::default();
    let i = HurwitzInstance::new(0, Partition::new(vec![1, 1, 1]).unwrap()).unwrap();
    let h = hurwitz_brute(&i, &opts).unwrap();
    // r = 4, and H^0_(1,1,1) = r!/#Aut = 24/6
    assert_eq!(h.hurwitz_number, q(4, 1));
    let table = extract_table(&build_plan(0, 3, 0).unwrap(), EngineChoice::Brute, &opts).unwrap();
    assert_eq!(table.value(&[0, 0, 0], 0), Some(&q(1, 1)));
}

#[test]
fn g1_m2_round_trip_with_hurwitz() {
    let opts = EngineOptions::default();
    let table = extract_table(&build_plan(1, 2, 0).unwrap(), EngineChoice::Brute, &opts).unwrap();
    let i = HurwitzInstance::new(1, Partition::new(vec![1, 1]).unwrap()).unwrap();
    assert_eq!(elsv_rhs(&i, &table).unwrap(), q(1, 2));
    assert_eq!(bracket_from_hurwitz(&i, &q(1, 2)).unwrap(), q(1, 24));
}

#[test]
fn overdetermined_fits_stay_consistent() {
    let opts = EngineOptions::default();
    for (g, m, extra) in [
        (1u32, 1usize, vec![vec![3], vec![4], vec![5], vec![6]]),
        (1, 2, vec![vec![3, 1], vec![3, 2], vec![3, 3], vec![4, 1]]),
        (0, 4, vec![vec![2, 1, 1, 1], vec![2, 2, 1, 1]]),
        (2, 1, vec![vec![4], vec![5], vec![6], vec![7]]),
    ] {
        let plan = build_plan(g, m, 0).unwrap();
        let base = extract_table(&plan, EngineChoice::ClassAlgebra, &opts).unwrap();
        let over = plan.with_extra_points(extra).unwrap();
        assert_eq!(extract_table(&over, EngineChoice::ClassAlgebra, &opts).unwrap(), base, "({g}, {m})");
    }
}

#[test]
fn permuted_coordinates_refit_to_same_table() {
    let opts = EngineOptions::default();
    let plan = build_plan(1, 3, 0).unwrap();
    let reversed: Vec<Vec<usize>> = plan.points().iter().map(|p| p.iter().rev().copied().collect()).collect();
    for p in &reversed {
        assert_eq!(design_row(plan.unknowns(), p), design_row(plan.unknowns(), &{
            let mut s = p.clone();
            s.sort_unstable_by(|a, b| b.cmp(a));
            s
        }));
    }
    let alt = ExtractionPlan::with_points(1, 3, reversed, vec![]).unwrap();
    assert_eq!(
        extract_table(&plan, EngineChoice::ClassAlgebra, &opts).unwrap(),
        extract_table(&alt, EngineChoice::ClassAlgebra, &opts).unwrap()
    );
}

#[test]
fn class_algebra_scales_past_brute_force() {
    // (2,1) fit plus the three class-algebra-only holdouts 5..7
    let opts = EngineOptions::default();
    let plan = ExtractionPlan::with_points(2, 1, vec![vec![1], vec![2], vec![3]], vec![vec![5], vec![6], vec![7]]).unwrap();
    let table = extract_table(&plan, EngineChoice::Brute, &opts).unwrap();
    let report = hurwitz::hodge::verify_polynomiality(&plan, &table, EngineChoice::ClassAlgebra, &opts);
    assert!(report.all_passed(), "{report}");
}

fn arb_table(g: u32, m: usize) -> impl Strategy<Value = HodgeIntegralTable> {
    let basis = monomial_basis(g, m).unwrap();
    prop::collection::vec((-50i64..50, 1i64..20), basis.len()).prop_map(move |vals| {
        let mut t = HodgeIntegralTable::new(g, m);
        for (mono, (n, d)) in basis.iter().zip(vals) {
            t.insert(mono.clone(), q(n, d)).unwrap();
        }
        t
    })
}

fn gm() -> impl Strategy<Value = (u32, usize)> {
    prop::sample::select(vec![(1u32, 1usize), (1, 2), (1, 3), (2, 1), (2, 2), (0, 3), (0, 4), (3, 1)])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn hurwitz_is_invariant_under_part_order(parts in prop::collection::vec(1usize..4, 1..4), g in 0i64..2) {
        let mut shuffled = parts.clone();
        shuffled.reverse();
        shuffled.rotate_left(parts.len() / 2);
        let a = HurwitzInstance::new(g, Partition::new(parts).unwrap()).unwrap();
        let b = HurwitzInstance::new(g, Partition::new(shuffled).unwrap()).unwrap();
        prop_assert_eq!(hurwitz_class_algebra(&a), hurwitz_class_algebra(&b));
    }

    #[test]
    fn d_factorial_times_h_is_integral(parts in prop::collection::vec(1usize..5, 1..5), g in 0i64..3) {
        let i = HurwitzInstance::new(g, Partition::new(parts).unwrap()).unwrap();
        let rep = hurwitz_class_algebra(&i);
        let back = rep.hurwitz_number.clone() * ExactRational::from_integer(BigInt::from(factorial(i.d())));
        prop_assert!(back.is_integer());
        prop_assert_eq!(back.to_integer(), BigInt::from(rep.tuple_count));
    }

    #[test]
    fn elsv_round_trip(table in (gm()).prop_flat_map(|(g, m)| arb_table(g, m)), raw in prop::collection::vec(1usize..5, 4)) {
        let m = table.marks();
        let alpha: Vec<usize> = raw.into_iter().cycle().take(m).collect();
        let inst = HurwitzInstance::new(table.genus().into(), Partition::new(alpha.clone()).unwrap()).unwrap();
        let h = elsv_rhs(&inst, &table).unwrap();
        prop_assert_eq!(
            bracket_from_hurwitz(&inst, &h).unwrap(),
            bracket_from_table(table.genus(), m, &alpha, &table).unwrap()
        );
    }

    #[test]
    fn bracket_is_symmetric(table in (gm()).prop_flat_map(|(g, m)| arb_table(g, m)), seed in prop::collection::vec(1usize..6, 4)) {
        let m = table.marks();
        let alpha: Vec<usize> = seed.into_iter().cycle().take(m).collect();
        let mut rev = alpha.clone();
        rev.reverse();
        prop_assert_eq!(
            bracket_from_table(table.genus(), m, &alpha, &table).unwrap(),
            bracket_from_table(table.genus(), m, &rev, &table).unwrap()
        );
    }

    #[test]
    fn bracket_degrees_lie_between_dim_minus_g_and_dim(table in (gm()).prop_flat_map(|(g, m)| arb_table(g, m)), seed in prop::collection::vec(1usize..4, 4)) {
        // expand t ↦ ⟨t·α⟩ as a polynomial in t by exact interpolation on
        // t = 1..=dim+2 and inspect which coefficients survive
        let (g, m) = (table.genus() as usize, table.marks());
        let dim = 3 * g + m - 3;
        let alpha: Vec<usize> = seed.into_iter().cycle().take(m).collect();
        let n = dim + 2;
        let rows: Vec<Vec<ExactRational>> = (1..=n)
            .map(|t| (0..n).map(|e| q((t as i64).pow(e as u32), 1)).collect())
            .collect();
        let rhs: Vec<ExactRational> = (1..=n)
            .map(|t| {
                let scaled: Vec<usize> = alpha.iter().map(|a| a * t).collect();
                bracket_from_table(table.genus(), m, &scaled, &table).unwrap()
            })
            .collect();
        let coeffs = Matrix::from_rows(rows).unwrap().solve(&rhs).unwrap();
        for (deg, c) in coeffs.iter().enumerate() {
            if deg + g < dim || deg > dim {
                prop_assert!(c.is_zero(), "degree {} coefficient {}", deg, c);
            }
        }
    }

    #[test]
    fn table_text_round_trip(table in (gm()).prop_flat_map(|(g, m)| arb_table(g, m))) {
        let text = table.to_text();
        let back = HodgeIntegralTable::from_text(&text).unwrap();
        prop_assert_eq!(back.to_text(), text);
        prop_assert_eq!(back, table);
    }

    #[test]
    fn monomial_symmetric_exact_and_float_agree(exps in prop::collection::vec(0usize..4, 1..4), pts in prop::collection::vec(1i64..5, 3)) {
        let m = exps.len();
        let exact: Vec<ExactRational> = pts.iter().take(m).map(|&x| q(x, 1)).collect();
        let float: Vec<f64> = pts.iter().take(m).map(|&x| x as f64).collect();
        let e = monomial_symmetric(&exps, &exact);
        let f = monomial_symmetric(&exps, &float);
        prop_assert!((e.magnitude() - f.abs()).abs() < 1e-9);
    }
}
