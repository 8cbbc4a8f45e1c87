use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use proptest::prelude::*;
use weylzeta::efficiency::{compare, eff_bruteforce, eff_formula, Comparison};
use weylzeta::repdegrees::{
    dim_irrep, euler_identity_check, zeta_coefficients, DegreeTable, GroupSpec,
};
use weylzeta::rootsys::{Family, FamilyRank, RootSystem, Weight};
use weylzeta::weylpoly::explicit_pair;

fn types(max_rank: usize) -> Vec<FamilyRank> {
    FamilyRank::all_up_to_rank(max_rank)
}

fn ty(s: &str) -> FamilyRank {
    s.parse().unwrap()
}

#[test]
fn explicit_polynomial_ratio_is_efficiency() {
    for id in types(8) {
        let p = explicit_pair(id).polynomial();
        let (ord, deg) = (p.ord_at_zero().unwrap(), p.degree().unwrap());
        if id == ty("A1") {
            assert_eq!(deg, 0);
            continue;
        }
        let ratio = BigRational::new((ord as i64).into(), (deg as i64).into());
        assert_eq!(ratio, eff_formula(id).eff, "{id}");
        assert!(deg <= id.positive_root_count(), "{id}");
    }
}

#[test]
fn explicit_polynomial_is_a_nonnegative_integer_on_naturals() {
    for id in types(6) {
        let p = explicit_pair(id).polynomial();
        for n in 1..=6 {
            let v = p.evaluate(n);
            assert!(v.is_integer(), "{id} at {n}");
            assert!(v.numer() >= &Zero::zero(), "{id} at {n}");
        }
    }
}

#[test]
fn b_and_c_agree_by_formula_and_search() {
    for n in 3..=4 {
        let b = FamilyRank::new(Family::B, n).unwrap();
        let c = FamilyRank::new(Family::C, n).unwrap();
        assert_eq!(eff_formula(b), eff_formula(c));
        assert_eq!(compare(b, c), Comparison::Equivalent);
        let sb = eff_bruteforce(&RootSystem::build(b)).unwrap();
        let sc = eff_bruteforce(&RootSystem::build(c)).unwrap();
        assert_eq!((sb.eff, sb.lev), (sc.eff, sc.lev));
    }
}

#[test]
fn zeta_tables_count_the_same_irreps_as_dimensions() {
    let spec: GroupSpec = "G2".parse().unwrap();
    let r = RootSystem::build(ty("G2"));
    let t = zeta_coefficients(&spec, 5000);
    let mut counts = std::collections::BTreeMap::<BigUint, u64>::new();
    for a in 0..30 {
        for b in 0..30 {
            let d = dim_irrep(&r, &Weight(vec![a, b])).unwrap();
            if d <= BigUint::from(5000u32) {
                *counts.entry(d).or_default() += 1;
            }
        }
    }
    assert_eq!(t.counts, counts);
}

fn small_spec() -> impl Strategy<Value = GroupSpec> {
    const NAMES: [&str; 8] = ["A1", "A2", "A3", "B2", "G2", "A1xA1", "A1xB2", "A2xG2"];
    (prop::sample::select(&NAMES[..]), any::<bool>()).prop_map(|(n, adj)| {
        let suffix = if adj { ":adjoint" } else { ":sc" };
        format!("{n}{suffix}").parse().unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn degree_tables_round_trip(spec in small_spec(), bound in 1u64..3000) {
        let t = zeta_coefficients(&spec, bound);
        let back: DegreeTable = t.to_tsv().parse().unwrap();
        prop_assert_eq!(&back, &t);
        prop_assert_eq!(back.group, spec.to_string());
        let keys: Vec<_> = t.counts.keys().collect();
        prop_assert!(keys.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn truncating_a_table_is_computing_to_the_smaller_bound(
        spec in small_spec(),
        small in 1u64..800,
        extra in 0u64..800,
    ) {
        let big = zeta_coefficients(&spec, small + extra);
        prop_assert_eq!(big.truncated(small).unwrap(), zeta_coefficients(&spec, small));
    }

    #[test]
    fn euler_identity_for_small_groups(spec in small_spec()) {
        prop_assert!(euler_identity_check(&spec, 256));
    }

    #[test]
    fn comparison_is_antisymmetric(
        i in 0usize..40,
        j in 0usize..40,
    ) {
        let all = types(8);
        let (s, t) = (all[i % all.len()], all[j % all.len()]);
        let flipped = match compare(s, t) {
            Comparison::Greater => Comparison::Less,
            Comparison::Less => Comparison::Greater,
            Comparison::Equivalent => Comparison::Equivalent,
        };
        prop_assert_eq!(compare(t, s), flipped);
    }

    #[test]
    fn explicit_polynomial_tracks_weights(idx in 0usize..40, n in 1i64..5) {
        let all = types(6);
        let id = all[idx % all.len()];
        let p = explicit_pair(id).polynomial();
        let w = p.weight_at(n);
        prop_assume!(w.is_dominant());
        let d = dim_irrep(&RootSystem::build(id), &w).unwrap();
        prop_assert_eq!(p.evaluate(n).to_integer().to_biguint(), Some(d));
        prop_assert!(p.evaluate(n).to_f64().unwrap() >= 1.0);
    }
}
