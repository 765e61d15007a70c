use proptest::prelude::*;

use tangentcone::oracle::{consistency_report, order_oracle, Oracle};
use tangentcone::tangent_cone::full_product_test;
use tangentcone::{
    analyze_ladder, validate_table, Analysis, IdealChain, NumericalSemigroup, Report,
};

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Generator lists with gcd 1 and small entries.
fn generators() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(2i64..40, 2..5)
        .prop_filter("gcd 1", |g| g.iter().fold(0, |a, &b| gcd(a, b)) == 1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn table_obeys_rules(gens in generators()) {
        let s = NumericalSemigroup::new(&gens).unwrap();
        let a = Analysis::of(&s).unwrap();
        prop_assert!(validate_table(&a.table).is_empty());
        prop_assert!(a.table.reduction_number() < s.multiplicity() as usize);
    }

    #[test]
    fn all_oracle_checks_pass(gens in generators()) {
        let s = NumericalSemigroup::new(&gens).unwrap();
        let report = consistency_report(&s);
        let failures: Vec<_> = report.failures().collect();
        prop_assert!(failures.is_empty(), "{:?}", failures);
    }

    #[test]
    fn ladder_columns_decompose(gens in generators()) {
        let s = NumericalSemigroup::new(&gens).unwrap();
        let a = Analysis::of(&s).unwrap();
        let e = s.multiplicity();
        for i in 1..e as usize {
            let col = a.table.column(i);
            let p = analyze_ladder(&col).unwrap();
            prop_assert_eq!(p.reconstruct(col[0], e), col);
        }
    }

    #[test]
    fn buchsbaum_verdict_matches_product_test(gens in generators()) {
        let s = NumericalSemigroup::new(&gens).unwrap();
        let a = Analysis::of(&s).unwrap();
        let full = full_product_test(&s, &a.table, &a.decomposition);
        prop_assert_eq!(full.is_none(), a.buchsbaum.buchsbaum);
        if a.decomposition.is_cohen_macaulay() {
            prop_assert!(a.buchsbaum.buchsbaum);
        }
    }

    #[test]
    fn hilbert_sums_to_multiplicity(gens in generators()) {
        let s = NumericalSemigroup::new(&gens).unwrap();
        let a = Analysis::of(&s).unwrap();
        let r = a.table.reduction_number();
        // Beyond the reduction number the Hilbert function is constant e.
        prop_assert_eq!(a.decomposition.hilbert_function(r + 5), s.multiplicity() as usize);
        let oracle = Oracle::new(&s, r + 2);
        prop_assert_eq!(oracle.hilbert(1), s.embedding_dimension());
    }

    #[test]
    fn order_agrees_with_composition_search(gens in generators(), k in 0i64..150) {
        let s = NumericalSemigroup::new(&gens).unwrap();
        let a = s.members_up_to(k).last().unwrap_or(0);
        let mut chain = IdealChain::new(&s);
        let n_max = (a / s.multiplicity()) as usize + 1;
        prop_assert_eq!(chain.order(a).unwrap(), order_oracle(&s, a, n_max).unwrap());
    }

    #[test]
    fn report_json_round_trips(gens in generators()) {
        let rep = Report::build(&gens, false).unwrap();
        let back = Report::from_json(&rep.to_json().unwrap()).unwrap();
        prop_assert_eq!(back, rep);
    }
}

#[test]
fn multiplicity_four_always_buchsbaum() {
    let bounds = tangentcone::enumerate::TreeBounds::multiplicity_and_frobenius(4, 80);
    let mut seen = 0;
    for s in tangentcone::enumerate::SemigroupTree::new(bounds) {
        if s.multiplicity() == 4 {
            seen += 1;
            let a = Analysis::of(&s).unwrap();
            assert!(a.buchsbaum.buchsbaum, "{:?}", s.minimal_generators());
        }
    }
    assert!(seen > 100);
}
