//! Differential checks against brute-force oracles.

mod common;

use std::collections::BTreeSet;

use common::{ord_by_representations, reduction_number_by_powers, semigroups_by_gap_sets};
use goto_semigroup::harness::{enumerate_semigroups, EnumSpec};
use goto_semigroup::NumericalSemigroup;
use proptest::prelude::*;

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn coprime_gens(max: i64, len: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(2..=max, 2..=len)
        .prop_filter("gcd 1", |v| v.iter().fold(0, |g, &a| gcd(g, a)) == 1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ord_matches_representations(gens in coprime_gens(13, 4)) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let top = (s.frobenius() + 3 * s.largest_generator()).min(120);
        for n in 0..=top {
            prop_assert_eq!(s.ord(n), ord_by_representations(s.generators(), n), "n = {}", n);
        }
    }

    #[test]
    fn reduction_number_matches_powers(gens in coprime_gens(14, 4)) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        prop_assume!(s.is_proper());
        let rep = s.invariant_report().unwrap();
        prop_assert_eq!(rep.reduction_number, reduction_number_by_powers(s.generators()));
    }

    #[test]
    fn goto_matches_oracle(gens in coprime_gens(20, 4)) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        prop_assume!(s.is_proper());
        let top = s.frobenius() + 2 * s.multiplicity() + 1;
        for u in s.elements_in(1, top).collect::<Vec<_>>() {
            prop_assert_eq!(s.goto_number(u).unwrap(), s.goto_number_oracle(u).unwrap(), "u = {}", u);
        }
    }

    #[test]
    fn chain_is_monotone(gens in coprime_gens(25, 5)) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        prop_assume!(s.is_proper());
        let chain = s.invariant_report().unwrap().chain();
        prop_assert!(chain.windows(2).all(|w| w[0] <= w[1]), "{:?}", chain);
    }

    #[test]
    fn closed_forms_agree(gens in coprime_gens(20, 4)) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        prop_assume!(s.is_proper());
        let top = s.frobenius() + 2 * s.multiplicity() + 1;
        for u in s.elements_in(1, top).collect::<Vec<_>>() {
            if let Some(g) = s.goto_closed_form(u).unwrap() {
                prop_assert_eq!(g, s.goto_number(u).unwrap(), "u = {}", u);
            }
        }
    }
}

#[test]
fn ord_oracle_sanity() {
    assert_eq!(ord_by_representations(&[4, 5, 7], 6), -1);
    assert_eq!(ord_by_representations(&[4, 5, 7], 20), 5);
    assert_eq!(ord_by_representations(&[3, 5], 15), 5);
}

#[test]
fn reduction_oracle_on_known_values() {
    assert_eq!(reduction_number_by_powers(&[10, 17, 35]), 5);
    assert_eq!(reduction_number_by_powers(&[6, 7, 15]), 5);
    assert_eq!(reduction_number_by_powers(&[7, 8, 9, 19]), 3);
    assert_eq!(reduction_number_by_powers(&[5, 6, 14]), 4);
}

#[test]
fn tree_matches_gap_sets() {
    let oracle = semigroups_by_gap_sets(8);
    let mut counts = [0usize; 9];
    let mut lib = BTreeSet::new();
    for s in enumerate_semigroups(&EnumSpec::by_genus(8)).unwrap() {
        let s = s.unwrap();
        counts[s.genus()] += 1;
        assert!(lib.insert(s.generators().to_vec()), "duplicate {}", s.label());
    }
    assert_eq!(counts, [1, 1, 2, 4, 7, 12, 23, 39, 67]);
    assert_eq!(oracle.len(), lib.len());
    assert_eq!(oracle.into_iter().collect::<BTreeSet<_>>(), lib);
}
