mod common;

use brodmann_core::polyhedra::{power_membership_system, solve_feasible, DEFAULT_BUDGET};
use brodmann_core::{Monomial, MonomialIdeal};
use common::{box_points, divides, gens_of, in_ideal, in_power};
use proptest::prelude::*;

fn ideal_strategy(r: usize, max_exp: u64) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(prop::collection::vec(0..=max_exp, r), 1..=4).prop_map(move |gens| {
        MonomialIdeal::minimize(gens.into_iter().map(Monomial::new).collect(), r).unwrap()
    })
}

fn any_ideal() -> impl Strategy<Value = MonomialIdeal> {
    (2usize..=3).prop_flat_map(|r| ideal_strategy(r, 4))
}

fn two_ideals() -> impl Strategy<Value = (MonomialIdeal, MonomialIdeal)> {
    (2usize..=3).prop_flat_map(|r| (ideal_strategy(r, 4), ideal_strategy(r, 4)))
}

fn three_ideals() -> impl Strategy<Value = (MonomialIdeal, MonomialIdeal, MonomialIdeal)> {
    (2usize..=3).prop_flat_map(|r| (ideal_strategy(r, 3), ideal_strategy(r, 3), ideal_strategy(r, 3)))
}

fn is_antichain(i: &MonomialIdeal) -> bool {
    let g = gens_of(i);
    (0..g.len()).all(|a| (0..g.len()).all(|b| a == b || !divides(&g[a], &g[b])))
        && i.generators().windows(2).all(|w| w[0].exponents() > w[1].exponents())
}

/// Exhaustive search over `α_1..α_{s-1}` with `Σ α <= n`: is `t^b` divisible by
/// `∏ (t^{a_k})^{α_k} · (t^{a_s})^{n - Σ α}`?
fn alpha_search(gens: &[Vec<u64>], n: u64, b: &[u64]) -> bool {
    fn go(gens: &[Vec<u64>], k: usize, left: u64, acc: Vec<u64>, b: &[u64]) -> bool {
        if k + 1 == gens.len() {
            let need: Vec<u64> = acc.iter().zip(&gens[k]).map(|(a, g)| a + g * left).collect();
            return divides(&need, b);
        }
        (0..=left).any(|alpha| {
            let next: Vec<u64> = acc.iter().zip(&gens[k]).map(|(a, g)| a + g * alpha).collect();
            divides(&next, b) && go(gens, k + 1, left - alpha, next, b)
        })
    }
    go(gens, 0, n, vec![0; b.len()], b)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn powers_match_brute_force(i in any_ideal(), n in 0u64..=3) {
        let gens = gens_of(&i);
        let d = i.max_degree();
        let limit = 3 * d + 4;
        let p = i.power(n);
        prop_assert!(is_antichain(&p));
        for m in box_points(&vec![limit; i.r()]) {
            if m.iter().sum::<u64>() > limit {
                continue;
            }
            prop_assert_eq!(p.contains_exponents(&m), in_power(&gens, n, &m), "m = {:?}", m);
        }
    }

    #[test]
    fn power_membership_by_alpha_search(i in any_ideal(), n in 0u64..=3, b in prop::collection::vec(0u64..=10, 3)) {
        let b = &b[..i.r()];
        let gens = gens_of(&i);
        let expected = i.power(n).contains_exponents(b);
        prop_assert_eq!(alpha_search(&gens, n, b), expected);

        let sys = power_membership_system(&i).unwrap();
        let mut fixed = vec![None; sys.e];
        fixed[0] = Some(n as i64);
        for (j, &bj) in b.iter().enumerate() {
            fixed[1 + j] = Some(bj as i64);
        }
        let found = solve_feasible(&sys, &fixed, n, DEFAULT_BUDGET).unwrap();
        prop_assert_eq!(found.is_some(), expected);
    }

    #[test]
    fn intersection_laws((a, b, c) in three_ideals()) {
        let ab = a.intersect(&b).unwrap();
        prop_assert_eq!(&ab, &b.intersect(&a).unwrap());
        prop_assert_eq!(ab.intersect(&c).unwrap(), a.intersect(&b.intersect(&c).unwrap()).unwrap());
        prop_assert_eq!(a.intersect(&a).unwrap(), a.clone());
        prop_assert!(is_antichain(&ab));
        for m in box_points(&vec![6; a.r()]) {
            prop_assert_eq!(ab.contains_exponents(&m), a.contains_exponents(&m) && b.contains_exponents(&m));
        }
    }

    #[test]
    fn colon_matches_definition((j, k) in two_ideals()) {
        let jg = gens_of(&j);
        let q = j.colon_ideal(&k).unwrap();
        prop_assert!(is_antichain(&q));
        for m in box_points(&vec![5; j.r()]) {
            let expected = gens_of(&k).iter().all(|g| {
                let prod: Vec<u64> = m.iter().zip(g).map(|(a, b)| a + b).collect();
                in_ideal(&jg, &prod)
            });
            prop_assert_eq!(q.contains_exponents(&m), expected);
        }
        let mono = k.generators()[0].clone();
        let qm = j.colon_monomial(&mono).unwrap();
        for m in box_points(&vec![5; j.r()]) {
            let prod: Vec<u64> = m.iter().zip(mono.exponents()).map(|(a, b)| a + b).collect();
            prop_assert_eq!(qm.contains_exponents(&m), in_ideal(&jg, &prod));
        }
    }

    #[test]
    fn saturation_by_maximal_ideal_splits(i in any_ideal(), n in 1u64..=2) {
        let r = i.r();
        let p = i.power(n);
        let max = MonomialIdeal::generated_by_variables(r, 0..r);
        let whole = p.saturate(&max).unwrap();
        let pieces = (0..r)
            .map(|v| p.saturate(&MonomialIdeal::generated_by_variables(r, [v])).unwrap())
            .reduce(|a, b| a.intersect(&b).unwrap())
            .unwrap();
        prop_assert_eq!(&whole, &pieces);
        prop_assert_eq!(whole, p.colon_ideal(&max.power(40)).unwrap());
    }

    #[test]
    fn deletion_commutes_with_power(i in any_ideal(), n in 0u64..=3, j in 1usize..=3) {
        let j = 1 + (j - 1) % i.r();
        prop_assert_eq!(i.power(n).delete_variable(j).unwrap(), i.delete_variable(j).unwrap().power(n));
        let deleted = i.delete_variable(j).unwrap();
        for m in box_points(&vec![5; i.r()]) {
            let mut lifted = m.clone();
            lifted[j - 1] += 100;
            prop_assert_eq!(deleted.contains_exponents(&m), i.contains_exponents(&lifted));
        }
    }

    #[test]
    fn minimize_is_idempotent(i in any_ideal()) {
        prop_assert!(is_antichain(&i));
        let again = MonomialIdeal::minimize(i.generators().to_vec(), i.r()).unwrap();
        prop_assert_eq!(again, i);
    }
}

#[test]
fn zero_and_unit_conventions() {
    let i = MonomialIdeal::from_exponents(2, &[&[2, 1]]);
    let zero = MonomialIdeal::zero(2);
    let unit = MonomialIdeal::unit(2);
    assert!(i.product(&zero).unwrap().is_zero());
    assert_eq!(i.colon_ideal(&unit).unwrap(), i);
    assert!(i.colon_ideal(&zero).unwrap().is_unit());
    assert!(zero.saturate(&zero).is_err());
}
