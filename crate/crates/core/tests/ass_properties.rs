mod common;

use brodmann_core::ass::{ass_of_quotient_with_witnesses, format_primes};
use brodmann_core::{
    ass_of_quotient, ass_power, ass_profile, ass_profile_with, max_ideal_in_ass, AssMethod,
    MonomialIdeal, PrimeSet, VariablePrime,
};
use common::{box_points, corpus, gens_of, in_ideal, standard_corpus, CORPUS_SEED};

fn union_over_deletions(i: &MonomialIdeal, n: u64) -> PrimeSet {
    (1..=i.r())
        .flat_map(|j| ass_power(&i.delete_variable(j).unwrap(), n, AssMethod::Quotient).unwrap())
        .collect()
}

#[test]
fn methods_agree_and_deletion_identity_holds() {
    for i in standard_corpus() {
        for n in 0..=3 {
            let q = ass_power(&i, n, AssMethod::Quotient).unwrap();
            let rec = ass_power(&i, n, AssMethod::Recursion).unwrap();
            assert_eq!(q, rec, "methods disagree for {i} at n = {n}");

            let full = VariablePrime::full(i.r());
            let mut without = q.clone();
            without.remove(&full);
            assert_eq!(without, union_over_deletions(&i, n), "deletion identity fails for {i}, n = {n}");
            assert_eq!(max_ideal_in_ass(&i, n).unwrap(), q.contains(&full));
        }
    }
}

/// Primes `J : m` found by scanning a box three units wider than the generators.
fn wide_scan(j: &MonomialIdeal) -> PrimeSet {
    let gens = gens_of(j);
    let caps: Vec<u64> = j.max_exponents().iter().map(|e| e + 3).collect();
    let mut out = PrimeSet::new();
    for m in box_points(&caps) {
        if in_ideal(&gens, &m) {
            continue;
        }
        // J : m is generated by variables iff each generator of J : m is a variable
        let colon: Vec<Vec<u64>> =
            gens.iter().map(|g| g.iter().zip(&m).map(|(a, b)| a.saturating_sub(*b)).collect()).collect();
        let minimal: Vec<&Vec<u64>> = colon
            .iter()
            .filter(|c| !colon.iter().any(|d| d != *c && common::divides(d, c)))
            .collect();
        if minimal.iter().all(|c| c.iter().sum::<u64>() == 1) {
            let vars = minimal.iter().map(|c| 1 + c.iter().position(|&x| x == 1).unwrap());
            out.insert(VariablePrime::new(vars, j.r()).unwrap());
        }
    }
    out
}

#[test]
fn witness_cap_is_complete() {
    for i in corpus(CORPUS_SEED ^ 1, 150) {
        if gens_of(&i).iter().flatten().sum::<u64>() > 8 * i.len() as u64 {
            continue;
        }
        let found = ass_of_quotient(&i).unwrap();
        assert_eq!(found, wide_scan(&i), "witness cap misses a prime of {i}");
        let caps = i.max_exponents();
        for (p, m) in ass_of_quotient_with_witnesses(&i).unwrap() {
            assert!(m.exponents().iter().zip(&caps).all(|(a, c)| a <= c));
            assert_eq!(i.colon_monomial(&m).unwrap(), p.to_ideal(i.r()));
        }
    }
}

#[test]
fn quotient_examples() {
    let x2 = MonomialIdeal::from_exponents(2, &[&[2, 0]]);
    assert_eq!(format_primes(&ass_of_quotient(&x2).unwrap()), "{x1}");
    let j = MonomialIdeal::from_exponents(2, &[&[2, 0], &[1, 1]]);
    assert_eq!(format_primes(&ass_of_quotient(&j).unwrap()), "{x1},{x1,x2}");
}

#[test]
fn pure_powers_are_constant() {
    let i = MonomialIdeal::from_exponents(2, &[&[2, 0], &[0, 3]]);
    let p = ass_profile(&i, 5).unwrap();
    assert_eq!(p.observed_stable_at, Some(0));
    assert!(p.entries.iter().all(|e| format_primes(e) == "{x1,x2}"));
    let x = MonomialIdeal::from_exponents(1, &[&[1]]);
    let p = ass_profile(&x, 4).unwrap();
    assert_eq!(p.observed_stable_at, Some(0));
    assert!(p.entries.iter().all(|e| format_primes(e) == "{x1}"));
}

#[test]
fn parallel_profiles_match_sequential() {
    for i in corpus(CORPUS_SEED ^ 2, 20) {
        for method in [AssMethod::Quotient, AssMethod::Recursion] {
            let seq = ass_profile_with(&i, 4, method, false).unwrap();
            let par = ass_profile_with(&i, 4, method, true).unwrap();
            assert_eq!(seq, par);
        }
    }
}

#[test]
fn observed_stabilization_is_consistent() {
    for i in corpus(CORPUS_SEED ^ 3, 40) {
        let p = ass_profile(&i, 5).unwrap();
        if let Some(n0) = p.observed_stable_at {
            let tail = &p.entries[n0 as usize..];
            assert!(tail.iter().all(|e| *e == tail[0]));
            if n0 > 0 {
                assert_ne!(p.entries[n0 as usize - 1], tail[0]);
            }
        } else {
            assert_ne!(p.entries[4], p.entries[5]);
        }
    }
}
