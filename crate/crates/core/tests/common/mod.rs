//! Shared fixtures: a seeded random corpus and brute-force oracles that do not
//! go through the library's ideal arithmetic.

#![allow(dead_code)]

use brodmann_core::{Monomial, MonomialIdeal};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const CORPUS_SEED: u64 = 0x5EED_0B0D;

/// `count` proper nonzero ideals with `r ∈ {2, 3}`, at most 4 generators and
/// exponents at most 4.
pub fn corpus(seed: u64, count: usize) -> Vec<MonomialIdeal> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let r = rng.gen_range(2..=3);
        let s = rng.gen_range(1..=4);
        let gens: Vec<Monomial> = (0..s)
            .map(|_| Monomial::new((0..r).map(|_| rng.gen_range(0..=4)).collect()))
            .collect();
        let i = MonomialIdeal::minimize(gens, r).unwrap();
        if i.is_proper_nonzero() {
            out.push(i);
        }
    }
    out
}

pub fn standard_corpus() -> Vec<MonomialIdeal> {
    corpus(CORPUS_SEED, 120)
}

pub fn divides(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// `m ∈ (g_1, .., g_s)` straight from the generator list.
pub fn in_ideal(gens: &[Vec<u64>], m: &[u64]) -> bool {
    gens.iter().any(|g| divides(g, m))
}

/// `m ∈ I^n`: some product of `n` generators divides `m`.
pub fn in_power(gens: &[Vec<u64>], n: u64, m: &[u64]) -> bool {
    if n == 0 {
        return true;
    }
    gens.iter().any(|g| {
        divides(g, m) && {
            let rest: Vec<u64> = m.iter().zip(g).map(|(a, b)| a - b).collect();
            in_power(gens, n - 1, &rest)
        }
    })
}

pub fn gens_of(i: &MonomialIdeal) -> Vec<Vec<u64>> {
    i.generators().iter().map(|g| g.exponents().to_vec()).collect()
}

/// Every exponent vector in `[0, caps]`.
pub fn box_points(caps: &[u64]) -> Vec<Vec<u64>> {
    let mut out = vec![vec![]];
    for &c in caps {
        out = out
            .into_iter()
            .flat_map(|p: Vec<u64>| {
                (0..=c).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}
