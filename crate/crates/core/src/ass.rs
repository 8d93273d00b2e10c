//! Associated primes of `I^n / I^{n+1}` for monomial ideals.
//!
//! Two independent routes are provided:
//!
//! * `Quotient`: `Ass(I^n/I^{n+1}) = Ass(R/I^{n+1})`, found by a witness scan
//!   over monomials `m` with `I^{n+1} : m` a monomial prime.
//! * `Recursion`: split off the maximal prime of the support and recurse over
//!   the ideals `I[i]` obtained by setting one variable to 1. The maximal prime
//!   is decided by comparing `I^n ∩ ⋂ I[i]^{n+1}` with `I^{n+1}`.
//!
//! Indexing: `ass_power(I, n)` is `Ass(I^n/I^{n+1})` with `n >= 0`, so
//! `n = 0` gives `Ass(R/I)`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{for_each_in_box, Monomial};

/// The monomial prime `(t_{i_1}, ..., t_{i_p})`, stored as sorted 1-based indices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VariablePrime(Vec<usize>);

pub type PrimeSet = BTreeSet<VariablePrime>;

impl VariablePrime {
    /// Build from 1-based indices in `1..=r`.
    pub fn new(indices: impl IntoIterator<Item = usize>, r: usize) -> Result<Self> {
        let set: BTreeSet<usize> = indices.into_iter().collect();
        if set.is_empty() {
            return Err(Error::InvalidInput("a variable prime needs at least one variable".into()));
        }
        if let Some(&bad) = set.iter().find(|&&i| i == 0 || i > r) {
            return Err(Error::VariableOutOfRange { index: bad, r });
        }
        Ok(VariablePrime(set.into_iter().collect()))
    }

    /// From 0-based indices; callers guarantee they are in range and nonempty.
    pub(crate) fn from_zero_based(indices: impl IntoIterator<Item = usize>) -> Self {
        let set: BTreeSet<usize> = indices.into_iter().map(|i| i + 1).collect();
        debug_assert!(!set.is_empty());
        VariablePrime(set.into_iter().collect())
    }

    pub fn full(r: usize) -> Self {
        VariablePrime((1..=r).collect())
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn is_full(&self, r: usize) -> bool {
        self.0.len() == r
    }

    pub fn to_ideal(&self, r: usize) -> MonomialIdeal {
        MonomialIdeal::generated_by_variables(r, self.0.iter().map(|i| i - 1))
    }
}

impl fmt::Display for VariablePrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "x{i}")?;
        }
        write!(f, "}}")
    }
}

/// `{x1,x2},{x1,x2,x3}`; the empty set prints as `{}`.
pub fn format_primes(primes: &PrimeSet) -> String {
    if primes.is_empty() {
        return "{}".into();
    }
    primes.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AssMethod {
    #[default]
    Quotient,
    Recursion,
}

/// If `m` witnesses an associated prime of `R/J`, i.e. `J : m` is generated by
/// variables, return their 0-based indices.
fn witness_prime(j: &MonomialIdeal, m: &[u64]) -> Option<Vec<usize>> {
    if j.contains_exponents(m) {
        return None;
    }
    let mut probe = m.to_vec();
    let mut prime = Vec::new();
    for i in 0..m.len() {
        probe[i] += 1;
        if j.contains_exponents(&probe) {
            prime.push(i);
        }
        probe[i] -= 1;
    }
    if prime.is_empty() {
        return None;
    }
    // J : m ⊆ (t_i : i in prime) iff every lcm(g, m)/m involves one of them.
    let inside = j
        .generators()
        .iter()
        .all(|g| prime.iter().any(|&i| g.exponents()[i] > m[i]));
    inside.then_some(prime)
}

/// Associated primes of `R/J` with one witness monomial each.
///
/// Witnesses are searched in the box `m_i <= max_i`, `max_i` the largest exponent
/// of `t_i` among the generators of `J`; raising `m_i` past `max_i` leaves `J : m`
/// unchanged, so the box is complete.
pub fn ass_of_quotient_with_witnesses(j: &MonomialIdeal) -> Result<Vec<(VariablePrime, Monomial)>> {
    if !j.is_proper_nonzero() {
        return Err(Error::InvalidInput(
            "associated primes of R/J need J proper and nonzero".into(),
        ));
    }
    let caps = j.max_exponents();
    let mut found: HashMap<Vec<usize>, Vec<u64>> = HashMap::new();
    for_each_in_box(&caps, |m| {
        if let Some(p) = witness_prime(j, m) {
            found.entry(p).or_insert_with(|| m.to_vec());
        }
    });
    let mut out: Vec<(VariablePrime, Monomial)> = found
        .into_iter()
        .map(|(p, m)| (VariablePrime::from_zero_based(p), Monomial::new(m)))
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

/// `Ass(R/J)` for a proper nonzero monomial ideal `J`.
pub fn ass_of_quotient(j: &MonomialIdeal) -> Result<PrimeSet> {
    Ok(ass_of_quotient_with_witnesses(j)?.into_iter().map(|(p, _)| p).collect())
}

/// Whether the prime generated by `vars` lies in `Ass(I^n/I^{n+1})`, for an
/// ideal whose support is contained in `vars`.
fn support_prime_in_ass(
    i: &MonomialIdeal,
    vars: &[usize],
    power_n: &MonomialIdeal,
    power_next: &MonomialIdeal,
    n: u64,
) -> bool {
    let mut numerator = power_n.clone();
    for &v in vars {
        let deleted = i.delete_variable_unchecked(v).power(n + 1);
        numerator = numerator.intersect_unchecked(&deleted);
        if numerator == *power_next {
            return false;
        }
    }
    numerator != *power_next
}

/// Whether the maximal ideal `(t_1, ..., t_r)` lies in `Ass(I^n/I^{n+1})`.
///
/// Returns `false` when `r = 1`.
pub fn max_ideal_in_ass(i: &MonomialIdeal, n: u64) -> Result<bool> {
    if !i.is_proper_nonzero() {
        return Err(Error::InvalidInput("the ideal must be proper and nonzero".into()));
    }
    if i.r() < 2 {
        return Ok(false);
    }
    let all: Vec<usize> = (0..i.r()).collect();
    Ok(support_prime_in_ass(i, &all, &i.power(n), &i.power(n + 1), n))
}

struct Recursion {
    n: u64,
    memo: HashMap<MonomialIdeal, PrimeSet>,
}

impl Recursion {
    fn solve(&mut self, i: &MonomialIdeal) -> PrimeSet {
        if i.is_unit() {
            return PrimeSet::new();
        }
        if let Some(hit) = self.memo.get(i) {
            return hit.clone();
        }
        let support = i.support();
        let mut out = PrimeSet::new();
        if i.is_pure_power() {
            // (t_{i_1}^{a_1}, ..., t_{i_p}^{a_p}): every power is primary to the support.
            out.insert(VariablePrime::from_zero_based(support.iter().copied()));
        } else {
            let pn = i.power(self.n);
            let pnext = pn.product(i).expect("same ring");
            if support_prime_in_ass(i, &support, &pn, &pnext, self.n) {
                out.insert(VariablePrime::from_zero_based(support.iter().copied()));
            }
            for &v in &support {
                let sub = i.delete_variable_unchecked(v);
                out.extend(self.solve(&sub));
            }
        }
        self.memo.insert(i.clone(), out.clone());
        out
    }
}

/// `Ass(I^n/I^{n+1})`. The unit ideal gives the empty set.
pub fn ass_power(i: &MonomialIdeal, n: u64, method: AssMethod) -> Result<PrimeSet> {
    if i.is_zero() {
        return Err(Error::InvalidInput("the zero ideal has no graded pieces to inspect".into()));
    }
    if i.is_unit() {
        return Ok(PrimeSet::new());
    }
    match method {
        AssMethod::Quotient => ass_of_quotient(&i.power(n + 1)),
        AssMethod::Recursion => {
            let mut rec = Recursion { n, memo: HashMap::new() };
            Ok(rec.solve(i))
        }
    }
}

/// `Ass(I^n/I^{n+1})` for `n = 0..=n_max`, with the observed stabilization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AssProfile {
    #[serde(skip)]
    pub ideal: MonomialIdeal,
    pub method: AssMethod,
    /// `entries[n] = Ass(I^n/I^{n+1})`.
    pub entries: Vec<PrimeSet>,
    /// Smallest `n0 < n_max` with `entries[n0..=n_max]` all equal; `None` when the
    /// last two entries differ.
    pub observed_stable_at: Option<u64>,
    /// `n` with `entries[n+1]` strictly larger than `entries[n]`.
    pub increases_at: Vec<u64>,
    /// `n` with `entries[n+1]` strictly smaller than `entries[n]`.
    pub decreases_at: Vec<u64>,
    /// `n` with `entries[n]` and `entries[n+1]` incomparable.
    pub incomparable_at: Vec<u64>,
}

impl AssProfile {
    pub fn n_max(&self) -> u64 {
        self.entries.len() as u64 - 1
    }

    pub fn is_monotone(&self) -> bool {
        self.incomparable_at.is_empty()
            && (self.increases_at.is_empty() || self.decreases_at.is_empty())
    }

    fn from_entries(ideal: MonomialIdeal, method: AssMethod, entries: Vec<PrimeSet>) -> Self {
        let last = entries.len() - 1;
        let mut start = last;
        while start > 0 && entries[start - 1] == entries[last] {
            start -= 1;
        }
        let observed_stable_at = (start < last).then_some(start as u64);
        let mut increases_at = Vec::new();
        let mut decreases_at = Vec::new();
        let mut incomparable_at = Vec::new();
        for n in 0..last {
            let (a, b) = (&entries[n], &entries[n + 1]);
            if a == b {
                continue;
            }
            if a.is_subset(b) {
                increases_at.push(n as u64);
            } else if b.is_subset(a) {
                decreases_at.push(n as u64);
            } else {
                incomparable_at.push(n as u64);
            }
        }
        AssProfile {
            ideal,
            method,
            entries,
            observed_stable_at,
            increases_at,
            decreases_at,
            incomparable_at,
        }
    }
}

/// Profile with the quotient method, sequentially.
pub fn ass_profile(i: &MonomialIdeal, n_max: u64) -> Result<AssProfile> {
    ass_profile_with(i, n_max, AssMethod::Quotient, false)
}

/// Profile with an explicit method; `parallel` evaluates the degrees on the
/// rayon pool and merges by index, so the result does not depend on it.
pub fn ass_profile_with(
    i: &MonomialIdeal,
    n_max: u64,
    method: AssMethod,
    parallel: bool,
) -> Result<AssProfile> {
    if !i.is_proper_nonzero() {
        return Err(Error::InvalidInput("the ideal must be proper and nonzero".into()));
    }
    if n_max == 0 {
        return Err(Error::InvalidInput("n_max must be at least 1".into()));
    }
    let entries: Vec<PrimeSet> = match method {
        AssMethod::Quotient => {
            let powers = i.powers_up_to(n_max + 1);
            let job = |n: usize| ass_of_quotient(&powers[n + 1]);
            if parallel {
                (0..=n_max as usize).into_par_iter().map(job).collect::<Result<_>>()?
            } else {
                (0..=n_max as usize).map(job).collect::<Result<_>>()?
            }
        }
        AssMethod::Recursion => {
            let job = |n: u64| ass_power(i, n, AssMethod::Recursion);
            if parallel {
                (0..=n_max).into_par_iter().map(job).collect::<Result<_>>()?
            } else {
                (0..=n_max).map(job).collect::<Result<_>>()?
            }
        }
    };
    Ok(AssProfile::from_entries(i.clone(), method, entries))
}
