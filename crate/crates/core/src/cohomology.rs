//! Ratliff-Rush closures and the degree pieces of `H^0` of the associated
//! graded ring `G = ⊕ I^n/I^{n+1}`.
//!
//! * `H^0_m(G)_n ≅ (I^n ∩ I[1]^{n+1} ∩ ... ∩ I[r]^{n+1}) / I^{n+1}`, a finite
//!   set of monomials that [`h0_m_monomials`] enumerates.
//! * `H^0_{R+}(G)_{n-1} ≅ (closure(I^n) ∩ I^{n-1}) / I^n`, whose top nonzero
//!   degree is `a_0(G)`; [`a0_observed`] scans it up to a cap.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{for_each_in_box, Monomial};

/// Outcome of the closure chain for `closure(I^n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RRResult {
    pub n: u64,
    #[serde(serialize_with = "serialize_generators", rename = "closure_generators")]
    pub closure: MonomialIdeal,
    /// Smallest `m` from which the partial union stopped growing.
    pub stabilized_at_m: u64,
    /// True iff the partial union stayed fixed for two further steps within the cap.
    pub certified: bool,
    /// Largest `m` evaluated.
    pub evaluated_up_to_m: u64,
    /// Whether the chain terms themselves were ascending in `m`, not only their union.
    pub chain_monotone: bool,
}

fn serialize_generators<S: serde::Serializer>(
    ideal: &MonomialIdeal,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(ideal.len()))?;
    for g in ideal.generators() {
        seq.serialize_element(g.exponents())?;
    }
    seq.end()
}

fn require_proper(i: &MonomialIdeal) -> Result<()> {
    if !i.is_proper_nonzero() {
        return Err(Error::InvalidInput("the ideal must be proper and nonzero".into()));
    }
    Ok(())
}

/// `(t^{m a_1}, ..., t^{m a_s})` for the generators `a_i` of `I`.
pub fn scaled_generator_ideal(i: &MonomialIdeal, m: u64) -> MonomialIdeal {
    let gens: Vec<Monomial> = i.generators().iter().map(|g| g.pow(m)).collect();
    MonomialIdeal::minimize(gens, i.r()).expect("same ring")
}

/// The `m`-th term `I^{n+m} : (t^{m a_1}, ..., t^{m a_s})` of the closure chain.
fn scaled_term(i: &MonomialIdeal, power: &MonomialIdeal, m: u64) -> MonomialIdeal {
    power.colon_ideal_unchecked(&scaled_generator_ideal(i, m))
}

/// `closure(I^n)` as the union over `m` of `I^{n+m} : (t^{m a_1}, ..., t^{m a_s})`,
/// stopped once the partial union is unchanged for two more steps (`m_cap >= 2`).
pub fn ratliff_rush(i: &MonomialIdeal, n: u64, m_cap: u64) -> Result<RRResult> {
    require_proper(i)?;
    if n == 0 {
        return Err(Error::InvalidInput("closure degree n must be positive".into()));
    }
    if m_cap < 2 {
        return Err(Error::InvalidInput("m_cap must be at least 2".into()));
    }
    let mut power = i.power(n);
    let mut prev_term = power.clone();
    let mut union = power.clone();
    let mut last_growth = 0u64;
    let mut chain_monotone = true;
    let mut m = 0u64;
    while m < m_cap {
        m += 1;
        power = power.product(i)?;
        let term = scaled_term(i, &power, m);
        if !prev_term.is_subset_of(&term) {
            chain_monotone = false;
        }
        let grown = union.sum(&term)?;
        if grown != union {
            union = grown;
            last_growth = m;
        }
        prev_term = term;
        if m >= last_growth + 2 {
            return Ok(RRResult {
                n,
                closure: union,
                stabilized_at_m: last_growth,
                certified: true,
                evaluated_up_to_m: m,
                chain_monotone,
            });
        }
    }
    Ok(RRResult {
        n,
        closure: union,
        stabilized_at_m: last_growth,
        certified: false,
        evaluated_up_to_m: m_cap,
        chain_monotone,
    })
}

/// `⋃_{m <= m_max} I^{n+m} : (t^{m a_1}, ..., t^{m a_s})`, without early stopping.
pub fn scaled_generator_union(i: &MonomialIdeal, n: u64, m_max: u64) -> MonomialIdeal {
    let powers = i.powers_up_to(n + m_max);
    let mut union = powers[n as usize].clone();
    for m in 1..=m_max {
        let term = scaled_term(i, &powers[(n + m) as usize], m);
        union = union.sum(&term).expect("same ring");
    }
    union
}

/// `⋃_{m <= m_max} I^{n+m} : I^m`, the closure straight from its definition.
pub fn definitional_union(i: &MonomialIdeal, n: u64, m_max: u64) -> MonomialIdeal {
    let powers = i.powers_up_to(n + m_max);
    let mut union = powers[n as usize].clone();
    for m in 1..=m_max {
        let term = powers[(n + m) as usize].colon_ideal_unchecked(&powers[m as usize]);
        union = union.sum(&term).expect("same ring");
    }
    union
}

/// The monomials of `H^0_m(I^n/I^{n+1})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct H0Report {
    pub n: u64,
    pub witness_monomials: Vec<Monomial>,
    pub nonzero: bool,
}

/// Enumerate `(I^n ∩ ⋂ I[i]^{n+1}) \ I^{n+1}`.
///
/// A monomial `m` in that difference has `m_j < e_j`, where `e_j` is the largest
/// exponent of `t_j` in `I^{n+1}`: otherwise the generator of `I^{n+1}` that
/// witnesses `m ∈ I[j]^{n+1}` would divide `m`. The scan covers that box.
pub fn h0_m_monomials(i: &MonomialIdeal, n: u64) -> Result<H0Report> {
    require_proper(i)?;
    if i.r() < 2 {
        return Ok(H0Report { n, witness_monomials: Vec::new(), nonzero: false });
    }
    let power_n = i.power(n);
    let power_next = power_n.product(i)?;
    let deleted: Vec<MonomialIdeal> = (0..i.r())
        .map(|v| i.delete_variable_unchecked(v).power(n + 1))
        .collect();
    let maxima = power_next.max_exponents();
    let mut witnesses = Vec::new();
    if maxima.iter().all(|&e| e > 0) {
        let caps: Vec<u64> = maxima.iter().map(|e| e - 1).collect();
        for_each_in_box(&caps, |m| {
            if !power_next.contains_exponents(m)
                && power_n.contains_exponents(m)
                && deleted.iter().all(|d| d.contains_exponents(m))
            {
                witnesses.push(Monomial::new(m.to_vec()));
            }
        });
    }
    witnesses.sort_by(|a, b| a.canonical_cmp(b));
    let nonzero = !witnesses.is_empty();
    Ok(H0Report { n, witness_monomials: witnesses, nonzero })
}

/// Observed `a_0(G)` over the degrees `0..n_max`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct A0Report {
    /// Largest degree with a nonzero piece; `None` stands for `-∞`.
    pub a0: Option<u64>,
    /// `per_degree_flags[k]` is whether `H^0_{R+}(G)_k ≠ 0`, for `k = 0..n_max`.
    pub per_degree_flags: Vec<bool>,
    /// True iff every closure chain used was certified.
    pub certified: bool,
    pub warnings: Vec<String>,
}

/// Scan `(closure(I^n) ∩ I^{n-1}) / I^n` for `n = 1..=n_max`.
pub fn a0_observed(i: &MonomialIdeal, n_max: u64, m_cap: u64) -> Result<A0Report> {
    require_proper(i)?;
    if n_max == 0 {
        return Err(Error::InvalidInput("n_max must be at least 1".into()));
    }
    let powers = i.powers_up_to(n_max);
    let mut flags = Vec::with_capacity(n_max as usize);
    let mut warnings = Vec::new();
    for n in 1..=n_max {
        let rr = ratliff_rush(i, n, m_cap)?;
        if !rr.certified {
            warnings.push(format!(
                "closure of I^{n} not certified within m_cap = {m_cap}"
            ));
        }
        if !rr.chain_monotone {
            warnings.push(format!("closure chain for I^{n} is not ascending in m"));
        }
        let piece = rr.closure.intersect(&powers[(n - 1) as usize])?;
        flags.push(piece != powers[n as usize]);
    }
    let a0 = flags.iter().rposition(|&f| f).map(|k| k as u64);
    let certified = !warnings.iter().any(|w| w.contains("not certified"));
    Ok(A0Report { a0, per_degree_flags: flags, certified, warnings })
}
