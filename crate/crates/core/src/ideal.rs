//! Monomial ideals as canonical antichains of exponent vectors.
//!
//! Every ideal is stored by its minimal generators, sorted lexicographically
//! descending, so structural equality is ideal equality. The coefficient field
//! never appears: all operations act on exponent vectors only.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::Monomial;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonomialIdeal {
    r: usize,
    gens: Vec<Monomial>,
}

/// Reduce `gens` to its divisibility antichain in canonical order.
///
/// Candidates are processed by increasing degree so that a monomial can only be
/// divided by one already kept.
fn antichain(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    if gens.len() > 1 {
        let mut seen = HashSet::with_capacity(gens.len());
        gens.retain(|g| seen.insert(g.clone()));
    }
    let mut keyed: Vec<(u64, Monomial)> = gens.into_iter().map(|g| (g.degree(), g)).collect();
    keyed.sort_unstable_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.canonical_cmp(&b.1)));
    let mut kept: Vec<(u64, Monomial)> = Vec::new();
    for (deg, m) in keyed {
        let covered = kept.iter().any(|(kd, k)| *kd <= deg && k.divides(&m));
        if !covered {
            kept.push((deg, m));
        }
    }
    let mut out: Vec<Monomial> = kept.into_iter().map(|(_, m)| m).collect();
    out.sort_unstable_by(|a, b| a.canonical_cmp(b));
    out
}

impl MonomialIdeal {
    /// Minimal generating set of the ideal generated by `gens`.
    pub fn minimize(gens: Vec<Monomial>, r: usize) -> Result<Self> {
        if let Some(bad) = gens.iter().find(|g| g.len() != r) {
            return Err(Error::LengthMismatch { expected: r, found: bad.len() });
        }
        Ok(MonomialIdeal { r, gens: antichain(gens) })
    }

    /// Convenience constructor from raw exponent rows; panics on ragged input.
    pub fn from_exponents(r: usize, rows: &[&[u64]]) -> Self {
        Self::minimize(rows.iter().map(|row| Monomial::new(row.to_vec())).collect(), r)
            .expect("exponent rows must all have length r")
    }

    fn from_raw(r: usize, gens: Vec<Monomial>) -> Self {
        MonomialIdeal { r, gens: antichain(gens) }
    }

    pub fn zero(r: usize) -> Self {
        MonomialIdeal { r, gens: Vec::new() }
    }

    pub fn unit(r: usize) -> Self {
        MonomialIdeal { r, gens: vec![Monomial::one(r)] }
    }

    /// The prime `(t_i : i in indices)`, indices 0-based.
    pub fn generated_by_variables(r: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        Self::from_raw(r, indices.into_iter().map(|i| Monomial::variable(r, i)).collect())
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_proper_nonzero(&self) -> bool {
        !self.is_zero() && !self.is_unit()
    }

    /// Maximal total degree of a generator (`d`); zero for the zero ideal.
    pub fn max_degree(&self) -> u64 {
        self.gens.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Componentwise maximum of the generator exponents.
    pub fn max_exponents(&self) -> Vec<u64> {
        let mut out = vec![0; self.r];
        for g in &self.gens {
            for (o, &e) in out.iter_mut().zip(g.exponents()) {
                *o = (*o).max(e);
            }
        }
        out
    }

    /// Variables (0-based) occurring in some generator.
    pub fn support(&self) -> Vec<usize> {
        (0..self.r)
            .filter(|&i| self.gens.iter().any(|g| g.exponents()[i] > 0))
            .collect()
    }

    /// True when every generator is a power of a single variable.
    pub fn is_pure_power(&self) -> bool {
        !self.is_zero() && self.gens.iter().all(|g| g.support().count() == 1)
    }

    fn check_len(&self, m: &Monomial) -> Result<()> {
        if m.len() != self.r {
            return Err(Error::LengthMismatch { expected: self.r, found: m.len() });
        }
        Ok(())
    }

    fn check_same_ring(&self, other: &MonomialIdeal) -> Result<()> {
        if other.r != self.r {
            return Err(Error::LengthMismatch { expected: self.r, found: other.r });
        }
        Ok(())
    }

    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        self.check_len(m)?;
        Ok(self.contains_unchecked(m))
    }

    pub(crate) fn contains_unchecked(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Membership of an exponent vector of length `r`, without allocating a `Monomial`.
    pub fn contains_exponents(&self, e: &[u64]) -> bool {
        self.gens
            .iter()
            .any(|g| g.exponents().iter().zip(e).all(|(a, b)| a <= b))
    }

    /// `self ⊆ other` as sets of monomials.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> bool {
        self.gens.iter().all(|g| other.contains_unchecked(g))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_ring(other)?;
        Ok(self.product_unchecked(other))
    }

    fn product_unchecked(&self, other: &MonomialIdeal) -> MonomialIdeal {
        if self.is_zero() || other.is_zero() {
            return MonomialIdeal::zero(self.r);
        }
        let mut cands = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                cands.push(g.mul(h));
            }
        }
        MonomialIdeal::from_raw(self.r, cands)
    }

    /// Sum of two ideals.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_ring(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(MonomialIdeal::from_raw(self.r, gens))
    }

    /// `I^n`; `I^0` is the unit ideal.
    pub fn power(&self, n: u64) -> MonomialIdeal {
        let mut acc = MonomialIdeal::unit(self.r);
        for _ in 0..n {
            acc = acc.product_unchecked(self);
            if acc.is_zero() {
                break;
            }
        }
        acc
    }

    /// `[I^0, I^1, ..., I^n]`, each computed from the previous one.
    pub fn powers_up_to(&self, n: u64) -> Vec<MonomialIdeal> {
        let mut out = Vec::with_capacity(n as usize + 1);
        out.push(MonomialIdeal::unit(self.r));
        for k in 0..n as usize {
            let next = out[k].product_unchecked(self);
            out.push(next);
        }
        out
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_ring(other)?;
        Ok(self.intersect_unchecked(other))
    }

    pub(crate) fn intersect_unchecked(&self, other: &MonomialIdeal) -> MonomialIdeal {
        if self.is_zero() || other.is_zero() {
            return MonomialIdeal::zero(self.r);
        }
        if self.is_unit() {
            return other.clone();
        }
        if other.is_unit() {
            return self.clone();
        }
        let mut cands = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                cands.push(g.lcm(h));
            }
        }
        MonomialIdeal::from_raw(self.r, cands)
    }

    /// `I : m`.
    pub fn colon_monomial(&self, m: &Monomial) -> Result<MonomialIdeal> {
        self.check_len(m)?;
        Ok(self.colon_monomial_unchecked(m))
    }

    pub(crate) fn colon_monomial_unchecked(&self, m: &Monomial) -> MonomialIdeal {
        MonomialIdeal::from_raw(self.r, self.gens.iter().map(|g| g.quotient_of_lcm(m)).collect())
    }

    /// `I : J`, the intersection of `I : g` over generators `g` of `J`.
    /// `I : 0` is the unit ideal.
    pub fn colon_ideal(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_ring(other)?;
        Ok(self.colon_ideal_unchecked(other))
    }

    pub(crate) fn colon_ideal_unchecked(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut acc = MonomialIdeal::unit(self.r);
        for g in &other.gens {
            let part = self.colon_monomial_unchecked(g);
            acc = acc.intersect_unchecked(&part);
            if acc.is_zero() {
                break;
            }
        }
        acc
    }

    /// `I : J^∞`, iterating `K -> K : J` until the ascending chain stops.
    pub fn saturate(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_ring(other)?;
        if other.is_zero() {
            return Err(Error::InvalidInput("saturation by the zero ideal".into()));
        }
        let mut current = self.clone();
        loop {
            let next = current.colon_ideal_unchecked(other);
            if next == current {
                return Ok(current);
            }
            current = next;
        }
    }

    /// `I[j]`: set `t_j = 1` in every generator. `j` is 1-based; the ambient
    /// variable count is kept.
    pub fn delete_variable(&self, j: usize) -> Result<MonomialIdeal> {
        if self.r < 2 {
            return Err(Error::InvalidInput(
                "variable deletion needs at least two variables".into(),
            ));
        }
        if j == 0 || j > self.r {
            return Err(Error::VariableOutOfRange { index: j, r: self.r });
        }
        Ok(self.delete_variable_unchecked(j - 1))
    }

    /// 0-based variant used by the recursive algorithms.
    pub(crate) fn delete_variable_unchecked(&self, index: usize) -> MonomialIdeal {
        MonomialIdeal::from_raw(self.r, self.gens.iter().map(|g| g.with_zeroed(index)).collect())
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

/// `(x^d, x^{d-1}y, xy^{d-1}, y^d, x^2y^{d-2}z)` in three variables.
pub fn e11_ideal(d: u64) -> MonomialIdeal {
    assert!(d >= 2, "the family needs d >= 2");
    MonomialIdeal::from_exponents(
        3,
        &[&[d, 0, 0], &[d - 1, 1, 0], &[1, d - 1, 0], &[0, d, 0], &[2, d - 2, 1]],
    )
}
