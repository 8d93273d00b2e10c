//! Constraint systems whose integer points describe `J ∩ I^{n-1}` (with
//! `J = I[1]^n ∩ ⋯ ∩ I[r]^n`), its homogeneous counterpart, and the
//! Ratliff-Rush closures of the powers of `I`; plus bounded feasibility search.
//!
//! For generators `a_1, .., a_s`, a monomial `t^b` lies in `I^n` iff some
//! `α_1, .., α_{s-1} >= 0` with `Σ α_k <= n` satisfy
//! `b_j >= Σ_k a_kj α_k + a_sj (n - Σ_k α_k)` for every `j`.

use num_bigint::BigUint;
use serde::Serialize;

use super::system::{box_size, check_budget, ConstraintSystem, IntVector};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{for_each_in_box, Monomial};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum EdMode {
    /// Integer points with `z = n`, `y = b` encode `t^b ∈ J ∩ I^{n-1}`.
    Ed1,
    /// Homogenization of `Ed1`; points with `z = n`, `y = b` encode `t^b ∈ I^n`.
    Ed2,
    /// Points with `z = n`, `y = b` encode `t^b` in the Ratliff-Rush closure of `I^n`.
    Ed3,
}

impl std::str::FromStr for EdMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "ed1" => Ok(EdMode::Ed1),
            "ed2" => Ok(EdMode::Ed2),
            "ed3" => Ok(EdMode::Ed3),
            other => Err(Error::InvalidInput(format!("unknown system `{other}`"))),
        }
    }
}

/// One squared column norm against its required bound.
#[derive(Clone, Debug, Serialize)]
pub struct ColumnCheck {
    pub label: String,
    #[serde(serialize_with = "as_decimal")]
    pub norm_sq: BigUint,
    /// `true`: `norm_sq < bound`; `false`: `norm_sq == bound`.
    pub strict: bool,
    #[serde(serialize_with = "as_decimal")]
    pub bound: BigUint,
}

fn as_decimal<S: serde::Serializer>(n: &BigUint, ser: S) -> std::result::Result<S::Ok, S::Error> {
    ser.collect_str(n)
}

impl ColumnCheck {
    pub fn holds(&self) -> bool {
        if self.strict {
            self.norm_sq < self.bound
        } else {
            self.norm_sq == self.bound
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct EdSystem {
    pub mode: EdMode,
    pub system: ConstraintSystem,
    /// `a_1, .., a_s` as used in the rows; `a_s` is the designated generator.
    pub generator_order: Vec<Monomial>,
    pub r: usize,
    pub s: usize,
    pub d: u64,
}

/// The generator playing the role of `a_s`: among those with at least two
/// nonzero exponents, the one of largest support, first in canonical order on ties.
pub fn designated_generator(i: &MonomialIdeal) -> Option<usize> {
    let gens = i.generators();
    let mut best: Option<(usize, usize)> = None;
    for (k, g) in gens.iter().enumerate() {
        let support = g.support().count();
        if support >= 2 && best.is_none_or(|(_, s)| support > s) {
            best = Some((k, support));
        }
    }
    best.map(|(k, _)| k)
}

fn ordered_generators(i: &MonomialIdeal, designated: usize) -> Vec<Vec<i64>> {
    let gens = i.generators();
    gens.iter()
        .enumerate()
        .filter(|&(k, _)| k != designated)
        .chain(std::iter::once((designated, &gens[designated])))
        .map(|(_, g)| g.exponents().iter().map(|&x| x as i64).collect())
        .collect()
}

fn check_ideal(i: &MonomialIdeal) -> Result<()> {
    if i.is_zero() {
        return Err(Error::InvalidInput("the zero ideal has no generators".into()));
    }
    if i.is_unit() {
        return Err(Error::InvalidInput("the unit ideal has no proper powers".into()));
    }
    Ok(())
}

/// Build the ED1, ED2 or ED3 system for `I`. Ideals generated by pure powers
/// of variables are refused: for those `Ass(I^n/I^{n+1})` is known directly.
pub fn build_system(i: &MonomialIdeal, mode: EdMode) -> Result<EdSystem> {
    check_ideal(i)?;
    let designated = designated_generator(i).ok_or(Error::PurePower)?;
    let a = ordered_generators(i, designated);
    let r = i.r();
    let s = a.len();
    let system = match mode {
        EdMode::Ed1 => ed1(&a, r, s),
        EdMode::Ed2 => ed1(&a, r, s).homogenized(),
        EdMode::Ed3 => ed3(&a, r, s),
    };
    Ok(EdSystem {
        mode,
        system,
        generator_order: a
            .iter()
            .map(|g| Monomial::new(g.iter().map(|&x| x as u64).collect()))
            .collect(),
        r,
        s,
        d: i.max_degree(),
    })
}

/// Layout `(z, y_1..y_r, x_1..x_{s-1}, x_{1,1}..x_{r,s-1})`.
fn ed1(a: &[Vec<i64>], r: usize, s: usize) -> ConstraintSystem {
    let e = r * s + s;
    let last = &a[s - 1];
    let y = |j: usize| 1 + j;
    let x = |k: usize| 1 + r + k;
    let xi = |i: usize, k: usize| 1 + r + (s - 1) + i * (s - 1) + k;
    let mut rows = Vec::new();
    let mut rhs = Vec::new();

    // y_j >= Σ a_kj x_k + a_sj (z - Σ x_k - 1)
    for j in 0..r {
        let mut row = vec![0; e];
        row[y(j)] = 1;
        row[0] = -last[j];
        for k in 0..s - 1 {
            row[x(k)] = -(a[k][j] - last[j]);
        }
        rows.push(row);
        rhs.push(-last[j]);
    }
    // z >= Σ x_k + 1
    let mut row = vec![0; e];
    row[0] = 1;
    for k in 0..s - 1 {
        row[x(k)] = -1;
    }
    rows.push(row);
    rhs.push(1);

    for i in 0..r {
        for j in (0..r).filter(|&j| j != i) {
            let mut row = vec![0; e];
            row[y(j)] = 1;
            row[0] = -last[j];
            for k in 0..s - 1 {
                row[xi(i, k)] = -(a[k][j] - last[j]);
            }
            rows.push(row);
            rhs.push(0);
        }
        let mut row = vec![0; e];
        row[0] = 1;
        for k in 0..s - 1 {
            row[xi(i, k)] = -1;
        }
        rows.push(row);
        rhs.push(0);
    }

    let mut labels = vec!["z".to_string()];
    labels.extend((1..=r).map(|j| format!("y{j}")));
    labels.extend((1..s).map(|k| format!("x{k}")));
    for i in 1..=r {
        labels.extend((1..s).map(|k| format!("x{i}_{k}")));
    }
    ConstraintSystem::with_labels(e, rows, rhs, labels).expect("consistent layout")
}

/// Layout `(z, x, y_1..y_r, x_{1,1}..x_{s,s-1})`.
fn ed3(a: &[Vec<i64>], r: usize, s: usize) -> ConstraintSystem {
    let e = s * (s - 1) + r + 2;
    let last = &a[s - 1];
    let y = |j: usize| 2 + j;
    let xi = |i: usize, k: usize| 2 + r + i * (s - 1) + k;
    let mut rows = Vec::new();
    for i in 0..s {
        // y_j + a_ij x >= Σ_k a_kj x_ik + a_sj (z + x - Σ_k x_ik)
        for j in 0..r {
            let mut row = vec![0; e];
            row[y(j)] = 1;
            row[0] = -last[j];
            row[1] = a[i][j] - last[j];
            for k in 0..s - 1 {
                row[xi(i, k)] = -(a[k][j] - last[j]);
            }
            rows.push(row);
        }
        // z + x >= Σ_k x_ik
        let mut row = vec![0; e];
        row[0] = 1;
        row[1] = 1;
        for k in 0..s - 1 {
            row[xi(i, k)] = -1;
        }
        rows.push(row);
    }
    let rhs = vec![0; rows.len()];
    let mut labels = vec!["z".to_string(), "x".to_string()];
    labels.extend((1..=r).map(|j| format!("y{j}")));
    for i in 1..=s {
        labels.extend((1..s).map(|k| format!("x{i}_{k}")));
    }
    ConstraintSystem::with_labels(e, rows, rhs, labels).expect("consistent layout")
}

impl EdSystem {
    /// Index of `y_1`.
    pub fn y_offset(&self) -> usize {
        match self.mode {
            EdMode::Ed1 | EdMode::Ed2 => 1,
            EdMode::Ed3 => 2,
        }
    }

    /// A partial assignment fixing `z = n` and `y = b`.
    pub fn fix_z_y(&self, n: u64, b: &[u64]) -> Result<Vec<Option<i64>>> {
        if b.len() != self.r {
            return Err(Error::LengthMismatch { expected: self.r, found: b.len() });
        }
        let mut fixed = vec![None; self.system.e];
        fixed[0] = Some(n as i64);
        for (j, &bj) in b.iter().enumerate() {
            fixed[self.y_offset() + j] = Some(bj as i64);
        }
        Ok(fixed)
    }

    /// Squared column norms against the bounds `2d²` (x-type columns), `r` or `s`
    /// (y columns), `rd²` or `sd²` (z), `2sd²` (the `x` of ED3) and `d²` (the
    /// right-hand side of ED1). All strict inequalities rely on the designated
    /// generator having two nonzero exponents.
    pub fn column_checks(&self) -> Vec<ColumnCheck> {
        let d2 = BigUint::from(self.d) * self.d;
        let r = BigUint::from(self.r);
        let s = BigUint::from(self.s);
        let sys = &self.system;
        let mut out = Vec::new();
        let mut push = |label: &str, norm_sq: BigUint, strict: bool, bound: BigUint| {
            out.push(ColumnCheck { label: label.to_string(), norm_sq, strict, bound });
        };
        for (j, label) in sys.labels.iter().enumerate() {
            let norm = sys.column_norm_sq(j);
            match (self.mode, label.as_str()) {
                (_, "z") => {
                    let factor = if self.mode == EdMode::Ed3 { &s } else { &r };
                    push(label, norm, true, factor * &d2);
                }
                (EdMode::Ed3, "x") => push(label, norm, true, BigUint::from(2u32) * &s * &d2),
                (_, l) if l.starts_with('y') => {
                    let count = if self.mode == EdMode::Ed3 { s.clone() } else { r.clone() };
                    push(label, norm, false, count);
                }
                _ => push(label, norm, true, BigUint::from(2u32) * &d2),
            }
        }
        if self.mode == EdMode::Ed1 {
            push("rhs", sys.rhs_norm_sq(), true, d2);
        }
        out
    }

    pub fn column_checks_hold(&self) -> bool {
        self.column_checks().iter().all(ColumnCheck::holds)
    }
}

/// Homogeneous system in `(z, y_1..y_r, α_1..α_{s-1})` whose integer points with
/// `z = n`, `y = b` are exactly the ways of seeing `t^b ∈ I^n`. Uses the last
/// generator in canonical order as `a_s`.
pub fn power_membership_system(i: &MonomialIdeal) -> Result<ConstraintSystem> {
    if i.is_zero() {
        return Err(Error::InvalidInput("the zero ideal has no generators".into()));
    }
    let gens = i.generators();
    let r = i.r();
    let s = gens.len();
    let e = 1 + r + (s - 1);
    let a = |k: usize, j: usize| gens[k].exponents()[j] as i64;
    let mut rows = Vec::new();
    for j in 0..r {
        let mut row = vec![0; e];
        row[0] = -a(s - 1, j);
        row[1 + j] = 1;
        for k in 0..s - 1 {
            row[1 + r + k] = -(a(k, j) - a(s - 1, j));
        }
        rows.push(row);
    }
    let mut row = vec![0; e];
    row[0] = 1;
    for k in 0..s - 1 {
        row[1 + r + k] = -1;
    }
    rows.push(row);
    let rhs = vec![0; rows.len()];
    let mut labels = vec!["z".to_string()];
    labels.extend((1..=r).map(|j| format!("y{j}")));
    labels.extend((1..s).map(|k| format!("alpha{k}")));
    ConstraintSystem::with_labels(e, rows, rhs, labels)
}

/// Exhaustive search over the unfixed variables in `[0, box_cap]` for a point of
/// `sys` extending `fixed`. `Ok(None)` means infeasible within the box.
pub fn solve_feasible(
    sys: &ConstraintSystem,
    fixed: &[Option<i64>],
    box_cap: u64,
    budget: u64,
) -> Result<Option<IntVector>> {
    if fixed.len() != sys.e {
        return Err(Error::LengthMismatch { expected: sys.e, found: fixed.len() });
    }
    let free: Vec<usize> = (0..sys.e).filter(|&k| fixed[k].is_none()).collect();
    check_budget(box_size(box_cap, free.len()), budget)?;
    let mut point: Vec<i64> = fixed.iter().map(|v| v.unwrap_or(0)).collect();
    let caps = vec![box_cap; free.len()];
    let mut found = None;
    // the odometer cannot stop early; skip work once a witness is known
    for_each_in_box(&caps, |p| {
        if found.is_some() {
            return;
        }
        for (&k, &val) in free.iter().zip(p) {
            point[k] = val as i64;
        }
        if sys.satisfies(&point) {
            found = Some(IntVector(point.clone()));
        }
    });
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::e11_ideal;
    use crate::polyhedra::DEFAULT_BUDGET;

    #[test]
    fn variable_counts_for_e11() {
        let i = e11_ideal(5);
        let ed1 = build_system(&i, EdMode::Ed1).unwrap();
        assert_eq!(ed1.system.e, 20);
        let ed3 = build_system(&i, EdMode::Ed3).unwrap();
        assert_eq!(ed3.system.e, 25);
        assert!(ed1.column_checks_hold(), "{:?}", ed1.column_checks());
        assert!(ed3.column_checks_hold(), "{:?}", ed3.column_checks());
        // the designated generator is x^2 y^3 z, the only one with three variables
        assert_eq!(ed1.generator_order.last().unwrap().exponents(), &[2, 3, 1]);
    }

    #[test]
    fn ed2_is_homogeneous() {
        let i = MonomialIdeal::from_exponents(2, &[&[2, 0], &[1, 1], &[0, 3]]);
        let ed2 = build_system(&i, EdMode::Ed2).unwrap();
        assert!(ed2.system.is_homogeneous());
        assert!(ed2.column_checks_hold());
    }

    #[test]
    fn pure_powers_are_refused() {
        let i = MonomialIdeal::from_exponents(2, &[&[3, 0], &[0, 2]]);
        assert!(matches!(build_system(&i, EdMode::Ed1), Err(Error::PurePower)));
    }

    #[test]
    fn membership_by_search() {
        let i = MonomialIdeal::from_exponents(2, &[&[2, 0], &[1, 1]]);
        let sys = power_membership_system(&i).unwrap();
        let fixed = |b: [i64; 2]| vec![Some(2), Some(b[0]), Some(b[1]), None];
        assert!(solve_feasible(&sys, &fixed([3, 1]), 2, DEFAULT_BUDGET).unwrap().is_some());
        assert!(solve_feasible(&sys, &fixed([2, 1]), 2, DEFAULT_BUDGET).unwrap().is_none());
        let unit = vec![Some(0), Some(0), Some(0), None];
        assert!(solve_feasible(&sys, &unit, 0, DEFAULT_BUDGET).unwrap().is_some());
    }

    #[test]
    fn ed1_matches_ideal_arithmetic() {
        let i = e11_ideal(5);
        let ed1 = build_system(&i, EdMode::Ed1).unwrap();
        // E11, n = 1: J ∩ I^0 = J, and x^2 y^3 is a witness of the maximal ideal
        let n = 1;
        let j = (0..3)
            .map(|k| i.delete_variable(k + 1).unwrap().power(n))
            .reduce(|a, b| a.intersect(&b).unwrap())
            .unwrap();
        for b in [[2u64, 3, 0], [3, 3, 0], [1, 1, 0], [0, 5, 0]] {
            let expected = j.contains(&Monomial::new(b.to_vec())).unwrap();
            let fixed = ed1.fix_z_y(n, &b).unwrap();
            let got = solve_feasible(&ed1.system, &fixed, n, DEFAULT_BUDGET).unwrap();
            assert_eq!(got.is_some(), expected, "b = {b:?}");
        }
    }
}
