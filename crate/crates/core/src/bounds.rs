//! The explicit stabilization bounds `B1, B2, B3, B4` and `B = max{B1, B2}` in
//! terms of the number of variables `r`, the number of generators `s` and the
//! maximal generator degree `d`.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Pow};
use serde::Serialize;

use crate::ass::AssProfile;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::radical::{decimal_digits, ExactRadical, SurdSum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundSource {
    B1,
    B2,
}

/// All bounds for one `(r, s, d)`.
#[derive(Clone, Debug)]
pub struct BoundReport {
    pub r: u64,
    pub s: u64,
    pub d: u64,
    /// `d(rs+s+d)(√r)^{r+1}(√2 d)^{(r+1)(s-1)}`.
    pub b1: ExactRadical,
    /// `s(s+r)^4 s^{r+2} d^2 (2d^2)^{s^2-s+1}`, always an integer.
    pub b2: BigUint,
    /// `(s+r)^2 d (√2 d)^{s^2-s+1} √s^{r+2}`, the bracket inside `B3`.
    pub b3_bracket: ExactRadical,
    /// `B3 = bracket - 1`, reading the square brackets as grouping.
    pub b3: SurdSum,
    /// `⌊bracket⌋ - 1`, reading the square brackets as the integer part.
    pub b3_floor_reading: BigInt,
    /// `⌈s · B3⌉`.
    pub b4: BigInt,
    /// `s · (⌊bracket⌋ - 1)`.
    pub b4_floor_reading: BigInt,
    /// Which of `B1`, `B2` realizes the maximum.
    pub b_source: BoundSource,
    /// `⌈max{B1, B2}⌉`, the usable integer threshold.
    pub b_ceiling: BigInt,
}

fn int(n: u64) -> BigInt {
    BigInt::from(n)
}

pub fn bound_report(r: u64, s: u64, d: u64) -> Result<BoundReport> {
    if r == 0 || s == 0 || d == 0 {
        return Err(Error::InvalidInput("r, s and d must all be positive".into()));
    }
    let exp = |v: u64| -> Result<u32> {
        u32::try_from(v).map_err(|_| Error::InvalidInput(format!("exponent {v} too large")))
    };

    let e_b1 = exp((r + 1) * (s - 1))?;
    let q1: BigInt = int(d) * int(r * s + s + d) * Pow::pow(int(d), e_b1);
    let b1 = ExactRadical::from_powers(BigRational::from_integer(q1), e_b1, r, exp(r + 1)?, s, 0);

    let e_sq = exp(s * s - s + 1)?;
    let sr = BigUint::from(s + r);
    let b2: BigUint = BigUint::from(s)
        * Pow::pow(&sr, 4u32)
        * Pow::pow(BigUint::from(s), exp(r + 2)?)
        * BigUint::from(d * d)
        * Pow::pow(BigUint::from(2 * d * d), e_sq);

    let q3: BigInt = int(s + r) * int(s + r) * int(d) * Pow::pow(int(d), e_sq);
    let b3_bracket =
        ExactRadical::from_powers(BigRational::from_integer(q3), e_sq, r, 0, s, exp(r + 2)?);
    let b3 = SurdSum::new(b3_bracket.clone(), ExactRadical::zero(), -BigRational::one());
    // s·B3 = s·bracket - s
    let s_b3 = SurdSum::new(b3_bracket.scale_int(int(s)), ExactRadical::zero(), -BigRational::from_integer(int(s)));
    let b4 = s_b3.ceil();
    let b3_floor_reading = b3_bracket.floor() - 1;
    let b4_floor_reading = int(s) * &b3_floor_reading;

    let b2_int = BigInt::from(b2.clone());
    let (b_source, b_ceiling) = match b1.cmp_integer(&b2_int) {
        Ordering::Greater => (BoundSource::B1, b1.ceil()),
        _ => (BoundSource::B2, b2_int),
    };

    Ok(BoundReport {
        r,
        s,
        d,
        b1,
        b2,
        b3_bracket,
        b3,
        b3_floor_reading,
        b4,
        b4_floor_reading,
        b_source,
        b_ceiling,
    })
}

impl BoundReport {
    pub fn b1_ceiling(&self) -> BigInt {
        self.b1.ceil()
    }

    /// `B4 (B3 + 1) < B2` under the grouping reading, decided exactly.
    pub fn b4_b3_below_b2(&self) -> bool {
        // B3 + 1 is the bracket itself
        let lhs = self.b3_bracket.scale_int(self.b4.clone());
        lhs.cmp_integer(&BigInt::from(self.b2.clone())) == Ordering::Less
    }

    /// Same inequality under the integer-part reading of `B3`.
    pub fn b4_b3_below_b2_floor_reading(&self) -> bool {
        &self.b4_floor_reading * (&self.b3_floor_reading + 1) < BigInt::from(self.b2.clone())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "r": self.r,
            "s": self.s,
            "d": self.d,
            "B1": {
                "exact": self.b1.to_string(),
                "ceiling": self.b1.ceil().to_string(),
                "digits": self.b1.ceil_digits(),
            },
            "B2": {
                "exact": self.b2.to_string(),
                "digits": decimal_digits(&BigInt::from(self.b2.clone())),
            },
            "B3": {
                "exact": self.b3.to_string(),
                "ceiling": self.b3.ceil().to_string(),
                "floor_reading": self.b3_floor_reading.to_string(),
            },
            "B4": {
                "ceiling": self.b4.to_string(),
                "floor_reading": self.b4_floor_reading.to_string(),
            },
            "B": {
                "source": self.b_source,
                "ceiling": self.b_ceiling.to_string(),
                "digits": decimal_digits(&self.b_ceiling),
            },
            "B4_times_B3_plus_1_below_B2": self.b4_b3_below_b2(),
        })
    }

    /// `name<TAB>exact<TAB>ceiling<TAB>digits` rows.
    pub fn to_tsv(&self) -> String {
        let b2 = BigInt::from(self.b2.clone());
        let rows = [
            ("B1", self.b1.to_string(), self.b1.ceil()),
            ("B2", self.b2.to_string(), b2.clone()),
            ("B3", self.b3.to_string(), self.b3.ceil()),
            ("B3_floor_reading", self.b3_floor_reading.to_string(), self.b3_floor_reading.clone()),
            ("B4", "ceil(s*B3)".to_string(), self.b4.clone()),
            ("B", format!("max(B1,B2) = {:?}", self.b_source), self.b_ceiling.clone()),
        ];
        let mut out = String::from("name\texact\tceiling\tdigits\n");
        for (name, exact, ceil) in rows {
            out.push_str(&format!("{name}\t{exact}\t{ceil}\t{}\n", decimal_digits(&ceil)));
        }
        out
    }
}

/// Observed stabilization next to the bound `B` for the ideal's `(r, s, d)`.
#[derive(Clone, Debug, Serialize)]
pub struct StabilityComparison {
    pub r: u64,
    pub s: u64,
    pub d: u64,
    pub observed_stable_at: Option<u64>,
    pub n_max: u64,
    pub b_ceiling: String,
    /// `B - observed_stable_at` when stabilization was observed.
    pub slack: Option<String>,
    pub note: String,
}

pub fn compare_with_observed(i: &MonomialIdeal, profile: &AssProfile) -> Result<StabilityComparison> {
    if profile.ideal != *i {
        return Err(Error::InvalidInput("profile was computed for a different ideal".into()));
    }
    if !i.is_proper_nonzero() {
        return Err(Error::InvalidInput("the ideal must be proper and nonzero".into()));
    }
    let (r, s, d) = (i.r() as u64, i.len() as u64, i.max_degree());
    let report = bound_report(r, s, d)?;
    let b = report.b_ceiling.clone();
    let n_max = profile.n_max();
    if BigInt::from(n_max) > b {
        let start = b.to_string().parse::<usize>().expect("B fits below n_max");
        let tail = &profile.entries[start..];
        if tail.iter().any(|e| *e != tail[0]) {
            return Err(Error::Inconsistent(format!(
                "Ass(I^n/I^(n+1)) changes after n = B = {b}"
            )));
        }
    }
    let slack = profile.observed_stable_at.map(|n0| (&b - BigInt::from(n0)).to_string());
    let note = match profile.observed_stable_at {
        Some(n0) if BigInt::from(n0) <= b => format!(
            "observed stabilization at n = {n0} (quotient Ass(I^{n0}/I^{})) is within B",
            n0 + 1
        ),
        Some(n0) => format!("observed plateau from n = {n0} starts after B; the scan ends at n = {n_max}"),
        None => format!("no stabilization observed up to n = {n_max}"),
    };
    Ok(StabilityComparison {
        r,
        s,
        d,
        observed_stable_at: profile.observed_stable_at,
        n_max,
        b_ceiling: b.to_string(),
        slack,
        note,
    })
}
