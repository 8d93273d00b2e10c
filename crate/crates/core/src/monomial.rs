use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// A monomial `t_1^{b_1} ... t_r^{b_r}`, stored as its exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(Vec<u64>);

impl Monomial {
    pub fn new(exponents: Vec<u64>) -> Self {
        Monomial(exponents)
    }

    pub fn one(r: usize) -> Self {
        Monomial(vec![0; r])
    }

    /// The variable `t_index` (0-based).
    pub fn variable(r: usize, index: usize) -> Self {
        let mut e = vec![0; r];
        e[index] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Indices (0-based) of variables occurring with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    /// Componentwise divisibility `self | other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        )
    }

    pub fn pow(&self, n: u64) -> Monomial {
        Monomial(
            self.0
                .iter()
                .map(|a| a.checked_mul(n).expect("exponent overflow"))
                .collect(),
        )
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// `lcm(self, by) / by`: the generator of `(self) : by`.
    pub fn quotient_of_lcm(&self, by: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&by.0).map(|(a, b)| a.saturating_sub(*b)).collect())
    }

    /// Copy with exponent `index` (0-based) set to zero.
    pub fn with_zeroed(&self, index: usize) -> Monomial {
        let mut e = self.0.clone();
        e[index] = 0;
        Monomial(e)
    }

    /// Multiply by the variable `t_index` (0-based).
    pub fn times_variable(&self, index: usize) -> Monomial {
        let mut e = self.0.clone();
        e[index] += 1;
        Monomial(e)
    }

    /// Canonical generator order: lexicographically descending exponent vectors.
    pub fn canonical_cmp(&self, other: &Monomial) -> Ordering {
        other.0.cmp(&self.0)
    }
}

impl From<Vec<u64>> for Monomial {
    fn from(v: Vec<u64>) -> Self {
        Monomial(v)
    }
}

impl fmt::Display for Monomial {
    /// Text form `x1^3 x2`; the unit monomial prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

/// Calls `visit` on every exponent vector in `[0, caps[0]] x ... x [0, caps[r-1]]`.
pub(crate) fn for_each_in_box(caps: &[u64], mut visit: impl FnMut(&[u64])) {
    let r = caps.len();
    let mut cur = vec![0u64; r];
    loop {
        visit(&cur);
        let mut k = 0;
        loop {
            if k == r {
                return;
            }
            if cur[k] < caps[k] {
                cur[k] += 1;
                break;
            }
            cur[k] = 0;
            k += 1;
        }
    }
}
