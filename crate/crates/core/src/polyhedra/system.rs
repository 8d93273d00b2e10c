use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default cap on lattice points visited by a single enumeration.
pub const DEFAULT_BUDGET: u64 = 50_000_000;

/// An integer vector with the Euclidean and max norms used by the cone bounds.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntVector(pub Vec<i64>);

impl IntVector {
    pub fn zeros(e: usize) -> Self {
        IntVector(vec![0; e])
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// `‖v‖²`.
    pub fn norm_sq(&self) -> BigUint {
        self.0
            .iter()
            .map(|&x| BigUint::from(x.unsigned_abs()).pow(2))
            .sum()
    }

    /// `‖v‖* = max |v_i|`.
    pub fn star_norm(&self) -> u64 {
        self.0.iter().map(|x| x.unsigned_abs()).max().unwrap_or(0)
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn componentwise_le(&self, other: &IntVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn sub(&self, other: &IntVector) -> IntVector {
        IntVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn add(&self, other: &IntVector) -> IntVector {
        IntVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// `A x >= b` together with the implicit `x >= 0`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ConstraintSystem {
    pub e: usize,
    pub rows: Vec<Vec<i64>>,
    pub rhs: Vec<i64>,
    pub labels: Vec<String>,
}

impl ConstraintSystem {
    pub fn new(e: usize, rows: Vec<Vec<i64>>, rhs: Vec<i64>) -> Result<Self> {
        let labels = (1..=e).map(|k| format!("x{k}")).collect();
        Self::with_labels(e, rows, rhs, labels)
    }

    pub fn with_labels(
        e: usize,
        rows: Vec<Vec<i64>>,
        rhs: Vec<i64>,
        labels: Vec<String>,
    ) -> Result<Self> {
        if rows.len() != rhs.len() {
            return Err(Error::InvalidInput(format!(
                "{} rows but {} right-hand sides",
                rows.len(),
                rhs.len()
            )));
        }
        if let Some(bad) = rows.iter().find(|row| row.len() != e) {
            return Err(Error::LengthMismatch { expected: e, found: bad.len() });
        }
        if labels.len() != e {
            return Err(Error::InvalidInput(format!("{} labels for {e} variables", labels.len())));
        }
        Ok(ConstraintSystem { e, rows, rhs, labels })
    }

    /// Rows `d x_k - x_{k+1} >= 0`, `k = 1..e-1`.
    pub fn staircase(e: usize, d: i64) -> Self {
        Self::staircase_with_rhs(e, d, 0)
    }

    /// Staircase rows with every right-hand side equal to `b`.
    pub fn staircase_with_rhs(e: usize, d: i64, b: i64) -> Self {
        let rows: Vec<Vec<i64>> = (0..e.saturating_sub(1))
            .map(|k| {
                let mut row = vec![0; e];
                row[k] = d;
                row[k + 1] = -1;
                row
            })
            .collect();
        let rhs = vec![b; rows.len()];
        Self::new(e, rows, rhs).expect("well-formed staircase")
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.rhs.iter().all(|&b| b == 0)
    }

    /// The system with every right-hand side replaced by 0.
    pub fn homogenized(&self) -> Self {
        ConstraintSystem { rhs: vec![0; self.rows.len()], ..self.clone() }
    }

    fn row_value(row: &[i64], v: &[i64]) -> i128 {
        row.iter().zip(v).map(|(&a, &x)| a as i128 * x as i128).sum()
    }

    /// `A v >= b` and `v >= 0`.
    pub fn satisfies(&self, v: &[i64]) -> bool {
        v.len() == self.e
            && v.iter().all(|&x| x >= 0)
            && self
                .rows
                .iter()
                .zip(&self.rhs)
                .all(|(row, &b)| Self::row_value(row, v) >= b as i128)
    }

    /// `A v >= 0` and `v >= 0`.
    pub fn satisfies_homogeneous(&self, v: &[i64]) -> bool {
        v.len() == self.e
            && v.iter().all(|&x| x >= 0)
            && self.rows.iter().all(|row| Self::row_value(row, v) >= 0)
    }

    pub fn column(&self, j: usize) -> IntVector {
        IntVector(self.rows.iter().map(|row| row[j]).collect())
    }

    pub fn column_norm_sq(&self, j: usize) -> BigUint {
        self.column(j).norm_sq()
    }

    pub fn rhs_norm_sq(&self) -> BigUint {
        IntVector(self.rhs.clone()).norm_sq()
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

impl fmt::Display for ConstraintSystem {
    /// Text form: `vars: e`, optional `labels:` line, then `c1 ... ce >= b` rows.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vars: {}", self.e)?;
        writeln!(f, "labels: {}", self.labels.join(" "))?;
        for (row, b) in self.rows.iter().zip(&self.rhs) {
            let coeffs: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "{} >= {b}", coeffs.join(" "))?;
        }
        Ok(())
    }
}

/// `(cap + 1)^dims`, saturating.
pub(crate) fn box_size(cap: u64, dims: usize) -> u128 {
    let side = cap as u128 + 1;
    let mut total: u128 = 1;
    for _ in 0..dims {
        total = total.saturating_mul(side);
    }
    total
}

pub(crate) fn check_budget(needed: u128, budget: u64) -> Result<()> {
    if needed > budget as u128 {
        return Err(Error::Budget { needed, budget });
    }
    Ok(())
}
