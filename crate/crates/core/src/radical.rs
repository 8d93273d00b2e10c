//! Exact nonnegative reals of the form `q·√N` and small sums of them.
//!
//! Comparisons and integer rounding are decided by squaring, never by floating
//! point, so values far beyond `f64` range (the stabilization bounds reach
//! hundreds of digits) are handled exactly.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// `coeff · √radicand` with `coeff >= 0` and `radicand >= 1`.
///
/// Small square factors of the radicand are pulled into the coefficient, and a
/// perfect-square radicand collapses to 1, but full square-freeness is not
/// required: equality and ordering go through `coeff² · radicand`.
#[derive(Clone, Debug)]
pub struct ExactRadical {
    coeff: BigRational,
    radicand: BigUint,
}

const TRIAL_PRIMES: [u32; 25] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
];

fn floor_rational(q: &BigRational) -> BigInt {
    q.floor().to_integer()
}

fn ceil_rational(q: &BigRational) -> BigInt {
    q.ceil().to_integer()
}

impl ExactRadical {
    pub fn new(coeff: BigRational, radicand: BigUint) -> Self {
        assert!(!coeff.is_negative(), "ExactRadical coefficient must be nonnegative");
        assert!(!radicand.is_zero(), "use a zero coefficient for the value 0");
        let mut v = ExactRadical { coeff, radicand };
        v.normalize();
        v
    }

    pub fn zero() -> Self {
        ExactRadical { coeff: BigRational::zero(), radicand: BigUint::one() }
    }

    pub fn from_integer(n: impl Into<BigUint>) -> Self {
        ExactRadical { coeff: BigRational::from_integer(BigInt::from(n.into())), radicand: BigUint::one() }
    }

    pub fn from_rational(q: BigRational) -> Self {
        Self::new(q, BigUint::one())
    }

    /// `√n`.
    pub fn sqrt_of(n: impl Into<BigUint>) -> Self {
        let n = n.into();
        if n.is_zero() {
            return Self::zero();
        }
        Self::new(BigRational::one(), n)
    }

    /// `q · (√2)^{e2} · (√r)^{er} · (√s)^{es}`.
    pub fn from_powers(q: BigRational, e2: u32, r: u64, er: u32, s: u64, es: u32) -> Self {
        let mut coeff = q;
        let mut radicand = BigUint::one();
        for (base, e) in [(2u64, e2), (r, er), (s, es)] {
            let base = BigUint::from(base);
            coeff *= BigRational::from_integer(BigInt::from(base.pow(e / 2)));
            if e % 2 == 1 {
                radicand *= base;
            }
        }
        Self::new(coeff, radicand)
    }

    fn normalize(&mut self) {
        if self.coeff.is_zero() {
            self.radicand = BigUint::one();
            return;
        }
        let root = self.radicand.sqrt();
        if &root * &root == self.radicand {
            self.coeff *= BigRational::from_integer(BigInt::from(root));
            self.radicand = BigUint::one();
            return;
        }
        for &p in &TRIAL_PRIMES {
            let sq = BigUint::from(p * p);
            while (&self.radicand % &sq).is_zero() {
                self.radicand /= &sq;
                self.coeff *= BigRational::from_integer(BigInt::from(p));
            }
        }
    }

    pub fn coeff(&self) -> &BigRational {
        &self.coeff
    }

    pub fn radicand(&self) -> &BigUint {
        &self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    /// `value²` as an exact rational.
    pub fn square(&self) -> BigRational {
        &self.coeff * &self.coeff * BigRational::from_integer(BigInt::from(self.radicand.clone()))
    }

    pub fn mul(&self, other: &ExactRadical) -> ExactRadical {
        Self::new(&self.coeff * &other.coeff, &self.radicand * &other.radicand)
    }

    pub fn scale(&self, q: &BigRational) -> ExactRadical {
        assert!(!q.is_negative(), "scaling factor must be nonnegative");
        Self::new(&self.coeff * q, self.radicand.clone())
    }

    pub fn scale_int(&self, n: impl Into<BigInt>) -> ExactRadical {
        self.scale(&BigRational::from_integer(n.into()))
    }

    pub fn pow(&self, e: u32) -> ExactRadical {
        let mut acc = ExactRadical::from_integer(1u32);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// `⌊value⌋`.
    pub fn floor(&self) -> BigInt {
        if self.radicand.is_one() {
            return floor_rational(&self.coeff);
        }
        // value = √M / den with M = num² · radicand, which is not a perfect square.
        let num = self.coeff.numer().abs().to_biguint().expect("nonnegative");
        let den = self.coeff.denom().to_biguint().expect("positive");
        let big_m = &num * &num * &self.radicand;
        let c = big_m.sqrt();
        if &c * &c == big_m {
            return BigInt::from(c / den);
        }
        // √M lies strictly between c and c + 1, so k·den <= √M iff k·den <= c.
        BigInt::from(c / den)
    }

    /// `⌈value⌉`.
    pub fn ceil(&self) -> BigInt {
        if self.radicand.is_one() {
            return ceil_rational(&self.coeff);
        }
        let num = self.coeff.numer().abs().to_biguint().expect("nonnegative");
        let den = self.coeff.denom().to_biguint().expect("positive");
        let big_m = &num * &num * &self.radicand;
        let c = big_m.sqrt();
        if &c * &c == big_m {
            return BigInt::from(Integer::div_ceil(&c, &den));
        }
        // smallest k with k·den > √M is the smallest with k·den >= c + 1
        BigInt::from(Integer::div_ceil(&(c + 1u32), &den))
    }

    pub fn is_integer(&self) -> bool {
        self.radicand.is_one() && self.coeff.is_integer()
    }

    /// Exact comparison with an integer.
    pub fn cmp_integer(&self, k: &BigInt) -> Ordering {
        if k.is_negative() {
            return Ordering::Greater;
        }
        let kq = BigRational::from_integer(k.clone());
        self.square().cmp(&(&kq * &kq))
    }

    pub fn to_f64(&self) -> f64 {
        let c = self.coeff.numer().to_f64().unwrap_or(f64::INFINITY)
            / self.coeff.denom().to_f64().unwrap_or(f64::INFINITY);
        c * self.radicand.to_f64().unwrap_or(f64::INFINITY).sqrt()
    }

    /// Number of decimal digits of `⌈value⌉`.
    pub fn ceil_digits(&self) -> usize {
        decimal_digits(&self.ceil())
    }
}

pub fn decimal_digits(n: &BigInt) -> usize {
    if n.is_zero() {
        1
    } else {
        n.abs().to_str_radix(10).len()
    }
}

impl PartialEq for ExactRadical {
    fn eq(&self, other: &Self) -> bool {
        self.square() == other.square()
    }
}

impl Eq for ExactRadical {}

impl PartialOrd for ExactRadical {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExactRadical {
    fn cmp(&self, other: &Self) -> Ordering {
        // both sides are nonnegative, so squaring is monotone
        self.square().cmp(&other.square())
    }
}

impl fmt::Display for ExactRadical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.radicand.is_one() {
            write!(f, "{}", self.coeff)
        } else if self.coeff.is_one() {
            write!(f, "sqrt({})", self.radicand)
        } else {
            write!(f, "{}*sqrt({})", self.coeff, self.radicand)
        }
    }
}

/// Sign of `p·√P + q·√Q + c` with `p, q >= 0`.
fn sign_of_two_surds_plus(p: &ExactRadical, q: &ExactRadical, c: &BigRational) -> Ordering {
    let u_positive = !p.is_zero() || !q.is_zero();
    if !c.is_negative() {
        return if u_positive || c.is_positive() { Ordering::Greater } else { Ordering::Equal };
    }
    // u + c with u >= 0 > c: compare u² = p²P + q²Q + 2pq√(PQ) with c².
    let cross = p.mul(q).scale_int(2);
    let rest = p.square() + q.square() - c * c;
    sign_of_surd_plus(&cross, &rest)
}

/// Sign of `w + k` with `w >= 0` a radical and `k` rational.
fn sign_of_surd_plus(w: &ExactRadical, k: &BigRational) -> Ordering {
    if !k.is_negative() {
        return if !w.is_zero() || k.is_positive() { Ordering::Greater } else { Ordering::Equal };
    }
    w.square().cmp(&(k * k))
}

/// `a + b + shift` with `a, b` nonnegative radicals and a signed rational shift.
///
/// Covers `(e + ‖b‖)·∏‖a_j‖` (two radicals) and `X - 1` for a radical `X`.
#[derive(Clone, Debug)]
pub struct SurdSum {
    pub a: ExactRadical,
    pub b: ExactRadical,
    pub shift: BigRational,
}

impl SurdSum {
    pub fn new(a: ExactRadical, b: ExactRadical, shift: BigRational) -> Self {
        SurdSum { a, b, shift }
    }

    pub fn single(a: ExactRadical) -> Self {
        SurdSum { a, b: ExactRadical::zero(), shift: BigRational::zero() }
    }

    /// Exact comparison with a rational.
    pub fn cmp_rational(&self, k: &BigRational) -> Ordering {
        sign_of_two_surds_plus(&self.a, &self.b, &(&self.shift - k))
    }

    pub fn cmp_integer(&self, k: &BigInt) -> Ordering {
        self.cmp_rational(&BigRational::from_integer(k.clone()))
    }

    /// `⌈value⌉`.
    pub fn ceil(&self) -> BigInt {
        // the true value lies in [estimate, estimate + 3)
        let mut k = self.a.floor() + self.b.floor() + floor_rational(&self.shift);
        while self.cmp_integer(&k) == Ordering::Greater {
            k += 1;
        }
        k
    }

    /// `⌊value⌋`.
    pub fn floor(&self) -> BigInt {
        let mut k = self.a.floor() + self.b.floor() + floor_rational(&self.shift);
        while self.cmp_integer(&(&k + 1)) != Ordering::Less {
            k += 1;
        }
        k
    }

    pub fn to_f64(&self) -> f64 {
        self.a.to_f64() + self.b.to_f64() + self.shift.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for SurdSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.a)?;
        if !self.b.is_zero() {
            write!(f, " + {}", self.b)?;
        }
        if self.shift.is_positive() {
            write!(f, " + {}", self.shift)?;
        } else if self.shift.is_negative() {
            write!(f, " - {}", -&self.shift)?;
        }
        Ok(())
    }
}
