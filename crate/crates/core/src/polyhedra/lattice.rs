//! Certified `*`-norm bounds for cone generators and box-limited enumeration of
//! Hilbert bases and module generators.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use super::system::{box_size, check_budget, ConstraintSystem, IntVector};
use crate::error::{Error, Result};
use crate::monomial::for_each_in_box;
use crate::radical::{ExactRadical, SurdSum};

/// Squared column norms, with an all-zero column counted as norm 1.
fn column_norms_sq(sys: &ConstraintSystem) -> Vec<BigUint> {
    (0..sys.e)
        .map(|j| {
            let n = sys.column_norm_sq(j);
            if n.is_zero() {
                BigUint::one()
            } else {
                n
            }
        })
        .collect()
}

/// `e · ‖a_1‖ ⋯ ‖a_{e-1}‖` over the `e - 1` largest column norms.
///
/// Every element of a Hilbert basis of `{x >= 0 : A x >= 0}` satisfies
/// `‖v‖* <= bound_a1`. The inequality is not strict in general: for `e = 1` the
/// basis `{1}` meets the bound 1.
pub fn bound_a1(sys: &ConstraintSystem) -> ExactRadical {
    let e = sys.e;
    if e == 0 {
        return ExactRadical::zero();
    }
    let mut norms = column_norms_sq(sys);
    norms.sort_unstable_by(|a, b| b.cmp(a));
    let product: BigUint = norms.iter().take(e - 1).product();
    ExactRadical::sqrt_of(product).scale_int(e)
}

/// `(e + ‖b‖) · ‖a_1‖ ⋯ ‖a_e‖`, a bound on the `*`-norm of module generators of
/// the solutions of `A x >= b` over the homogeneous semigroup.
pub fn bound_a2(sys: &ConstraintSystem) -> SurdSum {
    let product: BigUint = column_norms_sq(sys).iter().product();
    let a = ExactRadical::sqrt_of(product.clone()).scale_int(sys.e);
    let b = ExactRadical::sqrt_of(product * sys.rhs_norm_sq());
    SurdSum::new(a, b, BigRational::zero())
}

fn box_from_bound(ceiling: BigInt, cap: u64) -> u64 {
    ceiling.to_u64().map_or(cap, |c| c.min(cap))
}

/// All solutions of `sys` in `[0, cap]^e`, sorted by coordinate sum then lexicographically.
pub fn solutions_in_box(sys: &ConstraintSystem, cap: u64, budget: u64) -> Result<Vec<IntVector>> {
    check_budget(box_size(cap, sys.e), budget)?;
    if i64::try_from(cap).is_err() {
        return Err(Error::InvalidInput("box cap too large".into()));
    }
    let mut out = Vec::new();
    let caps = vec![cap; sys.e];
    let mut buf = vec![0i64; sys.e];
    for_each_in_box(&caps, |p| {
        for (b, &x) in buf.iter_mut().zip(p) {
            *b = x as i64;
        }
        if sys.satisfies(&buf) {
            out.push(IntVector(buf.clone()));
        }
    });
    out.sort_by(|a, b| a.sum().cmp(&b.sum()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// Irreducible nonzero solutions of the homogeneous system in `[0, cap]^e`.
///
/// Candidates are visited by increasing coordinate sum; `v` is reducible exactly
/// when some already kept `h <= v` has `v - h` in the cone, since any splitting
/// `v = u + w` refines to one that starts with an irreducible summand of `u`.
pub fn hilbert_generators_in_box(
    sys: &ConstraintSystem,
    cap: u64,
    budget: u64,
) -> Result<Vec<IntVector>> {
    let hom = sys.homogenized();
    let mut kept: Vec<IntVector> = Vec::new();
    for v in solutions_in_box(&hom, cap, budget)? {
        if v.is_zero() {
            continue;
        }
        let reducible = kept
            .iter()
            .any(|h| h.componentwise_le(&v) && hom.satisfies_homogeneous(v.sub(h).entries()));
        if !reducible {
            kept.push(v);
        }
    }
    Ok(kept)
}

/// Hilbert basis of the cone, enumerated in the box `[0, min(cap, ⌈bound_a1⌉)]^e`.
///
/// With `cap >= ⌈bound_a1⌉` the result is the full Hilbert basis.
pub fn hilbert_generators(sys: &ConstraintSystem, cap: u64, budget: u64) -> Result<Vec<IntVector>> {
    if !sys.is_homogeneous() {
        return Err(Error::InvalidInput("Hilbert basis needs a homogeneous system".into()));
    }
    if cap == 0 {
        return Err(Error::InvalidInput("cap must be at least 1".into()));
    }
    let side = box_from_bound(bound_a1(sys).ceil(), cap);
    hilbert_generators_in_box(sys, side, budget)
}

/// Solutions of `A x >= b` in `[0, cap]^e` that are not a solution plus a
/// nonzero element of the homogeneous cone.
pub fn module_generators_in_box(
    sys: &ConstraintSystem,
    cap: u64,
    budget: u64,
) -> Result<Vec<IntVector>> {
    let hilbert = hilbert_generators_in_box(sys, cap, budget)?;
    let mut out = Vec::new();
    for v in solutions_in_box(sys, cap, budget)? {
        let reducible = hilbert
            .iter()
            .any(|h| h.componentwise_le(&v) && sys.satisfies(v.sub(h).entries()));
        if !reducible {
            out.push(v);
        }
    }
    Ok(out)
}

/// Module generators in the box `[0, min(cap, ⌈bound_a2⌉)]^e`. For `b = 0` this
/// is `{0}`.
pub fn module_generators(sys: &ConstraintSystem, cap: u64, budget: u64) -> Result<Vec<IntVector>> {
    if cap == 0 {
        return Err(Error::InvalidInput("cap must be at least 1".into()));
    }
    let side = box_from_bound(bound_a2(sys).ceil(), cap);
    module_generators_in_box(sys, side, budget)
}

/// Greedy split of a cone point into Hilbert generators: repeatedly subtract the
/// first generator that leaves a point of the cone. Returns multiplicities, or
/// `None` if the generators do not reach `v`.
pub fn greedy_decomposition(
    sys: &ConstraintSystem,
    generators: &[IntVector],
    v: &IntVector,
) -> Option<Vec<u64>> {
    let hom = sys.homogenized();
    let mut counts = vec![0u64; generators.len()];
    let mut rest = v.clone();
    while !rest.is_zero() {
        let (k, h) = generators
            .iter()
            .enumerate()
            .find(|(_, h)| !h.is_zero() && h.componentwise_le(&rest) && hom.satisfies_homogeneous(rest.sub(h).entries()))?;
        counts[k] += 1;
        rest = rest.sub(h);
    }
    Some(counts)
}

/// Everything known about one cone, as reported by the command line.
#[derive(Clone, Debug, Serialize)]
pub struct ConeGenerators {
    pub rays: Vec<IntVector>,
    pub hilbert: Option<Vec<IntVector>>,
    pub module_gens: Option<Vec<IntVector>>,
    pub bound_star: String,
    pub bound_star_ceiling: String,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyhedra::DEFAULT_BUDGET;

    fn v(x: &[i64]) -> IntVector {
        IntVector(x.to_vec())
    }

    #[test]
    fn a1_examples() {
        let stair = ConstraintSystem::staircase(2, 2);
        assert_eq!(bound_a1(&stair), ExactRadical::from_integer(4u32));
        let orthant = ConstraintSystem::new(3, vec![], vec![]).unwrap();
        assert_eq!(bound_a1(&orthant), ExactRadical::from_integer(3u32));
        let single = ConstraintSystem::new(1, vec![vec![1]], vec![0]).unwrap();
        assert_eq!(bound_a1(&single), ExactRadical::from_integer(1u32));
    }

    #[test]
    fn a2_examples() {
        let one = ConstraintSystem::new(1, vec![vec![1]], vec![1]).unwrap();
        assert_eq!(bound_a2(&one).ceil(), BigInt::from(2));
        let stair = ConstraintSystem::staircase_with_rhs(2, 2, 1);
        assert_eq!(bound_a2(&stair).ceil(), BigInt::from(6));
        // b = 0: e · ∏ over all columns, at least bound_a1
        let hom = ConstraintSystem::staircase(3, 2);
        let a2 = bound_a2(&hom);
        assert!(a2.b.is_zero());
        assert!(a2.a >= bound_a1(&hom));
    }

    #[test]
    fn hilbert_examples() {
        let orthant = ConstraintSystem::new(2, vec![], vec![]).unwrap();
        assert_eq!(
            hilbert_generators(&orthant, 10, DEFAULT_BUDGET).unwrap(),
            vec![v(&[0, 1]), v(&[1, 0])]
        );
        let mut h = hilbert_generators(&ConstraintSystem::staircase(2, 2), 10, DEFAULT_BUDGET).unwrap();
        h.sort();
        assert_eq!(h, vec![v(&[1, 0]), v(&[1, 1]), v(&[1, 2])]);
        let h3 = hilbert_generators(&ConstraintSystem::staircase(3, 2), 8, DEFAULT_BUDGET).unwrap();
        assert!(h3.contains(&v(&[1, 2, 4])));
    }

    #[test]
    fn module_examples() {
        let one = ConstraintSystem::new(1, vec![vec![1]], vec![1]).unwrap();
        assert_eq!(module_generators(&one, 10, DEFAULT_BUDGET).unwrap(), vec![v(&[1])]);
        let stair = ConstraintSystem::staircase_with_rhs(2, 2, 1);
        assert_eq!(
            module_generators(&stair, 10, DEFAULT_BUDGET).unwrap(),
            vec![v(&[1, 0]), v(&[1, 1])]
        );
        let hom = ConstraintSystem::staircase(2, 3);
        assert_eq!(module_generators(&hom, 10, DEFAULT_BUDGET).unwrap(), vec![v(&[0, 0])]);
    }

    #[test]
    fn budget_refusal() {
        let orthant = ConstraintSystem::new(6, vec![], vec![]).unwrap();
        let err = hilbert_generators_in_box(&orthant, 100, 1000).unwrap_err();
        assert!(matches!(err, Error::Budget { .. }));
    }

    #[test]
    fn greedy_reaches_box_points() {
        let sys = ConstraintSystem::staircase(2, 2);
        let gens = hilbert_generators(&sys, 10, DEFAULT_BUDGET).unwrap();
        let counts = greedy_decomposition(&sys, &gens, &v(&[3, 5])).unwrap();
        let total = gens
            .iter()
            .zip(&counts)
            .fold(IntVector::zeros(2), |acc, (g, &c)| {
                (0..c).fold(acc, |a, _| a.add(g))
            });
        assert_eq!(total, v(&[3, 5]));
    }
}
