//! Exact computations around the stabilization of `Ass(I^n/I^{n+1})` for
//! monomial ideals: ideal arithmetic, associated primes, Ratliff-Rush closures,
//! lattice points of rational cones and the explicit stabilization bounds.

pub mod ass;
pub mod bounds;
pub mod cohomology;
pub mod error;
pub mod ideal;
pub mod io;
pub mod monomial;
pub mod polyhedra;
pub mod radical;

pub use ass::{
    ass_of_quotient, ass_of_quotient_with_witnesses, ass_power, ass_profile, ass_profile_with,
    max_ideal_in_ass, AssMethod, AssProfile, PrimeSet, VariablePrime,
};
pub use error::{Error, Result};
pub use ideal::{e11_ideal, MonomialIdeal};
pub use monomial::Monomial;
pub use cohomology::{
    a0_observed, definitional_union, h0_m_monomials, ratliff_rush, scaled_generator_union,
    A0Report, H0Report, RRResult,
};
pub use bounds::{bound_report, compare_with_observed, BoundReport, StabilityComparison};
pub use radical::{ExactRadical, SurdSum};
pub use polyhedra::{
    bound_a1, bound_a2, build_system, extreme_rays, hilbert_generators, module_generators,
    power_membership_system, solve_feasible, ConstraintSystem, EdMode, EdSystem, IntVector,
};
