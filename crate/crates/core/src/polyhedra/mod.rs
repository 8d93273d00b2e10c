//! Rational polyhedral cones given by integer constraints: extreme rays, Hilbert
//! bases and module generators inside certified boxes, and the constraint
//! systems that encode powers of a monomial ideal.

mod ed;
mod lattice;
mod rays;
mod system;

pub use ed::{
    build_system, designated_generator, power_membership_system, solve_feasible, ColumnCheck,
    EdMode, EdSystem,
};
pub use lattice::{
    bound_a1, bound_a2, greedy_decomposition, hilbert_generators, hilbert_generators_in_box,
    module_generators, module_generators_in_box, solutions_in_box, ConeGenerators,
};
pub use rays::{determinant, extreme_rays, hadamard_holds};
pub use system::{ConstraintSystem, IntVector, DEFAULT_BUDGET};
