//! Iterated tangent families, the reconstruction of a family from its
//! codegeneracies, and the two routes to the tangent complex: horn kernels
//! and the limit over the fat-point nerve.

mod complex;
mod family;
mod limit;
mod reconstruct;
mod sample;

pub use complex::{tangent_complex, tangent_spaces};
pub use family::{
    check_compatible, coface, compat_from_json, compat_to_json, sigma, CompatFamily, CompatViolation, TanFamily,
};
pub use limit::{hom_limit, solve_degree, DegreeSolution, Formulation, HomLimitReport};
pub use reconstruct::{reconstruct, reconstruct_bruteforce};
pub use sample::{random_compatible_via_sigma, random_rat, random_truncated, NullspaceSampler};
