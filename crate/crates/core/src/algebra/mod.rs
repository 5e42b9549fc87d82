//! Exact arithmetic over the Gaussian rationals: scalars, polynomials,
//! rational functions and their local expansions.

mod gaussian;
pub(crate) mod gaussint;
mod partial;
mod poly;
mod rational;
mod roots;

pub use gaussian::GaussianRational;
pub use partial::{
    laurent_residue, order_at, partial_fractions, series_quotient, taylor_at, PartialFractionExpansion, PoleTerm,
};
pub use poly::{Degree, Polynomial};
pub use rational::RationalFunction;
pub use roots::{from_roots, linear_roots, root_multiplicity};
