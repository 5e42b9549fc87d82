//! Independent verification paths: orbit-span linear algebra, a second
//! decomposition route and seeded instance generators.

mod frame;
pub mod linalg;
mod orbit;
pub mod sample;
mod undetermined;
mod verify;

pub use frame::{CoordinateFrame, Label};
pub use orbit::{orbit_span, OrbitSpan};
pub use undetermined::decompose_by_coefficients;
pub use verify::{verify_descriptor, Check, VerificationReport};
