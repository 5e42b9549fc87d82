//! Exact symbolic calculus for the generalized backward shift
//! `D0,g0 f = (f(t) − g0(t)·f(0))/t` over ℚ(i).

// Errors carry exact scalars as witnesses; their size is not a concern here.
#![allow(clippy::result_large_err)]

pub mod algebra;
pub mod classify;
pub mod domain;
pub mod duality;
pub mod error;
pub mod jet;
pub mod operator;
pub mod oracle;

pub use error::{Error, Result};
