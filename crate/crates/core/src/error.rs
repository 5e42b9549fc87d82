use thiserror::Error;

use crate::algebra::{GaussianRational, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero function")]
    DivisionByZero,

    #[error("polynomial {residual} has no root in Q(i)")]
    Irreducible { residual: Polynomial },

    #[error("operation is undefined for the zero function")]
    ZeroFunction,

    #[error("pole at the origin")]
    PoleAtOrigin,

    #[error("pole {pole} of order {order} lies inside the domain and is not cancelled by zeros of g0")]
    PoleInOmega { pole: GaussianRational, order: usize },

    #[error("invalid context: {0}")]
    InvalidContext(String),

    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(String),

    #[error("jet order exhausted")]
    JetOrderExhausted,

    #[error("jet has zero constant term")]
    JetNotInvertible,

    #[error("no concrete unit configured; jets need `exp:c:N` or `geom:c:N`")]
    NoConcreteUnit,

    #[error("point {0} must be nonzero")]
    ZeroPoint(GaussianRational),

    #[error("poles must be pairwise distinct, {0} repeats")]
    RepeatedPole(GaussianRational),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("{point} is not a pole of order at least {order}")]
    NotAPole { point: GaussianRational, order: usize },

    #[error("function is not a g0-multiple")]
    NotGMultiple,

    #[error("spec is infeasible at {point}: {reason}")]
    Infeasible { point: GaussianRational, reason: String },

    #[error("coordinate frame overflow: {0}")]
    FrameOverflow(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
