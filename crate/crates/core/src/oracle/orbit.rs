use num_traits::Zero;

use crate::algebra::RationalFunction;
use crate::classify::canonical_decomposition;
use crate::domain::GMultiple;
use crate::error::{Error, Result};
use crate::operator::apply;

use super::frame::CoordinateFrame;
use super::linalg::Echelon;

#[derive(Clone, Debug)]
pub struct OrbitSpan {
    /// Rank after each independent iterate.
    pub ranks: Vec<usize>,
    /// The independent iterates `f, Df, …`.
    pub basis: Vec<GMultiple>,
    pub stabilized: bool,
}

impl OrbitSpan {
    pub fn rank(&self) -> usize {
        self.ranks.last().copied().unwrap_or(0)
    }
}

/// Iterates `D` on `f` until the next iterate is dependent on the earlier ones.
///
/// `max_iter` defaults to the frame dimension plus two.
pub fn orbit_span(f: &GMultiple, max_iter: Option<usize>) -> Result<OrbitSpan> {
    let frame = CoordinateFrame::covering([f.r()])?;
    let max_iter = max_iter.unwrap_or(frame.dimension() + 2);
    let mut echelon = Echelon::new(frame.dimension());
    let mut span = OrbitSpan { ranks: Vec::new(), basis: Vec::new(), stabilized: false };
    let mut x = f.clone();
    for _ in 0..max_iter {
        if x.is_zero() || !echelon.insert(&frame.embed(x.r())?) {
            span.stabilized = true;
            break;
        }
        span.ranks.push(echelon.rank());
        span.basis.push(x.clone());
        x = apply(&x);
    }
    if !span.stabilized && (x.is_zero() || echelon.contains(&frame.embed(x.r())?)) {
        span.stabilized = true;
    }
    if !f.is_zero() {
        let dec = canonical_decomposition(f)?;
        let bound = if dec.r.is_zero() { 0 } else { dec.r.degree_or_minus_one() as usize + 1 }
            + dec.p.degree_or_minus_one() as usize
            + dec.v.degree_or_minus_one() as usize;
        if span.rank() > bound {
            return Err(Error::Internal(format!("orbit rank {} exceeds the a-priori bound {bound}", span.rank())));
        }
    }
    Ok(span)
}

/// `(F − g0·F(0))/t` for a concrete rational `g0` with `g0(0) = 1`.
pub(crate) fn shift_with(g0: &RationalFunction, f: &RationalFunction) -> RationalFunction {
    let f0 = f.eval(&Zero::zero()).expect("holomorphic at 0");
    let diff = f.sub(&g0.scale(&f0));
    diff.div(&RationalFunction::from_polynomial(crate::algebra::Polynomial::x())).expect("t is nonzero")
}
