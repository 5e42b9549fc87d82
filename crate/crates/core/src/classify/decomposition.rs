use std::fmt;

use crate::algebra::{from_roots, partial_fractions, GaussianRational, Polynomial, RationalFunction};
use crate::domain::{normalized_product, GMultiple};
use crate::error::{Error, Result};

/// `f = (g0/p)·r + g0·u/v` with `p(0) = 1`, `p` built from poles inside Ω,
/// `v` monic with roots outside Ω, `deg u < deg v`, `gcd(u, v) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalDecomposition {
    pub p: Polynomial,
    pub r: Polynomial,
    pub u: Polynomial,
    pub v: Polynomial,
}

impl CanonicalDecomposition {
    /// `r/p + u/v`, the rational factor of `f`.
    pub fn recombine(&self) -> RationalFunction {
        let inside = RationalFunction::new(self.r.clone(), self.p.clone()).expect("p(0) = 1");
        let outside = RationalFunction::new(self.u.clone(), self.v.clone()).expect("v is monic");
        inside.add(&outside)
    }
}

impl fmt::Display for CanonicalDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={}, r={}, u={}, v={}", self.p, self.r, self.u, self.v)
    }
}

/// Splits the partial fractions of `R` by pole location.
pub fn canonical_decomposition(f: &GMultiple) -> Result<CanonicalDecomposition> {
    if f.is_zero() {
        return Err(Error::ZeroFunction);
    }
    let omega = f.ctx().omega();
    let pf = partial_fractions(f.r())?;
    let (inside, outside): (Vec<_>, Vec<_>) = pf.pole_orders().into_iter().partition(|(pole, _)| omega.contains(pole));

    let p = normalized_product(&inside);
    let v = from_roots(outside.iter().map(|(pole, k)| (pole, *k)));
    let mut inner = RationalFunction::from_polynomial(pf.poly_part.clone());
    let mut outer = RationalFunction::zero();
    for t in &pf.terms {
        let term = RationalFunction::elementary(&t.pole, t.order as u32).scale(&t.coefficient);
        if omega.contains(&t.pole) {
            inner = inner.add(&term);
        } else {
            outer = outer.add(&term);
        }
    }
    let r = polynomial_after(&inner, &p)?;
    let u = polynomial_after(&outer, &v)?;
    let dec = CanonicalDecomposition { p, r, u, v };
    if &dec.recombine() != f.r() {
        return Err(Error::Internal(format!("decomposition of {} does not recombine", f.r())));
    }
    Ok(dec)
}

fn polynomial_after(f: &RationalFunction, m: &Polynomial) -> Result<Polynomial> {
    let prod = f.mul_poly(m);
    if !prod.is_polynomial() {
        return Err(Error::Internal(format!("{f} has poles beyond {m}")));
    }
    Ok(prod.num().clone())
}

/// The multiplicity variety of the roots of a monic `v` (empty for `v = 1`).
pub(crate) fn root_variety(v: &Polynomial) -> Result<Vec<(GaussianRational, usize)>> {
    if v.is_one() {
        return Ok(Vec::new());
    }
    crate::algebra::linear_roots(v)
}
