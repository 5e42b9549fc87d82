//! Roots in ℚ(i) by exhaustive rational-root candidates over ℤ[i].

use std::collections::HashSet;

use num_traits::Zero;

use super::gaussint::{clear_denominators, divisors_up_to_units, GaussInt};
use super::{GaussianRational, Polynomial};
use crate::error::{Error, Result};

/// Roots of `p` with multiplicities, sorted canonically.
///
/// Every root of a polynomial with coefficients in ℤ[i] has the form
/// `u·d/e` with `d | p(0)`, `e | lc(p)` and `u` a unit; all such candidates
/// are tried against the squarefree part. If the linear factors found do
/// not exhaust the degree, the leftover factor is returned in
/// [`Error::Irreducible`].
pub fn linear_roots(p: &Polynomial) -> Result<Vec<(GaussianRational, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroFunction);
    }
    let mut roots = Vec::new();
    let zero_mult = p.low_order().unwrap_or(0);
    if zero_mult > 0 {
        roots.push((GaussianRational::zero(), zero_mult));
    }
    let core = p.shift_down(zero_mult);
    let mut residual = core.monic();
    if core.degree_or_minus_one() > 0 {
        let sf = core.squarefree();
        for r in squarefree_roots(&sf) {
            let lin = Polynomial::linear(&r);
            let mut m = 0;
            while let Some(q) = residual.div_exact(&lin) {
                residual = q;
                m += 1;
            }
            debug_assert!(m > 0);
            roots.push((r, m));
        }
    }
    if residual.degree_or_minus_one() > 0 {
        return Err(Error::Irreducible { residual });
    }
    roots.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    Ok(roots)
}

fn squarefree_roots(sf: &Polynomial) -> Vec<GaussianRational> {
    let deg = sf.degree_or_minus_one();
    if deg <= 0 {
        return Vec::new();
    }
    if deg == 1 {
        return vec![-(&sf.coeff(0) / &sf.coeff(1))];
    }
    let ints = clear_denominators(sf.coeffs());
    let constant = &ints[0];
    let leading = ints.last().expect("nonzero polynomial");
    let numerators = divisors_up_to_units(constant);
    let denominators = divisors_up_to_units(leading);

    let mut seen = HashSet::new();
    let mut found = Vec::new();
    for e in &denominators {
        let e_q = e.to_gaussian_rational();
        for d in &numerators {
            for u in GaussInt::units() {
                let cand = &u.mul(d).to_gaussian_rational() / &e_q;
                if !seen.insert(cand.clone()) {
                    continue;
                }
                if sf.eval(&cand).is_zero() {
                    found.push(cand);
                    if found.len() as isize == deg {
                        return found;
                    }
                }
            }
        }
    }
    found
}

/// Multiplicity of `λ` as a root of `p` (0 if not a root). `p` must be nonzero.
pub fn root_multiplicity(p: &Polynomial, lambda: &GaussianRational) -> usize {
    let lin = Polynomial::linear(lambda);
    let mut rest = p.clone();
    let mut m = 0;
    while !rest.is_zero() && rest.eval(lambda).is_zero() {
        rest = rest.div_exact(&lin).expect("root implies linear factor");
        m += 1;
    }
    m
}

/// `Π (t − λ)^m` over the given roots.
pub fn from_roots<'a>(roots: impl IntoIterator<Item = (&'a GaussianRational, usize)>) -> Polynomial {
    roots.into_iter().fold(Polynomial::one(), |acc, (r, m)| &acc * &Polynomial::linear(r).pow(m as u32))
}
