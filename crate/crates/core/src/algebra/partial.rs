//! Local expansions of rational functions: zero/pole orders, Laurent
//! coefficients and partial fractions over the basis `1/(t − λ)^k`.

use num_traits::Zero;

use super::roots::{linear_roots, root_multiplicity};
use super::{GaussianRational, Polynomial, RationalFunction};
use crate::error::{Error, Result};

/// One term `coefficient / (t − pole)^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoleTerm {
    pub pole: GaussianRational,
    pub order: usize,
    pub coefficient: GaussianRational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialFractionExpansion {
    pub poly_part: Polynomial,
    /// Grouped by pole (canonical order), orders ascending within a pole.
    /// Zero coefficients below the top order are omitted.
    pub terms: Vec<PoleTerm>,
}

impl PartialFractionExpansion {
    /// Sums the expansion back into a single rational function.
    pub fn recombine(&self) -> RationalFunction {
        self.terms.iter().fold(RationalFunction::from_polynomial(self.poly_part.clone()), |acc, t| {
            acc.add(&RationalFunction::elementary(&t.pole, t.order as u32).scale(&t.coefficient))
        })
    }

    /// Distinct poles with their top order.
    pub fn pole_orders(&self) -> Vec<(GaussianRational, usize)> {
        let mut out: Vec<(GaussianRational, usize)> = Vec::new();
        for t in &self.terms {
            match out.last_mut() {
                Some((p, k)) if *p == t.pole => *k = (*k).max(t.order),
                _ => out.push((t.pole.clone(), t.order)),
            }
        }
        out
    }

    /// Coefficient of `1/(t − pole)^order` (zero if absent).
    pub fn coefficient(&self, pole: &GaussianRational, order: usize) -> GaussianRational {
        self.terms
            .iter()
            .find(|t| &t.pole == pole && t.order == order)
            .map(|t| t.coefficient.clone())
            .unwrap_or_default()
    }
}

/// First `n` coefficients of the power series `a/b`; requires `b(0) ≠ 0`.
pub fn series_quotient(a: &Polynomial, b: &Polynomial, n: usize) -> Vec<GaussianRational> {
    let b0_inv = b.coeff(0).inv().expect("series division needs b(0) != 0");
    let mut out: Vec<GaussianRational> = Vec::with_capacity(n);
    for k in 0..n {
        let mut acc = a.coeff(k);
        for j in 1..=k.min(b.coeffs().len().saturating_sub(1)) {
            acc -= &(&b.coeff(j) * &out[k - j]);
        }
        out.push(&acc * &b0_inv);
    }
    out
}

/// Zero order (`> 0`), pole order (`< 0`) or `0` of `f` at `λ`.
pub fn order_at(f: &RationalFunction, lambda: &GaussianRational) -> Result<isize> {
    if f.is_zero() {
        return Err(Error::ZeroFunction);
    }
    Ok(root_multiplicity(f.num(), lambda) as isize - root_multiplicity(f.den(), lambda) as isize)
}

/// Coefficients of `f(λ + s)·s^{-ord}` as a power series in `s`, where
/// `ord = order_at(f, λ)`; returns `(ord, first n coefficients)`.
fn local_series(f: &RationalFunction, lambda: &GaussianRational, n: usize) -> (isize, Vec<GaussianRational>) {
    let num = f.num().shift_arg(lambda);
    let den = f.den().shift_arg(lambda);
    let a = num.low_order().expect("nonzero numerator");
    let b = den.low_order().expect("nonzero denominator");
    let series = series_quotient(&num.shift_down(a), &den.shift_down(b), n);
    (a as isize - b as isize, series)
}

/// Coefficient of `(t − λ)^{−k}` in the Laurent expansion of `f` at `λ`.
///
/// `k = 1` is the residue; `k ≤ 0` reads Taylor-side coefficients.
pub fn laurent_residue(f: &RationalFunction, lambda: &GaussianRational, k: isize) -> Result<GaussianRational> {
    if f.is_zero() {
        return Err(Error::ZeroFunction);
    }
    // f = s^ord · Σ c_j s^j, so the s^{-k} coefficient is c_{-k-ord}.
    let ord = order_at(f, lambda)?;
    let idx = -k - ord;
    if idx < 0 {
        return Ok(GaussianRational::zero());
    }
    let (_, series) = local_series(f, lambda, idx as usize + 1);
    Ok(series[idx as usize].clone())
}

/// Taylor coefficients `c_0..c_{n-1}` of `f` at `λ`; `f` must be holomorphic there.
pub fn taylor_at(f: &RationalFunction, lambda: &GaussianRational, n: usize) -> Result<Vec<GaussianRational>> {
    if f.is_zero() {
        return Ok(vec![GaussianRational::zero(); n]);
    }
    let (ord, series) = local_series(f, lambda, n);
    if ord < 0 {
        return Err(Error::Degenerate(format!("function has a pole at {lambda}")));
    }
    let ord = ord as usize;
    Ok((0..n).map(|k| if k < ord { GaussianRational::zero() } else { series[k - ord].clone() }).collect())
}

/// Partial-fraction expansion over the poles of `f`; the denominator must
/// split over ℚ(i).
pub fn partial_fractions(f: &RationalFunction) -> Result<PartialFractionExpansion> {
    let (poly_part, proper) = f.split_polynomial_part();
    if proper.is_zero() {
        return Ok(PartialFractionExpansion { poly_part, terms: Vec::new() });
    }
    let mut terms = Vec::new();
    for (pole, mult) in linear_roots(proper.den())? {
        let (ord, series) = local_series(&proper, &pole, mult);
        debug_assert_eq!(ord, -(mult as isize));
        for order in 1..=mult {
            let c = &series[mult - order];
            if !c.is_zero() {
                terms.push(PoleTerm { pole: pole.clone(), order, coefficient: c.clone() });
            }
        }
    }
    Ok(PartialFractionExpansion { poly_part, terms })
}
