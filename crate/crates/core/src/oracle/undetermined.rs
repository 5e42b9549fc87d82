//! A second route to the canonical decomposition: read `p` and `v` off the
//! roots of `den(R)`, then solve `r·v + p·u = κ·num(R)` by undetermined
//! coefficients.

use num_traits::Zero;

use crate::algebra::{from_roots, linear_roots, GaussianRational, Polynomial};
use crate::classify::CanonicalDecomposition;
use crate::domain::{normalized_product, GMultiple};
use crate::error::{Error, Result};

use super::linalg::solve;

pub fn decompose_by_coefficients(f: &GMultiple) -> Result<CanonicalDecomposition> {
    if f.is_zero() {
        return Err(Error::ZeroFunction);
    }
    let omega = f.ctx().omega();
    let (num, den) = (f.r().num(), f.r().den());
    let roots = if den.is_one() { Vec::new() } else { linear_roots(den)? };
    let (inside, outside): (Vec<_>, Vec<_>) = roots.into_iter().partition(|(x, _)| omega.contains(x));
    let p = normalized_product(&inside);
    let v = from_roots(outside.iter().map(|(x, k)| (x, *k)));
    // p·v = κ·den with den monic.
    let kappa = p.leading_coeff().expect("nonzero").clone();
    let rhs_poly = num.scale(&kappa);

    let dv = v.degree_or_minus_one() as usize;
    let dp = p.degree_or_minus_one() as usize;
    let dn = num.degree_or_minus_one() as usize;
    let dr = dn.max(dp + dv).saturating_sub(dv);
    let unknowns = dr + 1 + dv;
    let rows = (dr + dv).max(dp + dv).max(dn) + 1;

    // Column j < dr+1 is t^j·v, column dr+1+i is t^i·p.
    let mut matrix = vec![vec![GaussianRational::zero(); unknowns]; rows];
    for j in 0..=dr {
        for (k, c) in v.coeffs().iter().enumerate() {
            matrix[j + k][j] = c.clone();
        }
    }
    for i in 0..dv {
        for (k, c) in p.coeffs().iter().enumerate() {
            matrix[i + k][dr + 1 + i] = c.clone();
        }
    }
    let rhs: Vec<GaussianRational> = (0..rows).map(|k| rhs_poly.coeff(k)).collect();
    let x = solve(&matrix, &rhs).ok_or_else(|| Error::Internal("undetermined system is inconsistent".into()))?;
    let r = Polynomial::new(x[..=dr].to_vec());
    let u = Polynomial::new(x[dr + 1..].to_vec());
    Ok(CanonicalDecomposition { p, r, u, v })
}
