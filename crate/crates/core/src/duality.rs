//! The residue pairing `⟨f, h⟩ = −res_0(f·h)` between germs at 0 and
//! rational functions vanishing at ∞ with their only pole at 0.

use std::fmt;

use num_traits::Zero;

use crate::algebra::{taylor_at, GaussianRational, Polynomial, RationalFunction};
use crate::domain::GMultiple;
use crate::error::{Error, Result};
use crate::jet::Jet;
use crate::operator::apply;

/// `h(t) = Σ_{j≥1} c_j t^{−j}`; `coeffs[0]` holds `c_1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct CoFunction {
    coeffs: Vec<GaussianRational>,
}

impl CoFunction {
    pub fn new(mut coeffs: Vec<GaussianRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// `c·t^{−k}`, `k ≥ 1`.
    pub fn monomial(c: GaussianRational, k: usize) -> Self {
        assert!(k >= 1, "cofunctions have no constant term");
        let mut coeffs = vec![GaussianRational::zero(); k];
        coeffs[k - 1] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    /// `c_j`, zero past the stored range.
    pub fn coeff(&self, j: usize) -> GaussianRational {
        j.checked_sub(1).and_then(|i| self.coeffs.get(i)).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((1..=n).map(|j| &self.coeff(j) + &other.coeff(j)).collect())
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// `(Σ c_j t^{M−j}) / t^M` as a rational function.
    pub fn to_rational(&self) -> RationalFunction {
        let m = self.coeffs.len();
        let num = Polynomial::new((0..m).map(|k| self.coeff(m - k)).collect());
        RationalFunction::new(num, Polynomial::monomial(GaussianRational::from_int(1), m)).expect("nonzero")
    }

    pub fn eval(&self, lambda: &GaussianRational) -> Option<GaussianRational> {
        self.to_rational().eval(lambda)
    }

    /// `h^{(k)}(λ)/k!` for `λ ≠ 0`.
    pub fn taylor_coefficient(&self, lambda: &GaussianRational, k: usize) -> Result<GaussianRational> {
        if lambda.is_zero() {
            return Err(Error::ZeroPoint(lambda.clone()));
        }
        Ok(taylor_at(&self.to_rational(), lambda, k + 1)?.swap_remove(k))
    }
}

impl fmt::Display for CoFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            write!(f, "({c})/t^{}", i + 1)?;
        }
        Ok(())
    }
}

/// `−Σ_j c_j·f_{j−1}`, with `f_k` the Taylor coefficients of `f` at 0.
pub fn pair(f: &RationalFunction, h: &CoFunction) -> Result<GaussianRational> {
    if h.is_zero() {
        return Ok(GaussianRational::zero());
    }
    let jet = Jet::of_rational(f, h.coeffs.len() - 1)?;
    let mut acc = GaussianRational::zero();
    for (i, c) in h.coeffs.iter().enumerate() {
        acc += &(c * jet.coeff(i));
    }
    Ok(-acc)
}

/// `h ↦ h/t`, the transpose of `D0` under the pairing.
pub fn adjoint_d0(h: &CoFunction) -> CoFunction {
    if h.is_zero() {
        return h.clone();
    }
    let mut coeffs = vec![GaussianRational::zero()];
    coeffs.extend(h.coeffs.iter().cloned());
    CoFunction::new(coeffs)
}

/// `[D^k f (0) : k = 0..=n]`.
pub fn moments(f: &GMultiple, n: usize) -> Vec<GaussianRational> {
    let mut out = Vec::with_capacity(n + 1);
    let mut x = f.clone();
    for _ in 0..=n {
        out.push(x.r().eval(&GaussianRational::zero()).expect("holomorphic at 0"));
        x = apply(&x);
    }
    out
}
