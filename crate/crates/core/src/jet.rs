//! Truncated power series at the origin with exact coefficients.
//!
//! A [`Jet`] of order `N` stores `c_0..c_N`; every arithmetic result carries
//! the smallest order of its inputs, and applying the backward shift lowers
//! the order by one. Nothing is ever padded with zeros past the reliable
//! order.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::{series_quotient, GaussianRational, Polynomial, RationalFunction};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Jet {
    coeffs: Vec<GaussianRational>,
}

impl Jet {
    /// Truncates or zero-extends `coeffs` to exactly `order + 1` entries.
    pub fn new(mut coeffs: Vec<GaussianRational>, order: usize) -> Self {
        coeffs.resize(order + 1, GaussianRational::zero());
        Self { coeffs }
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![GaussianRational::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &GaussianRational {
        &self.coeffs[k]
    }

    /// Drops coefficients above `order`.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a jet past its reliable order");
        Self::new(self.coeffs[..=order].to_vec(), order)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::new((0..=n).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect(), n)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::new((0..=n).map(|k| &self.coeffs[k] - &other.coeffs[k]).collect(), n)
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect(), self.order())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = vec![GaussianRational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Self::new(out, n)
    }

    /// Multiplicative inverse through the same order; needs `c_0 ≠ 0`.
    pub fn recip(&self) -> Result<Self> {
        if self.coeffs[0].is_zero() {
            return Err(Error::JetNotInvertible);
        }
        let a = Polynomial::new(self.coeffs.clone());
        Ok(Self::new(series_quotient(&Polynomial::one(), &a, self.order() + 1), self.order()))
    }

    /// Taylor jet of a rational function holomorphic at 0.
    pub fn of_rational(f: &RationalFunction, order: usize) -> Result<Self> {
        if f.den().coeff(0).is_zero() {
            return Err(Error::PoleAtOrigin);
        }
        Ok(Self::new(series_quotient(f.num(), f.den(), order + 1), order))
    }

    pub fn of_polynomial(p: &Polynomial, order: usize) -> Self {
        Self::new(p.coeffs().iter().take(order + 1).cloned().collect(), order)
    }

    /// `exp(c·t)`: coefficients `c^k / k!`.
    pub fn exp_unit(c: &GaussianRational, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut term = GaussianRational::one();
        for k in 0..=order {
            coeffs.push(term.clone());
            let inv_k1 = GaussianRational::from_real(BigRational::new(BigInt::one(), BigInt::from(k as u64 + 1)));
            term = &(&term * c) * &inv_k1;
        }
        Self::new(coeffs, order)
    }

    /// `1/(1 − c·t)`: coefficients `c^k`.
    pub fn geometric_unit(c: &GaussianRational, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut term = GaussianRational::one();
        for _ in 0..=order {
            coeffs.push(term.clone());
            term = &term * c;
        }
        Self::new(coeffs, order)
    }

    /// One step of the generalized backward shift on jets:
    /// `(f − g0·f(0))/t`, output coefficient `k` is `f_{k+1} − f_0·g0_{k+1}`.
    pub fn apply_pommiez(g0: &Jet, f: &Jet) -> Result<Jet> {
        if !g0.coeffs[0].is_one() {
            return Err(Error::InvalidContext("g0 jet must have constant term 1".into()));
        }
        let n = f.order().min(g0.order());
        if n == 0 {
            return Err(Error::JetOrderExhausted);
        }
        let f0 = &f.coeffs[0];
        Ok(Self::new((0..n).map(|k| &f.coeffs[k + 1] - &(f0 * &g0.coeffs[k + 1])).collect(), n - 1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(n: i64, d: i64) -> GaussianRational {
        GaussianRational::from_ratio(n, d)
    }

    #[test]
    fn geometric_series() {
        let f = RationalFunction::new(Polynomial::one(), Polynomial::from_ints(&[1, -1])).unwrap();
        assert_eq!(Jet::of_rational(&f, 3).unwrap().coeffs(), &[g(1, 1), g(1, 1), g(1, 1), g(1, 1)]);
    }

    #[test]
    fn exp_taylor() {
        let e = Jet::exp_unit(&g(1, 1), 4);
        assert_eq!(e.coeffs(), &[g(1, 1), g(1, 1), g(1, 2), g(1, 6), g(1, 24)]);
    }

    #[test]
    fn rational_jets() {
        let f = RationalFunction::new(Polynomial::one(), Polynomial::from_ints(&[-2, 1])).unwrap();
        assert_eq!(Jet::of_rational(&f, 2).unwrap().coeffs(), &[g(-1, 2), g(-1, 4), g(-1, 8)]);
        let h = RationalFunction::new(Polynomial::from_ints(&[0, 1]), Polynomial::from_ints(&[1, -1])).unwrap();
        assert_eq!(Jet::of_rational(&h, 3).unwrap().coeffs(), &[g(0, 1), g(1, 1), g(1, 1), g(1, 1)]);
        let p = Polynomial::from_ints(&[3, 0, -1]);
        assert_eq!(Jet::of_rational(&p.clone().into(), 4).unwrap(), Jet::new(p.coeffs().to_vec(), 4));
        let pole = RationalFunction::new(Polynomial::one(), Polynomial::from_ints(&[0, 1])).unwrap();
        assert_eq!(Jet::of_rational(&pole, 2), Err(Error::PoleAtOrigin));
    }

    #[test]
    fn kernel_and_shift() {
        let g0 = Jet::exp_unit(&g(1, 2), 6);
        let out = Jet::apply_pommiez(&g0, &g0).unwrap();
        assert!(out.is_zero());
        assert_eq!(out.order(), 5);

        let one = Jet::one(6);
        let t3 = Jet::new(vec![g(0, 1), g(0, 1), g(0, 1), g(1, 1)], 6);
        let t2 = Jet::new(vec![g(0, 1), g(0, 1), g(1, 1)], 5);
        assert_eq!(Jet::apply_pommiez(&one, &t3).unwrap(), t2);

        // jet of g0·t maps to jet of g0 with one order lost
        let g0t = g0.mul(&Jet::new(vec![g(0, 1), g(1, 1)], 6));
        assert_eq!(Jet::apply_pommiez(&g0, &g0t).unwrap(), g0.truncate(5));
    }

    #[test]
    fn exhausted_order() {
        let g0 = Jet::one(0);
        assert_eq!(Jet::apply_pommiez(&g0, &Jet::one(0)), Err(Error::JetOrderExhausted));
        assert_eq!(Jet::new(vec![g(0, 1), g(1, 1)], 3).recip(), Err(Error::JetNotInvertible));
    }

    #[test]
    fn repeated_shift_of_g0_times_power() {
        let g0 = Jet::geometric_unit(&g(1, 3), 12);
        for n in 1..5usize {
            let mut f = g0.mul(&Jet::new((0..=n).map(|k| if k == n { g(1, 1) } else { g(0, 1) }).collect(), 12));
            for _ in 0..n {
                f = Jet::apply_pommiez(&g0, &f).unwrap();
            }
            assert_eq!(f, g0.truncate(12 - n));
        }
    }

    fn small() -> impl Strategy<Value = GaussianRational> {
        (-6i64..=6, 1i64..=4, -6i64..=6, 1i64..=4).prop_map(|(a, b, c, d)| GaussianRational::from_parts(a, b, c, d))
    }

    proptest! {
        #[test]
        fn recip_is_inverse(c0 in small().prop_filter("unit", |c| !c.is_zero()), rest in proptest::collection::vec(small(), 0..8)) {
            let mut coeffs = vec![c0];
            coeffs.extend(rest);
            let a = Jet::new(coeffs, 8);
            let r = a.recip().unwrap();
            prop_assert_eq!(a.mul(&r), Jet::one(8));
            prop_assert_eq!(r.recip().unwrap(), a);
        }
    }
}
