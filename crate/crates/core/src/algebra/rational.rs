//! Rational functions in canonical form: coprime, monic denominator.

use std::fmt;

use num_traits::{One, Zero};

use super::{GaussianRational, Polynomial};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    /// Reduces `num/den` to canonical form. Fails when `den` is zero.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides numerator"), den.div_exact(&g).expect("gcd divides denominator"))
        };
        let lc_inv = den.leading_coeff().and_then(|c| c.inv()).expect("nonzero denominator");
        Ok(Self { num: num.scale(&lc_inv), den: den.scale(&lc_inv) })
    }

    /// Builds from parts already known to be coprime with `den` monic.
    pub(crate) fn from_canonical(num: Polynomial, den: Polynomial) -> Self {
        debug_assert!(den.is_monic());
        debug_assert!(num.is_zero() || num.gcd(&den).is_one());
        if num.is_zero() {
            return Self::zero();
        }
        Self { num, den }
    }

    pub fn zero() -> Self {
        Self { num: Polynomial::zero(), den: Polynomial::one() }
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::from_polynomial(Polynomial::constant(c))
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        Self { num: p, den: Polynomial::one() }
    }

    /// The elementary fraction `q_{λ,k}(t) = 1/(t − λ)^k`.
    pub fn elementary(lambda: &GaussianRational, k: u32) -> Self {
        Self::from_canonical(Polynomial::one(), Polynomial::linear(lambda).pow(k))
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// `deg num < deg den`.
    pub fn is_proper(&self) -> bool {
        self.num.degree() < self.den.degree()
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::new(&self.num + &other.num, self.den.clone()).expect("nonzero den");
        }
        Self::new(&(&self.num * &other.den) + &(&other.num * &self.den), &self.den * &other.den).expect("nonzero den")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&self.num * &other.num, &self.den * &other.den).expect("nonzero den")
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(&self.num * &other.den, &self.den * &other.num)
    }

    pub fn neg(&self) -> Self {
        Self { num: -&self.num, den: self.den.clone() }
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn mul_poly(&self, p: &Polynomial) -> Self {
        Self::new(&self.num * p, self.den.clone()).expect("nonzero den")
    }

    /// Value at `z`; `None` at a pole.
    pub fn eval(&self, z: &GaussianRational) -> Option<GaussianRational> {
        let d = self.den.eval(z);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(z) / d)
    }

    pub fn pow(&self, exp: u32) -> Self {
        Self::from_canonical(self.num.pow(exp), self.den.pow(exp))
    }

    /// Polynomial part and proper remainder: `self = poly + rem/den`.
    pub fn split_polynomial_part(&self) -> (Polynomial, Self) {
        let (q, r) = self.num.div_rem(&self.den);
        (q, Self::from_canonical(r, self.den.clone()))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        Self::from_polynomial(p)
    }
}
