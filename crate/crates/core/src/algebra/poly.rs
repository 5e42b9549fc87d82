//! Dense univariate polynomials over ℚ(i).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::GaussianRational;

/// Polynomial degree with a distinguished `−∞` for the zero polynomial.
///
/// The derived order puts `NegInf` below every finite degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInf,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInf => None,
            Degree::Finite(d) => Some(d),
        }
    }

    pub fn is_neg_inf(self) -> bool {
        self == Degree::NegInf
    }

    /// `self + k` with `−∞ + k = −∞`.
    pub fn shift(self, k: isize) -> Degree {
        match self {
            Degree::NegInf => Degree::NegInf,
            Degree::Finite(d) => {
                let v = d as isize + k;
                assert!(v >= 0, "degree shifted below zero");
                Degree::Finite(v as usize)
            }
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInf => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Coefficients lowest degree first, with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<GaussianRational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<GaussianRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `c·t^k`.
    pub fn monomial(c: GaussianRational, k: usize) -> Self {
        let mut coeffs = vec![GaussianRational::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// The identity polynomial `t`.
    pub fn x() -> Self {
        Self::monomial(GaussianRational::one(), 1)
    }

    /// `t − root`.
    pub fn linear(root: &GaussianRational) -> Self {
        Self::new(vec![-root, GaussianRational::one()])
    }

    /// Builds a polynomial from small integer coefficients, lowest first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| GaussianRational::from_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    /// Coefficient of `t^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> GaussianRational {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInf,
            n => Degree::Finite(n - 1),
        }
    }

    /// Degree as `isize` with `−1` standing in for the zero polynomial.
    pub fn degree_or_minus_one(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn leading_coeff(&self) -> Option<&GaussianRational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(One::is_one)
    }

    pub fn eval(&self, z: &GaussianRational) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * z) + c;
        }
        acc
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divides by the leading coefficient; the zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => Self::zero(),
            Some(lc) => self.scale(&lc.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Multiplication by `t^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![GaussianRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Drops the lowest `k` coefficients, i.e. `(p − low part)/t^k`.
    pub fn shift_down(&self, k: usize) -> Self {
        Self::new(self.coeffs.iter().skip(k).cloned().collect())
    }

    /// Multiplicity of `0` as a root.
    pub fn low_order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * GaussianRational::from_int(k as i64)).collect(),
        )
    }

    /// Taylor shift: the polynomial `s ↦ p(s + a)`.
    pub fn shift_arg(&self, a: &GaussianRational) -> Self {
        let step = Self::new(vec![a.clone(), GaussianRational::one()]);
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &step) + &Self::constant(c.clone());
        }
        acc
    }

    /// Euclidean division; panics when `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let lc_inv =
            divisor.leading_coeff().expect("polynomial division by zero").inv().expect("nonzero leading coefficient");
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![GaussianRational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                let t = &c * d;
                rem[k + j] -= &t;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    /// Exact quotient; `None` when the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.div_rem(self).1.is_zero()
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Monic least common multiple of two nonzero polynomials.
    pub fn lcm(&self, other: &Self) -> Self {
        let g = self.gcd(other);
        (self * &other.div_exact(&g).expect("gcd divides")).monic()
    }

    /// Squarefree part `p / gcd(p, p')`, monic.
    pub fn squarefree(&self) -> Self {
        let g = self.gcd(&self.derivative());
        self.div_exact(&g).expect("gcd divides").monic()
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![GaussianRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

fn scalar_factor(c: &GaussianRational) -> String {
    if c.is_real() {
        c.to_string()
    } else {
        format!("({c})")
    }
}

/// Expanded form in the variable `z`, highest degree first, e.g. `z^2-3*z+1`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let var = match k {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{k}"),
            };
            let term = if k == 0 {
                scalar_factor(c)
            } else if c.is_one() {
                var
            } else if (-c).is_one() {
                format!("-{var}")
            } else {
                format!("{}*{var}", scalar_factor(c))
            };
            if !out.is_empty() && !term.starts_with('-') {
                out.push('+');
            }
            out.push_str(&term);
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn zero_has_neg_inf_degree() {
        assert_eq!(Polynomial::zero().degree(), Degree::NegInf);
        assert!(Degree::NegInf < Degree::Finite(0));
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Degree::Finite(1));
    }

    #[test]
    fn division_identity() {
        let a = p(&[3, -2, 0, 5, 1]);
        let b = p(&[1, 0, 2]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn gcd_of_shared_factor() {
        let common = p(&[-1, 1]);
        let a = &common * &p(&[-3, 1]);
        let b = &common * &p(&[5, 0, 1]);
        assert_eq!(a.gcd(&b), common);
        assert_eq!(a.lcm(&b).degree(), Degree::Finite(4));
    }

    #[test]
    fn taylor_shift() {
        // (s + 1)^2 = s^2 + 2s + 1
        let sq = p(&[0, 0, 1]);
        assert_eq!(sq.shift_arg(&GaussianRational::one()), p(&[1, 2, 1]));
    }

    #[test]
    fn display_expanded() {
        assert_eq!(p(&[1, -3, 1]).to_string(), "z^2-3*z+1");
        assert_eq!(p(&[0, -1]).to_string(), "-z");
        let c =
            Polynomial::new(vec![GaussianRational::from_parts(1, 2, 0, 1), GaussianRational::from_parts(1, 1, 1, 1)]);
        assert_eq!(c.to_string(), "(1+i)*z+1/2");
    }

    #[test]
    fn squarefree_part() {
        let a = &p(&[-1, 1]).pow(3) * &p(&[2, 1]);
        assert_eq!(a.squarefree(), &p(&[-1, 1]) * &p(&[2, 1]));
    }
}
