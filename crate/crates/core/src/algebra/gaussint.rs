//! Gaussian integers ℤ[i]: divisor enumeration for root finding and
//! content removal for fraction-free elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::GaussianRational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussInt {
    pub fn new(re: BigInt, im: BigInt) -> Self {
        Self { re, im }
    }

    pub fn from_i64(re: i64, im: i64) -> Self {
        Self::new(BigInt::from(re), BigInt::from(im))
    }

    pub fn zero() -> Self {
        Self::from_i64(0, 0)
    }

    pub fn one() -> Self {
        Self::from_i64(1, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(&self.re * &o.re - &self.im * &o.im, &self.re * &o.im + &self.im * &o.re)
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(&self.re - &o.re, &self.im - &o.im)
    }

    /// Exact quotient, `None` if `o` does not divide `self`.
    pub fn div_exact(&self, o: &Self) -> Option<Self> {
        let n = o.norm();
        if n.is_zero() {
            return None;
        }
        let t = self.mul(&o.conj());
        let (qr, rr) = t.re.div_rem(&n);
        let (qi, ri) = t.im.div_rem(&n);
        (rr.is_zero() && ri.is_zero()).then(|| Self::new(qr, qi))
    }

    /// Euclidean remainder with rounded quotient.
    fn rem(&self, o: &Self) -> Self {
        let n = o.norm();
        let t = self.mul(&o.conj());
        let round = |x: &BigInt| -> BigInt {
            // nearest integer to x / n
            let two = BigInt::from(2);
            (x * &two + &n).div_floor(&(&n * &two))
        };
        let q = Self::new(round(&t.re), round(&t.im));
        self.sub(&o.mul(&q))
    }

    /// A greatest common divisor (defined up to units).
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }

    pub fn to_gaussian_rational(&self) -> GaussianRational {
        GaussianRational::new(BigRational::from_integer(self.re.clone()), BigRational::from_integer(self.im.clone()))
    }

    pub fn units() -> [GaussInt; 4] {
        [Self::from_i64(1, 0), Self::from_i64(0, 1), Self::from_i64(-1, 0), Self::from_i64(0, -1)]
    }
}

/// Scales a list of Gaussian rationals by the lcm of all denominators,
/// giving Gaussian integers with the same ratios.
pub fn clear_denominators(values: &[GaussianRational]) -> Vec<GaussInt> {
    let lcm = values.iter().fold(BigInt::one(), |acc, v| acc.lcm(&v.denominator_lcm()));
    values
        .iter()
        .map(|v| {
            let re = v.re() * BigRational::from_integer(lcm.clone());
            let im = v.im() * BigRational::from_integer(lcm.clone());
            GaussInt::new(re.to_integer(), im.to_integer())
        })
        .collect()
}

/// Trial division bound; cofactors left above `bound²` are treated as prime.
const TRIAL_BOUND: u64 = 2_000_000;

fn factor_integer(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut p = 2u64;
    while p <= TRIAL_BOUND {
        let bp = BigInt::from(p);
        if &bp * &bp > n {
            break;
        }
        let mut e = 0;
        while (&n % &bp).is_zero() {
            n /= &bp;
            e += 1;
        }
        if e > 0 {
            out.push((bp, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > BigInt::one() {
        out.push((n, 1));
    }
    out
}

/// `x` with `x² + y² = p` for a prime `p ≡ 1 (mod 4)`.
fn two_squares(p: &BigInt) -> Option<GaussInt> {
    let p64 = p.to_u64()?;
    let mut x = 1u64;
    while x * x < p64 {
        let rest = p64 - x * x;
        let y = (rest as f64).sqrt() as u64;
        for yy in [y.saturating_sub(1), y, y + 1] {
            if yy * yy == rest {
                return Some(GaussInt::from_i64(x as i64, yy as i64));
            }
        }
        x += 1;
    }
    None
}

/// All divisors of `n` in ℤ[i] up to multiplication by units.
pub fn divisors_up_to_units(n: &GaussInt) -> Vec<GaussInt> {
    assert!(!n.is_zero(), "divisors of zero");
    // Gaussian prime factorisation via the norm.
    let mut primes: Vec<GaussInt> = Vec::new();
    for (p, _) in factor_integer(&n.norm()) {
        if p == BigInt::from(2) {
            primes.push(GaussInt::from_i64(1, 1));
        } else if (&p % BigInt::from(4)) == BigInt::from(3) {
            primes.push(GaussInt::new(p.clone(), BigInt::zero()));
        } else if let Some(pi) = two_squares(&p) {
            primes.push(pi.conj());
            primes.push(pi);
        } else {
            // Unfactored large cofactor; keep it as a rational prime candidate.
            primes.push(GaussInt::new(p.clone(), BigInt::zero()));
        }
    }
    let mut rest = n.clone();
    let mut powers: Vec<(GaussInt, u32)> = Vec::new();
    for pi in primes {
        let mut e = 0;
        while let Some(q) = rest.div_exact(&pi) {
            rest = q;
            e += 1;
        }
        if e > 0 {
            powers.push((pi, e));
        }
    }
    let mut divs = vec![GaussInt::one()];
    for (pi, e) in powers {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut acc = d.clone();
            next.push(acc.clone());
            for _ in 0..e {
                acc = acc.mul(&pi);
                next.push(acc.clone());
            }
        }
        divs = next;
    }
    divs
}
