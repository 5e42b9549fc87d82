use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{linear_roots, Degree, GaussianRational, Polynomial, RationalFunction};
use crate::domain::{G0Context, GMultiple, MultiplicityVariety, SymFunction};
use crate::error::{Error, Result};
use crate::oracle::linalg::rank;

use super::decomposition::{canonical_decomposition, root_variety};

/// `(g0/p)·ℂ[z]_n + g0·ℂ⁻_Υ(z)`.
///
/// `p` is kept as its zero variety so that equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalType {
    p_zeros: MultiplicityVariety,
    n: Degree,
    upsilon: MultiplicityVariety,
}

impl RationalType {
    pub fn p_zeros(&self) -> &MultiplicityVariety {
        &self.p_zeros
    }

    /// `Π (1 − z/λ)^m` over the zeros of `p`.
    pub fn p(&self) -> Polynomial {
        self.p_zeros.normalized_polynomial()
    }

    pub fn n(&self) -> Degree {
        self.n
    }

    pub fn upsilon(&self) -> &MultiplicityVariety {
        &self.upsilon
    }

    fn deg_p(&self) -> isize {
        self.p_zeros.total_multiplicity() as isize
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SubspaceDescriptor {
    Rational(RationalType),
    ZeroVariety(MultiplicityVariety),
    Full,
    Trivial,
}

impl SubspaceDescriptor {
    /// Canonicalizing constructor: `p = 1` when `n = −∞`, and
    /// `(1, −∞, ∅)` becomes [`SubspaceDescriptor::Trivial`].
    pub fn rational(p_zeros: MultiplicityVariety, n: Degree, upsilon: MultiplicityVariety) -> Result<Self> {
        if p_zeros.points().any(Zero::is_zero) || upsilon.points().any(Zero::is_zero) {
            return Err(Error::InvalidDescriptor("points must be nonzero".into()));
        }
        if let Some(upsilon_point) = upsilon.points().find(|x| p_zeros.multiplicity(x) > 0) {
            return Err(Error::InvalidDescriptor(format!("{upsilon_point} is both a zero of p and a pole")));
        }
        let p_zeros = if n.is_neg_inf() { MultiplicityVariety::empty() } else { p_zeros };
        if let Degree::Finite(k) = n {
            if (k as isize) < p_zeros.total_multiplicity() as isize - 1 {
                return Err(Error::InvalidDescriptor(format!("n = {k} is below deg p - 1")));
            }
        }
        if n.is_neg_inf() && upsilon.is_empty() {
            return Ok(Self::Trivial);
        }
        Ok(Self::Rational(RationalType { p_zeros, n, upsilon }))
    }

    /// As [`SubspaceDescriptor::rational`] with `p` given as a polynomial with `p(0) = 1`.
    pub fn rational_from_p(p: &Polynomial, n: Degree, upsilon: MultiplicityVariety) -> Result<Self> {
        if p.coeff(0) != GaussianRational::one() {
            return Err(Error::InvalidDescriptor(format!("p = {p} must satisfy p(0) = 1")));
        }
        let zeros = if p.is_one() { Vec::new() } else { linear_roots(p)? };
        Self::rational(MultiplicityVariety::new(zeros)?, n, upsilon)
    }

    pub fn zero_variety(w: MultiplicityVariety) -> Result<Self> {
        if w.is_empty() {
            return Err(Error::InvalidDescriptor("zero variety must be nonempty".into()));
        }
        Ok(Self::ZeroVariety(w))
    }

    /// Checks the context-dependent invariants: `Z(p)` and `W` below `W(g0)`,
    /// `Υ` outside Ω.
    pub fn validate(&self, ctx: &G0Context) -> Result<()> {
        match self {
            Self::Rational(rt) => {
                if !rt.p_zeros.prec(ctx.zeros()) {
                    return Err(Error::InvalidDescriptor(format!("zeros of p {} exceed W(g0)", rt.p_zeros)));
                }
                if let Some(x) = rt.upsilon.points().find(|x| ctx.omega().contains(x)) {
                    return Err(Error::InvalidDescriptor(format!("pole {x} lies inside the domain")));
                }
                Ok(())
            }
            Self::ZeroVariety(w) if !w.prec(ctx.zeros()) => {
                Err(Error::InvalidDescriptor(format!("{w} is not below W(g0)")))
            }
            _ => Ok(()),
        }
    }

    /// `None` for infinite dimension.
    pub fn dimension(&self) -> Option<usize> {
        match self {
            Self::Rational(rt) => Some(rt.n.finite().map_or(0, |n| n + 1) + rt.upsilon.total_multiplicity()),
            Self::Trivial => Some(0),
            Self::ZeroVariety(_) | Self::Full => None,
        }
    }

    /// Generators of a finite descriptor: `(g0/p)·t^j` for `j ≤ n` and `g0·q_{λ,k}`.
    pub fn generators(&self, ctx: &std::sync::Arc<G0Context>) -> Vec<GMultiple> {
        let Self::Rational(rt) = self else { return Vec::new() };
        let p = rt.p();
        let mut out = Vec::new();
        if let Some(n) = rt.n.finite() {
            for j in 0..=n {
                let r = RationalFunction::new(Polynomial::monomial(GaussianRational::one(), j), p.clone())
                    .expect("p(0) = 1");
                out.push(GMultiple::from_trusted(ctx.clone(), r));
            }
        }
        for (lambda, k) in rt.upsilon.entries() {
            for order in 1..=*k {
                out.push(GMultiple::from_trusted(ctx.clone(), RationalFunction::elementary(lambda, order as u32)));
            }
        }
        out
    }

    /// Sample members `u_W·t^j` (`j < count`) of `S(W)`, with `u_W` the
    /// normalized polynomial vanishing exactly on `W`.
    pub fn zero_variety_samples(&self, ctx: &std::sync::Arc<G0Context>, count: usize) -> Vec<SymFunction> {
        let w = match self {
            Self::ZeroVariety(w) => w.clone(),
            Self::Full => MultiplicityVariety::empty(),
            _ => return Vec::new(),
        };
        let u = w.normalized_polynomial();
        (0..count)
            .map(|j| {
                SymFunction::new(ctx.clone(), u.shift_up(j).into(), RationalFunction::zero())
                    .expect("polynomial A-part")
            })
            .collect()
    }
}

/// `W(g0/p)` for the `p` of a rational descriptor, or `W(g0)` when `n = −∞`.
fn rational_zero_variety(ctx: &G0Context, rt: &RationalType) -> MultiplicityVariety {
    if rt.n.is_neg_inf() {
        ctx.zeros().clone()
    } else {
        ctx.zeros().saturating_sub(&rt.p_zeros)
    }
}

/// Whether `f` lies in the subspace described by `d`.
pub fn membership(f: &SymFunction, d: &SubspaceDescriptor) -> Result<bool> {
    if f.is_zero() {
        return Ok(true);
    }
    match d {
        SubspaceDescriptor::Full => Ok(true),
        SubspaceDescriptor::Trivial => Ok(false),
        SubspaceDescriptor::ZeroVariety(w) => {
            Ok(w.entries().iter().all(|(x, m)| f.zero_order_at(x).is_some_and(|k| k >= *m)))
        }
        SubspaceDescriptor::Rational(rt) => {
            let Some(g) = f.as_multiple() else { return Ok(false) };
            let dec = canonical_decomposition(&g)?;
            let pf_zeros = MultiplicityVariety::new(root_variety(&dec.p)?)?;
            if !pf_zeros.prec(&rt.p_zeros) {
                return Ok(false);
            }
            if !dec.r.is_zero() {
                let Some(n) = rt.n.finite() else { return Ok(false) };
                let needed = dec.r.degree_or_minus_one() + rt.deg_p() - dec.p.degree_or_minus_one();
                if needed > n as isize {
                    return Ok(false);
                }
            }
            let poles = MultiplicityVariety::new(root_variety(&dec.v)?)?;
            Ok(poles.prec(&rt.upsilon))
        }
    }
}

/// `d1 ⊆ d2`.
pub fn inclusion(ctx: &G0Context, d1: &SubspaceDescriptor, d2: &SubspaceDescriptor) -> bool {
    use SubspaceDescriptor::*;
    match (d1, d2) {
        (Trivial, _) | (_, Full) => true,
        (Full, _) | (_, Trivial) => false,
        (ZeroVariety(_), Rational(_)) => false,
        (ZeroVariety(w1), ZeroVariety(w2)) => w2.prec(w1),
        (Rational(rt), ZeroVariety(w)) => w.prec(&rational_zero_variety(ctx, rt)),
        (Rational(a), Rational(b)) => {
            let poly_ok = match (a.n.finite(), b.n.finite()) {
                (None, _) => true,
                (Some(_), None) => false,
                (Some(n1), Some(n2)) => {
                    a.p_zeros.prec(&b.p_zeros) && n1 as isize + b.deg_p() - a.deg_p() <= n2 as isize
                }
            };
            poly_ok && a.upsilon.prec(&b.upsilon)
        }
    }
}

/// The smallest descriptor containing both.
pub fn join(ctx: &G0Context, d1: &SubspaceDescriptor, d2: &SubspaceDescriptor) -> Result<SubspaceDescriptor> {
    use SubspaceDescriptor::*;
    let zero_or_full = |w: MultiplicityVariety| if w.is_empty() { Full } else { ZeroVariety(w) };
    Ok(match (d1, d2) {
        (Full, _) | (_, Full) => Full,
        (Trivial, d) | (d, Trivial) => d.clone(),
        (ZeroVariety(w1), ZeroVariety(w2)) => zero_or_full(w1.min(w2)),
        (ZeroVariety(w), Rational(rt)) | (Rational(rt), ZeroVariety(w)) => {
            zero_or_full(w.min(&rational_zero_variety(ctx, rt)))
        }
        (Rational(a), Rational(b)) => join_rational(a, b)?,
    })
}

fn join_rational(a: &RationalType, b: &RationalType) -> Result<SubspaceDescriptor> {
    let upsilon = a.upsilon.max(&b.upsilon);
    let parts: Vec<&RationalType> = [a, b].into_iter().filter(|x| !x.n.is_neg_inf()).collect();
    if parts.is_empty() {
        return SubspaceDescriptor::rational(MultiplicityVariety::empty(), Degree::NegInf, upsilon);
    }
    let l_zeros = parts.iter().fold(MultiplicityVariety::empty(), |acc, x| acc.max(&x.p_zeros));
    let l = l_zeros.normalized_polynomial();
    let deg_l = l_zeros.total_multiplicity() as isize;
    // Over the common denominator L the polynomial parts span (L/p_i)·ℂ[z]_{n_i}.
    let mut vectors: Vec<Polynomial> = Vec::new();
    let mut closed_form = -1isize;
    for x in &parts {
        let n = x.n.finite().expect("finite");
        let cofactor = l.div_exact(&x.p()).ok_or_else(|| Error::Internal("lcm not divisible".into()))?;
        for j in 0..=n {
            vectors.push(cofactor.shift_up(j));
        }
        closed_form = closed_form.max(n as isize + deg_l - x.deg_p());
    }
    let width = vectors.iter().map(|v| v.coeffs().len()).max().unwrap_or(0);
    let rows: Vec<Vec<GaussianRational>> = vectors.iter().map(|v| (0..width).map(|k| v.coeff(k)).collect()).collect();
    let span = rank(&rows) as isize;
    if span - 1 != closed_form || width as isize != closed_form + 1 {
        return Err(Error::Internal(format!("join rank {span} disagrees with closed form n = {closed_form}")));
    }
    SubspaceDescriptor::rational(l_zeros, Degree::Finite(closed_form as usize), upsilon)
}

/// Factored display of `p`: `1`, `(1-z)`, `(1-z/2)^2*(1+z/(1/3))`, …
pub fn format_p(p_zeros: &MultiplicityVariety) -> String {
    if p_zeros.is_empty() {
        return "1".to_string();
    }
    p_zeros
        .entries()
        .iter()
        .map(|(x, m)| {
            let factor = format_factor(x);
            if *m == 1 {
                factor
            } else {
                format!("{factor}^{m}")
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

fn format_factor(x: &GaussianRational) -> String {
    if x.is_real() && x.re().is_integer() {
        let v = x.re().to_integer();
        let abs = if v < 0.into() { -v.clone() } else { v.clone() };
        let sign = if v < 0.into() { '+' } else { '-' };
        if abs == 1.into() {
            format!("(1{sign}z)")
        } else {
            format!("(1{sign}z/{abs})")
        }
    } else {
        format!("(1-z/({x}))")
    }
}

impl fmt::Display for SubspaceDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Rational(rt) => write!(f, "S(p={}, n={}, upsilon={})", format_p(&rt.p_zeros), rt.n, rt.upsilon),
            Self::ZeroVariety(w) => write!(f, "S(W={w})"),
            Self::Full => write!(f, "H(Omega)"),
            Self::Trivial => write!(f, "{{0}}"),
        }
    }
}
