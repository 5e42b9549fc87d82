//! The region Ω, the context `g0 = q·g1`, multiplicity varieties and the two
//! symbolic function classes `g0·R` and `A + g0·B`.

use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::{from_roots, linear_roots, order_at, GaussianRational, Polynomial, RationalFunction};
use crate::error::{Error, Result};
use crate::jet::Jet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Omega {
    Plane,
    Disk(BigRational),
}

impl Omega {
    pub fn disk(radius: BigRational) -> Result<Self> {
        if !radius.is_positive() {
            return Err(Error::InvalidContext(format!("disk radius must be positive, got {radius}")));
        }
        Ok(Omega::Disk(radius))
    }

    /// `|z|² < r²`, exactly.
    pub fn contains(&self, z: &GaussianRational) -> bool {
        match self {
            Omega::Plane => true,
            Omega::Disk(r) => z.norm_sqr() < r * r,
        }
    }

    pub fn is_plane(&self) -> bool {
        matches!(self, Omega::Plane)
    }
}

impl fmt::Display for Omega {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Omega::Plane => write!(f, "plane"),
            Omega::Disk(r) => write!(f, "disk:{r}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UnitPreset {
    /// `exp(c·z)`
    Exp(GaussianRational),
    /// `1/(1 − c·z)`
    Geometric(GaussianRational),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Unit {
    /// A formal zero-free unit with transcendental values; no cancellation
    /// between `A` and `g0·B` is ever possible.
    Generic,
    Concrete {
        preset: UnitPreset,
        order: usize,
    },
}

impl Unit {
    pub fn jet(&self) -> Result<Jet> {
        match self {
            Unit::Generic => Err(Error::NoConcreteUnit),
            Unit::Concrete { preset: UnitPreset::Exp(c), order } => Ok(Jet::exp_unit(c, *order)),
            Unit::Concrete { preset: UnitPreset::Geometric(c), order } => Ok(Jet::geometric_unit(c, *order)),
        }
    }

    /// The unit as a rational function, when it is one.
    pub fn as_rational(&self) -> Option<RationalFunction> {
        match self {
            Unit::Concrete { preset: UnitPreset::Geometric(c), .. } => Some(
                RationalFunction::new(Polynomial::one(), Polynomial::new(vec![GaussianRational::one(), -c]))
                    .expect("nonzero denominator"),
            ),
            Unit::Concrete { preset: UnitPreset::Exp(c), .. } if c.is_zero() => Some(RationalFunction::one()),
            _ => None,
        }
    }
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Unit::Generic => write!(f, "generic"),
            Unit::Concrete { preset: UnitPreset::Exp(c), order } => write!(f, "exp:{c}:{order}"),
            Unit::Concrete { preset: UnitPreset::Geometric(c), order } => write!(f, "geom:{c}:{order}"),
        }
    }
}

/// Finite set of `(point, multiplicity)` pairs in canonical point order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct MultiplicityVariety {
    entries: Vec<(GaussianRational, usize)>,
}

impl MultiplicityVariety {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Rejects repeated points and zero multiplicities.
    pub fn new(entries: Vec<(GaussianRational, usize)>) -> Result<Self> {
        let mut entries = entries;
        entries.sort_by(|a, b| a.0.canonical_cmp(&b.0));
        for w in entries.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::InvalidDescriptor(format!("point {} repeats", w[0].0)));
            }
        }
        if let Some((p, _)) = entries.iter().find(|(_, m)| *m == 0) {
            return Err(Error::InvalidDescriptor(format!("point {p} has multiplicity 0")));
        }
        Ok(Self { entries })
    }

    /// Builds from entries known to be distinct, dropping zero multiplicities.
    fn from_entries(mut entries: Vec<(GaussianRational, usize)>) -> Self {
        entries.retain(|(_, m)| *m > 0);
        entries.sort_by(|a, b| a.0.canonical_cmp(&b.0));
        Self { entries }
    }

    pub fn entries(&self) -> &[(GaussianRational, usize)] {
        &self.entries
    }

    pub fn points(&self) -> impl Iterator<Item = &GaussianRational> {
        self.entries.iter().map(|(p, _)| p)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn total_multiplicity(&self) -> usize {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    pub fn multiplicity(&self, point: &GaussianRational) -> usize {
        self.entries.iter().find(|(p, _)| p == point).map_or(0, |(_, m)| *m)
    }

    /// `self ≺ other`: every point of `self` occurs in `other` at least as often.
    pub fn prec(&self, other: &Self) -> bool {
        self.entries.iter().all(|(p, m)| other.multiplicity(p) >= *m)
    }

    pub fn min(&self, other: &Self) -> Self {
        Self::from_entries(self.entries.iter().map(|(p, m)| (p.clone(), (*m).min(other.multiplicity(p)))).collect())
    }

    pub fn max(&self, other: &Self) -> Self {
        let mut entries: Vec<_> =
            self.entries.iter().map(|(p, m)| (p.clone(), (*m).max(other.multiplicity(p)))).collect();
        for (p, m) in &other.entries {
            if self.multiplicity(p) == 0 {
                entries.push((p.clone(), *m));
            }
        }
        Self::from_entries(entries)
    }

    /// Pointwise `self − other`, clamped at zero.
    pub fn saturating_sub(&self, other: &Self) -> Self {
        Self::from_entries(
            self.entries.iter().map(|(p, m)| (p.clone(), m.saturating_sub(other.multiplicity(p)))).collect(),
        )
    }

    /// `Π (1 − z/λ)^m`; every point must be nonzero.
    pub fn normalized_polynomial(&self) -> Polynomial {
        normalized_product(&self.entries)
    }
}

/// `Π (1 − z/λ)^m` for nonzero points, so the value at 0 is 1.
pub fn normalized_product(entries: &[(GaussianRational, usize)]) -> Polynomial {
    let p = from_roots(entries.iter().map(|(r, m)| (r, *m)));
    let c0 = p.coeff(0);
    p.scale(&c0.inv().expect("points must be nonzero"))
}

impl fmt::Display for MultiplicityVariety {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (p, m)) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({p}, {m})")?;
        }
        write!(f, "}}")
    }
}

/// The pair (Ω, g0 = q·g1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct G0Context {
    omega: Omega,
    factors: MultiplicityVariety,
    zeros: MultiplicityVariety,
    q: Polynomial,
    unit: Unit,
}

impl G0Context {
    /// Repeated roots are merged by adding multiplicities. Roots outside Ω
    /// stay in `q` but are not zeros of `g0` on Ω.
    pub fn new(omega: Omega, q_factors: Vec<(GaussianRational, usize)>, unit: Unit) -> Result<Arc<Self>> {
        let mut merged: Vec<(GaussianRational, usize)> = Vec::new();
        for (root, m) in q_factors {
            if m == 0 {
                continue;
            }
            if root.is_zero() {
                return Err(Error::InvalidContext("q must not vanish at 0".into()));
            }
            match merged.iter_mut().find(|(r, _)| *r == root) {
                Some((_, k)) => *k += m,
                None => merged.push((root, m)),
            }
        }
        if let Unit::Concrete { preset: UnitPreset::Geometric(c), .. } = &unit {
            match &omega {
                Omega::Plane if !c.is_zero() => {
                    return Err(Error::InvalidContext("1/(1 - c*z) has a pole in the plane".into()))
                }
                Omega::Disk(r) if c.norm_sqr() * r * r > BigRational::one() => {
                    return Err(Error::InvalidContext(format!("1/(1 - ({c})*z) has a pole inside {omega}")))
                }
                _ => {}
            }
        }
        let factors = MultiplicityVariety::from_entries(merged);
        let zeros = MultiplicityVariety::from_entries(
            factors.entries().iter().filter(|(x, _)| omega.contains(x)).cloned().collect(),
        );
        let q = factors.normalized_polynomial();
        Ok(Arc::new(Self { omega, factors, zeros, q, unit }))
    }

    /// `g0 = g1` on the plane with a generic unit.
    pub fn generic_plane() -> Arc<Self> {
        Self::new(Omega::Plane, Vec::new(), Unit::Generic).expect("valid context")
    }

    pub fn omega(&self) -> &Omega {
        &self.omega
    }

    pub fn unit(&self) -> &Unit {
        &self.unit
    }

    /// The zero part `q`, normalized by `q(0) = 1`.
    pub fn q(&self) -> &Polynomial {
        &self.q
    }

    /// All roots of `q`, inside Ω or not.
    pub fn q_factors(&self) -> &MultiplicityVariety {
        &self.factors
    }

    /// `W(g0)`: the zeros of `q` inside Ω.
    pub fn zeros(&self) -> &MultiplicityVariety {
        &self.zeros
    }

    /// `m(λ, q)`, counting roots outside Ω too.
    pub fn q_multiplicity(&self, lambda: &GaussianRational) -> usize {
        self.factors.multiplicity(lambda)
    }

    pub fn g0_jet(&self) -> Result<Jet> {
        let g1 = self.unit.jet()?;
        Ok(Jet::of_polynomial(&self.q, g1.order()).mul(&g1))
    }

    /// Same Ω and q with a different unit.
    pub fn with_unit(&self, unit: Unit) -> Result<Arc<Self>> {
        Self::new(self.omega.clone(), self.factors.entries().to_vec(), unit)
    }
}

fn check_pole_conditions(ctx: &G0Context, r: &RationalFunction, extra_zeros: bool) -> Result<()> {
    if r.is_zero() || r.den().is_one() {
        return Ok(());
    }
    for (pole, ord) in linear_roots(r.den())? {
        if pole.is_zero() {
            return Err(Error::PoleAtOrigin);
        }
        let allowance = if extra_zeros { ctx.q_multiplicity(&pole) } else { 0 };
        if ctx.omega.contains(&pole) && ord > allowance {
            return Err(Error::PoleInOmega { pole, order: ord });
        }
    }
    Ok(())
}

/// `f = g0·R`, holomorphic on Ω.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GMultiple {
    ctx: Arc<G0Context>,
    r: RationalFunction,
}

impl GMultiple {
    pub fn new(ctx: Arc<G0Context>, r: RationalFunction) -> Result<Self> {
        check_pole_conditions(&ctx, &r, true)?;
        Ok(Self { ctx, r })
    }

    /// Skips validation; callers guarantee the holomorphy invariant.
    pub(crate) fn from_trusted(ctx: Arc<G0Context>, r: RationalFunction) -> Self {
        Self { ctx, r }
    }

    pub fn zero(ctx: Arc<G0Context>) -> Self {
        Self { ctx, r: RationalFunction::zero() }
    }

    pub fn ctx(&self) -> &Arc<G0Context> {
        &self.ctx
    }

    pub fn r(&self) -> &RationalFunction {
        &self.r
    }

    pub fn is_zero(&self) -> bool {
        self.r.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_trusted(self.ctx.clone(), self.r.add(&other.r))
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::from_trusted(self.ctx.clone(), self.r.sub(&other.r))
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self::from_trusted(self.ctx.clone(), self.r.scale(c))
    }

    /// Zero order at a point of Ω, `None` for the zero function.
    pub fn zero_order_at(&self, lambda: &GaussianRational) -> Option<usize> {
        let ord = order_at(&self.r, lambda).ok()?;
        let m = self.ctx.q_multiplicity(lambda) as isize + ord;
        debug_assert!(m >= 0, "holomorphy invariant");
        Some(m.max(0) as usize)
    }

    pub fn zero_variety_in_omega(&self) -> Result<MultiplicityVariety> {
        SymFunction::from(self.clone()).zero_variety_in_omega()
    }

    pub fn jet(&self) -> Result<Jet> {
        let g0 = self.ctx.g0_jet()?;
        Ok(g0.mul(&Jet::of_rational(&self.r, g0.order())?))
    }
}

impl fmt::Display for GMultiple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g0*({})", self.r)
    }
}

/// `f = A + g0·B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFunction {
    ctx: Arc<G0Context>,
    a: RationalFunction,
    b: RationalFunction,
}

impl SymFunction {
    pub fn new(ctx: Arc<G0Context>, a: RationalFunction, b: RationalFunction) -> Result<Self> {
        check_pole_conditions(&ctx, &a, false)?;
        check_pole_conditions(&ctx, &b, true)?;
        Ok(Self { ctx, a, b })
    }

    pub fn ctx(&self) -> &Arc<G0Context> {
        &self.ctx
    }

    pub fn a(&self) -> &RationalFunction {
        &self.a
    }

    pub fn b(&self) -> &RationalFunction {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// `Some(g0·B)` exactly when `A = 0`.
    pub fn as_multiple(&self) -> Option<GMultiple> {
        self.a.is_zero().then(|| GMultiple::from_trusted(self.ctx.clone(), self.b.clone()))
    }

    pub fn add(&self, other: &Self) -> Self {
        Self { ctx: self.ctx.clone(), a: self.a.add(&other.a), b: self.b.add(&other.b) }
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self { ctx: self.ctx.clone(), a: self.a.scale(c), b: self.b.scale(c) }
    }

    /// Zero order at a point of Ω under generic-unit semantics:
    /// `min(ord(A), m(λ,q) + ord(B))`. `None` for the zero function.
    pub fn zero_order_at(&self, lambda: &GaussianRational) -> Option<usize> {
        let from_a = order_at(&self.a, lambda).ok();
        let from_b = order_at(&self.b, lambda).ok().map(|o| self.ctx.q_multiplicity(lambda) as isize + o);
        let m = match (from_a, from_b) {
            (Some(x), Some(y)) => x.min(y),
            (Some(x), None) | (None, Some(x)) => x,
            (None, None) => return None,
        };
        Some(m.max(0) as usize)
    }

    /// Zero variety of `f` restricted to `Z(q)`.
    pub fn zero_variety_in_omega(&self) -> Result<MultiplicityVariety> {
        if self.is_zero() {
            return Err(Error::ZeroFunction);
        }
        Ok(MultiplicityVariety::from_entries(
            self.ctx.zeros.points().map(|p| (p.clone(), self.zero_order_at(p).expect("nonzero function"))).collect(),
        ))
    }

    /// Coefficients of `(z − λ)^m` in `A` and in `q·B`: under the generic
    /// semantics the `m`-th local coefficient of `f` is `a + g1(λ)·b`.
    pub fn local_pair(&self, lambda: &GaussianRational, m: usize) -> Result<(GaussianRational, GaussianRational)> {
        let a = crate::algebra::taylor_at(&self.a, lambda, m + 1)?.swap_remove(m);
        let qb = self.b.mul_poly(&self.ctx.q);
        let b = crate::algebra::taylor_at(&qb, lambda, m + 1)?.swap_remove(m);
        Ok((a, b))
    }

    pub fn jet(&self) -> Result<Jet> {
        let g0 = self.ctx.g0_jet()?;
        let n = g0.order();
        Ok(Jet::of_rational(&self.a, n)?.add(&g0.mul(&Jet::of_rational(&self.b, n)?)))
    }
}

impl From<GMultiple> for SymFunction {
    fn from(f: GMultiple) -> Self {
        Self { ctx: f.ctx, a: RationalFunction::zero(), b: f.r }
    }
}

impl fmt::Display for SymFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + g0*({})", self.a, self.b)
    }
}
