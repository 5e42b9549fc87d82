//! Polynomials in the generalized backward shift `D = D0,g0` and their action
//! on `g0`-multiples.
//!
//! On `f = g0·R` the operator acts through `R` alone:
//! `D(g0·R) = g0·(R − R(0))/z` because `g0(0) = 1`. Everything here therefore
//! works on the rational factor and rewraps it.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::algebra::{linear_roots, GaussianRational, Polynomial, RationalFunction};
use crate::classify::canonical_decomposition;
use crate::domain::{G0Context, GMultiple};
use crate::error::{Error, Result};
use crate::oracle::linalg::solve;

/// `Σ a_j D^j`, no trailing zero coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OperatorPolynomial {
    coeffs: Vec<GaussianRational>,
}

impl OperatorPolynomial {
    pub fn new(mut coeffs: Vec<GaussianRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn identity() -> Self {
        Self::new(vec![GaussianRational::one()])
    }

    pub fn zero() -> Self {
        Self::new(Vec::new())
    }

    /// `D^k`.
    pub fn power_of_d(k: usize) -> Self {
        let mut coeffs = vec![GaussianRational::zero(); k + 1];
        coeffs[k] = GaussianRational::one();
        Self::new(coeffs)
    }

    /// `D − c·I`.
    pub fn shifted(c: &GaussianRational) -> Self {
        Self::new(vec![-c, GaussianRational::one()])
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree in `D`; `None` for the zero operator.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn compose(&self, other: &Self) -> Self {
        Self::new((self.as_poly() * other.as_poly()).coeffs().to_vec())
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new((self.as_poly() + other.as_poly()).coeffs().to_vec())
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, k: usize) -> Self {
        Self::new(self.as_poly().pow(k as u32).coeffs().to_vec())
    }

    fn as_poly(&self) -> Polynomial {
        Polynomial::new(self.coeffs.clone())
    }
}

impl fmt::Display for OperatorPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Coefficients never contain `z`, so the variable can be renamed textually.
        write!(f, "{}", self.as_poly().to_string().replace('z', "D"))
    }
}

/// `(R − R(0))/z` on a rational function holomorphic at 0.
pub fn backward_shift(r: &RationalFunction) -> RationalFunction {
    if r.is_zero() {
        return RationalFunction::zero();
    }
    let den = r.den();
    let c = &r.num().coeff(0) / &den.coeff(0);
    let num = (r.num() - &den.scale(&c)).shift_down(1);
    if num.is_zero() {
        return RationalFunction::zero();
    }
    // gcd(num − c·den, den) = gcd(num, den) = 1 and z ∤ den, so the quotient stays reduced.
    RationalFunction::from_canonical(num, den.clone())
}

/// `P(D0)` on a rational function holomorphic at 0.
pub fn backward_shift_op(op: &OperatorPolynomial, r: &RationalFunction) -> RationalFunction {
    if op.is_zero() || r.is_zero() {
        return RationalFunction::zero();
    }
    // Every iterate shares the denominator of r, so only numerators are summed.
    let den = r.den();
    let d0_inv = den.coeff(0).inv().expect("holomorphic at 0");
    let mut current = r.num().clone();
    let mut acc = Polynomial::zero();
    for (j, a) in op.coeffs().iter().enumerate() {
        if j > 0 {
            let c = &current.coeff(0) * &d0_inv;
            current = (&current - &den.scale(&c)).shift_down(1);
        }
        if !a.is_zero() {
            acc = &acc + &current.scale(a);
        }
    }
    RationalFunction::new(acc, den.clone()).expect("nonzero denominator")
}

/// One application of `D0,g0`.
pub fn apply(f: &GMultiple) -> GMultiple {
    GMultiple::from_trusted(f.ctx().clone(), backward_shift(f.r()))
}

pub fn apply_times(f: &GMultiple, n: usize) -> GMultiple {
    apply_op(&OperatorPolynomial::power_of_d(n), f)
}

pub fn apply_op(op: &OperatorPolynomial, f: &GMultiple) -> GMultiple {
    GMultiple::from_trusted(f.ctx().clone(), backward_shift_op(op, f.r()))
}

/// `{g0·t^j : j < n}`, a basis of the kernel of `D^n`.
pub fn kernel_basis(ctx: &Arc<G0Context>, n: usize) -> Vec<GMultiple> {
    (0..n)
        .map(|j| GMultiple::from_trusted(ctx.clone(), Polynomial::monomial(GaussianRational::one(), j).into()))
        .collect()
}

/// `Π (D − I/λ)^k` over the given poles.
pub fn annihilator(poles: &[(GaussianRational, usize)]) -> Result<OperatorPolynomial> {
    let mut op = OperatorPolynomial::identity();
    for (idx, (lambda, k)) in poles.iter().enumerate() {
        if poles[..idx].iter().any(|(mu, _)| mu == lambda) {
            return Err(Error::RepeatedPole(lambda.clone()));
        }
        let inv = lambda.inv().ok_or_else(|| Error::ZeroPoint(lambda.clone()))?;
        op = op.compose(&OperatorPolynomial::shifted(&inv).pow(*k));
    }
    Ok(op)
}

/// Coordinates of `r` in `q_{λ,1..k}` (index `j − 1` holds the `q_{λ,j}` coefficient),
/// or `None` if `r` is not in that span.
pub fn single_pole_coords(r: &RationalFunction, lambda: &GaussianRational, k: usize) -> Option<Vec<GaussianRational>> {
    if r.is_zero() {
        return Some(vec![GaussianRational::zero(); k]);
    }
    let full = Polynomial::linear(lambda).pow(k as u32);
    let cofactor = full.div_exact(r.den())?;
    let num = (r.num() * &cofactor).shift_arg(lambda);
    if num.degree_or_minus_one() >= k as isize {
        return None;
    }
    // r = Σ c_i s^{i−k} with s = t − λ, so q_{λ,j} carries c_{k−j}.
    Some((1..=k).map(|j| num.coeff(k - j)).collect())
}

fn single_pole(r: &RationalFunction) -> Result<(GaussianRational, usize)> {
    if r.is_zero() || !r.is_proper() {
        return Err(Error::Degenerate("expected a nonzero proper fraction".into()));
    }
    let roots = linear_roots(r.den())?;
    match roots.as_slice() {
        [(lambda, k)] => Ok((lambda.clone(), *k)),
        _ => Err(Error::Degenerate(format!("expected a single pole, found {}", roots.len()))),
    }
}

/// An operator `A` of degree `< k` with `A(g0·R) = g0·q_{λ,m}`, where `R` is a
/// proper fraction with the single pole `λ` of top order `k`.
///
/// Solved exactly on the Krylov basis `R, D R, …, D^{k−1} R` of `Q(λ,k)`.
pub fn extractor(r: &RationalFunction, m: usize) -> Result<OperatorPolynomial> {
    let (lambda, k) = single_pole(r)?;
    if lambda.is_zero() {
        return Err(Error::ZeroPoint(lambda));
    }
    if m == 0 || m > k {
        return Err(Error::NotAPole { point: lambda, order: m });
    }
    let mut columns = Vec::with_capacity(k);
    let mut it = r.clone();
    for _ in 0..k {
        columns
            .push(single_pole_coords(&it, &lambda, k).ok_or_else(|| Error::Internal("Q(λ,k) not invariant".into()))?);
        it = backward_shift(&it);
    }
    let matrix: Vec<Vec<GaussianRational>> =
        (0..k).map(|row| columns.iter().map(|c| c[row].clone()).collect()).collect();
    let mut rhs = vec![GaussianRational::zero(); k];
    rhs[m - 1] = GaussianRational::one();
    let a = solve(&matrix, &rhs).ok_or_else(|| Error::Degenerate("top coefficient vanishes".into()))?;
    let op = OperatorPolynomial::new(a);
    let target = RationalFunction::elementary(&lambda, m as u32);
    if backward_shift_op(&op, r) != target {
        return Err(Error::Internal("extractor failed verification".into()));
    }
    Ok(op)
}

/// Reduces `f` to `g0·q_{λ,m}`: kills the polynomial part with a power of `D`,
/// annihilates every other pole, then extracts the target order.
pub fn isolate(f: &GMultiple, lambda: &GaussianRational, m: usize) -> Result<(OperatorPolynomial, GMultiple)> {
    let not_a_pole = || Error::NotAPole { point: lambda.clone(), order: m };
    if f.is_zero() || m == 0 {
        return Err(not_a_pole());
    }
    let (poly, _) = f.r().split_polynomial_part();
    let poles = linear_roots(f.r().den())?;
    let k = poles.iter().find(|(p, _)| p == lambda).map(|(_, k)| *k).ok_or_else(not_a_pole)?;
    if k < m {
        return Err(not_a_pole());
    }
    let foreign: Vec<_> = poles.into_iter().filter(|(p, _)| p != lambda).collect();
    let mut op = annihilator(&foreign)?;
    if !poly.is_zero() {
        op = op.compose(&OperatorPolynomial::power_of_d(poly.degree_or_minus_one() as usize + 1));
    }
    let reduced = backward_shift_op(&op, f.r());
    let op = extractor(&reduced, m)?.compose(&op);
    let result = apply_op(&op, f);
    if result.r() != &RationalFunction::elementary(lambda, m as u32) {
        return Err(Error::Internal("isolate failed verification".into()));
    }
    Ok((op, result))
}

/// An operator `A` with `A(f) = (g0/p)·r̃`, `deg r̃ = max(deg r, deg p − 1)`,
/// where `f = (g0/p)·r + g0·u/v` is the canonical decomposition.
pub fn degree_raise(f: &GMultiple) -> Result<(OperatorPolynomial, GMultiple)> {
    if f.is_zero() {
        return Err(Error::ZeroFunction);
    }
    let dec = canonical_decomposition(f)?;
    if dec.r.is_zero() {
        return Err(Error::Degenerate("no polynomial part to raise".into()));
    }
    let target = dec.r.degree_or_minus_one().max(dec.p.degree_or_minus_one() - 1);
    let outside = if dec.v.is_one() { Vec::new() } else { linear_roots(&dec.v)? };
    let mut op = annihilator(&outside)?;
    let r2 = numerator_over(&backward_shift_op(&op, f.r()), &dec.p)?;
    if r2.degree_or_minus_one() < dec.p.degree_or_minus_one() - 1 {
        // r2 = t^s·r0 with r0(0) ≠ 0: D^s strips t^s, one more step lifts the degree to deg p − 1.
        let s = r2.low_order().expect("annihilator is injective here");
        op = OperatorPolynomial::power_of_d(s + 1).compose(&op);
    }
    let result = apply_op(&op, f);
    let r_tilde = numerator_over(result.r(), &dec.p)?;
    if r_tilde.degree_or_minus_one() != target {
        return Err(Error::Internal(format!("degree raise reached {} instead of {target}", r_tilde.degree())));
    }
    Ok((op, result))
}

/// The polynomial `R·p`, failing if `R` has poles outside `Z(p)`.
fn numerator_over(r: &RationalFunction, p: &Polynomial) -> Result<Polynomial> {
    let prod = r.mul_poly(p);
    if !prod.is_polynomial() {
        return Err(Error::Internal(format!("{r} has poles beyond {p}")));
    }
    Ok(prod.num().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::Omega;
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn g(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    fn gr(n: i64, d: i64) -> GaussianRational {
        GaussianRational::from_ratio(n, d)
    }

    fn q(lambda: i64, k: u32) -> RationalFunction {
        RationalFunction::elementary(&g(lambda), k)
    }

    fn t(k: usize) -> RationalFunction {
        Polynomial::monomial(GaussianRational::one(), k).into()
    }

    /// A small disk, so every sampled pole lies outside the domain.
    fn ctx() -> Arc<G0Context> {
        G0Context::new(Omega::disk(BigRational::new(1.into(), 4.into())).unwrap(), vec![], crate::domain::Unit::Generic)
            .unwrap()
    }

    fn gm(r: RationalFunction) -> GMultiple {
        GMultiple::new(ctx(), r).unwrap()
    }

    #[test]
    fn apply_examples() {
        assert!(apply(&gm(RationalFunction::one())).is_zero());
        assert_eq!(apply(&gm(q(2, 1))).r(), &q(2, 1).scale(&gr(1, 2)));
        assert_eq!(apply(&gm(t(3))).r(), &t(2));
    }

    #[test]
    fn apply_op_examples() {
        let p = OperatorPolynomial::shifted(&gr(1, 3));
        assert!(apply_op(&p, &gm(q(3, 1))).is_zero());
        let d2 = OperatorPolynomial::new(vec![g(0), g(0), g(1)]);
        assert_eq!(apply_op(&d2, &gm(t(2))).r(), &RationalFunction::one());
        let p = OperatorPolynomial::shifted(&gr(1, 2));
        let expected = q(1, 2).scale(&gr(1, 2)).sub(&q(1, 1));
        assert_eq!(apply_op(&p, &gm(q(1, 2))).r(), &expected);
    }

    #[test]
    fn kernel() {
        for n in 1..=4 {
            let basis = kernel_basis(&ctx(), n);
            assert_eq!(basis.len(), n);
            for f in &basis {
                assert!(apply_times(f, n).is_zero());
            }
            assert!(!apply_times(basis.last().unwrap(), n - 1).is_zero());
        }
    }

    #[test]
    fn annihilators() {
        let a = annihilator(&[(g(3), 1)]).unwrap();
        assert_eq!(a, OperatorPolynomial::shifted(&gr(1, 3)));
        assert!(apply_op(&a, &gm(q(3, 1))).is_zero());
        let b = annihilator(&[(g(2), 2)]).unwrap();
        assert!(apply_op(&b, &gm(q(2, 1).scale(&g(5)).add(&q(2, 2).scale(&g(-7))))).is_zero());
        assert!(annihilator(&[]).unwrap().is_identity());
        assert_eq!(annihilator(&[(g(0), 1)]), Err(Error::ZeroPoint(g(0))));
    }

    #[test]
    fn extractor_examples() {
        assert!(extractor(&q(2, 1), 1).unwrap().is_identity());
        let r = q(2, 2).add(&q(2, 1));
        let a = extractor(&r, 1).unwrap();
        assert_eq!(backward_shift_op(&a, &r), q(2, 1));
        let r = q(1, 3).scale(&g(3));
        let a = extractor(&r, 2).unwrap();
        assert_eq!(backward_shift_op(&a, &r), q(1, 2));
        assert!(extractor(&q(2, 1).add(&q(3, 1)), 1).is_err());
    }

    #[test]
    fn isolate_examples() {
        let (_, out) = isolate(&gm(q(2, 1).add(&q(3, 1))), &g(2), 1).unwrap();
        assert_eq!(out.r(), &q(2, 1));
        let (op, out) = isolate(&gm(q(3, 1)), &g(3), 1).unwrap();
        assert!(op.is_identity());
        assert_eq!(out.r(), &q(3, 1));
        let (_, out) = isolate(&gm(q(2, 2).add(&q(3, 1)).add(&t(2))), &g(2), 1).unwrap();
        assert_eq!(out.r(), &q(2, 1));
        assert!(isolate(&gm(q(3, 1)), &g(3), 2).is_err());
        assert!(isolate(&gm(q(3, 1)), &g(4), 1).is_err());
    }

    fn disk(q_roots: Vec<(GaussianRational, usize)>) -> Arc<G0Context> {
        G0Context::new(Omega::disk(BigRational::from_integer(2.into())).unwrap(), q_roots, crate::domain::Unit::Generic)
            .unwrap()
    }

    #[test]
    fn degree_raise_examples() {
        let c = disk(vec![(g(1), 1)]);
        let f = GMultiple::new(
            c.clone(),
            RationalFunction::new(Polynomial::one(), Polynomial::from_ints(&[1, -1])).unwrap(),
        )
        .unwrap();
        let (op, out) = degree_raise(&f).unwrap();
        assert!(op.is_identity());
        assert_eq!(out, f);

        let c = G0Context::new(Omega::Plane, vec![(g(1), 1), (g(2), 1)], crate::domain::Unit::Generic).unwrap();
        let p = &Polynomial::from_ints(&[1, -1]) * &Polynomial::new(vec![g(1), gr(-1, 2)]);
        let f = GMultiple::new(c, RationalFunction::new(Polynomial::one(), p.clone()).unwrap()).unwrap();
        let (op, out) = degree_raise(&f).unwrap();
        assert_eq!(op, OperatorPolynomial::power_of_d(1));
        let r_tilde = out.r().mul_poly(&p);
        assert_eq!(r_tilde, Polynomial::new(vec![gr(3, 2), gr(-1, 2)]).into());

        let c = disk(vec![(g(1), 1)]);
        let r = t(1).div(&RationalFunction::from_polynomial(Polynomial::from_ints(&[1, -1]))).unwrap().add(&q(3, 1));
        let f = GMultiple::new(c, r).unwrap();
        let (_, out) = degree_raise(&f).unwrap();
        let dec = canonical_decomposition(&out).unwrap();
        assert_eq!(dec.p, Polynomial::from_ints(&[1, -1]));
        assert_eq!(dec.r.degree_or_minus_one(), 1);
        assert!(dec.u.is_zero());
    }

    fn nonzero_point() -> impl Strategy<Value = GaussianRational> {
        (-5i64..=5, 1i64..=3, -5i64..=5, 1i64..=3)
            .prop_map(|(a, b, c, d)| GaussianRational::from_parts(a, b, c, d))
            .prop_filter("nonzero", |x| !x.is_zero())
    }

    proptest! {
        #[test]
        fn alpha_coefficients(lambda in nonzero_point(), mu in nonzero_point(), k in 1usize..=6) {
            prop_assume!(lambda != mu);
            let f = gm(RationalFunction::elementary(&lambda, k as u32));
            let out = apply_op(&OperatorPolynomial::shifted(&mu.inv().unwrap()), &f);
            let coords = single_pole_coords(out.r(), &lambda, k).unwrap();
            let linv = lambda.inv().unwrap();
            prop_assert_eq!(&coords[k - 1], &(&linv - &mu.inv().unwrap()));
            for j in 1..k {
                let e = (k - j + 1) as u32;
                let sign = if (k - j) % 2 == 0 { g(1) } else { g(-1) };
                prop_assert_eq!(&coords[j - 1], &(&sign * &linv.pow(e)));
            }
        }

        #[test]
        fn nilpotent_on_q(lambda in nonzero_point(), n in 1usize..=6) {
            let op = OperatorPolynomial::shifted(&lambda.inv().unwrap()).pow(n);
            prop_assert!(apply_op(&op, &gm(RationalFunction::elementary(&lambda, n as u32))).is_zero());
        }

        #[test]
        fn extractor_hits_every_order(lambda in nonzero_point(), coeffs in proptest::collection::vec(nonzero_point(), 1..=5)) {
            let k = coeffs.len();
            let r = coeffs.iter().enumerate().fold(RationalFunction::zero(), |acc, (j, c)| {
                acc.add(&RationalFunction::elementary(&lambda, j as u32 + 1).scale(c))
            });
            for m in 1..=k {
                let a = extractor(&r, m).unwrap();
                prop_assert!(a.degree().unwrap() < k);
                prop_assert_eq!(backward_shift_op(&a, &r), RationalFunction::elementary(&lambda, m as u32));
            }
        }

        #[test]
        fn q_invariance_and_injectivity(lambda in nonzero_point(), mu in nonzero_point(), coeffs in proptest::collection::vec(nonzero_point(), 1..=4)) {
            prop_assume!(lambda != mu);
            let k = coeffs.len();
            let r = coeffs.iter().enumerate().fold(RationalFunction::zero(), |acc, (j, c)| {
                acc.add(&RationalFunction::elementary(&lambda, j as u32 + 1).scale(c))
            });
            prop_assert!(single_pole_coords(&backward_shift(&r), &lambda, k).is_some());
            let out = backward_shift_op(&OperatorPolynomial::shifted(&mu.inv().unwrap()), &r);
            prop_assert!(!out.is_zero());
        }
    }
}
