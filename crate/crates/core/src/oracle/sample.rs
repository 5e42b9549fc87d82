//! Seeded random instances over small ℚ(i) grids.
//!
//! Scalars have real and imaginary parts `a/b` with `|a| ≤ 6`, `1 ≤ b ≤ 3`.
//! Poles outside a disk are Gaussian integers with `|re|, |im| ≤ 5` strictly
//! outside the closed disk. Everything is driven by a ChaCha8 stream so a
//! seed reproduces an instance on every platform.

use std::sync::Arc;

use num_rational::BigRational;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{GaussianRational, Polynomial, RationalFunction};
use crate::domain::{G0Context, GMultiple, Omega, SymFunction};
use crate::duality::CoFunction;

/// Shape limits for random `g0`-multiples.
#[derive(Clone, Copy, Debug)]
pub struct Shape {
    pub max_poly_degree: usize,
    pub max_outside_poles: usize,
    pub max_pole_order: usize,
}

impl Default for Shape {
    fn default() -> Self {
        Self { max_poly_degree: 4, max_outside_poles: 2, max_pole_order: 3 }
    }
}

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn chance(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }

    pub fn scalar(&mut self) -> GaussianRational {
        let (a, b) = (self.int(-6, 6), self.int(1, 3));
        let (c, d) = (self.int(-6, 6), self.int(1, 3));
        GaussianRational::from_parts(a, b, c, d)
    }

    pub fn nonzero_scalar(&mut self) -> GaussianRational {
        loop {
            let x = self.scalar();
            if !x.is_zero() {
                return x;
            }
        }
    }

    /// A nonzero scalar distinct from every entry of `avoid`.
    pub fn fresh_point(&mut self, avoid: &[GaussianRational]) -> GaussianRational {
        loop {
            let x = self.nonzero_scalar();
            if !avoid.contains(&x) {
                return x;
            }
        }
    }

    /// A Gaussian integer outside the closure of Ω, `None` for the plane.
    pub fn outside_point(&mut self, omega: &Omega, avoid: &[GaussianRational]) -> Option<GaussianRational> {
        let Omega::Disk(r) = omega else { return None };
        let r2 = r * r;
        let candidates: Vec<GaussianRational> = (-5i64..=5)
            .flat_map(|a| (-5i64..=5).map(move |b| GaussianRational::from_parts(a, 1, b, 1)))
            .filter(|x| x.norm_sqr() > r2 && !avoid.contains(x))
            .collect();
        candidates.choose(&mut self.rng).cloned()
    }

    pub fn polynomial(&mut self, max_degree: usize) -> Polynomial {
        let d = self.rng.gen_range(0..=max_degree);
        Polynomial::new((0..=d).map(|_| self.scalar()).collect())
    }

    /// `Σ_{k ≤ order} c_k q_{λ,k}` with a nonzero top coefficient.
    pub fn principal_part(&mut self, lambda: &GaussianRational, order: usize) -> RationalFunction {
        (1..=order).fold(RationalFunction::zero(), |acc, k| {
            let c = if k == order { self.nonzero_scalar() } else { self.scalar() };
            acc.add(&RationalFunction::elementary(lambda, k as u32).scale(&c))
        })
    }

    /// `g0·R` with a polynomial part, poles outside Ω and poles at zeros of
    /// `q` cancelled by their multiplicity.
    pub fn gmultiple(&mut self, ctx: &Arc<G0Context>, shape: Shape) -> GMultiple {
        let mut r = RationalFunction::from_polynomial(self.polynomial(shape.max_poly_degree));
        if self.chance(0.2) {
            r = RationalFunction::zero();
        }
        let mut used: Vec<GaussianRational> = Vec::new();
        for _ in 0..self.rng.gen_range(0..=shape.max_outside_poles) {
            if let Some(x) = self.outside_point(ctx.omega(), &used) {
                let order = self.rng.gen_range(1..=shape.max_pole_order);
                r = r.add(&self.principal_part(&x, order));
                used.push(x);
            }
        }
        for (rho, m) in ctx.zeros().entries().to_vec() {
            if self.chance(0.6) {
                let order = self.rng.gen_range(1..=m);
                r = r.add(&self.principal_part(&rho, order));
            }
        }
        GMultiple::new(ctx.clone(), r).expect("sampled instance is holomorphic on the domain")
    }

    /// `A + g0·B` with a polynomial `A`, sometimes forced to share zeros with `q`.
    pub fn symfunction(&mut self, ctx: &Arc<G0Context>, shape: Shape) -> SymFunction {
        let b = self.gmultiple(ctx, shape);
        let mut a = self.polynomial(3);
        for (rho, m) in ctx.zeros().entries().to_vec() {
            if self.chance(0.4) {
                let k = self.rng.gen_range(1..=m + 1) as u32;
                a = &a * &Polynomial::linear(&rho).pow(k);
            }
        }
        if a.is_zero() {
            a = Polynomial::one();
        }
        SymFunction::new(ctx.clone(), a.into(), b.r().clone()).expect("polynomial A-part")
    }

    pub fn cofunction(&mut self, max_len: usize) -> CoFunction {
        let len = self.rng.gen_range(1..=max_len);
        CoFunction::new((0..len).map(|_| self.scalar()).collect())
    }
}

/// The two domains and three zero patterns used by the classification suites.
pub fn standard_contexts() -> Vec<Arc<G0Context>> {
    let one = GaussianRational::from_int(1);
    let two = GaussianRational::from_int(2);
    let patterns = vec![vec![], vec![(one.clone(), 1)], vec![(one, 2), (two, 1)]];
    let disk = Omega::disk(BigRational::from_integer(2.into())).expect("positive radius");
    let mut out = Vec::new();
    for omega in [disk, Omega::Plane] {
        for zeros in &patterns {
            out.push(G0Context::new(omega.clone(), zeros.clone(), crate::domain::Unit::Generic).expect("valid"));
        }
    }
    out
}
