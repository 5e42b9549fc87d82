#![allow(dead_code)]

use std::sync::Arc;

use num_rational::BigRational;
use pommiez_core::algebra::{GaussianRational, Polynomial, RationalFunction};
use pommiez_core::domain::{G0Context, GMultiple, MultiplicityVariety, Omega, SymFunction, Unit};

pub fn g(n: i64) -> GaussianRational {
    GaussianRational::from_int(n)
}

pub fn gr(n: i64, d: i64) -> GaussianRational {
    GaussianRational::from_ratio(n, d)
}

pub fn poly(c: &[i64]) -> Polynomial {
    Polynomial::from_ints(c)
}

pub fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
    RationalFunction::new(poly(num), poly(den)).unwrap()
}

pub fn q(lambda: i64, k: u32) -> RationalFunction {
    RationalFunction::elementary(&g(lambda), k)
}

pub fn t(k: usize) -> RationalFunction {
    Polynomial::monomial(g(1), k).into()
}

pub fn disk(r: i64) -> Omega {
    Omega::disk(BigRational::from_integer(r.into())).unwrap()
}

pub fn ctx(omega: Omega, zeros: &[(i64, usize)]) -> Arc<G0Context> {
    G0Context::new(omega, zeros.iter().map(|(x, m)| (g(*x), *m)).collect(), Unit::Generic).unwrap()
}

pub fn variety(e: &[(i64, usize)]) -> MultiplicityVariety {
    MultiplicityVariety::new(e.iter().map(|(x, m)| (g(*x), *m)).collect()).unwrap()
}

pub fn gm(c: &Arc<G0Context>, r: RationalFunction) -> GMultiple {
    GMultiple::new(c.clone(), r).unwrap()
}

pub fn sym(c: &Arc<G0Context>, a: RationalFunction, b: RationalFunction) -> SymFunction {
    SymFunction::new(c.clone(), a, b).unwrap()
}

/// The running example: Ω = Disk(2), q = 1 − z, f = g0·(z/(1−z) + 1/(z−3)).
pub fn running_example() -> (Arc<G0Context>, GMultiple) {
    let c = ctx(disk(2), &[(1, 1)]);
    let r = rf(&[0, 1], &[1, -1]).add(&q(3, 1));
    let f = gm(&c, r);
    (c, f)
}
