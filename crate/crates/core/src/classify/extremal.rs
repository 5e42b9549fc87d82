//! Finite-scale extremal functions: combinations that vanish to exactly the
//! prescribed order at finitely many points and nowhere else among a given
//! avoid set.
//!
//! Under the generic-unit semantics the `m`-th local coefficient of
//! `A + g0·B` at `λ` is `a + g1(λ)·b` with `(a, b)` read from `A` and `q·B`,
//! so it vanishes exactly when both entries of the pair do. Adding `c·h` to
//! a function whose pair is nonzero kills the pair for at most one `c`.

use num_traits::Zero;

use crate::algebra::GaussianRational;
use crate::domain::SymFunction;
use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExtremalSpec {
    /// Points where the result must vanish to exactly the given order.
    pub zeros: Vec<(GaussianRational, usize)>,
    /// Points where the result must not vanish.
    pub avoid: Vec<GaussianRational>,
}

impl ExtremalSpec {
    fn constraints(&self) -> impl Iterator<Item = (&GaussianRational, usize)> {
        self.zeros.iter().map(|(x, m)| (x, *m)).chain(self.avoid.iter().map(|x| (x, 0)))
    }

    /// First constraint `f` violates, as an [`Error::Infeasible`].
    pub fn check(&self, f: &SymFunction) -> Result<()> {
        for (x, m) in self.constraints() {
            if !f.ctx().omega().contains(x) {
                return Err(Error::Infeasible { point: x.clone(), reason: "point lies outside the domain".into() });
            }
            match f.zero_order_at(x) {
                Some(k) if k == m => {}
                Some(k) => {
                    return Err(Error::Infeasible { point: x.clone(), reason: format!("order {k}, expected {m}") })
                }
                None => {
                    return Err(Error::Infeasible { point: x.clone(), reason: "function vanishes identically".into() })
                }
            }
        }
        Ok(())
    }
}

type Pair = (GaussianRational, GaussianRational);

fn pair_is_zero(p: &Pair) -> bool {
    p.0.is_zero() && p.1.is_zero()
}

/// The unique `c` with `base + c·step = (0, 0)`, if any.
fn killing_scalar(base: &Pair, step: &Pair) -> Option<GaussianRational> {
    if pair_is_zero(step) {
        return None;
    }
    let (c, other_base, other_step) = if !step.0.is_zero() {
        (-(&base.0 / &step.0), &base.1, &step.1)
    } else {
        (-(&base.1 / &step.1), &base.0, &step.0)
    };
    (other_base + &(&c * other_step)).is_zero().then_some(c)
}

fn smallest_positive_outside(bad: &[GaussianRational]) -> GaussianRational {
    (1i64..).map(GaussianRational::from_int).find(|c| !bad.contains(c)).expect("finite bad set")
}

fn ensure_order_at_least(f: &SymFunction, x: &GaussianRational, m: usize) -> Result<()> {
    match f.zero_order_at(x) {
        Some(k) if k < m => {
            Err(Error::Infeasible { point: x.clone(), reason: format!("a summand vanishes only to order {k} < {m}") })
        }
        _ => Ok(()),
    }
}

/// Smallest positive integer `α` with `f + α·v` meeting the spec.
pub fn extremal_alpha(f: &SymFunction, v: &SymFunction, spec: &ExtremalSpec) -> Result<GaussianRational> {
    spec.check(v)?;
    let mut bad = Vec::new();
    if !f.is_zero() {
        for (x, m) in spec.constraints() {
            ensure_order_at_least(f, x, m)?;
            let step = v.local_pair(x, m)?;
            if let Some(c) = killing_scalar(&f.local_pair(x, m)?, &step) {
                bad.push(c);
            }
        }
    }
    let alpha = smallest_positive_outside(&bad);
    let w = f.add(&v.scale(&alpha));
    spec.check(&w).map_err(|e| Error::Internal(format!("alpha {alpha} failed re-verification: {e}")))?;
    Ok(alpha)
}

/// A combination `Σ c_i f_i` meeting the spec, with coefficients chosen
/// point by point: each new summand fixes the current point without undoing
/// any earlier one. Returns the combination and its coefficients.
pub fn extremal_combination(fs: &[SymFunction], spec: &ExtremalSpec) -> Result<(SymFunction, Vec<GaussianRational>)> {
    let Some(first) = fs.first() else {
        return Err(Error::Degenerate("no functions to combine".into()));
    };
    let mut coeffs = vec![GaussianRational::zero(); fs.len()];
    let mut w = first.scale(&GaussianRational::zero());
    let constraints: Vec<_> = spec.constraints().collect();
    for (idx, &(x, m)) in constraints.iter().enumerate() {
        for f in fs {
            ensure_order_at_least(f, x, m)?;
        }
        if !pair_is_zero(&w.local_pair(x, m)?) {
            continue;
        }
        let mut attainer = None;
        for (i, f) in fs.iter().enumerate() {
            if !f.is_zero() && !pair_is_zero(&f.local_pair(x, m)?) {
                attainer = Some(i);
                break;
            }
        }
        let Some(a) = attainer else {
            return Err(Error::Infeasible { point: x.clone(), reason: format!("no function has order exactly {m}") });
        };
        let mut bad = Vec::new();
        for &(y, k) in &constraints[..idx] {
            if let Some(c) = killing_scalar(&w.local_pair(y, k)?, &fs[a].local_pair(y, k)?) {
                bad.push(c);
            }
        }
        let c = smallest_positive_outside(&bad);
        w = w.add(&fs[a].scale(&c));
        coeffs[a] += &c;
    }
    if w.is_zero() && !constraints.is_empty() {
        return Err(Error::Internal("combination vanished".into()));
    }
    spec.check(&w).map_err(|e| Error::Internal(format!("combination failed re-verification: {e}")))?;
    Ok((w, coeffs))
}
