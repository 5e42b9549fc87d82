use std::fmt;

use crate::algebra::{order_at, RationalFunction};
use crate::classify::SubspaceDescriptor;
use crate::domain::{MultiplicityVariety, SymFunction};
use crate::error::Result;

use super::frame::CoordinateFrame;
use super::linalg::Echelon;
use super::orbit::{orbit_span, shift_with};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn push(&mut self, name: &'static str, witness: Option<String>) {
        self.checks.push(Check { name, passed: witness.is_none(), witness });
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed { "ok" } else { "FAIL" };
            match &c.witness {
                Some(w) => writeln!(f, "{status} {}: {w}", c.name)?,
                None => writeln!(f, "{status} {}", c.name)?,
            }
        }
        Ok(())
    }
}

/// Iterates used for the order sweep on infinite-dimensional descriptors.
const SWEEP_ITERATES: usize = 16;

/// Checks `d` against the orbit of `f`.
///
/// Finite descriptors: orbit rank equals the dimension, and the orbit span
/// and the generator span contain each other. Infinite descriptors: an order
/// sweep over the first orbit elements at every zero of `q`, with `g1`
/// realized as a rational function.
pub fn verify_descriptor(f: &SymFunction, d: &SubspaceDescriptor) -> Result<VerificationReport> {
    let mut report = VerificationReport::default();
    match d {
        SubspaceDescriptor::Rational(_) | SubspaceDescriptor::Trivial => {
            let Some(g) = f.as_multiple() else {
                report.push("g0-multiple", Some(format!("{f} has a nonzero A-part")));
                return Ok(report);
            };
            let orbit = orbit_span(&g, None)?;
            report.push("orbit stabilized", (!orbit.stabilized).then(|| format!("ranks {:?}", orbit.ranks)));
            let gens = d.generators(f.ctx());
            let dim = d.dimension().expect("finite");
            report.push(
                "rank equals dimension",
                (orbit.rank() != dim).then(|| format!("orbit rank {} vs dimension {dim}", orbit.rank())),
            );
            let frame = CoordinateFrame::covering(gens.iter().map(|x| x.r()).chain(std::iter::once(g.r())))?;
            let mut gen_span = Echelon::new(frame.dimension());
            for x in &gens {
                gen_span.insert(&frame.embed(x.r())?);
            }
            let mut orbit_echelon = Echelon::new(frame.dimension());
            for x in &orbit.basis {
                orbit_echelon.insert(&frame.embed(x.r())?);
            }
            let mut miss = None;
            for x in &orbit.basis {
                if !gen_span.contains(&frame.embed(x.r())?) {
                    miss = Some(format!("orbit element {x}"));
                    break;
                }
            }
            report.push("orbit inside descriptor", miss);
            let mut miss = None;
            for x in &gens {
                if !orbit_echelon.contains(&frame.embed(x.r())?) {
                    miss = Some(format!("generator {x}"));
                    break;
                }
            }
            report.push("descriptor inside orbit", miss);
        }
        SubspaceDescriptor::ZeroVariety(_) | SubspaceDescriptor::Full => {
            let w = match d {
                SubspaceDescriptor::ZeroVariety(w) => w.clone(),
                _ => MultiplicityVariety::empty(),
            };
            order_sweep(f, &w, &mut report);
        }
    }
    Ok(report)
}

fn order_sweep(f: &SymFunction, w: &MultiplicityVariety, report: &mut VerificationReport) {
    let ctx = f.ctx();
    let g1 = ctx.unit().as_rational().unwrap_or_else(RationalFunction::one);
    let g0 = g1.mul_poly(ctx.q());
    let mut x = f.a().add(&f.b().mul(&g0));
    let zeros = ctx.zeros();
    let mut min_order: Vec<Option<usize>> = vec![None; zeros.len()];
    let mut below = None;
    for _ in 0..SWEEP_ITERATES {
        if x.is_zero() {
            break;
        }
        for (slot, (lambda, _)) in min_order.iter_mut().zip(zeros.entries()) {
            let k = order_at(&x, lambda).expect("nonzero").max(0) as usize;
            if k < w.multiplicity(lambda) && below.is_none() {
                below = Some(format!("{x} vanishes to order {k} at {lambda}"));
            }
            *slot = Some(slot.map_or(k, |m| m.min(k)));
        }
        x = shift_with(&g0, &x);
    }
    report.push("orbit vanishes on W", below);
    let mut mismatch = None;
    for (slot, (lambda, _)) in min_order.iter().zip(zeros.entries()) {
        let want = w.multiplicity(lambda);
        if *slot != Some(want) {
            mismatch = Some(format!("minimal order at {lambda} is {slot:?}, expected {want}"));
            break;
        }
    }
    if zeros.is_empty() && f.is_zero() {
        mismatch = Some("zero function".into());
    }
    report.push("orbit attains W", mismatch);
}
