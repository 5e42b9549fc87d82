//! Canonical decomposition, cyclicity and the invariant subspace generated
//! by a function, with the descriptor algebra on top.

mod decomposition;
mod descriptor;
mod extremal;

pub use decomposition::{canonical_decomposition, CanonicalDecomposition};
pub use descriptor::{format_p, inclusion, join, membership, RationalType, SubspaceDescriptor};
pub use extremal::{extremal_alpha, extremal_combination, ExtremalSpec};

use std::sync::Arc;

use crate::algebra::Degree;
use crate::domain::{G0Context, MultiplicityVariety, SymFunction};
use crate::error::{Error, Result};

/// Cyclic iff `A ≠ 0` and `f` has no zero on `Z(q)`.
pub fn is_cyclic(f: &SymFunction) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroFunction);
    }
    Ok(!f.a().is_zero() && f.zero_variety_in_omega()?.is_empty())
}

/// The descriptor of the smallest closed invariant subspace containing `f`.
pub fn generated_subspace(f: &SymFunction) -> Result<SubspaceDescriptor> {
    if f.is_zero() {
        return Ok(SubspaceDescriptor::Trivial);
    }
    let ctx = f.ctx();
    match f.as_multiple() {
        Some(g) => {
            let dec = canonical_decomposition(&g)?;
            let n = if dec.r.is_zero() {
                Degree::NegInf
            } else {
                Degree::Finite(dec.r.degree_or_minus_one().max(dec.p.degree_or_minus_one() - 1) as usize)
            };
            let p_zeros = MultiplicityVariety::new(decomposition::root_variety(&dec.p)?)?;
            let upsilon = MultiplicityVariety::new(decomposition::root_variety(&dec.v)?)?;
            SubspaceDescriptor::rational(p_zeros, n, upsilon)
        }
        None => {
            let w0 = f.zero_variety_in_omega()?.min(ctx.zeros());
            Ok(if w0.is_empty() { SubspaceDescriptor::Full } else { SubspaceDescriptor::ZeroVariety(w0) })
        }
    }
}

/// Unicellular iff Ω is the plane and `g0` has no zeros.
pub fn is_unicellular(ctx: &G0Context) -> bool {
    ctx.omega().is_plane() && ctx.zeros().is_empty()
}

/// The first `len` members `g0·ℂ[z]_0 ⊂ g0·ℂ[z]_1 ⊂ …` of the invariant
/// subspace chain, when the operator is unicellular.
pub fn unicellular_chain(ctx: &Arc<G0Context>, len: usize) -> Option<Vec<SubspaceDescriptor>> {
    is_unicellular(ctx).then(|| {
        (0..len)
            .map(|n| {
                SubspaceDescriptor::rational(
                    MultiplicityVariety::empty(),
                    Degree::Finite(n),
                    MultiplicityVariety::empty(),
                )
                .expect("valid descriptor")
            })
            .collect()
    })
}
