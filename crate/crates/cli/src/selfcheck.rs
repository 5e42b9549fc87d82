//! Randomized classification suite behind the `selfcheck` subcommand.

use pommiez_core::classify::{canonical_decomposition, format_p, generated_subspace};
use pommiez_core::domain::{G0Context, SymFunction};
use pommiez_core::oracle::sample::{standard_contexts, Sampler, Shape};
use pommiez_core::oracle::{decompose_by_coefficients, verify_descriptor};
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct Failure {
    pub context: String,
    pub function: String,
    pub check: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub seed: u64,
    pub cases: usize,
    pub instances: usize,
    pub failures: Vec<Failure>,
}

fn describe(ctx: &G0Context) -> String {
    format!("omega={} q={}", ctx.omega(), format_p(ctx.q_factors()))
}

fn check_instance(ctx: &G0Context, f: &SymFunction, out: &mut Vec<Failure>) {
    let fail = |check: &str, witness: Option<String>| Failure {
        context: describe(ctx),
        function: f.to_string(),
        check: check.to_string(),
        witness,
    };
    if let Some(m) = f.as_multiple().filter(|m| !m.is_zero()) {
        match (canonical_decomposition(&m), decompose_by_coefficients(&m)) {
            (Ok(a), Ok(b)) if a == b && &a.recombine() == m.r() => {}
            (Ok(a), Ok(b)) => out.push(fail("decomposition paths agree", Some(format!("{a} vs {b}")))),
            (Err(e), _) | (_, Err(e)) => out.push(fail("decomposition", Some(e.to_string()))),
        }
    }
    let d = match generated_subspace(f) {
        Ok(d) => d,
        Err(e) => return out.push(fail("classify", Some(e.to_string()))),
    };
    match verify_descriptor(f, &d) {
        Ok(report) => out.extend(report.failures().map(|c| fail(c.name, c.witness.clone()))),
        Err(e) => out.push(fail("verify", Some(e.to_string()))),
    }
}

/// `cases` instances in each built-in context, one thread per context.
pub fn run(seed: u64, cases: usize) -> Report {
    let contexts = standard_contexts();
    let failures = std::thread::scope(|scope| {
        let handles: Vec<_> = contexts
            .iter()
            .enumerate()
            .map(|(idx, ctx)| {
                scope.spawn(move || {
                    let mut s = Sampler::new(seed.wrapping_add((idx as u64) << 32));
                    let mut out = Vec::new();
                    for _ in 0..cases {
                        let f: SymFunction = if s.chance(0.25) {
                            s.symfunction(ctx, Shape::default())
                        } else {
                            s.gmultiple(ctx, Shape::default()).into()
                        };
                        check_instance(ctx, &f, &mut out);
                    }
                    out
                })
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("selfcheck worker panicked")).collect()
    });
    Report { seed, cases, instances: cases * contexts.len(), failures }
}
