mod common;

use common::*;
use pommiez_core::algebra::{Degree, RationalFunction};
use pommiez_core::classify::{generated_subspace, SubspaceDescriptor};
use pommiez_core::domain::{G0Context, Omega, Unit, UnitPreset};
use pommiez_core::oracle::sample::{standard_contexts, Sampler, Shape};
use pommiez_core::oracle::{orbit_span, verify_descriptor};

#[test]
fn orbit_span_examples() {
    let c = ctx(disk(2), &[(1, 1)]);
    let o = orbit_span(&gm(&c, q(3, 1)), None).unwrap();
    assert_eq!((o.ranks.clone(), o.stabilized), (vec![1], true));
    let o = orbit_span(&gm(&c, t(2)), None).unwrap();
    assert_eq!((o.ranks.clone(), o.stabilized), (vec![1, 2, 3], true));
    let (_, f) = running_example();
    let o = orbit_span(&f, None).unwrap();
    assert_eq!((o.rank(), o.stabilized), (3, true));
}

#[test]
fn orbit_span_respects_max_iter() {
    let c = ctx(disk(2), &[]);
    let o = orbit_span(&gm(&c, t(5)), Some(2)).unwrap();
    assert_eq!(o.ranks, vec![1, 2]);
    assert!(!o.stabilized);
}

#[test]
fn verify_examples_pass() {
    let (c, f) = running_example();
    for x in [f, gm(&c, q(3, 1)), gm(&c, t(2))] {
        let d = generated_subspace(&x.clone().into()).unwrap();
        let report = verify_descriptor(&x.into(), &d).unwrap();
        assert!(report.passed(), "{report}");
    }
}

#[test]
fn mutated_descriptor_fails_with_witness() {
    let (_, f) = running_example();
    let SubspaceDescriptor::Rational(rt) = generated_subspace(&f.clone().into()).unwrap() else { panic!() };
    let n = rt.n().finite().unwrap();
    let bumped =
        SubspaceDescriptor::rational(rt.p_zeros().clone(), Degree::Finite(n + 1), rt.upsilon().clone()).unwrap();
    let report = verify_descriptor(&f.into(), &bumped).unwrap();
    assert!(!report.passed());
    let failures: Vec<_> = report.failures().map(|c| c.name).collect();
    assert!(failures.contains(&"rank equals dimension"));
    let witness = report.failures().find(|c| c.name == "descriptor inside orbit").unwrap();
    assert!(witness.witness.as_ref().unwrap().contains("generator"));
}

#[test]
fn zero_variety_sweep() {
    let c = ctx(disk(2), &[(1, 2)]);
    let f = sym(&c, rf(&[-1, 1], &[1]), RationalFunction::zero());
    let d = generated_subspace(&f).unwrap();
    assert_eq!(d, SubspaceDescriptor::ZeroVariety(variety(&[(1, 1)])));
    assert!(verify_descriptor(&f, &d).unwrap().passed());
    let wrong = SubspaceDescriptor::ZeroVariety(variety(&[(1, 2)]));
    assert!(!verify_descriptor(&f, &wrong).unwrap().passed());
    let cyclic = sym(&c, RationalFunction::one(), RationalFunction::one());
    assert!(verify_descriptor(&cyclic, &generated_subspace(&cyclic).unwrap()).unwrap().passed());
}

#[test]
fn zero_variety_sweep_with_geometric_unit() {
    let unit = Unit::Concrete { preset: UnitPreset::Geometric(gr(1, 3)), order: 12 };
    let c = G0Context::new(disk(2), vec![(g(1), 2)], unit).unwrap();
    let f = sym(&c, rf(&[1, -2, 1], &[1]).mul_poly(&poly(&[3, 1])), q(5, 1));
    let d = generated_subspace(&f).unwrap();
    assert_eq!(d, SubspaceDescriptor::ZeroVariety(variety(&[(1, 2)])));
    assert!(verify_descriptor(&f, &d).unwrap().passed());
}

#[test]
fn random_classification_matches_orbit() {
    let mut s = Sampler::new(21);
    for c in standard_contexts() {
        for _ in 0..12 {
            let f = s.gmultiple(&c, Shape::default());
            let d = generated_subspace(&f.clone().into()).unwrap();
            let report = verify_descriptor(&f.clone().into(), &d).unwrap();
            assert!(report.passed(), "{f}: {d}\n{report}");
        }
    }
}

#[test]
fn rank_grows_strictly() {
    let mut s = Sampler::new(22);
    for c in standard_contexts() {
        for _ in 0..8 {
            let o = orbit_span(&s.gmultiple(&c, Shape::default()), None).unwrap();
            assert!(o.stabilized);
            assert!(o.ranks.iter().enumerate().all(|(i, r)| *r == i + 1));
        }
    }
}

#[test]
fn plane_context_sweep() {
    let c = ctx(Omega::Plane, &[(1, 1), (2, 1)]);
    let f = sym(&c, rf(&[-2, 1], &[1]), t(1));
    let d = generated_subspace(&f).unwrap();
    assert_eq!(d, SubspaceDescriptor::ZeroVariety(variety(&[(2, 1)])));
    assert!(verify_descriptor(&f, &d).unwrap().passed());
}
