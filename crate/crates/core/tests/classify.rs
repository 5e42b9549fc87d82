mod common;

use common::*;
use pommiez_core::algebra::{Degree, GaussianRational, RationalFunction};
use pommiez_core::classify::{
    canonical_decomposition, extremal_alpha, extremal_combination, generated_subspace, inclusion, is_cyclic,
    is_unicellular, join, membership, unicellular_chain, ExtremalSpec, SubspaceDescriptor,
};
use pommiez_core::domain::{G0Context, MultiplicityVariety, Omega, SymFunction, Unit};
use pommiez_core::error::Error;
use pommiez_core::operator::apply;
use pommiez_core::oracle::decompose_by_coefficients;
use pommiez_core::oracle::sample::{standard_contexts, Sampler, Shape};

fn rational(p_zeros: &[(i64, usize)], n: Option<usize>, upsilon: &[(i64, usize)]) -> SubspaceDescriptor {
    let n = n.map_or(Degree::NegInf, Degree::Finite);
    SubspaceDescriptor::rational(variety(p_zeros), n, variety(upsilon)).unwrap()
}

#[test]
fn decomposition_of_running_example() {
    let (_, f) = running_example();
    let dec = canonical_decomposition(&f).unwrap();
    assert_eq!(dec.p, poly(&[1, -1]));
    assert_eq!(dec.r, poly(&[0, 1]));
    assert_eq!(dec.u, poly(&[1]));
    assert_eq!(dec.v, poly(&[-3, 1]));
    assert_eq!(decompose_by_coefficients(&f).unwrap(), dec);
}

#[test]
fn decomposition_edge_cases() {
    let c = ctx(disk(2), &[(1, 1)]);
    let dec = canonical_decomposition(&gm(&c, t(2))).unwrap();
    assert_eq!((dec.p, dec.r, dec.u, dec.v), (poly(&[1]), poly(&[0, 0, 1]), poly(&[]), poly(&[1])));
    let dec = canonical_decomposition(&gm(&c, q(3, 1))).unwrap();
    assert_eq!((dec.p, dec.r, dec.u, dec.v), (poly(&[1]), poly(&[]), poly(&[1]), poly(&[-3, 1])));
    assert_eq!(canonical_decomposition(&gm(&c, RationalFunction::zero())), Err(Error::ZeroFunction));
}

#[test]
fn cyclicity_examples() {
    let c = ctx(disk(2), &[(1, 1)]);
    assert!(!is_cyclic(&gm(&c, t(1).add(&RationalFunction::one())).into()).unwrap());
    assert!(is_cyclic(&sym(&c, RationalFunction::one(), RationalFunction::zero())).unwrap());
    assert!(!is_cyclic(&sym(&c, rf(&[-1, 1], &[1]), RationalFunction::zero())).unwrap());
    assert_eq!(is_cyclic(&sym(&c, RationalFunction::zero(), RationalFunction::zero())), Err(Error::ZeroFunction));
}

#[test]
fn generated_subspace_examples() {
    let (c, f) = running_example();
    let d = generated_subspace(&f.into()).unwrap();
    assert_eq!(d, rational(&[(1, 1)], Some(1), &[(3, 1)]));
    assert_eq!(d.dimension(), Some(3));

    let d = generated_subspace(&gm(&c, q(3, 1)).into()).unwrap();
    assert_eq!(d, rational(&[], None, &[(3, 1)]));
    assert_eq!(d.dimension(), Some(1));

    let d = generated_subspace(&sym(&c, rf(&[-1, 1], &[1]), RationalFunction::zero())).unwrap();
    assert_eq!(d, SubspaceDescriptor::ZeroVariety(variety(&[(1, 1)])));

    let zero = sym(&c, RationalFunction::zero(), RationalFunction::zero());
    assert_eq!(generated_subspace(&zero).unwrap(), SubspaceDescriptor::Trivial);
}

#[test]
fn plane_has_no_outside_poles() {
    let c = ctx(Omega::Plane, &[(1, 2), (2, 1)]);
    let f = gm(&c, q(1, 2).add(&t(3)));
    match generated_subspace(&f.into()).unwrap() {
        SubspaceDescriptor::Rational(rt) => {
            assert!(rt.upsilon().is_empty());
            assert_eq!(rt.p(), poly(&[1, -1]).pow(2));
            assert_eq!(rt.n(), Degree::Finite(5));
        }
        other => panic!("unexpected {other}"),
    }
}

#[test]
fn membership_examples() {
    let c = ctx(disk(2), &[(1, 1)]);
    let d = rational(&[(1, 1)], Some(1), &[(3, 1)]);
    assert!(membership(&gm(&c, rf(&[1], &[1, -1])).into(), &d).unwrap());
    assert!(!membership(&gm(&c, t(2)).into(), &d).unwrap());
    let w = SubspaceDescriptor::ZeroVariety(variety(&[(1, 1)]));
    assert!(membership(&gm(&c, RationalFunction::one()).into(), &w).unwrap());
    assert!(!membership(&sym(&c, RationalFunction::one(), RationalFunction::zero()), &w).unwrap());
    assert!(membership(&sym(&c, RationalFunction::one(), RationalFunction::zero()), &SubspaceDescriptor::Full).unwrap());
}

#[test]
fn inclusion_examples() {
    let c = ctx(disk(2), &[(1, 2)]);
    assert!(inclusion(&c, &rational(&[(1, 1)], Some(0), &[]), &rational(&[(1, 1)], Some(1), &[(3, 1)])));
    let w1 = SubspaceDescriptor::ZeroVariety(variety(&[(1, 1)]));
    let w2 = SubspaceDescriptor::ZeroVariety(variety(&[(1, 2)]));
    assert!(!inclusion(&c, &w1, &w2));
    assert!(inclusion(&c, &w2, &w1));
    assert!(inclusion(&c, &SubspaceDescriptor::Trivial, &w1));
    assert!(inclusion(&c, &w1, &SubspaceDescriptor::Full));
    assert!(!inclusion(&c, &w1, &rational(&[(1, 1)], Some(4), &[])));
}

#[test]
fn join_examples() {
    let c = ctx(disk(2), &[(1, 2)]);
    let a = rational(&[(1, 1)], Some(0), &[]);
    let b = rational(&[], None, &[(3, 1)]);
    assert_eq!(join(&c, &a, &b).unwrap(), rational(&[(1, 1)], Some(0), &[(3, 1)]));
    assert_eq!(join(&c, &a, &SubspaceDescriptor::Full).unwrap(), SubspaceDescriptor::Full);
    let w1 = SubspaceDescriptor::ZeroVariety(variety(&[(1, 2)]));
    let w2 = SubspaceDescriptor::ZeroVariety(variety(&[(1, 1)]));
    assert_eq!(join(&c, &w1, &w2).unwrap(), w2);
    assert_eq!(join(&c, &SubspaceDescriptor::Trivial, &w1).unwrap(), w1);
    // (g0/(1−z))·ℂ[z]_0 ⊔ (g0/(1−z)²)·ℂ[z]_1 over the common denominator (1−z)².
    let d = join(&c, &a, &rational(&[(1, 2)], Some(1), &[])).unwrap();
    assert_eq!(d, rational(&[(1, 2)], Some(1), &[]));
    // Joining with a zero-variety descriptor: W(g0/p) = {(1,1)} for p = 1 − z.
    assert_eq!(join(&c, &a, &w1).unwrap(), w2);
    let c1 = ctx(disk(2), &[(1, 1)]);
    assert_eq!(join(&c1, &a, &SubspaceDescriptor::ZeroVariety(variety(&[(1, 1)]))).unwrap(), SubspaceDescriptor::Full);
}

#[test]
fn dimensions() {
    assert_eq!(rational(&[(1, 1)], Some(1), &[(3, 1)]).dimension(), Some(3));
    assert_eq!(SubspaceDescriptor::Trivial.dimension(), Some(0));
    assert_eq!(SubspaceDescriptor::ZeroVariety(variety(&[(1, 1)])).dimension(), None);
    assert_eq!(SubspaceDescriptor::Full.dimension(), None);
}

#[test]
fn descriptor_canonicalization() {
    assert_eq!(rational(&[(1, 1)], None, &[]), SubspaceDescriptor::Trivial);
    assert_eq!(rational(&[(1, 1)], None, &[(3, 2)]), rational(&[], None, &[(3, 2)]));
    assert!(SubspaceDescriptor::rational(variety(&[(1, 3)]), Degree::Finite(1), variety(&[])).is_err());
    assert!(SubspaceDescriptor::zero_variety(MultiplicityVariety::empty()).is_err());
}

#[test]
fn unicellularity_table() {
    assert!(is_unicellular(&ctx(Omega::Plane, &[])));
    assert!(!is_unicellular(&ctx(disk(2), &[])));
    assert!(!is_unicellular(&ctx(Omega::Plane, &[(1, 1)])));
    assert!(!is_unicellular(&ctx(disk(2), &[(1, 1)])));
    let chain = unicellular_chain(&ctx(Omega::Plane, &[]), 4).unwrap();
    let c = ctx(Omega::Plane, &[]);
    for w in chain.windows(2) {
        assert!(inclusion(&c, &w[0], &w[1]) && !inclusion(&c, &w[1], &w[0]));
    }
}

#[test]
fn extremal_alpha_examples() {
    let c = ctx(disk(2), &[(1, 1)]);
    let spec = ExtremalSpec { zeros: vec![], avoid: vec![g(1)] };
    // v(1) = 1 and f(1) = −2 under A-parts: the bad scalar is 2.
    let v = sym(&c, RationalFunction::one(), RationalFunction::zero());
    let f = sym(&c, RationalFunction::constant(g(-2)), RationalFunction::zero());
    assert_eq!(extremal_alpha(&f, &v, &spec).unwrap(), g(1));
    let f = sym(&c, RationalFunction::constant(g(-1)), RationalFunction::zero());
    assert_eq!(extremal_alpha(&f, &v, &spec).unwrap(), g(2));
    let zero = sym(&c, RationalFunction::zero(), RationalFunction::zero());
    assert_eq!(extremal_alpha(&zero, &v, &spec).unwrap(), g(1));

    // Prescribed double zero at 1: cofactor values decide the excluded α.
    let c2 = ctx(disk(2), &[(1, 2)]);
    let spec = ExtremalSpec { zeros: vec![(g(1), 2)], avoid: vec![] };
    let v = sym(&c2, RationalFunction::zero(), RationalFunction::one());
    let f = sym(&c2, RationalFunction::zero(), RationalFunction::constant(g(-1)));
    assert_eq!(extremal_alpha(&f, &v, &spec).unwrap(), g(2));
    let bad_v = sym(&c2, RationalFunction::one(), RationalFunction::zero());
    assert!(matches!(extremal_alpha(&f, &bad_v, &spec), Err(Error::Infeasible { .. })));
}

#[test]
fn extremal_combination_examples() {
    let c = ctx(Omega::Plane, &[(1, 2), (2, 1)]);
    let f1 = sym(&c, RationalFunction::one(), RationalFunction::zero());
    let spec = ExtremalSpec { zeros: vec![], avoid: vec![g(1)] };
    let (w, coeffs) = extremal_combination(std::slice::from_ref(&f1), &spec).unwrap();
    assert_eq!(w, f1);
    assert_eq!(coeffs, vec![g(1)]);

    // f1 vanishes at 2 but not at 1, f2 the other way round.
    let f1 = sym(&c, rf(&[-2, 1], &[1]), RationalFunction::zero());
    let f2 = sym(&c, rf(&[-1, 1], &[1]), RationalFunction::zero());
    let spec = ExtremalSpec { zeros: vec![], avoid: vec![g(1), g(2)] };
    let (w, coeffs) = extremal_combination(&[f1, f2], &spec).unwrap();
    assert!(coeffs.iter().all(|x| *x != g(0)));
    assert_eq!(w.zero_order_at(&g(1)), Some(0));
    assert_eq!(w.zero_order_at(&g(2)), Some(0));

    // Orders 2 and 1 at μ = 1, target exactly 1.
    let f1 = sym(&c, rf(&[1, -2, 1], &[1]), RationalFunction::zero());
    let f2 = sym(&c, rf(&[-1, 1], &[1]), RationalFunction::zero());
    let spec = ExtremalSpec { zeros: vec![(g(1), 1)], avoid: vec![] };
    let (w, _) = extremal_combination(&[f1.clone(), f2], &spec).unwrap();
    assert_eq!(w.zero_order_at(&g(1)), Some(1));

    let spec = ExtremalSpec { zeros: vec![(g(1), 1)], avoid: vec![] };
    assert!(matches!(extremal_combination(&[f1], &spec), Err(Error::Infeasible { .. })));
}

#[test]
fn decomposition_round_trip_random() {
    let mut s = Sampler::new(11);
    for c in standard_contexts() {
        for _ in 0..25 {
            let f = s.gmultiple(&c, Shape::default());
            if f.is_zero() {
                continue;
            }
            let dec = canonical_decomposition(&f).unwrap();
            assert_eq!(&dec.recombine(), f.r());
            assert_eq!(decompose_by_coefficients(&f).unwrap(), dec);
            assert!(dec.u.degree_or_minus_one() < dec.v.degree_or_minus_one());
            assert!(dec.v.is_monic() && dec.p.coeff(0) == g(1));
            assert!(dec.u.gcd(&dec.v).degree_or_minus_one() <= 0);
        }
    }
}

#[test]
fn descriptor_invariance_random() {
    let mut s = Sampler::new(12);
    for c in standard_contexts() {
        for _ in 0..10 {
            let f = s.gmultiple(&c, Shape::default());
            let d = generated_subspace(&f.clone().into()).unwrap();
            d.validate(&c).unwrap();
            for x in d.generators(&c) {
                assert!(membership(&apply(&x).into(), &d).unwrap(), "{x} under {d}");
            }
            assert!(membership(&f.into(), &d).unwrap());
        }
    }
}

#[test]
fn generated_zero_varieties_sit_below_w_g0() {
    let mut s = Sampler::new(13);
    for c in standard_contexts() {
        for _ in 0..10 {
            let f = s.symfunction(&c, Shape::default());
            let d = generated_subspace(&f).unwrap();
            if let SubspaceDescriptor::ZeroVariety(w) = &d {
                assert!(w.prec(c.zeros()));
            }
            assert_eq!(d == SubspaceDescriptor::Full, is_cyclic(&f).unwrap());
            assert!(membership(&f, &d).unwrap());
        }
    }
}

#[test]
fn p_is_recovered_from_generator_zeros() {
    let mut s = Sampler::new(14);
    for c in standard_contexts() {
        for _ in 0..10 {
            let f = s.gmultiple(&c, Shape::default());
            let Ok(SubspaceDescriptor::Rational(rt)) = generated_subspace(&f.into()) else { continue };
            if rt.n().is_neg_inf() {
                continue;
            }
            // The polynomial-part generators vanish on W(g0/p) exactly.
            let expected = c.zeros().saturating_sub(rt.p_zeros());
            let gens = SubspaceDescriptor::Rational(rt.clone()).generators(&c);
            let mut w = None::<MultiplicityVariety>;
            for x in &gens[..=rt.n().finite().unwrap()] {
                let wx = x.zero_variety_in_omega().unwrap();
                w = Some(w.map_or(wx.clone(), |acc| acc.min(&wx)));
            }
            assert_eq!(w.unwrap(), expected);
        }
    }
}

#[test]
fn inclusion_agrees_with_generator_membership() {
    let c = ctx(disk(2), &[(1, 2)]);
    let ds = vec![
        SubspaceDescriptor::Trivial,
        SubspaceDescriptor::Full,
        rational(&[], Some(0), &[]),
        rational(&[(1, 1)], Some(0), &[]),
        rational(&[(1, 1)], Some(1), &[(3, 1)]),
        rational(&[(1, 2)], Some(2), &[(3, 2)]),
        rational(&[], None, &[(3, 1)]),
        SubspaceDescriptor::ZeroVariety(variety(&[(1, 1)])),
        SubspaceDescriptor::ZeroVariety(variety(&[(1, 2)])),
    ];
    for d1 in &ds {
        for d2 in &ds {
            let by_rule = inclusion(&c, d1, d2);
            let gens: Vec<SymFunction> = match d1 {
                SubspaceDescriptor::Rational(_) => d1.generators(&c).into_iter().map(Into::into).collect(),
                _ => d1.zero_variety_samples(&c, 4),
            };
            let by_members = gens.iter().all(|x| membership(x, d2).unwrap());
            assert_eq!(by_rule, by_members, "{d1} ⊆ {d2}");
        }
    }
}

#[test]
fn reduction_with_trivial_unit() {
    let mut s = Sampler::new(15);
    let one = Unit::Concrete { preset: pommiez_core::domain::UnitPreset::Exp(GaussianRational::from_int(0)), order: 8 };
    for omega in [disk(2), Omega::Plane] {
        let generic = G0Context::new(omega.clone(), vec![], Unit::Generic).unwrap();
        let trivial = G0Context::new(omega, vec![], one.clone()).unwrap();
        for _ in 0..10 {
            let f = s.gmultiple(&generic, Shape::default());
            let plain = pommiez_core::domain::GMultiple::new(trivial.clone(), f.r().clone()).unwrap();
            assert_eq!(generated_subspace(&f.into()).unwrap(), generated_subspace(&plain.into()).unwrap());
        }
    }
}
