mod common;

use kmx_core::base_lie::{sl2_triple, Algebra};
use kmx_core::geometry::{
    cartan_slice, curvature, curvature_pairing, curvature_report, dual_form, dual_sectional_numerator, dual_split,
    dualize, dualize_with, hermitian_obstruction, osaka_classify, sectional, undualize_with, OsakaType, PlaneKind,
    Sign, SlicePoint,
};
use kmx_core::kac_moody::{
    apply_involution, compact_km_basis, eigenspace_split, km_bracket, lie_triple_check, lorentz_form,
    ArgumentAction, BaseMap, InvolutionSpec, KacMoodyElement, Linearity,
};
use kmx_core::matrix::Matrix;
use kmx_core::scalar::rational;
use kmx_core::{sampling, Error, ExactComplex};
use num_traits::Signed;
use proptest::prelude::*;

const SL2: Algebra = Algebra::Sl(2);

fn mono(d: i64, m: &Matrix) -> KacMoodyElement {
    KacMoodyElement::monomial(SL2, d, m.clone()).unwrap()
}

fn half_diff(rho: &InvolutionSpec, x: &KacMoodyElement) -> KacMoodyElement {
    x.sub(&apply_involution(rho, x)).unwrap().scale(&ExactComplex::from_ratio(1, 2))
}

fn half_sum(rho: &InvolutionSpec, x: &KacMoodyElement) -> KacMoodyElement {
    x.add(&apply_involution(rho, x)).unwrap().scale(&ExactComplex::from_ratio(1, 2))
}

#[test]
fn metric_values() {
    let c = KacMoodyElement::c(SL2);
    let d = KacMoodyElement::d(SL2);
    assert_eq!(hermitian_obstruction(), ExactComplex::from_int(-2));
    let cmd = c.sub(&d).unwrap();
    assert_eq!(lorentz_form(&cmd, &cmd).unwrap(), ExactComplex::from_int(2));
    let (e, f, _) = sl2_triple();
    let x = mono(0, &(&e - &f));
    assert_eq!(lorentz_form(&x, &x).unwrap(), ExactComplex::from_int(2));
}

#[test]
fn report_on_mixed_samples() {
    let mut rng = common::rng(31);
    let mut quads = Vec::new();
    for k in 0..40 {
        let alg = if k % 4 == 3 { Algebra::Sl(3) } else { SL2 };
        let mut q = [0, 1, 2, 3].map(|_| sampling::random_km(&mut rng, alg, 2));
        if k % 5 == 0 {
            q[k % 4] = KacMoodyElement::c(alg);
        }
        let [a, b, c, d] = q;
        quads.push((a, b, c, d));
    }
    let rep = curvature_report(&quads).unwrap();
    assert!(rep.bianchi_ok);
    assert_eq!(rep.symmetry_ok, [true; 3]);
    assert_eq!(rep.failures, 0);
    assert_eq!(rep.cases, 40);
    assert!(rep.sign_samples.iter().all(|s| s.identity_ok));
}

#[test]
fn central_direction_is_flat() {
    let mut rng = common::rng(32);
    let c = KacMoodyElement::c(SL2);
    for _ in 0..10 {
        let [g, h] = [0, 1].map(|_| sampling::random_km(&mut rng, SL2, 2));
        assert!(curvature(&c, &g, &h).unwrap().is_zero());
        assert!(curvature(&g, &h, &c).unwrap().is_zero());
    }
}

#[test]
fn kulkarni_blow_up() {
    // Near the degenerate plane span{u, d}, |K| grows without bound.
    let (e, f, _) = sl2_triple();
    let u = mono(1, &e).sub(&mono(-1, &f)).unwrap();
    let d = KacMoodyElement::d(SL2);
    let c = KacMoodyElement::c(SL2);
    let mut last = rational(0, 1);
    for k in 1..=6 {
        let s = rational(1, 10i64.pow(k));
        let h = d.add(&c.scale_rational(&s)).unwrap();
        let sec = sectional(&u, &h).unwrap();
        assert_eq!(sec.kind, PlaneKind::Definite);
        assert!(sec.value.is_real());
        let size = sec.value.re.abs();
        assert!(size > last * rational(9, 1), "|K| does not blow up at step {k}");
        last = size;
    }
    let degenerate = sectional(&u, &d).unwrap();
    assert_eq!(degenerate.kind, PlaneKind::Degenerate);
    let num = curvature_pairing(&u, &d, &u, &d).unwrap();
    assert_eq!(degenerate.value, &num / &lorentz_form(&u, &u).unwrap());
    // A flat plane stays flat however close it gets to degenerate.
    let ih = mono(0, &sl2_triple().2.scale(&ExactComplex::i()));
    for k in 1..=4 {
        let h = c.add(&d.scale_rational(&rational(1, 10i64.pow(k)))).unwrap();
        let h = h.add(&ih).unwrap();
        assert!(sectional(&ih, &h).unwrap().value.is_zero());
    }
}

#[test]
fn degenerate_and_dependent_planes() {
    let (_, _, h) = sl2_triple();
    let n1 = mono(1, &h);
    let n2 = mono(2, &h);
    assert_eq!(sectional(&n1, &n2), Err(Error::BothNull));
    assert_eq!(sectional(&n1, &n1.scale(&ExactComplex::from_int(3))), Err(Error::Dependent));
}

#[test]
fn osaka_types() {
    let rho = InvolutionSpec::second_kind_identity(SL2);
    let split = eigenspace_split(&rho, &compact_km_basis(SL2, 2)).unwrap();
    assert_eq!(osaka_classify(&split).unwrap(), OsakaType::CompactType);
    assert_eq!(osaka_classify(&dual_split(&split)).unwrap(), OsakaType::NonCompactType);
    let ab = Algebra::Abelian(1);
    let split_ab = eigenspace_split(&InvolutionSpec::second_kind_identity(ab), &compact_km_basis(ab, 2)).unwrap();
    assert_eq!(osaka_classify(&split_ab).unwrap(), OsakaType::EuclideanType);
    let rep = lie_triple_check(&rho, &split).unwrap();
    assert!(rep.holds());
    assert!(rep.kk_in_k && rep.kp_in_p && rep.pp_in_k);
    let rep = lie_triple_check(&rho, &dual_split(&split)).unwrap();
    assert!(rep.holds());
    // A sample of sl₃ behaves the same way.
    let sl3 = Algebra::Sl(3);
    let rho3 = InvolutionSpec::second_kind_identity(sl3);
    let split3 = eigenspace_split(&rho3, &compact_km_basis(sl3, 1)).unwrap();
    assert_eq!(osaka_classify(&split3).unwrap(), OsakaType::CompactType);
    assert_eq!(osaka_classify(&dual_split(&split3)).unwrap(), OsakaType::NonCompactType);
}

#[test]
fn involution_specs() {
    assert!(InvolutionSpec::compact_conjugation(SL2).validate(SL2).is_ok());
    assert!(InvolutionSpec::second_kind_identity(SL2).validate(SL2).is_ok());
    let w = Matrix::from_ints(&[&[0, 1], &[-1, 0]]);
    let inner = BaseMap::inner(w).unwrap();
    let spec = InvolutionSpec::standard(inner, Linearity::Linear, ArgumentAction::Invert, SL2).unwrap();
    assert!(spec.validate(SL2).is_ok());
    let mut rng = common::rng(33);
    for rho in [InvolutionSpec::second_kind_identity(SL2), InvolutionSpec::compact_conjugation(SL2), spec] {
        for _ in 0..10 {
            let [x, y] = [0, 1].map(|_| sampling::random_km(&mut rng, SL2, 2));
            let rx = apply_involution(&rho, &x);
            assert_eq!(apply_involution(&rho, &rx), x);
            let lhs = apply_involution(&rho, &km_bracket(&x, &y).unwrap());
            assert_eq!(lhs, km_bracket(&rx, &apply_involution(&rho, &y)).unwrap());
        }
    }
    let c = KacMoodyElement::c(SL2);
    let rho = InvolutionSpec::compact_conjugation(SL2);
    let ic = c.scale(&ExactComplex::i());
    assert_eq!(apply_involution(&rho, &ic), ic);
}

#[test]
fn duality_maps() {
    let rho = InvolutionSpec::second_kind_identity(SL2);
    let split = eigenspace_split(&rho, &compact_km_basis(SL2, 1)).unwrap();
    let mut rng = common::rng(34);
    for _ in 0..20 {
        let x = sampling::random_compact_km(&mut rng, SL2, 1);
        let y = dualize_with(&rho, &x).unwrap();
        assert_eq!(undualize_with(&rho, &y).unwrap(), x);
        assert_eq!(dualize(&x, &split).unwrap(), y);
        let z = sampling::random_compact_km(&mut rng, SL2, 1);
        let yz = dualize_with(&rho, &z).unwrap();
        assert_eq!(dual_form(&rho, &y, &yz).unwrap(), lorentz_form(&x, &z).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn bianchi_and_symmetries(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let [g, h, k, l] = [0, 1, 2, 3].map(|_| sampling::random_km(&mut rng, SL2, 2));
        let rep = curvature_report(&[(g, h, k, l)]).unwrap();
        prop_assert!(rep.bianchi_ok);
        prop_assert_eq!(rep.symmetry_ok, [true; 3]);
    }

    #[test]
    fn compact_sign_and_duality(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let rho = InvolutionSpec::second_kind_identity(SL2);
        let [g, h] = [0, 1].map(|_| sampling::random_compact_km(&mut rng, SL2, 2));
        let s = curvature_pairing(&g, &h, &g, &h).unwrap();
        let gh = km_bracket(&g, &h).unwrap();
        prop_assert_eq!(s.clone(), lorentz_form(&gh, &gh).unwrap().scale(&rational(1, 4)));
        prop_assert!(matches!(Sign::of(&s), Sign::Positive | Sign::Zero));
        let (gp, hp) = (half_diff(&rho, &g), half_diff(&rho, &h));
        let sp = curvature_pairing(&gp, &hp, &gp, &hp).unwrap();
        let dual = dual_sectional_numerator(&rho, &dualize_with(&rho, &gp).unwrap(), &dualize_with(&rho, &hp).unwrap()).unwrap();
        prop_assert_eq!(dual.clone(), -sp.clone());
        prop_assert!(matches!(Sign::of(&dual), Sign::Negative | Sign::Zero));
        // On K the dual map is the identity, so nothing flips.
        let (gk, hk) = (half_sum(&rho, &g), half_sum(&rho, &h));
        let sk = curvature_pairing(&gk, &hk, &gk, &hk).unwrap();
        prop_assert_eq!(dual_sectional_numerator(&rho, &gk, &hk).unwrap(), sk);
    }

    #[test]
    fn slice_points_have_their_level(num in -8i64..=8, den in 1i64..=3, rd in prop_oneof![-2i64..=-1, 1i64..=2]) {
        let level = rational(num, den);
        let slice = cartan_slice(&level, &rational(rd, 1), 7).unwrap();
        prop_assert_eq!(slice.points.len(), 7);
        for p in &slice.points {
            let x = p.element();
            prop_assert_eq!(lorentz_form(&x, &x).unwrap(), ExactComplex::from_rational(level.clone()));
            prop_assert_eq!(SlicePoint::from_element(&x), Some(p.clone()));
        }
    }
}

#[test]
fn slice_examples() {
    let s = cartan_slice(&rational(0, 1), &rational(1, 1), 5).unwrap();
    assert!(s.points.iter().all(|p| p.r_c == &p.a * &p.a));
    let s = cartan_slice(&rational(-2, 1), &rational(1, 1), 3).unwrap();
    let mid = &s.points[1];
    assert_eq!((mid.a.clone(), mid.r_c.clone()), (rational(0, 1), rational(1, 1)));
    let line = cartan_slice(&rational(2, 1), &rational(0, 1), 5).unwrap();
    assert!(line.points.iter().all(|p| p.a.abs() == rational(1, 1)));
    assert!(matches!(cartan_slice(&rational(3, 1), &rational(0, 1), 5), Err(Error::EmptySlice(_))));
}
