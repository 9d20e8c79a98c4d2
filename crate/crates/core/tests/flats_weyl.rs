mod common;

use kmx_core::base_lie::{sl2_triple, Algebra};
use kmx_core::geometry::{cartan_slice, SlicePoint};
use kmx_core::group_action::{
    adjoint, flat_solver, gauge_action, is_singular, weyl_ball, weyl_orbit, weyl_reflect, weyl_word, FlatConfig,
    Generator, LoopGroupWord, WeylElement,
};
use kmx_core::kac_moody::lorentz_form;
use kmx_core::loop_algebra::LaurentLoop;
use kmx_core::matrix::Matrix;
use kmx_core::scalar::rational;
use kmx_core::{sampling, Error, ExactComplex};
use num_rational::BigRational;
use num_traits::Signed;
use proptest::prelude::*;

const SL2: Algebra = Algebra::Sl(2);

#[test]
fn generic_sl2_kernels() {
    let mut rng = common::rng(41);
    for k in 0..20 {
        let u = sampling::random_compact_loop(&mut rng, SL2, 2);
        let r = flat_solver(&u, FlatConfig::default()).unwrap();
        assert_eq!(r.kernel_dim, 1, "sample {k}");
        assert_eq!(r.flat_dim, 3);
        assert!(r.residual < 1e-6 && r.commuting);
        assert!(r.drift < 1e-6);
    }
}

#[test]
fn generic_sl3_kernels() {
    let mut rng = common::rng(42);
    for k in 0..5 {
        let u = sampling::random_compact_loop(&mut rng, Algebra::Sl(3), 1);
        let r = flat_solver(&u, FlatConfig::default()).unwrap();
        assert_eq!(r.kernel_dim, 2, "sample {k}");
        assert!(r.flat_dim >= 3);
    }
}

#[test]
fn non_generic_and_errors() {
    let (e, _, h) = sl2_triple();
    let ih = LaurentLoop::monomial(SL2, 0, h.scale(&ExactComplex::i())).unwrap();
    assert_eq!(flat_solver(&ih, FlatConfig::default()).unwrap().kernel_dim, 3);
    let raw = LaurentLoop::monomial(SL2, 1, e).unwrap();
    assert_eq!(flat_solver(&raw, FlatConfig::default()), Err(Error::NotCompact));
    let ab = LaurentLoop::zero(Algebra::Abelian(1));
    assert!(matches!(flat_solver(&ab, FlatConfig::default()), Err(Error::UnsupportedAlgebra(_))));
    let big = ih.scale(&ExactComplex::from_int(40));
    let coarse = FlatConfig { steps: 8, tol: 1e-8 };
    assert!(matches!(flat_solver(&big, coarse), Err(Error::NonUnitaryDrift(_))));
}

#[test]
fn kernel_is_gauge_invariant() {
    // φ ↦ tφ turns u into t u t⁻¹ + i·L with L = δt·t⁻¹, and conjugates the
    // monodromy by t(1) = 1, so the kernel dimension is unchanged.
    let mut rng = common::rng(43);
    let t = LoopGroupWord::from_factors(2, vec![Generator::torus(vec![1, -1]).unwrap()]).unwrap();
    let l = LaurentLoop::monomial(SL2, 0, Matrix::diag(&[ExactComplex::one(), ExactComplex::from_int(-1)])).unwrap();
    for _ in 0..5 {
        let u = sampling::random_compact_loop(&mut rng, SL2, 1);
        let conj = gauge_action(&t, &u).unwrap().add(&l).unwrap();
        let w = conj.add(&l.scale(&ExactComplex::i())).unwrap();
        let a = flat_solver(&u, FlatConfig::default()).unwrap();
        let b = flat_solver(&w, FlatConfig::default()).unwrap();
        assert_eq!(a.kernel_dim, b.kernel_dim);
    }
    let (_, _, h) = sl2_triple();
    let ih = LaurentLoop::monomial(SL2, 0, h.scale(&ExactComplex::i())).unwrap();
    let w = gauge_action(&t, &ih).unwrap().add(&l).unwrap().add(&l.scale(&ExactComplex::i())).unwrap();
    assert_eq!(flat_solver(&w, FlatConfig::default()).unwrap().kernel_dim, 3);
}

#[test]
fn weyl_group_structure() {
    let s0 = WeylElement::generator(0);
    let s1 = WeylElement::generator(1);
    assert_eq!(s1.then_after(s0), WeylElement { eps: 1, shift: 2 });
    assert_eq!(s0.then_after(s0), WeylElement::IDENTITY);
    assert_eq!(s1.then_after(s1), WeylElement::IDENTITY);
    let mut p = WeylElement::IDENTITY;
    for _ in 1..=12 {
        p = s0.then_after(s1).then_after(p);
        assert_ne!(p, WeylElement::IDENTITY);
    }
    // The ball of radius r in the infinite dihedral group has 2r + 1 elements.
    for r in 0..10 {
        assert_eq!(weyl_ball(r).len(), 2 * r + 1);
    }
    let orbit = weyl_orbit(&rational(1, 3), 4);
    assert!(orbit.contains(&rational(-1, 3)) && orbit.contains(&rational(5, 3)) && orbit.contains(&rational(7, 3)));
}

#[test]
fn singular_set_is_the_integers() {
    for num in -30..=30 {
        for den in 1..=5 {
            let x = BigRational::new(num.into(), den.into());
            if x.abs() <= rational(6, 1) {
                assert_eq!(is_singular(&x, 20), x.is_integer(), "{x}");
            }
        }
    }
}

#[test]
fn weyl_words_act_on_the_slice() {
    for (level, rd) in [(-2, 1), (0, 1), (2, 1), (-1, 2), (3, -1)] {
        let slice = cartan_slice(&rational(level, 1), &rational(rd, 1), 9).unwrap();
        for p in &slice.points {
            let x = p.element();
            let coord = p.line_coordinate().unwrap();
            for i in [0u8, 1] {
                let y = adjoint(&weyl_word(i), &x).unwrap();
                assert_eq!(lorentz_form(&y, &y).unwrap(), lorentz_form(&x, &x).unwrap());
                let q = SlicePoint::from_element(&y).expect("stays in the slice");
                assert_eq!(q.line_coordinate().unwrap(), weyl_reflect(i, &coord));
                assert_eq!(q.square_length(), p.square_length());
            }
            // s₁s₀ is translation by 2.
            let t = weyl_word(1).compose(&weyl_word(0)).unwrap();
            let y = SlicePoint::from_element(&adjoint(&t, &x).unwrap()).unwrap();
            assert_eq!(y.line_coordinate().unwrap(), &coord + rational(2, 1));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reflections_are_involutions(num in -50i64..=50, den in 1i64..=7) {
        let x = BigRational::new(num.into(), den.into());
        prop_assert_eq!(weyl_reflect(0, &weyl_reflect(0, &x)), x.clone());
        prop_assert_eq!(weyl_reflect(1, &weyl_reflect(1, &x)), x.clone());
        prop_assert_eq!(WeylElement::generator(1).apply(&x), weyl_reflect(1, &x));
    }

    #[test]
    fn slice_isometry(a in -6i64..=6, rc in -6i64..=6, rd in prop_oneof![-3i64..=-1, 1i64..=3]) {
        let p = SlicePoint { a: rational(a, 2), r_c: rational(rc, 3), r_d: rational(rd, 1) };
        let x = p.element();
        for i in [0u8, 1] {
            let y = adjoint(&weyl_word(i), &x).unwrap();
            prop_assert_eq!(lorentz_form(&y, &y).unwrap(), lorentz_form(&x, &x).unwrap());
            let q = SlicePoint::from_element(&y).unwrap();
            prop_assert_eq!(q.line_coordinate().unwrap(), weyl_reflect(i, &p.line_coordinate().unwrap()));
        }
    }
}
