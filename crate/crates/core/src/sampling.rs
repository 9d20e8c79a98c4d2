//! Seeded random inputs for property checks. Coefficients are kept small so
//! exact arithmetic stays cheap.

use num_rational::BigRational;
use rand::Rng;

use crate::base_lie::{compact_basis, complex_basis, Algebra};
use crate::group_action::{Generator, LoopGroupWord};
use crate::kac_moody::KacMoodyElement;
use crate::loop_algebra::LaurentLoop;
use crate::matrix::Matrix;
use crate::scalar::ExactComplex;

pub fn small_rational<R: Rng + ?Sized>(rng: &mut R) -> BigRational {
    BigRational::new(rng.random_range(-3i64..=3).into(), rng.random_range(1i64..=2).into())
}

pub fn small_complex<R: Rng + ?Sized>(rng: &mut R) -> ExactComplex {
    ExactComplex::new(small_rational(rng), small_rational(rng))
}

/// Small Gaussian-integer combination of the complex basis.
pub fn random_matrix<R: Rng + ?Sized>(rng: &mut R, alg: Algebra) -> Matrix {
    let n = alg.size();
    complex_basis(alg).iter().fold(Matrix::zeros(n), |acc, b| {
        let c = ExactComplex::gaussian(rng.random_range(-2..=2), rng.random_range(-2..=2));
        &acc + &b.scale(&c)
    })
}

/// Each degree in `[−max_deg, max_deg]` is occupied with probability 1/2.
pub fn random_loop<R: Rng + ?Sized>(rng: &mut R, alg: Algebra, max_deg: i64) -> LaurentLoop {
    let mut terms = Vec::new();
    for d in -max_deg..=max_deg {
        if rng.random_bool(0.5) {
            terms.push((d, random_matrix(rng, alg)));
        }
    }
    LaurentLoop::from_terms(alg, terms).expect("sampled in the algebra")
}

/// A loop satisfying `f_n = −(f_{−n})^†`.
pub fn random_compact_loop<R: Rng + ?Sized>(rng: &mut R, alg: Algebra, max_deg: i64) -> LaurentLoop {
    let mut terms = Vec::new();
    let n = alg.size();
    let c0 = compact_basis(alg).iter().fold(Matrix::zeros(n), |acc, b| {
        &acc + &b.scale_rational(&small_rational(rng))
    });
    terms.push((0, c0));
    for d in 1..=max_deg {
        let a = random_matrix(rng, alg);
        terms.push((d, a.clone()));
        terms.push((-d, -&a.adjoint()));
    }
    LaurentLoop::from_terms(alg, terms).expect("sampled in the algebra")
}

pub fn random_km<R: Rng + ?Sized>(rng: &mut R, alg: Algebra, max_deg: i64) -> KacMoodyElement {
    KacMoodyElement::new(random_loop(rng, alg, max_deg), small_complex(rng), small_complex(rng))
}

/// An element of the compact form: compact loop, `r_c, r_d ∈ iℚ`.
pub fn random_compact_km<R: Rng + ?Sized>(rng: &mut R, alg: Algebra, max_deg: i64) -> KacMoodyElement {
    let i = ExactComplex::i();
    KacMoodyElement::new(
        random_compact_loop(rng, alg, max_deg),
        i.scale(&small_rational(rng)),
        i.scale(&small_rational(rng)),
    )
}

/// Invertible integer matrix from a product of two elementary unipotents
/// and a signed permutation, so the inverse stays integral.
pub fn random_constant<R: Rng + ?Sized>(rng: &mut R, size: usize) -> Matrix {
    let mut m = Matrix::identity(size);
    for _ in 0..2 {
        let i = rng.random_range(0..size);
        let j = (i + rng.random_range(1..size)) % size;
        let mut u = Matrix::identity(size);
        u.set(i, j, ExactComplex::from_int(rng.random_range(-2..=2)));
        m = &m * &u;
    }
    if rng.random_bool(0.5) {
        let mut p = Matrix::zeros(size);
        for a in 0..size {
            p.set(a, (a + 1) % size, ExactComplex::from_int(if a == 0 { -1 } else { 1 }));
        }
        m = &m * &p;
    }
    m
}

/// Strictly upper-triangular Laurent payload, optionally conjugated by a
/// random constant. With `force_positive`, some entry sits in degree ≥ 1.
pub fn random_nilpotent<R: Rng + ?Sized>(
    rng: &mut R,
    size: usize,
    max_deg: i64,
    conjugate: bool,
    force_positive: bool,
) -> LaurentLoop {
    let alg = Algebra::Sl(size);
    let mut terms = Vec::new();
    for a in 0..size {
        for b in a + 1..size {
            if rng.random_bool(0.6) {
                let d = rng.random_range(-max_deg..=max_deg);
                let c = ExactComplex::gaussian(rng.random_range(-2..=2), rng.random_range(-1..=1));
                terms.push((d, Matrix::unit(size, a, b).scale(&c)));
            }
        }
    }
    if force_positive {
        let d = rng.random_range(1..=max_deg.max(1));
        terms.push((d, Matrix::unit(size, 0, size - 1)));
    }
    let mut n = LaurentLoop::from_terms(alg, terms).expect("strictly upper triangular");
    if conjugate {
        let g = random_constant(rng, size);
        let g_inv = g.inverse().expect("invertible");
        n = n.map(|_, m| &(&g * m) * &g_inv);
    }
    n
}

/// A word of at most `max_len` generators of random kinds, with a random
/// rotation in `{±1, ±i}` when `rotations` is set.
pub fn random_word<R: Rng + ?Sized>(rng: &mut R, size: usize, max_len: usize, rotations: bool) -> LoopGroupWord {
    let len = rng.random_range(0..=max_len);
    let mut factors = Vec::with_capacity(len);
    for _ in 0..len {
        let g = match rng.random_range(0..3) {
            0 => {
                let conjugate = rng.random_bool(0.5);
                Generator::exp(random_nilpotent(rng, size, 2, conjugate, false))
            }
            1 => {
                let mut k: Vec<i64> = (0..size - 1).map(|_| rng.random_range(-2..=2)).collect();
                k.push(-k.iter().sum::<i64>());
                Generator::torus(k)
            }
            _ => Generator::constant(random_constant(rng, size)),
        };
        factors.push(g.expect("sampled generators are valid"));
    }
    let w = if rotations {
        [ExactComplex::one(), ExactComplex::from_int(-1), ExactComplex::i(), -ExactComplex::i()]
            [rng.random_range(0..4)]
        .clone()
    } else {
        ExactComplex::one()
    };
    LoopGroupWord::new(size, factors, w).expect("valid word")
}
