//! The `verify` suites. Each suite draws from its own ChaCha stream of the
//! shared seed, so results do not depend on which other suites run.

use kmx_core::base_lie::{sl2_triple, Algebra};
use kmx_core::cartan::{named_matrix, NamedType};
use kmx_core::geometry::{
    curvature_pairing, curvature_report, dual_sectional_numerator, dual_split, dualize_with, osaka_classify,
    OsakaType, Quadruple, SlicePoint,
};
use kmx_core::group_action::{adjoint, flat_solver, is_singular, weyl_reflect, weyl_word, FlatConfig};
use kmx_core::kac_moody::{
    affine_generators, apply_involution, compact_km_basis, eigenspace_split, km_bracket, lie_triple_check,
    lorentz_form, realization_check, InvolutionSpec, KacMoodyElement,
};
use kmx_core::loop_algebra::{cocycle, loop_bracket, loop_derivative, LaurentLoop};
use kmx_core::sampling;
use kmx_core::scalar::rational;
use kmx_core::{ExactComplex, Result};
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub const SUITES: [&str; 9] = [
    "jacobi",
    "cocycle",
    "serre",
    "ad-invariance",
    "curvature",
    "duality",
    "weyl",
    "flats",
    "osaka",
];

#[derive(Clone, Debug, Serialize)]
pub struct SuiteResult {
    pub name: String,
    pub cases_run: usize,
    pub failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_residual: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kernel_dims: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyConfig {
    pub trials: usize,
    #[serde(rename = "type")]
    pub type_name: Option<String>,
    pub suites: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub suites: Vec<SuiteResult>,
    pub seed: u64,
    pub config: VerifyConfig,
    pub passed: bool,
}

#[derive(Default)]
struct Tally {
    cases: usize,
    failures: usize,
    max_residual: Option<f64>,
    kernel_dims: Option<Vec<usize>>,
}

impl Tally {
    fn check(&mut self, ok: bool) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
        }
    }
}

fn sample_algebra(k: usize) -> Algebra {
    if k % 4 == 3 {
        Algebra::Sl(3)
    } else {
        Algebra::Sl(2)
    }
}

fn jacobi(rng: &mut ChaCha8Rng, trials: usize, t: &mut Tally) -> Result<()> {
    for k in 0..trials {
        let alg = sample_algebra(k);
        let [x, y, z] = [0, 1, 2].map(|_| sampling::random_km(rng, alg, 2));
        let a = km_bracket(&x, &km_bracket(&y, &z)?)?;
        let b = km_bracket(&y, &km_bracket(&z, &x)?)?;
        let c = km_bracket(&z, &km_bracket(&x, &y)?)?;
        t.check(a.add(&b)?.add(&c)?.is_zero());
    }
    Ok(())
}

fn cocycle_suite(rng: &mut ChaCha8Rng, trials: usize, t: &mut Tally) -> Result<()> {
    for k in 0..trials {
        let alg = sample_algebra(k);
        let [f, g, h] = [0, 1, 2].map(|_| sampling::random_loop(rng, alg, 2));
        let anti = cocycle(&f, &g)? == -cocycle(&g, &f)?;
        let cyc = cocycle(&loop_bracket(&f, &g)?, &h)?
            + cocycle(&loop_bracket(&g, &h)?, &f)?
            + cocycle(&loop_bracket(&h, &f)?, &g)?;
        let deriv = loop_derivative(&loop_bracket(&f, &g)?)
            == loop_bracket(&loop_derivative(&f), &g)?.add(&loop_bracket(&f, &loop_derivative(&g))?)?;
        t.check(anti && cyc.is_zero() && deriv);
    }
    Ok(())
}

fn serre(types: &[NamedType], t: &mut Tally) -> Result<()> {
    for &ty in types {
        let a = named_matrix(ty)?;
        let gens = affine_generators(&a)?;
        for entry in realization_check(&gens, &a)?.entries {
            t.check(entry.holds);
        }
    }
    Ok(())
}

fn ad_invariance(rng: &mut ChaCha8Rng, trials: usize, t: &mut Tally) -> Result<()> {
    for k in 0..trials {
        let alg = sample_algebra(k);
        let [x, y, z] = [0, 1, 2].map(|_| sampling::random_km(rng, alg, 2));
        let inv = lorentz_form(&km_bracket(&z, &x)?, &y)? + lorentz_form(&x, &km_bracket(&z, &y)?)?;
        let g = sampling::random_word(rng, alg.size(), 3, k % 2 == 0);
        let (gx, gy) = (adjoint(&g, &x)?, adjoint(&g, &y)?);
        let c = KacMoodyElement::c(alg);
        let iso = lorentz_form(&gx, &gy)? == lorentz_form(&x, &y)?;
        t.check(inv.is_zero() && iso && gx.r_d == x.r_d && adjoint(&g, &c)? == c);
    }
    Ok(())
}

fn curvature(rng: &mut ChaCha8Rng, trials: usize, t: &mut Tally) -> Result<()> {
    let quads: Vec<Quadruple> = (0..trials)
        .map(|k| {
            let alg = sample_algebra(k);
            let [a, b, c, d] = [0, 1, 2, 3].map(|_| sampling::random_km(rng, alg, 2));
            if k % 10 == 0 {
                (KacMoodyElement::c(alg), b, c, d)
            } else {
                (a, b, c, d)
            }
        })
        .collect();
    let rep = curvature_report(&quads)?;
    t.cases += rep.cases;
    t.failures += rep.failures;
    for _ in 0..trials {
        let [g, h] = [0, 1].map(|_| sampling::random_compact_km(rng, Algebra::Sl(2), 2));
        let s = curvature_pairing(&g, &h, &g, &h)?;
        let gh = km_bracket(&g, &h)?;
        let quarter = lorentz_form(&gh, &gh)?.scale(&rational(1, 4));
        let non_negative = s.real_sign().is_some_and(|o| o.is_ge());
        t.check(s == quarter && non_negative);
    }
    Ok(())
}

fn duality(rng: &mut ChaCha8Rng, trials: usize, t: &mut Tally) -> Result<()> {
    let rho = InvolutionSpec::second_kind_identity(Algebra::Sl(2));
    let half = ExactComplex::from_ratio(1, 2);
    for _ in 0..trials {
        let [g, h] = [0, 1].map(|_| sampling::random_compact_km(rng, Algebra::Sl(2), 2));
        let gp = g.sub(&apply_involution(&rho, &g))?.scale(&half);
        let hp = h.sub(&apply_involution(&rho, &h))?.scale(&half);
        let s = curvature_pairing(&gp, &hp, &gp, &hp)?;
        let dual = dual_sectional_numerator(&rho, &dualize_with(&rho, &gp)?, &dualize_with(&rho, &hp)?)?;
        let signs = s.real_sign().is_some_and(|o| o.is_ge()) && dual.real_sign().is_some_and(|o| o.is_le());
        t.check(dual == -s && signs);
    }
    Ok(())
}

fn weyl(rng: &mut ChaCha8Rng, trials: usize, t: &mut Tally) -> Result<()> {
    for _ in 0..trials {
        let rd = loop {
            let r = sampling::small_rational(rng);
            if r != BigRational::from_integer(0.into()) {
                break r;
            }
        };
        let p = SlicePoint {
            a: sampling::small_rational(rng),
            r_c: sampling::small_rational(rng),
            r_d: rd,
        };
        let x = p.element();
        let coord = p.line_coordinate().expect("r_d is nonzero");
        for i in [0u8, 1] {
            let y = adjoint(&weyl_word(i), &x)?;
            let moved = SlicePoint::from_element(&y).and_then(|q| q.line_coordinate());
            t.check(lorentz_form(&y, &y)? == lorentz_form(&x, &x)? && moved == Some(weyl_reflect(i, &coord)));
        }
        let singular = is_singular(&coord, 24);
        t.check(singular == coord.is_integer() || coord.abs_ge(12));
    }
    Ok(())
}

trait AbsGe {
    fn abs_ge(&self, bound: i64) -> bool;
}

impl AbsGe for BigRational {
    fn abs_ge(&self, bound: i64) -> bool {
        let b = BigRational::from_integer(bound.into());
        *self >= b || *self <= -b
    }
}

fn flats(rng: &mut ChaCha8Rng, trials: usize, t: &mut Tally) -> Result<()> {
    let mut dims = Vec::with_capacity(trials);
    let mut worst: f64 = 0.0;
    for _ in 0..trials {
        let u = sampling::random_compact_loop(rng, Algebra::Sl(2), 2);
        let r = flat_solver(&u, FlatConfig::default())?;
        worst = worst.max(r.residual);
        dims.push(r.kernel_dim);
        t.check(r.kernel_dim == 1 && r.residual < 1e-6 && r.commuting);
    }
    let (_, _, h) = sl2_triple();
    let ih = LaurentLoop::monomial(Algebra::Sl(2), 0, h.scale(&ExactComplex::i()))?;
    let r = flat_solver(&ih, FlatConfig::default())?;
    t.check(r.kernel_dim == 3);
    t.max_residual = Some(worst);
    t.kernel_dims = Some(dims);
    Ok(())
}

fn osaka(t: &mut Tally) -> Result<()> {
    let sl2 = Algebra::Sl(2);
    let rho = InvolutionSpec::second_kind_identity(sl2);
    let split = eigenspace_split(&rho, &compact_km_basis(sl2, 2))?;
    t.check(osaka_classify(&split)? == OsakaType::CompactType);
    t.check(osaka_classify(&dual_split(&split))? == OsakaType::NonCompactType);
    let ab = Algebra::Abelian(1);
    let split_ab = eigenspace_split(&InvolutionSpec::second_kind_identity(ab), &compact_km_basis(ab, 2))?;
    t.check(osaka_classify(&split_ab)? == OsakaType::EuclideanType);
    t.check(lie_triple_check(&rho, &split)?.holds());
    Ok(())
}

fn run_suite(name: &str, seed: u64, trials: usize, types: &[NamedType]) -> SuiteResult {
    let stream = SUITES.iter().position(|s| *s == name).expect("validated suite name") as u64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let _ = rng.random::<u32>();
    let mut t = Tally::default();
    let outcome = match name {
        "jacobi" => jacobi(&mut rng, trials, &mut t),
        "cocycle" => cocycle_suite(&mut rng, trials, &mut t),
        "serre" => serre(types, &mut t),
        "ad-invariance" => ad_invariance(&mut rng, trials, &mut t),
        "curvature" => curvature(&mut rng, trials, &mut t),
        "duality" => duality(&mut rng, trials, &mut t),
        "weyl" => weyl(&mut rng, trials, &mut t),
        "flats" => flats(&mut rng, trials, &mut t),
        "osaka" => osaka(&mut t),
        _ => unreachable!("validated suite name"),
    };
    let error = outcome.err().map(|e| e.to_string());
    SuiteResult {
        name: name.to_string(),
        cases_run: t.cases,
        failures: t.failures + usize::from(error.is_some()),
        max_residual: t.max_residual,
        kernel_dims: t.kernel_dims,
        error,
    }
}

pub fn run(suites: &[String], seed: u64, trials: usize, type_name: Option<String>, types: &[NamedType]) -> VerifyReport {
    let results: Vec<SuiteResult> = suites.iter().map(|s| run_suite(s, seed, trials, types)).collect();
    let passed = results.iter().all(|r| r.failures == 0);
    VerifyReport {
        suites: results,
        seed,
        config: VerifyConfig {
            trials,
            type_name,
            suites: suites.to_vec(),
        },
        passed,
    }
}
