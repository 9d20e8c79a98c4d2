//! Curvature of the Lorentz symmetric space, duality, OSAKA types and the
//! `MSU(2)` Cartan slice.
//!
//! `R{g,h,k} = ¼[[g,h],k]`, so `⟨R{g,h,k},l⟩ = ¼⟨[g,h],[k,l]⟩` by invariance.

use std::cmp::Ordering;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::base_lie::{sl2_triple, Algebra};
use crate::error::{Error, Result};
use crate::kac_moody::{
    apply_involution, degree_window, km_bracket, linear_combination, lorentz_form, real_coordinates,
    EigenSplit, InvolutionSpec, KacMoodyElement, Linearity,
};
use crate::loop_algebra::{averaged_killing, LaurentLoop};
use crate::matrix::{solve_in_span, EchelonBasis};
use crate::scalar::{serialize_rational, ExactComplex};

pub fn curvature(g: &KacMoodyElement, h: &KacMoodyElement, k: &KacMoodyElement) -> Result<KacMoodyElement> {
    Ok(km_bracket(&km_bracket(g, h)?, k)?.scale(&ExactComplex::from_ratio(1, 4)))
}

/// `⟨R{g,h,k}, l⟩`.
pub fn curvature_pairing(
    g: &KacMoodyElement,
    h: &KacMoodyElement,
    k: &KacMoodyElement,
    l: &KacMoodyElement,
) -> Result<ExactComplex> {
    lorentz_form(&curvature(g, h, k)?, l)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PlaneKind {
    Definite,
    Degenerate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sectional {
    pub value: ExactComplex,
    pub kind: PlaneKind,
}

fn complex_coordinates(x: &KacMoodyElement, lo: i64, hi: i64) -> Vec<ExactComplex> {
    let n = x.algebra().size();
    let mut out = vec![ExactComplex::zero(); (hi - lo + 1) as usize * n * n + 2];
    for (d, m) in x.loop_part.terms() {
        let base = (d - lo) as usize * n * n;
        out[base..base + n * n].clone_from_slice(m.entries());
    }
    let t = out.len() - 2;
    out[t] = x.r_c.clone();
    out[t + 1] = x.r_d.clone();
    out
}

/// Sectional curvature `⟨R{g,h,g},h⟩ / |g∧h|²`. When the plane is
/// degenerate the denominator is `⟨v,v⟩` for a non-null `v ∈ {h, g}`.
pub fn sectional(g: &KacMoodyElement, h: &KacMoodyElement) -> Result<Sectional> {
    let (lo, hi) = degree_window([g, h]);
    let mut ech: EchelonBasis<ExactComplex> = EchelonBasis::new();
    if !ech.insert(&complex_coordinates(g, lo, hi)) || !ech.insert(&complex_coordinates(h, lo, hi)) {
        return Err(Error::Dependent);
    }
    let num = curvature_pairing(g, h, g, h)?;
    let gg = lorentz_form(g, g)?;
    let hh = lorentz_form(h, h)?;
    let gh = lorentz_form(g, h)?;
    let wedge = &gg * &hh - &gh * &gh;
    if !wedge.is_zero() {
        return Ok(Sectional { value: &num / &wedge, kind: PlaneKind::Definite });
    }
    let denom = if !hh.is_zero() {
        hh
    } else if !gg.is_zero() {
        gg
    } else {
        return Err(Error::BothNull);
    };
    Ok(Sectional { value: &num / &denom, kind: PlaneKind::Degenerate })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Sign {
    Positive,
    Zero,
    Negative,
    NotReal,
}

impl Sign {
    pub fn of(x: &ExactComplex) -> Self {
        match x.real_sign() {
            Some(Ordering::Greater) => Sign::Positive,
            Some(Ordering::Equal) => Sign::Zero,
            Some(Ordering::Less) => Sign::Negative,
            None => Sign::NotReal,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignSample {
    /// `⟨R{g,h,g},h⟩`.
    pub value: ExactComplex,
    /// Whether `value = ¼⟨[g,h],[g,h]⟩` exactly.
    pub identity_ok: bool,
    pub sign: Sign,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurvatureReport {
    pub bianchi_ok: bool,
    /// Antisymmetry in the first pair, in the second pair, and pair
    /// exchange `⟨R{g,h,k},l⟩ = ⟨R{k,l,g},h⟩`.
    pub symmetry_ok: [bool; 3],
    pub sign_samples: Vec<SignSample>,
    pub cases: usize,
    pub failures: usize,
}

pub type Quadruple = (KacMoodyElement, KacMoodyElement, KacMoodyElement, KacMoodyElement);

/// Exact check of the first Bianchi identity and the pairing symmetries on
/// each `(g, h, k, l)`, plus the sectional numerator of `(g, h)`.
pub fn curvature_report(samples: &[Quadruple]) -> Result<CurvatureReport> {
    let mut rep = CurvatureReport {
        bianchi_ok: true,
        symmetry_ok: [true; 3],
        sign_samples: Vec::new(),
        cases: 0,
        failures: 0,
    };
    for (g, h, k, l) in samples {
        rep.cases += 1;
        let mut ok = true;
        let bianchi = curvature(g, h, k)?.add(&curvature(h, k, g)?)?.add(&curvature(k, g, h)?)?;
        if !bianchi.is_zero() {
            rep.bianchi_ok = false;
            ok = false;
        }
        let r = curvature_pairing(g, h, k, l)?;
        let checks = [
            r == -curvature_pairing(h, g, k, l)?,
            r == -curvature_pairing(g, h, l, k)?,
            r == curvature_pairing(k, l, g, h)?,
        ];
        for (slot, c) in rep.symmetry_ok.iter_mut().zip(checks) {
            if !c {
                *slot = false;
                ok = false;
            }
        }
        let value = curvature_pairing(g, h, g, h)?;
        let gh = km_bracket(g, h)?;
        let quarter = lorentz_form(&gh, &gh)?.scale(&BigRational::new(1.into(), 4.into()));
        let identity_ok = value == quarter;
        if !identity_ok {
            ok = false;
        }
        rep.sign_samples.push(SignSample { sign: Sign::of(&value), value, identity_ok });
        if !ok {
            rep.failures += 1;
        }
    }
    Ok(rep)
}

fn solve_split(x: &KacMoodyElement, k: &[KacMoodyElement], p: &[KacMoodyElement]) -> Result<Vec<ExactComplex>> {
    let all: Vec<&KacMoodyElement> = k.iter().chain(p).chain([x]).collect();
    let (lo, hi) = degree_window(all.iter().copied());
    let cols: Vec<Vec<ExactComplex>> = k
        .iter()
        .chain(p)
        .map(|b| real_coordinates(b, lo, hi).into_iter().map(ExactComplex::from_rational).collect())
        .collect();
    let target: Vec<ExactComplex> = real_coordinates(x, lo, hi)
        .into_iter()
        .map(ExactComplex::from_rational)
        .collect();
    solve_in_span(&cols, &target).ok_or(Error::NotInSpan)
}

fn recombine(coeffs: &[ExactComplex], k: &[KacMoodyElement], p: &[KacMoodyElement], factor: &ExactComplex) -> Result<KacMoodyElement> {
    let scaled: Vec<KacMoodyElement> = k.iter().cloned().chain(p.iter().map(|b| b.scale(factor))).collect();
    if scaled.is_empty() {
        return Err(Error::NotInSpan);
    }
    linear_combination(coeffs, &scaled)
}

/// `K ⊕ P → K ⊕ iP`: writes `x` in the real span of the split and
/// multiplies the `P` part by `i`.
pub fn dualize(x: &KacMoodyElement, split: &EigenSplit) -> Result<KacMoodyElement> {
    let coeffs = solve_split(x, &split.k, &split.p)?;
    recombine(&coeffs, &split.k, &split.p, &ExactComplex::i())
}

/// Inverse of [`dualize`] on `K ⊕ iP`.
pub fn undualize(x: &KacMoodyElement, split: &EigenSplit) -> Result<KacMoodyElement> {
    let ip: Vec<KacMoodyElement> = split.p.iter().map(|b| b.scale(&ExactComplex::i())).collect();
    let coeffs = solve_split(x, &split.k, &ip)?;
    recombine(&coeffs, &split.k, &ip, &-ExactComplex::i())
}

/// The dual split `(K, iP)`.
pub fn dual_split(split: &EigenSplit) -> EigenSplit {
    EigenSplit {
        k: split.k.clone(),
        p: split.p.iter().map(|b| b.scale(&ExactComplex::i())).collect(),
    }
}

fn require_linear(rho: &InvolutionSpec) -> Result<()> {
    if rho.linearity == Linearity::Linear {
        Ok(())
    } else {
        Err(Error::IllegalSpec("projector duality needs a complex-linear involution".into()))
    }
}

/// `x_K + i·x_P` using the projectors `(1 ± ρ)/2`. Unlike [`dualize`] this
/// needs no finite basis, so brackets of any degree can be carried across.
pub fn dualize_with(rho: &InvolutionSpec, x: &KacMoodyElement) -> Result<KacMoodyElement> {
    require_linear(rho)?;
    let (k, p) = project(rho, x)?;
    k.add(&p.scale(&ExactComplex::i()))
}

/// `y_K − i·y_P`, the inverse of [`dualize_with`].
pub fn undualize_with(rho: &InvolutionSpec, y: &KacMoodyElement) -> Result<KacMoodyElement> {
    require_linear(rho)?;
    let (k, p) = project(rho, y)?;
    k.sub(&p.scale(&ExactComplex::i()))
}

fn project(rho: &InvolutionSpec, x: &KacMoodyElement) -> Result<(KacMoodyElement, KacMoodyElement)> {
    let rx = apply_involution(rho, x);
    let half = ExactComplex::from_ratio(1, 2);
    Ok((x.add(&rx)?.scale(&half), x.sub(&rx)?.scale(&half)))
}

/// Metric of the dual space: the form of the compact side transported
/// through [`undualize_with`].
pub fn dual_form(rho: &InvolutionSpec, u: &KacMoodyElement, v: &KacMoodyElement) -> Result<ExactComplex> {
    lorentz_form(&undualize_with(rho, u)?, &undualize_with(rho, v)?)
}

/// `⟨R{g,h,g},h⟩` computed in the dual space for `g, h` on the dual side.
pub fn dual_sectional_numerator(rho: &InvolutionSpec, g: &KacMoodyElement, h: &KacMoodyElement) -> Result<ExactComplex> {
    dual_form(rho, &curvature(g, h, g)?, h)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum OsakaType {
    CompactType,
    NonCompactType,
    EuclideanType,
}

/// Exact positive-definiteness by symmetric elimination without pivoting.
fn positive_definite(g: &[Vec<BigRational>]) -> bool {
    let n = g.len();
    let mut a = g.to_vec();
    for k in 0..n {
        if !a[k][k].is_positive() {
            return false;
        }
        for i in k + 1..n {
            let f = &a[i][k] / &a[k][k];
            for j in k..n {
                let t = &f * &a[k][j];
                a[i][j] -= t;
            }
        }
    }
    true
}

fn negated(g: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    g.iter().map(|r| r.iter().map(|x| -x.clone()).collect()).collect()
}

/// Real independent loop parts of `xs`.
fn loop_parts(xs: &[KacMoodyElement], window: (i64, i64)) -> Vec<LaurentLoop> {
    let mut ech: EchelonBasis<BigRational> = EchelonBasis::new();
    xs.iter()
        .map(|x| KacMoodyElement::from_loop(x.loop_part.clone()))
        .filter(|x| !x.loop_part.is_zero() && ech.insert(&real_coordinates(x, window.0, window.1)))
        .map(|x| x.loop_part)
        .collect()
}

fn killing_gram(a: &[LaurentLoop], b: &[LaurentLoop], factor: i64) -> Result<Option<Vec<Vec<BigRational>>>> {
    let f = BigRational::from_integer(factor.into());
    let mut out = Vec::with_capacity(a.len());
    for x in a {
        let mut row = Vec::with_capacity(b.len());
        for y in b {
            let v = averaged_killing(x, y)?;
            if !v.is_real() {
                return Ok(None);
            }
            row.push(v.re * &f);
        }
        out.push(row);
    }
    Ok(Some(out))
}

/// Reads the type off the Killing Gram matrix of the loop parts:
/// identically zero is Euclidean, negative definite is compact, negative on
/// `K`, positive on `P` and `K ⊥ P` is non-compact.
pub fn osaka_classify(split: &EigenSplit) -> Result<OsakaType> {
    let all: Vec<KacMoodyElement> = split.k.iter().chain(&split.p).cloned().collect();
    let Some(first) = all.first() else {
        return Err(Error::Unclassifiable);
    };
    let factor = first.algebra().killing_factor();
    let w = degree_window(&all);
    let both = loop_parts(&all, w);
    let Some(g_all) = killing_gram(&both, &both, factor)? else {
        return Err(Error::Unclassifiable);
    };
    if g_all.iter().flatten().all(Zero::is_zero) {
        return Ok(OsakaType::EuclideanType);
    }
    if positive_definite(&negated(&g_all)) {
        return Ok(OsakaType::CompactType);
    }
    let k = loop_parts(&split.k, w);
    let p = loop_parts(&split.p, w);
    let grams = (
        killing_gram(&k, &k, factor)?,
        killing_gram(&p, &p, factor)?,
        killing_gram(&k, &p, factor)?,
    );
    if let (Some(gk), Some(gp), Some(gkp)) = grams {
        if positive_definite(&negated(&gk)) && positive_definite(&gp) && gkp.iter().flatten().all(Zero::is_zero) {
            return Ok(OsakaType::NonCompactType);
        }
    }
    Err(Error::Unclassifiable)
}

/// `⟨c+d, c+d⟩ = −2`: a timelike vector in every flat, which rules out a
/// compatible complex structure.
pub fn hermitian_obstruction() -> ExactComplex {
    let alg = Algebra::Sl(2);
    let v = KacMoodyElement::c(alg).add(&KacMoodyElement::d(alg)).expect("same algebra");
    lorentz_form(&v, &v).expect("same algebra")
}

/// A point `a·iH + r_c·(−i c) + r_d·(i d)` of the extended Cartan algebra of
/// `MSU(2)`; its square length is `2a² − 2 r_c r_d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SlicePoint {
    #[serde(serialize_with = "serialize_rational")]
    pub a: BigRational,
    #[serde(serialize_with = "serialize_rational")]
    pub r_c: BigRational,
    #[serde(serialize_with = "serialize_rational")]
    pub r_d: BigRational,
}

impl SlicePoint {
    pub fn element(&self) -> KacMoodyElement {
        let alg = Algebra::Sl(2);
        let (_, _, h) = sl2_triple();
        let i = ExactComplex::i();
        let ih = h.scale(&ExactComplex::new(BigRational::zero(), self.a.clone()));
        KacMoodyElement::new(
            LaurentLoop::monomial(alg, 0, ih).expect("traceless"),
            -&i.scale(&self.r_c),
            i.scale(&self.r_d),
        )
    }

    /// Reads a point back; `None` off the slice.
    pub fn from_element(x: &KacMoodyElement) -> Option<Self> {
        if x.algebra() != Algebra::Sl(2) {
            return None;
        }
        let a = match x.loop_part.support().as_slice() {
            [] => BigRational::zero(),
            [0] => {
                let m = x.loop_part.coeff(0)?;
                let a = m.get(0, 0);
                if !a.re.is_zero() || !m.get(0, 1).is_zero() || !m.get(1, 0).is_zero() {
                    return None;
                }
                a.im.clone()
            }
            _ => return None,
        };
        if !x.r_c.re.is_zero() || !x.r_d.re.is_zero() {
            return None;
        }
        Some(Self { a, r_c: -x.r_c.im.clone(), r_d: x.r_d.im.clone() })
    }

    /// `2a² − 2 r_c r_d`.
    pub fn square_length(&self) -> BigRational {
        let two = BigRational::from_integer(2.into());
        &two * &self.a * &self.a - &two * &self.r_c * &self.r_d
    }

    /// Line coordinate `x = 2a/r_d`, defined off `r_d = 0`.
    pub fn line_coordinate(&self) -> Option<BigRational> {
        if self.r_d.is_zero() {
            None
        } else {
            Some(BigRational::from_integer(2.into()) * &self.a / &self.r_d)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CartanSlice {
    #[serde(serialize_with = "serialize_rational")]
    pub level: BigRational,
    #[serde(serialize_with = "serialize_rational")]
    pub r_d: BigRational,
    pub points: Vec<SlicePoint>,
}

/// `samples` evenly spaced rationals in `[−2, 2]`.
fn grid(samples: usize) -> Vec<BigRational> {
    if samples == 1 {
        return vec![BigRational::zero()];
    }
    let m = (samples - 1) as i64;
    (0..samples as i64)
        .map(|k| BigRational::new((4 * k - 2 * m).into(), m.into()))
        .collect()
}

fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let (n, d) = (q.numer().sqrt(), q.denom().sqrt());
    let r = BigRational::new(n, d);
    (&r * &r == *q).then_some(r)
}

/// Points with `⟨x,x⟩ = level` and the given `r_d`. For `r_d ≠ 0`, `a`
/// ranges over a grid and `r_c` is solved for; at `r_d = 0` the slice is one
/// or two lines `a = ±√(level/2)` along which `r_c` ranges over the grid.
pub fn cartan_slice(level: &BigRational, r_d: &BigRational, samples: usize) -> Result<CartanSlice> {
    if samples == 0 {
        return Err(Error::EmptySlice("no samples requested".into()));
    }
    let two = BigRational::from_integer(2.into());
    let mut points = Vec::with_capacity(samples);
    if !r_d.is_zero() {
        for a in grid(samples) {
            let r_c = (&two * &a * &a - level) / (&two * r_d);
            points.push(SlicePoint { a, r_c, r_d: r_d.clone() });
        }
    } else {
        let Some(a) = rational_sqrt(&(level / &two)) else {
            return Err(Error::EmptySlice(format!("2a² = {level} has no rational solution")));
        };
        let sheets = if a.is_zero() { vec![a] } else { vec![a.clone(), -a] };
        for (k, r_c) in grid(samples).into_iter().enumerate() {
            let a = sheets[k % sheets.len()].clone();
            points.push(SlicePoint { a, r_c, r_d: r_d.clone() });
        }
    }
    Ok(CartanSlice { level: level.clone(), r_d: r_d.clone(), points })
}
