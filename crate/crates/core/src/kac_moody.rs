//! The double extension `L𝔤 ⊕ 𝔽c ⊕ 𝔽d`.
//!
//! Brackets: `[f,g] = [f,g]_0 + ω(f,g)c`, `[d,f] = δf`, `c` central.
//! Form: `⟨f,g⟩ = −Σ tr(f_n g_{−n})`, `⟨c,d⟩ = −1`, `⟨c,c⟩ = ⟨d,d⟩ = 0`,
//! loops orthogonal to `c` and `d`.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::base_lie::{
    check_tag, chevalley_generators, compact_basis, complex_basis, Algebra, DiagramAutomorphism,
};
use crate::cartan::{named_matrix, Family, GeneralizedCartanMatrix, NamedType};
use crate::error::{Error, Result};
use crate::loop_algebra::{averaged_killing, cocycle, loop_bracket, loop_derivative, LaurentLoop, LoopTerm};
use crate::matrix::{EchelonBasis, Matrix};
use crate::scalar::ExactComplex;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KacMoodyElement {
    pub loop_part: LaurentLoop,
    pub r_c: ExactComplex,
    pub r_d: ExactComplex,
}

/// Wire form: `{"loop": [...], "rc": [..], "rd": [..]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct KacMoodyWire {
    #[serde(rename = "loop")]
    pub loop_terms: Vec<LoopTerm>,
    pub rc: ExactComplex,
    pub rd: ExactComplex,
}

impl Serialize for KacMoodyElement {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_wire().serialize(serializer)
    }
}

impl KacMoodyElement {
    pub fn new(loop_part: LaurentLoop, r_c: ExactComplex, r_d: ExactComplex) -> Self {
        Self { loop_part, r_c, r_d }
    }

    pub fn zero(alg: Algebra) -> Self {
        Self::new(LaurentLoop::zero(alg), ExactComplex::zero(), ExactComplex::zero())
    }

    pub fn c(alg: Algebra) -> Self {
        Self::new(LaurentLoop::zero(alg), ExactComplex::one(), ExactComplex::zero())
    }

    pub fn d(alg: Algebra) -> Self {
        Self::new(LaurentLoop::zero(alg), ExactComplex::zero(), ExactComplex::one())
    }

    pub fn from_loop(l: LaurentLoop) -> Self {
        Self::new(l, ExactComplex::zero(), ExactComplex::zero())
    }

    /// `X·z^deg`.
    pub fn monomial(alg: Algebra, deg: i64, x: Matrix) -> Result<Self> {
        Ok(Self::from_loop(LaurentLoop::monomial(alg, deg, x)?))
    }

    pub fn from_wire(alg: Algebra, w: KacMoodyWire) -> Result<Self> {
        Ok(Self::new(LaurentLoop::from_wire(alg, w.loop_terms)?, w.rc, w.rd))
    }

    pub fn to_wire(&self) -> KacMoodyWire {
        KacMoodyWire {
            loop_terms: self.loop_part.to_wire(),
            rc: self.r_c.clone(),
            rd: self.r_d.clone(),
        }
    }

    pub fn algebra(&self) -> Algebra {
        self.loop_part.algebra()
    }

    pub fn is_zero(&self) -> bool {
        self.loop_part.is_zero() && self.r_c.is_zero() && self.r_d.is_zero()
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        Ok(Self::new(self.loop_part.add(&o.loop_part)?, &self.r_c + &o.r_c, &self.r_d + &o.r_d))
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.loop_part.neg(), -&self.r_c, -&self.r_d)
    }

    pub fn scale(&self, s: &ExactComplex) -> Self {
        Self::new(self.loop_part.scale(s), &self.r_c * s, &self.r_d * s)
    }

    pub fn scale_rational(&self, r: &BigRational) -> Self {
        self.scale(&ExactComplex::from_rational(r.clone()))
    }

    /// Entrywise complex conjugate of all components.
    pub fn conj(&self) -> Self {
        Self::new(self.loop_part.conj(), self.r_c.conj(), self.r_d.conj())
    }

    /// Largest `|n|` in the loop support.
    pub fn max_abs_degree(&self) -> i64 {
        self.loop_part.max_abs_degree()
    }
}

/// Sum of `coeffs[k]·xs[k]`; `xs` must be non-empty.
pub fn linear_combination(coeffs: &[ExactComplex], xs: &[KacMoodyElement]) -> Result<KacMoodyElement> {
    let mut acc = KacMoodyElement::zero(xs[0].algebra());
    for (a, x) in coeffs.iter().zip(xs) {
        if !a.is_zero() {
            acc = acc.add(&x.scale(a))?;
        }
    }
    Ok(acc)
}

pub fn km_bracket(x: &KacMoodyElement, y: &KacMoodyElement) -> Result<KacMoodyElement> {
    check_tag(x.algebra(), y.algebra())?;
    let mut l = loop_bracket(&x.loop_part, &y.loop_part)?;
    if !x.r_d.is_zero() {
        l = l.add(&loop_derivative(&y.loop_part).scale(&x.r_d))?;
    }
    if !y.r_d.is_zero() {
        l = l.sub(&loop_derivative(&x.loop_part).scale(&y.r_d))?;
    }
    Ok(KacMoodyElement::new(
        l,
        cocycle(&x.loop_part, &y.loop_part)?,
        ExactComplex::zero(),
    ))
}

/// Ad-invariant form of index 1: positive on the compact loop directions.
pub fn lorentz_form(x: &KacMoodyElement, y: &KacMoodyElement) -> Result<ExactComplex> {
    let k = averaged_killing(&x.loop_part, &y.loop_part)?;
    Ok(-k - &x.r_c * &y.r_d - &x.r_d * &y.r_c)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KmTriple {
    pub e: KacMoodyElement,
    pub f: KacMoodyElement,
    pub h: KacMoodyElement,
}

/// Chevalley triples of `sl_{n+1}` placed at degree 0.
pub fn finite_generators(n: usize) -> Vec<KmTriple> {
    chevalley_generators(n)
        .into_iter()
        .map(|t| KmTriple {
            e: KacMoodyElement::monomial(t.e.algebra, 0, t.e.matrix).expect("in sl"),
            f: KacMoodyElement::monomial(t.f.algebra, 0, t.f.matrix).expect("in sl"),
            h: KacMoodyElement::monomial(t.h.algebra, 0, t.h.matrix).expect("in sl"),
        })
        .collect()
}

/// Loop realization of `Ã_n`: node 0 is `e₀ = F_θ z`, `f₀ = E_θ z⁻¹`,
/// `h₀ = c − H_θ`, followed by the finite triples at degree 0.
pub fn affine_generators(a: &GeneralizedCartanMatrix) -> Result<Vec<KmTriple>> {
    let n = a.n().saturating_sub(1);
    let unsupported = || Error::UnsupportedType("only untwisted affine type A is realized".into());
    if n == 0 || named_matrix(NamedType::Affine(Family::A, n)).ok().as_ref() != Some(a) {
        return Err(unsupported());
    }
    let size = n + 1;
    let alg = Algebra::Sl(size);
    let e_theta = Matrix::unit(size, 0, n);
    let f_theta = Matrix::unit(size, n, 0);
    let h_theta = e_theta.commutator(&f_theta);
    let h0 = KacMoodyElement::c(alg).sub(&KacMoodyElement::monomial(alg, 0, h_theta)?)?;
    let mut out = vec![KmTriple {
        e: KacMoodyElement::monomial(alg, 1, f_theta)?,
        f: KacMoodyElement::monomial(alg, -1, e_theta)?,
        h: h0,
    }];
    out.extend(finite_generators(n));
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationEntry {
    pub relation: String,
    pub i: usize,
    pub j: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub entries: Vec<RelationEntry>,
}

impl RelationReport {
    pub fn all_hold(&self) -> bool {
        self.entries.iter().all(|e| e.holds)
    }

    pub fn failures(&self) -> usize {
        self.entries.iter().filter(|e| !e.holds).count()
    }
}

fn ad_power(x: &KacMoodyElement, y: &KacMoodyElement, k: i64) -> Result<KacMoodyElement> {
    let mut acc = y.clone();
    for _ in 0..k {
        acc = km_bracket(x, &acc)?;
        if acc.is_zero() {
            break;
        }
    }
    Ok(acc)
}

/// R5/R6: `(ad e_i)^{1−a_ji}(e_j) = 0` and likewise for `f`, over `i ≠ j`.
pub fn serre_check(gens: &[KmTriple], a: &GeneralizedCartanMatrix) -> Result<RelationReport> {
    if gens.len() != a.n() {
        return Err(Error::SizeMismatch(gens.len(), a.n()));
    }
    let mut report = RelationReport::default();
    for i in 0..a.n() {
        for j in 0..a.n() {
            if i == j {
                continue;
            }
            let k = 1 - a.get(j, i);
            let e = ad_power(&gens[i].e, &gens[j].e, k)?;
            let f = ad_power(&gens[i].f, &gens[j].f, k)?;
            report.entries.push(RelationEntry { relation: "R5".into(), i, j, holds: e.is_zero() });
            report.entries.push(RelationEntry { relation: "R6".into(), i, j, holds: f.is_zero() });
        }
    }
    Ok(report)
}

/// R1–R4 followed by R5/R6.
pub fn realization_check(gens: &[KmTriple], a: &GeneralizedCartanMatrix) -> Result<RelationReport> {
    if gens.len() != a.n() {
        return Err(Error::SizeMismatch(gens.len(), a.n()));
    }
    let mut report = RelationReport::default();
    let mut push = |relation: &str, i, j, holds| {
        report.entries.push(RelationEntry { relation: relation.into(), i, j, holds })
    };
    for i in 0..a.n() {
        for j in 0..a.n() {
            let (gi, gj) = (&gens[i], &gens[j]);
            push("R1", i, j, km_bracket(&gi.h, &gj.h)?.is_zero());
            let ef = km_bracket(&gi.e, &gj.f)?;
            push("R2", i, j, if i == j { ef == gi.h } else { ef.is_zero() });
            let aji = ExactComplex::from_int(a.get(j, i));
            push("R3", i, j, km_bracket(&gi.h, &gj.e)? == gj.e.scale(&aji));
            push("R4", i, j, km_bracket(&gi.h, &gj.f)? == gj.f.scale(&-aji));
        }
    }
    report.entries.extend(serre_check(gens, a)?.entries);
    Ok(report)
}

/// Base map `φ₀` of an involution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BaseMap {
    Identity,
    /// `X ↦ −Xᵀ`.
    NegTranspose,
    /// `X ↦ gXg⁻¹`.
    Inner { g: Matrix, g_inv: Matrix },
    Diagram(DiagramAutomorphism),
}

impl BaseMap {
    pub fn inner(g: Matrix) -> Result<Self> {
        let g_inv = g.inverse().ok_or(Error::NotInvertible)?;
        Ok(BaseMap::Inner { g, g_inv })
    }

    pub fn apply(&self, x: &Matrix) -> Matrix {
        match self {
            BaseMap::Identity => x.clone(),
            BaseMap::NegTranspose => -&x.transpose(),
            BaseMap::Inner { g, g_inv } => &(g * x) * g_inv,
            BaseMap::Diagram(s) => s.apply_matrix(x),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Kind {
    FirstKind,
    SecondKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Linearity {
    Linear,
    ConjugateLinear,
}

/// `z ↦ z` (or `z̄` when conjugate-linear) versus `z ↦ z⁻¹` (or `1/z̄`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ArgumentAction {
    Preserve,
    Invert,
}

/// Involutions in standard form: the loop part is `φ₀` applied
/// coefficientwise (after conjugation if conjugate-linear, after `n ↦ −n`
/// if the argument is inverted), and `c`, `d` are scaled by `ε`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvolutionSpec {
    pub kind: Kind,
    pub base: BaseMap,
    pub linearity: Linearity,
    pub argument: ArgumentAction,
    pub eps_c: i8,
    pub eps_d: i8,
}

impl InvolutionSpec {
    /// Builds and validates a spec whose kind and signs follow from the
    /// argument action.
    pub fn standard(base: BaseMap, linearity: Linearity, argument: ArgumentAction, alg: Algebra) -> Result<Self> {
        let (kind, eps) = match argument {
            ArgumentAction::Preserve => (Kind::FirstKind, 1),
            ArgumentAction::Invert => (Kind::SecondKind, -1),
        };
        let spec = Self { kind, base, linearity, argument, eps_c: eps, eps_d: eps };
        spec.validate(alg)?;
        Ok(spec)
    }

    /// `f(z) ↦ f(z⁻¹)`, `c,d ↦ −c,−d`.
    pub fn second_kind_identity(alg: Algebra) -> Self {
        Self::standard(BaseMap::Identity, Linearity::Linear, ArgumentAction::Invert, alg)
            .expect("identity is a legal base map")
    }

    /// The conjugation fixing the compact form: `f_n ↦ −(f_{−n})^†`,
    /// `a·c ↦ −ā·c`.
    pub fn compact_conjugation(alg: Algebra) -> Self {
        Self::standard(BaseMap::NegTranspose, Linearity::ConjugateLinear, ArgumentAction::Invert, alg)
            .expect("compact conjugation is legal")
    }

    fn map_coeff(&self, x: &Matrix) -> Matrix {
        match self.linearity {
            Linearity::Linear => self.base.apply(x),
            Linearity::ConjugateLinear => self.base.apply(&x.conj()),
        }
    }

    fn map_scalar(&self, eps: i8, a: &ExactComplex) -> ExactComplex {
        let a = match self.linearity {
            Linearity::Linear => a.clone(),
            Linearity::ConjugateLinear => a.conj(),
        };
        if eps < 0 {
            -a
        } else {
            a
        }
    }

    /// Checks the kind/sign/argument consistency, that `φ₀` preserves the
    /// algebra and the bracket, and that the induced map squares to the
    /// identity on a spanning set.
    pub fn validate(&self, alg: Algebra) -> Result<()> {
        let want = match self.argument {
            ArgumentAction::Preserve => (Kind::FirstKind, 1),
            ArgumentAction::Invert => (Kind::SecondKind, -1),
        };
        if (self.kind, self.eps_c) != want || self.eps_d != self.eps_c {
            return Err(Error::IllegalSpec(format!(
                "{:?} with argument action {:?} requires signs {}",
                self.kind, self.argument, want.1
            )));
        }
        match &self.base {
            BaseMap::Inner { g, g_inv } => {
                if g.size() != alg.size() || (g * g_inv) != Matrix::identity(alg.size()) {
                    return Err(Error::IllegalSpec("inner map needs g·g⁻¹ = 1".into()));
                }
            }
            BaseMap::Diagram(s)
                if (s.size() != alg.size() || (s.order() == 2 && !matches!(alg, Algebra::Sl(_)))) => {
                    return Err(Error::IllegalSpec("diagram automorphism does not fit the algebra".into()));
                }
            _ => {}
        }
        let mut basis = complex_basis(alg);
        let i = ExactComplex::i();
        basis.extend(complex_basis(alg).iter().map(|b| b.scale(&i)));
        for x in &basis {
            let y = self.map_coeff(x);
            if !alg.contains(&y) {
                return Err(Error::IllegalSpec("base map leaves the algebra".into()));
            }
            if self.map_coeff(&y) != *x {
                return Err(Error::IllegalSpec("base map is not involutive".into()));
            }
        }
        for x in &basis {
            for y in &basis {
                let lhs = self.map_coeff(&x.commutator(y));
                let rhs = self.map_coeff(x).commutator(&self.map_coeff(y));
                if lhs != rhs {
                    return Err(Error::IllegalSpec("base map does not preserve the bracket".into()));
                }
            }
        }
        Ok(())
    }
}

pub fn apply_involution(rho: &InvolutionSpec, x: &KacMoodyElement) -> KacMoodyElement {
    let mut coeffs = BTreeMap::new();
    for (d, m) in x.loop_part.terms() {
        let deg = match rho.argument {
            ArgumentAction::Preserve => d,
            ArgumentAction::Invert => -d,
        };
        coeffs.insert(deg, rho.map_coeff(m));
    }
    KacMoodyElement::new(
        LaurentLoop::from_map_unchecked(x.algebra(), coeffs),
        rho.map_scalar(rho.eps_c, &x.r_c),
        rho.map_scalar(rho.eps_d, &x.r_d),
    )
}

/// Real coordinates of `x` in a fixed window of degrees: real and imaginary
/// parts of every matrix entry in `[lo, hi]`, then `r_c`, `r_d`.
pub fn real_coordinates(x: &KacMoodyElement, lo: i64, hi: i64) -> Vec<BigRational> {
    let n = x.algebra().size();
    let width = 2 * n * n;
    let mut out = vec![BigRational::zero(); (hi - lo + 1) as usize * width + 4];
    for (d, m) in x.loop_part.terms() {
        assert!((lo..=hi).contains(&d), "degree {d} outside coordinate window");
        let base = (d - lo) as usize * width;
        for (k, e) in m.entries().iter().enumerate() {
            out[base + 2 * k] = e.re.clone();
            out[base + 2 * k + 1] = e.im.clone();
        }
    }
    let tail = out.len() - 4;
    out[tail] = x.r_c.re.clone();
    out[tail + 1] = x.r_c.im.clone();
    out[tail + 2] = x.r_d.re.clone();
    out[tail + 3] = x.r_d.im.clone();
    out
}

/// Degree window covering every element.
pub fn degree_window<'a>(xs: impl IntoIterator<Item = &'a KacMoodyElement>) -> (i64, i64) {
    let m = xs.into_iter().map(|x| x.max_abs_degree()).max().unwrap_or(0);
    (-m, m)
}

/// Drops elements that are real-linearly dependent on earlier ones.
pub fn real_independent_subset(xs: &[KacMoodyElement], window: (i64, i64)) -> Vec<KacMoodyElement> {
    let mut ech: EchelonBasis<BigRational> = EchelonBasis::new();
    xs.iter()
        .filter(|x| ech.insert(&real_coordinates(x, window.0, window.1)))
        .cloned()
        .collect()
}

/// Real dimension of the real span.
pub fn real_rank(xs: &[KacMoodyElement]) -> usize {
    let w = degree_window(xs);
    real_independent_subset(xs, w).len()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EigenSplit {
    pub k: Vec<KacMoodyElement>,
    pub p: Vec<KacMoodyElement>,
}

/// Real bases of the `±1` eigenspaces inside the real span of `basis`,
/// obtained from the projectors `(1 ± ρ)/2`.
pub fn eigenspace_split(rho: &InvolutionSpec, basis: &[KacMoodyElement]) -> Result<EigenSplit> {
    let half = BigRational::new(1.into(), 2.into());
    let mut k = Vec::new();
    let mut p = Vec::new();
    for b in basis {
        let rb = apply_involution(rho, b);
        if apply_involution(rho, &rb) != *b {
            return Err(Error::NotInvolutive);
        }
        k.push(b.add(&rb)?.scale_rational(&half));
        p.push(b.sub(&rb)?.scale_rational(&half));
    }
    let all: Vec<KacMoodyElement> = basis.iter().chain(&k).chain(&p).cloned().collect();
    let w = degree_window(&all);
    let k = real_independent_subset(&k, w);
    let p = real_independent_subset(&p, w);
    Ok(EigenSplit { k, p })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LieTripleReport {
    pub kk_in_k: bool,
    pub kp_in_p: bool,
    pub pp_in_k: bool,
    pub cases: usize,
}

impl LieTripleReport {
    pub fn holds(&self) -> bool {
        self.kk_in_k && self.kp_in_p && self.pp_in_k
    }
}

/// Checks the eigenspace inclusions on all pairs of the split.
pub fn lie_triple_check(rho: &InvolutionSpec, split: &EigenSplit) -> Result<LieTripleReport> {
    let in_eigen = |y: &KacMoodyElement, sign: i64| {
        let ry = apply_involution(rho, y);
        if sign > 0 {
            ry == *y
        } else {
            ry == y.neg()
        }
    };
    let mut rep = LieTripleReport { kk_in_k: true, kp_in_p: true, pp_in_k: true, cases: 0 };
    for (a, b, sign, flag) in [
        (&split.k, &split.k, 1, 0usize),
        (&split.k, &split.p, -1, 1),
        (&split.p, &split.p, 1, 2),
    ] {
        for x in a {
            for y in b {
                rep.cases += 1;
                if !in_eigen(&km_bracket(x, y)?, sign) {
                    match flag {
                        0 => rep.kk_in_k = false,
                        1 => rep.kp_in_p = false,
                        _ => rep.pp_in_k = false,
                    }
                }
            }
        }
    }
    Ok(rep)
}

/// A real basis of the compact real form truncated at `|n| ≤ max_deg`:
/// `A zⁿ − A^† z⁻ⁿ` for `A` in a real basis of `𝔤_ℂ`, the compact basis at
/// degree 0, and `i·c`, `i·d`.
pub fn compact_km_basis(alg: Algebra, max_deg: i64) -> Vec<KacMoodyElement> {
    let i = ExactComplex::i();
    let mut out: Vec<KacMoodyElement> = compact_basis(alg)
        .into_iter()
        .map(|m| KacMoodyElement::monomial(alg, 0, m).expect("compact basis lies in the algebra"))
        .collect();
    let mut real_basis = complex_basis(alg);
    real_basis.extend(complex_basis(alg).iter().map(|b| b.scale(&i)));
    for n in 1..=max_deg {
        for a in &real_basis {
            let l = LaurentLoop::from_terms(alg, [(n, a.clone()), (-n, -&a.adjoint())])
                .expect("adjoint stays in the algebra");
            out.push(KacMoodyElement::from_loop(l));
        }
    }
    out.push(KacMoodyElement::c(alg).scale(&i));
    out.push(KacMoodyElement::d(alg).scale(&i));
    out
}

/// Membership in the compact real form: reality condition on the loop and
/// purely imaginary `r_c`, `r_d`.
pub fn is_compact(x: &KacMoodyElement) -> bool {
    crate::loop_algebra::reality_check(&x.loop_part) && x.r_c.re.is_zero() && x.r_d.re.is_zero()
}
