//! Loop-group words, their Adjoint and gauge actions, the monodromy solver
//! for finite-type flats, and the rank-one affine Weyl group.
//!
//! With `L = δg·g⁻¹` and `U = g u g⁻¹` the Adjoint action of `g` is
//! `Ad(g)(u + a c + b d) = (U − bL) + (a − ⟨U,L⟩ + ½b⟨L,L⟩) c + b d`,
//! where `⟨·,·⟩` is the positive loop form `−Σ tr(f_n g_{−n})`. A rotation
//! `w` acts first, by `u_n ↦ wⁿ u_n`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::base_lie::{compact_basis, Algebra};
use crate::error::{Error, Result};
use crate::kac_moody::{km_bracket, KacMoodyElement};
use crate::loop_algebra::{averaged_killing, reality_check, LaurentLoop};
use crate::matrix::Matrix;
use crate::scalar::ExactComplex;

/// A square matrix whose entries are Laurent polynomials, stored by degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentMatrix {
    n: usize,
    coeffs: BTreeMap<i64, Matrix>,
}

impl LaurentMatrix {
    pub fn identity(n: usize) -> Self {
        Self::constant(Matrix::identity(n))
    }

    pub fn constant(m: Matrix) -> Self {
        Self::from_map(m.size(), BTreeMap::from([(0, m)]))
    }

    fn from_map(n: usize, coeffs: BTreeMap<i64, Matrix>) -> Self {
        Self {
            n,
            coeffs: coeffs.into_iter().filter(|(_, m)| !m.is_zero()).collect(),
        }
    }

    pub fn from_loop(l: &LaurentLoop) -> Self {
        Self::from_map(
            l.algebra().size(),
            l.terms().map(|(d, m)| (d, m.clone())).collect(),
        )
    }

    /// `diag(z^{k_1}, …, z^{k_n})`.
    pub fn torus(k: &[i64]) -> Self {
        let n = k.len();
        let mut coeffs: BTreeMap<i64, Matrix> = BTreeMap::new();
        for (i, &ki) in k.iter().enumerate() {
            coeffs
                .entry(ki)
                .or_insert_with(|| Matrix::zeros(n))
                .set(i, i, ExactComplex::one());
        }
        Self::from_map(n, coeffs)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn coeff(&self, d: i64) -> Option<&Matrix> {
        self.coeffs.get(&d)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Matrix)> {
        self.coeffs.iter().map(|(&d, m)| (d, m))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0) == Some(&Matrix::identity(self.n))
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out: BTreeMap<i64, Matrix> = BTreeMap::new();
        for (&a, x) in &self.coeffs {
            for (&b, y) in &o.coeffs {
                let p = x * y;
                out.entry(a + b).and_modify(|acc| *acc = &*acc + &p).or_insert(p);
            }
        }
        Self::from_map(self.n, out)
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.coeffs.clone();
        for (&d, m) in &o.coeffs {
            out.entry(d).and_modify(|acc| *acc = &*acc + m).or_insert_with(|| m.clone());
        }
        Self::from_map(self.n, out)
    }

    pub fn scale(&self, s: &ExactComplex) -> Self {
        Self::from_map(self.n, self.coeffs.iter().map(|(&d, m)| (d, m.scale(s))).collect())
    }

    /// `z d/dz` entrywise.
    pub fn derivative(&self) -> Self {
        Self::from_map(
            self.n,
            self.coeffs
                .iter()
                .map(|(&d, m)| (d, m.scale(&ExactComplex::from_int(d))))
                .collect(),
        )
    }

    /// `A(z) ↦ A(wz)`.
    pub fn rotate(&self, w: &ExactComplex) -> Self {
        let winv = w.inv().expect("rotation must be nonzero");
        Self::from_map(
            self.n,
            self.coeffs
                .iter()
                .map(|(&d, m)| {
                    let p = if d >= 0 { w.pow(d as u32) } else { winv.pow((-d) as u32) };
                    (d, m.scale(&p))
                })
                .collect(),
        )
    }

    pub fn to_loop(&self, alg: Algebra) -> Result<LaurentLoop> {
        LaurentLoop::from_terms(alg, self.coeffs.iter().map(|(&d, m)| (d, m.clone())))
    }

    /// Value at `z = e^{it}`.
    pub fn eval_c64(&self, t: f64) -> DMatrix<Complex64> {
        let mut out = DMatrix::zeros(self.n, self.n);
        for (&d, m) in &self.coeffs {
            out += m.to_c64() * Complex64::from_polar(1.0, d as f64 * t);
        }
        out
    }
}

/// One generator of a loop-group word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generator {
    /// `exp(N)` for a loop `N` that is nilpotent as a matrix over Laurent
    /// polynomials.
    ExpNilpotent(LaurentLoop),
    /// `diag(z^{k_1}, …, z^{k_n})` with `Σ k_i = 0`.
    Torus(Vec<i64>),
    /// A constant invertible matrix together with its inverse.
    Constant { g: Matrix, g_inv: Matrix },
}

impl Generator {
    pub fn exp(n: LaurentLoop) -> Result<Self> {
        nilpotent_exp(&n)?;
        Ok(Generator::ExpNilpotent(n))
    }

    pub fn torus(k: Vec<i64>) -> Result<Self> {
        if k.is_empty() || k.iter().sum::<i64>() != 0 {
            return Err(Error::NotInAlgebra("torus exponents must sum to zero".into()));
        }
        Ok(Generator::Torus(k))
    }

    pub fn constant(g: Matrix) -> Result<Self> {
        let g_inv = g.inverse().ok_or(Error::NotInvertible)?;
        Ok(Generator::Constant { g, g_inv })
    }

    fn size(&self) -> usize {
        match self {
            Generator::ExpNilpotent(n) => n.algebra().size(),
            Generator::Torus(k) => k.len(),
            Generator::Constant { g, .. } => g.size(),
        }
    }

    fn evaluate(&self) -> Result<LaurentMatrix> {
        match self {
            Generator::ExpNilpotent(n) => nilpotent_exp(n),
            Generator::Torus(k) => Ok(LaurentMatrix::torus(k)),
            Generator::Constant { g, .. } => Ok(LaurentMatrix::constant(g.clone())),
        }
    }

    fn inverse(&self) -> Generator {
        match self {
            Generator::ExpNilpotent(n) => Generator::ExpNilpotent(n.neg()),
            Generator::Torus(k) => Generator::Torus(k.iter().map(|x| -x).collect()),
            Generator::Constant { g, g_inv } => Generator::Constant { g: g_inv.clone(), g_inv: g.clone() },
        }
    }

    /// `h(z) ↦ h(wz)`, written again as generators.
    fn rotate(&self, w: &ExactComplex) -> Vec<Generator> {
        match self {
            Generator::ExpNilpotent(n) => vec![Generator::ExpNilpotent(n.rotate(w))],
            Generator::Torus(k) => {
                let winv = w.inv().expect("unit");
                let diag: Vec<ExactComplex> = k
                    .iter()
                    .map(|&e| if e >= 0 { w.pow(e as u32) } else { winv.pow((-e) as u32) })
                    .collect();
                let d = Matrix::diag(&diag);
                let dinv = Matrix::diag(&diag.iter().map(|x| x.inv().expect("unit")).collect::<Vec<_>>());
                vec![Generator::Constant { g: d, g_inv: dinv }, self.clone()]
            }
            Generator::Constant { .. } => vec![self.clone()],
        }
    }
}

/// `exp(N) = Σ_{k<n} N^k/k!`, or `NotNilpotent` if `Nⁿ ≠ 0`.
fn nilpotent_exp(n: &LaurentLoop) -> Result<LaurentMatrix> {
    let size = n.algebra().size();
    let nm = LaurentMatrix::from_loop(n);
    let mut out = LaurentMatrix::identity(size);
    let mut power = LaurentMatrix::identity(size);
    let mut fact = BigRational::one();
    for k in 1..=size {
        power = power.mul(&nm);
        if power.is_zero() {
            return Ok(out);
        }
        if k == size {
            break;
        }
        fact *= BigRational::from_integer(k.into());
        out = out.add(&power.scale(&ExactComplex::from_rational(fact.recip())));
    }
    if power.is_zero() {
        Ok(out)
    } else {
        Err(Error::NotNilpotent)
    }
}

/// `|w| = 1`; rational points of the circle such as `(3 + 4i)/5` qualify.
pub fn is_unit_rotation(w: &ExactComplex) -> bool {
    w.norm_sqr().is_one()
}

/// `(g, w)`: the loop `g = factors[0]·factors[1]⋯` followed by the rotation
/// `z ↦ wz`. Products follow the semidirect law
/// `(g, w)(h, w') = (g·(h∘w), ww')`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoopGroupWord {
    factors: Vec<Generator>,
    rotation: ExactComplex,
    size: usize,
}

impl LoopGroupWord {
    pub fn identity(size: usize) -> Self {
        Self {
            factors: Vec::new(),
            rotation: ExactComplex::one(),
            size,
        }
    }

    pub fn new(size: usize, factors: Vec<Generator>, rotation: ExactComplex) -> Result<Self> {
        if !is_unit_rotation(&rotation) {
            return Err(Error::BadRotation);
        }
        if let Some(f) = factors.iter().find(|f| f.size() != size) {
            return Err(Error::SizeMismatch(size, f.size()));
        }
        Ok(Self { factors, rotation, size })
    }

    pub fn from_factors(size: usize, factors: Vec<Generator>) -> Result<Self> {
        Self::new(size, factors, ExactComplex::one())
    }

    pub fn rotation(w: ExactComplex, size: usize) -> Result<Self> {
        Self::new(size, Vec::new(), w)
    }

    pub fn factors(&self) -> &[Generator] {
        &self.factors
    }

    pub fn rotation_factor(&self) -> &ExactComplex {
        &self.rotation
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.size != other.size {
            return Err(Error::SizeMismatch(self.size, other.size));
        }
        let mut factors = self.factors.clone();
        for f in &other.factors {
            factors.extend(f.rotate(&self.rotation));
        }
        Ok(Self {
            factors,
            rotation: &self.rotation * &other.rotation,
            size: self.size,
        })
    }

    pub fn inverse(&self) -> Self {
        // (g, w)⁻¹ = (g⁻¹∘w⁻¹, w⁻¹)
        let winv = self.rotation.inv().expect("unit");
        let factors = self
            .factors
            .iter()
            .rev()
            .flat_map(|f| f.inverse().rotate(&winv))
            .collect();
        Self { factors, rotation: winv, size: self.size }
    }
}

/// The loop part `g(z)` of the word; the rotation is not included.
pub fn evaluate(g: &LoopGroupWord) -> Result<LaurentMatrix> {
    let mut acc = LaurentMatrix::identity(g.size);
    for f in &g.factors {
        acc = acc.mul(&f.evaluate()?);
    }
    Ok(acc)
}

/// `g(z)⁻¹`, from the inverses of the factors.
pub fn evaluate_inverse(g: &LoopGroupWord) -> Result<LaurentMatrix> {
    let mut acc = LaurentMatrix::identity(g.size);
    for f in g.factors.iter().rev() {
        acc = acc.mul(&f.inverse().evaluate()?);
    }
    Ok(acc)
}

fn word_algebra(g: &LoopGroupWord, x_alg: Algebra) -> Result<Algebra> {
    if x_alg.size() != g.size {
        return Err(Error::SizeMismatch(g.size, x_alg.size()));
    }
    Ok(x_alg)
}

/// `δg·g⁻¹` with `δ = z d/dz`.
pub fn log_derivative(g: &LoopGroupWord) -> Result<LaurentLoop> {
    let gm = evaluate(g)?;
    let ginv = evaluate_inverse(g)?;
    gm.derivative().mul(&ginv).to_loop(Algebra::Sl(g.size))
}

fn log_derivative_in(g: &LoopGroupWord, alg: Algebra) -> Result<(LaurentMatrix, LaurentMatrix, LaurentLoop)> {
    let gm = evaluate(g)?;
    let ginv = evaluate_inverse(g)?;
    let l = gm.derivative().mul(&ginv).to_loop(alg)?;
    Ok((gm, ginv, l))
}

fn conjugate_loop(gm: &LaurentMatrix, u: &LaurentLoop, ginv: &LaurentMatrix) -> Result<LaurentLoop> {
    gm.mul(&LaurentMatrix::from_loop(u)).mul(ginv).to_loop(u.algebra())
}

pub fn adjoint(g: &LoopGroupWord, x: &KacMoodyElement) -> Result<KacMoodyElement> {
    let alg = word_algebra(g, x.algebra())?;
    let (gm, ginv, l) = log_derivative_in(g, alg)?;
    let u = x.loop_part.rotate(&g.rotation);
    let big_u = conjugate_loop(&gm, &u, &ginv)?;
    let b = &x.r_d;
    let loop_part = big_u.sub(&l.scale(b))?;
    // −⟨U,L⟩ = +Σ tr(U_n L_{−n}); ½b⟨L,L⟩ = −½b Σ tr(L_n L_{−n}).
    let half = ExactComplex::from_ratio(1, 2);
    let r_c = &x.r_c + &averaged_killing(&big_u, &l)? - &(b * &half) * &averaged_killing(&l, &l)?;
    Ok(KacMoodyElement::new(loop_part, r_c, b.clone()))
}

/// `g·u = g u g⁻¹ − δg·g⁻¹` (after the rotation, if any).
pub fn gauge_action(g: &LoopGroupWord, u: &LaurentLoop) -> Result<LaurentLoop> {
    let alg = word_algebra(g, u.algebra())?;
    let (gm, ginv, l) = log_derivative_in(g, alg)?;
    conjugate_loop(&gm, &u.rotate(&g.rotation), &ginv)?.sub(&l)
}

/// `e^{ad N} x = Σ_k ad(N)^k x / k!`, stopping at the first zero term.
pub fn exp_ad(n: &LaurentLoop, x: &KacMoodyElement) -> Result<KacMoodyElement> {
    let nn = KacMoodyElement::from_loop(n.clone());
    let limit = 4 * n.algebra().size() + 4;
    let mut term = x.clone();
    let mut acc = x.clone();
    for k in 1..=limit {
        term = km_bracket(&nn, &term)?.scale(&ExactComplex::from_ratio(1, k as i64));
        if term.is_zero() {
            return Ok(acc);
        }
        acc = acc.add(&term)?;
    }
    Err(Error::NotNilpotent)
}

/// `Ad(exp N) x = e^{ad N} x`, exactly.
pub fn ad_exp_check(n: &LaurentLoop, x: &KacMoodyElement) -> Result<bool> {
    let g = LoopGroupWord::from_factors(n.algebra().size(), vec![Generator::exp(n.clone())?])?;
    Ok(adjoint(&g, x)? == exp_ad(n, x)?)
}

/// Configuration for [`flat_solver`].
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct FlatConfig {
    pub steps: usize,
    pub tol: f64,
}

impl Default for FlatConfig {
    fn default() -> Self {
        Self { steps: 4096, tol: 1e-8 }
    }
}

/// Numeric matrix as rows of `[re, im]` pairs.
pub type NumericMatrix = Vec<Vec<[f64; 2]>>;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MonodromyResult {
    pub kernel_dim: usize,
    pub kernel_basis: Vec<NumericMatrix>,
    /// Largest of the discarded singular values and the pairwise
    /// commutator norms of the kernel basis.
    pub residual: f64,
    pub commuting: bool,
    /// `‖φᴴφ − I‖` before projection to the unitary group.
    pub drift: f64,
    pub singular_values: Vec<f64>,
    /// `kernel_dim + 2`: the kernel plus the `c` and `d + u` directions.
    pub flat_dim: usize,
    pub steps: usize,
    pub tol: f64,
}

fn frobenius(m: &DMatrix<Complex64>) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Integrates `φ' = u(e^{it})φ` over `[0, 2π]` by classical RK4 and returns
/// the fixed space of `Ad φ(2π)` on the compact form `su(n)`.
///
/// `φ(2π)` is replaced by its unitary polar factor once the drift check has
/// passed, so the real operator `Ad φ(2π)` preserves `su(n)` to rounding.
pub fn flat_solver(u: &LaurentLoop, cfg: FlatConfig) -> Result<MonodromyResult> {
    let alg = u.algebra();
    let Algebra::Sl(n) = alg else {
        return Err(Error::UnsupportedAlgebra(alg.to_string()));
    };
    if !reality_check(u) && !u.is_zero() {
        return Err(Error::NotCompact);
    }
    let um = LaurentMatrix::from_loop(u);
    let steps = cfg.steps.max(1);
    let h = 2.0 * std::f64::consts::PI / steps as f64;
    let mut phi: DMatrix<Complex64> = DMatrix::identity(n, n);
    for s in 0..steps {
        let t = s as f64 * h;
        let a0 = um.eval_c64(t);
        let a1 = um.eval_c64(t + h / 2.0);
        let a2 = um.eval_c64(t + h);
        let hc = Complex64::new(h, 0.0);
        let half = Complex64::new(h / 2.0, 0.0);
        let k1 = &a0 * &phi;
        let k2 = &a1 * (&phi + &k1 * half);
        let k3 = &a1 * (&phi + &k2 * half);
        let k4 = &a2 * (&phi + &k3 * hc);
        phi += (k1 + k2 * Complex64::new(2.0, 0.0) + k3 * Complex64::new(2.0, 0.0) + k4)
            * Complex64::new(h / 6.0, 0.0);
    }
    let drift = frobenius(&(phi.adjoint() * &phi - DMatrix::identity(n, n)));
    if !(drift <= 100.0 * cfg.tol) {
        return Err(Error::NonUnitaryDrift(drift));
    }
    let svd = phi.clone().svd(true, true);
    let unitary = svd.u.expect("requested") * svd.v_t.expect("requested");
    let unitary_inv = unitary.adjoint();

    let basis: Vec<DMatrix<Complex64>> = compact_basis(alg).iter().map(Matrix::to_c64).collect();
    let dim = basis.len();
    let rows = 2 * n * n;
    let mut op = DMatrix::<f64>::zeros(rows, dim);
    for (k, b) in basis.iter().enumerate() {
        let image = &unitary * b * &unitary_inv - b;
        for (idx, z) in image.iter().enumerate() {
            op[(2 * idx, k)] = z.re;
            op[(2 * idx + 1, k)] = z.im;
        }
    }
    let svd = op.svd(false, true);
    let v_t = svd.v_t.expect("requested");
    let mut singular_values: Vec<f64> = svd.singular_values.iter().copied().collect();
    let mut kernel = Vec::new();
    let mut residual: f64 = 0.0;
    for (j, &sv) in svd.singular_values.iter().enumerate() {
        if sv < cfg.tol {
            residual = residual.max(sv);
            let mut m = DMatrix::<Complex64>::zeros(n, n);
            for (k, b) in basis.iter().enumerate() {
                m += b * Complex64::new(v_t[(j, k)], 0.0);
            }
            kernel.push(m);
        }
    }
    let mut commuting = true;
    for a in 0..kernel.len() {
        for b in a + 1..kernel.len() {
            let c = frobenius(&(&kernel[a] * &kernel[b] - &kernel[b] * &kernel[a]));
            residual = residual.max(c);
            if c > cfg.tol {
                commuting = false;
            }
        }
    }
    singular_values.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
    let kernel_basis = kernel
        .iter()
        .map(|m| {
            (0..n)
                .map(|i| (0..n).map(|j| [m[(i, j)].re, m[(i, j)].im]).collect())
                .collect()
        })
        .collect();
    Ok(MonodromyResult {
        kernel_dim: kernel.len(),
        kernel_basis,
        residual,
        commuting,
        drift,
        singular_values,
        flat_dim: kernel.len() + 2,
        steps,
        tol: cfg.tol,
    })
}

/// `s₀(x) = −x`, `s₁(x) = 2 − x` on the line coordinate of the rank-one
/// slice.
pub fn weyl_reflect(i: u8, x: &BigRational) -> BigRational {
    match i {
        0 => -x.clone(),
        1 => BigRational::from_integer(2.into()) - x,
        _ => panic!("rank-one affine Weyl group has generators 0 and 1"),
    }
}

/// `x ↦ εx + t`; every element of the infinite dihedral group has this form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct WeylElement {
    pub eps: i8,
    pub shift: i64,
}

impl WeylElement {
    pub const IDENTITY: Self = Self { eps: 1, shift: 0 };

    pub fn generator(i: u8) -> Self {
        match i {
            0 => Self { eps: -1, shift: 0 },
            1 => Self { eps: -1, shift: 2 },
            _ => panic!("rank-one affine Weyl group has generators 0 and 1"),
        }
    }

    /// `self ∘ other`.
    pub fn then_after(self, other: Self) -> Self {
        Self {
            eps: self.eps * other.eps,
            shift: self.eps as i64 * other.shift + self.shift,
        }
    }

    pub fn apply(self, x: &BigRational) -> BigRational {
        let e = BigRational::from_integer((self.eps as i64).into());
        e * x + BigRational::from_integer(self.shift.into())
    }
}

/// All group elements given by words of length `≤ radius`.
pub fn weyl_ball(radius: usize) -> BTreeSet<WeylElement> {
    let mut seen = BTreeSet::from([WeylElement::IDENTITY]);
    let mut queue = VecDeque::from([(WeylElement::IDENTITY, 0usize)]);
    while let Some((g, len)) = queue.pop_front() {
        if len == radius {
            continue;
        }
        for i in 0..2 {
            let h = WeylElement::generator(i).then_after(g);
            if seen.insert(h) {
                queue.push_back((h, len + 1));
            }
        }
    }
    seen
}

pub fn weyl_orbit(x: &BigRational, radius: usize) -> BTreeSet<BigRational> {
    weyl_ball(radius).into_iter().map(|g| g.apply(x)).collect()
}

/// Whether some non-identity element of word length `≤ radius` fixes `x`.
pub fn is_singular(x: &BigRational, radius: usize) -> bool {
    weyl_ball(radius)
        .into_iter()
        .any(|g| g != WeylElement::IDENTITY && g.apply(x) == *x)
}

/// Words on the `MSU(2)` slice realizing `s₀` (the constant Weyl matrix)
/// and `s₁` (a torus element followed by it).
pub fn weyl_word(i: u8) -> LoopGroupWord {
    let w0 = Matrix::from_ints(&[&[0, 1], &[-1, 0]]);
    let c = Generator::constant(w0).expect("invertible");
    let factors = match i {
        0 => vec![c],
        1 => vec![Generator::Torus(vec![-1, 1]), c],
        _ => panic!("rank-one affine Weyl group has generators 0 and 1"),
    };
    LoopGroupWord::from_factors(2, factors).expect("sizes agree")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base_lie::sl2_triple;
    use crate::scalar::rational;
    use num_traits::Zero;

    const SL2: Algebra = Algebra::Sl(2);

    fn mono(d: i64, m: &Matrix) -> LaurentLoop {
        LaurentLoop::monomial(SL2, d, m.clone()).unwrap()
    }

    fn word(f: Vec<Generator>) -> LoopGroupWord {
        LoopGroupWord::from_factors(2, f).unwrap()
    }

    #[test]
    fn evaluation() {
        let (e, _, h) = sl2_triple();
        let g = word(vec![Generator::exp(mono(1, &e)).unwrap()]);
        let expect = LaurentMatrix::identity(2).add(&LaurentMatrix::from_loop(&mono(1, &e)));
        assert_eq!(evaluate(&g).unwrap(), expect);
        assert_eq!(evaluate(&word(vec![Generator::torus(vec![1, -1]).unwrap()])).unwrap(), LaurentMatrix::torus(&[1, -1]));
        assert!(evaluate(&LoopGroupWord::identity(2)).unwrap().is_identity());
        assert_eq!(Generator::exp(mono(0, &h)), Err(Error::NotNilpotent));
        let gi = evaluate(&g).unwrap().mul(&evaluate_inverse(&g).unwrap());
        assert!(gi.is_identity());
    }

    #[test]
    fn log_derivatives() {
        let (e, _, h) = sl2_triple();
        let t = word(vec![Generator::torus(vec![1, -1]).unwrap()]);
        assert_eq!(log_derivative(&t).unwrap(), mono(0, &h));
        let c = word(vec![Generator::constant(Matrix::from_ints(&[&[1, 2], &[0, 1]])).unwrap()]);
        assert!(log_derivative(&c).unwrap().is_zero());
        let x = word(vec![Generator::exp(mono(1, &e)).unwrap()]);
        assert_eq!(log_derivative(&x).unwrap(), mono(1, &e));
    }

    #[test]
    fn adjoint_examples() {
        let (e, f, h) = sl2_triple();
        let d = KacMoodyElement::d(SL2);
        let c = KacMoodyElement::c(SL2);
        let k = word(vec![Generator::constant(Matrix::from_ints(&[&[2, 1], &[1, 1]])).unwrap()]);
        assert_eq!(adjoint(&k, &d).unwrap(), d);
        let g = word(vec![Generator::exp(mono(0, &e)).unwrap()]);
        let x = KacMoodyElement::from_loop(mono(0, &f));
        let want = &(&f + &h) - &e;
        assert_eq!(adjoint(&g, &x).unwrap(), KacMoodyElement::from_loop(mono(0, &want)));
        assert_eq!(adjoint(&g, &c).unwrap(), c);
        assert!(ad_exp_check(&mono(0, &e), &x).unwrap());
        assert!(ad_exp_check(&LaurentLoop::zero(SL2), &x).unwrap());
        assert!(ad_exp_check(&mono(2, &e), &d).unwrap());
    }

    #[test]
    fn gauge_examples() {
        let (_, _, h) = sl2_triple();
        let t = word(vec![Generator::torus(vec![1, -1]).unwrap()]);
        assert_eq!(gauge_action(&t, &LaurentLoop::zero(SL2)).unwrap(), mono(0, &-&h));
        let u = mono(2, &h);
        assert_eq!(gauge_action(&LoopGroupWord::identity(2), &u).unwrap(), u);
    }

    #[test]
    fn rotation_semidirect() {
        let (e, _, _) = sl2_triple();
        let r = LoopGroupWord::rotation(ExactComplex::i(), 2).unwrap();
        let g = word(vec![Generator::torus(vec![2, -2]).unwrap(), Generator::exp(mono(1, &e)).unwrap()]);
        let x = KacMoodyElement::from_loop(mono(3, &e)).add(&KacMoodyElement::d(SL2)).unwrap();
        let lhs = adjoint(&r, &adjoint(&g, &x).unwrap()).unwrap();
        let rhs = adjoint(&r.compose(&g).unwrap(), &x).unwrap();
        assert_eq!(lhs, rhs);
        let back = adjoint(&g.inverse(), &adjoint(&g, &x).unwrap()).unwrap();
        assert_eq!(back, x);
        assert_eq!(LoopGroupWord::rotation(ExactComplex::from_int(2), 2), Err(Error::BadRotation));
    }

    #[test]
    fn flats_small() {
        let (_, _, h) = sl2_triple();
        let ih = h.scale(&ExactComplex::i());
        let cfg = FlatConfig::default();
        assert_eq!(flat_solver(&LaurentLoop::zero(SL2), cfg).unwrap().kernel_dim, 3);
        assert_eq!(flat_solver(&mono(0, &ih), cfg).unwrap().kernel_dim, 3);
        let r = flat_solver(&mono(0, &ih.scale(&ExactComplex::from_ratio(3, 10))), cfg).unwrap();
        assert_eq!(r.kernel_dim, 1);
        assert_eq!(r.flat_dim, 3);
        assert!(r.residual < 1e-6 && r.commuting);
        let (e, _, _) = sl2_triple();
        assert_eq!(flat_solver(&mono(1, &e), cfg), Err(Error::NotCompact));
    }

    #[test]
    fn weyl() {
        let half = rational(1, 2);
        assert_eq!(weyl_reflect(0, &BigRational::zero()), BigRational::zero());
        assert_eq!(weyl_reflect(1, &BigRational::zero()), rational(2, 1));
        let x = rational(3, 7);
        assert_eq!(weyl_reflect(1, &weyl_reflect(0, &x)), &x + rational(2, 1));
        let orbit: Vec<BigRational> = weyl_orbit(&half, 2).into_iter().collect();
        let want: Vec<BigRational> = [-3, -1, 1, 3, 5].iter().map(|&k| rational(k, 2)).collect();
        assert_eq!(orbit, want);
        assert!(weyl_orbit(&BigRational::zero(), 6).iter().all(|y| y.is_integer() && y.to_integer() % 2 == 0.into()));
        assert_eq!(weyl_reflect(1, &BigRational::one()), BigRational::one());
        assert!(is_singular(&BigRational::one(), 1));
        assert!(!is_singular(&half, 8));
    }
}
