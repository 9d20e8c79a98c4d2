//! Laurent-polynomial loops `f(z) = Σ f_n zⁿ` with coefficients in a base
//! algebra.
//!
//! Conventions used everywhere downstream:
//! - `δf = z f'`, so `(δf)_n = n·f_n`.
//! - `averaged_killing(f,g) = Σ_n tr(f_n g_{−n})`, negative definite on the
//!   compact form.
//! - `cocycle(f,g) = Res⟨f, g'⟩` with `⟨X,Y⟩ = −tr(XY)`, which works out to
//!   `Σ_n n·tr(f_n g_{−n})`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::base_lie::{check_tag, trace_product, Algebra, DiagramAutomorphism};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::ExactComplex;

/// Invariant: no zero coefficient is stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentLoop {
    algebra: Algebra,
    coeffs: BTreeMap<i64, Matrix>,
}

/// Wire form of one coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LoopTerm {
    pub deg: i64,
    pub matrix: Matrix,
}

impl LaurentLoop {
    pub fn zero(algebra: Algebra) -> Self {
        Self {
            algebra,
            coeffs: BTreeMap::new(),
        }
    }

    /// `X·z^deg`.
    pub fn monomial(algebra: Algebra, deg: i64, x: Matrix) -> Result<Self> {
        Self::from_terms(algebra, [(deg, x)])
    }

    /// Sums the given terms; repeated degrees accumulate.
    pub fn from_terms(algebra: Algebra, terms: impl IntoIterator<Item = (i64, Matrix)>) -> Result<Self> {
        let mut out = Self::zero(algebra);
        for (deg, x) in terms {
            if !algebra.contains(&x) {
                return Err(Error::NotInAlgebra(algebra.to_string()));
            }
            out.add_term(deg, &x);
        }
        Ok(out)
    }

    pub fn from_wire(algebra: Algebra, terms: Vec<LoopTerm>) -> Result<Self> {
        Self::from_terms(algebra, terms.into_iter().map(|t| (t.deg, t.matrix)))
    }

    pub fn to_wire(&self) -> Vec<LoopTerm> {
        self.coeffs
            .iter()
            .map(|(&deg, m)| LoopTerm { deg, matrix: m.clone() })
            .collect()
    }

    /// Skips the membership check; callers guarantee `x` lies in the algebra.
    pub(crate) fn add_term(&mut self, deg: i64, x: &Matrix) {
        if x.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&deg) {
            Some(c) => {
                *c = &*c + x;
                if c.is_zero() {
                    self.coeffs.remove(&deg);
                }
            }
            None => {
                self.coeffs.insert(deg, x.clone());
            }
        }
    }

    pub(crate) fn from_map_unchecked(algebra: Algebra, coeffs: BTreeMap<i64, Matrix>) -> Self {
        Self {
            algebra,
            coeffs: coeffs.into_iter().filter(|(_, m)| !m.is_zero()).collect(),
        }
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    pub fn coeff(&self, deg: i64) -> Option<&Matrix> {
        self.coeffs.get(&deg)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Matrix)> {
        self.coeffs.iter().map(|(&d, m)| (d, m))
    }

    pub fn support(&self) -> Vec<i64> {
        self.coeffs.keys().copied().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Largest `|n|` in the support.
    pub fn max_abs_degree(&self) -> i64 {
        self.coeffs.keys().map(|d| d.abs()).max().unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_tag(self.algebra, other.algebra)?;
        let mut out = self.clone();
        for (&d, m) in &other.coeffs {
            out.add_term(d, m);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map(|_, m| -m)
    }

    pub fn scale(&self, s: &ExactComplex) -> Self {
        if s.is_zero() {
            return Self::zero(self.algebra);
        }
        self.map(|_, m| m.scale(s))
    }

    /// Applies `phi` coefficientwise, keeping degrees.
    pub fn map(&self, phi: impl Fn(i64, &Matrix) -> Matrix) -> Self {
        Self::from_map_unchecked(
            self.algebra,
            self.coeffs.iter().map(|(&d, m)| (d, phi(d, m))).collect(),
        )
    }

    /// `z ↦ z⁻¹`.
    pub fn invert_degrees(&self) -> Self {
        Self {
            algebra: self.algebra,
            coeffs: self.coeffs.iter().map(|(&d, m)| (-d, m.clone())).collect(),
        }
    }

    /// Conjugates every coefficient entrywise.
    pub fn conj(&self) -> Self {
        self.map(|_, m| m.conj())
    }

    /// `z ↦ w·z`, i.e. `f_n ↦ wⁿ f_n`; `w` must be a unit so negative powers
    /// make sense.
    pub fn rotate(&self, w: &ExactComplex) -> Self {
        let winv = w.inv().expect("rotation must be nonzero");
        self.map(|d, m| {
            let p = if d >= 0 { w.pow(d as u32) } else { winv.pow((-d) as u32) };
            m.scale(&p)
        })
    }
}

impl Serialize for LaurentLoop {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_wire().serialize(serializer)
    }
}

/// `[f,g]_k = Σ_{n+m=k} [f_n, g_m]`.
pub fn loop_bracket(f: &LaurentLoop, g: &LaurentLoop) -> Result<LaurentLoop> {
    check_tag(f.algebra, g.algebra)?;
    let mut out: BTreeMap<i64, Matrix> = BTreeMap::new();
    for (&a, x) in &f.coeffs {
        for (&b, y) in &g.coeffs {
            let c = x.commutator(y);
            if c.is_zero() {
                continue;
            }
            out.entry(a + b)
                .and_modify(|acc| *acc = &*acc + &c)
                .or_insert(c);
        }
    }
    Ok(LaurentLoop::from_map_unchecked(f.algebra, out))
}

pub fn loop_derivative(f: &LaurentLoop) -> LaurentLoop {
    f.map(|d, m| m.scale(&ExactComplex::from_int(d)))
}

/// `Σ_n tr(f_n g_{−n})`.
pub fn averaged_killing(f: &LaurentLoop, g: &LaurentLoop) -> Result<ExactComplex> {
    check_tag(f.algebra, g.algebra)?;
    Ok(f.coeffs
        .iter()
        .filter_map(|(&d, x)| g.coeffs.get(&-d).map(|y| trace_product(x, y)))
        .sum())
}

/// `Σ_n n·tr(f_n g_{−n})`; antisymmetric, and `ω(F z, E z⁻¹) = 1` in `sl₂`.
pub fn cocycle(f: &LaurentLoop, g: &LaurentLoop) -> Result<ExactComplex> {
    check_tag(f.algebra, g.algebra)?;
    Ok(f.coeffs
        .iter()
        .filter(|(&d, _)| d != 0)
        .filter_map(|(&d, x)| {
            g.coeffs
                .get(&-d)
                .map(|y| trace_product(x, y).scale(&num_rational::BigRational::from_integer(d.into())))
        })
        .sum())
}

/// `f_n = −(f_{−n})^†` for every `n`.
pub fn reality_check(f: &LaurentLoop) -> bool {
    let degrees: std::collections::BTreeSet<i64> =
        f.coeffs.keys().flat_map(|&d| [d, -d]).collect();
    degrees.into_iter().all(|d| match (f.coeffs.get(&d), f.coeffs.get(&-d)) {
        (Some(a), Some(b)) => *a == -&b.adjoint(),
        _ => false,
    })
}

/// `σ(f_n) = ωⁿ f_n` with `ω = e^{2πi/m}`.
pub fn twist_check(f: &LaurentLoop, sigma: &DiagramAutomorphism) -> Result<bool> {
    match sigma.order() {
        1 => Ok(true),
        2 => Ok(f.coeffs.iter().all(|(&d, m)| {
            let s = sigma.apply_matrix(m);
            if d.rem_euclid(2) == 0 {
                s == *m
            } else {
                s == -m
            }
        })),
        m => Err(Error::UnsupportedOrder(m)),
    }
}
