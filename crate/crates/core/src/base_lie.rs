//! Finite-dimensional matrix Lie algebras: `sl_n` in the defining
//! representation, plus an abelian diagonal algebra used for the Euclidean
//! symmetric-space case.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::ExactComplex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Algebra {
    /// Traceless `n×n` matrices.
    Sl(usize),
    /// Diagonal `n×n` matrices with zero bracket.
    Abelian(usize),
}

impl Algebra {
    pub fn size(&self) -> usize {
        match *self {
            Algebra::Sl(n) | Algebra::Abelian(n) => n,
        }
    }

    /// Complex dimension.
    pub fn dim(&self) -> usize {
        match *self {
            Algebra::Sl(n) => n * n - 1,
            Algebra::Abelian(n) => n,
        }
    }

    /// `κ(X,Y) = factor·tr(XY)` where `κ` is the Killing form.
    pub fn killing_factor(&self) -> i64 {
        match *self {
            Algebra::Sl(n) => 2 * n as i64,
            Algebra::Abelian(_) => 0,
        }
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        if m.size() != self.size() {
            return false;
        }
        match self {
            Algebra::Sl(_) => m.trace().is_zero(),
            Algebra::Abelian(_) => m.is_diagonal(),
        }
    }

    /// Parses `sl2`, `sl3`, ... and `u1`, `abelian2`, ...
    pub fn parse(s: &str) -> Option<Self> {
        let s = s.trim().to_ascii_lowercase();
        if let Some(rest) = s.strip_prefix("sl") {
            return rest.parse().ok().filter(|&n| n >= 2).map(Algebra::Sl);
        }
        if let Some(rest) = s.strip_prefix("abelian") {
            return rest.parse().ok().filter(|&n| n >= 1).map(Algebra::Abelian);
        }
        if s == "u1" {
            return Some(Algebra::Abelian(1));
        }
        None
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Algebra::Sl(n) => write!(f, "sl{n}"),
            Algebra::Abelian(n) => write!(f, "abelian{n}"),
        }
    }
}

pub(crate) fn check_tag(a: Algebra, b: Algebra) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::TagMismatch(a.to_string(), b.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FiniteLieElement {
    pub algebra: Algebra,
    pub matrix: Matrix,
}

impl FiniteLieElement {
    pub fn new(algebra: Algebra, matrix: Matrix) -> Result<Self> {
        if !algebra.contains(&matrix) {
            return Err(Error::NotInAlgebra(algebra.to_string()));
        }
        Ok(Self { algebra, matrix })
    }

    /// Wraps a traceless matrix as an element of `sl_n`.
    pub fn sl(matrix: Matrix) -> Result<Self> {
        Self::new(Algebra::Sl(matrix.size()), matrix)
    }

    pub fn zero(algebra: Algebra) -> Self {
        Self {
            algebra,
            matrix: Matrix::zeros(algebra.size()),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }
}

fn same_shape(x: &FiniteLieElement, y: &FiniteLieElement) -> Result<()> {
    if x.matrix.size() != y.matrix.size() {
        return Err(Error::SizeMismatch(x.matrix.size(), y.matrix.size()));
    }
    check_tag(x.algebra, y.algebra)
}

pub fn bracket(x: &FiniteLieElement, y: &FiniteLieElement) -> Result<FiniteLieElement> {
    same_shape(x, y)?;
    Ok(FiniteLieElement {
        algebra: x.algebra,
        matrix: x.matrix.commutator(&y.matrix),
    })
}

/// `tr(XY)`. For `sl_n` the Killing form is `2n·tr(XY)`.
pub fn trace_form(x: &FiniteLieElement, y: &FiniteLieElement) -> Result<ExactComplex> {
    same_shape(x, y)?;
    Ok(trace_product(&x.matrix, &y.matrix))
}

/// `tr(AB)` without forming the product.
pub fn trace_product(a: &Matrix, b: &Matrix) -> ExactComplex {
    let n = a.size();
    let mut acc = ExactComplex::zero();
    for i in 0..n {
        for k in 0..n {
            let x = a.get(i, k);
            if x.is_zero() {
                continue;
            }
            let y = b.get(k, i);
            if !y.is_zero() {
                acc += &(x * y);
            }
        }
    }
    acc
}

/// The standard `sl₂` triple `(E, F, H)`.
pub fn sl2_triple() -> (Matrix, Matrix, Matrix) {
    (
        Matrix::unit(2, 0, 1),
        Matrix::unit(2, 1, 0),
        Matrix::from_ints(&[&[1, 0], &[0, -1]]),
    )
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChevalleyTriple {
    pub e: FiniteLieElement,
    pub f: FiniteLieElement,
    pub h: FiniteLieElement,
}

/// Simple-root triples `(E_{i,i+1}, E_{i+1,i}, E_ii − E_{i+1,i+1})` of `sl_{n+1}`.
pub fn chevalley_generators(n: usize) -> Vec<ChevalleyTriple> {
    let size = n + 1;
    let alg = Algebra::Sl(size);
    (0..n)
        .map(|i| {
            let mut h = Matrix::zeros(size);
            h.set(i, i, ExactComplex::one());
            h.set(i + 1, i + 1, ExactComplex::from_int(-1));
            ChevalleyTriple {
                e: FiniteLieElement {
                    algebra: alg,
                    matrix: Matrix::unit(size, i, i + 1),
                },
                f: FiniteLieElement {
                    algebra: alg,
                    matrix: Matrix::unit(size, i + 1, i),
                },
                h: FiniteLieElement { algebra: alg, matrix: h },
            }
        })
        .collect()
}

/// True iff `X = −X̄ᵀ`.
pub fn compact_reality_check(x: &Matrix) -> bool {
    x.adjoint() == -x
}

/// A complex basis of the algebra.
pub fn complex_basis(alg: Algebra) -> Vec<Matrix> {
    let n = alg.size();
    let mut out = Vec::new();
    match alg {
        Algebra::Sl(_) => {
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        out.push(Matrix::unit(n, i, j));
                    }
                }
            }
            for i in 0..n - 1 {
                let mut h = Matrix::zeros(n);
                h.set(i, i, ExactComplex::one());
                h.set(i + 1, i + 1, ExactComplex::from_int(-1));
                out.push(h);
            }
        }
        Algebra::Abelian(_) => {
            for i in 0..n {
                out.push(Matrix::unit(n, i, i));
            }
        }
    }
    out
}

/// A real basis of the compact form: for `sl_n` a basis of `su(n)`, for the
/// abelian algebra `i·E_jj`.
pub fn compact_basis(alg: Algebra) -> Vec<Matrix> {
    let n = alg.size();
    let i = ExactComplex::i();
    let mut out = Vec::new();
    match alg {
        Algebra::Sl(_) => {
            for a in 0..n - 1 {
                let mut h = Matrix::zeros(n);
                h.set(a, a, i.clone());
                h.set(a + 1, a + 1, -&i);
                out.push(h);
            }
            for a in 0..n {
                for b in a + 1..n {
                    out.push(&Matrix::unit(n, a, b) - &Matrix::unit(n, b, a));
                    out.push((&Matrix::unit(n, a, b) + &Matrix::unit(n, b, a)).scale(&i));
                }
            }
        }
        Algebra::Abelian(_) => {
            for a in 0..n {
                out.push(Matrix::unit(n, a, a).scale(&i));
            }
        }
    }
    out
}

/// Diagram automorphism of `A_{n-1} = sl_n`. Order 2 acts by
/// `X ↦ −J Xᵀ J⁻¹` with `J` the antidiagonal ones matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramAutomorphism {
    order: u8,
    size: usize,
}

impl DiagramAutomorphism {
    /// Order 3 (triality of `D₄`) needs cube roots of unity, which are not
    /// Gaussian rationals, and is rejected.
    pub fn new(order: u8, size: usize) -> Result<Self> {
        match order {
            1 | 2 => Ok(Self { order, size }),
            3 => Err(Error::UnsupportedOrder(3)),
            m => Err(Error::UnsupportedOrder(m)),
        }
    }

    pub fn identity(size: usize) -> Self {
        Self { order: 1, size }
    }

    pub fn order(&self) -> u8 {
        self.order
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// The antidiagonal ones matrix `J`.
    pub fn j(&self) -> Matrix {
        let n = self.size;
        let mut j = Matrix::zeros(n);
        for a in 0..n {
            j.set(a, n - 1 - a, ExactComplex::one());
        }
        j
    }

    pub fn apply_matrix(&self, x: &Matrix) -> Matrix {
        if self.order == 1 {
            return x.clone();
        }
        // J⁻¹ = J, so −J Xᵀ J is an index reversal of −Xᵀ.
        let n = self.size;
        let mut out = Matrix::zeros(n);
        for a in 0..n {
            for b in 0..n {
                out.set(a, b, -x.get(n - 1 - b, n - 1 - a));
            }
        }
        out
    }
}

pub fn apply_diagram_automorphism(
    sigma: &DiagramAutomorphism,
    x: &FiniteLieElement,
) -> Result<FiniteLieElement> {
    if x.matrix.size() != sigma.size {
        return Err(Error::SizeMismatch(sigma.size, x.matrix.size()));
    }
    if sigma.order == 2 && !matches!(x.algebra, Algebra::Sl(_)) {
        return Err(Error::UnsupportedAlgebra(x.algebra.to_string()));
    }
    Ok(FiniteLieElement {
        algebra: x.algebra,
        matrix: sigma.apply_matrix(&x.matrix),
    })
}
