//! Dense square matrices over the Gaussian rationals, plus the small amount
//! of exact row reduction the rest of the crate needs.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::scalar::ExactComplex;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    n: usize,
    data: Vec<ExactComplex>,
}

impl Matrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![ExactComplex::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = ExactComplex::one();
        }
        m
    }

    /// Matrix unit `E_{ij}` (zero-based).
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n);
        m.data[i * n + j] = ExactComplex::one();
        m
    }

    pub fn from_rows(rows: Vec<Vec<ExactComplex>>) -> Option<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return None;
        }
        Some(Self {
            n,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| ExactComplex::from_int(x)).collect())
                .collect(),
        )
        .expect("ragged integer matrix")
    }

    pub fn diag(entries: &[ExactComplex]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n);
        for (i, e) in entries.iter().enumerate() {
            m.data[i * n + i] = e.clone();
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &ExactComplex {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: ExactComplex) {
        self.data[i * self.n + j] = v;
    }

    pub fn entries(&self) -> &[ExactComplex] {
        &self.data
    }

    pub fn rows(&self) -> Vec<Vec<ExactComplex>> {
        self.data.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(ExactComplex::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn trace(&self) -> ExactComplex {
        (0..self.n).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m.data[j * n + i] = self.data[i * n + j].clone();
            }
        }
        m
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Self {
        Self {
            n: self.n,
            data: self.data.iter().map(ExactComplex::conj).collect(),
        }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        self.conj().transpose()
    }

    pub fn scale(&self, s: &ExactComplex) -> Self {
        Self {
            n: self.n,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn scale_rational(&self, r: &BigRational) -> Self {
        Self {
            n: self.n,
            data: self.data.iter().map(|x| x.scale(r)).collect(),
        }
    }

    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// Gauss–Jordan inverse; `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.n;
        let mut a = self.rows();
        let mut inv = Self::identity(n).rows();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col].inv()?;
            for j in 0..n {
                a[col][j] = &a[col][j] * &p;
                inv[col][j] = &inv[col][j] * &p;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for j in 0..n {
                    let t = &a[col][j] * &f;
                    a[r][j] -= &t;
                    let t = &inv[col][j] * &f;
                    inv[r][j] -= &t;
                }
            }
        }
        Self::from_rows(inv)
    }

    pub fn to_c64(&self) -> nalgebra::DMatrix<num_complex::Complex64> {
        nalgebra::DMatrix::from_fn(self.n, self.n, |i, j| self.get(i, j).to_c64())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.data.chunks(self.n).enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            write!(f, "{}", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Add<&Matrix> for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.n, rhs.n, "matrix size mismatch");
        Matrix {
            n: self.n,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub<&Matrix> for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.n, rhs.n, "matrix size mismatch");
        Matrix {
            n: self.n,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul<&Matrix> for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.n, rhs.n, "matrix size mismatch");
        let n = self.n;
        let mut out = Matrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.data[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &rhs.data[k * n + j];
                    if b.is_zero() {
                        continue;
                    }
                    let t = a * b;
                    out.data[i * n + j] += &t;
                }
            }
        }
        out
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix {
            n: self.n,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.rows().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rows: Vec<Vec<ExactComplex>> = Vec::deserialize(deserializer)?;
        if rows.is_empty() {
            return Err(serde::de::Error::custom("empty matrix"));
        }
        Matrix::from_rows(rows).ok_or_else(|| serde::de::Error::custom("matrix is not square"))
    }
}

/// Incremental row-echelon basis over a field, used to test membership in
/// spans and to extract independent subsets of vectors.
#[derive(Clone, Debug, Default)]
pub struct EchelonBasis<T> {
    rows: Vec<(usize, Vec<T>)>,
}

/// Minimal field interface for [`EchelonBasis`].
pub trait ExactField: Clone {
    fn is_zero(&self) -> bool;
    fn sub_mul(&self, a: &Self, b: &Self) -> Self;
    fn div(&self, other: &Self) -> Self;
}

impl ExactField for BigRational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn sub_mul(&self, a: &Self, b: &Self) -> Self {
        self - a * b
    }
    fn div(&self, other: &Self) -> Self {
        self / other
    }
}

impl ExactField for ExactComplex {
    fn is_zero(&self) -> bool {
        ExactComplex::is_zero(self)
    }
    fn sub_mul(&self, a: &Self, b: &Self) -> Self {
        self - &(a * b)
    }
    fn div(&self, other: &Self) -> Self {
        self / other
    }
}

impl<T: ExactField> EchelonBasis<T> {
    pub fn new() -> Self {
        Self { rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the current rows; the remainder is zero iff `v`
    /// lies in the span.
    pub fn reduce(&self, v: &[T]) -> Vec<T> {
        let mut v = v.to_vec();
        for (pivot, row) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let f = v[*pivot].div(&row[*pivot]);
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = x.sub_mul(&f, r);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[T]) -> bool {
        self.reduce(v).iter().all(ExactField::is_zero)
    }

    /// Inserts `v`; returns true iff it enlarged the span.
    pub fn insert(&mut self, v: &[T]) -> bool {
        let r = self.reduce(v);
        match r.iter().position(|x| !x.is_zero()) {
            Some(p) => {
                self.rows.push((p, r));
                true
            }
            None => false,
        }
    }
}

/// Solves `Σ_k c_k·columns[k] = target` exactly; `None` if the target is not
/// in the span. Columns need not be independent (free coefficients are 0).
pub fn solve_in_span(columns: &[Vec<ExactComplex>], target: &[ExactComplex]) -> Option<Vec<ExactComplex>> {
    let m = target.len();
    let k = columns.len();
    // Augmented system rows: m equations in k unknowns.
    let mut a: Vec<Vec<ExactComplex>> = (0..m)
        .map(|i| {
            let mut row: Vec<ExactComplex> = columns.iter().map(|c| c[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..k {
        let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].inv().expect("nonzero pivot");
        for j in c..=k {
            a[r][j] = &a[r][j] * &inv;
        }
        for i in 0..m {
            if i == r || a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone();
            for j in c..=k {
                let t = &a[r][j] * &f;
                a[i][j] -= &t;
            }
        }
        pivots.push(c);
        r += 1;
        if r == m {
            break;
        }
    }
    if a[r..].iter().any(|row| !row[k].is_zero()) {
        return None;
    }
    let mut sol = vec![ExactComplex::zero(); k];
    for (i, &c) in pivots.iter().enumerate() {
        sol[c] = a[i][k].clone();
    }
    Some(sol)
}
