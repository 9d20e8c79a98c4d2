//! Generalized Cartan matrices: axioms, decomposition, classification and
//! the standard finite, affine and twisted affine tables.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Axiom, Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i64>>", into = "Vec<Vec<i64>>")]
pub struct GeneralizedCartanMatrix {
    entries: Vec<Vec<i64>>,
}

impl TryFrom<Vec<Vec<i64>>> for GeneralizedCartanMatrix {
    type Error = Error;
    fn try_from(m: Vec<Vec<i64>>) -> Result<Self> {
        validate_gcm(m)
    }
}

impl From<GeneralizedCartanMatrix> for Vec<Vec<i64>> {
    fn from(m: GeneralizedCartanMatrix) -> Self {
        m.entries
    }
}

impl GeneralizedCartanMatrix {
    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn transpose(&self) -> Self {
        let n = self.n();
        Self {
            entries: (0..n).map(|i| (0..n).map(|j| self.entries[j][i]).collect()).collect(),
        }
    }

    /// Principal submatrix on `idx` (in the given order).
    pub fn principal(&self, idx: &[usize]) -> Self {
        Self {
            entries: idx
                .iter()
                .map(|&i| idx.iter().map(|&j| self.entries[i][j]).collect())
                .collect(),
        }
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let (a, b) = (self.n(), other.n());
        let mut entries = vec![vec![0; a + b]; a + b];
        for i in 0..a {
            entries[i][..a].copy_from_slice(&self.entries[i]);
        }
        for i in 0..b {
            entries[a + i][a..].copy_from_slice(&other.entries[i]);
        }
        Self { entries }
    }
}

/// Checks the three axioms in order, reporting the first violation in
/// row-major order.
pub fn validate_gcm(m: Vec<Vec<i64>>) -> Result<GeneralizedCartanMatrix> {
    let n = m.len();
    if n == 0 {
        return Err(Error::AxisViolation { i: 0, j: 0, axiom: Axiom::Square });
    }
    if let Some(i) = m.iter().position(|r| r.len() != n) {
        return Err(Error::AxisViolation { i, j: 0, axiom: Axiom::Square });
    }
    for (i, row) in m.iter().enumerate() {
        if row[i] != 2 {
            return Err(Error::AxisViolation { i, j: i, axiom: Axiom::Diagonal });
        }
    }
    for i in 0..n {
        for j in 0..n {
            if i != j && m[i][j] > 0 {
                return Err(Error::AxisViolation { i, j, axiom: Axiom::OffDiagonalSign });
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if i != j && (m[i][j] == 0) != (m[j][i] == 0) {
                return Err(Error::AxisViolation { i, j, axiom: Axiom::ZeroSymmetry });
            }
        }
    }
    Ok(GeneralizedCartanMatrix { entries: m })
}

/// Index sets of the connected components of the Dynkin graph, each sorted,
/// ordered by smallest element.
pub fn components(m: &GeneralizedCartanMatrix) -> Vec<Vec<usize>> {
    let n = m.n();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for i in 0..n {
        for j in i + 1..n {
            if m.get(i, j) != 0 {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut root_slot = vec![usize::MAX; n];
    for i in 0..n {
        let r = find(&mut parent, i);
        if root_slot[r] == usize::MAX {
            root_slot[r] = groups.len();
            groups.push(Vec::new());
        }
        groups[root_slot[r]].push(i);
    }
    groups
}

pub fn decompose(m: &GeneralizedCartanMatrix) -> Vec<GeneralizedCartanMatrix> {
    components(m).iter().map(|c| m.principal(c)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CartanKind {
    Finite,
    Affine,
    Indefinite,
}

impl fmt::Display for CartanKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CartanKind::Finite => "finite",
            CartanKind::Affine => "affine",
            CartanKind::Indefinite => "indefinite",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanClass {
    pub kind: CartanKind,
    pub components: Vec<Vec<usize>>,
    pub component_kinds: Vec<CartanKind>,
}

/// Determinant by fraction-free elimination; `i128` with a `BigInt` fallback
/// on overflow.
pub fn determinant(rows: &[Vec<i64>]) -> BigInt {
    let m: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    match bareiss_i128(m) {
        Some(d) => BigInt::from(d),
        None => bareiss_big(
            rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect(),
        ),
    }
}

fn bareiss_i128(mut a: Vec<Vec<i128>>) -> Option<i128> {
    let n = a.len();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Some(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = a[i][j].checked_mul(a[k][k])?.checked_sub(a[i][k].checked_mul(a[k][j])?)?;
                a[i][j] = t / prev;
            }
        }
        prev = a[k][k];
    }
    if n == 0 {
        return Some(1);
    }
    sign.checked_mul(a[n - 1][n - 1])
}

fn bareiss_big(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut negate = false;
    let mut prev = BigInt::from(1);
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = t / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    if n == 0 {
        return BigInt::from(1);
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Minor criterion on an indecomposable matrix: finite iff all principal
/// minors are positive, affine iff all proper ones are and the determinant
/// vanishes. Subsets are scanned by increasing size so that small negative
/// minors exit early; the cost is exponential in the component size.
pub fn classify_indecomposable(m: &GeneralizedCartanMatrix) -> CartanKind {
    let n = m.n();
    assert!(n < 64, "minor scan is exponential in the size");
    let full = if n == 63 { u64::MAX >> 1 } else { (1u64 << n) - 1 };
    let mut masks: Vec<u64> = (1..full).filter(|s| s.count_ones() >= 2).collect();
    masks.sort_by_key(|s| s.count_ones());
    for mask in masks {
        let idx: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        if !determinant(m.principal(&idx).entries()).is_positive() {
            return CartanKind::Indefinite;
        }
    }
    let d = determinant(m.entries());
    if d.is_positive() {
        CartanKind::Finite
    } else if d.is_zero() {
        CartanKind::Affine
    } else {
        CartanKind::Indefinite
    }
}

/// A decomposable matrix is finite (affine) iff every component is.
pub fn classify(m: &GeneralizedCartanMatrix) -> CartanClass {
    let comps = components(m);
    let kinds: Vec<CartanKind> = comps
        .iter()
        .map(|c| classify_indecomposable(&m.principal(c)))
        .collect();
    let kind = if kinds.iter().all(|&k| k == CartanKind::Finite) {
        CartanKind::Finite
    } else if kinds.iter().all(|&k| k == CartanKind::Affine) {
        CartanKind::Affine
    } else {
        CartanKind::Indefinite
    };
    CartanClass {
        kind,
        components: comps,
        component_kinds: kinds,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn parse(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    /// Whether `(self, rank)` is a finite type.
    pub fn legal_rank(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 3,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }
}

/// Twisted affine types, by their root-system name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Twisted {
    /// `Ã₁'`, realized as `²Ã₂`.
    A1Prime,
    /// `C̃ₗ'`, `²Ã₂ₗ`, `l ≥ 2`.
    CPrime(usize),
    /// `B̃ₗᵗ`, `²Ã₂ₗ₋₁`, `l ≥ 3`.
    BT(usize),
    /// `C̃ₗᵗ`, `²D̃ₗ₊₁`, `l ≥ 2`.
    CT(usize),
    /// `F̃₄ᵗ`, `²Ẽ₆`.
    F4T,
    /// `G̃₂ᵗ`, `³D̃₄`.
    G2T,
}

impl Twisted {
    pub fn order(self) -> u8 {
        match self {
            Twisted::G2T => 3,
            _ => 2,
        }
    }

    fn legal(self) -> bool {
        match self {
            Twisted::CPrime(l) | Twisted::CT(l) => l >= 2,
            Twisted::BT(l) => l >= 3,
            _ => true,
        }
    }

    /// Folding notation, e.g. `2A~5`.
    pub fn folding_name(self) -> String {
        match self {
            Twisted::A1Prime => "2A~2".into(),
            Twisted::CPrime(l) => format!("2A~{}", 2 * l),
            Twisted::BT(l) => format!("2A~{}", 2 * l - 1),
            Twisted::CT(l) => format!("2D~{}", l + 1),
            Twisted::F4T => "2E~6".into(),
            Twisted::G2T => "3D~4".into(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NamedType {
    Finite(Family, usize),
    Affine(Family, usize),
    Twisted(Twisted),
    /// `[[2, −a], [−b, 2]]`.
    Hyperbolic(u32, u32),
}

impl NamedType {
    pub fn twist_order(&self) -> u8 {
        match self {
            NamedType::Twisted(t) => t.order(),
            _ => 1,
        }
    }

    /// Parses `A2`, `A~1`, `A~1'`, `C~2'`, `B~3t`, `C~2t`, `F~4t`, `G~2t`,
    /// the folding forms `2A~2`, `2A~5`, `2D~3`, `2E~6`, `3D~4`, and `H3,2`.
    /// Legality of the rank is checked by [`named_matrix`], not here.
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::UnknownType(s.to_string());
        let t = s.trim();
        if let Some(rest) = t.strip_prefix('H') {
            let (a, b) = rest.split_once(',').ok_or_else(bad)?;
            let a: u32 = a.trim().parse().map_err(|_| bad())?;
            let b: u32 = b.trim().parse().map_err(|_| bad())?;
            return Ok(NamedType::Hyperbolic(a, b));
        }
        let mut chars = t.chars();
        let first = chars.next().ok_or_else(bad)?;
        if let Some(order) = first.to_digit(10) {
            let rest: String = chars.collect();
            let (fam, rank) = split_family_rank(&rest, true).ok_or_else(bad)?;
            return fold_to_twisted(order, fam, rank).map(NamedType::Twisted).ok_or_else(bad);
        }
        let fam = Family::parse(first).ok_or_else(bad)?;
        let rest: String = chars.collect();
        let Some(body) = rest.strip_prefix('~') else {
            let rank: usize = rest.parse().map_err(|_| bad())?;
            return Ok(NamedType::Finite(fam, rank));
        };
        let (digits, suffix) = match body.find(|c: char| !c.is_ascii_digit()) {
            Some(p) => body.split_at(p),
            None => (body, ""),
        };
        let rank: usize = digits.parse().map_err(|_| bad())?;
        let tw = match (fam, suffix) {
            (_, "") => return Ok(NamedType::Affine(fam, rank)),
            (Family::A, "'") if rank == 1 => Twisted::A1Prime,
            (Family::C, "'") => Twisted::CPrime(rank),
            (Family::B, "t") => Twisted::BT(rank),
            (Family::C, "t") => Twisted::CT(rank),
            (Family::F, "t") if rank == 4 => Twisted::F4T,
            (Family::G, "t") if rank == 2 => Twisted::G2T,
            _ => return Err(bad()),
        };
        Ok(NamedType::Twisted(tw))
    }
}

fn split_family_rank(s: &str, tilde: bool) -> Option<(Family, usize)> {
    let mut chars = s.chars();
    let fam = Family::parse(chars.next()?)?;
    let rest: String = chars.collect();
    let digits = if tilde { rest.strip_prefix('~')? } else { rest.as_str() };
    Some((fam, digits.parse().ok()?))
}

fn fold_to_twisted(order: u32, fam: Family, rank: usize) -> Option<Twisted> {
    match (order, fam) {
        (2, Family::A) if rank == 2 => Some(Twisted::A1Prime),
        (2, Family::A) if rank.is_multiple_of(2) => Some(Twisted::CPrime(rank / 2)),
        (2, Family::A) => Some(Twisted::BT(rank.div_ceil(2))),
        (2, Family::D) if rank >= 1 => Some(Twisted::CT(rank - 1)),
        (2, Family::E) if rank == 6 => Some(Twisted::F4T),
        (3, Family::D) if rank == 4 => Some(Twisted::G2T),
        _ => None,
    }
}

impl fmt::Display for NamedType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            NamedType::Finite(fam, r) => write!(f, "{}{}", fam.letter(), r),
            NamedType::Affine(fam, r) => write!(f, "{}~{}", fam.letter(), r),
            NamedType::Twisted(t) => match t {
                Twisted::A1Prime => write!(f, "A~1'"),
                Twisted::CPrime(l) => write!(f, "C~{l}'"),
                Twisted::BT(l) => write!(f, "B~{l}t"),
                Twisted::CT(l) => write!(f, "C~{l}t"),
                Twisted::F4T => write!(f, "F~4t"),
                Twisted::G2T => write!(f, "G~2t"),
            },
            NamedType::Hyperbolic(a, b) => write!(f, "H{a},{b}"),
        }
    }
}

fn chain(n: usize) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; n]; n];
    for i in 0..n {
        m[i][i] = 2;
        if i + 1 < n {
            m[i][i + 1] = -1;
            m[i + 1][i] = -1;
        }
    }
    m
}

fn link(m: &mut [Vec<i64>], i: usize, j: usize) {
    m[i][j] = -1;
    m[j][i] = -1;
}

/// Finite matrices, nodes `0..rank`. In a double or triple bond the row of
/// the short root carries the large entry.
fn finite_entries(fam: Family, n: usize) -> Vec<Vec<i64>> {
    let mut m = chain(n);
    match fam {
        Family::A => {}
        Family::B => m[n - 1][n - 2] = -2,
        Family::C => m[n - 2][n - 1] = -2,
        Family::D => {
            m[n - 2][n - 1] = 0;
            m[n - 1][n - 2] = 0;
            link(&mut m, n - 3, n - 1);
        }
        Family::E => {
            // Bourbaki: 1-3-4-5-6(-7-8) with 2 attached to 4.
            m = vec![vec![0; n]; n];
            for (i, row) in m.iter_mut().enumerate() {
                row[i] = 2;
            }
            link(&mut m, 0, 2);
            link(&mut m, 1, 3);
            for i in 2..n - 1 {
                link(&mut m, i, i + 1);
            }
        }
        Family::F => m[2][1] = -2,
        Family::G => m[1][0] = -3,
    }
    m
}

/// `C̃₂` is legal although `C₂` is listed as `B₂`; `B̃₂` is not.
fn affine_legal(fam: Family, r: usize) -> bool {
    match fam {
        Family::B => r >= 3,
        Family::C => r >= 2,
        _ => fam.legal_rank(r),
    }
}

/// Untwisted affine matrices with the extra node first.
fn affine_entries(fam: Family, l: usize) -> Vec<Vec<i64>> {
    let fin = finite_entries(fam, l);
    let mut m = vec![vec![0i64; l + 1]; l + 1];
    m[0][0] = 2;
    for i in 0..l {
        m[i + 1][1..].copy_from_slice(&fin[i]);
    }
    match fam {
        Family::A if l == 1 => {
            m[0][1] = -2;
            m[1][0] = -2;
        }
        Family::A => {
            link(&mut m, 0, 1);
            link(&mut m, 0, l);
        }
        Family::B | Family::D => link(&mut m, 0, 2),
        Family::C => {
            m[0][1] = -1;
            m[1][0] = -2;
        }
        Family::E => {
            let node = match l {
                6 => 2,
                7 => 1,
                _ => 8,
            };
            link(&mut m, 0, node);
        }
        Family::F | Family::G => link(&mut m, 0, 1),
    }
    m
}

fn twisted_entries(t: Twisted) -> Vec<Vec<i64>> {
    let transposed = |fam, l| {
        let a = affine_entries(fam, l);
        let n = a.len();
        (0..n).map(|i| (0..n).map(|j| a[j][i]).collect()).collect()
    };
    match t {
        Twisted::A1Prime => vec![vec![2, -1], vec![-4, 2]],
        Twisted::CPrime(l) => {
            let mut m = chain(l + 1);
            m[0][1] = -2;
            m[l - 1][l] = -2;
            m
        }
        Twisted::BT(l) => transposed(Family::B, l),
        Twisted::CT(l) => transposed(Family::C, l),
        Twisted::F4T => transposed(Family::F, 4),
        Twisted::G2T => transposed(Family::G, 2),
    }
}

pub fn named_matrix(t: NamedType) -> Result<GeneralizedCartanMatrix> {
    let bad = || Error::UnknownType(t.to_string());
    let entries = match t {
        NamedType::Finite(fam, r) if fam.legal_rank(r) => finite_entries(fam, r),
        NamedType::Affine(fam, r) if affine_legal(fam, r) => affine_entries(fam, r),
        NamedType::Twisted(tw) if tw.legal() => twisted_entries(tw),
        NamedType::Hyperbolic(a, b) if a >= 1 && b >= 1 => {
            vec![vec![2, -(a as i64)], vec![-(b as i64), 2]]
        }
        _ => return Err(bad()),
    };
    validate_gcm(entries).map_err(|_| bad())
}

/// Every finite and affine named type with finite rank `≤ max_rank`.
pub fn all_named_types(max_rank: usize) -> Vec<NamedType> {
    let fams = [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G];
    let mut out = Vec::new();
    for r in 1..=max_rank {
        for fam in fams {
            if fam.legal_rank(r) {
                out.push(NamedType::Finite(fam, r));
            }
            if affine_legal(fam, r) {
                out.push(NamedType::Affine(fam, r));
            }
        }
        let mut tw = Vec::new();
        if r == 1 {
            tw.push(Twisted::A1Prime);
        }
        if r >= 2 {
            tw.push(Twisted::CPrime(r));
            tw.push(Twisted::CT(r));
        }
        if r >= 3 {
            tw.push(Twisted::BT(r));
        }
        if r == 4 {
            tw.push(Twisted::F4T);
        }
        if r == 2 {
            tw.push(Twisted::G2T);
        }
        out.extend(tw.into_iter().map(NamedType::Twisted));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gcm(rows: &[&[i64]]) -> GeneralizedCartanMatrix {
        validate_gcm(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn axioms() {
        assert!(validate_gcm(vec![vec![2, -1], vec![-1, 2]]).is_ok());
        assert_eq!(
            validate_gcm(vec![vec![2, -1], vec![0, 2]]),
            Err(Error::AxisViolation { i: 0, j: 1, axiom: Axiom::ZeroSymmetry })
        );
        assert_eq!(
            validate_gcm(vec![vec![3]]),
            Err(Error::AxisViolation { i: 0, j: 0, axiom: Axiom::Diagonal })
        );
        assert!(matches!(
            validate_gcm(vec![vec![2, 1], vec![1, 2]]),
            Err(Error::AxisViolation { axiom: Axiom::OffDiagonalSign, .. })
        ));
    }

    #[test]
    fn decomposition() {
        let d = decompose(&gcm(&[&[2, 0], &[0, 2]]));
        assert_eq!(d, vec![gcm(&[&[2]]), gcm(&[&[2]])]);
        let a2 = gcm(&[&[2, -1], &[-1, 2]]);
        assert_eq!(decompose(&a2), vec![a2.clone()]);
        let at1 = gcm(&[&[2, -2], &[-2, 2]]);
        let sum = a2.direct_sum(&at1);
        assert_eq!(components(&sum), vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(decompose(&sum), vec![a2, at1]);
    }

    #[test]
    fn two_by_two() {
        assert_eq!(classify(&gcm(&[&[2, -1], &[-3, 2]])).kind, CartanKind::Finite);
        assert_eq!(classify(&gcm(&[&[2, -2], &[-2, 2]])).kind, CartanKind::Affine);
        assert_eq!(classify(&gcm(&[&[2, -1], &[-4, 2]])).kind, CartanKind::Affine);
        assert_eq!(classify(&gcm(&[&[2, -3], &[-2, 2]])).kind, CartanKind::Indefinite);
        let dec = classify(&gcm(&[&[2, 0], &[0, 2]]));
        assert_eq!(dec.kind, CartanKind::Finite);
        assert_eq!(dec.components.len(), 2);
    }

    #[test]
    fn determinant_fallback() {
        let big = vec![vec![i64::MAX, 1], vec![1, i64::MAX]];
        let expect = BigInt::from(i64::MAX) * BigInt::from(i64::MAX) - 1;
        assert_eq!(determinant(&big), expect);
        assert_eq!(determinant(&[vec![0, 1], vec![1, 0]]), BigInt::from(-1));
    }

    #[test]
    fn names_roundtrip() {
        for s in ["A2", "A~1", "A~1'", "C~2'", "B~3t", "C~2t", "F~4t", "G~2t", "H3,2", "E~8"] {
            assert_eq!(NamedType::parse(s).unwrap().to_string(), s);
        }
        assert_eq!(NamedType::parse("2A~2").unwrap(), NamedType::Twisted(Twisted::A1Prime));
        assert_eq!(NamedType::parse("2A~5").unwrap(), NamedType::Twisted(Twisted::BT(3)));
        assert_eq!(NamedType::parse("2D~3").unwrap(), NamedType::Twisted(Twisted::CT(2)));
        assert_eq!(NamedType::parse("3D~4").unwrap(), NamedType::Twisted(Twisted::G2T));
        assert!(NamedType::parse("X3").is_err());
    }

    #[test]
    fn tables() {
        let m = |s| named_matrix(NamedType::parse(s).unwrap()).unwrap();
        assert_eq!(m("A2"), gcm(&[&[2, -1], &[-1, 2]]));
        assert_eq!(m("A~1"), gcm(&[&[2, -2], &[-2, 2]]));
        assert_eq!(m("A~1'"), gcm(&[&[2, -1], &[-4, 2]]));
        assert_eq!(m("B2"), gcm(&[&[2, -1], &[-2, 2]]));
        assert_eq!(m("G2"), gcm(&[&[2, -1], &[-3, 2]]));
        let h = m("H3,2");
        assert_eq!(h, gcm(&[&[2, -3], &[-2, 2]]));
        assert_eq!(classify(&h).kind, CartanKind::Indefinite);
        for bad in ["B1", "C2", "D3", "E5", "E9", "F3", "G3", "B~2t", "C~1t", "B~2", "C~1'"] {
            assert!(named_matrix(NamedType::parse(bad).unwrap()).is_err(), "{bad}");
        }
    }
}
