//! Shared helpers for the integration tests: seeded generators and an exact
//! feasibility oracle for the defining inequalities of finite and affine
//! Cartan matrices.
#![allow(dead_code)]

use kmx_core::cartan::CartanKind;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

type Q = Ratio<i128>;

/// Phase one of the simplex method with Bland's rule: is `{x ≥ 0 : Mx = b}`
/// nonempty? Entries stay tiny for the sizes used here, so `i128` suffices.
pub fn feasible(m: &[Vec<Q>], b: &[Q]) -> bool {
    let rows = m.len();
    let vars = m.first().map_or(0, Vec::len);
    let width = vars + rows + 1;
    let rhs = width - 1;
    let mut t: Vec<Vec<Q>> = Vec::with_capacity(rows + 1);
    for (i, row) in m.iter().enumerate() {
        let flip = b[i].is_negative();
        let mut r = vec![Q::zero(); width];
        for j in 0..vars {
            r[j] = if flip { -row[j] } else { row[j] };
        }
        r[vars + i] = Q::one();
        r[rhs] = if flip { -b[i] } else { b[i] };
        t.push(r);
    }
    // Objective row holds reduced costs of `Σ artificials`.
    let mut obj = vec![Q::zero(); width];
    for r in &t {
        for j in 0..vars {
            obj[j] -= r[j];
        }
        obj[rhs] -= r[rhs];
    }
    t.push(obj);
    let mut basis: Vec<usize> = (vars..vars + rows).collect();
    loop {
        let Some(enter) = (0..vars + rows).find(|&j| t[rows][j].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, Q)> = None;
        for i in 0..rows {
            if t[i][enter].is_positive() {
                let ratio = t[i][rhs] / t[i][enter];
                let better = match &leave {
                    None => true,
                    Some((l, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*l]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((p, _)) = leave else {
            // Unbounded direction; cannot happen for a phase-one objective.
            unreachable!("phase-one objective is bounded below by zero");
        };
        let pivot = t[p][enter];
        for j in 0..width {
            t[p][j] /= pivot;
        }
        for i in 0..=rows {
            if i != p && !t[i][enter].is_zero() {
                let f = t[i][enter];
                for j in 0..width {
                    let v = t[p][j] * f;
                    t[i][j] -= v;
                }
            }
        }
        basis[p] = enter;
    }
    t[rows][rhs].is_zero()
}

fn q(x: i64) -> Q {
    Q::from_integer(x as i128)
}

fn row_sums(a: &[Vec<i64>]) -> Vec<i64> {
    a.iter().map(|r| r.iter().sum()).collect()
}

/// Cofactor determinant; only used on tiny matrices.
pub fn det(a: &[Vec<i64>]) -> i64 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return a[0][0];
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i64>> = a[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect())
                .collect();
            let s = if j % 2 == 0 { 1 } else { -1 };
            s * a[0][j] * det(&minor)
        })
        .sum()
}

/// `Aᵀu ≤ 0` for `u = 2e_i + a e_j` built from a pair with `a_ij a_ji ≥ 4`.
/// Any such `u` rules out `v > 0, Av > 0`: then `(Aᵀu)·v ≤ 0 < u·(Av)`.
fn gordan_certificate(a: &[Vec<i64>]) -> bool {
    let n = a.len();
    for i in 0..n {
        for j in 0..n {
            if i == j || a[i][j] * a[j][i] < 4 {
                continue;
            }
            let mut u = vec![0i64; n];
            u[i] = 2;
            u[j] = -a[i][j];
            let ok = (0..n).all(|k| (0..n).map(|r| u[r] * a[r][k]).sum::<i64>() <= 0);
            if ok {
                return true;
            }
        }
    }
    false
}

/// Exists `v > 0` with `Av > 0`? By homogeneity, `v ≥ 1, Av ≥ 1`; with
/// `v = 1 + w` this is `Aw − s = 1 − A·1`, `w, s ≥ 0`.
pub fn finite_feasible(a: &[Vec<i64>]) -> bool {
    let n = a.len();
    let sums = row_sums(a);
    if sums.iter().all(|&s| s > 0) {
        return true;
    }
    if gordan_certificate(a) {
        return false;
    }
    let m: Vec<Vec<Q>> = (0..n)
        .map(|i| {
            let mut r: Vec<Q> = a[i].iter().map(|&x| q(x)).collect();
            r.extend((0..n).map(|k| if k == i { q(-1) } else { Q::zero() }));
            r
        })
        .collect();
    let b: Vec<Q> = sums.iter().map(|&s| q(1 - s)).collect();
    feasible(&m, &b)
}

/// Exists `v > 0` with `Av = 0`? With `v = 1 + w`: `Aw = −A·1`, `w ≥ 0`.
pub fn affine_feasible(a: &[Vec<i64>]) -> bool {
    let sums = row_sums(a);
    if sums.iter().all(|&s| s == 0) {
        return true;
    }
    if det(a) != 0 {
        return false;
    }
    let m: Vec<Vec<Q>> = a.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
    let b: Vec<Q> = sums.iter().map(|&s| q(-s)).collect();
    feasible(&m, &b)
}

/// Classification straight from the defining inequalities.
pub fn oracle_kind(a: &[Vec<i64>]) -> CartanKind {
    if finite_feasible(a) {
        CartanKind::Finite
    } else if affine_feasible(a) {
        CartanKind::Affine
    } else {
        CartanKind::Indefinite
    }
}

fn connected(a: &[Vec<i64>]) -> bool {
    let n = a.len();
    let mut seen = 1u32;
    let mut stack = vec![0usize];
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if a[i][j] != 0 && seen & (1 << j) == 0 {
                seen |= 1 << j;
                stack.push(j);
            }
        }
    }
    seen == (1 << n) - 1
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Whether no simultaneous row/column permutation gives a lexicographically
/// smaller matrix.
fn canonical(a: &[Vec<i64>], perms: &[Vec<usize>]) -> bool {
    let n = a.len();
    for p in perms {
        'cmp: for i in 0..n {
            for j in 0..n {
                let (x, y) = (a[p[i]][p[j]], a[i][j]);
                if x < y {
                    return false;
                }
                if x > y {
                    break 'cmp;
                }
            }
        }
    }
    true
}

/// Calls `visit` once per indecomposable GCM of size `n` with off-diagonal
/// entries in `[−bound, 0]`, up to simultaneous permutation.
pub fn for_each_indecomposable(n: usize, bound: i64, mut visit: impl FnMut(&[Vec<i64>])) {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut options = vec![(0i64, 0i64)];
    for x in 1..=bound {
        for y in 1..=bound {
            options.push((-x, -y));
        }
    }
    let perms = permutations(n);
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut idx = vec![0usize; pairs.len()];
    loop {
        for (k, &(i, j)) in pairs.iter().enumerate() {
            let (x, y) = options[idx[k]];
            a[i][j] = x;
            a[j][i] = y;
        }
        if connected(&a) && canonical(&a, &perms) {
            visit(&a);
        }
        let mut k = 0;
        loop {
            if k == idx.len() {
                return;
            }
            idx[k] += 1;
            if idx[k] < options.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}
