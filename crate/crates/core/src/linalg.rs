//! Exact linear algebra over the rationals: fraction-free elimination for
//! ranks and kernels, symmetric diagonalization for signatures, Hermite
//! normal form for glue constructions.

use crate::arith::{q_int, q_one, q_zero, Q};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Matrix = Vec<Vec<Q>>;

pub fn zeros(rows: usize, cols: usize) -> Matrix {
    vec![vec![q_zero(); cols]; rows]
}

pub fn identity(n: usize) -> Matrix {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = q_one();
    }
    m
}

pub fn mat_from_i64(rows: &[Vec<i64>]) -> Matrix {
    rows.iter().map(|r| r.iter().map(|&x| q_int(x)).collect()).collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let (n, k) = (a.len(), b.len());
    let m = if k == 0 { 0 } else { b[0].len() };
    let mut out = zeros(n, m);
    for i in 0..n {
        assert_eq!(a[i].len(), k, "dimension mismatch");
        for (l, brow) in b.iter().enumerate() {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                if !brow[j].is_zero() {
                    let t = &a[i][l] * &brow[j];
                    out[i][j] += t;
                }
            }
        }
    }
    out
}

pub fn mat_transpose(a: &Matrix) -> Matrix {
    if a.is_empty() {
        return Vec::new();
    }
    let (n, m) = (a.len(), a[0].len());
    let mut out = zeros(m, n);
    for i in 0..n {
        for j in 0..m {
            out[j][i] = a[i][j].clone();
        }
    }
    out
}

/// Row echelon form over Q by ordinary Gaussian elimination with exact pivots.
/// Returns (echelon matrix, pivot column per used row).
fn row_echelon(mut a: Matrix) -> (Matrix, Vec<usize>) {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].clone();
        for x in a[r].iter_mut() {
            *x /= &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in c..cols {
                    let t = &f * &a[r][j];
                    a[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

/// Rank of a rational matrix.
pub fn rank(a: &Matrix) -> usize {
    row_echelon(a.clone()).1.len()
}

/// Basis of the right kernel `{x : a x = 0}`; each vector has the length of
/// a row of `a`.
pub fn kernel(a: &Matrix) -> Vec<Vec<Q>> {
    let cols = if a.is_empty() { return Vec::new() } else { a[0].len() };
    let (ech, pivots) = row_echelon(a.clone());
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![q_zero(); cols];
        v[free] = q_one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -ech[row][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Exact inverse of a square rational matrix; `None` when singular.
pub fn inverse(a: &Matrix) -> Option<Matrix> {
    let n = a.len();
    let mut aug = a.clone();
    for (i, row) in aug.iter_mut().enumerate() {
        assert_eq!(row.len(), n, "inverse of non-square matrix");
        row.extend(identity(n)[i].iter().cloned());
    }
    let (ech, pivots) = row_echelon(aug);
    if pivots.len() != n {
        return None;
    }
    Some(ech.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Determinant by fraction-free (Bareiss) elimination on a cleared integer
/// matrix, rescaled back exactly.
pub fn det(a: &Matrix) -> Q {
    let n = a.len();
    if n == 0 {
        return q_one();
    }
    // Clear each row to integers, tracking the scaling.
    let mut scale = q_one();
    let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for row in a {
        assert_eq!(row.len(), n, "det of non-square matrix");
        let mut lcm = BigInt::one();
        for x in row {
            lcm = num_integer::lcm(lcm, x.denom().clone());
        }
        scale *= Q::new(BigInt::one(), lcm.clone());
        m.push(row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect());
    }
    let mut sign = 1i64;
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return q_zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = &t / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    Q::from_integer(m[n - 1][n - 1].clone()) * scale * q_int(sign)
}

/// Signature `(positive, negative, zero)` of a symmetric rational matrix via
/// exact symmetric (congruence) diagonalization.
pub fn signature(a: &Matrix) -> (usize, usize, usize) {
    let n = a.len();
    let mut m = a.clone();
    for (i, row) in m.iter().enumerate() {
        assert_eq!(row.len(), n, "signature of non-square matrix");
        for j in 0..n {
            assert_eq!(row[j], a[j][i], "signature of non-symmetric matrix");
        }
    }
    let (mut pos, mut neg, mut zero) = (0usize, 0usize, 0usize);
    let mut idx: Vec<usize> = (0..n).collect();
    // Work on the trailing principal submatrix indexed by idx[k..].
    for k in 0..n {
        let live = &idx[k..];
        // Find a nonzero diagonal entry, or create one from an off-diagonal.
        let mut pivot = live.iter().position(|&i| !m[i][i].is_zero());
        if pivot.is_none() {
            // All diagonal entries zero: look for a nonzero off-diagonal pair
            // (i, j) and add row/col j into i to expose a nonzero diagonal.
            'search: for (pi, &i) in live.iter().enumerate() {
                for &j in live.iter() {
                    if i != j && !m[i][j].is_zero() {
                        for &c in idx.iter() {
                            let t = m[j][c].clone();
                            m[i][c] += t;
                        }
                        for &r in idx.iter() {
                            let t = m[r][j].clone();
                            m[r][i] += t;
                        }
                        pivot = Some(pi);
                        break 'search;
                    }
                }
            }
        }
        let Some(p) = pivot else {
            zero += n - k;
            break;
        };
        idx.swap(k, k + p);
        let piv = idx[k];
        let d = m[piv][piv].clone();
        if d.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for &r in idx[k + 1..].to_vec().iter() {
            if m[r][piv].is_zero() {
                continue;
            }
            let f = &m[r][piv] / &d;
            for &c in idx.iter() {
                let t = &f * &m[piv][c];
                m[r][c] -= t;
            }
            for &c in idx.iter() {
                let t = &f * &m[c][piv];
                m[c][r] -= t;
            }
        }
    }
    (pos, neg, zero)
}

/// Rank and kernel of a symmetric Gram matrix. Uses diagonal (congruence)
/// pivoting when possible, which also certifies positive semidefiniteness;
/// falls back to generic elimination otherwise.
pub fn gram_rank_kernel(g: &Matrix) -> (usize, Vec<Vec<Q>>) {
    (rank(g), kernel(g))
}

/// Check that a symmetric matrix is positive semidefinite, exactly.
pub fn is_positive_semidefinite(a: &Matrix) -> bool {
    let (_, neg, _) = signature(a);
    neg == 0
}

/// Hermite normal form of an integer matrix (row-style, nonnegative pivots).
/// Returns the nonzero rows.
pub fn hnf(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    if rows.is_empty() {
        return Vec::new();
    }
    let cols = rows[0].len();
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let mut r = 0usize;
    for c in 0..cols {
        if r == m.len() {
            break;
        }
        // Reduce all entries in column c below row r to zero via gcd steps.
        loop {
            let mut min_idx: Option<usize> = None;
            for i in r..m.len() {
                if !m[i][c].is_zero() {
                    let better = match min_idx {
                        None => true,
                        Some(j) => m[i][c].magnitude() < m[j][c].magnitude(),
                    };
                    if better {
                        min_idx = Some(i);
                    }
                }
            }
            let Some(p) = min_idx else { break };
            m.swap(r, p);
            if m[r][c].is_negative() {
                for x in m[r].iter_mut() {
                    *x = -x.clone();
                }
            }
            let mut done = true;
            for i in r + 1..m.len() {
                if !m[i][c].is_zero() {
                    let q = &m[i][c] / &m[r][c];
                    if !q.is_zero() {
                        for j in 0..cols {
                            let t = &q * &m[r][j];
                            m[i][j] -= t;
                        }
                    }
                    if !m[i][c].is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if !m[r][c].is_zero() {
            // Reduce entries above the pivot into canonical range.
            for i in 0..r {
                let q = num_integer::Integer::div_floor(&m[i][c], &m[r][c]);
                if !q.is_zero() {
                    for j in 0..cols {
                        let t = &q * &m[r][j];
                        m[i][j] -= t;
                    }
                }
            }
            r += 1;
        }
    }
    m.truncate(r);
    m
}
