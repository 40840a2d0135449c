//! Small dense linear algebra: exact rational inversion and diagonalisation,
//! integer kernels, and fixed-size real helpers for 2x2 and 3x3 matrices.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::arith::ext_gcd;

pub type Mat3 = [[f64; 3]; 3];

/// Inverse of a square rational matrix, or `None` if singular.
pub fn rational_inverse(m: &[Vec<BigRational>]) -> Option<Vec<Vec<BigRational>>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m.to_vec();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| BigRational::from_integer(BigInt::from((i == j) as i32))).collect())
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        inv.swap(col, piv);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] = &a[col][j] / &p;
            inv[col][j] = &inv[col][j] / &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    let t = &f * &a[col][j];
                    a[r][j] -= t;
                    let t = &f * &inv[col][j];
                    inv[r][j] -= t;
                }
            }
        }
    }
    Some(inv)
}

/// Determinant of a square rational matrix by fraction-free elimination over `Q`.
pub fn rational_det(m: &[Vec<BigRational>]) -> BigRational {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = BigRational::from_integer(1.into());
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if piv != col {
            a.swap(col, piv);
            det = -det;
        }
        det *= &a[col][col];
        for r in col + 1..n {
            if !a[r][col].is_zero() {
                let f = &a[r][col] / &a[col][col];
                for j in col..n {
                    let t = &f * &a[col][j];
                    a[r][j] -= t;
                }
            }
        }
    }
    det
}

/// `(n_plus, n_minus, n_zero)` of a symmetric rational matrix, by Lagrange
/// diagonalisation.
pub fn signature(m: &[Vec<BigRational>]) -> (usize, usize, usize) {
    let n = m.len();
    let mut a = m.to_vec();
    let (mut pos, mut neg) = (0, 0);
    let mut active: Vec<usize> = (0..n).collect();
    while !active.is_empty() {
        let piv = active.iter().copied().find(|&i| !a[i][i].is_zero());
        let piv = match piv {
            Some(p) => p,
            None => {
                // all diagonal entries vanish: mix in an off-diagonal partner
                let pair = active.iter().find_map(|&i| {
                    active.iter().find(|&&j| j != i && !a[i][j].is_zero()).map(|&j| (i, j))
                });
                let Some((i, j)) = pair else { break };
                // e_i <- e_i + e_j
                for k in 0..n {
                    let t = a[j][k].clone();
                    a[i][k] += t;
                }
                for k in 0..n {
                    let t = a[k][j].clone();
                    a[k][i] += t;
                }
                i
            }
        };
        let d = a[piv][piv].clone();
        if d.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        active.retain(|&k| k != piv);
        for &r in &active {
            if a[r][piv].is_zero() {
                continue;
            }
            let f = &a[r][piv] / &d;
            for &c in &active {
                let t = &f * &a[piv][c];
                a[r][c] -= t;
            }
        }
        for &r in &active {
            a[r][piv] = BigRational::zero();
            a[piv][r] = BigRational::zero();
        }
    }
    (pos, neg, n - pos - neg)
}

/// Unimodular `U` (columns) with `f . U = (g, 0, ..., 0)` for an integer
/// row vector `f`; columns `1..` then span the kernel of `f`.
pub fn unimodular_kernel(f: &[i64]) -> Vec<Vec<i64>> {
    let n = f.len();
    let mut row = f.to_vec();
    let mut u: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect();
    for k in 1..n {
        if row[k] == 0 {
            continue;
        }
        let (g, x, y) = ext_gcd(row[0], row[k]);
        let (p, q) = (row[0] / g, row[k] / g);
        // new col0 = x*c0 + y*ck, new colk = -q*c0 + p*ck; determinant x p + y q = 1
        for r in 0..n {
            let (c0, ck) = (u[r][0], u[r][k]);
            u[r][0] = x * c0 + y * ck;
            u[r][k] = -q * c0 + p * ck;
        }
        row[0] = g;
        row[k] = 0;
    }
    u
}

pub fn det3(m: &Mat3) -> f64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

pub fn det3_i64(m: &[[i64; 3]; 3]) -> i64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

pub fn quad3(m: &Mat3, x: &[f64; 3]) -> f64 {
    let mut s = 0.0;
    for i in 0..3 {
        for j in 0..3 {
            s += m[i][j] * x[i] * x[j];
        }
    }
    s
}

/// `A^T G A` for 3x3 matrices.
pub fn congruence3(g: &Mat3, a: &Mat3) -> Mat3 {
    let mut out = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            let mut s = 0.0;
            for k in 0..3 {
                for l in 0..3 {
                    s += a[k][i] * g[k][l] * a[l][j];
                }
            }
            out[i][j] = s;
        }
    }
    out
}

/// Eigenvalues of a real symmetric 3x3 matrix, ascending (cyclic Jacobi).
pub fn sym_eigenvalues3(m: &Mat3) -> [f64; 3] {
    let mut a = *m;
    for _ in 0..100 {
        let off = a[0][1].abs() + a[0][2].abs() + a[1][2].abs();
        if off < 1e-300 {
            break;
        }
        for (p, q) in [(0, 1), (0, 2), (1, 2)] {
            if a[p][q] == 0.0 {
                continue;
            }
            let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
            let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
            let t = if theta == 0.0 { 1.0 } else { t };
            let c = 1.0 / (t * t + 1.0).sqrt();
            let s = t * c;
            let mut b = a;
            for k in 0..3 {
                b[k][p] = c * a[k][p] - s * a[k][q];
                b[k][q] = s * a[k][p] + c * a[k][q];
            }
            let mut d = b;
            for k in 0..3 {
                d[p][k] = c * b[p][k] - s * b[q][k];
                d[q][k] = s * b[p][k] + c * b[q][k];
            }
            a = d;
        }
    }
    let mut e = [a[0][0], a[1][1], a[2][2]];
    e.sort_by(f64::total_cmp);
    e
}

pub type Mat2 = [[f64; 2]; 2];

/// Symmetric positive square root of a positive-definite 2x2 matrix.
pub fn sqrt_spd2(v: &Mat2) -> Mat2 {
    let det = v[0][0] * v[1][1] - v[0][1] * v[1][0];
    let s = det.sqrt();
    let t = (v[0][0] + v[1][1] + 2.0 * s).sqrt();
    [
        [(v[0][0] + s) / t, v[0][1] / t],
        [v[1][0] / t, (v[1][1] + s) / t],
    ]
}

/// Lower-triangular `L` with `v = L L^T`.
pub fn cholesky2(v: &Mat2) -> Mat2 {
    let l11 = v[0][0].sqrt();
    let l21 = v[1][0] / l11;
    let l22 = (v[1][1] - l21 * l21).sqrt();
    [[l11, 0.0], [l21, l22]]
}

pub fn mul2(a: &Mat2, b: &Mat2) -> Mat2 {
    let mut out = [[0.0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

pub fn transpose2(a: &Mat2) -> Mat2 {
    [[a[0][0], a[1][0]], [a[0][1], a[1][1]]]
}

pub fn is_positive_definite2(v: &Mat2) -> bool {
    v[0][1] == v[1][0] && v[0][0] > 0.0 && v[0][0] * v[1][1] - v[0][1] * v[1][0] > 0.0
}
