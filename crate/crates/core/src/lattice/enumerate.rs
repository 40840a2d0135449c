//! Fincke-Pohst enumeration of short vectors for positive-definite ternary forms.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::greens::model::UHPoint;
use crate::linalg::{det3, Mat3};

use super::trace_zero::{majorant, majorant_value, LatticeVector, TraceZeroLattice};

pub const DEFAULT_ENUMERATION_CAP: u64 = 2_000_000;

/// Relative slack applied to the pruning bound; the final filter is exact
/// with respect to the caller's value function.
const SLACK: f64 = 1e-9;

/// Volume estimate `(4/3) pi B^{3/2} / sqrt(det G)` of the ellipsoid `x^T G x <= B`.
pub fn predicted_count(g: &Mat3, bound: f64) -> f64 {
    let det = det3(g);
    if !(det > 0.0) {
        return f64::INFINITY;
    }
    4.0 / 3.0 * PI * bound.powf(1.5) / det.sqrt()
}

/// Cohen's quadratic-form decomposition `x^T G x = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2`.
fn decompose(g: &Mat3) -> Option<Mat3> {
    let mut q = *g;
    for i in 0..3 {
        if !(q[i][i] > 0.0) {
            return None;
        }
        for j in i + 1..3 {
            q[j][i] = q[i][j];
            q[i][j] /= q[i][i];
        }
        for k in i + 1..3 {
            for l in k..3 {
                q[k][l] -= q[k][i] * q[i][l];
            }
        }
    }
    Some(q)
}

/// Candidate nonzero integer vectors with `x^T G x <= bound` (up to a small
/// slack), sorted. Completeness is guaranteed; callers filter exactly.
pub fn enumerate_quadratic(g: &Mat3, bound: f64, cap: u64) -> Result<Vec<[i64; 3]>> {
    if !(bound > 0.0) {
        return Err(Error::PreconditionViolation(format!("bound must be positive, got {bound}")));
    }
    let predicted = predicted_count(g, bound);
    if predicted > cap as f64 {
        return Err(Error::BoundTooLarge { predicted, cap });
    }
    let q = decompose(g)
        .ok_or_else(|| Error::PreconditionViolation("form is not positive definite".into()))?;
    let b = bound * (1.0 + SLACK) + SLACK;
    let mut out = Vec::new();
    let mut x = [0i64; 3];
    recurse(&q, 2, b, &mut x, &mut out);
    out.sort();
    Ok(out)
}

fn recurse(q: &Mat3, i: usize, remaining: f64, x: &mut [i64; 3], out: &mut Vec<[i64; 3]>) {
    let mut center = 0.0;
    for j in i + 1..3 {
        center -= q[i][j] * x[j] as f64;
    }
    let half = (remaining.max(0.0) / q[i][i]).sqrt() * (1.0 + SLACK) + SLACK;
    let lo = (center - half).ceil() as i64;
    let hi = (center + half).floor() as i64;
    for xi in lo..=hi {
        let d = xi as f64 - center;
        let rest = remaining - q[i][i] * d * d;
        if rest < -SLACK * (1.0 + remaining.abs()) {
            continue;
        }
        x[i] = xi;
        if i == 0 {
            if *x != [0, 0, 0] {
                out.push(*x);
            }
        } else {
            recurse(q, i - 1, rest, x, out);
        }
    }
    x[i] = 0;
}

/// All nonzero `x in L` with `(x, x)_z <= bound`, sorted by coordinates.
pub fn enumerate_by_majorant(l: &TraceZeroLattice, z: UHPoint, bound: f64) -> Result<Vec<LatticeVector>> {
    enumerate_by_majorant_capped(l, z, bound, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_by_majorant_capped(
    l: &TraceZeroLattice,
    z: UHPoint,
    bound: f64,
    cap: u64,
) -> Result<Vec<LatticeVector>> {
    let g = majorant(l, z)?;
    let mut out = Vec::new();
    for c in enumerate_quadratic(&g, bound, cap)? {
        let v = LatticeVector::new(c);
        if majorant_value(l, z, &v)? <= bound {
            out.push(v);
        }
    }
    Ok(out)
}

/// Nonzero vectors of a definite lattice with `Q(x) <= t_max`.
pub fn enumerate_definite(l: &TraceZeroLattice, t_max: u64) -> Result<Vec<LatticeVector>> {
    if !l.is_definite() {
        return Err(Error::PreconditionViolation("lattice is indefinite".into()));
    }
    if t_max == 0 {
        return Ok(Vec::new());
    }
    let cands = enumerate_quadratic(&l.gram_f64(), 2.0 * t_max as f64, DEFAULT_ENUMERATION_CAP)?;
    Ok(cands
        .into_iter()
        .map(LatticeVector::new)
        .filter(|v| l.q(v) as u64 <= t_max)
        .collect())
}

/// `|{x in L : Q(x) = t}|` for a definite lattice.
pub fn representation_count(l: &TraceZeroLattice, t: u64) -> Result<u64> {
    Ok(enumerate_definite(l, t)?.iter().filter(|v| l.q(v) as u64 == t).count() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::order::Order;
    use crate::quatalg::QuaternionAlgebra;

    fn sum_of_squares() -> TraceZeroLattice {
        let alg = QuaternionAlgebra::from_ints(-1, -1).unwrap();
        TraceZeroLattice::new(Order::lipschitz(alg).unwrap()).unwrap()
    }

    fn brute_sum_of_three_squares(t: i64) -> u64 {
        let r = (t as f64).sqrt() as i64 + 1;
        let mut n = 0;
        for a in -r..=r {
            for b in -r..=r {
                for c in -r..=r {
                    if a * a + b * b + c * c == t {
                        n += 1;
                    }
                }
            }
        }
        n
    }

    #[test]
    fn three_squares() {
        let l = sum_of_squares();
        assert_eq!(representation_count(&l, 1).unwrap(), 6);
        assert_eq!(representation_count(&l, 7).unwrap(), 0);
        for t in 1..=30 {
            assert_eq!(representation_count(&l, t).unwrap(), brute_sum_of_three_squares(t as i64), "t={t}");
        }
    }

    #[test]
    fn split_model_small_bound_matches_box() {
        let l = TraceZeroLattice::new(Order::split()).unwrap();
        let z = UHPoint::i();
        let got = enumerate_by_majorant(&l, z, 2.0).unwrap();
        let mut want = Vec::new();
        for a in -5..=5 {
            for b in -5..=5 {
                for c in -5..=5 {
                    let v = LatticeVector::new([a, b, c]);
                    if !v.is_zero() && majorant_value(&l, z, &v).unwrap() <= 2.0 {
                        want.push(v);
                    }
                }
            }
        }
        assert_eq!(got, want);
        // 2 a^2 + b^2 + c^2 <= 2 away from zero
        assert_eq!(got.len(), 2 + 4 + 4);
        assert!(enumerate_by_majorant(&l, z, 0.5).unwrap().is_empty());
    }

    #[test]
    fn cap_is_enforced() {
        let l = TraceZeroLattice::new(Order::split()).unwrap();
        assert!(matches!(
            enumerate_by_majorant_capped(&l, UHPoint::i(), 1e6, 1000),
            Err(Error::BoundTooLarge { .. })
        ));
        assert!(enumerate_by_majorant(&l, UHPoint::i(), -1.0).is_err());
    }
}
