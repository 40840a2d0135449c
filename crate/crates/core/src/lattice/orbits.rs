//! `Γ`-orbits on `L(t)` for the split model, where `Γ = PSL_2(Z)` acts on
//! trace-zero integer matrices by conjugation.
//!
//! A vector `x = [[alpha, beta], [gamma, -alpha]]` with `Q(x) = t > 0` and
//! `gamma > 0` has its CM point `(alpha + i sqrt t) / gamma` in the upper
//! half-plane; orbits are represented by the vectors whose CM point lies in
//! the standard fundamental domain. Vectors with `gamma < 0` sit on the other
//! sheet and are matched with these by a determinant `-1` unit.

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

use super::trace_zero::{LatticeVector, TraceZeroLattice};

pub type IntMat2 = [[i64; 2]; 2];

pub const IDENTITY: IntMat2 = [[1, 0], [0, 1]];
/// `z -> -1/z`, fixing `i`.
pub const S: IntMat2 = [[0, -1], [1, 0]];
/// Order-three element fixing `rho = (-1 + i sqrt 3) / 2`.
pub const U: IntMat2 = [[0, -1], [1, 1]];

pub fn mat_mul(a: &IntMat2, b: &IntMat2) -> IntMat2 {
    [
        [a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]],
        [a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]],
    ]
}

pub fn mat_det(a: &IntMat2) -> i64 {
    a[0][0] * a[1][1] - a[0][1] * a[1][0]
}

/// Inverse of a matrix of determinant `±1`.
pub fn mat_inv(a: &IntMat2) -> IntMat2 {
    let d = mat_det(a);
    debug_assert!(d == 1 || d == -1);
    [[d * a[1][1], -d * a[0][1]], [-d * a[1][0], d * a[0][0]]]
}

pub fn to_real(a: &IntMat2) -> [[f64; 2]; 2] {
    a.map(|r| r.map(|c| c as f64))
}

/// `g x g^{-1}` for `g` in `GL_2(Z)`, on model coordinates `(alpha, beta, gamma)`.
pub fn conjugate(g: &IntMat2, x: &[i64; 3]) -> [i64; 3] {
    let [a, b, c] = *x;
    let m = [[a, b], [c, -a]];
    let y = mat_mul(&mat_mul(g, &m), &mat_inv(g));
    [y[0][0], y[0][1], y[1][0]]
}

/// CM point `(alpha + i sqrt t) / gamma` lies in the fundamental domain
/// `|Re z| <= 1/2, |z| >= 1`, keeping only the left half of the boundary.
fn in_fundamental_domain(alpha: i64, gamma: i64, t: i64) -> bool {
    if gamma <= 0 || 2 * alpha.abs() > gamma || alpha * alpha + t < gamma * gamma {
        return false;
    }
    if 2 * alpha.abs() == gamma && alpha > 0 {
        return false;
    }
    if alpha * alpha + t == gamma * gamma && alpha > 0 {
        return false;
    }
    true
}

/// A representative of a `Γ`-orbit on `L(t)` together with its stabilizer in `Γ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CmRepresentative {
    pub x: [i64; 3],
    /// Stabilizer elements, one per class modulo `±1`.
    pub stabilizer: Vec<IntMat2>,
}

impl CmRepresentative {
    pub fn weight(&self) -> BigRational {
        BigRational::new(1.into(), (self.stabilizer.len() as i64).into())
    }

    pub fn cm_point(&self, t: i64) -> (f64, f64) {
        let [a, _, c] = self.x;
        (a as f64 / c as f64, (t as f64).sqrt() / c as f64)
    }
}

/// Stabilizer of `x` in `PSL_2(Z)` among the candidates `I, S, U, U^2`,
/// which exhaust the possible stabilizers of points in the fundamental domain.
pub fn stabilizer(x: &[i64; 3]) -> Vec<IntMat2> {
    let u2 = mat_mul(&U, &U);
    [IDENTITY, S, U, u2].into_iter().filter(|g| conjugate(g, x) == *x).collect()
}

/// Orbit representatives of `Γ` on `{x in L(t) : gamma > 0}`, ordered by `(gamma, alpha)`.
pub fn cm_representatives(t: u64) -> Vec<CmRepresentative> {
    let t = t as i64;
    let mut out = Vec::new();
    if t <= 0 {
        return out;
    }
    let mut gamma = 1;
    // gamma^2 <= alpha^2 + t <= gamma^2 / 4 + t
    while 3 * gamma * gamma <= 4 * t {
        for alpha in -(gamma / 2)..=(gamma / 2) {
            if !in_fundamental_domain(alpha, gamma, t) {
                continue;
            }
            let num = t + alpha * alpha;
            if num % gamma != 0 {
                continue;
            }
            let x = [alpha, -num / gamma, gamma];
            out.push(CmRepresentative { stabilizer: stabilizer(&x), x });
        }
        gamma += 1;
    }
    out
}

fn require_split(l: &TraceZeroLattice) -> Result<()> {
    if l.discriminant() != 1 {
        return Err(Error::UnsupportedDiscriminant(l.discriminant()));
    }
    if !l.is_split_model() {
        return Err(Error::PreconditionViolation("D(B) = 1 lattice is not in split-model coordinates".into()));
    }
    Ok(())
}

/// `deg Z(t)`: sum over `Γ`-orbits on `L(t)` of `1 / |Stab|`.
pub fn weighted_orbit_degree(l: &TraceZeroLattice, t: u64) -> Result<BigRational> {
    require_split(l)?;
    if t == 0 {
        return Err(Error::PreconditionViolation("t must be positive".into()));
    }
    Ok(cm_representatives(t).iter().map(CmRepresentative::weight).fold(BigRational::zero(), |a, b| a + b))
}

/// Orbit representatives as lattice vectors of the split model.
pub fn orbit_representatives(l: &TraceZeroLattice, t: u64) -> Result<Vec<(LatticeVector, BigRational)>> {
    require_split(l)?;
    Ok(cm_representatives(t).into_iter().map(|r| (LatticeVector::new(r.x), r.weight())).collect())
}
