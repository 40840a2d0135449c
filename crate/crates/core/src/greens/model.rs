//! The upper half-plane model of `D` for the real split quadratic space.
//!
//! A vector of `V(R)` is written `x = [[alpha, beta], [gamma, -alpha]]`, so
//! `Q(x) = det x = -alpha^2 - beta gamma` and `(x, y) = -tr(xy)`. The
//! isotropic section is `w(z) = [[z, -z^2], [1, -z]]`, for which
//! `(x, w(z)) = gamma z^2 - 2 alpha z - beta` and `(w, conj w) = -4 v^2`.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Point of `D`: an upper-half-plane coordinate plus the sheet (`+1` or `-1`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UHPoint {
    pub u: f64,
    pub v: f64,
    pub sheet: i8,
}

impl UHPoint {
    pub fn new(u: f64, v: f64) -> Result<Self> {
        Self::with_sheet(u, v, 1)
    }

    pub fn with_sheet(u: f64, v: f64, sheet: i8) -> Result<Self> {
        if !(v > 0.0) || !u.is_finite() || !v.is_finite() {
            return Err(Error::PreconditionViolation(format!("invalid point u={u}, v={v}")));
        }
        if sheet != 1 && sheet != -1 {
            return Err(Error::PreconditionViolation(format!("sheet must be +1 or -1, got {sheet}")));
        }
        Ok(Self { u, v, sheet })
    }

    pub fn i() -> Self {
        Self { u: 0.0, v: 1.0, sheet: 1 }
    }

    pub fn to_complex(self) -> Complex64 {
        Complex64::new(self.u, self.v)
    }

    pub fn from_complex(z: Complex64) -> Result<Self> {
        Self::new(z.re, z.im)
    }

    /// Hyperbolic distance to another point on the same sheet.
    pub fn distance(self, other: UHPoint) -> f64 {
        let du = self.u - other.u;
        let dv = self.v - other.v;
        let c = 1.0 + (du * du + dv * dv) / (2.0 * self.v * other.v);
        c.max(1.0).acosh()
    }

    /// Image under the Moebius action of a real matrix of positive determinant.
    pub fn mobius(self, g: &[[f64; 2]; 2]) -> Self {
        let z = self.to_complex();
        let w = (z * g[0][0] + g[0][1]) / (z * g[1][0] + g[1][1]);
        Self { u: w.re, v: w.im, sheet: self.sheet }
    }
}

/// Vector `(alpha, beta, gamma)` of `V(R)` in model coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelVector(pub [f64; 3]);

impl ModelVector {
    pub fn q(&self) -> f64 {
        let [a, b, c] = self.0;
        -a * a - b * c
    }

    pub fn pairing(&self, other: &ModelVector) -> f64 {
        let [a, b, c] = self.0;
        let [a2, b2, c2] = other.0;
        -(2.0 * a * a2 + b * c2 + c * b2)
    }

    pub fn scale(&self, s: f64) -> ModelVector {
        ModelVector(self.0.map(|x| x * s))
    }

    pub fn add(&self, other: &ModelVector) -> ModelVector {
        ModelVector([self.0[0] + other.0[0], self.0[1] + other.0[1], self.0[2] + other.0[2]])
    }

    /// `P(z) = (x, w(z)) = gamma z^2 - 2 alpha z - beta`.
    pub fn section_pairing(&self, z: Complex64) -> Complex64 {
        let [a, b, c] = self.0;
        z * z * c - z * (2.0 * a) - b
    }

    /// `P'(z)`.
    pub fn section_pairing_derivative(&self, z: Complex64) -> Complex64 {
        let [a, _, c] = self.0;
        z * (2.0 * c) - 2.0 * a
    }

    /// The point of `D_x` on the upper sheet, when `Q(x) > 0`.
    pub fn cm_point(&self) -> Option<UHPoint> {
        let t = self.q();
        let [a, _, c] = self.0;
        if !(t > 0.0) || c == 0.0 {
            return None;
        }
        // roots of gamma z^2 - 2 alpha z - beta are (alpha +- i sqrt(t)) / gamma
        Some(UHPoint { u: a / c, v: t.sqrt() / c.abs(), sheet: 1 })
    }

    /// Conjugation `g x g^{-1}` by a real matrix.
    pub fn conjugate_by(&self, g: &[[f64; 2]; 2]) -> ModelVector {
        let [a, b, c] = self.0;
        let x = [[a, b], [c, -a]];
        let det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
        let adj = [[g[1][1], -g[0][1]], [-g[1][0], g[0][0]]];
        let mut gx = [[0.0; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                gx[i][j] = g[i][0] * x[0][j] + g[i][1] * x[1][j];
            }
        }
        let mut y = [[0.0; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                y[i][j] = (gx[i][0] * adj[0][j] + gx[i][1] * adj[1][j]) / det;
            }
        }
        ModelVector([y[0][0], y[0][1], y[1][0]])
    }
}

/// `R(x, z) = |(x, w(z))|^2 / |(w, conj w)|`; the same on both sheets.
pub fn r_value(x: &ModelVector, z: UHPoint) -> f64 {
    let p = x.section_pairing(Complex64::new(z.u, z.v));
    p.norm_sqr() / (4.0 * z.v * z.v)
}

/// Majorant `(x, x) + 4 R(x, z)` as a quadratic form in model coordinates.
pub fn model_majorant(z: UHPoint) -> [[f64; 3]; 3] {
    // (x, w(z)) = c . x with c = (-2z, -1, z^2)
    let (u, v) = (z.u, z.v);
    let cr = [-2.0 * u, -1.0, u * u - v * v];
    let ci = [-2.0 * v, 0.0, 2.0 * u * v];
    let mut m = [[-2.0, 0.0, 0.0], [0.0, 0.0, -1.0], [0.0, -1.0, 0.0]];
    for i in 0..3 {
        for j in 0..3 {
            m[i][j] += (cr[i] * cr[j] + ci[i] * ci[j]) / (v * v);
        }
    }
    m
}
