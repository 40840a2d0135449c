//! `xi(x, z) = beta_1(2 pi R(x, z))`, its curvature form, and the smooth
//! form `omega(x)` with `dd^c [xi(x)] + delta_{D_x} = [omega(x)]`.
//!
//! Densities are taken against the hyperbolic measure `du dv / v^2`, with
//! `dd^c = (1/4 pi) Δ du ∧ dv`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::config::QuadratureSpec;
use crate::error::{Error, Result};

use super::beta1::{e1, e1_prime, e1_second};
use super::model::{r_value, ModelVector, UHPoint};

pub fn xi(x: &ModelVector, z: UHPoint, spec: &QuadratureSpec) -> Result<f64> {
    let r = r_value(x, z);
    if r < spec.r_floor {
        return Err(Error::OnSingularLocus { r });
    }
    Ok(e1(2.0 * PI * r))
}

/// `xi` without the singular-locus check; `R` is clamped away from zero.
pub(crate) fn xi_unchecked(x: &ModelVector, z: UHPoint) -> f64 {
    e1(2.0 * PI * r_value(x, z).max(1e-300))
}

/// `R` and its first and second partials in `(u, v)`.
struct RJet {
    r: f64,
    ru: f64,
    rv: f64,
    laplacian: f64,
}

fn r_jet(x: &ModelVector, z: UHPoint) -> RJet {
    let zc = Complex64::new(z.u, z.v);
    let p = x.section_pairing(zc);
    let dp = x.section_pairing_derivative(zc);
    let n = p.norm_sqr();
    let pd = p.conj() * dp;
    let nu = 2.0 * pd.re;
    let nv = -2.0 * pd.im;
    let lap_n = 4.0 * dp.norm_sqr();
    let v = z.v;
    let h = 1.0 / (4.0 * v * v);
    let hv = -1.0 / (2.0 * v * v * v);
    let hvv = 3.0 / (2.0 * v * v * v * v);
    RJet {
        r: n * h,
        ru: nu * h,
        rv: nv * h + n * hv,
        laplacian: lap_n * h + 2.0 * nv * hv + n * hvv,
    }
}

/// Density of `dd^c xi(x, .)` at `z`, by analytic differentiation through `R`.
pub fn ddc_xi(x: &ModelVector, z: UHPoint, spec: &QuadratureSpec) -> Result<f64> {
    let j = r_jet(x, z);
    if j.r < spec.r_floor {
        return Err(Error::OnSingularLocus { r: j.r });
    }
    let s = 2.0 * PI * j.r;
    let grad2 = j.ru * j.ru + j.rv * j.rv;
    let lap = e1_second(s) * (2.0 * PI).powi(2) * grad2 + e1_prime(s) * 2.0 * PI * j.laplacian;
    Ok(z.v * z.v * lap / (4.0 * PI))
}

/// Smooth form `omega(x)(z) = e^{-2 pi R} (2R + 2Q - 1/(2 pi))`; equals
/// `ddc_xi` off `D_x` and has total mass 1 on each sheet when `Q(x) > 0`.
pub fn omega(x: &ModelVector, z: UHPoint) -> f64 {
    let r = r_value(x, z);
    (-2.0 * PI * r).exp() * (2.0 * r + 2.0 * x.q() - 1.0 / (2.0 * PI))
}

/// Upper bound `(2R + 2|Q| + 1) e^{-2 pi R}` for `|omega|` and `|ddc_xi|`.
pub fn omega_envelope(x: &ModelVector, z: UHPoint) -> f64 {
    let r = r_value(x, z);
    (-2.0 * PI * r).exp() * (2.0 * r + 2.0 * x.q().abs() + 1.0)
}
