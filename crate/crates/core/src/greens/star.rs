//! The star-product height `Λ(x) = ∫_D xi(x1) * xi(x2)`.
//!
//! With `xi1 * xi2 = xi1 δ_{D_x2} + omega(x1) xi2`, each sheet contributes
//! `xi1(z_{x2}) + ∫_H omega(x1) xi2 dμ`; the two sheets are exchanged by
//! complex conjugation and contribute equally. The integral is computed in
//! geodesic polar coordinates `(rho, theta)` about a center chosen at the
//! logarithmic singularity when there is one, where `dμ = sinh rho drho dtheta`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::config::QuadratureSpec;
use crate::error::{Error, Result};
use crate::lattice::trace_zero::{LatticeVector, TraceZeroLattice};
use crate::linalg::Mat2;

use super::green::{omega, omega_envelope, xi, xi_unchecked};
use super::model::{ModelVector, UHPoint};
use super::quadrature::{adapt, Estimate, Limits};

/// A pair `x = (x1, x2)` of vectors in `V(R)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairConfig {
    pub x1: ModelVector,
    pub x2: ModelVector,
}

impl PairConfig {
    pub fn new(x1: ModelVector, x2: ModelVector) -> Self {
        Self { x1, x2 }
    }

    pub fn from_lattice(l: &TraceZeroLattice, x1: &LatticeVector, x2: &LatticeVector) -> Result<Self> {
        let m = |x| {
            l.model_vector(x)
                .ok_or_else(|| Error::PreconditionViolation("pairs live in an indefinite lattice".into()))
        };
        Ok(Self::new(m(x1)?, m(x2)?))
    }

    /// `T = ½ ((x_i, x_j))`.
    pub fn gram(&self) -> Mat2 {
        let off = 0.5 * self.x1.pairing(&self.x2);
        [[self.x1.q(), off], [off, self.x2.q()]]
    }

    pub fn det(&self) -> f64 {
        let t = self.gram();
        t[0][0] * t[1][1] - t[0][1] * t[1][0]
    }

    /// `x · a = (a11 x1 + a21 x2, a12 x1 + a22 x2)`, with gram `a^T T a`.
    pub fn transform(&self, a: &Mat2) -> PairConfig {
        PairConfig {
            x1: self.x1.scale(a[0][0]).add(&self.x2.scale(a[1][0])),
            x2: self.x1.scale(a[0][1]).add(&self.x2.scale(a[1][1])),
        }
    }

    pub fn swapped(&self) -> PairConfig {
        PairConfig { x1: self.x2, x2: self.x1 }
    }

    /// Commutator `[x1, x2]`, orthogonal to both; `Q([x1, x2]) = 4 det T`.
    pub fn commutator(&self) -> ModelVector {
        let [a, b, c] = self.x1.0;
        let [a2, b2, c2] = self.x2.0;
        ModelVector([b * c2 - b2 * c, 2.0 * (a * b2 - a2 * b), 2.0 * (c * a2 - a * c2)])
    }
}

fn check_pair(first: &ModelVector, second: &ModelVector) -> Result<()> {
    for x in [first, second] {
        if x.q() == 0.0 {
            return Err(Error::SingularConfiguration("isotropic vector has no Green function".into()));
        }
    }
    let pair = PairConfig::new(*first, *second);
    let t = pair.gram();
    let scale = (t[0][0] * t[1][1]).abs().max(t[0][1] * t[0][1]);
    if pair.det().abs() <= 1e-12 * scale {
        return Err(Error::SingularConfiguration("T is singular".into()));
    }
    Ok(())
}

/// `a x1 + b x2` along the positive eigenvector of `T`; `Q > 0` in signature `(1,1)`.
fn positive_direction(pair: &PairConfig) -> ModelVector {
    let t = pair.gram();
    let (p, q, r) = (t[0][0], t[0][1], t[1][1]);
    let lambda = 0.5 * (p + r) + (0.25 * (p - r) * (p - r) + q * q).sqrt();
    let (a, b) = if q.abs() > 1e-300 { (q, lambda - p) } else if p >= r { (1.0, 0.0) } else { (0.0, 1.0) };
    pair.x1.scale(a).add(&pair.x2.scale(b))
}

/// Point at geodesic polar coordinates `(rho, theta)` about `c`.
fn polar_point(c: UHPoint, rho: f64, theta: f64) -> UHPoint {
    let w = Complex64::from_polar((0.5 * rho).tanh(), theta);
    let zz = Complex64::i() * (1.0 + w) / (1.0 - w);
    UHPoint { u: c.u + c.v * zz.re, v: c.v * zz.im, sheet: 1 }
}

const RHO_STEP: f64 = 0.25;
const RHO_LIMIT: f64 = 30.0;

/// `∫_H omega(first) xi(second) dμ` about `center`, with the log singularity of
/// `xi(second)` at the center when `singular_center` holds.
fn smooth_integral(
    first: &ModelVector,
    second: &ModelVector,
    center: UHPoint,
    singular_center: bool,
    spec: &QuadratureSpec,
) -> Result<Estimate> {
    // one sheet gets half the budget: outer rule 1/4, inner rules and tails 1/8 each
    let inner_abs = spec.abs_tol / (16.0 * PI);
    let inner = Limits { abs_tol: inner_abs, rel_tol: spec.rel_tol / 8.0, max_subdivisions: spec.max_subdivisions };
    let outer = Limits {
        abs_tol: spec.abs_tol / 4.0,
        rel_tol: spec.rel_tol / 4.0,
        max_subdivisions: spec.max_subdivisions,
    };
    let integrand = |rho: f64, theta: f64| {
        let z = polar_point(center, rho, theta);
        omega(first, z) * xi_unchecked(second, z) * rho.sinh()
    };
    let envelope = |rho: f64, theta: f64| {
        let z = polar_point(center, rho, theta);
        omega_envelope(first, z) * xi_unchecked(second, z) * rho.sinh()
    };
    let mut failed = false;
    let radial = |theta: f64| -> Estimate {
        // march outwards until the envelope is negligible and decreasing
        let mut rho_max = RHO_STEP;
        loop {
            let e0 = envelope(rho_max, theta);
            let e1 = envelope(rho_max + RHO_STEP, theta);
            let e2 = envelope(rho_max + 2.0 * RHO_STEP, theta);
            if rho_max >= 2.0 * RHO_STEP && e0 < inner_abs && e1 <= e0 && e2 <= e1 {
                break;
            }
            if rho_max > RHO_LIMIT {
                return Estimate::new(f64::NAN, f64::INFINITY);
            }
            rho_max += RHO_STEP;
        }
        // beyond rho_max the envelope decays at least like exp(-(rho - rho_max))
        let tail = envelope(rho_max, theta);
        let mut total = Estimate::new(0.0, tail);
        let mut start = 0.0;
        if singular_center {
            let rb = spec.singular_ball_radius.min(rho_max);
            let near = adapt(|s| Estimate::new(integrand(rb * s * s, theta) * 2.0 * rb * s, 0.0), 0.0, 1.0, &inner);
            total = total.add(near.estimate);
            start = rb;
        }
        if rho_max > start {
            let far = adapt(|rho| Estimate::new(integrand(rho, theta), 0.0), start, rho_max, &inner);
            total = total.add(far.estimate);
        }
        total
    };
    let out = adapt(
        |theta| {
            let e = radial(theta);
            if !e.value.is_finite() {
                failed = true;
            }
            e
        },
        0.0,
        2.0 * PI,
        &outer,
    );
    if failed || !out.estimate.value.is_finite() {
        return Err(Error::QuadratureFailure { estimate: f64::INFINITY, tolerance: spec.abs_tol });
    }
    Ok(out.estimate)
}

/// `Λ` with `omega` taken from `first` and the delta term on `D_second`
/// (present iff `Q(second) > 0`), summed over both sheets.
pub fn star_integral(first: &ModelVector, second: &ModelVector, spec: &QuadratureSpec) -> Result<Estimate> {
    spec.validate()?;
    check_pair(first, second)?;
    let (center, singular, delta) = if let Some(zs) = second.cm_point() {
        (zs, true, xi(first, zs, spec)?)
    } else if let Some(zf) = first.cm_point() {
        (zf, false, 0.0)
    } else {
        let pair = PairConfig::new(*first, *second);
        let c = pair
            .commutator()
            .cm_point()
            .or_else(|| positive_direction(&pair).cm_point())
            .ok_or_else(|| Error::SingularConfiguration("no center for the polar grid".into()))?;
        (c, false, 0.0)
    };
    let integral = smooth_integral(first, second, center, singular, spec)?;
    let total = Estimate::new(2.0 * (delta + integral.value), 2.0 * integral.error);
    let tol = spec.abs_tol.max(spec.rel_tol * total.value.abs());
    if total.error > tol {
        return Err(Error::QuadratureFailure { estimate: total.error, tolerance: tol });
    }
    Ok(total)
}

/// `Λ(x)` with the delta term on `x2` when `Q(x2) > 0`, else on `x1` when
/// `Q(x1) > 0`, else none.
pub fn lambda_star(pair: &PairConfig, spec: &QuadratureSpec) -> Result<Estimate> {
    if pair.x2.q() > 0.0 || pair.x1.q() <= 0.0 {
        star_integral(&pair.x1, &pair.x2, spec)
    } else {
        star_integral(&pair.x2, &pair.x1, spec)
    }
}

/// Rotation by `phi` in `SO(2)`.
pub fn rotation(phi: f64) -> Mat2 {
    let (s, c) = phi.sin_cos();
    [[c, -s], [s, c]]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec() -> QuadratureSpec {
        QuadratureSpec { rel_tol: 1e-8, abs_tol: 1e-11, ..QuadratureSpec::default() }
    }

    #[test]
    fn omega_has_unit_mass() {
        let x = ModelVector([0.0, -1.0, 1.0]);
        let lim = Limits { abs_tol: 1e-13, rel_tol: 1e-12, max_subdivisions: 200 };
        let radial = |theta: f64| {
            adapt(
                |rho| Estimate::new(omega(&x, polar_point(UHPoint::i(), rho, theta)) * rho.sinh(), 0.0),
                0.0,
                8.0,
                &lim,
            )
            .estimate
        };
        let total = adapt(radial, 0.0, 2.0 * PI, &lim).estimate;
        assert!((total.value - 1.0).abs() < 1e-10, "{total:?}");
    }

    #[test]
    fn signature_one_one_is_symmetric() {
        let x1 = ModelVector([0.0, -1.0, 1.0]);
        let x2 = ModelVector([1.0, 0.0, 0.0]);
        let s = spec();
        let a = star_integral(&x1, &x2, &s).unwrap();
        let b = star_integral(&x2, &x1, &s).unwrap();
        assert!((a.value - b.value).abs() <= a.error + b.error + 1e-10, "{a:?} {b:?}");
    }

    #[test]
    fn singular_pairs_are_rejected() {
        let x = ModelVector([0.0, -1.0, 1.0]);
        let pair = PairConfig::new(x, x.scale(2.0));
        assert!(matches!(lambda_star(&pair, &spec()), Err(Error::SingularConfiguration(_))));
        let iso = ModelVector([0.0, 1.0, 0.0]);
        assert!(matches!(lambda_star(&PairConfig::new(x, iso), &spec()), Err(Error::SingularConfiguration(_))));
    }

    #[test]
    fn both_negative_in_signature_one_one() {
        let x1 = ModelVector([1.0, 0.0, 0.0]);
        let x2 = ModelVector([3.0, 1.0, -1.0]);
        let p = PairConfig::new(x1, x2);
        assert!(p.det() < 0.0 && x1.q() < 0.0 && x2.q() < 0.0);
        let s = spec();
        let a = star_integral(&x1, &x2, &s).unwrap();
        let b = star_integral(&x2, &x1, &s).unwrap();
        assert!((a.value - b.value).abs() <= a.error + b.error + 1e-12, "{a:?} {b:?}");
    }

    #[test]
    fn commutator_norm() {
        let p = PairConfig::new(ModelVector([1.0, 2.0, -3.0]), ModelVector([0.5, -1.0, 2.0]));
        let y = p.commutator();
        assert!((y.q() - 4.0 * p.det()).abs() < 1e-12);
        assert!(y.pairing(&p.x1).abs() < 1e-12 && y.pairing(&p.x2).abs() < 1e-12);
    }
}
