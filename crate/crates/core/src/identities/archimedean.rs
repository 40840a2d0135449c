//! `½ ∫_{M(C)} g` for `Γ`-invariant `g` on the `D(B) = 1` model, over the
//! standard fundamental domain `|u| <= ½, |z| >= 1`, truncated at a height `Y`
//! with a certified cusp tail.

use crate::arith::is_square_i64;
use crate::config::QuadratureSpec;
use crate::error::{Error, Result};
use crate::greens::big_xi::big_xi;
use crate::greens::model::UHPoint;
use crate::greens::quadrature::{adapt, Estimate, Limits};
use crate::lattice::trace_zero::TraceZeroLattice;

/// A `Γ`-invariant function on the upper half-plane with a known cusp decay.
pub trait CuspIntegrand: Sync {
    fn eval(&self, z: UHPoint) -> Result<Estimate>;

    /// Bound on `∫_{y >= y0} ∫_{|u| <= ½} |g| du dy / y^2`, or `None` when
    /// none is available at this height.
    fn cusp_tail(&self, y0: f64) -> Option<f64>;
}

/// `g ≡ 0`.
pub struct Zero;

impl CuspIntegrand for Zero {
    fn eval(&self, _: UHPoint) -> Result<Estimate> {
        Ok(Estimate::new(0.0, 0.0))
    }

    fn cusp_tail(&self, _: f64) -> Option<f64> {
        Some(0.0)
    }
}

/// A closure with a caller-supplied tail bound.
pub struct FnIntegrand<F, T> {
    pub f: F,
    pub tail: T,
}

impl<F, T> CuspIntegrand for FnIntegrand<F, T>
where
    F: Fn(UHPoint) -> f64 + Sync,
    T: Fn(f64) -> Option<f64> + Sync,
{
    fn eval(&self, z: UHPoint) -> Result<Estimate> {
        Ok(Estimate::new((self.f)(z), 0.0))
    }

    fn cusp_tail(&self, y0: f64) -> Option<f64> {
        (self.tail)(y0)
    }
}

/// `Xi(t, v)` for `t < 0` on the split model.
pub struct XiIntegrand<'a> {
    lattice: &'a TraceZeroLattice,
    t: i64,
    v: f64,
    spec: QuadratureSpec,
}

impl<'a> XiIntegrand<'a> {
    /// Fails with `NotIntegrable` when `-t` is a square: the vectors with
    /// `γ = 0` keep `R` bounded near the cusp and the integral diverges.
    pub fn new(lattice: &'a TraceZeroLattice, t: i64, v: f64, spec: &QuadratureSpec) -> Result<Self> {
        if lattice.discriminant() != 1 || !lattice.is_split_model() {
            return Err(Error::UnsupportedDiscriminant(lattice.discriminant()));
        }
        if t >= 0 {
            return Err(Error::PreconditionViolation("Xi is integrable only for t < 0".into()));
        }
        if !(v > 0.0) {
            return Err(Error::NonpositiveArgument(v));
        }
        if is_square_i64(-t) {
            return Err(Error::NotIntegrable(format!("Xi({t}) grows linearly in the cusp")));
        }
        // pointwise truncation error stays well inside the integral's budget
        let spec = QuadratureSpec { abs_tol: spec.abs_tol / 8.0, ..*spec };
        Ok(Self { lattice, t, v, spec })
    }

    /// Pointwise bound on `Xi` at height `y >= 2 sqrt|t|`, from
    /// `R >= γ^2 y^2 / 8 + (γu - α)^2 / 4`.
    fn gamma_terms(&self, y: f64, mut per_gamma: impl FnMut(f64, f64) -> f64) -> f64 {
        let lattice_sum = 2.0 * (1.0 + (2.0 / self.v).sqrt());
        let mut total = 0.0;
        for g in 1..10_000 {
            let c = std::f64::consts::PI * self.v * (g * g) as f64 / 4.0;
            let term = lattice_sum * per_gamma(c, y);
            total += term;
            if term <= 1e-30 * total || term == 0.0 {
                break;
            }
        }
        total
    }
}

impl CuspIntegrand for XiIntegrand<'_> {
    fn eval(&self, z: UHPoint) -> Result<Estimate> {
        let s = big_xi(self.lattice, self.t, self.v, z, &self.spec)?;
        Ok(Estimate::new(s.value, s.tail_bound))
    }

    fn cusp_tail(&self, y0: f64) -> Option<f64> {
        if y0 < 2.0 * (-self.t as f64).sqrt() || y0 < 1.0 {
            return None;
        }
        // ∫_{y0}^∞ e^{-c y^2} / (c y^2) dy / y^2 <= e^{-c y0^2} / (2 c^2 y0^5)
        Some(self.gamma_terms(y0, |c, y| (-c * y * y).exp() / (2.0 * c * c * y.powi(5))))
    }
}

const Y_STEP: f64 = 0.25;

/// `½ ∫_F g dμ` with `dμ = du dy / y^2`.
pub fn arithmetic_degree_archimedean<G: CuspIntegrand + ?Sized>(g: &G, spec: &QuadratureSpec) -> Result<Estimate> {
    spec.validate()?;
    let mut y_max = 1.0;
    let tail = loop {
        if let Some(b) = g.cusp_tail(y_max) {
            if b <= spec.abs_tol / 8.0 {
                break b;
            }
        }
        if y_max > 1e3 {
            return Err(Error::NotIntegrable("no certified cusp tail".into()));
        }
        y_max += Y_STEP;
    };
    let inner = Limits { abs_tol: spec.abs_tol / 8.0, rel_tol: spec.rel_tol / 4.0, max_subdivisions: spec.max_subdivisions };
    let outer = Limits { abs_tol: spec.abs_tol / 4.0, rel_tol: spec.rel_tol / 2.0, max_subdivisions: spec.max_subdivisions };
    let mut failure: Option<Error> = None;
    let column = |u: f64| -> Estimate {
        let y0 = (1.0 - u * u).max(0.0).sqrt();
        let out = adapt(
            |y| match UHPoint::new(u, y).and_then(|z| g.eval(z)) {
                Ok(e) => e.scale(1.0 / (y * y)),
                Err(err) => {
                    failure.get_or_insert(err);
                    Estimate::new(0.0, 0.0)
                }
            },
            y0,
            y_max,
            &inner,
        );
        if !out.converged {
            failure.get_or_insert(Error::QuadratureFailure {
                estimate: out.estimate.error,
                tolerance: inner.abs_tol,
            });
        }
        out.estimate
    };
    let out = adapt(column, -0.5, 0.5, &outer);
    if let Some(err) = failure {
        return Err(err);
    }
    let total = Estimate::new(out.estimate.value, out.estimate.error + tail).scale(0.5);
    let tol = spec.abs_tol.max(spec.rel_tol * total.value.abs());
    if !out.converged || total.error > tol {
        return Err(Error::QuadratureFailure { estimate: total.error, tolerance: tol });
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::order::Order;
    use std::f64::consts::PI;

    #[test]
    fn zero_and_constant() {
        let spec = QuadratureSpec::default();
        assert_eq!(arithmetic_degree_archimedean(&Zero, &spec).unwrap().value, 0.0);
        // e^{-y}: ∫_F = ∫ du ∫_{y0}^∞ e^{-y} / y^2 dy
        let g = FnIntegrand { f: |z: UHPoint| (-z.v).exp(), tail: |y: f64| Some((-y).exp() / (y * y)) };
        let got = arithmetic_degree_archimedean(&g, &spec).unwrap();
        assert!(got.value > 0.0 && got.value < PI / 6.0);
    }

    #[test]
    fn xi_minus_one_is_not_integrable() {
        let l = TraceZeroLattice::new(Order::split()).unwrap();
        let spec = QuadratureSpec::default();
        assert!(matches!(XiIntegrand::new(&l, -1, 1.0, &spec), Err(Error::NotIntegrable(_))));
        assert!(matches!(XiIntegrand::new(&l, -4, 1.0, &spec), Err(Error::NotIntegrable(_))));
        assert!(XiIntegrand::new(&l, 2, 1.0, &spec).is_err());
    }

    #[test]
    fn tail_bound_dominates_pointwise_values() {
        let l = TraceZeroLattice::new(Order::split()).unwrap();
        let spec = QuadratureSpec::default();
        let g = XiIntegrand::new(&l, -2, 1.0, &spec).unwrap();
        for y in [3.0, 3.5, 4.0] {
            let bound = g.gamma_terms(y, |c, y| (-c * y * y).exp() / (c * y * y));
            for u in [-0.5, -0.1, 0.3] {
                let val = g.eval(UHPoint::new(u, y).unwrap()).unwrap().value;
                assert!(val <= bound, "y={y} u={u}: {val} > {bound}");
            }
        }
    }
}
