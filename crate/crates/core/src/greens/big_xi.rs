//! `Xi(t, v)(z) = sum_{x in L(t)} beta_1(2 pi v R(x, z))`, truncated by the
//! majorant with a certified bound on the omitted terms.

use std::f64::consts::PI;

use crate::config::QuadratureSpec;
use crate::error::{Error, Result};
use crate::lattice::enumerate::enumerate_by_majorant_capped;
use crate::lattice::trace_zero::{majorant, r_of, LatticeVector, TraceZeroLattice};
use crate::linalg::{det3, quad3};

use super::beta1::e1;
use super::model::UHPoint;
use super::quadrature::compensated_sum;

#[derive(Debug, Clone, PartialEq)]
pub struct XiSum {
    pub value: f64,
    /// Certified upper bound on the sum of the omitted terms.
    pub tail_bound: f64,
    /// Number of summed terms.
    pub terms: usize,
    /// Majorant bound used for truncation.
    pub bound: f64,
    /// Terms skipped because `z` lies (numerically) on `D_x`.
    pub excluded: Vec<LatticeVector>,
}

/// Upper bound on `beta_1(r)` for `r > 0` used in tail estimates.
fn beta1_upper(r: f64) -> f64 {
    if r <= 0.0 {
        f64::INFINITY
    } else {
        (-r).exp() / r
    }
}

/// Bound on the number of lattice points with majorant at most `m`: the
/// unit cubes around them fit in the ellipsoid of radius `sqrt(m) + rho`.
struct CountBound {
    rho: f64,
    inv_sqrt_det: f64,
}

impl CountBound {
    fn new(g: &[[f64; 3]; 3]) -> Self {
        let mut rho: f64 = 0.0;
        for s0 in [-0.5, 0.5] {
            for s1 in [-0.5, 0.5] {
                for s2 in [-0.5, 0.5] {
                    rho = rho.max(quad3(g, &[s0, s1, s2]).sqrt());
                }
            }
        }
        Self { rho, inv_sqrt_det: 1.0 / det3(g).sqrt() }
    }

    fn count(&self, m: f64) -> f64 {
        4.0 / 3.0 * PI * (m.sqrt() + self.rho).powi(3) * self.inv_sqrt_det
    }
}

/// Bound on `sum beta_1(2 pi v R)` over `x in L(t)` with majorant above `bound`.
fn tail_bound(cb: &CountBound, t: i64, v: f64, bound: f64) -> f64 {
    // shells of width one e-fold of the beta_1 decay in the majorant variable
    let width = (2.0 / (PI * v)).max(1.0);
    let decay = (-2.0 * PI * v * width / 4.0).exp();
    let mut total = 0.0;
    let mut lo = bound;
    for _ in 0..100_000 {
        let hi = lo + width;
        let r_lo = (lo - 2.0 * t as f64) / 4.0;
        let term = cb.count(hi) * beta1_upper(2.0 * PI * v * r_lo);
        total += term;
        // every later shell-to-shell ratio is at most this (count growth shrinks with m)
        let ratio = cb.count(hi + width) / cb.count(hi) * decay;
        if ratio < 0.5 && term <= 1e-6 * total {
            return total + term * ratio / (1.0 - ratio);
        }
        if term == 0.0 && total == 0.0 && r_lo > 0.0 {
            return 0.0;
        }
        lo = hi;
    }
    f64::INFINITY
}

fn check_inputs(l: &TraceZeroLattice, t: i64, v: f64, spec: &QuadratureSpec) -> Result<()> {
    spec.validate()?;
    if l.is_definite() {
        return Err(Error::PreconditionViolation("Xi needs an indefinite lattice".into()));
    }
    if t == 0 {
        return Err(Error::PreconditionViolation("t must be nonzero".into()));
    }
    if !(v > 0.0) {
        return Err(Error::NonpositiveArgument(v));
    }
    Ok(())
}

fn sum_impl(
    l: &TraceZeroLattice,
    t: i64,
    v: f64,
    z: UHPoint,
    spec: &QuadratureSpec,
    puncture: bool,
) -> Result<XiSum> {
    check_inputs(l, t, v, spec)?;
    let g = majorant(l, z)?;
    let cb = CountBound::new(&g);
    // the majorant of x in L(t) is 2t + 4R, so R = (m - 2t) / 4
    let mut bound = spec.truncation_majorant_bound.max(2.0 * t as f64 + 4.0);
    let mut tail = tail_bound(&cb, t, v, bound);
    while tail > spec.abs_tol {
        bound *= 1.25;
        tail = tail_bound(&cb, t, v, bound);
    }
    let mut terms = Vec::new();
    let mut excluded = Vec::new();
    for x in enumerate_by_majorant_capped(l, z, bound, spec.enumeration_cap)? {
        if l.q(&x) != t {
            continue;
        }
        let r = r_of(l, z, &x)?;
        if r < spec.r_floor {
            if !puncture {
                return Err(Error::SingularEvaluation { vector: x.coords });
            }
            excluded.push(x);
            continue;
        }
        terms.push(e1(2.0 * PI * v * r));
    }
    Ok(XiSum { value: compensated_sum(terms.iter().copied()), tail_bound: tail, terms: terms.len(), bound, excluded })
}

/// `Xi(t, v)(z)`; fails with `SingularEvaluation` when `z` lies on some `D_x`.
pub fn big_xi(l: &TraceZeroLattice, t: i64, v: f64, z: UHPoint, spec: &QuadratureSpec) -> Result<XiSum> {
    sum_impl(l, t, v, z, spec, false)
}

/// `Xi(t, v)(z)` with the terms singular at `z` excluded and reported.
pub fn big_xi_punctured(l: &TraceZeroLattice, t: i64, v: f64, z: UHPoint, spec: &QuadratureSpec) -> Result<XiSum> {
    sum_impl(l, t, v, z, spec, true)
}
