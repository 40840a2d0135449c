//! Deterministic adaptive Gauss-Kronrod quadrature (10-point Gauss, 21-point
//! Kronrod) with a global error-ordered subdivision queue.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

/// Value with an estimated absolute error.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Estimate {
    pub value: f64,
    pub error: f64,
}

impl Estimate {
    pub fn new(value: f64, error: f64) -> Self {
        Self { value, error }
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(self, other: Estimate) -> Estimate {
        Estimate::new(self.value + other.value, self.error + other.error)
    }

    pub fn scale(self, s: f64) -> Estimate {
        Estimate::new(self.value * s, self.error * s.abs())
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Limits {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_subdivisions: usize,
}

#[allow(clippy::excessive_precision)]
const XGK: [f64; 11] = [
    0.995657163025808080735527280689003,
    0.973906528517171720077964012084452,
    0.930157491355708226001207180059508,
    0.865063366688984510732096688423493,
    0.780817726586416897063717578345042,
    0.679409568299024406234327365114874,
    0.562757134668604683339000099272694,
    0.433395394129247190799265943165784,
    0.294392862701460198131126603103866,
    0.148874338981631210884826001129720,
    0.000000000000000000000000000000000,
];

#[allow(clippy::excessive_precision)]
const WG: [f64; 5] = [
    0.066671344308688137593568809893332,
    0.149451349150580593145776339657697,
    0.219086362515982043995534934228163,
    0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 11] = [
    0.011694638867371874278064396062192,
    0.032558162307964727478818972459390,
    0.054755896574351996031381300244580,
    0.075039674810919952767043140916190,
    0.093125454583697605535065465083366,
    0.109387158802297641899210590325805,
    0.123491976262065851077958109831074,
    0.134709217311473325928054001771707,
    0.142775938577060080797094273138717,
    0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
];

#[derive(Debug, Clone, Copy)]
struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
    /// Kronrod integral of the integrand's own error estimate (nested rules).
    inner_error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .total_cmp(&other.error)
            .then_with(|| other.a.total_cmp(&self.a))
    }
}

/// One 21-point Kronrod evaluation with the QUADPACK error heuristic.
fn gk21<F: FnMut(f64) -> Estimate>(f: &mut F, a: f64, b: f64) -> Segment {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut res_k = fc.value * WGK[10];
    let mut res_g = 0.0;
    let mut res_abs = fc.value.abs() * WGK[10];
    let mut inner = fc.error * WGK[10];
    let mut fv1 = [0.0; 10];
    let mut fv2 = [0.0; 10];
    for j in 0..10 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        fv1[j] = f1.value;
        fv2[j] = f2.value;
        res_k += WGK[j] * (f1.value + f2.value);
        res_abs += WGK[j] * (f1.value.abs() + f2.value.abs());
        inner += WGK[j] * (f1.error + f2.error);
        if j % 2 == 1 {
            res_g += WG[j / 2] * (f1.value + f2.value);
        }
    }
    let mean = res_k * 0.5;
    let mut res_asc = WGK[10] * (fc.value - mean).abs();
    for j in 0..10 {
        res_asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }
    let value = res_k * half;
    let res_abs = res_abs * half.abs();
    let res_asc = res_asc * half.abs();
    let mut error = ((res_k - res_g) * half).abs();
    if res_asc != 0.0 && error != 0.0 {
        error = res_asc * (200.0 * error / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        error = error.max(50.0 * f64::EPSILON * res_abs);
    }
    Segment { a, b, value, error, inner_error: inner * half.abs() }
}

/// Neumaier-compensated sum.
pub fn compensated_sum<I: IntoIterator<Item = f64>>(xs: I) -> f64 {
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for x in xs {
        let t = sum + x;
        if sum.abs() >= x.abs() {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

/// Result of an adaptive run, whether or not it met the tolerance.
#[derive(Debug, Clone, Copy)]
pub struct Outcome {
    pub estimate: Estimate,
    pub converged: bool,
    pub subdivisions: usize,
}

/// Adaptive integration of an integrand that reports its own error (for
/// nested rules); the reported error adds the integrated inner errors.
pub fn adapt<F: FnMut(f64) -> Estimate>(mut f: F, a: f64, b: f64, lim: &Limits) -> Outcome {
    let mut heap = BinaryHeap::new();
    heap.push(gk21(&mut f, a, b));
    let mut value: f64 = heap.peek().map(|s| s.value).unwrap_or(0.0);
    let mut error: f64 = heap.peek().map(|s| s.error).unwrap_or(0.0);
    let mut subdivisions = 0;
    let tolerance = |v: f64| lim.abs_tol.max(lim.rel_tol * v.abs());
    while error > tolerance(value) && subdivisions < lim.max_subdivisions {
        let worst = heap.pop().expect("nonempty");
        let mid = 0.5 * (worst.a + worst.b);
        if !(mid > worst.a && mid < worst.b) {
            heap.push(worst);
            break;
        }
        let left = gk21(&mut f, worst.a, mid);
        let right = gk21(&mut f, mid, worst.b);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        subdivisions += 1;
    }
    let mut segs = heap.into_vec();
    segs.sort_by(|x, y| x.a.total_cmp(&y.a));
    let value = compensated_sum(segs.iter().map(|s| s.value));
    let error = compensated_sum(segs.iter().map(|s| s.error + s.inner_error));
    let own = compensated_sum(segs.iter().map(|s| s.error));
    Outcome {
        estimate: Estimate::new(value, error),
        converged: own <= tolerance(value),
        subdivisions,
    }
}

/// `∫_a^b f`, failing with `QuadratureFailure` when the tolerance is not met.
pub fn integrate<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, lim: &Limits) -> Result<Estimate> {
    let out = adapt(|x| Estimate::new(f(x), 0.0), a, b, lim);
    check(out, lim)
}

/// `∫_a^b f` for an integrand that is itself an estimate.
pub fn integrate_nested<F: FnMut(f64) -> Estimate>(f: F, a: f64, b: f64, lim: &Limits) -> Result<Estimate> {
    check(adapt(f, a, b, lim), lim)
}

/// `∫_a^∞ f` through `x = a + s / (1 - s)`.
pub fn integrate_to_infinity<F: FnMut(f64) -> f64>(mut f: F, a: f64, lim: &Limits) -> Result<Estimate> {
    integrate(
        |s| {
            let d = 1.0 - s;
            f(a + s / d) / (d * d)
        },
        0.0,
        1.0,
        lim,
    )
}

fn check(out: Outcome, lim: &Limits) -> Result<Estimate> {
    if out.converged {
        Ok(out.estimate)
    } else {
        Err(Error::QuadratureFailure {
            estimate: out.estimate.error,
            tolerance: lim.abs_tol.max(lim.rel_tol * out.estimate.value.abs()),
        })
    }
}
