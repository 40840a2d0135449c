//! `beta_1(r) = ∫_1^∞ e^{-ru} u^{-1} du`, the exponential integral `E_1(r)`.

use crate::error::{Error, Result};

#[allow(clippy::excessive_precision)]
pub const EULER_GAMMA: f64 = 0.5772156649015328606065120900824024310422;

pub fn beta1(r: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::NonpositiveArgument(r));
    }
    Ok(e1(r))
}

/// Unchecked evaluation for `r > 0`.
pub(crate) fn e1(r: f64) -> f64 {
    if r <= 1.0 {
        series(r)
    } else {
        continued_fraction(r)
    }
}

/// `-gamma - log r - sum_{k>=1} (-r)^k / (k k!)`.
fn series(r: f64) -> f64 {
    let mut term = 1.0;
    let mut sum = 0.0;
    for k in 1..200 {
        term *= -r / k as f64;
        let c = term / k as f64;
        sum += c;
        if c.abs() < 1e-18 * sum.abs().max(1e-300) {
            break;
        }
    }
    -EULER_GAMMA - r.ln() - sum
}

/// Modified Lentz evaluation of `e^{-r} / (r + 1 - 1/(r + 3 - 4/(r + 5 - ...)))`.
fn continued_fraction(r: f64) -> f64 {
    const TINY: f64 = 1e-300;
    let mut b = r + 1.0;
    let mut c = 1.0 / TINY;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..10_000 {
        let an = -((i * i) as f64);
        b += 2.0;
        d = 1.0 / (an * d + b);
        c = b + an / c;
        let del = c * d;
        h *= del;
        if (del - 1.0).abs() < 1e-17 {
            break;
        }
    }
    h * (-r).exp()
}

/// `beta_1'(r) = -e^{-r} / r`.
pub(crate) fn e1_prime(r: f64) -> f64 {
    -(-r).exp() / r
}

/// `beta_1''(r) = e^{-r} (1/r + 1/r^2)`.
pub(crate) fn e1_second(r: f64) -> f64 {
    (-r).exp() * (1.0 / r + 1.0 / (r * r))
}
