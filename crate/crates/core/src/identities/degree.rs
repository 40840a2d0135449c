//! Generic-fiber degrees of the arithmetic theta function, `ζ_D(-1)` and the constant `c`.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{factor_u64, is_squarefree, rational_to_f64};
use crate::config::IdentitiesConfig;
use crate::error::{Error, Result};
use crate::greens::EULER_GAMMA;
use crate::lattice::orbits::weighted_orbit_degree;
use crate::lattice::trace_zero::TraceZeroLattice;

/// `ζ'(-1)`.
#[allow(clippy::excessive_precision)]
pub const ZETA_PRIME_MINUS_ONE: f64 = -0.165421143700450929213919660242780642764;

/// Degrees of the coefficients of the arithmetic theta function at a fixed `v`.
#[derive(Debug, Clone, PartialEq)]
pub struct DegreeSeries {
    pub v: f64,
    pub coefficients: BTreeMap<i64, BigRational>,
    pub hodge_degree: BigRational,
}

impl DegreeSeries {
    pub fn coefficient(&self, t: i64) -> BigRational {
        self.coefficients.get(&t).cloned().unwrap_or_else(BigRational::zero)
    }
}

/// Coefficients for `-n <= t <= n`: orbit degrees for `t > 0`, `-deg ω̂` at
/// `t = 0`, and `0` for `t < 0`. Lattices with `D(B) > 1` need a configured table.
pub fn degree_series(l: &TraceZeroLattice, v: f64, n: u64, cfg: &IdentitiesConfig) -> Result<DegreeSeries> {
    if n == 0 {
        return Err(Error::PreconditionViolation("N must be at least 1".into()));
    }
    if !(v > 0.0) {
        return Err(Error::NonpositiveArgument(v));
    }
    let hodge_degree = cfg.hodge_degree()?;
    let d = l.discriminant();
    let table = if d == 1 { None } else { Some(cfg.degree_table(d)?.ok_or(Error::UnsupportedDiscriminant(d))?) };
    let n = n as i64;
    let mut coefficients = BTreeMap::new();
    for t in -n..=n {
        let c = match t {
            t if t < 0 => BigRational::zero(),
            0 => -hodge_degree.clone(),
            t => match &table {
                None => weighted_orbit_degree(l, t as u64)?,
                Some(tab) => tab.get(&t).cloned().ok_or_else(|| {
                    Error::PreconditionViolation(format!("degree table for D = {d} has no entry t = {t}"))
                })?,
            },
        };
        coefficients.insert(t, c);
    }
    Ok(DegreeSeries { v, coefficients, hodge_degree })
}

fn require_squarefree(d: u64) -> Result<()> {
    if d == 0 || !is_squarefree(d) {
        return Err(Error::NotSquarefree(d));
    }
    Ok(())
}

/// `ζ_D(-1) = ζ(-1) prod_{p | D} (1 - p)`.
pub fn zeta_db_at_minus1(d: u64) -> Result<BigRational> {
    require_squarefree(d)?;
    let mut out = BigRational::new((-1).into(), 12.into());
    for (p, _) in factor_u64(d) {
        out *= BigRational::one() - BigRational::from_integer((p as i64).into());
    }
    Ok(out)
}

/// `2 ζ'(-1)/ζ(-1) + 1 - log(4π) - γ - sum_{p | D} p log p / (p - 1)`.
pub fn bracket_term(d: u64) -> Result<f64> {
    require_squarefree(d)?;
    let mut s = 2.0 * ZETA_PRIME_MINUS_ONE / (-1.0 / 12.0) + 1.0 - (4.0 * std::f64::consts::PI).ln() - EULER_GAMMA;
    for (p, _) in factor_u64(d) {
        let p = p as f64;
        s -= p * p.ln() / (p - 1.0);
    }
    Ok(s)
}

/// `c = slope <ω̂, ω̂> + multiplier [bracket]`, with exact rational coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct ConstantCParts {
    /// `2 / deg ω̂`.
    pub slope: BigRational,
    /// `-2 ζ_D(-1) / deg ω̂`.
    pub multiplier: BigRational,
    pub bracket: f64,
}

impl ConstantCParts {
    pub fn new(d: u64, hodge_degree: &BigRational) -> Result<Self> {
        if *hodge_degree <= BigRational::zero() {
            return Err(Error::PreconditionViolation("hodge degree must be positive".into()));
        }
        let two = BigRational::from_integer(2.into());
        Ok(Self {
            slope: &two / hodge_degree,
            multiplier: -(two * zeta_db_at_minus1(d)?) / hodge_degree,
            bracket: bracket_term(d)?,
        })
    }

    pub fn eval(&self, hodge_pairing: f64) -> f64 {
        rational_to_f64(&self.slope) * hodge_pairing + rational_to_f64(&self.multiplier) * self.bracket
    }
}

/// `c` solving `½ deg(ω̂) c = <ω̂, ω̂> - ζ_D(-1) [bracket]`.
pub fn constant_c(hodge_pairing: f64, d: u64, hodge_degree: &BigRational) -> Result<f64> {
    Ok(ConstantCParts::new(d, hodge_degree)?.eval(hodge_pairing))
}
