//! Tolerances and run configuration, loadable from TOML.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::arith::parse_rational;
use crate::error::{Error, Result};
use crate::greens::quadrature::Limits;

/// Parameters governing every numerical integral and truncated lattice sum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct QuadratureSpec {
    pub rel_tol: f64,
    pub abs_tol: f64,
    /// Initial majorant bound for truncated sums; raised until the tail is certified.
    pub truncation_majorant_bound: f64,
    /// Hyperbolic radius of the refined region around a logarithmic singularity.
    pub singular_ball_radius: f64,
    pub max_subdivisions: usize,
    /// Values of `R` below this are treated as lying on the singular locus.
    pub r_floor: f64,
    pub enumeration_cap: u64,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            rel_tol: 1e-9,
            abs_tol: 1e-12,
            truncation_majorant_bound: 50.0,
            singular_ball_radius: 0.05,
            max_subdivisions: 200,
            r_floor: 1e-14,
            enumeration_cap: 2_000_000,
        }
    }
}

impl QuadratureSpec {
    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("rel_tol", self.rel_tol),
            ("abs_tol", self.abs_tol),
            ("truncation_majorant_bound", self.truncation_majorant_bound),
            ("singular_ball_radius", self.singular_ball_radius),
            ("r_floor", self.r_floor),
        ];
        for (name, v) in positive {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::PreconditionViolation(format!("{name} must be positive, got {v}")));
            }
        }
        if self.singular_ball_radius >= 1.0 {
            return Err(Error::PreconditionViolation("singular_ball_radius must be < 1".into()));
        }
        if self.max_subdivisions == 0 || self.enumeration_cap == 0 {
            return Err(Error::PreconditionViolation("grid limits must be positive".into()));
        }
        Ok(())
    }

    pub fn limits(&self) -> Limits {
        Limits { abs_tol: self.abs_tol, rel_tol: self.rel_tol, max_subdivisions: self.max_subdivisions }
    }

    /// Same spec with both tolerances scaled by `factor`.
    pub fn tightened(&self, factor: f64) -> Self {
        Self { rel_tol: self.rel_tol * factor, abs_tol: self.abs_tol * factor, ..*self }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct IdentitiesConfig {
    /// `deg ω̂` as a rational string.
    pub hodge_degree: String,
    /// Unverified degree tables for `D(B) > 1`: discriminant -> (t -> rational string).
    pub degree_tables: BTreeMap<String, BTreeMap<String, String>>,
    /// The bounded fundamental-prime scan tries primes below this limit.
    pub prime_scan_limit: u64,
}

impl Default for IdentitiesConfig {
    fn default() -> Self {
        Self { hodge_degree: "1/12".into(), degree_tables: BTreeMap::new(), prime_scan_limit: 50 }
    }
}

impl IdentitiesConfig {
    pub fn hodge_degree(&self) -> Result<BigRational> {
        parse_rational(&self.hodge_degree)
    }

    /// Configured degree table for a discriminant, parsed.
    pub fn degree_table(&self, d: u64) -> Result<Option<BTreeMap<i64, BigRational>>> {
        let Some(raw) = self.degree_tables.get(&d.to_string()) else {
            return Ok(None);
        };
        let mut out = BTreeMap::new();
        for (k, v) in raw {
            let t: i64 = k.trim().parse().map_err(|_| Error::Parse(format!("bad index {k:?}")))?;
            out.insert(t, parse_rational(v)?);
        }
        Ok(Some(out))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Table,
    Json,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    /// Order file; `None` selects the bundled split order.
    pub order: Option<PathBuf>,
    pub quadrature: QuadratureSpec,
    pub identities: IdentitiesConfig,
    pub out: OutputFormat,
    pub seed: u64,
    pub threads: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            order: None,
            quadrature: QuadratureSpec::default(),
            identities: IdentitiesConfig::default(),
            out: OutputFormat::Table,
            seed: 20240601,
            threads: 1,
        }
    }
}

impl RunConfig {
    pub fn from_toml_str(s: &str) -> Result<Self> {
        let cfg: RunConfig = toml::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        cfg.quadrature.validate()?;
        cfg.identities.hodge_degree()?;
        Ok(cfg)
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Io { path: path.display().to_string(), message: e.to_string() })?;
        Self::from_toml_str(&text)
    }

    pub fn to_toml_string(&self) -> String {
        toml::to_string(self).expect("config serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_round_trip() {
        let cfg = RunConfig::default();
        let back = RunConfig::from_toml_str(&cfg.to_toml_string()).unwrap();
        assert_eq!(back, cfg);
    }

    #[test]
    fn partial_file() {
        let cfg = RunConfig::from_toml_str(
            r#"
seed = 7
[quadrature]
rel_tol = 1e-6
[identities]
hodge_degree = "1/6"
[identities.degree_tables.6]
1 = "2"
"#,
        )
        .unwrap();
        assert_eq!(cfg.seed, 7);
        assert_eq!(cfg.quadrature.rel_tol, 1e-6);
        assert_eq!(cfg.quadrature.abs_tol, QuadratureSpec::default().abs_tol);
        assert_eq!(cfg.identities.hodge_degree().unwrap(), BigRational::new(1.into(), 6.into()));
        let table = cfg.identities.degree_table(6).unwrap().unwrap();
        assert_eq!(table[&1], BigRational::from_integer(2.into()));
    }

    #[test]
    fn invalid_specs() {
        assert!(RunConfig::from_toml_str("[quadrature]\nsingular_ball_radius = 1.5").is_err());
        assert!(RunConfig::from_toml_str("[quadrature]\nrel_tol = -1.0").is_err());
        assert!(RunConfig::from_toml_str("bogus = 1").is_err());
    }
}
