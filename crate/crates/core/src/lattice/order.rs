//! Orders supplied as data, with the integrality and closure checks run at load time.

use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::arith::{format_rational, parse_rational};
use crate::error::{Error, Result};
use crate::linalg::{rational_det, rational_inverse};
use crate::quatalg::{QuaternionAlgebra, QuaternionElement};

const SPLIT_JSON: &str = include_str!("../../data/orders/split.json");
const D6_JSON: &str = include_str!("../../data/orders/d6.json");
const D10_JSON: &str = include_str!("../../data/orders/d10.json");

/// Labels of the orders compiled into the crate.
pub const BUNDLED_ORDERS: [&str; 3] = ["split", "d6", "d10"];

/// On-disk representation of an order.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OrderFile {
    pub label: String,
    pub a: String,
    pub b: String,
    pub discriminant: u64,
    pub basis: Vec<Vec<String>>,
}

#[derive(Debug, Clone)]
pub struct Order {
    label: String,
    algebra: QuaternionAlgebra,
    basis: [QuaternionElement; 4],
    /// `coords(x) = x_std * basis_inverse`, with `x_std` the row of 1,i,j,ij coefficients.
    basis_inverse: Vec<Vec<BigRational>>,
}

impl Order {
    /// Builds and validates an order from its basis rows in 1,i,j,ij coordinates.
    pub fn new(label: &str, algebra: QuaternionAlgebra, rows: [[BigRational; 4]; 4]) -> Result<Self> {
        let m: Vec<Vec<BigRational>> = rows.iter().map(|r| r.to_vec()).collect();
        let basis_inverse = rational_inverse(&m)
            .ok_or_else(|| Error::DegenerateOrder(format!("{label}: basis is linearly dependent")))?;
        let basis = rows.clone().map(|r| algebra.element(r));
        let order = Self { label: label.to_string(), algebra, basis, basis_inverse };
        order.validate()?;
        Ok(order)
    }

    fn validate(&self) -> Result<()> {
        let bad = |what: String| Error::InvalidOrder(format!("{}: {what}", self.label));
        if self.coordinates(&self.algebra.one()).iter().any(|c| !c.is_integer()) {
            return Err(bad("1 is not in the integral span".into()));
        }
        for (k, e) in self.basis.iter().enumerate() {
            if !e.is_integral() {
                return Err(bad(format!("basis element {k} is not integral")));
            }
        }
        for (k, e) in self.basis.iter().enumerate() {
            for (l, f) in self.basis.iter().enumerate() {
                let p = e.mul(f)?;
                if self.coordinates(&p).iter().any(|c| !c.is_integer()) {
                    return Err(bad(format!("product e{k} e{l} leaves the lattice")));
                }
            }
        }
        Ok(())
    }

    pub fn from_file_data(file: &OrderFile) -> Result<Self> {
        let algebra = QuaternionAlgebra::new(parse_rational(&file.a)?, parse_rational(&file.b)?)?;
        if file.basis.len() != 4 || file.basis.iter().any(|r| r.len() != 4) {
            return Err(Error::InvalidOrder(format!("{}: basis must be 4x4", file.label)));
        }
        let mut rows: [[BigRational; 4]; 4] = Default::default();
        for (i, row) in file.basis.iter().enumerate() {
            for (j, s) in row.iter().enumerate() {
                rows[i][j] = parse_rational(s)?;
            }
        }
        let order = Self::new(&file.label, algebra, rows)?;
        let d = order.algebra.discriminant();
        if d != file.discriminant {
            return Err(Error::InvalidOrder(format!(
                "{}: declared discriminant {} but the algebra has D(B) = {d}",
                file.label, file.discriminant
            )));
        }
        let red = order.reduced_discriminant();
        if red != d {
            return Err(Error::InvalidOrder(format!(
                "{}: reduced discriminant {red} differs from D(B) = {d}; the order is not maximal",
                file.label
            )));
        }
        Ok(order)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let file: OrderFile = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_file_data(&file)
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        Self::from_json_str(&text)
    }

    pub fn bundled(label: &str) -> Result<Self> {
        let text = match label {
            "split" => SPLIT_JSON,
            "d6" => D6_JSON,
            "d10" => D10_JSON,
            _ => return Err(Error::InvalidOrder(format!("no bundled order named {label:?}"))),
        };
        Self::from_json_str(text)
    }

    /// The order `M_2(Z)` inside `(1, 1)`.
    pub fn split() -> Self {
        Self::bundled("split").expect("bundled split order is valid")
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn algebra(&self) -> &QuaternionAlgebra {
        &self.algebra
    }

    pub fn basis(&self) -> &[QuaternionElement; 4] {
        &self.basis
    }

    /// Coordinates of `x` with respect to the order basis.
    pub fn coordinates(&self, x: &QuaternionElement) -> Vec<BigRational> {
        let c = x.coeffs();
        (0..4)
            .map(|j| (0..4).map(|k| &c[k] * &self.basis_inverse[k][j]).sum())
            .collect()
    }

    pub fn contains(&self, x: &QuaternionElement) -> bool {
        self.coordinates(x).iter().all(|c| c.is_integer())
    }

    /// Square root of `|det(trd(e_k e_l))|`, which equals `D(B)` for maximal orders.
    pub fn reduced_discriminant(&self) -> u64 {
        let m: Vec<Vec<BigRational>> = self
            .basis
            .iter()
            .map(|e| self.basis.iter().map(|f| e.mul(f).expect("same algebra").trace()).collect())
            .collect();
        let det = rational_det(&m).abs();
        let n = det.to_integer();
        let r = n.sqrt();
        if &r * &r == n && det.is_integer() {
            r.to_u64().unwrap_or(0)
        } else {
            0
        }
    }

    pub fn to_file_data(&self) -> OrderFile {
        OrderFile {
            label: self.label.clone(),
            a: format_rational(self.algebra.a()),
            b: format_rational(self.algebra.b()),
            discriminant: self.algebra.discriminant(),
            basis: self.basis.iter().map(|e| e.coeffs().iter().map(format_rational).collect()).collect(),
        }
    }

    /// The Lipschitz order `Z + Zi + Zj + Zij` of an algebra with integral
    /// structure constants (not maximal in general).
    pub fn lipschitz(algebra: QuaternionAlgebra) -> Result<Self> {
        if !algebra.a().is_integer() || !algebra.b().is_integer() {
            return Err(Error::InvalidOrder("structure constants must be integers".into()));
        }
        let one = BigRational::one();
        let z = || BigRational::from_integer(BigInt::from(0));
        let rows = [
            [one.clone(), z(), z(), z()],
            [z(), one.clone(), z(), z()],
            [z(), z(), one.clone(), z()],
            [z(), z(), z(), one],
        ];
        Self::new("lipschitz", algebra, rows)
    }
}
