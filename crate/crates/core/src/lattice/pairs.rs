//! Half-integral `2x2` matrices `T` and `Γ`-orbits of pairs `x in L^2` with
//! `Q(x) = T` on the split model.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::arith::ext_gcd;
use crate::error::{Error, Result};
use crate::greens::model::UHPoint;

use super::enumerate::enumerate_by_majorant_capped;
use super::orbits::{cm_representatives, conjugate, mat_inv, IntMat2};
use super::trace_zero::{LatticeVector, TraceZeroLattice};

/// `T = [[t1, m/2], [m/2, t2]]`, so that `m = (x1, x2)` for a pair with `Q(x) = T`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TMatrix {
    pub t1: i64,
    pub m: i64,
    pub t2: i64,
}

impl TMatrix {
    /// Bound on `|t1|, |m|, |t2|` keeping `det4` exact and cheap to factor.
    pub const MAX_ENTRY: i64 = 1 << 24;

    pub fn new(t1: i64, m: i64, t2: i64) -> Self {
        Self { t1, m, t2 }
    }

    pub fn in_range(&self) -> bool {
        [self.t1, self.m, self.t2].iter().all(|e| e.abs() <= Self::MAX_ENTRY)
    }

    pub fn require_in_range(&self) -> Result<()> {
        if self.in_range() {
            Ok(())
        } else {
            Err(Error::PreconditionViolation(format!("entries of T = {self} exceed {}", Self::MAX_ENTRY)))
        }
    }

    /// `4 det T = 4 t1 t2 - m^2`.
    pub fn det4(&self) -> i64 {
        4 * self.t1 * self.t2 - self.m * self.m
    }

    pub fn is_positive_definite(&self) -> bool {
        self.t1 > 0 && self.det4() > 0
    }

    /// `(n_plus, n_minus)`; `None` when singular.
    pub fn signature(&self) -> Option<(usize, usize)> {
        let d = self.det4();
        if d == 0 {
            None
        } else if d < 0 {
            Some((1, 1))
        } else if self.t1 > 0 {
            Some((2, 0))
        } else {
            Some((0, 2))
        }
    }

    pub fn to_f64(&self) -> [[f64; 2]; 2] {
        let h = self.m as f64 / 2.0;
        [[self.t1 as f64, h], [h, self.t2 as f64]]
    }

    /// `Q_T(p, r) = t1 p^2 + m p r + t2 r^2`.
    pub fn eval(&self, p: i64, r: i64) -> i64 {
        self.t1 * p * p + self.m * p * r + self.t2 * r * r
    }

    /// `g^T T g`.
    pub fn transform(&self, g: &IntMat2) -> TMatrix {
        let (a1, a2) = (g[0][0], g[1][0]);
        let (b1, b2) = (g[0][1], g[1][1]);
        TMatrix {
            t1: self.eval(a1, a2),
            m: 2 * self.t1 * a1 * b1 + self.m * (a1 * b2 + a2 * b1) + 2 * self.t2 * a2 * b2,
            t2: self.eval(b1, b2),
        }
    }
}

impl fmt::Display for TMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.t1, self.m, self.t2)
    }
}

impl FromStr for TMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let bad = || Error::Parse(format!("T must be \"t1,m,t2\", got {s:?}"));
        if parts.len() != 3 {
            return Err(bad());
        }
        let n: Vec<i64> = parts.iter().map(|p| p.parse().map_err(|_| bad())).collect::<Result<_>>()?;
        let t = TMatrix::new(n[0], n[1], n[2]);
        if !t.in_range() {
            return Err(Error::Parse(format!("entries of T must be at most {} in absolute value", Self::MAX_ENTRY)));
        }
        Ok(t)
    }
}

/// `(x1, x2) -> [x1, x2]` on model coordinates of the split model.
pub fn commutator(x: &[i64; 3], y: &[i64; 3]) -> [i64; 3] {
    let [a, b, c] = *x;
    let [a2, b2, c2] = *y;
    [b * c2 - b2 * c, 2 * (a * b2 - a2 * b), 2 * (c * a2 - a * c2)]
}

fn pairing(x: &[i64; 3], y: &[i64; 3]) -> i64 {
    -(2 * x[0] * y[0] + x[1] * y[2] + x[2] * y[1])
}

fn q(x: &[i64; 3]) -> i64 {
    -x[0] * x[0] - x[1] * x[2]
}

/// `g` in `SL_2(Z)` with `(g^T T g)_11 > 0`, from a small search.
fn positive_first_entry(t: &TMatrix) -> Option<IntMat2> {
    let mut best: Option<(i64, i64, IntMat2)> = None;
    for p in -12i64..=12 {
        for r in -12i64..=12 {
            let v = t.eval(p, r);
            if v <= 0 || ext_gcd(p, r).0 != 1 {
                continue;
            }
            let (_, x, y) = ext_gcd(p, r);
            let g = [[p, -y], [r, x]];
            let key = (v, p.abs() + r.abs());
            if best.as_ref().is_none_or(|(bv, bs, _)| key < (*bv, *bs)) {
                best = Some((key.0, key.1, g));
            }
        }
    }
    best.map(|(_, _, g)| g)
}

fn canonical(stab: &[IntMat2], pair: ([i64; 3], [i64; 3])) -> ([i64; 3], [i64; 3]) {
    stab.iter()
        .map(|g| (conjugate(g, &pair.0), conjugate(g, &pair.1)))
        .min()
        .expect("stabilizer contains the identity")
}

fn vectors_with(
    l: &TraceZeroLattice,
    z: UHPoint,
    bound: f64,
    cap: u64,
    keep: impl Fn(&[i64; 3]) -> bool,
) -> Result<Vec<[i64; 3]>> {
    if bound <= 0.0 {
        return Ok(Vec::new());
    }
    let slack = 1e-6 * (1.0 + bound);
    Ok(enumerate_by_majorant_capped(l, z, bound + slack, cap)?
        .into_iter()
        .map(|v| v.coords)
        .filter(|c| keep(c))
        .collect())
}

/// Representatives of the `Γ`-orbits of pairs `x in L^2` with `Q(x) = T`,
/// for nonsingular `T` of signature `(1,1)` or `(0,2)`. `Γ` acts freely on
/// these pairs, so every orbit has weight one.
pub fn pair_orbit_representatives(l: &TraceZeroLattice, t: &TMatrix, cap: u64) -> Result<Vec<(LatticeVector, LatticeVector)>> {
    if l.discriminant() != 1 {
        return Err(Error::UnsupportedDiscriminant(l.discriminant()));
    }
    if !l.is_split_model() {
        return Err(Error::PreconditionViolation("orbit enumeration needs split-model coordinates".into()));
    }
    t.require_in_range()?;
    let mut out: BTreeSet<([i64; 3], [i64; 3])> = BTreeSet::new();
    match t.signature() {
        Some((1, 1)) => {
            let g = positive_first_entry(t)
                .ok_or_else(|| Error::PreconditionViolation(format!("no small vector with Q_T > 0 for T = {t}")))?;
            let tp = t.transform(&g);
            let ginv = mat_inv(&g);
            for rep in cm_representatives(tp.t1 as u64) {
                let x1 = rep.x;
                let (u, v) = rep.cm_point(tp.t1);
                let z = UHPoint::new(u, v)?;
                // at z_{x1}, every x2 with the right pairings has majorant m^2 / t1 - 2 t2
                let bound = (tp.m * tp.m) as f64 / tp.t1 as f64 - 2.0 * tp.t2 as f64;
                let cands = vectors_with(l, z, bound, cap, |c| q(c) == tp.t2 && pairing(&x1, c) == tp.m)?;
                for x2 in cands {
                    let (a, b) = canonical(&rep.stabilizer, (x1, x2));
                    // x = x' g^{-1}
                    let y1 = std::array::from_fn(|k| ginv[0][0] * a[k] + ginv[1][0] * b[k]);
                    let y2 = std::array::from_fn(|k| ginv[0][1] * a[k] + ginv[1][1] * b[k]);
                    out.insert((y1, y2));
                }
            }
        }
        Some((0, 2)) => {
            let n = t.det4();
            for rep in cm_representatives(n as u64) {
                let y = rep.x;
                let (u, v) = rep.cm_point(n);
                let z = UHPoint::new(u, v)?;
                // y^perp is negative definite at z_y, where the majorant is -(x, x)
                let first = vectors_with(l, z, -2.0 * t.t1 as f64, cap, |c| q(c) == t.t1 && pairing(&y, c) == 0)?;
                let second = vectors_with(l, z, -2.0 * t.t2 as f64, cap, |c| q(c) == t.t2 && pairing(&y, c) == 0)?;
                for x1 in &first {
                    for x2 in &second {
                        if pairing(x1, x2) == t.m && commutator(x1, x2) == y {
                            out.insert(canonical(&rep.stabilizer, (*x1, *x2)));
                        }
                    }
                }
            }
        }
        _ => {
            return Err(Error::PreconditionViolation(format!(
                "T = {t} must be nonsingular of signature (1,1) or (0,2)"
            )))
        }
    }
    Ok(out.into_iter().map(|(a, b)| (LatticeVector::new(a), LatticeVector::new(b))).collect())
}
