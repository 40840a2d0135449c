//! Exact arithmetic in rational quaternion algebras `(a, b)` with basis
//! `1, i, j, ij`, where `i^2 = a`, `j^2 = b` and `ij = -ji`.
//!
//! Local invariants are computed with Hilbert symbols; the discriminant is the
//! product of the finite ramified primes.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::arith::{distinct_prime_factors, legendre, square_class_integer, valuation};
use crate::error::{Error, Result};

/// Default bound on `|a'|, |b'|` for [`definite_twin`].
pub const DEFAULT_TWIN_SEARCH_BOUND: u64 = 400;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Place {
    Prime(u64),
    Infinity,
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Prime(p) => write!(f, "{p}"),
            Place::Infinity => write!(f, "inf"),
        }
    }
}

/// Hilbert symbol `(a, b)_v` of two nonzero rationals.
///
/// Panics if `a` or `b` is zero.
pub fn hilbert_symbol(a: &BigRational, b: &BigRational, place: Place) -> i8 {
    assert!(!a.is_zero() && !b.is_zero(), "Hilbert symbol of zero");
    let a = square_class_integer(a);
    let b = square_class_integer(b);
    hilbert_symbol_int(&a, &b, place)
}

/// Hilbert symbol of two nonzero integers.
pub fn hilbert_symbol_int(a: &BigInt, b: &BigInt, place: Place) -> i8 {
    match place {
        Place::Infinity => {
            if a.is_negative() && b.is_negative() {
                -1
            } else {
                1
            }
        }
        Place::Prime(2) => {
            let (alpha, u) = valuation(a, 2);
            let (beta, v) = valuation(b, 2);
            let u8_ = mod8(&u);
            let v8 = mod8(&v);
            let eps = |x: u64| ((x - 1) / 2) % 2;
            let omega = |x: u64| ((x * x - 1) / 8) % 2;
            let e = eps(u8_) * eps(v8) + (alpha as u64 % 2) * omega(v8) + (beta as u64 % 2) * omega(u8_);
            if e.is_multiple_of(2) {
                1
            } else {
                -1
            }
        }
        Place::Prime(p) => {
            let (alpha, u) = valuation(a, p);
            let (beta, v) = valuation(b, p);
            let mut s: i8 = 1;
            if alpha % 2 == 1 && beta % 2 == 1 && p % 4 == 3 {
                s = -s;
            }
            if beta % 2 == 1 {
                s *= legendre(&u, p);
            }
            if alpha % 2 == 1 {
                s *= legendre(&v, p);
            }
            s
        }
    }
}

fn mod8(n: &BigInt) -> u64 {
    use num_integer::Integer;
    n.mod_floor(&BigInt::from(8)).to_u64().unwrap()
}

#[derive(Debug, PartialEq, Eq)]
struct StructureConstants {
    a: BigRational,
    b: BigRational,
}

/// A quaternion algebra over `Q` together with its cached local invariants.
#[derive(Clone, Debug)]
pub struct QuaternionAlgebra {
    consts: Arc<StructureConstants>,
    ramified: Vec<u64>,
    ramified_at_infinity: bool,
}

impl PartialEq for QuaternionAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.consts == other.consts
    }
}

impl QuaternionAlgebra {
    pub fn new(a: BigRational, b: BigRational) -> Result<Self> {
        if a.is_zero() || b.is_zero() {
            return Err(Error::ZeroStructureConstant);
        }
        let (ramified, ramified_at_infinity) = ramification(&a, &b);
        Ok(Self {
            consts: Arc::new(StructureConstants { a, b }),
            ramified,
            ramified_at_infinity,
        })
    }

    pub fn from_ints(a: i64, b: i64) -> Result<Self> {
        Self::new(BigRational::from_integer(a.into()), BigRational::from_integer(b.into()))
    }

    pub fn a(&self) -> &BigRational {
        &self.consts.a
    }

    pub fn b(&self) -> &BigRational {
        &self.consts.b
    }

    /// Finite ramified primes, ascending.
    pub fn ramified_primes(&self) -> &[u64] {
        &self.ramified
    }

    pub fn ramified_at_infinity(&self) -> bool {
        self.ramified_at_infinity
    }

    /// `D(B)`: product of the finite ramified primes.
    pub fn discriminant(&self) -> u64 {
        self.ramified.iter().product()
    }

    pub fn is_indefinite(&self) -> bool {
        !self.ramified_at_infinity
    }

    pub fn is_definite(&self) -> bool {
        self.ramified_at_infinity
    }

    pub fn is_ramified_at(&self, place: Place) -> bool {
        match place {
            Place::Infinity => self.ramified_at_infinity,
            Place::Prime(p) => self.ramified.binary_search(&p).is_ok(),
        }
    }

    pub fn element(&self, coeffs: [BigRational; 4]) -> QuaternionElement {
        QuaternionElement { consts: self.consts.clone(), coeffs }
    }

    pub fn element_from_ints(&self, c: [i64; 4]) -> QuaternionElement {
        self.element(c.map(|x| BigRational::from_integer(x.into())))
    }

    pub fn one(&self) -> QuaternionElement {
        self.element_from_ints([1, 0, 0, 0])
    }

    pub fn i(&self) -> QuaternionElement {
        self.element_from_ints([0, 1, 0, 0])
    }

    pub fn j(&self) -> QuaternionElement {
        self.element_from_ints([0, 0, 1, 0])
    }

    pub fn ij(&self) -> QuaternionElement {
        self.element_from_ints([0, 0, 0, 1])
    }
}

fn ramification(a: &BigRational, b: &BigRational) -> (Vec<u64>, bool) {
    let ai = square_class_integer(a);
    let bi = square_class_integer(b);
    let mut primes: BTreeSet<u64> = BTreeSet::new();
    primes.insert(2);
    primes.extend(distinct_prime_factors(&ai));
    primes.extend(distinct_prime_factors(&bi));
    let ramified = primes
        .into_iter()
        .filter(|&p| hilbert_symbol_int(&ai, &bi, Place::Prime(p)) == -1)
        .collect();
    (ramified, hilbert_symbol_int(&ai, &bi, Place::Infinity) == -1)
}

/// Element `x0 + x1 i + x2 j + x3 ij` of a quaternion algebra.
#[derive(Clone, Debug)]
pub struct QuaternionElement {
    consts: Arc<StructureConstants>,
    coeffs: [BigRational; 4],
}

impl PartialEq for QuaternionElement {
    fn eq(&self, other: &Self) -> bool {
        self.consts == other.consts && self.coeffs == other.coeffs
    }
}

impl QuaternionElement {
    pub fn coeffs(&self) -> &[BigRational; 4] {
        &self.coeffs
    }

    fn check(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.consts, &other.consts) || self.consts == other.consts {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    fn with(&self, coeffs: [BigRational; 4]) -> Self {
        Self { consts: self.consts.clone(), coeffs }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with(std::array::from_fn(|k| &self.coeffs[k] + &other.coeffs[k])))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with(std::array::from_fn(|k| &self.coeffs[k] - &other.coeffs[k])))
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        self.with(std::array::from_fn(|k| &self.coeffs[k] * s))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let (a, b) = (&self.consts.a, &self.consts.b);
        let ab = a * b;
        let [x0, x1, x2, x3] = &self.coeffs;
        let [y0, y1, y2, y3] = &other.coeffs;
        Ok(self.with([
            x0 * y0 + a * x1 * y1 + b * x2 * y2 - &ab * x3 * y3,
            x0 * y1 + x1 * y0 - b * x2 * y3 + b * x3 * y2,
            x0 * y2 + x2 * y0 + a * x1 * y3 - a * x3 * y1,
            x0 * y3 + x3 * y0 + x1 * y2 - x2 * y1,
        ]))
    }

    pub fn conj(&self) -> Self {
        let [x0, x1, x2, x3] = &self.coeffs;
        self.with([x0.clone(), -x1, -x2, -x3])
    }

    /// Reduced trace `x + conj(x)`.
    pub fn trace(&self) -> BigRational {
        &self.coeffs[0] * BigRational::from_integer(2.into())
    }

    /// Reduced norm `x conj(x)`.
    pub fn norm(&self) -> BigRational {
        let (a, b) = (&self.consts.a, &self.consts.b);
        let [x0, x1, x2, x3] = &self.coeffs;
        x0 * x0 - a * x1 * x1 - b * x2 * x2 + a * b * x3 * x3
    }

    /// True when the element lies in the trace-zero space `V`.
    pub fn is_pure(&self) -> bool {
        self.coeffs[0].is_zero()
    }

    pub fn is_scalar(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.trace().is_integer() && self.norm().is_integer()
    }
}

/// Algebra whose invariants agree with `alg` away from `p` and `infinity`
/// and are switched at both, found by bounded search over small integer
/// structure constants.
pub fn twin(alg: &QuaternionAlgebra, p: u64, bound: u64) -> Result<QuaternionAlgebra> {
    let mut target: BTreeSet<u64> = alg.ramified_primes().iter().copied().collect();
    if !target.remove(&p) {
        target.insert(p);
    }
    let target: Vec<u64> = target.into_iter().collect();
    let want_definite = !alg.is_definite();
    let bound_i = bound as i64;
    for m in 1..=bound_i {
        // all (a', b') with max(|a'|, |b'|) = m, in a fixed order
        let mut candidates = Vec::new();
        for other in 1..=m {
            for (x, y) in [(m, other), (other, m)] {
                for (sx, sy) in [(-1, -1), (-1, 1), (1, -1), (1, 1)] {
                    candidates.push((sx * x, sy * y));
                }
            }
        }
        for (x, y) in candidates {
            if want_definite != (x < 0 && y < 0) {
                continue;
            }
            let cand = QuaternionAlgebra::from_ints(x, y)?;
            if cand.ramified_primes() == target.as_slice() {
                return Ok(cand);
            }
        }
    }
    Err(Error::SearchExhausted { bound, target })
}

/// Definite algebra `B^(p)` with `B^(p)_l = B_l` for all primes `l != p`.
pub fn definite_twin(alg: &QuaternionAlgebra, p: u64, bound: u64) -> Result<QuaternionAlgebra> {
    if !alg.is_indefinite() {
        return Err(Error::PreconditionViolation(
            "definite_twin needs an indefinite algebra".into(),
        ));
    }
    if !crate::arith::is_prime(p) {
        return Err(Error::PreconditionViolation(format!("{p} is not prime")));
    }
    twin(alg, p, bound)
}

impl fmt::Display for QuaternionAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}) D={} {}",
            crate::arith::format_rational(self.a()),
            crate::arith::format_rational(self.b()),
            self.discriminant(),
            if self.is_definite() { "definite" } else { "indefinite" }
        )
    }
}
