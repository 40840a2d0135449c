//! Support of `Z(T)` for positive definite `T`: the fundamental prime,
//! regularity, and vertical components of `Z(t)`.

use std::collections::BTreeSet;

use num_bigint::BigInt;

use crate::arith::{factor_u64, imaginary_field_discriminant, is_prime, is_squarefree, kronecker_at_prime, primes_below, valuation_u64};
use crate::error::{Error, Result};
use crate::lattice::pairs::TMatrix;
use crate::quatalg::{hilbert_symbol_int, Place};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleClassification {
    pub t: TMatrix,
    pub fundamental_prime: Option<u64>,
    /// Present exactly when `fundamental_prime` is.
    pub regular: Option<bool>,
    pub supersingular_support: bool,
}

fn require_positive(t: &TMatrix) -> Result<()> {
    t.require_in_range()?;
    if !t.is_positive_definite() {
        return Err(Error::PreconditionViolation(format!("T = {t} is not positive definite")));
    }
    Ok(())
}

fn primes_of(d: u64) -> BTreeSet<u64> {
    factor_u64(d).into_iter().map(|(p, _)| p).collect()
}

/// `B_T = (-t1, -t1 det T)`, the algebra generated by a pair realising `T`
/// (with `det T` replaced by its square class `4 det T`).
fn b_t_symbols(t: &TMatrix) -> (BigInt, BigInt) {
    let a = -t.t1;
    (BigInt::from(a), BigInt::from(a) * BigInt::from(t.det4()))
}

fn b_t_ramified_at(t: &TMatrix, p: u64) -> bool {
    let (a, b) = b_t_symbols(t);
    hilbert_symbol_int(&a, &b, Place::Prime(p)) == -1
}

/// Primes where `B_T` can ramify.
fn b_t_bad_primes(t: &TMatrix) -> BTreeSet<u64> {
    let mut s = primes_of(t.t1.unsigned_abs());
    s.extend(primes_of(t.det4().unsigned_abs()));
    s.insert(2);
    s
}

/// The unique `p` such that the trace-zero space of the definite algebra
/// ramified at `primes(D) Δ {p}` represents `T`: `T` is represented there
/// iff that algebra is `B_T`, so `p` is the single element of
/// `Ram_f(B_T) Δ primes(D)` when it is a singleton.
pub fn fundamental_prime(t: &TMatrix, d: u64) -> Result<Option<u64>> {
    require_positive(t)?;
    if d == 0 || !is_squarefree(d) {
        return Err(Error::NotSquarefree(d));
    }
    let ram: BTreeSet<u64> = b_t_bad_primes(t).into_iter().filter(|&p| b_t_ramified_at(t, p)).collect();
    let diff: Vec<u64> = ram.symmetric_difference(&primes_of(d)).copied().collect();
    Ok(if diff.len() == 1 { Some(diff[0]) } else { None })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanOutcome {
    Found(u64),
    Absent,
    /// No candidate below the limit passed, and a prime above it could.
    Inconclusive,
}

/// Prime-by-prime local test over `p < limit`: does `V^(p)` represent `T`
/// at every place where either side can ramify?
pub fn fundamental_prime_scan(t: &TMatrix, d: u64, limit: u64) -> Result<ScanOutcome> {
    require_positive(t)?;
    if d == 0 || !is_squarefree(d) {
        return Err(Error::NotSquarefree(d));
    }
    let d_primes = primes_of(d);
    let mut places = b_t_bad_primes(t);
    places.extend(d_primes.iter().copied());
    let passes = |p: u64| {
        let mut ram_p = d_primes.clone();
        if !ram_p.remove(&p) {
            ram_p.insert(p);
        }
        places.iter().chain(std::iter::once(&p)).all(|&l| b_t_ramified_at(t, l) == ram_p.contains(&l))
    };
    let found: Vec<u64> = primes_below(limit).into_iter().filter(|&p| passes(p)).collect();
    match found.as_slice() {
        [p] => Ok(ScanOutcome::Found(*p)),
        [] if places.iter().any(|&l| l >= limit) => Ok(ScanOutcome::Inconclusive),
        [] => Ok(ScanOutcome::Absent),
        _ => Err(Error::PreconditionViolation(format!("several fundamental primes for T = {t}: {found:?}"))),
    }
}

/// `Z(T)` is a 0-cycle unless `p | D` and `p^2 | T`.
pub fn is_regular(t: &TMatrix, p: u64, d: u64) -> Result<bool> {
    if fundamental_prime(t, d)? != Some(p) {
        return Err(Error::PreconditionViolation(format!("{p} is not the fundamental prime of T = {t}")));
    }
    if !d.is_multiple_of(p) {
        return Ok(true);
    }
    let p2 = (p * p) as i64;
    Ok(!(t.t1 % p2 == 0 && t.t2 % p2 == 0 && t.m % p2 == 0))
}

pub fn classify(t: &TMatrix, d: u64) -> Result<CycleClassification> {
    let fundamental_prime = fundamental_prime(t, d)?;
    let regular = fundamental_prime.map(|p| is_regular(t, p, d)).transpose()?;
    Ok(CycleClassification { t: *t, fundamental_prime, regular, supersingular_support: fundamental_prime.is_some() })
}

/// `Z(t)` has vertical components in the fiber at `p | D` iff `ord_p(t) >= 2`
/// and no other `ℓ | D` splits in `Q(sqrt(-t))`.
pub fn vertical_components(t: u64, d: u64, p: u64) -> Result<bool> {
    if t == 0 {
        return Err(Error::PreconditionViolation("t must be positive".into()));
    }
    if d == 0 || !is_squarefree(d) {
        return Err(Error::NotSquarefree(d));
    }
    let primes = primes_of(d);
    if primes.len() < 2 {
        return Err(Error::PreconditionViolation(format!("D = {d} needs at least two prime factors")));
    }
    if !is_prime(p) || !primes.contains(&p) {
        return Err(Error::PreconditionViolation(format!("{p} is not a prime factor of D = {d}")));
    }
    if valuation_u64(t, p) < 2 {
        return Ok(false);
    }
    let disc = imaginary_field_discriminant(t);
    Ok(primes.iter().filter(|&&l| l != p).all(|&l| kronecker_at_prime(disc, l) != 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fundamental_prime_examples() {
        let id = TMatrix::new(1, 0, 1);
        assert_eq!(fundamental_prime(&id, 1).unwrap(), Some(2));
        // B_T = (-1,-1) ramifies at 2 only; {2} Δ {2,3} = {3}
        assert_eq!(fundamental_prime(&id, 6).unwrap(), Some(3));
        assert!(fundamental_prime(&TMatrix::new(1, 2, 1), 6).is_err());
        assert!(fundamental_prime(&TMatrix::new(1, 0, 1), 12).is_err());
    }

    #[test]
    fn scan_agrees_with_exact() {
        for d in [1, 6, 10] {
            for t1 in 1..8 {
                for m in -4..=4 {
                    for t2 in 1..8 {
                        let t = TMatrix::new(t1, m, t2);
                        if !t.is_positive_definite() {
                            continue;
                        }
                        let exact = fundamental_prime(&t, d).unwrap();
                        let scan = fundamental_prime_scan(&t, d, 200).unwrap();
                        match exact {
                            Some(p) => assert_eq!(scan, ScanOutcome::Found(p), "{t} D={d}"),
                            None => assert_eq!(scan, ScanOutcome::Absent, "{t} D={d}"),
                        }
                    }
                }
            }
        }
        // B_T for diag(1, 103) ramifies at 103 since 103 ≡ 3 mod 4
        let t = TMatrix::new(1, 0, 103);
        assert_eq!(fundamental_prime(&t, 1).unwrap(), Some(103));
        assert_eq!(fundamental_prime_scan(&t, 1, 50).unwrap(), ScanOutcome::Inconclusive);
    }

    #[test]
    fn regularity() {
        let id = TMatrix::new(1, 0, 1);
        assert!(is_regular(&id, 2, 1).unwrap());
        assert!(is_regular(&id, 3, 6).unwrap());
        let t9 = TMatrix::new(9, 0, 9);
        assert_eq!(fundamental_prime(&t9, 6).unwrap(), Some(3));
        assert!(!is_regular(&t9, 3, 6).unwrap());
        assert!(is_regular(&id, 2, 6).is_err());
        let c = classify(&t9, 6).unwrap();
        assert_eq!((c.fundamental_prime, c.regular, c.supersingular_support), (Some(3), Some(false), true));
    }

    #[test]
    fn vertical_examples() {
        assert!(!vertical_components(1, 6, 2).unwrap());
        assert!(vertical_components(4, 6, 2).unwrap());
        // Q(sqrt(-117)) = Q(sqrt(-13)), discriminant -52, ramified at 2
        assert!(vertical_components(117, 6, 3).unwrap());
        // Q(sqrt(-2·9)) = Q(sqrt(-2)): 5 splits iff (-8|5) = 1; -8 ≡ 2 mod 5, non-residue
        assert!(vertical_components(18, 10, 2).is_ok());
        assert!(vertical_components(4, 1, 2).is_err());
        assert!(vertical_components(4, 6, 5).is_err());
    }
}
