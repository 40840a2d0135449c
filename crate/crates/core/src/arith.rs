//! Elementary integer arithmetic: factorisation by trial division, valuations,
//! Legendre/Kronecker symbols and rational parsing.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Primes below `limit`, ascending.
pub fn primes_below(limit: u64) -> Vec<u64> {
    (2..limit).filter(|&n| is_prime(n)).collect()
}

/// Prime factorisation of `n > 0` as `(p, e)` pairs.
pub fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Distinct primes dividing a nonzero big integer.
pub fn distinct_prime_factors(n: &BigInt) -> Vec<u64> {
    let mut m: BigUint = n.magnitude().clone();
    if let Some(small) = m.to_u64() {
        return factor_u64(small).into_iter().map(|(p, _)| p).collect();
    }
    let mut out = Vec::new();
    let mut d = 2u64;
    loop {
        let dd = BigUint::from(d);
        if &dd * &dd > m {
            break;
        }
        if (&m % &dd).is_zero() {
            out.push(d);
            while (&m % &dd).is_zero() {
                m /= &dd;
            }
            if let Some(small) = m.to_u64() {
                out.extend(
                    factor_u64(small)
                        .into_iter()
                        .map(|(p, _)| p)
                        .filter(|&p| p != d),
                );
                return out;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if m > BigUint::one() {
        out.push(m.to_u64().expect("remaining cofactor exceeds u64"));
    }
    out
}

pub fn is_squarefree(n: u64) -> bool {
    n > 0 && factor_u64(n).iter().all(|&(_, e)| e == 1)
}

/// `p`-adic valuation of a nonzero integer and its `p`-free part.
pub fn valuation(n: &BigInt, p: u64) -> (u32, BigInt) {
    debug_assert!(!n.is_zero());
    let bp = BigInt::from(p);
    let mut m = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = m.div_rem(&bp);
        if !r.is_zero() {
            break;
        }
        m = q;
        v += 1;
    }
    (v, m)
}

pub fn valuation_u64(mut n: u64, p: u64) -> u32 {
    if n == 0 {
        return u32::MAX;
    }
    let mut v = 0;
    while n.is_multiple_of(p) {
        n /= p;
        v += 1;
    }
    v
}

/// Legendre symbol `(a | p)` for an odd prime `p`.
pub fn legendre(a: &BigInt, p: u64) -> i8 {
    let r = a.mod_floor(&BigInt::from(p)).to_u64().unwrap();
    jacobi(r, p)
}

/// Jacobi symbol `(a | n)` for odd positive `n`.
pub fn jacobi(a: u64, n: u64) -> i8 {
    debug_assert!(n % 2 == 1);
    let mut a = a % n;
    let mut n = n;
    let mut result = 1i8;
    while a != 0 {
        while a.is_multiple_of(2) {
            a /= 2;
            if n % 8 == 3 || n % 8 == 5 {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}

/// Kronecker symbol `(d | l)` for a prime `l`.
pub fn kronecker_at_prime(d: i64, l: u64) -> i8 {
    if l == 2 {
        if d % 2 == 0 {
            return 0;
        }
        return match d.rem_euclid(8) {
            1 | 7 => 1,
            _ => -1,
        };
    }
    jacobi(d.rem_euclid(l as i64) as u64, l)
}

/// Discriminant of the imaginary quadratic field `Q(sqrt(-t))`, `t > 0`.
pub fn imaginary_field_discriminant(t: u64) -> i64 {
    let mut core: i64 = 1;
    for (p, e) in factor_u64(t) {
        if e % 2 == 1 {
            core *= p as i64;
        }
    }
    let s = -core;
    if s.rem_euclid(4) == 1 {
        s
    } else {
        4 * s
    }
}

pub fn gcd_i64(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

/// Extended gcd: returns `(g, x, y)` with `a x + b y = g >= 0`.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let e = a.extended_gcd(&b);
    if e.gcd < 0 {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

/// Parses `"p/q"`, `"p"` or a decimal-free integer into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().map_err(|_| bad())?;
            Ok(BigRational::from_integer(n))
        }
    }
}

/// Reduced fraction `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rational_to_f64(r: &BigRational) -> f64 {
    r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
}

/// Integer in the same square class as a nonzero rational (numerator times denominator).
pub fn square_class_integer(r: &BigRational) -> BigInt {
    r.numer() * r.denom()
}

/// Exact square root of a nonnegative rational, when it is a perfect square.
pub fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().magnitude().sqrt();
    let d = r.denom().magnitude().sqrt();
    if &n * &n == *r.numer().magnitude() && &d * &d == *r.denom().magnitude() {
        Some(BigRational::new(
            BigInt::from_biguint(Sign::Plus, n),
            BigInt::from_biguint(Sign::Plus, d),
        ))
    } else {
        None
    }
}

pub fn is_square_i64(n: i64) -> bool {
    if n < 0 {
        return false;
    }
    let r = (n as f64).sqrt().round() as i64;
    (r - 1..=r + 1).any(|s| s >= 0 && s * s == n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorisation() {
        assert_eq!(factor_u64(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factor_u64(97), vec![(97, 1)]);
        assert_eq!(distinct_prime_factors(&BigInt::from(-6)), vec![2, 3]);
        let big = BigInt::from(2).pow(70) * BigInt::from(3 * 1_000_003u64);
        assert_eq!(distinct_prime_factors(&big), vec![2, 3, 1_000_003]);
    }

    #[test]
    fn jacobi_matches_euler_criterion() {
        for p in [3u64, 5, 7, 11, 13, 101] {
            for a in 1..p {
                let euler = num_bigint::BigUint::from(a).modpow(&((p - 1) / 2).into(), &p.into());
                let expected = if euler == BigUint::one() { 1 } else { -1 };
                assert_eq!(jacobi(a, p), expected, "a={a} p={p}");
            }
        }
    }

    #[test]
    fn field_discriminants() {
        assert_eq!(imaginary_field_discriminant(1), -4);
        assert_eq!(imaginary_field_discriminant(3), -3);
        assert_eq!(imaginary_field_discriminant(4), -4);
        assert_eq!(imaginary_field_discriminant(117), -52);
        assert_eq!(imaginary_field_discriminant(7), -7);
    }

    #[test]
    fn rational_round_trip() {
        let r = parse_rational(" -6/4 ").unwrap();
        assert_eq!(format_rational(&r), "-3/2");
        assert_eq!(format_rational(&parse_rational("12").unwrap()), "12");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(rational_sqrt(&parse_rational("9/4").unwrap()), Some(parse_rational("3/2").unwrap()));
        assert_eq!(rational_sqrt(&parse_rational("2").unwrap()), None);
    }
}
