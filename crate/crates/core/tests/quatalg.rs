use arith_theta_core::arith::factor_u64;
use arith_theta_core::quatalg::{hilbert_symbol_int, DEFAULT_TWIN_SEARCH_BOUND};
use arith_theta_core::{definite_twin, twin, Place, QuaternionAlgebra};
use num_bigint::BigInt;
use proptest::prelude::*;

fn nonzero() -> impl Strategy<Value = i64> {
    prop_oneof![-2000i64..=-1, 1i64..=2000]
}

fn places(a: i64, b: i64) -> Vec<Place> {
    let mut ps: Vec<u64> = vec![2];
    for n in [a.unsigned_abs(), b.unsigned_abs()] {
        ps.extend(factor_u64(n).into_iter().map(|(p, _)| p));
    }
    ps.sort_unstable();
    ps.dedup();
    let mut out: Vec<Place> = ps.into_iter().map(Place::Prime).collect();
    out.push(Place::Infinity);
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn hilbert_product_formula(a in nonzero(), b in nonzero()) {
        let (x, y) = (BigInt::from(a), BigInt::from(b));
        let prod: i32 = places(a, b).into_iter().map(|v| i32::from(hilbert_symbol_int(&x, &y, v))).product();
        prop_assert_eq!(prod, 1);
    }

    #[test]
    fn hilbert_symmetric_and_square_invariant(a in nonzero(), b in nonzero(), s in 1i64..20) {
        let (x, y) = (BigInt::from(a), BigInt::from(b));
        let ys = BigInt::from(b * s * s);
        for v in places(a, b * s) {
            prop_assert_eq!(hilbert_symbol_int(&x, &y, v), hilbert_symbol_int(&y, &x, v));
            prop_assert_eq!(hilbert_symbol_int(&x, &y, v), hilbert_symbol_int(&x, &ys, v));
        }
    }

    #[test]
    fn ramification_has_even_size(a in nonzero(), b in nonzero()) {
        let alg = QuaternionAlgebra::from_ints(a, b).unwrap();
        let n = alg.ramified_primes().len() + usize::from(alg.ramified_at_infinity());
        prop_assert_eq!(n % 2, 0);
        prop_assert_eq!(alg.is_definite(), a < 0 && b < 0);
    }
}

#[test]
fn standard_algebras() {
    let h = QuaternionAlgebra::from_ints(-1, -1).unwrap();
    assert_eq!(h.ramified_primes(), &[2]);
    assert!(h.is_definite());
    let m2 = QuaternionAlgebra::from_ints(1, 1).unwrap();
    assert_eq!(m2.discriminant(), 1);
    let b6 = QuaternionAlgebra::from_ints(-1, 3).unwrap();
    assert_eq!(b6.discriminant(), 6);
    assert!(b6.is_indefinite());
}

#[test]
fn twin_round_trip() {
    for (a, b) in [(1, 1), (-1, 3), (2, 5), (3, -7)] {
        let alg = QuaternionAlgebra::from_ints(a, b).unwrap();
        for p in [2, 3, 5, 7, 11] {
            let t = definite_twin(&alg, p, DEFAULT_TWIN_SEARCH_BOUND).unwrap();
            assert!(t.is_definite());
            let mut want: Vec<u64> = alg.ramified_primes().to_vec();
            match want.iter().position(|&q| q == p) {
                Some(i) => {
                    want.remove(i);
                }
                None => want.push(p),
            }
            want.sort_unstable();
            assert_eq!(t.ramified_primes(), want.as_slice(), "({a},{b}) p={p}");
            let back = twin(&t, p, DEFAULT_TWIN_SEARCH_BOUND).unwrap();
            assert!(back.is_indefinite());
            assert_eq!(back.ramified_primes(), alg.ramified_primes());
        }
    }
}

#[test]
fn twin_rejects_bad_input() {
    let h = QuaternionAlgebra::from_ints(-1, -1).unwrap();
    assert!(definite_twin(&h, 3, 50).is_err());
    let m2 = QuaternionAlgebra::from_ints(1, 1).unwrap();
    assert!(definite_twin(&m2, 4, 50).is_err());
}
