use arith_theta_core::greens::model::r_value;
use arith_theta_core::lattice::enumerate::{enumerate_by_majorant, enumerate_definite, representation_count};
use arith_theta_core::lattice::hurwitz::{hurwitz_by_full_forms, hurwitz_class_number};
use arith_theta_core::lattice::pairs::commutator;
use arith_theta_core::lattice::trace_zero::{majorant_exact, majorant_value, r_exact};
use arith_theta_core::lattice::{pair_orbit_representatives, TMatrix};
use arith_theta_core::{LatticeVector, ModelVector, Order, QuaternionAlgebra, TraceZeroLattice, UHPoint};
use num_rational::BigRational;
use proptest::prelude::*;

fn split() -> TraceZeroLattice {
    TraceZeroLattice::new(Order::split()).unwrap()
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[test]
fn hurwitz_strategies_agree() {
    for n in 0..=200 {
        assert_eq!(hurwitz_class_number(n), hurwitz_by_full_forms(n), "n={n}");
    }
    assert_eq!(hurwitz_class_number(3), q(1, 3));
    assert_eq!(hurwitz_class_number(4), q(1, 2));
    assert_eq!(hurwitz_class_number(23), q(3, 1));
    assert_eq!(hurwitz_class_number(0), q(-1, 12));
    assert_eq!(hurwitz_class_number(1), q(0, 1));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn majorant_matrix_is_two_q_plus_four_r(
        un in -20i64..=20, ud in 1i64..=7, vn in 1i64..=20, vd in 1i64..=7,
        x in prop::array::uniform3(-6i64..=6),
    ) {
        let l = split();
        let (u, v) = (q(un, ud), q(vn, vd));
        let m = majorant_exact(&l, &u, &v).unwrap();
        let xr = x.map(|k| q(k, 1));
        let mut lhs = q(0, 1);
        for i in 0..3 {
            for j in 0..3 {
                lhs += &xr[i] * &m[i][j] * &xr[j];
            }
        }
        let lv = LatticeVector::new(x);
        let rhs = q(2 * l.q(&lv), 1) + q(4, 1) * r_exact(&l, &u, &v, &lv).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn r_is_invariant_under_sl2(
        g00 in -3.0f64..3.0, g01 in -3.0f64..3.0, g10 in -3.0f64..3.0,
        x in prop::array::uniform3(-5.0f64..5.0), u in -2.0f64..2.0, y in 0.2f64..3.0,
    ) {
        prop_assume!(g00.abs() > 0.1);
        // complete to determinant one
        let g = [[g00, g01], [g10, (1.0 + g01 * g10) / g00]];
        let x = ModelVector(x);
        let z = UHPoint::new(u, y).unwrap();
        let a = r_value(&x, z);
        let b = r_value(&x.conjugate_by(&g), z.mobius(&g));
        prop_assert!((a - b).abs() <= 1e-10 * (1.0 + a.abs()), "{} vs {}", a, b);
    }

    #[test]
    fn majorant_enumeration_is_complete(u in -1.0f64..1.0, y in 0.5f64..2.0, bound in 1.0f64..25.0) {
        let l = split();
        let z = UHPoint::new(u, y).unwrap();
        let got = enumerate_by_majorant(&l, z, bound).unwrap();
        let mut brute = Vec::new();
        for a in -12i64..=12 {
            for b in -12i64..=12 {
                for c in -12i64..=12 {
                    let v = LatticeVector::new([a, b, c]);
                    if !v.is_zero() && majorant_value(&l, z, &v).unwrap() <= bound {
                        brute.push(v);
                    }
                }
            }
        }
        brute.sort();
        // the box is large enough: every vector found lies inside it
        prop_assert!(got.iter().all(|v| v.coords.iter().all(|c| c.abs() < 12)));
        prop_assert_eq!(got, brute);
    }
}

#[test]
fn sums_of_three_squares() {
    let h = QuaternionAlgebra::from_ints(-1, -1).unwrap();
    let l = TraceZeroLattice::new(Order::lipschitz(h).unwrap()).unwrap();
    assert!(l.is_definite());
    for t in 0..=50u64 {
        let mut brute = 0;
        for a in -8i64..=8 {
            for b in -8i64..=8 {
                for c in -8i64..=8 {
                    if (a * a + b * b + c * c) as u64 == t && t > 0 {
                        brute += 1;
                    }
                }
            }
        }
        assert_eq!(representation_count(&l, t).unwrap(), brute, "t={t}");
    }
    assert_eq!(representation_count(&l, 7).unwrap(), 0);
    assert_eq!(representation_count(&l, 1).unwrap(), 6);
    assert!(enumerate_definite(&split(), 3).is_err());
}

#[test]
fn pair_representatives_realise_t() {
    let l = split();
    for t in [
        TMatrix::new(1, 0, -1),
        TMatrix::new(1, 1, -2),
        TMatrix::new(2, 1, -1),
        TMatrix::new(-1, 1, 2),
        TMatrix::new(-1, 0, -1),
        TMatrix::new(-2, 1, -1),
        TMatrix::new(-1, 0, -2),
    ] {
        let reps = pair_orbit_representatives(&l, &t, 2_000_000).unwrap();
        assert!(!reps.is_empty(), "T={t}");
        for (x1, x2) in &reps {
            assert_eq!(l.q(x1), t.t1);
            assert_eq!(l.q(x2), t.t2);
            assert_eq!(l.pairing(x1, x2), t.m);
            let y = LatticeVector::new(commutator(&x1.coords, &x2.coords));
            assert_eq!(l.q(&y), t.det4(), "T={t}");
        }
        let mut sorted = reps.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), reps.len(), "duplicate representatives for T={t}");
    }
}

#[test]
fn pair_representatives_reject_bad_input() {
    let l = split();
    assert!(pair_orbit_representatives(&l, &TMatrix::new(1, 0, 1), 1000).is_err());
    assert!(pair_orbit_representatives(&l, &TMatrix::new(1, 2, 4), 1000).is_err());
    let d6 = TraceZeroLattice::new(Order::bundled("d6").unwrap()).unwrap();
    assert!(pair_orbit_representatives(&d6, &TMatrix::new(1, 0, -1), 1000).is_err());
}
