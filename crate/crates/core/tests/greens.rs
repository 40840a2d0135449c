use std::f64::consts::PI;

use arith_theta_core::config::QuadratureSpec;
use arith_theta_core::greens::big_xi::big_xi;
use arith_theta_core::greens::green::{ddc_xi, omega, xi};
use arith_theta_core::greens::star::{lambda_star, PairConfig};
use arith_theta_core::greens::{beta1, r_value, z_hat_indefinite, EULER_GAMMA};
use arith_theta_core::identities::{arithmetic_degree_archimedean, XiIntegrand};
use arith_theta_core::lattice::TMatrix;
use arith_theta_core::{ModelVector, Order, TraceZeroLattice, UHPoint};
use proptest::prelude::*;

fn split() -> TraceZeroLattice {
    TraceZeroLattice::new(Order::split()).unwrap()
}

fn spec() -> QuadratureSpec {
    QuadratureSpec::default()
}

#[test]
fn beta1_reference_values() {
    // E1 at 0.1, 1, 10 to 20 digits
    #[allow(clippy::excessive_precision)]
    let table = [
        (0.1, 1.8229239584193906661),
        (1.0, 0.21938393439552027368),
        (10.0, 4.1569689296853242774e-6),
    ];
    for (r, want) in table {
        let got = beta1(r).unwrap();
        assert!(((got - want) / want).abs() < 1e-13, "beta1({r}) = {got}");
    }
    assert!(beta1(0.0).is_err());
    assert!(beta1(-1.0).is_err());
}

proptest! {
    #[test]
    fn beta1_between_classical_bounds(r in 1e-4f64..80.0) {
        let b = beta1(r).unwrap();
        let lower = 0.5 * (-r).exp() * (1.0 + 2.0 / r).ln();
        let upper = (-r).exp() * (1.0 + 1.0 / r).ln();
        prop_assert!(lower < b && b < upper, "r={} beta1={}", r, b);
    }

    #[test]
    fn beta1_small_r_law(r in 1e-8f64..0.5) {
        let b = beta1(r).unwrap();
        prop_assert!((b + EULER_GAMMA + r.ln()).abs() <= 2.0 * r);
    }

    #[test]
    fn beta1_decreasing(r in 1e-6f64..60.0, dr in 1e-3f64..1.0) {
        prop_assert!(beta1(r + dr).unwrap() < beta1(r).unwrap());
    }
}

/// Hyperbolic Laplacian of `xi` by central differences, as a `dd^c` density.
fn ddc_by_differences(x: &ModelVector, z: UHPoint) -> f64 {
    let h = 1e-4;
    let f = |du: f64, dv: f64| xi(x, UHPoint::new(z.u + du, z.v + dv).unwrap(), &spec()).unwrap();
    let c = f(0.0, 0.0);
    let lap = (f(h, 0.0) + f(-h, 0.0) + f(0.0, h) + f(0.0, -h) - 4.0 * c) / (h * h);
    z.v * z.v * lap / (4.0 * PI)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ddc_matches_differences_and_omega(
        x in prop::array::uniform3(-2.0f64..2.0), u in -1.0f64..1.0, y in 0.3f64..2.5,
    ) {
        let x = ModelVector(x);
        let z = UHPoint::new(u, y).unwrap();
        prop_assume!(r_value(&x, z) > 0.05);
        let analytic = ddc_xi(&x, z, &spec()).unwrap();
        let fd = ddc_by_differences(&x, z);
        prop_assert!((analytic - fd).abs() < 1e-5 * (1.0 + analytic.abs()), "{} vs {}", analytic, fd);
        let w = omega(&x, z);
        prop_assert!((analytic - w).abs() < 1e-12 * (1.0 + w.abs()), "{} vs omega {}", analytic, w);
    }
}

#[test]
fn big_xi_tail_bound_covers_wider_truncation() {
    let l = split();
    let base = spec();
    let wide = QuadratureSpec { truncation_majorant_bound: 4.0 * base.truncation_majorant_bound, ..base };
    for (t, v, u, y) in [(-2, 1.0, 0.1, 1.2), (1, 0.7, 0.33, 0.9), (-5, 2.0, -0.2, 1.7), (3, 1.0, 0.25, 0.5)] {
        let z = UHPoint::new(u, y).unwrap();
        let a = big_xi(&l, t, v, z, &base).unwrap();
        let b = big_xi(&l, t, v, z, &wide).unwrap();
        let slack = a.tail_bound + 1e-14 * (1.0 + a.value.abs());
        assert!((a.value - b.value).abs() <= slack, "t={t}: {} vs {}", a.value, b.value);
        assert!(b.terms >= a.terms);
    }
}

#[test]
fn lambda_depends_only_on_t() {
    // T = diag(-1, 1), realised by two rational pairs
    let p = PairConfig::new(ModelVector([1.0, 0.0, 0.0]), ModelVector([0.0, 1.0, -1.0]));
    let g = [[2.0, 1.0], [1.0, 1.0]];
    let q = PairConfig::new(p.x1.conjugate_by(&g), p.x2.conjugate_by(&g));
    let a = lambda_star(&p, &spec()).unwrap();
    let b = lambda_star(&q, &spec()).unwrap();
    assert!((a.value - b.value).abs() <= a.error + b.error + 1e-13, "{a:?} vs {b:?}");
    let s = lambda_star(&p.swapped(), &spec()).unwrap();
    assert!((a.value - s.value).abs() <= a.error + s.error + 1e-13);
    assert!(a.value.abs() > 1e-6);
}

#[test]
fn z_hat_vanishes_off_represented_t() {
    let l = split();
    let v = [[1.0, 0.2], [0.2, 0.8]];
    let z = z_hat_indefinite(&l, &TMatrix::new(1, 0, -3), &v, &spec()).unwrap();
    assert_eq!((z.orbits, z.value.value), (0, 0.0));
    let z = z_hat_indefinite(&l, &TMatrix::new(1, 0, -1), &v, &spec()).unwrap();
    assert_eq!(z.orbits, 2);
    assert!(z.value.value.abs() > 0.0);
}

/// Unfolded oracle: one half of the integral of `Xi(t, v)` over the
/// fundamental domain equals `½ sum_orbits ℓ ∫ E1(2π v |t| cosh^2 r) cosh r dr`,
/// with `ℓ` the length of the closed geodesic. Reference values from an
/// independent 25-digit evaluation.
#[test]
fn archimedean_degree_matches_unfolding() {
    #[allow(clippy::excessive_precision)]
    let cases = [
        (-2, 1.0, 2.1999722011192930678e-7),
        (-2, 0.5, 3.0537499312170098066e-4),
        (-3, 1.0, 3.4527209801693345435e-10),
        (-3, 0.5, 1.1357111001044356608e-5),
    ];
    let l = split();
    for (t, v, want) in cases {
        let g = XiIntegrand::new(&l, t, v, &spec()).unwrap();
        let got = arithmetic_degree_archimedean(&g, &spec()).unwrap();
        let diff = (got.value - want).abs();
        assert!(diff <= got.error + 1e-12 * want, "t={t} v={v}: {} ± {} vs {want}", got.value, got.error);
    }
}

#[test]
fn archimedean_degree_rejects_split_t() {
    let l = split();
    for t in [-1, -4, -9] {
        assert!(XiIntegrand::new(&l, t, 1.0, &spec()).is_err(), "t={t}");
    }
}
