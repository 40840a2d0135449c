//! Hurwitz class numbers by reduction theory of positive binary quadratic forms.

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::Zero;

/// Binary form `a x^2 + b xy + c y^2`.
pub type Form = (i64, i64, i64);

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub fn is_reduced(f: Form) -> bool {
    let (a, b, c) = f;
    a > 0 && b.abs() <= a && a <= c && (b >= 0 || (b.abs() != a && a != c))
}

/// Reduced form in the `SL_2(Z)` class of a positive-definite form.
pub fn reduce_form(f: Form) -> Form {
    let (mut a, mut b, mut c) = f;
    assert!(a > 0 && b * b - 4 * a * c < 0, "form must be positive definite");
    loop {
        // translate b into (-a, a]
        if b > a || b <= -a {
            let k = (a - b).div_euclid(2 * a);
            // x -> x + k y
            c += b * k + a * k * k;
            b += 2 * a * k;
        }
        if a > c {
            // (x, y) -> (-y, x)
            std::mem::swap(&mut a, &mut c);
            b = -b;
            continue;
        }
        if a == c && b < 0 {
            b = -b;
        }
        return (a, b, c);
    }
}

/// Weight `1 / |Aut(f) / {±1}|` of a reduced form.
fn reduced_weight(f: Form) -> BigRational {
    let (a, b, c) = f;
    if a == b && b == c {
        rat(1, 3)
    } else if b == 0 && a == c {
        rat(1, 2)
    } else {
        rat(1, 1)
    }
}

/// `H(n)`: weighted number of classes of positive forms of discriminant `-n`,
/// with `H(0) = -1/12` and `H(n) = 0` for `n = 1, 2 mod 4`.
pub fn hurwitz_class_number(n: u64) -> BigRational {
    if n == 0 {
        return rat(-1, 12);
    }
    if n % 4 == 1 || n % 4 == 2 {
        return BigRational::zero();
    }
    let n = n as i64;
    let mut total = BigRational::zero();
    let mut a = 1;
    while 3 * a * a <= n {
        for b in -a..=a {
            if (b * b + n) % (4 * a) != 0 {
                continue;
            }
            let c = (b * b + n) / (4 * a);
            if is_reduced((a, b, c)) {
                total += reduced_weight((a, b, c));
            }
        }
        a += 1;
    }
    total
}

fn transform(f: Form, g: [[i64; 2]; 2]) -> Form {
    // f(px + qy, rx + sy)
    let (a, b, c) = f;
    let [[p, q], [r, s]] = g;
    (
        a * p * p + b * p * r + c * r * r,
        2 * a * p * q + b * (p * s + q * r) + 2 * c * r * s,
        a * q * q + b * q * s + c * s * s,
    )
}

/// Order of the automorphism group of `f` in `SL_2(Z)`, by search over small matrices.
pub fn automorphism_count(f: Form) -> usize {
    let r = 2;
    let mut count = 0;
    for p in -r..=r {
        for q in -r..=r {
            for rr in -r..=r {
                for s in -r..=r {
                    if p * s - q * rr == 1 && transform(f, [[p, q], [rr, s]]) == f {
                        count += 1;
                    }
                }
            }
        }
    }
    count
}

/// `H(n)` by enumerating all forms in a box strictly containing the reduced
/// region, reducing each and deduplicating, with weights from automorphism counts.
pub fn hurwitz_by_full_forms(n: u64) -> BigRational {
    if n == 0 {
        return rat(-1, 12);
    }
    let n = n as i64;
    let amax = ((n as f64 / 3.0).sqrt() as i64) + 3;
    let mut classes: BTreeSet<Form> = BTreeSet::new();
    for a in 1..=amax {
        for b in -2 * amax..=2 * amax {
            let num = b * b + n;
            if num % (4 * a) != 0 {
                continue;
            }
            classes.insert(reduce_form((a, b, num / (4 * a))));
        }
    }
    classes
        .into_iter()
        .map(|f| rat(2, automorphism_count(f) as i64))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        assert_eq!(hurwitz_class_number(0), rat(-1, 12));
        assert_eq!(hurwitz_class_number(3), rat(1, 3));
        assert_eq!(hurwitz_class_number(4), rat(1, 2));
        assert_eq!(hurwitz_class_number(7), rat(1, 1));
        assert_eq!(hurwitz_class_number(8), rat(1, 1));
        assert_eq!(hurwitz_class_number(12), rat(4, 3));
        assert_eq!(hurwitz_class_number(23), rat(3, 1));
        assert_eq!(hurwitz_class_number(5), rat(0, 1));
    }

    #[test]
    fn two_routes_agree() {
        for n in 0..=200 {
            assert_eq!(hurwitz_class_number(n), hurwitz_by_full_forms(n), "n={n}");
        }
    }

    #[test]
    fn reduction_preserves_discriminant() {
        for f in [(7, 13, 9), (100, -37, 5), (3, 3, 3), (2, -2, 5)] {
            let g = reduce_form(f);
            assert!(is_reduced(g), "{f:?} -> {g:?}");
            assert_eq!(g.1 * g.1 - 4 * g.0 * g.2, f.1 * f.1 - 4 * f.0 * f.2);
        }
        assert_eq!(automorphism_count((1, 0, 1)), 4);
        assert_eq!(automorphism_count((1, 1, 1)), 6);
        assert_eq!(automorphism_count((2, 1, 3)), 2);
    }
}
