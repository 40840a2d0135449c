//! `Ẑ(T, v) = sum over Γ \ {x in L^2 : Q(x) = T} of Λ(x a)` with `v = a a^T`.

use rayon::prelude::*;

use crate::config::QuadratureSpec;
use crate::error::{Error, Result};
use crate::lattice::pairs::{pair_orbit_representatives, TMatrix};
use crate::lattice::trace_zero::{LatticeVector, TraceZeroLattice};
use crate::linalg::{cholesky2, is_positive_definite2, sqrt_spd2, Mat2};

use super::quadrature::Estimate;
use super::star::{lambda_star, PairConfig};

/// Choice of `a` with `v = a a^T`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SquareRoot {
    #[default]
    Symmetric,
    /// Lower-triangular Cholesky factor.
    Triangular,
}

impl SquareRoot {
    pub fn of(&self, v: &Mat2) -> Mat2 {
        match self {
            SquareRoot::Symmetric => sqrt_spd2(v),
            SquareRoot::Triangular => cholesky2(v),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ZHat {
    pub value: Estimate,
    pub orbits: usize,
}

/// `Ẑ(T, v)` on a `D(B) = 1` lattice, with the symmetric square root of `v`.
pub fn z_hat_indefinite(l: &TraceZeroLattice, t: &TMatrix, v: &Mat2, spec: &QuadratureSpec) -> Result<ZHat> {
    z_hat_with_root(l, t, v, SquareRoot::Symmetric, spec)
}

pub fn z_hat_with_root(
    l: &TraceZeroLattice,
    t: &TMatrix,
    v: &Mat2,
    root: SquareRoot,
    spec: &QuadratureSpec,
) -> Result<ZHat> {
    spec.validate()?;
    let reps = pair_orbit_representatives(l, t, spec.enumeration_cap)?;
    z_hat_from_representatives(l, &reps, v, root, spec)
}

/// `Ẑ` from caller-supplied orbit representatives, for lattices without
/// orbit machinery.
pub fn z_hat_from_representatives(
    l: &TraceZeroLattice,
    reps: &[(LatticeVector, LatticeVector)],
    v: &Mat2,
    root: SquareRoot,
    spec: &QuadratureSpec,
) -> Result<ZHat> {
    if !is_positive_definite2(v) {
        return Err(Error::PreconditionViolation("v must be positive definite".into()));
    }
    let a = root.of(v);
    let pairs: Vec<PairConfig> =
        reps.iter().map(|(x1, x2)| PairConfig::from_lattice(l, x1, x2)).collect::<Result<_>>()?;
    let terms: Vec<Result<Estimate>> = pairs.par_iter().map(|p| lambda_star(&p.transform(&a), spec)).collect();
    let mut total = Estimate::new(0.0, 0.0);
    for term in terms {
        total = total.add(term?);
    }
    Ok(ZHat { value: total, orbits: reps.len() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::order::Order;

    fn split() -> TraceZeroLattice {
        TraceZeroLattice::new(Order::split()).unwrap()
    }

    fn spec() -> QuadratureSpec {
        QuadratureSpec { rel_tol: 1e-8, abs_tol: 1e-11, ..QuadratureSpec::default() }
    }

    #[test]
    fn unrepresented_t_gives_zero() {
        let z = z_hat_indefinite(&split(), &TMatrix::new(1, 0, -3), &[[1.0, 0.0], [0.0, 1.0]], &spec()).unwrap();
        assert_eq!((z.value.value, z.orbits), (0.0, 0));
    }

    #[test]
    fn small_instance_is_finite_and_root_independent() {
        let l = split();
        let t = TMatrix::new(1, 0, -1);
        let v = [[1.3, 0.4], [0.4, 0.9]];
        let a = z_hat_with_root(&l, &t, &v, SquareRoot::Symmetric, &spec()).unwrap();
        let b = z_hat_with_root(&l, &t, &v, SquareRoot::Triangular, &spec()).unwrap();
        assert_eq!(a.orbits, 2);
        assert!(a.value.value.is_finite());
        assert!((a.value.value - b.value.value).abs() <= a.value.error + b.value.error + 1e-10, "{a:?} {b:?}");
    }

    #[test]
    fn rejects_bad_v_and_discriminant() {
        let v = [[1.0, 2.0], [2.0, 1.0]];
        assert!(z_hat_indefinite(&split(), &TMatrix::new(1, 0, -1), &v, &spec()).is_err());
        let d6 = TraceZeroLattice::new(Order::bundled("d6").unwrap()).unwrap();
        assert_eq!(
            z_hat_indefinite(&d6, &TMatrix::new(1, 0, -1), &[[1.0, 0.0], [0.0, 1.0]], &spec()),
            Err(Error::UnsupportedDiscriminant(6))
        );
    }
}
