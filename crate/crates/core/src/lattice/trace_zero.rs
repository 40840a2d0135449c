//! `L = O_B ∩ V` with its Gram matrix, a real splitting into the model of
//! `greens::model`, and the majorant at a point of `D`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{rational_sqrt, rational_to_f64};
use crate::error::{Error, Result};
use crate::greens::model::{model_majorant, r_value, ModelVector, UHPoint};
use crate::linalg::{congruence3, rational_det, rational_inverse, signature, unimodular_kernel, Mat3};
use crate::quatalg::QuaternionElement;

use super::order::Order;

/// Integer coordinates with respect to the lattice basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector {
    pub coords: [i64; 3],
}

impl LatticeVector {
    pub fn new(coords: [i64; 3]) -> Self {
        Self { coords }
    }

    pub fn is_zero(&self) -> bool {
        self.coords == [0, 0, 0]
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coords.map(|c| -c))
    }

    pub fn to_f64(&self) -> [f64; 3] {
        self.coords.map(|c| c as f64)
    }
}

#[derive(Debug, Clone)]
pub struct TraceZeroLattice {
    order: Order,
    basis: [QuaternionElement; 3],
    gram: [[i64; 3]; 3],
    /// Row `r` gives model coordinate `r` (alpha, beta, gamma) as a linear form in lattice coordinates.
    model: Option<Mat3>,
    split_model: bool,
}

/// Model coordinates `(alpha, beta, gamma)` of a pure quaternion under the
/// real splitting `i -> diag(s, -s)`, `j -> [[0, b], [1, 0]]`, `s = sqrt(a)`.
/// Returns exact values when `a` is a rational square.
enum Splitting {
    Exact(Box<[[BigRational; 3]; 3]>),
    Real(Mat3),
}

fn splitting(order: &Order, basis: &[QuaternionElement; 3]) -> Option<Splitting> {
    let alg = order.algebra();
    if alg.is_definite() {
        return None;
    }
    // use i as the split generator when a > 0, otherwise swap the roles of i and j
    let swap = !alg.a().is_positive();
    let (a, b) = if swap { (alg.b(), alg.a()) } else { (alg.a(), alg.b()) };
    let coords = |e: &QuaternionElement| {
        let c = e.coeffs();
        if swap {
            // x1 i + x2 j + x3 ij = x2 i' + x1 j' - x3 i'j' with i' = j, j' = i
            [c[2].clone(), c[1].clone(), -c[3].clone()]
        } else {
            [c[1].clone(), c[2].clone(), c[3].clone()]
        }
    };
    if let Some(s) = rational_sqrt(a) {
        let mut m: [[BigRational; 3]; 3] = Default::default();
        for (k, e) in basis.iter().enumerate() {
            let [x1, x2, x3] = coords(e);
            m[0][k] = &s * &x1;
            m[1][k] = b * (&x2 + &s * &x3);
            m[2][k] = &x2 - &s * &x3;
        }
        Some(Splitting::Exact(Box::new(m)))
    } else {
        let s = rational_to_f64(a).sqrt();
        let bf = rational_to_f64(b);
        let mut m = [[0.0; 3]; 3];
        for (k, e) in basis.iter().enumerate() {
            let [x1, x2, x3] = coords(e).map(|c| rational_to_f64(&c));
            m[0][k] = s * x1;
            m[1][k] = bf * (x2 + s * x3);
            m[2][k] = x2 - s * x3;
        }
        Some(Splitting::Real(m))
    }
}

impl TraceZeroLattice {
    pub fn new(order: Order) -> Result<Self> {
        let traces: Vec<i64> = order
            .basis()
            .iter()
            .map(|e| e.trace().to_integer().to_i64().expect("trace fits in i64"))
            .collect();
        if traces.iter().all(|&t| t == 0) {
            return Err(Error::DegenerateOrder("trace functional vanishes on the order".into()));
        }
        let u = unimodular_kernel(&traces);
        let alg = order.algebra().clone();
        let combo = |col: usize| {
            let mut acc = alg.element_from_ints([0, 0, 0, 0]);
            for (k, e) in order.basis().iter().enumerate() {
                let c = BigRational::from_integer(BigInt::from(u[k][col]));
                acc = acc.add(&e.scale(&c)).expect("same algebra");
            }
            acc
        };
        let mut basis = [combo(1), combo(2), combo(3)];
        if basis.iter().any(|e| !e.is_pure()) {
            return Err(Error::DegenerateOrder("kernel basis is not trace-zero".into()));
        }

        let mut split_model = false;
        let model = match splitting(&order, &basis) {
            None => None,
            Some(Splitting::Real(m)) => Some(m),
            Some(Splitting::Exact(m)) => {
                let integral = m.iter().flatten().all(|c| c.is_integer());
                let det = rational_det(&m.iter().map(|r| r.to_vec()).collect::<Vec<_>>());
                if integral && det.abs().is_one() {
                    // rebase so that lattice coordinates are model coordinates
                    let inv = rational_inverse(&m.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
                        .expect("unimodular");
                    let old = basis.clone();
                    basis = std::array::from_fn(|col| {
                        let mut acc = alg.element_from_ints([0, 0, 0, 0]);
                        for (k, e) in old.iter().enumerate() {
                            acc = acc.add(&e.scale(&inv[k][col])).expect("same algebra");
                        }
                        acc
                    });
                    split_model = true;
                    Some([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]])
                } else {
                    Some(m.map(|r| r.map(|c| rational_to_f64(&c))))
                }
            }
        };

        let mut gram = [[0i64; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                let s = basis[i].add(&basis[j]).expect("same algebra");
                let p = s.norm() - basis[i].norm() - basis[j].norm();
                if !p.is_integer() {
                    return Err(Error::InvalidOrder("bilinear form is not integral on L".into()));
                }
                gram[i][j] = p.to_integer().to_i64().expect("gram entry fits in i64");
            }
        }
        Ok(Self { order, basis, gram, model, split_model })
    }

    pub fn order(&self) -> &Order {
        &self.order
    }

    pub fn basis(&self) -> &[QuaternionElement; 3] {
        &self.basis
    }

    pub fn gram(&self) -> &[[i64; 3]; 3] {
        &self.gram
    }

    pub fn gram_f64(&self) -> Mat3 {
        self.gram.map(|r| r.map(|c| c as f64))
    }

    pub fn discriminant(&self) -> u64 {
        self.order.algebra().discriminant()
    }

    pub fn is_definite(&self) -> bool {
        self.order.algebra().is_definite()
    }

    /// True when lattice coordinates are the model coordinates `(alpha, beta, gamma)`,
    /// i.e. `L` is the trace-zero part of `M_2(Z)`.
    pub fn is_split_model(&self) -> bool {
        self.split_model
    }

    pub fn model_matrix(&self) -> Option<&Mat3> {
        self.model.as_ref()
    }

    pub fn signature(&self) -> (usize, usize) {
        let m: Vec<Vec<BigRational>> =
            self.gram.iter().map(|r| r.iter().map(|&c| BigRational::from_integer(c.into())).collect()).collect();
        let (p, n, _) = signature(&m);
        (p, n)
    }

    pub fn pairing(&self, x: &LatticeVector, y: &LatticeVector) -> i64 {
        let mut s = 0;
        for i in 0..3 {
            for j in 0..3 {
                s += self.gram[i][j] * x.coords[i] * y.coords[j];
            }
        }
        s
    }

    /// `Q(x) = (x, x) / 2`.
    pub fn q(&self, x: &LatticeVector) -> i64 {
        self.pairing(x, x) / 2
    }

    pub fn element(&self, x: &LatticeVector) -> QuaternionElement {
        let alg = self.order.algebra();
        let mut acc = alg.element_from_ints([0, 0, 0, 0]);
        for (k, e) in self.basis.iter().enumerate() {
            acc = acc.add(&e.scale(&BigRational::from_integer(x.coords[k].into()))).expect("same algebra");
        }
        acc
    }

    pub fn model_vector(&self, x: &LatticeVector) -> Option<ModelVector> {
        self.model_vector_real(&x.to_f64())
    }

    pub fn model_vector_real(&self, x: &[f64; 3]) -> Option<ModelVector> {
        let m = self.model.as_ref()?;
        Some(ModelVector(std::array::from_fn(|r| m[r][0] * x[0] + m[r][1] * x[1] + m[r][2] * x[2])))
    }
}

pub fn trace_zero_lattice(order: Order) -> Result<TraceZeroLattice> {
    TraceZeroLattice::new(order)
}

fn require_indefinite(l: &TraceZeroLattice) -> Result<&Mat3> {
    l.model.as_ref().ok_or_else(|| {
        Error::PreconditionViolation("definite lattices have no majorant; use the gram matrix".into())
    })
}

/// The majorant `x -> (x, x) + 4 R(x, z)` as a matrix in lattice coordinates.
pub fn majorant(l: &TraceZeroLattice, z: UHPoint) -> Result<Mat3> {
    let m = require_indefinite(l)?;
    Ok(congruence3(&model_majorant(z), m))
}

/// Value of the majorant at a lattice vector: `2 Q(x) + 4 R(x, z)`.
pub fn majorant_value(l: &TraceZeroLattice, z: UHPoint, x: &LatticeVector) -> Result<f64> {
    require_indefinite(l)?;
    let mv = l.model_vector(x).expect("indefinite");
    Ok(2.0 * l.q(x) as f64 + 4.0 * r_value(&mv, z))
}

/// `R(x, z)` for a lattice vector.
pub fn r_of(l: &TraceZeroLattice, z: UHPoint, x: &LatticeVector) -> Result<f64> {
    require_indefinite(l)?;
    Ok(r_value(&l.model_vector(x).expect("indefinite"), z))
}

fn split_only(l: &TraceZeroLattice) -> Result<()> {
    if l.split_model {
        Ok(())
    } else {
        Err(Error::PreconditionViolation("exact evaluation needs the split model".into()))
    }
}

/// Exact `R(x, z)` at a point `z = u + iv` with rational coordinates (split model).
pub fn r_exact(l: &TraceZeroLattice, u: &BigRational, v: &BigRational, x: &LatticeVector) -> Result<BigRational> {
    split_only(l)?;
    let [a, b, c] = x.coords.map(|k| BigRational::from_integer(k.into()));
    let two = BigRational::from_integer(2.into());
    let re = &c * (u * u - v * v) - &two * &a * u - &b;
    let im = &two * &c * u * v - &two * &a * v;
    Ok((&re * &re + &im * &im) / (BigRational::from_integer(4.into()) * v * v))
}

/// Exact majorant matrix at a rational point (split model).
pub fn majorant_exact(l: &TraceZeroLattice, u: &BigRational, v: &BigRational) -> Result<[[BigRational; 3]; 3]> {
    split_only(l)?;
    if !v.is_positive() {
        return Err(Error::PreconditionViolation("v must be positive".into()));
    }
    let q = |n: i64| BigRational::from_integer(n.into());
    let cr = [q(-2) * u, q(-1), u * u - v * v];
    let ci = [q(-2) * v, BigRational::zero(), q(2) * u * v];
    let base = [[q(-2), q(0), q(0)], [q(0), q(0), q(-1)], [q(0), q(-1), q(0)]];
    let v2 = v * v;
    Ok(std::array::from_fn(|i| {
        std::array::from_fn(|j| &base[i][j] + (&cr[i] * &cr[j] + &ci[i] * &ci[j]) / &v2)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quatalg::QuaternionAlgebra;

    #[test]
    fn split_lattice_is_trace_zero_matrices() {
        let l = TraceZeroLattice::new(Order::split()).unwrap();
        assert!(l.is_split_model());
        assert_eq!(l.gram(), &[[-2, 0, 0], [0, 0, -1], [0, -1, 0]]);
        assert_eq!(l.signature(), (1, 2));
        for e in l.basis() {
            assert!(e.is_pure());
        }
        // coordinates are entries of [[alpha, beta], [gamma, -alpha]]; Q is the determinant
        let x = LatticeVector::new([2, 3, -1]);
        assert_eq!(l.q(&x), -4 + 3);
        assert_eq!(BigRational::from_integer(l.q(&x).into()), l.element(&x).norm());
    }

    #[test]
    fn lipschitz_definite_lattice() {
        let alg = QuaternionAlgebra::from_ints(-1, -1).unwrap();
        let l = TraceZeroLattice::new(Order::lipschitz(alg).unwrap()).unwrap();
        assert!(l.is_definite());
        assert_eq!(l.signature(), (3, 0));
        let mut diag: Vec<i64> = (0..3).map(|i| l.gram()[i][i]).collect();
        diag.sort();
        assert_eq!(diag, vec![2, 2, 2]);
        assert!(majorant(&l, UHPoint::i()).is_err());
    }

    #[test]
    fn d6_and_d10_lattices() {
        for (label, det) in [("d6", 72), ("d10", 200)] {
            let l = TraceZeroLattice::new(Order::bundled(label).unwrap()).unwrap();
            assert_eq!(l.signature(), (1, 2));
            assert!(!l.is_split_model());
            assert_eq!(crate::linalg::det3_i64(l.gram()).abs(), det, "{label}");
            for x in [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, -2, 3]] {
                let v = LatticeVector::new(x);
                let mv = l.model_vector(&v).unwrap();
                assert!((mv.q() - l.q(&v) as f64).abs() < 1e-9);
                assert_eq!(BigRational::from_integer(l.q(&v).into()), l.element(&v).norm());
            }
        }
    }

    #[test]
    fn majorant_positive_definite() {
        let l = TraceZeroLattice::new(Order::split()).unwrap();
        let m = majorant(&l, UHPoint::i()).unwrap();
        assert!(crate::linalg::sym_eigenvalues3(&m)[0] > 0.0);
        let x = LatticeVector::new([0, -1, 1]);
        assert_eq!(r_of(&l, UHPoint::i(), &x).unwrap(), 0.0);
        assert_eq!(majorant_value(&l, UHPoint::i(), &x).unwrap(), 2.0 * l.q(&x) as f64);
    }
}
