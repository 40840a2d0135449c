use thiserror::Error;

/// Errors produced by every layer of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("structure constant must be nonzero")]
    ZeroStructureConstant,

    #[error("quaternion elements belong to different algebras")]
    AlgebraMismatch,

    #[error("no structure constants with |a|,|b| <= {bound} realise ramification {target:?}")]
    SearchExhausted { bound: u64, target: Vec<u64> },

    #[error("degenerate order: {0}")]
    DegenerateOrder(String),

    #[error("invalid order data: {0}")]
    InvalidOrder(String),

    #[error("precondition violated: {0}")]
    PreconditionViolation(String),

    #[error("enumeration would produce about {predicted:.0} points, cap is {cap}")]
    BoundTooLarge { predicted: f64, cap: u64 },

    #[error("unsupported discriminant D(B) = {0}: no orbit machinery and no configured table")]
    UnsupportedDiscriminant(u64),

    #[error("argument must be positive, got {0}")]
    NonpositiveArgument(f64),

    #[error("point lies on the singular locus (R = {r:e})")]
    OnSingularLocus { r: f64 },

    #[error("evaluation point lies on D_x for lattice vector {vector:?}")]
    SingularEvaluation { vector: [i64; 3] },

    #[error("singular configuration: {0}")]
    SingularConfiguration(String),

    #[error("quadrature failed: estimated error {estimate:e} exceeds tolerance {tolerance:e}")]
    QuadratureFailure { estimate: f64, tolerance: f64 },

    #[error("{0} is not squarefree")]
    NotSquarefree(u64),

    #[error("integrand is not integrable over the fundamental domain: {0}")]
    NotIntegrable(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error on {path}: {message}")]
    Io { path: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
