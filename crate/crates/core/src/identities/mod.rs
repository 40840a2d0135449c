//! Degree bookkeeping for the arithmetic theta function, archimedean
//! arithmetic degrees, the constant `c`, and the classification of `Z(T)`.

pub mod archimedean;
pub mod classify;
pub mod degree;

pub use archimedean::{arithmetic_degree_archimedean, CuspIntegrand, FnIntegrand, XiIntegrand, Zero};
pub use classify::{
    classify, fundamental_prime, fundamental_prime_scan, is_regular, vertical_components, CycleClassification,
    ScanOutcome,
};
pub use degree::{bracket_term, constant_c, ConstantCParts, degree_series, zeta_db_at_minus1, DegreeSeries, ZETA_PRIME_MINUS_ONE};
