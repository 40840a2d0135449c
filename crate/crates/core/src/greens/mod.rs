//! The archimedean layer: `beta_1`, `R(x, z)`, the Green function `xi`,
//! the truncated sums `Xi(t, v)`, the curvature form and the star-product height.

pub mod beta1;
pub mod big_xi;
pub mod green;
pub mod model;
pub mod quadrature;
pub mod star;
pub mod zhat;

pub use beta1::{beta1, EULER_GAMMA};
pub use green::{ddc_xi, omega, xi};
pub use model::{r_value, ModelVector, UHPoint};
pub use quadrature::Estimate;
pub use zhat::{z_hat_indefinite, ZHat, SquareRoot};
