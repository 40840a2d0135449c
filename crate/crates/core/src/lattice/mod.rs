//! Orders as data, the trace-zero lattice `L = O_B ∩ V`, majorants,
//! lattice-point enumeration and orbit counting.

pub mod enumerate;
pub mod hurwitz;
pub mod orbits;
pub mod pairs;
pub mod order;
pub mod trace_zero;

pub use enumerate::{
    enumerate_by_majorant, enumerate_by_majorant_capped, enumerate_definite, representation_count,
    DEFAULT_ENUMERATION_CAP,
};
pub use hurwitz::{hurwitz_by_full_forms, hurwitz_class_number};
pub use orbits::{cm_representatives, weighted_orbit_degree};
pub use order::{Order, OrderFile, BUNDLED_ORDERS};
pub use trace_zero::{majorant, majorant_value, trace_zero_lattice, LatticeVector, TraceZeroLattice};
pub use pairs::{pair_orbit_representatives, TMatrix};
