pub mod arith;
pub mod autos;
pub mod chains;
pub mod classify;
pub mod error;
pub mod grouprings;
pub mod groups;
pub mod lambda_units;
pub mod lattice;
pub mod swan;
pub mod verify;

pub use error::{Error, Result};
pub use grouprings::{CoefficientRing, GroupRing, Mat2, Ring};
pub use groups::{Group, GroupElement, GroupHom, GroupSpec};
