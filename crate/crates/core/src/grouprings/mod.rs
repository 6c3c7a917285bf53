//! Exact arithmetic in coefficient rings, group rings and their quotients,
//! plus the ring homomorphisms of the two pullback squares.

pub mod group_ring;
pub mod mat2;
pub mod matrix_rep;
pub mod poly;
pub mod pullback;
pub mod quaternion;
pub mod quotients;
pub mod ring;
pub mod scalar;
pub mod serialize;
pub mod unit_check;

pub use group_ring::GroupRing;
pub use mat2::{Mat2, Mat2Ring};
pub use matrix_rep::{matrix_rep, MatrixRep};
pub use poly::PolyQuot;
pub use pullback::PullbackMaps;
pub use quaternion::QuaternionOrder;
pub use quotients::{lift_mod_norm, Lambda, ModNorm, ZetaJ};
pub use ring::{CoefficientRing, Gf2Algebra, Ring};
pub use scalar::{Gf2, Integers, IntegersMod};
pub use serialize::SerializedElement;
pub use unit_check::{gf2_inverse, integral_norm, unit_check, verify_inverse};
