//! The scalar rings: ℤ, ℤ/m and GF(2).

use crate::arith::modp;

use super::ring::{CoefficientRing, Gf2Algebra, Ring};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Integers;

impl Ring for Integers {
    type Elem = i64;

    fn zero(&self) -> i64 {
        0
    }
    fn one(&self) -> i64 {
        1
    }
    fn from_int(&self, n: i64) -> i64 {
        n
    }
    fn add(&self, a: &i64, b: &i64) -> i64 {
        a + b
    }
    fn neg(&self, a: &i64) -> i64 {
        -a
    }
    fn mul(&self, a: &i64, b: &i64) -> i64 {
        a * b
    }
    fn descriptor(&self) -> CoefficientRing {
        CoefficientRing::Integers
    }
    fn render(&self, a: &i64) -> String {
        a.to_string()
    }
}

/// ℤ/m with canonical representatives in `[0, m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IntegersMod {
    modulus: u64,
}

impl IntegersMod {
    pub fn new(modulus: u64) -> Self {
        assert!(modulus >= 1, "modulus must be positive");
        IntegersMod { modulus }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Multiplicative inverse when it exists.
    pub fn inverse(&self, a: &u64) -> Option<u64> {
        crate::arith::mod_inverse(*a as i64, self.modulus as i64).ok().map(|v| v as u64)
    }
}

impl Ring for IntegersMod {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.modulus
    }
    fn from_int(&self, n: i64) -> u64 {
        modp(n, self.modulus as i64) as u64
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.modulus as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.modulus - a % self.modulus) % self.modulus
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.modulus as u128) as u64
    }
    fn descriptor(&self) -> CoefficientRing {
        CoefficientRing::IntegersMod { modulus: self.modulus }
    }
    fn render(&self, a: &u64) -> String {
        a.to_string()
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Gf2;

impl Ring for Gf2 {
    type Elem = u8;

    fn zero(&self) -> u8 {
        0
    }
    fn one(&self) -> u8 {
        1
    }
    fn from_int(&self, n: i64) -> u8 {
        (n & 1) as u8
    }
    fn add(&self, a: &u8, b: &u8) -> u8 {
        a ^ b
    }
    fn neg(&self, a: &u8) -> u8 {
        *a
    }
    fn mul(&self, a: &u8, b: &u8) -> u8 {
        a & b
    }
    fn descriptor(&self) -> CoefficientRing {
        CoefficientRing::GF2
    }
    fn render(&self, a: &u8) -> String {
        a.to_string()
    }
}

impl Gf2Algebra for Gf2 {
    fn gf2_dim(&self) -> usize {
        1
    }
    fn gf2_coords(&self, a: &u8) -> Vec<u8> {
        vec![*a]
    }
    fn from_gf2_coords(&self, bits: &[u8]) -> u8 {
        bits[0] & 1
    }
}
