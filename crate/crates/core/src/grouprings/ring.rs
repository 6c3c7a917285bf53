//! The ring abstraction shared by every coefficient ring and group ring.
//!
//! Rings are context objects: the element type carries only data, while the
//! ring value knows how to combine elements (moduli, multiplication tables).

use std::fmt::Debug;

use serde::{Deserialize, Serialize};

/// Serializable description of a coefficient ring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum CoefficientRing {
    Integers,
    IntegersMod { modulus: u64 },
    GF2,
    PolyQuot {
        base: Box<CoefficientRing>,
        variable: String,
        /// Coefficients of the monic modulus, constant term first.
        modulus: Vec<String>,
    },
    QuaternionOrder { base: Box<CoefficientRing> },
    GroupRing { group: crate::groups::GroupSpec, base: Box<CoefficientRing> },
    Lambda { p: u32 },
    ModNorm { group: crate::groups::GroupSpec },
    ZetaJ { p: u32 },
}

pub trait Ring {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn descriptor(&self) -> CoefficientRing;
    fn render(&self, a: &Self::Elem) -> String;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn pow(&self, a: &Self::Elem, mut k: u64) -> Self::Elem {
        let mut acc = self.one();
        let mut base = a.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    fn sum<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        items.into_iter().fold(self.zero(), |acc, x| self.add(&acc, x))
    }

    fn scale(&self, n: i64, a: &Self::Elem) -> Self::Elem {
        self.mul(&self.from_int(n), a)
    }
}

/// A ring that is a finite-dimensional algebra over GF(2) with a fixed basis.
pub trait Gf2Algebra: Ring {
    fn gf2_dim(&self) -> usize;
    fn gf2_coords(&self, a: &Self::Elem) -> Vec<u8>;
    fn from_gf2_coords(&self, bits: &[u8]) -> Self::Elem;

    /// Every element, ordered by the binary expansion of its coordinates.
    fn all_elements(&self) -> Vec<Self::Elem> {
        let d = self.gf2_dim();
        assert!(d <= 20, "refusing to enumerate 2^{d} elements");
        (0u32..(1 << d))
            .map(|m| {
                let bits: Vec<u8> = (0..d).map(|i| ((m >> i) & 1) as u8).collect();
                self.from_gf2_coords(&bits)
            })
            .collect()
    }
}
