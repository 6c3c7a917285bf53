//! The representation `F₂D_{4p} → M₂(F₂[z]/(m̄))`, `x ↦ (z 1; 1 0)`,
//! `y ↦ (0 1; 1 0)`, where `m̄` is the mod-2 reduction of the product of the
//! minimal polynomials of `ζ_p + ζ_p⁻¹` and `ζ_{2p} + ζ_{2p}⁻¹`.

use crate::arith::require_odd_prime;
use crate::error::{Error, Result};
use crate::groups::GroupSpec;

use super::group_ring::GroupRing;
use super::mat2::{Mat2, Mat2Ring};
use super::poly::{poly_mod, poly_mul, real_cyclotomic_minpoly, IntPoly, PolyQuot};
use super::ring::Ring;
use super::scalar::Gf2;

pub type Gf2Poly = PolyQuot<Gf2>;

/// The integral product of the two real-cyclotomic minimal polynomials.
pub fn integral_modulus(p: u32) -> IntPoly {
    poly_mul(&real_cyclotomic_minpoly(p as u64), &real_cyclotomic_minpoly(2 * p as u64))
}

/// Its reduction mod 2, coefficients in `{0, 1}`.
pub fn reduced_modulus(p: u32) -> IntPoly {
    poly_mod(&integral_modulus(p), 2)
}

#[derive(Clone, Debug)]
pub struct MatrixRep {
    p: u32,
    group_ring: GroupRing<Gf2>,
    mats: Mat2Ring<Gf2Poly>,
    /// Image of every group element, in enumeration order.
    images: Vec<Mat2<Vec<u8>>>,
}

impl MatrixRep {
    pub fn new(p: u32) -> Result<Self> {
        require_odd_prime(p as i64)?;
        let field = PolyQuot::from_int_modulus(Gf2, &reduced_modulus(p), "z")?;
        let mats = Mat2Ring::new(field.clone());
        let (zero, one, z) = (field.zero(), field.one(), field.gen());
        let x_img = Mat2::new(z, one.clone(), one.clone(), zero.clone());
        let y_img = Mat2::new(zero.clone(), one.clone(), one, zero);
        let group_ring = GroupRing::new(GroupSpec::Dihedral(2 * p), Gf2)?;
        let images = group_ring
            .group()
            .elements()
            .iter()
            .map(|g| {
                let [a, b, _] = g.exponents();
                let m = mats.pow(&x_img, a as u64);
                if b == 1 {
                    mats.mul(&m, &y_img)
                } else {
                    m
                }
            })
            .collect();
        Ok(MatrixRep { p, group_ring, mats, images })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn field(&self) -> &Gf2Poly {
        self.mats.base()
    }

    pub fn matrices(&self) -> &Mat2Ring<Gf2Poly> {
        &self.mats
    }

    pub fn group_ring(&self) -> &GroupRing<Gf2> {
        &self.group_ring
    }

    pub fn x_image(&self) -> &Mat2<Vec<u8>> {
        &self.images[self.group_ring.group().index_of(&GroupSpec::Dihedral(2 * self.p).generators()[0])]
    }

    pub fn y_image(&self) -> &Mat2<Vec<u8>> {
        &self.images[1]
    }

    pub fn apply(&self, e: &[u8]) -> Result<Mat2<Vec<u8>>> {
        if e.len() != self.images.len() {
            return Err(Error::InvalidParameter(format!(
                "expected an element of F2[{}]",
                self.group_ring.spec()
            )));
        }
        let mut acc = self.mats.zero();
        for (c, m) in e.iter().zip(&self.images) {
            if *c & 1 == 1 {
                acc = self.mats.add(&acc, m);
            }
        }
        Ok(acc)
    }

    pub fn det(&self, e: &[u8]) -> Result<Vec<u8>> {
        Ok(self.mats.det(&self.apply(e)?))
    }
}

/// Builds the representation; the argument order mirrors `matrix_rep(p, e)`.
pub fn matrix_rep(p: u32, e: &[u8]) -> Result<Mat2<Vec<u8>>> {
    MatrixRep::new(p)?.apply(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sextic_for_seven() {
        assert_eq!(integral_modulus(7), vec![-1, 0, 6, 0, -5, 0, 1]);
        assert_eq!(reduced_modulus(7), vec![1, 0, 0, 0, 1, 0, 1]);
    }

    #[test]
    fn generator_images() {
        let rep = MatrixRep::new(7).unwrap();
        let m = rep.matrices();
        let (x, y) = (rep.x_image().clone(), rep.y_image().clone());
        assert_eq!(m.pow(&x, 14), m.one());
        assert_eq!(m.mul(&y, &y), m.one());
        let xinv = m.pow(&x, 13);
        assert_eq!(m.mul(&m.mul(&y, &x), &y), xinv);
        assert_eq!(m.det(&x), rep.field().one());
        assert!(MatrixRep::new(9).is_err());
    }
}
