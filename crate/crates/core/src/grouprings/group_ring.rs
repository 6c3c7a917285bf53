//! Group rings `R[G]` with dense coefficient vectors in enumeration order.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groups::{Group, GroupElement, GroupHom, GroupSpec};

use super::ring::{CoefficientRing, Gf2Algebra, Ring};

#[derive(Clone, Debug)]
pub struct GroupRing<R: Ring> {
    group: Arc<Group>,
    ring: R,
}

impl<R: Ring> GroupRing<R> {
    pub fn new(spec: GroupSpec, ring: R) -> Result<Self> {
        Ok(GroupRing { group: Arc::new(Group::new(spec)?), ring })
    }

    pub fn with_group(group: Arc<Group>, ring: R) -> Self {
        GroupRing { group, ring }
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn spec(&self) -> GroupSpec {
        self.group.spec()
    }

    pub fn coefficient_ring(&self) -> &R {
        &self.ring
    }

    pub fn basis_idx(&self, idx: usize) -> Vec<R::Elem> {
        let mut v = self.zero();
        v[idx] = self.ring.one();
        v
    }

    pub fn basis(&self, g: &GroupElement) -> Result<Vec<R::Elem>> {
        if g.spec() != self.spec() {
            return Err(Error::GroupMismatch(g.spec().to_string(), self.spec().to_string()));
        }
        Ok(self.basis_idx(self.group.index_of(g)))
    }

    /// `Σ c·x^a y^b z^c` from integer coefficients and exponent words.
    pub fn from_terms(&self, terms: &[(i64, [i64; 3])]) -> Result<Vec<R::Elem>> {
        let mut v = self.zero();
        for &(c, [a, b, z]) in terms {
            let g = GroupElement::word(self.spec(), a, b, z)?;
            let i = self.group.index_of(&g);
            v[i] = self.ring.add(&v[i], &self.ring.from_int(c));
        }
        Ok(v)
    }

    /// The norm element `N = Σ_g g`.
    pub fn norm_element(&self) -> Vec<R::Elem> {
        vec![self.ring.one(); self.group.order()]
    }

    /// The augmentation `ε(Σ c_g g) = Σ c_g`.
    pub fn augmentation(&self, e: &[R::Elem]) -> R::Elem {
        self.ring.sum(e)
    }

    pub fn from_coeffs(&self, coeffs: Vec<R::Elem>) -> Result<Vec<R::Elem>> {
        if coeffs.len() != self.group.order() {
            return Err(Error::InvalidParameter(format!(
                "expected {} coefficients, got {}",
                self.group.order(),
                coeffs.len()
            )));
        }
        Ok(coeffs)
    }

    /// Pushes `e` forward along a group homomorphism and a coefficient map.
    pub fn map_to<S: Ring>(
        &self,
        e: &[R::Elem],
        target: &GroupRing<S>,
        hom: &GroupHom,
        coeff_map: impl Fn(&R::Elem) -> S::Elem,
    ) -> Result<Vec<S::Elem>> {
        if hom.from_spec() != self.spec() || hom.to_spec() != target.spec() {
            return Err(Error::GroupMismatch(hom.from_spec().to_string(), self.spec().to_string()));
        }
        let mut out = target.zero();
        for (i, c) in e.iter().enumerate() {
            if self.ring.is_zero(c) {
                continue;
            }
            let j = target.group.index_of(&hom.apply_idx(i));
            out[j] = target.ring.add(&out[j], &coeff_map(c));
        }
        Ok(out)
    }

    /// Evaluates the linear extension of a group-element map into any ring.
    pub fn evaluate_in<S: Ring>(
        &self,
        e: &[R::Elem],
        target: &S,
        coeff_map: impl Fn(&R::Elem) -> S::Elem,
        element_image: impl Fn(&GroupElement) -> S::Elem,
    ) -> S::Elem {
        let mut acc = target.zero();
        for (i, c) in e.iter().enumerate() {
            if self.ring.is_zero(c) {
                continue;
            }
            let t = target.mul(&coeff_map(c), &element_image(&self.group.element(i)));
            acc = target.add(&acc, &t);
        }
        acc
    }
}

impl<R: Ring> Ring for GroupRing<R> {
    type Elem = Vec<R::Elem>;

    fn zero(&self) -> Self::Elem {
        vec![self.ring.zero(); self.group.order()]
    }
    fn one(&self) -> Self::Elem {
        self.basis_idx(0)
    }
    fn from_int(&self, n: i64) -> Self::Elem {
        let mut v = self.zero();
        v[0] = self.ring.from_int(n);
        v
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.iter().zip(b).map(|(x, y)| self.ring.add(x, y)).collect()
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.iter().map(|x| self.ring.neg(x)).collect()
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let mut out = self.zero();
        for (i, x) in a.iter().enumerate() {
            if self.ring.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if self.ring.is_zero(y) {
                    continue;
                }
                let k = self.group.mul_idx(i, j);
                out[k] = self.ring.add(&out[k], &self.ring.mul(x, y));
            }
        }
        out
    }
    fn descriptor(&self) -> CoefficientRing {
        CoefficientRing::GroupRing {
            group: self.spec(),
            base: Box::new(self.ring.descriptor()),
        }
    }
    fn render(&self, a: &Self::Elem) -> String {
        render_terms(&self.ring, a, |i| self.group.element(i).to_string())
    }
}

impl<R: Gf2Algebra> Gf2Algebra for GroupRing<R> {
    fn gf2_dim(&self) -> usize {
        self.group.order() * self.ring.gf2_dim()
    }
    fn gf2_coords(&self, a: &Self::Elem) -> Vec<u8> {
        a.iter().flat_map(|c| self.ring.gf2_coords(c)).collect()
    }
    fn from_gf2_coords(&self, bits: &[u8]) -> Self::Elem {
        bits.chunks(self.ring.gf2_dim()).map(|ch| self.ring.from_gf2_coords(ch)).collect()
    }
}

pub(crate) fn render_terms<R: Ring>(
    ring: &R,
    coeffs: &[R::Elem],
    name: impl Fn(usize) -> String,
) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !ring.is_zero(c))
        .map(|(i, c)| {
            let g = name(i);
            let cs = ring.render(c);
            match (g.as_str(), cs.as_str()) {
                ("1", _) => cs,
                (_, "1") => g,
                (_, "-1") => format!("-{g}"),
                _ if cs.contains(['+', ' ']) => format!("({cs}){g}"),
                _ => format!("{cs}{g}"),
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ").replace("+ -", "- ")
    }
}

#[cfg(test)]
mod tests {
    use super::super::scalar::{Gf2, Integers};
    use super::*;

    #[test]
    fn norm_and_augmentation() {
        let zq = GroupRing::new(GroupSpec::Dicyclic(14), Integers).unwrap();
        let n = zq.norm_element();
        assert_eq!(zq.augmentation(&n), 56);
        let e = zq.from_terms(&[(1, [0, 0, 0]), (1, [1, 0, 0]), (-1, [0, 1, 0])]).unwrap();
        assert_eq!(zq.augmentation(&e), 1);
        // N·g = N
        let x = zq.from_terms(&[(1, [1, 0, 0])]).unwrap();
        assert_eq!(zq.mul(&n, &x), n);
        assert_eq!(zq.render(&e), "1 - y + x");
    }

    #[test]
    fn gf2_coordinates_roundtrip() {
        let f = GroupRing::new(GroupSpec::KleinFour, Gf2).unwrap();
        let all = f.all_elements();
        assert_eq!(all.len(), 16);
        for a in &all {
            assert_eq!(&f.from_gf2_coords(&f.gf2_coords(a)), a);
        }
    }
}
