//! Quaternion orders `base⟨i, j⟩` with `i² = j² = −1`, `ij = −ji`.

use super::ring::{CoefficientRing, Ring};
use super::scalar::Integers;

#[derive(Clone, Debug)]
pub struct QuaternionOrder<R: Ring> {
    base: R,
}

impl<R: Ring> QuaternionOrder<R> {
    pub fn new(base: R) -> Self {
        QuaternionOrder { base }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    /// `a + b·i + c·j + d·ij`.
    pub fn element(&self, a: R::Elem, b: R::Elem, c: R::Elem, d: R::Elem) -> [R::Elem; 4] {
        [a, b, c, d]
    }

    pub fn i(&self) -> [R::Elem; 4] {
        let (z, o) = (self.base.zero(), self.base.one());
        [z.clone(), o, z.clone(), z]
    }

    pub fn j(&self) -> [R::Elem; 4] {
        let (z, o) = (self.base.zero(), self.base.one());
        [z.clone(), z.clone(), o, z]
    }

    pub fn conjugate(&self, q: &[R::Elem; 4]) -> [R::Elem; 4] {
        [q[0].clone(), self.base.neg(&q[1]), self.base.neg(&q[2]), self.base.neg(&q[3])]
    }

    /// Reduced norm `a² + b² + c² + d²`.
    pub fn norm(&self, q: &[R::Elem; 4]) -> R::Elem {
        let sq: Vec<R::Elem> = q.iter().map(|c| self.base.mul(c, c)).collect();
        self.base.sum(&sq)
    }
}

impl QuaternionOrder<Integers> {
    /// The unit group of `ℤ⟨i, j⟩`: elements of norm one.
    pub fn integral_units(&self) -> Vec<[i64; 4]> {
        let mut out = Vec::new();
        for a in -1..=1 {
            for b in -1..=1 {
                for c in -1..=1 {
                    for d in -1..=1 {
                        let q = [a, b, c, d];
                        if self.norm(&q) == 1 {
                            out.push(q);
                        }
                    }
                }
            }
        }
        out
    }
}

impl<R: Ring> Ring for QuaternionOrder<R> {
    type Elem = [R::Elem; 4];

    fn zero(&self) -> Self::Elem {
        let z = self.base.zero();
        [z.clone(), z.clone(), z.clone(), z]
    }
    fn one(&self) -> Self::Elem {
        self.from_int(1)
    }
    fn from_int(&self, n: i64) -> Self::Elem {
        let z = self.base.zero();
        [self.base.from_int(n), z.clone(), z.clone(), z]
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        std::array::from_fn(|k| self.base.add(&a[k], &b[k]))
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        std::array::from_fn(|k| self.base.neg(&a[k]))
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let r = &self.base;
        let m = |x: usize, y: usize| r.mul(&a[x], &b[y]);
        let s = |terms: &[(i8, usize, usize)]| {
            terms.iter().fold(r.zero(), |acc, &(sign, x, y)| {
                let t = m(x, y);
                if sign > 0 {
                    r.add(&acc, &t)
                } else {
                    r.sub(&acc, &t)
                }
            })
        };
        // Hamilton product on the basis 1, i, j, k = ij.
        [
            s(&[(1, 0, 0), (-1, 1, 1), (-1, 2, 2), (-1, 3, 3)]),
            s(&[(1, 0, 1), (1, 1, 0), (1, 2, 3), (-1, 3, 2)]),
            s(&[(1, 0, 2), (-1, 1, 3), (1, 2, 0), (1, 3, 1)]),
            s(&[(1, 0, 3), (1, 1, 2), (-1, 2, 1), (1, 3, 0)]),
        ]
    }
    fn descriptor(&self) -> CoefficientRing {
        CoefficientRing::QuaternionOrder { base: Box::new(self.base.descriptor()) }
    }
    fn render(&self, a: &Self::Elem) -> String {
        let names = ["", "i", "j", "ij"];
        let terms: Vec<String> = a
            .iter()
            .zip(names)
            .filter(|(c, _)| !self.base.is_zero(c))
            .map(|(c, n)| {
                let cs = self.base.render(c);
                match (n, cs.as_str()) {
                    ("", _) => cs,
                    (_, "1") => n.to_string(),
                    (_, "-1") => format!("-{n}"),
                    _ => format!("{cs}{n}"),
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ").replace("+ -", "- ")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hamilton_relations() {
        let h = QuaternionOrder::new(Integers);
        let (i, j) = (h.i(), h.j());
        assert_eq!(h.mul(&i, &i), h.from_int(-1));
        assert_eq!(h.mul(&j, &j), h.from_int(-1));
        assert_eq!(h.mul(&i, &j), h.neg(&h.mul(&j, &i)));
        let k = h.mul(&i, &j);
        assert_eq!(h.mul(&k, &k), h.from_int(-1));
        assert_eq!(h.norm(&[1, 2, 3, 4]), 30);
        assert_eq!(h.render(&[2, 0, -1, 1]), "2 - j + ij");
    }

    #[test]
    fn units_of_integral_quaternions() {
        let h = QuaternionOrder::new(Integers);
        assert_eq!(h.integral_units().len(), 8);
    }
}
