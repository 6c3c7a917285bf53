//! 2×2 matrices over a commutative ring.

use super::ring::{CoefficientRing, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat2<E> {
    /// Row-major entries `[[a, b], [c, d]]`.
    pub entries: [E; 4],
}

impl<E: Clone> Mat2<E> {
    pub fn new(a: E, b: E, c: E, d: E) -> Self {
        Mat2 { entries: [a, b, c, d] }
    }
}

/// The ring `M₂(R)`.
#[derive(Clone, Debug)]
pub struct Mat2Ring<R: Ring> {
    base: R,
}

impl<R: Ring> Mat2Ring<R> {
    pub fn new(base: R) -> Self {
        Mat2Ring { base }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn det(&self, m: &Mat2<R::Elem>) -> R::Elem {
        let [a, b, c, d] = &m.entries;
        self.base.sub(&self.base.mul(a, d), &self.base.mul(b, c))
    }

    pub fn diag(&self, a: R::Elem, d: R::Elem) -> Mat2<R::Elem> {
        Mat2::new(a, self.base.zero(), self.base.zero(), d)
    }
}

impl<R: Ring> Ring for Mat2Ring<R> {
    type Elem = Mat2<R::Elem>;

    fn zero(&self) -> Self::Elem {
        self.diag(self.base.zero(), self.base.zero())
    }
    fn one(&self) -> Self::Elem {
        self.diag(self.base.one(), self.base.one())
    }
    fn from_int(&self, n: i64) -> Self::Elem {
        self.diag(self.base.from_int(n), self.base.from_int(n))
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        Mat2 { entries: std::array::from_fn(|k| self.base.add(&a.entries[k], &b.entries[k])) }
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        Mat2 { entries: std::array::from_fn(|k| self.base.neg(&a.entries[k])) }
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let r = &self.base;
        let [a0, a1, a2, a3] = &a.entries;
        let [b0, b1, b2, b3] = &b.entries;
        Mat2::new(
            r.add(&r.mul(a0, b0), &r.mul(a1, b2)),
            r.add(&r.mul(a0, b1), &r.mul(a1, b3)),
            r.add(&r.mul(a2, b0), &r.mul(a3, b2)),
            r.add(&r.mul(a2, b1), &r.mul(a3, b3)),
        )
    }
    fn descriptor(&self) -> CoefficientRing {
        self.base.descriptor()
    }
    fn render(&self, a: &Self::Elem) -> String {
        let e: Vec<String> = a.entries.iter().map(|x| self.base.render(x)).collect();
        format!("[[{}, {}], [{}, {}]]", e[0], e[1], e[2], e[3])
    }
}
