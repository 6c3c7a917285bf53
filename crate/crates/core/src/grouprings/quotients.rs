//! Quotients of integral group rings: `Λ = ℤQ_{8p}/(x^{2p}+1)`, `ℤG/N`, and
//! the twisted ring `ℤ[ζ_{4p}, j]`.

use std::sync::Arc;

use crate::arith::{modp, require_odd_prime};
use crate::error::{Error, Result};
use crate::groups::{Group, GroupSpec};

use super::group_ring::{render_terms, GroupRing};
use super::poly::{cyclotomic, PolyQuot};
use super::ring::{CoefficientRing, Ring};
use super::scalar::Integers;

/// `ℤQ_{8p}/(x^{2p}+1)` on the basis `x^a y^b`, `0 ≤ a < 2p`, `b ∈ {0,1}`,
/// stored at index `2a + b` (the same indexing as `ℤD_{4p}`).
#[derive(Clone, Debug)]
pub struct Lambda {
    p: u32,
    /// For basis indices `(i, j)`: the index and sign of their product.
    table: Arc<Vec<(u32, i8)>>,
}

impl Lambda {
    pub fn new(p: u32) -> Result<Self> {
        require_odd_prime(p as i64)?;
        let half = 2 * p;
        let dim = (4 * p) as usize;
        let mut table = Vec::with_capacity(dim * dim);
        for i in 0..dim as u32 {
            let (a, b) = (i / 2, i % 2);
            for j in 0..dim as u32 {
                let (c, d) = (j / 2, j % 2);
                // x^a y^b · x^c y^d in Q_{8p}, then x^{2p} = −1.
                let full = 2 * half;
                let twisted = if b == 0 { c } else { (full - c) % full };
                let extra = if b == 1 && d == 1 { half } else { 0 };
                let e = (a + twisted + extra) % full;
                let (e, sign) = if e >= half { (e - half, -1) } else { (e, 1) };
                table.push((2 * e + (b ^ d), sign));
            }
        }
        Ok(Lambda { p, table: Arc::new(table) })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> usize {
        (4 * self.p) as usize
    }

    /// `±x^a y^b` for any integer `a`.
    pub fn monomial(&self, a: i64, b: u32) -> Vec<i64> {
        let half = 2 * self.p as i64;
        let e = modp(a, 2 * half);
        let (e, sign) = if e >= half { (e - half, -1) } else { (e, 1) };
        let mut v = self.zero();
        v[(2 * e) as usize + (b % 2) as usize] = sign;
        v
    }

    pub fn x(&self) -> Vec<i64> {
        self.monomial(1, 0)
    }

    pub fn y(&self) -> Vec<i64> {
        self.monomial(0, 1)
    }

    /// `Σ c·x^a` for `(c, a)` pairs.
    pub fn from_x_terms(&self, terms: &[(i64, i64)]) -> Vec<i64> {
        terms.iter().fold(self.zero(), |acc, &(c, a)| {
            self.add(&acc, &self.monomial(a, 0).iter().map(|v| v * c).collect())
        })
    }
}

impl Ring for Lambda {
    type Elem = Vec<i64>;

    fn zero(&self) -> Vec<i64> {
        vec![0; self.dim()]
    }
    fn one(&self) -> Vec<i64> {
        self.from_int(1)
    }
    fn from_int(&self, n: i64) -> Vec<i64> {
        let mut v = self.zero();
        v[0] = n;
        v
    }
    fn add(&self, a: &Vec<i64>, b: &Vec<i64>) -> Vec<i64> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }
    fn neg(&self, a: &Vec<i64>) -> Vec<i64> {
        a.iter().map(|x| -x).collect()
    }
    fn mul(&self, a: &Vec<i64>, b: &Vec<i64>) -> Vec<i64> {
        let dim = self.dim();
        let mut out = self.zero();
        for (i, x) in a.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if *y == 0 {
                    continue;
                }
                let (k, s) = self.table[i * dim + j];
                out[k as usize] += s as i64 * x * y;
            }
        }
        out
    }
    fn descriptor(&self) -> CoefficientRing {
        CoefficientRing::Lambda { p: self.p }
    }
    fn render(&self, a: &Vec<i64>) -> String {
        let spec = GroupSpec::Dihedral(2 * self.p);
        render_terms(&Integers, a, |i| spec.element_at(i).to_string())
    }
}

/// `ℤG/N` with canonical representatives whose identity coefficient is zero.
#[derive(Clone, Debug)]
pub struct ModNorm {
    inner: GroupRing<Integers>,
}

impl ModNorm {
    pub fn new(spec: GroupSpec) -> Result<Self> {
        Ok(ModNorm { inner: GroupRing::new(spec, Integers)? })
    }

    pub fn with_group(group: Arc<Group>) -> Self {
        ModNorm { inner: GroupRing::with_group(group, Integers) }
    }

    pub fn group_ring(&self) -> &GroupRing<Integers> {
        &self.inner
    }

    pub fn order(&self) -> i64 {
        self.inner.group().order() as i64
    }

    /// The class of an element of `ℤG`.
    pub fn reduce(&self, e: &[i64]) -> Vec<i64> {
        let c = e[0];
        e.iter().map(|v| v - c).collect()
    }

    /// Augmentation modulo `|G|`, the only part well defined on the quotient.
    pub fn augmentation_mod(&self, u: &[i64]) -> i64 {
        modp(u.iter().sum(), self.order())
    }

    /// The unique lift `u + kN ∈ ℤG` with augmentation exactly `target`.
    pub fn lift(&self, u: &[i64], target: i64) -> Result<Vec<i64>> {
        let n = self.order();
        let aug: i64 = u.iter().sum();
        if modp(target - aug, n) != 0 {
            return Err(Error::CongruenceViolated(format!(
                "target augmentation {target} ≢ {aug} mod {n}"
            )));
        }
        let k = (target - aug) / n;
        Ok(u.iter().map(|v| v + k).collect())
    }
}

/// See [`ModNorm::lift`].
pub fn lift_mod_norm(ctx: &ModNorm, u: &[i64], target: i64) -> Result<Vec<i64>> {
    ctx.lift(u, target)
}

impl Ring for ModNorm {
    type Elem = Vec<i64>;

    fn zero(&self) -> Vec<i64> {
        self.inner.zero()
    }
    fn one(&self) -> Vec<i64> {
        self.reduce(&self.inner.one())
    }
    fn from_int(&self, n: i64) -> Vec<i64> {
        self.reduce(&self.inner.from_int(n))
    }
    fn add(&self, a: &Vec<i64>, b: &Vec<i64>) -> Vec<i64> {
        self.reduce(&self.inner.add(a, b))
    }
    fn neg(&self, a: &Vec<i64>) -> Vec<i64> {
        self.reduce(&self.inner.neg(a))
    }
    fn mul(&self, a: &Vec<i64>, b: &Vec<i64>) -> Vec<i64> {
        self.reduce(&self.inner.mul(a, b))
    }
    fn descriptor(&self) -> CoefficientRing {
        CoefficientRing::ModNorm { group: self.inner.spec() }
    }
    fn render(&self, a: &Vec<i64>) -> String {
        self.inner.render(a)
    }
}

/// `ℤ[ζ_{4p}, j]` with `j² = −1`, `jα = σ(α)j`, `σ(ζ) = ζ⁻¹`; elements are
/// pairs `(α, β)` standing for `α + βj`.
#[derive(Clone, Debug)]
pub struct ZetaJ {
    p: u32,
    cyclo: PolyQuot<Integers>,
    /// `σ(ζ^k)` for `k < deg Φ_{4p}`.
    sigma_images: Vec<Vec<i64>>,
}

impl ZetaJ {
    pub fn new(p: u32) -> Result<Self> {
        require_odd_prime(p as i64)?;
        let cyclo = PolyQuot::from_int_modulus(Integers, &cyclotomic(4 * p as u64), "ζ")?;
        let order = 4 * p as usize;
        let sigma_images = (0..cyclo.degree()).map(|k| cyclo.monomial((order - k) % order)).collect();
        Ok(ZetaJ { p, cyclo, sigma_images })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// The cyclotomic ring `ℤ[ζ_{4p}] = ℤ[x]/Φ_{4p}`.
    pub fn cyclotomic_ring(&self) -> &PolyQuot<Integers> {
        &self.cyclo
    }

    pub fn sigma(&self, a: &[i64]) -> Vec<i64> {
        let mut out = self.cyclo.zero();
        for (c, img) in a.iter().zip(&self.sigma_images) {
            if *c != 0 {
                for (o, v) in out.iter_mut().zip(img) {
                    *o += c * v;
                }
            }
        }
        out
    }

    pub fn embed(&self, a: Vec<i64>) -> (Vec<i64>, Vec<i64>) {
        (a, self.cyclo.zero())
    }

    pub fn zeta(&self) -> (Vec<i64>, Vec<i64>) {
        self.embed(self.cyclo.gen())
    }

    pub fn j(&self) -> (Vec<i64>, Vec<i64>) {
        (self.cyclo.zero(), self.cyclo.one())
    }
}

impl Ring for ZetaJ {
    type Elem = (Vec<i64>, Vec<i64>);

    fn zero(&self) -> Self::Elem {
        (self.cyclo.zero(), self.cyclo.zero())
    }
    fn one(&self) -> Self::Elem {
        self.from_int(1)
    }
    fn from_int(&self, n: i64) -> Self::Elem {
        self.embed(self.cyclo.from_int(n))
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (self.cyclo.add(&a.0, &b.0), self.cyclo.add(&a.1, &b.1))
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        (self.cyclo.neg(&a.0), self.cyclo.neg(&a.1))
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let r = &self.cyclo;
        let (al, be) = a;
        let (ga, de) = b;
        let first = r.sub(&r.mul(al, ga), &r.mul(be, &self.sigma(de)));
        let second = r.add(&r.mul(al, de), &r.mul(be, &self.sigma(ga)));
        (first, second)
    }
    fn descriptor(&self) -> CoefficientRing {
        CoefficientRing::ZetaJ { p: self.p }
    }
    fn render(&self, a: &Self::Elem) -> String {
        let (al, be) = a;
        match (self.cyclo.is_zero(al), self.cyclo.is_zero(be)) {
            (_, true) => self.cyclo.render(al),
            (true, false) => format!("({})j", self.cyclo.render(be)),
            (false, false) => format!("{} + ({})j", self.cyclo.render(al), self.cyclo.render(be)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lambda_relations() {
        let l = Lambda::new(7).unwrap();
        let x = l.x();
        let y = l.y();
        assert_eq!(l.pow(&x, 14), l.from_int(-1));
        assert_eq!(l.mul(&y, &y), l.from_int(-1));
        // y x y⁻¹ = x⁻¹, with y⁻¹ = −y
        let conj = l.mul(&l.mul(&y, &x), &l.neg(&y));
        assert_eq!(conj, l.monomial(-1, 0));
        for i in 0..l.dim() {
            let mut e = l.zero();
            e[i] = 1;
            assert_eq!(l.mul(&l.monomial(14, 0), &e), l.neg(&e));
        }
    }

    #[test]
    fn mod_norm_lift() {
        let m = ModNorm::new(GroupSpec::Dicyclic(14)).unwrap();
        let one = m.one();
        let lifted = m.lift(&one, 57).unwrap();
        assert_eq!(lifted.iter().sum::<i64>(), 57);
        assert_eq!(lifted[0], 2);
        assert_eq!(m.lift(&one, 1).unwrap(), m.group_ring().one());
        assert!(matches!(m.lift(&one, 2), Err(Error::CongruenceViolated(_))));
    }

    #[test]
    fn zeta_j_relations() {
        let r = ZetaJ::new(7).unwrap();
        let (z, j) = (r.zeta(), r.j());
        assert_eq!(r.mul(&j, &j), r.from_int(-1));
        assert_eq!(r.pow(&z, 28), r.one());
        assert_eq!(r.pow(&z, 14), r.from_int(-1));
        let zinv = r.pow(&z, 27);
        assert_eq!(r.mul(&r.mul(&j, &z), &r.neg(&j)), zinv);
    }
}
