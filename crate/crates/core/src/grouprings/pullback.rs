//! The ring homomorphisms of the two pullback squares
//!
//! ```text
//!   ℤQ_{8p} --a₂--> Λ              Λ --c₂--> ℤ[ζ_{4p}, j]
//!     |a₁           |b₂            |c₁          |d₂
//!   ℤD_{4p} --b₁--> F₂D_{4p}     ℤ[i,j] --d₁--> F_p[i,j]
//! ```

use crate::arith::require_odd_prime;
use crate::error::{Error, Result};
use crate::groups::{quotient_map, GroupHom, GroupSpec};

use super::group_ring::GroupRing;
use super::quaternion::QuaternionOrder;
use super::quotients::{Lambda, ZetaJ};
use super::ring::Ring;
use super::scalar::{Gf2, Integers, IntegersMod};

#[derive(Clone, Debug)]
pub struct PullbackMaps {
    p: u32,
    pub zq: GroupRing<Integers>,
    pub zd: GroupRing<Integers>,
    pub f2d: GroupRing<Gf2>,
    pub lambda: Lambda,
    pub zij: QuaternionOrder<Integers>,
    pub zeta_j: ZetaJ,
    pub fpij: QuaternionOrder<IntegersMod>,
    q_to_d: GroupHom,
}

impl PullbackMaps {
    pub fn new(p: u32) -> Result<Self> {
        require_odd_prime(p as i64)?;
        let q = GroupSpec::Dicyclic(2 * p);
        let d = GroupSpec::Dihedral(2 * p);
        Ok(PullbackMaps {
            p,
            zq: GroupRing::new(q, Integers)?,
            zd: GroupRing::new(d, Integers)?,
            f2d: GroupRing::new(d, Gf2)?,
            lambda: Lambda::new(p)?,
            zij: QuaternionOrder::new(Integers),
            zeta_j: ZetaJ::new(p)?,
            fpij: QuaternionOrder::new(IntegersMod::new(p as u64)),
            q_to_d: quotient_map(q, d, &d.generators())?,
        })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// `a₁ : ℤQ_{8p} → ℤD_{4p}`, `x ↦ x`, `y ↦ y`.
    pub fn a1(&self, e: &[i64]) -> Vec<i64> {
        self.zq.map_to(e, &self.zd, &self.q_to_d, |c| *c).expect("specs fixed at construction")
    }

    /// `a₂ : ℤQ_{8p} → Λ`, killing `x^{2p} + 1`.
    pub fn a2(&self, e: &[i64]) -> Vec<i64> {
        let mut out = self.lambda.zero();
        for (i, c) in e.iter().enumerate() {
            if *c != 0 {
                let [a, b, _] = self.zq.group().element(i).exponents();
                let m = self.lambda.monomial(a as i64, b);
                for (o, v) in out.iter_mut().zip(&m) {
                    *o += c * v;
                }
            }
        }
        out
    }

    /// `b₁ : ℤD_{4p} → F₂D_{4p}`, reduction mod 2.
    pub fn b1(&self, e: &[i64]) -> Vec<u8> {
        e.iter().map(|c| (c & 1) as u8).collect()
    }

    /// `b₂ : Λ → F₂D_{4p}`; the bases of `Λ` and `D_{4p}` share indexing.
    pub fn b2(&self, e: &[i64]) -> Vec<u8> {
        e.iter().map(|c| (c & 1) as u8).collect()
    }

    /// `c₁ : Λ → ℤ[i,j]`, `x ↦ i`, `y ↦ j`.
    pub fn c1(&self, e: &[i64]) -> [i64; 4] {
        let h = &self.zij;
        let (i, j) = (h.i(), h.j());
        let mut acc = h.zero();
        for (idx, c) in e.iter().enumerate() {
            if *c != 0 {
                let (a, b) = (idx / 2, idx % 2);
                let mut m = h.pow(&i, a as u64);
                if b == 1 {
                    m = h.mul(&m, &j);
                }
                acc = h.add(&acc, &h.scale(*c, &m));
            }
        }
        acc
    }

    /// `c₂ : Λ → ℤ[ζ_{4p}, j]`, `x ↦ ζ_{4p}`, `y ↦ j`.
    pub fn c2(&self, e: &[i64]) -> (Vec<i64>, Vec<i64>) {
        let cyc = self.zeta_j.cyclotomic_ring();
        let (mut al, mut be) = (cyc.zero(), cyc.zero());
        for (idx, c) in e.iter().enumerate() {
            if *c != 0 {
                let (a, b) = (idx / 2, idx % 2);
                let m = cyc.scale(*c, &cyc.monomial(a));
                if b == 0 {
                    al = cyc.add(&al, &m);
                } else {
                    be = cyc.add(&be, &m);
                }
            }
        }
        (al, be)
    }

    /// `d₁ : ℤ[i,j] → F_p[i,j]`, reduction mod p.
    pub fn d1(&self, q: &[i64; 4]) -> [u64; 4] {
        let f = self.fpij.base();
        std::array::from_fn(|k| f.from_int(q[k]))
    }

    /// `d₂ : ℤ[ζ_{4p}, j] → F_p[i,j]`, `ζ_{4p} ↦ i`, `j ↦ j`.
    pub fn d2(&self, e: &(Vec<i64>, Vec<i64>)) -> [u64; 4] {
        let h = &self.fpij;
        let cyc = self.zeta_j.cyclotomic_ring();
        let i = h.i();
        let ev = |v: &Vec<i64>| cyc.evaluate_in(v, h, |c| h.from_int(*c), &i);
        h.add(&ev(&e.0), &h.mul(&ev(&e.1), &h.j()))
    }

    /// Checks every map on all pairs of basis elements and both squares on
    /// every basis element.
    pub fn verify(&self) -> Result<()> {
        let n = self.zq.group().order();
        let basis: Vec<Vec<i64>> = (0..n).map(|i| self.zq.basis_idx(i)).collect();
        for u in &basis {
            for v in &basis {
                let uv = self.zq.mul(u, v);
                check(self.a1(&uv) == self.zd.mul(&self.a1(u), &self.a1(v)), "a₁")?;
                check(self.a2(&uv) == self.lambda.mul(&self.a2(u), &self.a2(v)), "a₂")?;
            }
            check(self.b1(&self.a1(u)) == self.b2(&self.a2(u)), "first square")?;
        }
        let lb: Vec<Vec<i64>> = (0..self.lambda.dim())
            .map(|i| {
                let mut e = self.lambda.zero();
                e[i] = 1;
                e
            })
            .collect();
        for u in &lb {
            for v in &lb {
                let uv = self.lambda.mul(u, v);
                check(self.b2(&uv) == self.f2d.mul(&self.b2(u), &self.b2(v)), "b₂")?;
                check(self.c1(&uv) == self.zij.mul(&self.c1(u), &self.c1(v)), "c₁")?;
                check(self.c2(&uv) == self.zeta_j.mul(&self.c2(u), &self.c2(v)), "c₂")?;
            }
            check(self.d1(&self.c1(u)) == self.d2(&self.c2(u)), "second square")?;
        }
        let zb: Vec<Vec<i64>> = (0..self.zd.group().order()).map(|i| self.zd.basis_idx(i)).collect();
        for u in &zb {
            for v in &zb {
                check(self.b1(&self.zd.mul(u, v)) == self.f2d.mul(&self.b1(u), &self.b1(v)), "b₁")?;
            }
        }
        let cyc = self.zeta_j.cyclotomic_ring();
        let zjb: Vec<(Vec<i64>, Vec<i64>)> = (0..cyc.degree())
            .flat_map(|k| {
                let m = cyc.monomial(k);
                [(m.clone(), cyc.zero()), (cyc.zero(), m)]
            })
            .collect();
        for u in &zjb {
            for v in &zjb {
                let lhs = self.d2(&self.zeta_j.mul(u, v));
                check(lhs == self.fpij.mul(&self.d2(u), &self.d2(v)), "d₂")?;
            }
        }
        let hb: Vec<[i64; 4]> = (0..4).map(|k| std::array::from_fn(|t| (t == k) as i64)).collect();
        for u in &hb {
            for v in &hb {
                let lhs = self.d1(&self.zij.mul(u, v));
                check(lhs == self.fpij.mul(&self.d1(u), &self.d1(v)), "d₁")?;
            }
        }
        Ok(())
    }
}

fn check(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Inconsistent(format!("{what} is not multiplicative")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn maps_are_homomorphisms() {
        for p in [3, 5, 7] {
            PullbackMaps::new(p).unwrap().verify().unwrap();
        }
    }

    #[test]
    fn sample_values() {
        let m = PullbackMaps::new(7).unwrap();
        let e = m.lambda.from_x_terms(&[(1, 0), (1, 4)]);
        assert_eq!(m.c1(&e), [2, 0, 0, 0]);
        let rel = m.lambda.from_x_terms(&[(1, 14), (1, 0)]);
        assert!(m.b2(&rel).iter().all(|c| *c == 0));
        assert_eq!(m.zij.norm(&[1, 2, 3, 4]), 30);
    }
}
