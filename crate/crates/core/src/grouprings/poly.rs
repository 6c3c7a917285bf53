//! Dense integer polynomials, cyclotomic and real-cyclotomic minimal
//! polynomials, and quotient rings `R[v]/(m(v))` for monic `m`.

use crate::error::{Error, Result};

use super::ring::{CoefficientRing, Gf2Algebra, Ring};

/// Integer polynomial, constant term first, no trailing zeros (zero is `[]`).
pub type IntPoly = Vec<i64>;

pub fn trim(mut a: IntPoly) -> IntPoly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn poly_add(a: &[i64], b: &[i64]) -> IntPoly {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    trim(out)
}

pub fn poly_scale(a: &[i64], k: i64) -> IntPoly {
    trim(a.iter().map(|c| c * k).collect())
}

pub fn poly_mul(a: &[i64], b: &[i64]) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// Division with remainder by a monic polynomial.
pub fn poly_divrem_monic(a: &[i64], m: &[i64]) -> Result<(IntPoly, IntPoly)> {
    let m = trim(m.to_vec());
    if m.last() != Some(&1) {
        return Err(Error::InvalidParameter("divisor must be monic".into()));
    }
    let d = m.len() - 1;
    let mut rem = trim(a.to_vec());
    if rem.len() <= d {
        return Ok((Vec::new(), rem));
    }
    let mut quot = vec![0; rem.len() - d];
    for k in (d..rem.len()).rev() {
        let c = rem[k];
        if c == 0 {
            continue;
        }
        quot[k - d] = c;
        for (i, mi) in m.iter().enumerate() {
            rem[k - d + i] -= c * mi;
        }
    }
    rem.truncate(d);
    Ok((trim(quot), trim(rem)))
}

/// The cyclotomic polynomial `Φ_n`, computed by dividing `x^n − 1` by `Φ_d`
/// for the proper divisors `d` of `n`.
pub fn cyclotomic(n: u64) -> IntPoly {
    assert!(n >= 1);
    let mut num = vec![0; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in crate::arith::divisors(n) {
        if d == n {
            continue;
        }
        let (q, r) = poly_divrem_monic(&num, &cyclotomic(d)).expect("cyclotomic is monic");
        debug_assert!(r.is_empty());
        num = q;
    }
    num
}

/// Minimal polynomial of `ζ_n + ζ_n⁻¹` for `n ≥ 3`, obtained by rewriting the
/// palindromic `Φ_n(x)/x^d` in the variable `z = x + x⁻¹`.
pub fn real_cyclotomic_minpoly(n: u64) -> IntPoly {
    assert!(n >= 3);
    let phi = cyclotomic(n);
    let d = (phi.len() - 1) / 2;
    // T_k(z) = x^k + x^{-k} as a polynomial in z.
    let mut cheb: Vec<IntPoly> = vec![vec![2], vec![0, 1]];
    for k in 2..=d {
        let next = poly_add(&poly_mul(&[0, 1], &cheb[k - 1]), &poly_scale(&cheb[k - 2], -1));
        cheb.push(next);
    }
    let mut out = vec![phi[d]];
    for k in 1..=d {
        out = poly_add(&out, &poly_scale(&cheb[k], phi[d + k]));
    }
    out
}

/// Reduction of every coefficient into `[0, m)`.
pub fn poly_mod(a: &[i64], m: i64) -> IntPoly {
    trim(a.iter().map(|c| c.rem_euclid(m)).collect())
}

/// Evaluates an integer polynomial at a ring element by Horner's rule.
pub fn eval_int_poly<R: Ring>(ring: &R, poly: &[i64], point: &R::Elem) -> R::Elem {
    poly.iter()
        .rev()
        .fold(ring.zero(), |acc, c| ring.add(&ring.mul(&acc, point), &ring.from_int(*c)))
}

pub fn render_int_poly(poly: &[i64], var: &str) -> String {
    let terms: Vec<String> = poly
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| **c != 0)
        .map(|(k, c)| {
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            match (*c, k) {
                (c, 0) => c.to_string(),
                (1, _) => mono,
                (-1, _) => format!("-{mono}"),
                (c, _) => format!("{c}{mono}"),
            }
        })
        .collect();
    if terms.is_empty() {
        return "0".into();
    }
    terms.join(" + ").replace("+ -", "- ")
}

/// The quotient ring `base[v]/(modulus)`; elements are coefficient vectors of
/// length `deg(modulus)`, constant term first.
#[derive(Clone, Debug)]
pub struct PolyQuot<R: Ring> {
    base: R,
    modulus: Vec<R::Elem>,
    var: String,
}

impl<R: Ring> PolyQuot<R> {
    pub fn new(base: R, modulus: Vec<R::Elem>, var: &str) -> Result<Self> {
        if modulus.len() < 2 || !base.is_one(modulus.last().unwrap()) {
            return Err(Error::InvalidParameter("modulus must be monic of positive degree".into()));
        }
        Ok(PolyQuot { base, modulus, var: var.to_string() })
    }

    /// Quotient by an integer polynomial, coefficients mapped through `from_int`.
    pub fn from_int_modulus(base: R, modulus: &[i64], var: &str) -> Result<Self> {
        let m = modulus.iter().map(|c| base.from_int(*c)).collect();
        Self::new(base, m, var)
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[R::Elem] {
        &self.modulus
    }

    pub fn var_name(&self) -> &str {
        &self.var
    }

    /// The class of the variable.
    pub fn gen(&self) -> Vec<R::Elem> {
        self.monomial(1)
    }

    pub fn monomial(&self, k: usize) -> Vec<R::Elem> {
        let mut v = vec![self.base.zero(); k + 1];
        v[k] = self.base.one();
        self.reduce(v)
    }

    pub fn from_base(&self, c: R::Elem) -> Vec<R::Elem> {
        let mut v = vec![self.base.zero(); self.degree()];
        v[0] = c;
        v
    }

    /// Reduces an arbitrary-length coefficient vector modulo the modulus.
    pub fn reduce(&self, mut v: Vec<R::Elem>) -> Vec<R::Elem> {
        let d = self.degree();
        if v.len() > d {
            for k in (d..v.len()).rev() {
                let c = v[k].clone();
                if self.base.is_zero(&c) {
                    continue;
                }
                for i in 0..d {
                    let t = self.base.mul(&c, &self.modulus[i]);
                    v[k - d + i] = self.base.sub(&v[k - d + i], &t);
                }
            }
            v.truncate(d);
        }
        v.resize(d, self.base.zero());
        v
    }

    pub fn from_coeffs(&self, coeffs: Vec<R::Elem>) -> Vec<R::Elem> {
        self.reduce(coeffs)
    }

    pub fn from_int_coeffs(&self, coeffs: &[i64]) -> Vec<R::Elem> {
        self.reduce(coeffs.iter().map(|c| self.base.from_int(*c)).collect())
    }

    /// Evaluates `a` (as a polynomial in the variable) at `point` of `target`,
    /// mapping coefficients through `coeff_map`.
    pub fn evaluate_in<S: Ring>(
        &self,
        a: &[R::Elem],
        target: &S,
        coeff_map: impl Fn(&R::Elem) -> S::Elem,
        point: &S::Elem,
    ) -> S::Elem {
        a.iter()
            .rev()
            .fold(target.zero(), |acc, c| target.add(&target.mul(&acc, point), &coeff_map(c)))
    }

    /// Substitutes `point` for the variable inside this same ring.
    pub fn compose(&self, a: &[R::Elem], point: &Vec<R::Elem>) -> Vec<R::Elem> {
        self.evaluate_in(a, self, |c| self.from_base(c.clone()), point)
    }
}

impl<R: Ring> Ring for PolyQuot<R> {
    type Elem = Vec<R::Elem>;

    fn zero(&self) -> Self::Elem {
        vec![self.base.zero(); self.degree()]
    }
    fn one(&self) -> Self::Elem {
        self.from_base(self.base.one())
    }
    fn from_int(&self, n: i64) -> Self::Elem {
        self.from_base(self.base.from_int(n))
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.iter().zip(b).map(|(x, y)| self.base.add(x, y)).collect()
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.iter().map(|x| self.base.neg(x)).collect()
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let d = self.degree();
        let mut prod = vec![self.base.zero(); 2 * d - 1];
        for (i, x) in a.iter().enumerate() {
            if self.base.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                let t = self.base.mul(x, y);
                prod[i + j] = self.base.add(&prod[i + j], &t);
            }
        }
        self.reduce(prod)
    }
    fn descriptor(&self) -> CoefficientRing {
        CoefficientRing::PolyQuot {
            base: Box::new(self.base.descriptor()),
            variable: self.var.clone(),
            modulus: self.modulus.iter().map(|c| self.base.render(c)).collect(),
        }
    }
    fn render(&self, a: &Self::Elem) -> String {
        let terms: Vec<String> = a
            .iter()
            .enumerate()
            .filter(|(_, c)| !self.base.is_zero(c))
            .map(|(k, c)| {
                let mono = match k {
                    0 => String::new(),
                    1 => self.var.clone(),
                    _ => format!("{}^{k}", self.var),
                };
                let coeff = self.base.render(c);
                if k == 0 {
                    coeff
                } else if self.base.is_one(c) {
                    mono
                } else if coeff.parse::<i64>().is_err() {
                    format!("({coeff}){mono}")
                } else {
                    format!("{coeff}{mono}")
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

impl<R: Gf2Algebra> Gf2Algebra for PolyQuot<R> {
    fn gf2_dim(&self) -> usize {
        self.degree() * self.base.gf2_dim()
    }
    fn gf2_coords(&self, a: &Self::Elem) -> Vec<u8> {
        a.iter().flat_map(|c| self.base.gf2_coords(c)).collect()
    }
    fn from_gf2_coords(&self, bits: &[u8]) -> Self::Elem {
        bits.chunks(self.base.gf2_dim()).map(|ch| self.base.from_gf2_coords(ch)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::super::scalar::{Gf2, Integers};
    use super::*;

    #[test]
    fn cyclotomic_values() {
        assert_eq!(cyclotomic(1), vec![-1, 1]);
        assert_eq!(cyclotomic(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic(7), vec![1; 7]);
        // Φ_28(x) = Φ_7(-x^2)
        let phi28 = cyclotomic(28);
        let expect: Vec<i64> =
            (0..=12).map(|k| if k % 2 == 0 { if (k / 2) % 2 == 0 { 1 } else { -1 } } else { 0 }).collect();
        assert_eq!(phi28, expect);
        assert_eq!(cyclotomic(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn real_minpolys() {
        assert_eq!(real_cyclotomic_minpoly(7), vec![-1, -2, 1, 1]);
        assert_eq!(real_cyclotomic_minpoly(14), vec![1, -2, -1, 1]);
        assert_eq!(real_cyclotomic_minpoly(5), vec![-1, 1, 1]);
        let prod = poly_mul(&real_cyclotomic_minpoly(7), &real_cyclotomic_minpoly(14));
        assert_eq!(prod, vec![-1, 0, 6, 0, -5, 0, 1]);
        assert_eq!(poly_mod(&prod, 2), vec![1, 0, 0, 0, 1, 0, 1]);
    }

    #[test]
    fn divrem_roundtrip() {
        let a = vec![3, -1, 4, 1, -5, 9, 2];
        let m = vec![1, 0, 1];
        let (q, r) = poly_divrem_monic(&a, &m).unwrap();
        assert_eq!(poly_add(&poly_mul(&q, &m), &r), a);
        assert!(poly_divrem_monic(&a, &[1, 2]).is_err());
    }

    #[test]
    fn quotient_arithmetic() {
        let zi = PolyQuot::from_int_modulus(Integers, &[1, 0, 1], "i").unwrap();
        let i = zi.gen();
        assert_eq!(zi.mul(&i, &i), zi.from_int(-1));
        assert_eq!(zi.render(&zi.add(&i, &zi.one())), "1 + i");
        let f = PolyQuot::from_int_modulus(Gf2, &[1, 0, 1, 1], "λ").unwrap();
        let l = f.gen();
        assert_eq!(f.pow(&l, 7), f.one());
        assert_eq!(f.all_elements().len(), 8);
    }
}
