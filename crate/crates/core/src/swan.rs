//! Swan modules `(N, r)` over `Q_{8p}`: the closed-form stable-freeness test,
//! the patching unit `u_{(N,r)} ∈ F₂D_{4p}^×`, the invariants ρ₁ and ρ₂, and
//! the freeness verdict for `p = 7`.

use serde::{Deserialize, Serialize};

use crate::arith::{
    gcd, least_positive_inverse, legendre, modp, multiplicative_order, require_odd_prime, units_mod,
};
use crate::error::{Error, Result};
use crate::grouprings::poly::render_int_poly;
use crate::grouprings::{
    gf2_inverse, quotients::ModNorm, verify_inverse, Gf2, Gf2Algebra, GroupRing, MatrixRep, PolyQuot, Ring,
};
use crate::groups::{quotient_map, GroupSpec};
use crate::lambda_units;

/// A Swan module `(N, r)` over `Q_{8p}`; `r` is stored reduced mod `8p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SwanInput {
    p: u32,
    r: u64,
}

impl SwanInput {
    pub fn new(p: u32, r: i64) -> Result<Self> {
        require_odd_prime(p as i64)?;
        let n = 8 * p as i64;
        if gcd(r, n) != 1 {
            return Err(Error::NotCoprime { value: r, modulus: n });
        }
        Ok(SwanInput { p, r: modp(r, n) as u64 })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    /// `|Q_{8p}| = 8p`.
    pub fn group_order(&self) -> u64 {
        8 * self.p as u64
    }
}

/// Stable freeness by the closed form in `p mod 8`, `ord_p(2)`, the Legendre
/// symbol `(r/p)` and `ψ(r) = r mod 4 ∈ {±1}`.
pub fn is_stably_free(input: &SwanInput) -> bool {
    let (p, r) = (input.p as i64, input.r as i64);
    if !matches!(r % 8, 1 | 7) {
        return false;
    }
    let leg = legendre(r, p);
    let psi = if r % 4 == 1 { 1 } else { -1 };
    let ord_even = multiplicative_order(2, p).map(|o| o % 2 == 0).unwrap_or(false);
    match p % 8 {
        7 => true,
        1 if !ord_even => true,
        5 | 1 => leg == 1,
        3 => psi * leg == 1,
        _ => unreachable!("odd prime residues mod 8"),
    }
}

/// `SF(Q_{8p})` as sorted residues mod `8p`.
pub fn sf_set(p: u32) -> Result<Vec<u64>> {
    require_odd_prime(p as i64)?;
    let n = 8 * p as i64;
    let set: Vec<u64> = units_mod(n)
        .into_iter()
        .filter(|&r| is_stably_free(&SwanInput { p, r: r as u64 }))
        .map(|r| r as u64)
        .collect();
    if !is_subgroup(&set, n as u64) {
        return Err(Error::Inconsistent("SF is not closed under multiplication".into()));
    }
    Ok(set)
}

pub(crate) fn is_subgroup(set: &[u64], n: u64) -> bool {
    set.contains(&1)
        && set.iter().all(|a| set.iter().all(|b| set.contains(&((a * b) % n))))
}

/// `u_r = 1 + x + ⋯ + x^k + y + xy + ⋯ + x^{k−1}y ∈ ℤD_{2n}/N` (`r = 2k+1`)
/// together with its inverse from the closed formula, the product checked.
pub fn dihedral_unit(n: u32, r: i64) -> Result<(Vec<i64>, Vec<i64>)> {
    let order = 2 * n as i64;
    if r < 1 || gcd(r, order) != 1 {
        return Err(Error::NotCoprime { value: r, modulus: order });
    }
    let ctx = ModNorm::new(GroupSpec::Dihedral(n))?;
    let zd = ctx.group_ring();
    let k = (r - 1) / 2;
    let mut terms: Vec<(i64, [i64; 3])> = (0..=k).map(|a| (1, [a, 0, 0])).collect();
    terms.extend((0..k).map(|a| (1, [a, 1, 0])));
    let u = zd.from_terms(&terms)?;
    let s = least_positive_inverse(r, order)?;
    let m = (s - 1) / 2;
    let mut inv_terms = vec![(1, [0, 0, 0])];
    for i in 0..m {
        let e = (2 * k + 1) * i + 2 * k;
        inv_terms.push((1, [e + 1, 0, 0]));
        inv_terms.push((1, [e, 1, 0]));
    }
    let inv = zd.from_terms(&inv_terms)?;
    let (u, inv) = (ctx.reduce(&u), ctx.reduce(&inv));
    verify_inverse(&ctx, &u, &inv)?;
    Ok((u, inv))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatchingData {
    pub s: u64,
    /// `(rs − 1)/|D_{4p}|`.
    pub t: u64,
    pub m: u64,
    /// Coefficients over GF(2) on `D_{4p}` in enumeration order.
    pub u: Vec<u8>,
}

/// The patching unit for the least positive `s` with `rs ≡ 1 mod 8p`.
pub fn patching_rep(input: &SwanInput) -> Result<PatchingData> {
    let s = least_positive_inverse(input.r as i64, input.group_order() as i64)? as u64;
    patching_rep_with(input, s)
}

/// The patching unit for a chosen `s ≥ 1` with `rs ≡ 1 mod 8p`:
/// `u = 1 + (1 + x^r + ⋯ + x^{r(m−1)}) x^{r−1}(x + y) + tN`.
pub fn patching_rep_with(input: &SwanInput, s: u64) -> Result<PatchingData> {
    let (r, n) = (input.r as i64, input.group_order() as i64);
    if s == 0 || modp(r * s as i64, n) != 1 {
        return Err(Error::CongruenceViolated(format!("{r}·{s} ≢ 1 mod {n}")));
    }
    let dihedral_order = n / 2;
    let t = ((r * s as i64 - 1) / dihedral_order) as u64;
    let m = (s - 1) / 2;
    let f2d = GroupRing::new(GroupSpec::Dihedral(2 * input.p), Gf2)?;
    let mut terms = vec![(1, [0, 0, 0])];
    for i in 0..m as i64 {
        let e = r * i + r - 1;
        terms.push((1, [e + 1, 0, 0]));
        terms.push((1, [e, 1, 0]));
    }
    let mut u = f2d.from_terms(&terms)?;
    if t % 2 == 1 {
        u = f2d.add(&u, &f2d.norm_element());
    }
    if gf2_inverse(&f2d, &u).is_none() {
        return Err(Error::NotAUnit(f2d.render(&u)));
    }
    Ok(PatchingData { s, t, m, u })
}

/// ρ₁: push `u` to `F₂V` (`V` the Klein four group); 0 if the image is a
/// group element, 1 if it lies in `V·(1 + x + y)`.
pub fn rho1(p: u32, u: &[u8]) -> Result<u8> {
    require_odd_prime(p as i64)?;
    let d = GroupSpec::Dihedral(2 * p);
    let v = GroupSpec::KleinFour;
    let f2d = GroupRing::new(d, Gf2)?;
    let f2v = GroupRing::new(v, Gf2)?;
    let f = quotient_map(d, v, &v.generators())?;
    let img = f2d.map_to(u, &f2v, &f, |c| *c)?;
    let units: Vec<Vec<u8>> =
        f2v.all_elements().into_iter().filter(|e| gf2_inverse(&f2v, e).is_some()).collect();
    debug_assert_eq!(units.len(), 8);
    if !units.contains(&img) {
        return Err(Error::NotAUnit(f2v.render(&img)));
    }
    let group_elements: Vec<Vec<u8>> = (0..4).map(|i| f2v.basis_idx(i)).collect();
    let twist = f2v.from_terms(&[(1, [0, 0, 0]), (1, [1, 0, 0]), (1, [0, 1, 0])])?;
    if group_elements.contains(&img) {
        Ok(0)
    } else if group_elements.iter().any(|g| f2v.mul(g, &twist) == img) {
        Ok(1)
    } else {
        Err(Error::Inconsistent("unit of F2V outside both cosets".into()))
    }
}

/// `F = F₂[λ]/(λ³ + λ² + 1)`.
pub type Field8 = PolyQuot<Gf2>;
/// `F[C₂] = F[t]/(t² − 1)`.
pub type GroupAlgebraC2 = PolyQuot<Field8>;

/// The isomorphism `F₂[z]/(m̄) → F[C₂]`, `z ↦ λt`, for `p = 7`, and the
/// quotient `F[C₂]^× → ℤ/2`.
#[derive(Clone, Debug)]
pub struct Rho2Map {
    rep: MatrixRep,
    field: Field8,
    fc2: GroupAlgebraC2,
    point: Vec<Vec<u8>>,
}

impl Rho2Map {
    pub fn new(p: u32) -> Result<Self> {
        if p != 7 {
            return Err(Error::OutOfScope(format!("ρ₂ is implemented for p = 7, not p = {p}")));
        }
        let rep = MatrixRep::new(p)?;
        let minpoly = crate::grouprings::poly::real_cyclotomic_minpoly(p as u64);
        let field = PolyQuot::from_int_modulus(Gf2, &crate::grouprings::poly::poly_mod(&minpoly, 2), "λ")?;
        let fc2 = PolyQuot::new(field.clone(), vec![field.from_int(-1), field.zero(), field.one()], "t")?;
        let point = fc2.mul(&fc2.from_base(field.gen()), &fc2.gen());
        let map = Rho2Map { rep, field, fc2, point };
        map.validate()?;
        Ok(map)
    }

    /// `m̄(λt) = 0` and the induced map is injective on all 64 elements.
    fn validate(&self) -> Result<()> {
        let src = self.rep.field();
        let m: Vec<i64> = src.modulus().iter().map(|c| *c as i64).collect();
        let at = crate::grouprings::poly::eval_int_poly(&self.fc2, &m, &self.point);
        if !self.fc2.is_zero(&at) {
            return Err(Error::Inconsistent("λt is not a root of the sextic".into()));
        }
        let mut images: Vec<Vec<u8>> =
            src.all_elements().iter().map(|e| self.fc2.gf2_coords(&self.substitute(e))).collect();
        images.sort();
        images.dedup();
        if images.len() != 1 << src.gf2_dim() {
            return Err(Error::Inconsistent("z ↦ λt is not injective".into()));
        }
        Ok(())
    }

    pub fn matrix_rep(&self) -> &MatrixRep {
        &self.rep
    }

    pub fn field(&self) -> &Field8 {
        &self.field
    }

    pub fn group_algebra(&self) -> &GroupAlgebraC2 {
        &self.fc2
    }

    /// Image of a polynomial in `z` under `z ↦ λt`.
    pub fn substitute(&self, d: &[u8]) -> Vec<Vec<u8>> {
        let fc2 = &self.fc2;
        self.rep.field().evaluate_in(d, fc2, |c| fc2.from_int(*c as i64), &self.point)
    }

    /// Class of `a + bt ∈ F[C₂]^×`: the coordinate sum of `b/(a+b)` mod 2.
    pub fn class_of(&self, raw: &[Vec<u8>]) -> Result<u8> {
        let f = &self.field;
        let (a, b) = (&raw[0], &raw[1]);
        let sum = f.add(a, b);
        let inv = gf2_inverse(f, &sum).ok_or_else(|| Error::NotAUnit(self.fc2.render(&raw.to_vec())))?;
        let c = f.mul(b, &inv);
        Ok(c.iter().fold(0, |acc, x| acc ^ x))
    }

    pub fn evaluate(&self, u: &[u8]) -> Result<Rho2Value> {
        let det = self.rep.det(u)?;
        let raw = self.substitute(&det);
        let class = self.class_of(&raw)?;
        Ok(Rho2Value { det, raw, class })
    }

    pub fn render_raw(&self, raw: &[Vec<u8>]) -> String {
        self.fc2.render(&raw.to_vec())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rho2Value {
    /// Determinant in `F₂[z]/(m̄)`, coefficients of `1, z, …`.
    pub det: Vec<u8>,
    /// `[a, b]` for `a + bt ∈ F[C₂]`, each in the basis `1, λ, λ²`.
    pub raw: Vec<Vec<u8>>,
    pub class: u8,
}

pub fn rho2(u: &[u8], p: u32) -> Result<Rho2Value> {
    Rho2Map::new(p)?.evaluate(u)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RhoValues {
    pub rho1: u8,
    pub rho2_raw: Option<Vec<Vec<u8>>>,
    pub rho2_class: Option<u8>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FreeStatus {
    Free,
    NotFree,
    OutOfScope,
}

impl FreeStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            FreeStatus::Free => "yes",
            FreeStatus::NotFree => "NO",
            FreeStatus::OutOfScope => "out of scope",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwanVerdict {
    pub input: SwanInput,
    pub stably_free: bool,
    pub rho: RhoValues,
    pub free: FreeStatus,
    pub patching: PatchingData,
    pub diagnostics: Vec<String>,
}

/// Stable JSON shape of a verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub p: u32,
    pub r: u64,
    pub stably_free: bool,
    pub rho1: u8,
    pub rho2_raw: Option<Vec<Vec<u8>>>,
    pub rho2_raw_text: Option<String>,
    pub rho2_class: Option<u8>,
    pub free: FreeStatus,
    pub s: u64,
    pub t: u64,
    pub m: u64,
}

impl SwanVerdict {
    pub fn record(&self) -> VerdictRecord {
        let text = self.rho.rho2_raw.as_ref().and_then(|raw| {
            Rho2Map::new(self.input.p).ok().map(|m| m.render_raw(raw))
        });
        VerdictRecord {
            p: self.input.p,
            r: self.input.r,
            stably_free: self.stably_free,
            rho1: self.rho.rho1,
            rho2_raw: self.rho.rho2_raw.clone(),
            rho2_raw_text: text,
            rho2_class: self.rho.rho2_class,
            free: self.free,
            s: self.patching.s,
            t: self.patching.t,
            m: self.patching.m,
        }
    }
}

/// The freeness decision. Not stably free implies not free; for `p ≠ 7` the
/// answer is out of scope; for `p = 7` the module is free iff `ρ₂(u)` lies in
/// `ρ₂(Λ^×)`, with `ρ₁(u) = 0` asserted for stably free inputs.
pub fn is_free(input: &SwanInput) -> Result<SwanVerdict> {
    let image = if input.p == 7 { Some(lambda_units::rho2_lambda_image(7)?) } else { None };
    verdict_with_image(input, image.as_deref())
}

pub(crate) fn verdict_with_image(input: &SwanInput, lambda_image: Option<&[u8]>) -> Result<SwanVerdict> {
    let stably_free = is_stably_free(input);
    let patching = patching_rep(input)?;
    let r1 = rho1(input.p, &patching.u)?;
    let mut diagnostics = vec![format!(
        "s = {}, t = {}, m = {} (rs = 1 + t·{})",
        patching.s,
        patching.t,
        patching.m,
        4 * input.p
    )];
    let (rho, free) = if input.p == 7 {
        let value = Rho2Map::new(7)?.evaluate(&patching.u)?;
        diagnostics.push(format!("det = {}", render_int_poly(
            &value.det.iter().map(|c| *c as i64).collect::<Vec<_>>(),
            "z"
        )));
        let rho = RhoValues { rho1: r1, rho2_raw: Some(value.raw.clone()), rho2_class: Some(value.class) };
        let free = if !stably_free {
            FreeStatus::NotFree
        } else {
            if r1 != 0 {
                return Err(Error::Inconsistent(format!("ρ₁ = 1 for stably free r = {}", input.r)));
            }
            let image = lambda_image.ok_or_else(|| Error::Inconsistent("missing ρ₂(Λ^×)".into()))?;
            if image.contains(&value.class) {
                FreeStatus::Free
            } else {
                FreeStatus::NotFree
            }
        };
        (rho, free)
    } else {
        let rho = RhoValues { rho1: r1, rho2_raw: None, rho2_class: None };
        let free = if stably_free { FreeStatus::OutOfScope } else { FreeStatus::NotFree };
        (rho, free)
    };
    Ok(SwanVerdict { input: *input, stably_free, rho, free, patching, diagnostics })
}

/// One verdict per residue of `(ℤ/8p)^×`.
pub fn table(p: u32) -> Result<Vec<SwanVerdict>> {
    require_odd_prime(p as i64)?;
    let image = if p == 7 { Some(lambda_units::rho2_lambda_image(7)?) } else { None };
    units_mod(8 * p as i64)
        .into_iter()
        .map(|r| verdict_with_image(&SwanInput::new(p, r)?, image.as_deref()))
        .collect()
}

/// `FF(Q₅₆)`: the free Swan modules among the stably free ones.
pub fn ff_set(p: u32) -> Result<Vec<u64>> {
    if p != 7 {
        return Err(Error::OutOfScope(format!("freeness is decided for p = 7 only, not p = {p}")));
    }
    let image = lambda_units::rho2_lambda_image(7)?;
    let sf = sf_set(7)?;
    let mut ff = Vec::new();
    for &r in &sf {
        let v = verdict_with_image(&SwanInput::new(7, r as i64)?, Some(&image))?;
        if v.free == FreeStatus::Free {
            ff.push(r);
        }
    }
    if !is_subgroup(&ff, 56) || sf.len() != 2 * ff.len() {
        return Err(Error::Inconsistent(format!("FF = {ff:?} is not an index-2 subgroup of SF")));
    }
    Ok(ff)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn input(p: u32, r: i64) -> SwanInput {
        SwanInput::new(p, r).unwrap()
    }

    #[test]
    fn stably_free_examples() {
        assert!(is_stably_free(&input(7, 15)));
        assert!(!is_stably_free(&input(5, 7)));
        assert!(!is_stably_free(&input(3, 7)));
        for p in [3, 5, 7, 11, 13, 17, 19, 23] {
            assert!(is_stably_free(&input(p, 1)));
        }
        assert!(matches!(SwanInput::new(7, 14), Err(Error::NotCoprime { .. })));
    }

    #[test]
    fn sf_for_seven() {
        let expect: Vec<u64> = {
            let mut v: Vec<u64> =
                [1u64, 9, 15, 17, 23, 25].iter().flat_map(|r| [*r, 56 - r]).collect();
            v.sort();
            v
        };
        assert_eq!(sf_set(7).unwrap(), expect);
        assert!(!sf_set(5).unwrap().contains(&7));
    }

    #[test]
    fn dihedral_units() {
        let (u, inv) = dihedral_unit(14, 1).unwrap();
        let ctx = ModNorm::new(GroupSpec::Dihedral(14)).unwrap();
        assert_eq!(u, ctx.one());
        assert_eq!(inv, ctx.one());
        let (u, _) = dihedral_unit(14, 15).unwrap();
        assert_eq!(ctx.augmentation_mod(&u), 15);
        assert!(dihedral_unit(14, 7).is_err());
    }

    #[test]
    fn patching_examples() {
        let f2d = GroupRing::new(GroupSpec::Dihedral(14), Gf2).unwrap();
        let d = patching_rep(&input(7, 15)).unwrap();
        assert_eq!((d.s, d.t, d.m), (15, 8, 7));
        let mut terms = vec![(1, [0, 0, 0])];
        for a in 0..7 {
            terms.push((1, [a + 1, 0, 0]));
            terms.push((1, [a, 1, 0]));
        }
        assert_eq!(d.u, f2d.from_terms(&terms).unwrap());
        let d = patching_rep(&input(7, 9)).unwrap();
        assert_eq!((d.s, d.t), (25, 8));
        let expect = f2d.add(
            &f2d.norm_element(),
            &f2d.from_terms(&[(1, [5, 0, 0]), (1, [4, 1, 0]), (1, [13, 1, 0])]).unwrap(),
        );
        assert_eq!(d.u, expect);
        let d = patching_rep(&input(7, 1)).unwrap();
        assert_eq!((d.s, d.t, d.m), (1, 0, 0));
        assert_eq!(d.u, f2d.one());
    }

    #[test]
    fn rho_values() {
        let u15 = patching_rep(&input(7, 15)).unwrap().u;
        let u3 = patching_rep(&input(7, 3)).unwrap().u;
        assert_eq!(rho1(7, &u15).unwrap(), 0);
        assert_eq!(rho1(7, &u3).unwrap(), 1);
        let map = Rho2Map::new(7).unwrap();
        let v15 = map.evaluate(&u15).unwrap();
        assert_eq!(v15.det, vec![0, 1, 0, 0, 0, 1]);
        assert_eq!(map.render_raw(&v15.raw), "t");
        assert_eq!(v15.class, 1);
        let v9 = map.evaluate(&patching_rep(&input(7, 9)).unwrap().u).unwrap();
        assert_eq!(v9.det, vec![1, 1, 0, 1, 0, 1]);
        assert_eq!(map.render_raw(&v9.raw), "1 + (λ^2)t");
        assert_eq!(v9.class, 0);
        let one = map.matrix_rep().group_ring().one();
        assert_eq!(map.evaluate(&one).unwrap().class, 0);
        assert!(Rho2Map::new(5).is_err());
    }

    #[test]
    fn freeness() {
        let v = is_free(&input(7, 15)).unwrap();
        assert!(v.stably_free);
        assert_eq!(v.free, FreeStatus::NotFree);
        assert_eq!(is_free(&input(7, 9)).unwrap().free, FreeStatus::Free);
        assert_eq!(is_free(&input(7, 25)).unwrap().free, FreeStatus::Free);
        let v = is_free(&input(7, 3)).unwrap();
        assert!(!v.stably_free);
        assert_eq!(v.free, FreeStatus::NotFree);
        assert_eq!(is_free(&input(5, 1)).unwrap().free, FreeStatus::OutOfScope);
        let mut expect: Vec<u64> = [1u64, 9, 25].iter().flat_map(|r| [*r, 56 - r]).collect();
        expect.sort();
        assert_eq!(ff_set(7).unwrap(), expect);
    }
}
