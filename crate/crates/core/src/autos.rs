//! Automorphisms of `C_p ⋊ Q16`: enumeration of `Aut`, `Inn` and `Out`,
//! the map ψ₄ through its CRT splitting, ψ_k images, and the recorded
//! class-group fixtures.

use std::collections::{BTreeSet, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::arith::{crt, gcd, prime_factors, require_odd_prime, units_mod};
use crate::error::{Error, Result};
use crate::groups::{Group, GroupElement, GroupSpec};

/// Largest prime for which the exhaustive enumeration is run.
pub const MAX_EXHAUSTIVE_P: u32 = 19;

/// `θ_{i,j,k,ℓ} : x ↦ z^k x^i, y ↦ x^{2j} y, z ↦ z^ℓ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AutoParams {
    pub i: u32,
    pub j: u32,
    pub k: u32,
    pub l: u32,
}

impl AutoParams {
    pub fn new(i: u32, j: u32, k: u32, l: u32) -> Self {
        AutoParams { i, j, k, l }
    }

    pub fn identity() -> Self {
        AutoParams::new(1, 0, 0, 1)
    }

    pub fn validate(&self, p: u32) -> Result<()> {
        let ok = self.i < 8 && self.i % 2 == 1 && self.j < 4 && self.k < p && self.l > 0 && self.l < p;
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!("automorphism parameters {self:?} out of range for p = {p}")))
        }
    }
}

/// An automorphism stored as the image index of every group element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Automorphism {
    images: Vec<u32>,
}

impl Automorphism {
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply_idx(&self, g: usize) -> usize {
        self.images[g] as usize
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism { images: other.images.iter().map(|&g| self.images[g as usize]).collect() }
    }

    pub fn inverse(&self) -> Automorphism {
        let mut inv = vec![0; self.images.len()];
        for (g, &h) in self.images.iter().enumerate() {
            inv[h as usize] = g as u32;
        }
        Automorphism { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(g, &h)| g == h as usize)
    }
}

fn pow_idx(group: &Group, g: usize, e: u32) -> usize {
    (0..e).fold(0, |acc, _| group.mul_idx(acc, g))
}

/// Checks the defining relations on candidate images of `x, y, z` and
/// extends them to a bijection.
pub fn auto_from_images(group: &Group, x: usize, y: usize, z: usize) -> Result<Automorphism> {
    let GroupSpec::QSemidirect(p) = group.spec() else {
        return Err(Error::InvalidSpec(format!("{} is not a semidirect product C_p ⋊ Q16", group.spec())));
    };
    let conj = |g: usize, h: usize| group.mul_idx(group.mul_idx(g, h), group.inv_idx(g));
    let relations = [
        ("x^8 = 1", pow_idx(group, x, 8) == 0),
        ("y^2 = x^4", pow_idx(group, y, 2) == pow_idx(group, x, 4)),
        ("y x y^-1 = x^-1", conj(y, x) == group.inv_idx(x)),
        ("z^p = 1", pow_idx(group, z, p) == 0),
        ("x z x^-1 = z^-1", conj(x, z) == group.inv_idx(z)),
        ("y z y^-1 = z", conj(y, z) == z),
    ];
    if let Some((name, _)) = relations.iter().find(|(_, ok)| !ok) {
        return Err(Error::RelationViolated(format!(
            "images ({}, {}, {}) violate {name}",
            group.element(x),
            group.element(y),
            group.element(z)
        )));
    }
    let images: Vec<u32> = group
        .elements()
        .iter()
        .map(|g| {
            let [a, b, c] = g.exponents();
            let w = group.mul_idx(pow_idx(group, x, a), pow_idx(group, y, b));
            group.mul_idx(w, pow_idx(group, z, c)) as u32
        })
        .collect();
    let distinct: HashSet<u32> = images.iter().copied().collect();
    if distinct.len() != images.len() {
        return Err(Error::RelationViolated("images do not generate the group".into()));
    }
    Ok(Automorphism { images })
}

/// Builds `θ_{i,j,k,ℓ}` and verifies it.
pub fn make_auto(p: u32, params: AutoParams) -> Result<Automorphism> {
    params.validate(p)?;
    let group = Group::new(GroupSpec::QSemidirect(p))?;
    make_auto_in(&group, params)
}

fn make_auto_in(group: &Group, params: AutoParams) -> Result<Automorphism> {
    let spec = group.spec();
    let word = |a: i64, b: i64, c: i64| -> Result<usize> { Ok(group.index_of(&GroupElement::word(spec, a, b, c)?)) };
    let zk = word(0, 0, params.k as i64)?;
    let x = group.mul_idx(zk, word(params.i as i64, 0, 0)?);
    let y = word(2 * params.j as i64, 1, 0)?;
    let z = word(0, 0, params.l as i64)?;
    auto_from_images(group, x, y, z)
}

/// Reads `(i, j, k, ℓ)` back from the images of the generators, failing if
/// the automorphism is not of the form `θ_{i,j,k,ℓ}`.
pub fn params_of(group: &Group, aut: &Automorphism) -> Result<AutoParams> {
    let GroupSpec::QSemidirect(p) = group.spec() else {
        return Err(Error::InvalidSpec(group.spec().to_string()));
    };
    let gens = group.spec().generators();
    let [xa, xb, xc] = group.element(aut.apply_idx(group.index_of(&gens[0]))).exponents();
    let [ya, yb, yc] = group.element(aut.apply_idx(group.index_of(&gens[1]))).exponents();
    let [za, zb, zc] = group.element(aut.apply_idx(group.index_of(&gens[2]))).exponents();
    if xb != 0 || ya % 2 != 0 || yb != 1 || yc != 0 || za != 0 || zb != 0 {
        return Err(Error::Inconsistent("automorphism outside the θ family".into()));
    }
    // z^k x^i = x^i z^{-k} for odd i.
    let params = AutoParams::new(xa, ya / 2, (p - xc) % p, zc);
    params.validate(p)?;
    Ok(params)
}

/// The full automorphism group, found by searching over generator images.
#[derive(Clone, Debug)]
pub struct AutomorphismGroup {
    p: u32,
    group: Group,
    auts: Vec<Automorphism>,
    params: Vec<AutoParams>,
    inner: Vec<usize>,
    coset_of: Vec<usize>,
    coset_reps: Vec<usize>,
}

impl AutomorphismGroup {
    pub fn new(p: u32) -> Result<Self> {
        require_odd_prime(p as i64)?;
        if p > MAX_EXHAUSTIVE_P {
            return Err(Error::OutOfScope(format!("exhaustive enumeration is limited to p ≤ {MAX_EXHAUSTIVE_P}")));
        }
        let group = Group::new(GroupSpec::QSemidirect(p))?;
        let n = group.order();
        let order_of = |g: usize| (1..=n as u32).find(|&e| pow_idx(&group, g, e) == 0).unwrap_or(0);
        let with_order = |o: u32| (0..n).filter(|&g| order_of(g) == o).collect::<Vec<_>>();
        let (xs, ys, zs) = (with_order(8), with_order(4), with_order(p));
        let mut auts = Vec::new();
        for &x in &xs {
            for &y in &ys {
                for &z in &zs {
                    if let Ok(a) = auto_from_images(&group, x, y, z) {
                        auts.push(a);
                    }
                }
            }
        }
        let params = auts.iter().map(|a| params_of(&group, a)).collect::<Result<Vec<_>>>()?;
        let index: HashMap<&Automorphism, usize> = auts.iter().enumerate().map(|(i, a)| (a, i)).collect();
        let mut inner: Vec<usize> = (0..n)
            .map(|g| {
                let images = (0..n)
                    .map(|h| group.mul_idx(group.mul_idx(g, h), group.inv_idx(g)) as u32)
                    .collect();
                index
                    .get(&Automorphism { images })
                    .copied()
                    .ok_or_else(|| Error::Inconsistent("conjugation missing from Aut".into()))
            })
            .collect::<Result<_>>()?;
        inner.sort();
        inner.dedup();
        let mut coset_of = vec![usize::MAX; auts.len()];
        let mut coset_reps = Vec::new();
        for a in 0..auts.len() {
            if coset_of[a] != usize::MAX {
                continue;
            }
            let id = coset_reps.len();
            coset_reps.push(a);
            for &c in &inner {
                coset_of[index[&auts[c].compose(&auts[a])]] = id;
            }
        }
        Ok(AutomorphismGroup { p, group, auts, params, inner, coset_of, coset_reps })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn automorphisms(&self) -> &[Automorphism] {
        &self.auts
    }

    pub fn params(&self) -> &[AutoParams] {
        &self.params
    }

    pub fn order(&self) -> usize {
        self.auts.len()
    }

    pub fn inner_order(&self) -> usize {
        self.inner.len()
    }

    pub fn inner_params(&self) -> Vec<AutoParams> {
        self.inner.iter().map(|&i| self.params[i]).collect()
    }

    pub fn out_order(&self) -> usize {
        self.coset_reps.len()
    }

    pub fn out_representatives(&self) -> Vec<AutoParams> {
        self.coset_reps.iter().map(|&i| self.params[i]).collect()
    }

    pub fn index_of(&self, aut: &Automorphism) -> Option<usize> {
        self.auts.iter().position(|a| a == aut)
    }

    fn out_mul(&self, a: usize, b: usize) -> usize {
        let prod = self.auts[self.coset_reps[a]].compose(&self.auts[self.coset_reps[b]]);
        self.coset_of[self.index_of(&prod).expect("Aut is closed")]
    }

    /// Abelian invariants of `Out`, failing if `Out` is not abelian.
    pub fn out_invariants(&self) -> Result<Vec<u64>> {
        let m = self.out_order();
        let table: Vec<Vec<usize>> = (0..m).map(|a| (0..m).map(|b| self.out_mul(a, b)).collect()).collect();
        if (0..m).any(|a| (0..m).any(|b| table[a][b] != table[b][a])) {
            return Err(Error::Inconsistent("Out is not abelian".into()));
        }
        let identity = self.coset_of[self.index_of(&self.auts[self.inner[0]]).expect("present")];
        let power = |a: usize, e: u64| (0..e).fold(identity, |acc, _| table[acc][a]);
        abelian_invariants(m as u64, |e| (0..m).filter(|&a| power(a, e) == identity).count() as u64)
    }

    /// Whether the family is closed under composition and inversion.
    pub fn closed_under_composition(&self) -> bool {
        let set: HashSet<&Automorphism> = self.auts.iter().collect();
        self.auts.iter().all(|a| {
            set.contains(&a.inverse()) && self.auts.iter().all(|b| set.contains(&a.compose(b)))
        })
    }
}

/// Invariant factors of an abelian group of order `n` from the counts
/// `|{g : g^e = 1}|`.
fn abelian_invariants(n: u64, count: impl Fn(u64) -> u64) -> Result<Vec<u64>> {
    let mut primary: Vec<Vec<u64>> = Vec::new();
    for q in prime_factors(n) {
        let log_q = |mut v: u64| {
            let mut e = 0;
            while v > 1 {
                v /= q;
                e += 1;
            }
            e
        };
        // ranks[e] = number of cyclic q-factors of order at least q^{e+1}.
        let mut ranks = Vec::new();
        let (mut prev, mut qe) = (0, q);
        loop {
            let cur = log_q(count(qe));
            if cur == prev {
                break;
            }
            ranks.push(cur - prev);
            prev = cur;
            qe *= q;
        }
        let parts = ranks.first().copied().unwrap_or(0);
        let mut powers = vec![1u64; parts as usize];
        for r in ranks {
            for slot in powers.iter_mut().take(r as usize) {
                *slot *= q;
            }
        }
        primary.push(powers);
    }
    let len = primary.iter().map(Vec::len).max().unwrap_or(0);
    let mut factors: Vec<u64> = (0..len)
        .map(|t| primary.iter().map(|ps| ps.get(t).copied().unwrap_or(1)).product())
        .collect();
    factors.sort();
    if factors.iter().product::<u64>() != n {
        return Err(Error::Inconsistent("abelian invariants do not multiply to the order".into()));
    }
    Ok(factors)
}

pub fn aut_order(p: u32) -> Result<usize> {
    Ok(AutomorphismGroup::new(p)?.order())
}

pub fn inn_subgroup(p: u32) -> Result<Vec<AutoParams>> {
    Ok(AutomorphismGroup::new(p)?.inner_params())
}

pub fn out_structure(p: u32) -> Result<Vec<u64>> {
    AutomorphismGroup::new(p)?.out_invariants()
}

/// A residue of `(ℤ/16p)^×` with its CRT components.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PsiValue {
    pub residue: i64,
    pub mod16: i64,
    pub modp: i64,
}

impl PsiValue {
    pub fn from_components(p: u32, mod16: i64, modp: i64) -> Result<Self> {
        let residue = crt(mod16, 16, modp, p as i64)?;
        Ok(PsiValue { residue, mod16, modp })
    }
}

/// `ψ₄(θ_{i,j,k,ℓ}) = CRT(i² mod 16, ℓ² mod p)`.
pub fn psi4(p: u32, params: AutoParams) -> Result<PsiValue> {
    params.validate(p)?;
    let (i, l) = (params.i as i64, params.l as i64);
    PsiValue::from_components(p, i * i % 16, l * l % p as i64)
}

/// ψ₄ from an automorphism's action on the quotient `Q16` and on the
/// normal subgroup `C_p`, read directly from the images of `x` and `z`.
pub fn psi4_of(group: &Group, aut: &Automorphism) -> Result<PsiValue> {
    let GroupSpec::QSemidirect(p) = group.spec() else {
        return Err(Error::InvalidSpec(group.spec().to_string()));
    };
    let gens = group.spec().generators();
    // Image of x modulo ⟨z⟩ is x^i (or x^i y^b, excluded by relations).
    let [i, b, _] = group.element(aut.apply_idx(group.index_of(&gens[0]))).exponents();
    let [_, _, l] = group.element(aut.apply_idx(group.index_of(&gens[2]))).exponents();
    if b != 0 {
        return Err(Error::Inconsistent("x maps outside ⟨x, z⟩".into()));
    }
    let (i, l) = (i as i64, l as i64);
    PsiValue::from_components(p, i * i % 16, l * l % p as i64)
}

/// The image of ψ₄ over all automorphisms, sorted.
pub fn psi4_image(p: u32) -> Result<Vec<i64>> {
    let auts = AutomorphismGroup::new(p)?;
    let set: BTreeSet<i64> =
        auts.params().iter().map(|&a| psi4(p, a).map(|v| v.residue)).collect::<Result<_>>()?;
    Ok(set.into_iter().collect())
}

/// `ψ_k` image as the `k/4`-th powers of the ψ₄ image.
pub fn psik_image(p: u32, k: u64) -> Result<Vec<i64>> {
    if k == 0 || !k.is_multiple_of(4) {
        return Err(Error::InvalidParameter(format!("k = {k} is not a positive multiple of 4")));
    }
    psik_from_psi4(p, &psi4_image(p)?, k)
}

pub fn psik_from_psi4(p: u32, image4: &[i64], k: u64) -> Result<Vec<i64>> {
    if k == 0 || !k.is_multiple_of(4) {
        return Err(Error::InvalidParameter(format!("k = {k} is not a positive multiple of 4")));
    }
    let m = 16 * p as i64;
    let set: BTreeSet<i64> = image4.iter().map(|&r| crate::arith::pow_mod(r, k / 4, m)).collect();
    Ok(set.into_iter().collect())
}

/// `((ℤ/16p)^×)²`.
pub fn squares_mod(m: i64) -> Vec<i64> {
    let set: BTreeSet<i64> = units_mod(m).into_iter().map(|u| u * u % m).collect();
    set.into_iter().collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FixtureStatus {
    RecordedNonzero,
    RecordedZero,
    Unknown,
}

impl FixtureStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            FixtureStatus::RecordedNonzero => "recorded-nonzero",
            FixtureStatus::RecordedZero => "recorded-zero",
            FixtureStatus::Unknown => "unknown",
        }
    }
}

/// Recorded class of the Swan module `(N, r)` over `C_p ⋊ Q16`. These are
/// literature values, not recomputed.
pub fn swan_fixture_lookup(p: u32, r: i64) -> FixtureStatus {
    let m = 16 * p as i64;
    if gcd(r, m) != 1 {
        return FixtureStatus::Unknown;
    }
    let r = r.rem_euclid(m);
    match p {
        5 if r == 9 => FixtureStatus::RecordedNonzero,
        13 | 17 if r == 25 => FixtureStatus::RecordedNonzero,
        3 | 7 | 11 | 19 => match psi4_image(p) {
            Ok(img) if img.contains(&r) => FixtureStatus::RecordedZero,
            _ => FixtureStatus::Unknown,
        },
        _ => FixtureStatus::Unknown,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureRow {
    pub p: u32,
    pub r: i64,
    pub status: FixtureStatus,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PsikImage {
    pub k: u64,
    pub image: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutReport {
    pub p: u32,
    pub aut_order: usize,
    pub inn_order: usize,
    pub out_invariants: Vec<u64>,
    pub psi4_image: Vec<i64>,
    pub psik_image: Option<PsikImage>,
    pub fixtures: Vec<FixtureRow>,
}

pub fn aut_report(p: u32, k: Option<u64>) -> Result<AutReport> {
    let auts = AutomorphismGroup::new(p)?;
    let image4 = psi4_image(p)?;
    let psik_image = k.map(|k| psik_from_psi4(p, &image4, k).map(|image| PsikImage { k, image })).transpose()?;
    let mut candidates: Vec<i64> = image4.clone();
    candidates.extend([9, 25]);
    candidates.sort();
    candidates.dedup();
    let fixtures = candidates
        .into_iter()
        .filter_map(|r| match swan_fixture_lookup(p, r) {
            FixtureStatus::Unknown => None,
            status => Some(FixtureRow { p, r, status, note: "recorded, not recomputed".into() }),
        })
        .collect();
    Ok(AutReport {
        p,
        aut_order: auts.order(),
        inn_order: auts.inner_order(),
        out_invariants: auts.out_invariants()?,
        psi4_image: image4,
        psik_image,
        fixtures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        for p in [3u32, 5, 7] {
            let a = AutomorphismGroup::new(p).unwrap();
            assert_eq!(a.order(), (16 * p * (p - 1)) as usize);
            assert_eq!(a.inner_order(), (8 * p) as usize);
            assert!(a.closed_under_composition());
        }
        assert_eq!(out_structure(5).unwrap(), vec![2, 4]);
        assert_eq!(out_structure(3).unwrap(), vec![2, 2]);
        assert_eq!(out_structure(7).unwrap(), vec![2, 6]);
    }

    #[test]
    fn explicit_autos() {
        let g = Group::new(GroupSpec::QSemidirect(5)).unwrap();
        assert!(make_auto(5, AutoParams::identity()).unwrap().is_identity());
        let a = make_auto(5, AutoParams::new(3, 0, 0, 2)).unwrap();
        assert_eq!(params_of(&g, &a).unwrap(), AutoParams::new(3, 0, 0, 2));
        let idx = |a: i64, b: i64, c: i64| g.index_of(&GroupElement::word(g.spec(), a, b, c).unwrap());
        let bad = auto_from_images(&g, idx(1, 0, 0), idx(0, 1, 1), idx(0, 0, 1));
        assert!(matches!(bad, Err(Error::RelationViolated(_))));
        let odd = auto_from_images(&g, idx(1, 0, 0), idx(1, 1, 0), idx(0, 0, 1));
        assert!(odd.is_err());
    }

    #[test]
    fn psi_values() {
        assert_eq!(psi4(5, AutoParams::new(3, 0, 0, 2)).unwrap().residue, 9);
        assert_eq!(psi4(5, AutoParams::new(3, 0, 0, 1)).unwrap().residue, 41);
        assert_eq!(psi4(5, AutoParams::identity()).unwrap().residue, 1);
        assert_eq!(psi4_image(5).unwrap(), vec![1, 9, 41, 49]);
        for k in (4..=100).step_by(8) {
            assert_eq!(psik_image(5, k).unwrap(), vec![1, 9, 41, 49]);
        }
        assert_eq!(psi4_image(7).unwrap(), squares_mod(112));
        assert!(psik_image(5, 6).is_err());
    }

    #[test]
    fn psi4_is_a_class_function_and_homomorphism() {
        let a = AutomorphismGroup::new(5).unwrap();
        let g = a.group();
        for (aut, params) in a.automorphisms().iter().zip(a.params()) {
            assert_eq!(psi4_of(g, aut).unwrap(), psi4(5, *params).unwrap());
        }
        let reps: Vec<usize> = a.out_representatives().iter().map(|r| a.params().iter().position(|q| q == r).unwrap()).collect();
        for &x in &reps {
            for &y in &reps {
                let c = a.automorphisms()[x].compose(&a.automorphisms()[y]);
                let lhs = psi4_of(g, &c).unwrap().residue;
                let rhs = psi4(5, a.params()[x]).unwrap().residue * psi4(5, a.params()[y]).unwrap().residue % 80;
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn fixtures() {
        assert_eq!(swan_fixture_lookup(5, 9), FixtureStatus::RecordedNonzero);
        assert_eq!(swan_fixture_lookup(7, 9), FixtureStatus::RecordedZero);
        assert_eq!(swan_fixture_lookup(13, 25), FixtureStatus::RecordedNonzero);
        assert_eq!(swan_fixture_lookup(23, 4), FixtureStatus::Unknown);
    }
}
