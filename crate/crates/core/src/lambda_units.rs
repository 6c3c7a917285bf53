//! Recomputation of `ρ₂(Λ^×)` for `p = 7` from the cyclotomic units of
//! `ℤ[ζ₂₈]`: their images in `F₇[i]`, the exponent lattice of the kernel, and
//! ρ₂ of explicit lifts to `Λ`. Also the unit-group checks for the maximal
//! order `Γ ≅ R_p × R_p` of `R_p[C₂]`, `R_p = ℤ[λ_p]`.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grouprings::poly::{poly_mod, real_cyclotomic_minpoly};
use crate::grouprings::{
    gf2_inverse, integral_norm, Gf2, Gf2Algebra, Integers, IntegersMod, PolyQuot, PullbackMaps, Ring,
};
use crate::lattice::{
    dlog, element_order, kernel, subgroup_equal, CyclicTargetHom, ExponentLattice, FGAbelianGroup,
    SubgroupComparison,
};
use crate::swan::Rho2Map;

fn require_seven(p: u32) -> Result<()> {
    if p == 7 {
        Ok(())
    } else {
        Err(Error::OutOfScope(format!("unit-group data is available for p = 7 only, not p = {p}")))
    }
}

/// Exponents `k` with `α = 1 − ζ_{4p}^k` among the six generators, and the
/// `ζ_p`-polynomials for the first two.
const ALPHA_LABELS: [&str; 6] = ["1+ζ₇+ζ₇²", "1+ζ₇", "1−ζ₂₈²⁵", "1−ζ₂₈¹⁹", "1−ζ₂₈", "ζ₂₈"];

/// Integer `x`-polynomials `Σ c·x^a` as `(c, a)` pairs, shared by the
/// generators in `ℤ[ζ₂₈]` and their lifts to `Λ`.
fn alpha_terms() -> [Vec<(i64, i64)>; 6] {
    [
        vec![(1, 0), (1, 4), (1, 8)],
        vec![(1, 0), (1, 4)],
        vec![(1, 0), (-1, 25)],
        vec![(1, 0), (-1, 19)],
        vec![(1, 0), (-1, 1)],
        vec![(1, 1)],
    ]
}

#[derive(Clone, Debug)]
pub struct CyclotomicUnitBasis {
    pub p: u32,
    pub labels: Vec<String>,
    /// `α_i ∈ ℤ[x]/Φ_{4p}`.
    pub alphas: Vec<Vec<i64>>,
    /// `α̃_i ∈ Λ`.
    pub lifts: Vec<Vec<i64>>,
    /// Order of each generator, `0` for infinite.
    pub torsion: Vec<u64>,
}

impl CyclotomicUnitBasis {
    pub fn new(p: u32) -> Result<Self> {
        require_seven(p)?;
        let maps = PullbackMaps::new(p)?;
        let cyc = maps.zeta_j.cyclotomic_ring();
        let order = 4 * p as i64;
        let alphas = alpha_terms()
            .iter()
            .map(|ts| {
                ts.iter().fold(cyc.zero(), |acc, &(c, a)| {
                    cyc.add(&acc, &cyc.scale(c, &cyc.monomial(a.rem_euclid(order) as usize)))
                })
            })
            .collect();
        let lifts = alpha_terms().iter().map(|ts| maps.lambda.from_x_terms(ts)).collect();
        Ok(CyclotomicUnitBasis {
            p,
            labels: ALPHA_LABELS.iter().map(|s| s.to_string()).collect(),
            alphas,
            lifts,
            torsion: vec![0, 0, 0, 0, 0, order as u64],
        })
    }

    pub fn ambient(&self) -> FGAbelianGroup {
        FGAbelianGroup::new(self.torsion.clone())
    }

    /// `c₂(α̃_i) = α_i`, each `α_i` has norm ±1, and `α₆` has order `4p`.
    pub fn verify(&self) -> Result<()> {
        let maps = PullbackMaps::new(self.p)?;
        let cyc = maps.zeta_j.cyclotomic_ring();
        for (i, (a, l)) in self.alphas.iter().zip(&self.lifts).enumerate() {
            if maps.c2(l) != (a.clone(), cyc.zero()) {
                return Err(Error::Inconsistent(format!("c₂ of lift {} differs from α{}", i + 1, i + 1)));
            }
            let n = integral_norm(cyc, a)?;
            if n.abs() != 1 {
                return Err(Error::NotAUnit(format!("α{} has norm {n}", i + 1)));
            }
        }
        if element_order(cyc, &self.alphas[5], 1000) != Some(4 * self.p as u64) {
            return Err(Error::Inconsistent("ζ has the wrong order".into()));
        }
        Ok(())
    }
}

/// `F_p[i] = F_p[x]/(x² + 1)`.
pub fn gaussian_field(p: u32) -> Result<PolyQuot<IntegersMod>> {
    PolyQuot::from_int_modulus(IntegersMod::new(p as u64), &[1, 0, 1], "i")
}

/// Images of the six generators under `ζ₂₈ ↦ i`, as elements of `F₇[i]`.
pub fn alpha_images(p: u32) -> Result<Vec<Vec<u64>>> {
    let basis = CyclotomicUnitBasis::new(p)?;
    let f = gaussian_field(p)?;
    let cyc = PullbackMaps::new(p)?.zeta_j.cyclotomic_ring().clone();
    let i = f.gen();
    Ok(basis.alphas.iter().map(|a| cyc.evaluate_in(a, &f, |c| f.from_int(*c), &i)).collect())
}

/// Discrete logarithms of the generator images to base `1 + i` (order 24).
pub fn alpha_dlogs(p: u32) -> Result<Vec<u64>> {
    let f = gaussian_field(p)?;
    let base = f.from_int_coeffs(&[1, 1]);
    if element_order(&f, &base, 1000) != Some(24) {
        return Err(Error::Inconsistent("1 + i does not have order 24".into()));
    }
    alpha_images(p)?.iter().map(|e| dlog(&f, e, &base, 1000)).collect()
}

/// The seven kernel generators as printed for `p = 7`, as exponent vectors.
pub fn printed_kernel_generators() -> Vec<(String, Vec<i64>)> {
    [
        ("α₆⁴", [0, 0, 0, 0, 0, 4]),
        ("α₁²²α₂", [22, 1, 0, 0, 0, 0]),
        ("α₁¹⁴α₃⁴", [14, 0, 4, 0, 0, 0]),
        ("α₁²²α₃α₄", [22, 0, 1, 1, 0, 0]),
        ("α₁¹⁰", [10, 0, 0, 0, 0, 0]),
        ("α₃α₅", [0, 0, 1, 0, 1, 0]),
        ("α₁¹²α₃⁶α₆²⁷", [12, 0, 6, 0, 0, 27]),
    ]
    .into_iter()
    .map(|(l, v)| (l.to_string(), v.to_vec()))
    .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrintedGenerator {
    pub label: String,
    pub exponents: Vec<i64>,
    pub in_kernel: bool,
    /// `Σ e_i·dlog(α_i) mod 24`.
    pub image: i64,
}

#[derive(Clone, Debug)]
pub struct KernelReport {
    pub dlogs: Vec<u64>,
    pub kernel: ExponentLattice,
    pub image_order: u128,
    pub index: Option<u128>,
    pub printed: Vec<PrintedGenerator>,
    /// Recomputed kernel (left) against the span of the printed generators.
    pub comparison: SubgroupComparison,
}

/// The kernel of `ℤ[ζ₂₈]^× → F₇[i]^×` as an exponent lattice on `α₁…α₆`,
/// compared against the printed generators.
pub fn lambda_unit_kernel(p: u32) -> Result<KernelReport> {
    let basis = CyclotomicUnitBasis::new(p)?;
    let dlogs = alpha_dlogs(p)?;
    let hom = CyclicTargetHom::cyclic(basis.ambient(), 24, dlogs.iter().map(|d| *d as i64).collect())?;
    let ker = kernel(&hom)?;
    let image_order = hom.image_order()?;
    let index = ker.index();
    if index != Some(image_order) {
        return Err(Error::Inconsistent(format!(
            "kernel index {index:?} differs from image order {image_order}"
        )));
    }
    let printed: Vec<PrintedGenerator> = printed_kernel_generators()
        .into_iter()
        .map(|(label, e)| {
            Ok(PrintedGenerator {
                in_kernel: ker.contains(&e)?,
                image: hom.apply(&e)?[0],
                label,
                exponents: e,
            })
        })
        .collect::<Result<_>>()?;
    let span = ExponentLattice::from_generators(
        &basis.ambient(),
        &printed.iter().map(|g| g.exponents.clone()).collect::<Vec<_>>(),
    )?;
    let comparison = subgroup_equal(&ker, &span)?;
    Ok(KernelReport { dlogs, kernel: ker, image_order, index, printed, comparison })
}

/// `ρ₂(b₂(α̃_i))` for the six lifts.
pub fn rho2_alpha_values(p: u32) -> Result<Vec<u8>> {
    let basis = CyclotomicUnitBasis::new(p)?;
    let maps = PullbackMaps::new(p)?;
    let rho = Rho2Map::new(p)?;
    basis.lifts.iter().map(|l| Ok(rho.evaluate(&maps.b2(l))?.class)).collect()
}

/// The subgroup of `ℤ/2` generated by `Σ e_i·values_i` over the rows `e`.
pub fn rho2_image_from_basis(rows: &[Vec<i64>], values: &[u8]) -> Vec<u8> {
    let generated = rows.iter().any(|e| {
        e.iter().zip(values).map(|(x, v)| x.rem_euclid(2) as u8 * v).fold(0, |a, b| a ^ b) == 1
    });
    if generated {
        vec![0, 1]
    } else {
        vec![0]
    }
}

/// `ρ₂(Λ^×)` from `ρ₂(−1), ρ₂(x), ρ₂(y)` and the recomputed kernel lattice.
pub fn rho2_lambda_image(p: u32) -> Result<Vec<u8>> {
    require_seven(p)?;
    static CACHE: OnceLock<std::result::Result<Vec<u8>, Error>> = OnceLock::new();
    CACHE.get_or_init(compute_rho2_lambda_image).clone()
}

fn compute_rho2_lambda_image() -> Result<Vec<u8>> {
    let p = 7;
    let maps = PullbackMaps::new(p)?;
    let rho = Rho2Map::new(p)?;
    let mut image = vec![0u8];
    for e in [maps.lambda.from_int(-1), maps.lambda.x(), maps.lambda.y()] {
        if rho.evaluate(&maps.b2(&e))?.class == 1 {
            image = vec![0, 1];
        }
    }
    let report = lambda_unit_kernel(p)?;
    let values = rho2_alpha_values(p)?;
    let from_kernel = rho2_image_from_basis(&report.kernel.basis_rows(), &values);
    if from_kernel.len() > image.len() {
        image = from_kernel;
    }
    Ok(image)
}

/// `R_p = ℤ[λ]/(m_p(λ))`.
pub fn real_ring(p: u32) -> Result<PolyQuot<Integers>> {
    PolyQuot::from_int_modulus(Integers, &real_cyclotomic_minpoly(p as u64), "λ")
}

/// A unit of `Γ ≅ R_p × R_p` as its pair of coordinates `(a + b, a − b)`.
pub type GammaUnit = (Vec<i64>, Vec<i64>);

/// `g₁ … g₆` for `p = 7`, with the half-integer numerators `(2a, 2b)` used
/// for the integrality check.
pub fn gamma_generators(p: u32) -> Result<Vec<(GammaUnit, (Vec<i64>, Vec<i64>))>> {
    require_seven(p)?;
    let r = real_ring(p)?;
    let c = |v: &[i64]| r.from_int_coeffs(v);
    // (2a, 2b) for g = a + bt.
    let halves: Vec<(Vec<i64>, Vec<i64>)> = vec![
        (c(&[0]), c(&[2])),
        (c(&[0]), c(&[-2])),
        (c(&[1, 1]), c(&[-1, 1])),
        (c(&[1, 1]), c(&[1, -1])),
        (c(&[0, 0, 1]), c(&[-2, 0, 1])),
        (c(&[0, 0, 1]), c(&[2, 0, -1])),
    ];
    halves
        .into_iter()
        .enumerate()
        .map(|(i, (a2, b2))| {
            let plus = r.add(&a2, &b2);
            let minus = r.sub(&a2, &b2);
            if plus.iter().chain(&minus).any(|x| x % 2 != 0) {
                return Err(Error::Inconsistent(format!("g{} is not in Γ", i + 1)));
            }
            let half = |v: Vec<i64>| v.into_iter().map(|x| x / 2).collect::<Vec<_>>();
            Ok(((half(plus), half(minus)), (a2, b2)))
        })
        .collect()
}

/// The residue field `F = R_p/2R_p = F₂[λ]/(m̄_p)`.
pub fn residue_field_two(p: u32) -> Result<PolyQuot<Gf2>> {
    PolyQuot::from_int_modulus(Gf2, &poly_mod(&real_cyclotomic_minpoly(p as u64), 2), "λ")
}

fn to_field(f: &PolyQuot<Gf2>, v: &[i64]) -> Vec<u8> {
    f.from_int_coeffs(v)
}

/// Images of `g₁ … g₆` in `F^×` under `(U, V) ↦ U/V`, as powers of `λ̄`.
pub fn gamma_first_images(p: u32) -> Result<Vec<u64>> {
    let f = residue_field_two(p)?;
    let base = f.gen();
    gamma_generators(p)?
        .iter()
        .map(|((u, v), _)| {
            let (u, v) = (to_field(&f, u), to_field(&f, v));
            let vinv = gf2_inverse(&f, &v).ok_or_else(|| Error::NotAUnit(f.render(&v)))?;
            dlog(&f, &f.mul(&u, &vinv), &base, 100)
        })
        .collect()
}

/// Images of `g₁ … g₆` in `(F₇^×)²` under `(U, V) ↦ (U, V) mod 𝔭`,
/// `λ ≡ 2`, as powers of the primitive root 3.
pub fn gamma_second_images(p: u32) -> Result<Vec<[u64; 2]>> {
    let fp = IntegersMod::new(p as u64);
    let r = real_ring(p)?;
    let lam = fp.from_int(2);
    if !fp.is_zero(&crate::grouprings::poly::eval_int_poly(&fp, &real_cyclotomic_minpoly(p as u64), &lam)) {
        return Err(Error::Inconsistent("λ ≢ 2 mod 𝔭".into()));
    }
    let three = fp.from_int(3);
    if element_order(&fp, &three, 100) != Some(p as u64 - 1) {
        return Err(Error::Inconsistent("3 is not a primitive root".into()));
    }
    gamma_generators(p)?
        .iter()
        .map(|((u, v), _)| {
            let ev = |w: &Vec<i64>| r.evaluate_in(w, &fp, |c| fp.from_int(*c), &lam);
            Ok([dlog(&fp, &ev(u), &three, 100)?, dlog(&fp, &ev(v), &three, 100)?])
        })
        .collect()
}

/// `Γ^× ≅ {±1}² × ℤ⁴` on `g₁ … g₆`.
pub fn gamma_ambient() -> FGAbelianGroup {
    FGAbelianGroup::new(vec![2, 2, 0, 0, 0, 0])
}

#[derive(Clone, Debug)]
pub struct GammaReport {
    pub first_images: Vec<u64>,
    pub first_kernel: ExponentLattice,
    pub printed_first_kernel: SubgroupComparison,
    pub second_images: Vec<[u64; 2]>,
    pub second_kernel: ExponentLattice,
    /// Printed final generators with their membership in the recomputed
    /// first and second kernels.
    pub printed_final: Vec<(String, Vec<i64>, bool, bool)>,
    pub printed_final_comparison: SubgroupComparison,
    /// Images in `(F₇^×)²` of the printed first-kernel generators.
    pub printed_first_kernel_images: Vec<(String, [i64; 2])>,
    /// Number of elements in the subgroup of `F[C₂]^×` generated by the
    /// recomputed second kernel, and whether it equals `{(d, c) : wt(c) even}`.
    pub quotient_subgroup_order: usize,
    pub quotient_matches_even_weight: bool,
    pub helper_isomorphisms: [bool; 3],
}

pub fn printed_first_kernel() -> Vec<(String, Vec<i64>)> {
    [
        ("g₁", [1, 0, 0, 0, 0, 0]),
        ("g₂", [0, 1, 0, 0, 0, 0]),
        ("g₃⁷", [0, 0, 7, 0, 0, 0]),
        ("g₃⁴g₅", [0, 0, 4, 0, 1, 0]),
        ("g₃g₄", [0, 0, 1, 1, 0, 0]),
        ("g₃³g₆", [0, 0, 3, 0, 0, 1]),
    ]
    .into_iter()
    .map(|(l, v)| (l.to_string(), v.to_vec()))
    .collect()
}

pub fn printed_final_kernel() -> Vec<(String, Vec<i64>)> {
    [
        ("g₁g₃³g₅", [1, 0, 3, 0, 1, 0]),
        ("g₂g₃¹⁸g₄g₆", [0, 1, 18, 1, 0, 1]),
        ("g₃²¹", [0, 0, 21, 0, 0, 0]),
        ("g₃⁹g₆³", [0, 0, 9, 0, 0, 3]),
    ]
    .into_iter()
    .map(|(l, v)| (l.to_string(), v.to_vec()))
    .collect()
}

/// `F[C₂] = F[t]/(t² − 1)` over `F = R_p/2R_p`.
fn group_algebra(f: &PolyQuot<Gf2>) -> Result<PolyQuot<PolyQuot<Gf2>>> {
    PolyQuot::new(f.clone(), vec![f.from_int(-1), f.zero(), f.one()], "t")
}

/// `(a + b, b/(a + b))` for a unit `a + bt` of `F[C₂]`.
fn split_unit(f: &PolyQuot<Gf2>, e: &[Vec<u8>]) -> Option<(Vec<u8>, Vec<u8>)> {
    let s = f.add(&e[0], &e[1]);
    let inv = gf2_inverse(f, &s)?;
    Some((s, f.mul(&e[1], &inv)))
}

/// The three isomorphisms relating `F[C₂]^×`, `(Γ/2Γ)^×` and `F^×`, checked
/// by enumeration.
pub fn helper_isomorphisms(p: u32) -> Result<[bool; 3]> {
    let f = residue_field_two(p)?;
    let fc2 = group_algebra(&f)?;
    let field: Vec<Vec<u8>> = f.all_elements();
    let units: Vec<Vec<u8>> = field.iter().filter(|a| !f.is_zero(a)).cloned().collect();
    // (i) (a, b) ↦ a + ab(1 + t) is a bijection F^× × F → F[C₂]^× with the
    // stated inverse.
    let one_plus_t = fc2.add(&fc2.one(), &fc2.gen());
    let mut seen = Vec::new();
    let mut first = true;
    for a in &units {
        for b in &field {
            let img = fc2.add(&fc2.from_base(a.clone()), &fc2.mul(&fc2.from_base(f.mul(a, b)), &one_plus_t));
            if gf2_inverse(&fc2, &img).is_none() || split_unit(&f, &img) != Some((a.clone(), b.clone())) {
                first = false;
            }
            seen.push(img);
        }
    }
    let fc2_units = fc2.all_elements().into_iter().filter(|e| gf2_inverse(&fc2, e).is_some()).count();
    seen.sort();
    seen.dedup();
    first &= seen.len() == units.len() * field.len() && fc2_units == seen.len();
    // (ii) Γ/2Γ ≅ F × F in the coordinates (a + b, a − b); its units are
    // exactly F^× × F^×.
    let pairs: Vec<(Vec<u8>, Vec<u8>)> =
        field.iter().flat_map(|u| field.iter().map(move |v| (u.clone(), v.clone()))).collect();
    let unit_pairs: Vec<&(Vec<u8>, Vec<u8>)> = pairs
        .iter()
        .filter(|(u, v)| {
            pairs.iter().any(|(x, y)| f.is_one(&f.mul(u, x)) && f.is_one(&f.mul(v, y)))
        })
        .collect();
    let second = unit_pairs.len() == units.len() * units.len()
        && unit_pairs.iter().all(|(u, v)| !f.is_zero(u) && !f.is_zero(v));
    // (iii) (U, V) ↦ U/V is onto F^× with kernel the image of R_p[C₂]^×, the
    // diagonal {(d, d)}; the quotient has order 7.
    let mut kernel_count = 0;
    let mut hit: Vec<Vec<u8>> = Vec::new();
    let mut third = true;
    for (u, v) in &unit_pairs {
        let q = f.mul(u, &gf2_inverse(&f, v).expect("unit"));
        if f.is_one(&q) {
            kernel_count += 1;
            third &= u == v;
        }
        hit.push(q);
    }
    hit.sort();
    hit.dedup();
    third &= hit.len() == units.len() && kernel_count == units.len() && unit_pairs.len() / kernel_count == 7;
    Ok([first, second, third])
}

/// Runs the Γ checks: both kernel computations, comparisons with the printed
/// lists, and the enumeration behind the `ℤ/2` quotient.
pub fn gamma_unit_verification(p: u32) -> Result<GammaReport> {
    require_seven(p)?;
    let ambient = gamma_ambient();
    let first_images = gamma_first_images(p)?;
    let h1 = CyclicTargetHom::cyclic(ambient.clone(), 7, first_images.iter().map(|d| *d as i64).collect())?;
    let first_kernel = kernel(&h1)?;
    let printed_k1: Vec<Vec<i64>> = printed_first_kernel().into_iter().map(|(_, v)| v).collect();
    let first_kernel_comparison =
        subgroup_equal(&first_kernel, &ExponentLattice::from_generators(&ambient, &printed_k1)?)?;
    let second_images = gamma_second_images(p)?;
    let combined: Vec<Vec<i64>> = first_images
        .iter()
        .zip(&second_images)
        .map(|(a, [b, c])| vec![*a as i64, *b as i64, *c as i64])
        .collect();
    let h2 = CyclicTargetHom::new(ambient.clone(), vec![7, 6, 6], combined)?;
    let second_kernel = kernel(&h2)?;
    let printed_final: Vec<(String, Vec<i64>, bool, bool)> = printed_final_kernel()
        .into_iter()
        .map(|(l, v)| Ok((l, v.clone(), first_kernel.contains(&v)?, second_kernel.contains(&v)?)))
        .collect::<Result<_>>()?;
    let printed_span = ExponentLattice::from_generators(
        &ambient,
        &printed_final.iter().map(|(_, v, _, _)| v.clone()).collect::<Vec<_>>(),
    )?;
    let printed_final_comparison = subgroup_equal(&second_kernel, &printed_span)?;
    let printed_first_kernel_images = printed_first_kernel()
        .into_iter()
        .map(|(l, v)| {
            let dot = |k: usize| {
                v.iter().zip(&second_images).map(|(e, s)| e * s[k] as i64).sum::<i64>().rem_euclid(6)
            };
            (l, [dot(0), dot(1)])
        })
        .collect();
    let (quotient_subgroup_order, quotient_matches_even_weight) = quotient_check(p, &second_kernel)?;
    Ok(GammaReport {
        first_images,
        first_kernel,
        printed_first_kernel: first_kernel_comparison,
        second_images,
        second_kernel,
        printed_final,
        printed_final_comparison,
        printed_first_kernel_images,
        quotient_subgroup_order,
        quotient_matches_even_weight,
        helper_isomorphisms: helper_isomorphisms(p)?,
    })
}

/// Reduces `Π g_i^{e_i}` to `a + bt ∈ F[C₂]` through `R_p/4R_p`, or `None`
/// when the product does not lie in `R_p[C₂]`.
pub fn reduce_to_group_algebra(p: u32, row: &[i64]) -> Result<Option<Vec<Vec<u8>>>> {
    let r4 = PolyQuot::from_int_modulus(IntegersMod::new(4), &real_cyclotomic_minpoly(p as u64), "λ")?;
    let f = residue_field_two(p)?;
    let gens = gamma_generators(p)?;
    let all4: Vec<Vec<u64>> = (0..64u64).map(|m| vec![m % 4, (m / 4) % 4, m / 16]).collect();
    let power = |a: &Vec<u64>, e: i64| -> Result<Vec<u64>> {
        if e >= 0 {
            return Ok(r4.pow(a, e as u64));
        }
        let inv = all4
            .iter()
            .find(|b| r4.is_one(&r4.mul(a, b)))
            .ok_or_else(|| Error::NotAUnit(r4.render(a)))?;
        Ok(r4.pow(inv, (-e) as u64))
    };
    let (mut u, mut v) = (r4.one(), r4.one());
    for (e, ((gu, gv), _)) in row.iter().zip(&gens) {
        u = r4.mul(&u, &power(&r4.from_int_coeffs(gu), *e)?);
        v = r4.mul(&v, &power(&r4.from_int_coeffs(gv), *e)?);
    }
    // a = (U + V)/2, b = (U − V)/2 modulo 2.
    let sum = r4.add(&u, &v);
    let diff = r4.sub(&u, &v);
    if sum.iter().chain(&diff).any(|c| c % 2 != 0) {
        return Ok(None);
    }
    let half = |w: &Vec<u64>| -> Vec<u8> { w.iter().map(|c| ((c / 2) % 2) as u8).collect() };
    Ok(Some(vec![f.from_gf2_coords(&half(&sum)), f.from_gf2_coords(&half(&diff))]))
}

/// `(a + b, b/(a + b)) ∈ F^× × F` for the reduction of `Π g_i^{e_i}`,
/// rendered as `(λ^d, c)`.
pub fn split_image_text(p: u32, row: &[i64]) -> Result<Option<String>> {
    let f = residue_field_two(p)?;
    let Some(e) = reduce_to_group_algebra(p, row)? else {
        return Ok(None);
    };
    let (d, c) = split_unit(&f, &e).ok_or_else(|| Error::NotAUnit("a + b = 0".into()))?;
    let k = dlog(&f, &d, &f.gen(), 100)?;
    let d = match k {
        0 => "1".to_string(),
        1 => "λ".to_string(),
        k => format!("λ^{k}"),
    };
    Ok(Some(format!("({d}, {})", f.render(&c))))
}

/// Reduces the kernel generators to `F[C₂]^×` through `R_p/4R_p`, closes
/// them under multiplication, and compares the result with the even-weight
/// subgroup of `F^× × F`.
fn quotient_check(p: u32, second_kernel: &ExponentLattice) -> Result<(usize, bool)> {
    let f = residue_field_two(p)?;
    let fc2 = group_algebra(&f)?;
    let elements = second_kernel
        .basis_rows()
        .iter()
        .map(|row| reduce_to_group_algebra(p, row)?.ok_or_else(|| Error::Inconsistent("kernel element is not in R_p[C₂]".into())))
        .collect::<Result<Vec<_>>>()?;
    let mut group = vec![fc2.one()];
    let mut frontier = group.clone();
    while let Some(x) = frontier.pop() {
        for g in &elements {
            let y = fc2.mul(&x, g);
            if !group.contains(&y) {
                group.push(y.clone());
                frontier.push(y);
            }
        }
    }
    let mut image: Vec<(Vec<u8>, Vec<u8>)> =
        group.iter().map(|e| split_unit(&f, e).ok_or(Error::NotInSubgroup)).collect::<Result<_>>()?;
    image.sort();
    let mut even: Vec<(Vec<u8>, Vec<u8>)> = f
        .all_elements()
        .into_iter()
        .filter(|d| !f.is_zero(d))
        .flat_map(|d| {
            f.all_elements()
                .into_iter()
                .filter(|c| c.iter().fold(0, |a, b| a ^ b) == 0)
                .map(move |c| (d.clone(), c))
        })
        .collect();
    even.sort();
    Ok((group.len(), image == even))
}
