//! Stabilization classes of minimal complexes over `Q_{8p}`: the coset
//! counts `SF/±Aut_k` and `SF/(Aut_k·FF)`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::arith::{require_odd_prime, units_mod};
use crate::error::{Error, Result};
use crate::swan::{ff_set, sf_set};

/// `Aut₄(Q_{8p})`: the squares in `(ℤ/8p)^×`.
pub fn aut4_q8p(p: u32) -> Result<Vec<u64>> {
    require_odd_prime(p as i64)?;
    let m = 8 * p as i64;
    let set: BTreeSet<u64> = units_mod(m).into_iter().map(|u| (u * u % m) as u64).collect();
    Ok(set.into_iter().collect())
}

/// `Aut_{4i} = Aut₄^i`, the `i`-th powers of the elements of `Aut₄`.
pub fn aut_k_q8p(p: u32, k: u64) -> Result<Vec<u64>> {
    if k == 0 || !k.is_multiple_of(4) {
        return Err(Error::InvalidParameter(format!("k = {k} is not a positive multiple of 4")));
    }
    let m = 8 * p as i64;
    let set: BTreeSet<u64> =
        aut4_q8p(p)?.into_iter().map(|a| crate::arith::pow_mod(a as i64, k / 4, m) as u64).collect();
    Ok(set.into_iter().collect())
}

fn product_set(a: &[u64], b: &[u64], m: u64) -> Vec<u64> {
    let set: BTreeSet<u64> = a.iter().flat_map(|x| b.iter().map(move |y| x * y % m)).collect();
    set.into_iter().collect()
}

fn is_subgroup(set: &[u64], m: u64) -> bool {
    set.contains(&1) && set.iter().all(|a| set.iter().all(|b| set.contains(&(a * b % m))))
}

/// A partition of `SF` into cosets of a subgroup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetDecomposition {
    pub subgroup: Vec<u64>,
    pub representatives: Vec<u64>,
    pub cosets: Vec<Vec<u64>>,
}

impl CosetDecomposition {
    pub fn count(&self) -> usize {
        self.representatives.len()
    }
}

/// Cosets `s·(H ∩ SF)` tiling `SF`, representatives the least element.
pub fn coset_decomposition(sf: &[u64], h: &[u64], m: u64) -> Result<CosetDecomposition> {
    let stab: Vec<u64> = h.iter().copied().filter(|x| sf.contains(x)).collect();
    if !is_subgroup(&stab, m) {
        return Err(Error::Inconsistent("stabilizer is not a subgroup".into()));
    }
    let mut remaining: BTreeSet<u64> = sf.iter().copied().collect();
    let mut representatives = Vec::new();
    let mut cosets = Vec::new();
    while let Some(&s) = remaining.iter().next() {
        let coset: BTreeSet<u64> = stab.iter().map(|x| s * x % m).collect();
        if !coset.iter().all(|c| remaining.remove(c)) {
            return Err(Error::Inconsistent("cosets do not partition SF".into()));
        }
        representatives.push(s);
        cosets.push(coset.into_iter().collect());
    }
    if stab.len() * representatives.len() != sf.len() {
        return Err(Error::Inconsistent("coset sizes do not multiply to |SF|".into()));
    }
    Ok(CosetDecomposition { subgroup: stab, representatives, cosets })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Computed,
    /// Computed from the square-subgroup description of `Aut₄` outside the
    /// validated case `p = 7`.
    CitationExtrapolated,
    RecordedNotRecomputed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub p: u32,
    pub n: u32,
    pub k: u32,
    pub sf: Vec<u64>,
    pub ff: Vec<u64>,
    pub aut_k: Vec<u64>,
    pub minimal: Option<CosetDecomposition>,
    pub one_stabilization: Option<CosetDecomposition>,
    pub minimal_types: usize,
    pub one_stabilization_classes: usize,
    pub two_stabilization_classes: usize,
    pub provenance: Provenance,
    pub notes: Vec<String>,
}

impl ClassificationReport {
    pub fn counts(&self) -> (usize, usize) {
        (self.minimal_types, self.one_stabilization_classes)
    }

    pub fn render_text(&self) -> String {
        let mut out = format!(
            "Q_{} complexes, n = {}, k = {}\n  level 0 (minimal): {} homotopy type(s)\n  level 1: {} class(es)\n  level 2: {} class(es) (recorded, not recomputed)\n",
            8 * self.p,
            self.n,
            self.k,
            self.minimal_types,
            self.one_stabilization_classes,
            self.two_stabilization_classes
        );
        if let Some(d) = &self.one_stabilization {
            let reps: Vec<String> = d.representatives.iter().map(|r| format!("[{r}]")).collect();
            out.push_str(&format!("  level-1 representatives: {{{}}}\n", reps.join(", ")));
        }
        for note in &self.notes {
            out.push_str(&format!("  note: {note}\n"));
        }
        out
    }
}

/// Counts of minimal homotopy types and of classes after one stabilization
/// for `(Q_{8p}, n)`-complexes.
pub fn stabilization_counts(p: u32, n: u32) -> Result<ClassificationReport> {
    require_odd_prime(p as i64)?;
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::OutOfScope(format!("n = {n}: only odd n ≥ 3 is covered")));
    }
    let k = n + 1;
    let m = 8 * p as u64;
    if n % 4 == 1 {
        return Ok(ClassificationReport {
            p,
            n,
            k,
            sf: vec![],
            ff: vec![],
            aut_k: vec![],
            minimal: None,
            one_stabilization: None,
            minimal_types: 1,
            one_stabilization_classes: 1,
            two_stabilization_classes: 1,
            provenance: Provenance::RecordedNotRecomputed,
            notes: vec!["n ≡ 1 mod 4: unique minimal type via the Eichler condition (recorded, not recomputed)".into()],
        });
    }
    if p != 7 {
        return Err(Error::OutOfScope(format!("FF(Q_{}) is only computed for p = 7", 8 * p)));
    }
    let sf = sf_set(p)?;
    let ff = ff_set(p)?;
    let aut_k = aut_k_q8p(p, k as u64)?;
    let pm_aut: Vec<u64> = product_set(&aut_k, &[1, m - 1], m);
    let aut_ff = product_set(&aut_k, &ff, m);
    for (name, set) in [("±Aut_k", &pm_aut), ("Aut_k·FF", &aut_ff)] {
        if !is_subgroup(set, m) {
            return Err(Error::Inconsistent(format!("{name} is not a subgroup")));
        }
    }
    if !ff.contains(&1) || !ff.contains(&(m - 1)) {
        return Err(Error::Inconsistent("±1 ∉ FF".into()));
    }
    let minimal = coset_decomposition(&sf, &pm_aut, m)?;
    let one = coset_decomposition(&sf, &aut_ff, m)?;
    let refines = minimal.cosets.iter().all(|c| one.cosets.iter().any(|d| c.iter().all(|x| d.contains(x))));
    if !refines {
        return Err(Error::Inconsistent("SF/(Aut_k·FF) is not a quotient of SF/±Aut_k".into()));
    }
    Ok(ClassificationReport {
        p,
        n,
        k,
        sf,
        ff,
        aut_k,
        minimal_types: minimal.count(),
        one_stabilization_classes: one.count(),
        two_stabilization_classes: 1,
        minimal: Some(minimal),
        one_stabilization: Some(one),
        provenance: Provenance::Computed,
        notes: vec!["all complexes agree after two stabilizations (recorded, not recomputed)".into()],
    })
}
