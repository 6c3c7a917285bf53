//! Normal forms and multiplication for the finite groups used throughout:
//! dihedral, dicyclic (generalised quaternion), `C_p ⋊ Q16`, the Klein four
//! group and cyclic groups.
//!
//! Every element is stored as an exponent tuple `x^a y^b z^c` reduced to its
//! canonical range. Elements are enumerated lexicographically on `(a, b, c)`
//! and that ordering indexes every group-ring coefficient vector in the crate.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{is_prime, modp};
use crate::error::{Error, Result};

/// Largest group for which multiplication tables and homomorphism checks are
/// built exhaustively.
pub const EXHAUSTIVE_LIMIT: usize = 512;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", content = "n")]
pub enum GroupSpec {
    /// `⟨x, y | x^n = y^2 = 1, yxy⁻¹ = x⁻¹⟩`, order `2n`.
    Dihedral(u32),
    /// `⟨x, y | x^{2n} = 1, y^2 = x^n, yxy⁻¹ = x⁻¹⟩`, order `4n`.
    Dicyclic(u32),
    /// `C_p ⋊ Q16` with `xzx⁻¹ = z⁻¹`, `yzy⁻¹ = z`, order `16p`.
    QSemidirect(u32),
    KleinFour,
    Cyclic(u32),
}

impl GroupSpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            GroupSpec::Dihedral(n) | GroupSpec::Dicyclic(n) if n < 2 => {
                Err(Error::InvalidSpec(format!("{self}: parameter must be at least 2")))
            }
            GroupSpec::QSemidirect(p) if !(p > 2 && is_prime(p as i64)) => {
                Err(Error::InvalidSpec(format!("{self}: parameter must be an odd prime")))
            }
            GroupSpec::Cyclic(0) => Err(Error::InvalidSpec("Cyclic(0)".into())),
            _ => Ok(()),
        }
    }

    pub fn order(&self) -> usize {
        let [a, b, c] = self.ranges();
        (a * b * c) as usize
    }

    /// Sizes of the canonical exponent ranges for `(a, b, c)`.
    fn ranges(&self) -> [u32; 3] {
        match *self {
            GroupSpec::Dihedral(n) => [n, 2, 1],
            GroupSpec::Dicyclic(n) => [2 * n, 2, 1],
            GroupSpec::QSemidirect(p) => [8, 2, p],
            GroupSpec::KleinFour => [2, 2, 1],
            GroupSpec::Cyclic(m) => [m, 1, 1],
        }
    }

    /// Order of the generator `x`.
    pub fn x_order(&self) -> u32 {
        self.ranges()[0]
    }

    pub fn generator_count(&self) -> usize {
        match self {
            GroupSpec::Cyclic(_) => 1,
            GroupSpec::QSemidirect(_) => 3,
            _ => 2,
        }
    }

    /// The generators `x, y[, z]` in presentation order.
    pub fn generators(&self) -> Vec<GroupElement> {
        let mut gens = vec![GroupElement::raw(*self, [1 % self.ranges()[0], 0, 0])];
        if self.generator_count() >= 2 {
            gens.push(GroupElement::raw(*self, [0, 1, 0]));
        }
        if self.generator_count() == 3 {
            gens.push(GroupElement::raw(*self, [0, 0, 1]));
        }
        gens
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::raw(*self, [0, 0, 0])
    }

    pub fn index_of(&self, g: &GroupElement) -> usize {
        let [_, rb, rc] = self.ranges();
        let [a, b, c] = g.exps;
        ((a * rb + b) * rc + c) as usize
    }

    pub fn element_at(&self, idx: usize) -> GroupElement {
        let [_, rb, rc] = self.ranges();
        let idx = idx as u32;
        GroupElement::raw(*self, [idx / (rb * rc), (idx / rc) % rb, idx % rc])
    }

    fn mul_exps(&self, g: [u32; 3], h: [u32; 3]) -> [u32; 3] {
        let [a, b, c] = g;
        let [d, e, f] = h;
        let sign = |bit: u32, v: u32, m: u32| if bit == 0 { v } else { (m - v % m) % m };
        match *self {
            GroupSpec::Cyclic(m) => [(a + d) % m, 0, 0],
            GroupSpec::KleinFour => [a ^ d, b ^ e, 0],
            GroupSpec::Dihedral(n) => [(a + sign(b, d, n)) % n, b ^ e, 0],
            GroupSpec::Dicyclic(n) => {
                let m = 2 * n;
                let extra = if b == 1 && e == 1 { n } else { 0 };
                [(a + sign(b, d, m) + extra) % m, b ^ e, 0]
            }
            GroupSpec::QSemidirect(p) => {
                // z^c x^d = x^d z^{(-1)^d c}, and z commutes with y.
                let extra = if b == 1 && e == 1 { 4 } else { 0 };
                let x = (a + sign(b, d, 8) + extra) % 8;
                let z = (sign(d % 2, c, p) + f) % p;
                [x, b ^ e, z]
            }
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Dihedral(n) => write!(f, "Dihedral({n})"),
            GroupSpec::Dicyclic(n) => write!(f, "Dicyclic({n})"),
            GroupSpec::QSemidirect(p) => write!(f, "QSemidirect({p})"),
            GroupSpec::KleinFour => write!(f, "KleinFour"),
            GroupSpec::Cyclic(m) => write!(f, "Cyclic({m})"),
        }
    }
}

/// A group element in normal form `x^a y^b z^c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroupElement {
    spec: GroupSpec,
    exps: [u32; 3],
}

impl GroupElement {
    fn raw(spec: GroupSpec, exps: [u32; 3]) -> Self {
        GroupElement { spec, exps }
    }

    /// Builds an element from an exponent tuple already in canonical range.
    pub fn new(spec: GroupSpec, exps: [u32; 3]) -> Result<Self> {
        spec.validate()?;
        let r = spec.ranges();
        if exps.iter().zip(r.iter()).any(|(e, m)| e >= m) {
            return Err(Error::InvalidParameter(format!(
                "exponents {exps:?} out of range for {spec}"
            )));
        }
        Ok(GroupElement { spec, exps })
    }

    /// The element `x^a y^b z^c` for arbitrary integer exponents.
    pub fn word(spec: GroupSpec, a: i64, b: i64, c: i64) -> Result<Self> {
        spec.validate()?;
        let gens = spec.generators();
        let mut g = gens[0].pow(a);
        if b != 0 {
            g = g.mul_unchecked(&gens.get(1).ok_or_else(|| no_gen(spec, "y"))?.pow(b));
        }
        if c != 0 {
            g = g.mul_unchecked(&gens.get(2).ok_or_else(|| no_gen(spec, "z"))?.pow(c));
        }
        Ok(g)
    }

    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    pub fn exponents(&self) -> [u32; 3] {
        self.exps
    }

    pub fn is_identity(&self) -> bool {
        self.exps == [0, 0, 0]
    }

    pub fn multiply(&self, other: &GroupElement) -> Result<GroupElement> {
        if self.spec != other.spec {
            return Err(Error::GroupMismatch(self.spec.to_string(), other.spec.to_string()));
        }
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &GroupElement) -> GroupElement {
        GroupElement::raw(self.spec, self.spec.mul_exps(self.exps, other.exps))
    }

    pub fn inverse(&self) -> GroupElement {
        let ord = self.order();
        self.pow(ord as i64 - 1)
    }

    pub fn pow(&self, k: i64) -> GroupElement {
        let ord = self.order() as i64;
        let mut e = modp(k, ord);
        let mut base = *self;
        let mut acc = self.spec.identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            base = base.mul_unchecked(&base);
            e >>= 1;
        }
        acc
    }

    pub fn order(&self) -> u64 {
        let mut g = *self;
        let mut k = 1;
        while !g.is_identity() {
            g = g.mul_unchecked(self);
            k += 1;
        }
        k
    }
}

fn no_gen(spec: GroupSpec, name: &str) -> Error {
    Error::InvalidParameter(format!("{spec} has no generator {name}"))
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (e, name) in self.exps.iter().zip(["x", "y", "z"]) {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

pub fn multiply(g: &GroupElement, h: &GroupElement) -> Result<GroupElement> {
    g.multiply(h)
}

/// All elements of the group in canonical (lexicographic) order.
pub fn enumerate(spec: GroupSpec) -> Result<Vec<GroupElement>> {
    spec.validate()?;
    Ok((0..spec.order()).map(|i| spec.element_at(i)).collect())
}

/// A finite group with its multiplication table over the canonical ordering.
#[derive(Clone, Debug)]
pub struct Group {
    spec: GroupSpec,
    elements: Vec<GroupElement>,
    table: Vec<u32>,
    inverses: Vec<u32>,
}

impl Group {
    pub fn new(spec: GroupSpec) -> Result<Group> {
        let elements = enumerate(spec)?;
        let n = elements.len();
        let mut table = Vec::with_capacity(n * n);
        for g in &elements {
            for h in &elements {
                table.push(spec.index_of(&g.mul_unchecked(h)) as u32);
            }
        }
        let inverses = (0..n)
            .map(|i| {
                (0..n)
                    .find(|&j| table[i * n + j] == 0)
                    .expect("finite group element has an inverse") as u32
            })
            .collect();
        Ok(Group { spec, elements, table, inverses })
    }

    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn element(&self, idx: usize) -> GroupElement {
        self.elements[idx]
    }

    pub fn index_of(&self, g: &GroupElement) -> usize {
        self.spec.index_of(g)
    }

    #[inline]
    pub fn mul_idx(&self, i: usize, j: usize) -> usize {
        self.table[i * self.elements.len() + j] as usize
    }

    #[inline]
    pub fn inv_idx(&self, i: usize) -> usize {
        self.inverses[i] as usize
    }

    /// Indices of the central elements.
    pub fn center(&self) -> Vec<usize> {
        let n = self.order();
        (0..n)
            .filter(|&i| (0..n).all(|j| self.mul_idx(i, j) == self.mul_idx(j, i)))
            .collect()
    }
}

/// A homomorphism between two of the supported groups, stored element-wise.
#[derive(Clone, Debug)]
pub struct GroupHom {
    from: GroupSpec,
    to: GroupSpec,
    images: Vec<GroupElement>,
}

impl GroupHom {
    pub fn from_spec(&self) -> GroupSpec {
        self.from
    }

    pub fn to_spec(&self) -> GroupSpec {
        self.to
    }

    pub fn apply(&self, g: &GroupElement) -> Result<GroupElement> {
        if g.spec != self.from {
            return Err(Error::GroupMismatch(g.spec.to_string(), self.from.to_string()));
        }
        Ok(self.images[self.from.index_of(g)])
    }

    pub fn apply_idx(&self, idx: usize) -> GroupElement {
        self.images[idx]
    }

    pub fn images(&self) -> &[GroupElement] {
        &self.images
    }

    /// True when the map is a bijection.
    pub fn is_bijective(&self) -> bool {
        if self.from.order() != self.to.order() {
            return false;
        }
        let mut seen = vec![false; self.to.order()];
        for g in &self.images {
            let i = self.to.index_of(g);
            if seen[i] {
                return false;
            }
            seen[i] = true;
        }
        true
    }
}

/// Extends generator images `x ↦ images[0], y ↦ images[1], …` to the map
/// `x^a y^b z^c ↦ X^a Y^b Z^c` and verifies it is a homomorphism on every pair.
pub fn quotient_map(from: GroupSpec, to: GroupSpec, images: &[GroupElement]) -> Result<GroupHom> {
    from.validate()?;
    to.validate()?;
    if images.len() != from.generator_count() {
        return Err(Error::InvalidParameter(format!(
            "{from} needs {} generator images, got {}",
            from.generator_count(),
            images.len()
        )));
    }
    if let Some(bad) = images.iter().find(|g| g.spec != to) {
        return Err(Error::GroupMismatch(bad.spec.to_string(), to.to_string()));
    }
    if from.order() > EXHAUSTIVE_LIMIT || to.order() > EXHAUSTIVE_LIMIT {
        return Err(Error::OutOfScope(format!(
            "homomorphism verification limited to orders <= {EXHAUSTIVE_LIMIT}"
        )));
    }
    let identity = to.identity();
    let table: Vec<GroupElement> = enumerate(from)?
        .iter()
        .map(|g| {
            let [a, b, c] = g.exps;
            let mut img = images[0].pow(a as i64);
            if b > 0 {
                img = img.mul_unchecked(&images[1].pow(b as i64));
            }
            if c > 0 {
                img = img.mul_unchecked(&images[2].pow(c as i64));
            }
            img
        })
        .collect();
    debug_assert_eq!(table[0], identity);
    let source = Group::new(from)?;
    let n = source.order();
    for i in 0..n {
        for j in 0..n {
            let lhs = table[source.mul_idx(i, j)];
            let rhs = table[i].mul_unchecked(&table[j]);
            if lhs != rhs {
                return Err(Error::RelationViolated(format!(
                    "φ({}·{}) = {lhs} but φ({})·φ({}) = {rhs}",
                    source.element(i),
                    source.element(j),
                    source.element(i),
                    source.element(j)
                )));
            }
        }
    }
    Ok(GroupHom { from, to, images: table })
}
