//! Chain complexes of `ℤG`-modules over the flattened `ℤ`-basis: the
//! 4-periodic resolution for dicyclic groups, the pullback of `C₀` along
//! multiplication by `m`, integral homology, and the comparison degree.
//!
//! Row-vector convention throughout: a boundary `∂_k : C_k → C_{k−1}` is a
//! `rank C_k × rank C_{k−1}` matrix acting by `v ↦ v·∂_k`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::arith::{gcd, least_positive_inverse, require_odd_prime};
use crate::error::{Error, Result};
use crate::grouprings::{GroupRing, Integers};
use crate::groups::{Group, GroupSpec};
use crate::lattice::{hnf, left_kernel, snf, solve_in_hnf, Int, IntMatrix};

#[derive(Clone, Debug)]
pub enum ChainModule {
    /// `ℤG^rank`, basis index `c·|G| + idx(g)`.
    Free { rank: usize },
    /// A `ℤ`-lattice with the action of every group element (indexed by the
    /// group's element order) as a matrix acting on row vectors.
    Lattice { zrank: usize, actions: Vec<IntMatrix> },
}

impl ChainModule {
    pub fn zrank(&self, group_order: usize) -> usize {
        match self {
            ChainModule::Free { rank } => rank * group_order,
            ChainModule::Lattice { zrank, .. } => *zrank,
        }
    }
}

/// Homology group `ℤ^free_rank ⊕ ⊕ ℤ/d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Homology {
    pub free_rank: usize,
    pub torsion: Vec<Int>,
}

impl Homology {
    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_integers(&self) -> bool {
        self.free_rank == 1 && self.torsion.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct ZGChainComplex {
    group: Arc<Group>,
    modules: Vec<ChainModule>,
    /// `boundaries[k − 1] = ∂_k : C_k → C_{k−1}`.
    boundaries: Vec<IntMatrix>,
}

/// `v ↦ v·a` on `ℤG` as a `|G| × |G|` matrix on the group basis.
fn right_mult(group: &Group, a: &[i64]) -> IntMatrix {
    let n = group.order();
    let mut m = IntMatrix::zeros(n, n);
    for h in 0..n {
        for (g, &c) in a.iter().enumerate() {
            if c != 0 {
                let hg = group.mul_idx(h, g);
                m.set(h, hg, m.get(h, hg) + c as Int);
            }
        }
    }
    m
}

/// `v ↦ g·v` on `ℤG^rank`.
fn left_action(group: &Group, g: usize, rank: usize) -> IntMatrix {
    let n = group.order();
    let mut m = IntMatrix::zeros(rank * n, rank * n);
    for c in 0..rank {
        for h in 0..n {
            m.set(c * n + h, c * n + group.mul_idx(g, h), 1);
        }
    }
    m
}

/// Block matrix of right multiplications for a matrix over `ℤG`.
fn block_matrix(group: &Group, entries: &[Vec<Vec<i64>>]) -> IntMatrix {
    let n = group.order();
    let (r, c) = (entries.len(), entries[0].len());
    let mut m = IntMatrix::zeros(r * n, c * n);
    for (i, row) in entries.iter().enumerate() {
        for (j, a) in row.iter().enumerate() {
            let b = right_mult(group, a);
            for h in 0..n {
                for k in 0..n {
                    m.set(i * n + h, j * n + k, b.get(h, k));
                }
            }
        }
    }
    m
}

/// Basis `K` of the lattice with its HNF pivots, for coordinate solving.
struct LatticeBasis {
    basis: IntMatrix,
    pivots: Vec<usize>,
}

impl LatticeBasis {
    fn new(rows: &IntMatrix) -> Result<Self> {
        let h = hnf(rows)?;
        Ok(LatticeBasis { basis: h.basis(), pivots: h.pivots })
    }

    fn coords(&self, v: &[Int]) -> Result<Vec<Int>> {
        solve_in_hnf(&self.basis, &self.pivots, v)?
            .ok_or_else(|| Error::Inconsistent("vector outside the lattice".into()))
    }

    fn coords_matrix(&self, m: &IntMatrix) -> Result<IntMatrix> {
        let rows = (0..m.rows()).map(|i| self.coords(m.row(i))).collect::<Result<Vec<_>>>()?;
        IntMatrix::from_rows(self.basis.rows(), &rows)
    }
}

/// `H = ker(out) / im(inc)` where `inc : C_{k+1} → C_k` and `out : C_k → C_{k−1}`.
pub fn homology(inc: Option<&IntMatrix>, out: Option<&IntMatrix>, zrank: usize) -> Result<Homology> {
    let kernel = match out {
        Some(d) => left_kernel(d)?,
        None => IntMatrix::identity(zrank),
    };
    if kernel.rows() == 0 {
        return Ok(Homology { free_rank: 0, torsion: vec![] });
    }
    let inc = match inc {
        Some(d) if d.rows() > 0 => d,
        _ => return Ok(Homology { free_rank: kernel.rows(), torsion: vec![] }),
    };
    let k = LatticeBasis::new(&kernel)?;
    let image = k.coords_matrix(inc)?;
    let s = snf(&image)?;
    let inv = s.invariants();
    Ok(Homology {
        free_rank: k.basis.rows() - inv.len(),
        torsion: inv.into_iter().filter(|d| d.abs() != 1).map(|d| d.abs()).collect(),
    })
}

impl ZGChainComplex {
    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn modules(&self) -> &[ChainModule] {
        &self.modules
    }

    pub fn boundary(&self, k: usize) -> Option<&IntMatrix> {
        if k == 0 {
            None
        } else {
            self.boundaries.get(k - 1)
        }
    }

    pub fn len(&self) -> usize {
        self.modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }

    pub fn zranks(&self) -> Vec<usize> {
        self.modules.iter().map(|m| m.zrank(self.group.order())).collect()
    }

    /// Action matrix of element `g` on `C_k`.
    pub fn action(&self, k: usize, g: usize) -> IntMatrix {
        match &self.modules[k] {
            ChainModule::Free { rank } => left_action(&self.group, g, *rank),
            ChainModule::Lattice { actions, .. } => actions[g].clone(),
        }
    }

    /// `∂_{k−1} ∘ ∂_k = 0` for all `k`.
    pub fn squares_to_zero(&self) -> Result<bool> {
        for w in self.boundaries.windows(2) {
            if !w[1].mul(&w[0]).map(|m| m.is_zero())? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Every boundary commutes with the action of the group generators.
    pub fn is_equivariant(&self) -> Result<bool> {
        let gens: Vec<usize> =
            self.group.spec().generators().iter().map(|g| self.group.index_of(g)).collect();
        for k in 1..self.len() {
            let d = &self.boundaries[k - 1];
            for &g in &gens {
                if self.action(k, g).mul(d)? != d.mul(&self.action(k - 1, g))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn homology(&self, k: usize) -> Result<Homology> {
        homology(self.boundary(k + 1), self.boundary(k), self.zranks()[k])
    }

    pub fn all_homology(&self) -> Result<Vec<Homology>> {
        (0..self.len()).map(|k| self.homology(k)).collect()
    }

    /// Exact in degrees `1 … len − 2` with `H₀ ≅ ℤ`.
    pub fn is_resolution(&self) -> Result<bool> {
        if !self.homology(0)?.is_integers() {
            return Ok(false);
        }
        for k in 1..self.len().saturating_sub(1) {
            if !self.homology(k)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Elementary divisors of every boundary.
    pub fn elementary_divisors(&self) -> Result<Vec<Vec<Int>>> {
        self.boundaries.iter().map(|d| Ok(snf(d)?.invariants().into_iter().map(Int::abs).collect())).collect()
    }

    /// The same complex after a change of `ℤ`-basis in each degree, given by
    /// unimodular matrices `p_k` (new basis rows in old coordinates).
    pub fn change_basis(&self, bases: &[IntMatrix]) -> Result<ZGChainComplex> {
        if bases.len() != self.len() {
            return Err(Error::InvalidParameter("one basis per degree is required".into()));
        }
        let mut inverses = Vec::with_capacity(bases.len());
        for (k, b) in bases.iter().enumerate() {
            let h = hnf(b)?;
            if b.rows() != self.zranks()[k] || h.h != IntMatrix::identity(b.rows()) {
                return Err(Error::InvalidParameter(format!("basis in degree {k} is not unimodular of the right size")));
            }
            inverses.push(h.u);
        }
        let boundaries = (1..self.len())
            .map(|k| bases[k].mul(&self.boundaries[k - 1])?.mul(&inverses[k - 1]))
            .collect::<Result<Vec<_>>>()?;
        let n = self.group.order();
        let modules = (0..self.len())
            .map(|k| {
                let actions = (0..n)
                    .map(|g| bases[k].mul(&self.action(k, g))?.mul(&inverses[k]))
                    .collect::<Result<Vec<_>>>()?;
                Ok(ChainModule::Lattice { zrank: bases[k].rows(), actions })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ZGChainComplex { group: self.group.clone(), modules, boundaries })
    }
}

/// The 4-periodic free resolution of `ℤ` over `ℤQ_{4n}`, `periods` periods
/// long, with ranks `(1, 2, 2, 1)` repeating.
pub fn dicyclic_resolution(n: u32, periods: usize) -> Result<ZGChainComplex> {
    if periods == 0 {
        return Err(Error::InvalidParameter("at least one period is required".into()));
    }
    let spec = GroupSpec::Dicyclic(n);
    let zg = GroupRing::new(spec, Integers)?;
    let group = zg.group().clone();
    let t = |terms: &[(i64, [i64; 3])]| zg.from_terms(terms);
    let n = n as i64;
    let x_norm: Vec<(i64, [i64; 3])> = (0..n).map(|a| (1, [a, 0, 0])).collect();
    let d1 = vec![vec![t(&[(1, [1, 0, 0]), (-1, [0, 0, 0])])?], vec![t(&[(1, [0, 1, 0]), (-1, [0, 0, 0])])?]];
    let d2 = vec![
        vec![t(&x_norm)?, t(&[(-1, [0, 1, 0]), (-1, [0, 0, 0])])?],
        vec![t(&[(1, [1, 1, 0]), (1, [0, 0, 0])])?, t(&[(1, [1, 0, 0]), (-1, [0, 0, 0])])?],
    ];
    let d3 = vec![vec![t(&[(1, [1, 0, 0]), (-1, [0, 0, 0])])?, t(&[(1, [0, 0, 0]), (-1, [1, 1, 0])])?]];
    let d4 = vec![vec![zg.norm_element()]];
    let blocks = [block_matrix(&group, &d1), block_matrix(&group, &d2), block_matrix(&group, &d3), block_matrix(&group, &d4)];
    let ranks = [1usize, 2, 2, 1];
    let len = 4 * periods;
    let modules = (0..len).map(|k| ChainModule::Free { rank: ranks[k % 4] }).collect();
    let boundaries = (1..len).map(|k| blocks[(k - 1) % 4].clone()).collect();
    let complex = ZGChainComplex { group, modules, boundaries };
    if !complex.squares_to_zero()? {
        return Err(Error::Inconsistent("resolution boundaries do not compose to zero".into()));
    }
    Ok(complex)
}

/// The resolution over `ℤQ_{8p}`; exactness is checked before returning.
pub fn periodic_resolution(p: u32, periods: usize) -> Result<ZGChainComplex> {
    require_odd_prime(p as i64)?;
    let c = dicyclic_resolution(2 * p, periods)?;
    if !c.is_resolution()? {
        return Err(Error::Inconsistent("periodic resolution is not exact".into()));
    }
    Ok(c)
}

/// A complex with `C₀` replaced by `{(a, b) ∈ C₀ ⊕ ℤ : ε(a) = m·b}`.
#[derive(Clone, Debug)]
pub struct Pullback {
    pub complex: ZGChainComplex,
    pub r: i64,
    pub m: i64,
    /// `ℤ`-basis of the new `C₀` in coordinates of `C₀ ⊕ ℤ`.
    pub basis: IntMatrix,
    /// Projection to the original `C₀`, in the new basis.
    pub comparison: IntMatrix,
}

pub fn pullback_c0(c: &ZGChainComplex, r: i64) -> Result<Pullback> {
    let n = c.group.order();
    if gcd(r, n as i64) != 1 {
        return Err(Error::NotCoprime { value: r, modulus: n as i64 });
    }
    if !matches!(c.modules[0], ChainModule::Free { rank: 1 }) || !c.homology(0)?.is_integers() {
        return Err(Error::InvalidParameter("C₀ must be ℤG with H₀ ≅ ℤ".into()));
    }
    let m = least_positive_inverse(r, n as i64)?;
    let mut eps = IntMatrix::zeros(n + 1, 1);
    for g in 0..n {
        eps.set(g, 0, 1);
    }
    eps.set(n, 0, -(m as Int));
    let basis = left_kernel(&eps)?;
    let lat = LatticeBasis::new(&basis)?;
    let extend = |v: &[Int], last: Int| {
        let mut w = v.to_vec();
        w.push(last);
        w
    };
    let d1 = c.boundaries[0].clone();
    let new_d1 = IntMatrix::from_rows(
        basis.rows(),
        &(0..d1.rows()).map(|i| lat.coords(&extend(d1.row(i), 0))).collect::<Result<Vec<_>>>()?,
    )?;
    let actions = (0..n)
        .map(|g| {
            let act = left_action(&c.group, g, 1);
            let rows = (0..basis.rows())
                .map(|i| {
                    let row = basis.row(i);
                    let moved = act.apply_row(&row[..n])?;
                    lat.coords(&extend(&moved, row[n]))
                })
                .collect::<Result<Vec<_>>>()?;
            IntMatrix::from_rows(basis.rows(), &rows)
        })
        .collect::<Result<Vec<_>>>()?;
    let comparison = basis.select_cols(&(0..n).collect::<Vec<_>>());
    let mut modules = c.modules.clone();
    modules[0] = ChainModule::Lattice { zrank: basis.rows(), actions };
    let mut boundaries = c.boundaries.clone();
    boundaries[0] = new_d1;
    let complex = ZGChainComplex { group: c.group.clone(), modules, boundaries };
    Ok(Pullback { complex, r, m, basis, comparison })
}

impl Pullback {
    /// `f₀ ∘ ∂₁' = ∂₁`, with the identity in higher degrees.
    pub fn comparison_is_chain_map(&self, original: &ZGChainComplex) -> Result<bool> {
        Ok(self.complex.boundaries[0].mul(&self.comparison)? == original.boundaries[0])
    }

    /// Trace of every group element on the new `C₀` equals the regular
    /// character.
    pub fn has_regular_character(&self) -> bool {
        let n = self.complex.group.order();
        let ChainModule::Lattice { actions, .. } = &self.complex.modules[0] else {
            return false;
        };
        actions.iter().enumerate().all(|(g, a)| {
            let tr: Int = (0..a.rows()).map(|i| a.get(i, i)).sum();
            tr == if g == 0 { n as Int } else { 0 }
        })
    }
}

/// The map `H₀(pullback) → H₀(C) ≅ ℤ` as an integer mod `|G|`, with
/// `H₀(pullback)` oriented by the `ℤ`-coordinate of the pullback.
pub fn degree_of_comparison(pb: &Pullback) -> Result<i64> {
    let n = pb.complex.group.order();
    let d1 = &pb.complex.boundaries[0];
    let s = snf(d1)?;
    let rank = s.rank();
    if d1.cols() != rank + 1 || s.invariants().iter().any(|d| d.abs() != 1) {
        return Err(Error::Inconsistent("H₀ of the pullback is not ℤ".into()));
    }
    // Cokernel generator in the original coordinates is row `rank` of V⁻¹.
    let gen = s.v_inv.row(rank).to_vec();
    let coords = IntMatrix::from_rows(pb.basis.rows(), &[gen])?.mul(&pb.basis)?;
    let b = coords.get(0, n);
    if b.abs() != 1 {
        return Err(Error::Inconsistent(format!("H₀ generator has ℤ-coordinate {b}")));
    }
    let a_aug: Int = (0..n).map(|g| coords.get(0, g)).sum();
    Ok(((a_aug * b) as i64).rem_euclid(n as i64))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainReport {
    pub p: u32,
    pub r: i64,
    pub m: i64,
    pub zranks: Vec<usize>,
    pub elementary_divisors: Vec<Vec<Int>>,
    pub homology: Vec<Homology>,
    pub pullback_homology: Vec<Homology>,
    pub degree: i64,
    pub squares_to_zero: bool,
    pub equivariant: bool,
    pub chain_map: bool,
    pub regular_character: bool,
}

pub fn chain_report(p: u32, r: i64) -> Result<ChainReport> {
    let c = periodic_resolution(p, 1)?;
    let pb = pullback_c0(&c, r)?;
    Ok(ChainReport {
        p,
        r,
        m: pb.m,
        zranks: c.zranks(),
        elementary_divisors: c.elementary_divisors()?,
        homology: c.all_homology()?,
        pullback_homology: pb.complex.all_homology()?,
        degree: degree_of_comparison(&pb)?,
        squares_to_zero: c.squares_to_zero()? && pb.complex.squares_to_zero()?,
        equivariant: c.is_equivariant()? && pb.complex.is_equivariant()?,
        chain_map: pb.comparison_is_chain_map(&c)?,
        regular_character: pb.has_regular_character(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_resolution() {
        let c = dicyclic_resolution(3, 2).unwrap();
        assert!(c.squares_to_zero().unwrap());
        assert!(c.is_equivariant().unwrap());
        assert!(c.is_resolution().unwrap());
        assert_eq!(c.zranks(), vec![12, 24, 24, 12, 12, 24, 24, 12]);
        assert!(c.homology(7).unwrap().is_integers());
    }

    #[test]
    fn pullback_small() {
        let c = dicyclic_resolution(3, 1).unwrap();
        for r in [1i64, 5, 7, 11] {
            let pb = pullback_c0(&c, r).unwrap();
            assert!(pb.comparison_is_chain_map(&c).unwrap());
            assert!(pb.has_regular_character());
            assert!(pb.complex.is_equivariant().unwrap());
            assert_eq!(pb.complex.all_homology().unwrap(), c.all_homology().unwrap());
            assert_eq!(degree_of_comparison(&pb).unwrap(), pb.m);
        }
        assert!(pullback_c0(&c, 2).is_err());
    }
}
