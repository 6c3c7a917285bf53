//! Finitely generated abelian groups as integer lattices: Hermite and Smith
//! normal forms with recorded transforms, kernels of maps to finite cyclic
//! groups, subgroup membership and equality, and brute-force discrete logs.
//!
//! Everything is row-vector style: a lattice is the row space of a matrix and
//! a homomorphism acts as `v ↦ v·M`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grouprings::Ring;

pub type Int = i128;

#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

fn add(a: Int, b: Int) -> Result<Int> {
    a.checked_add(b).ok_or(Error::Overflow)
}

fn mul(a: Int, b: Int) -> Result<Int> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

/// `(g, x, y)` with `g = ax + by ≥ 0`.
fn xgcd(a: Int, b: Int) -> (Int, Int, Int) {
    if a != 0 && b % a == 0 {
        return (a.abs(), a.signum(), 0);
    }
    let (mut r0, mut r1, mut s0, mut s1, mut t0, mut t1) = (a, b, 1, 0, 0, 1);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows<T: Copy + Into<Int>>(cols: usize, rows: &[Vec<T>]) -> Result<Self> {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::InvalidParameter(format!(
                    "row {i} has length {}, expected {cols}",
                    r.len()
                )));
            }
            for (j, v) in r.iter().enumerate() {
                m.data[i * cols + j] = (*v).into();
            }
        }
        Ok(m)
    }

    pub fn diagonal(entries: &[Int]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, d) in entries.iter().enumerate() {
            m.data[i * n + i] = *d;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Int {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Int) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Int] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Int>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| *v == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::InvalidParameter("dimension mismatch in product".into()));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b != 0 {
                        let v = add(out.get(i, j), mul(a, b)?)?;
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `v·M` for a row vector `v`.
    pub fn apply_row(&self, v: &[Int]) -> Result<Vec<Int>> {
        let m = IntMatrix::from_rows(self.rows, &[v.to_vec()])?;
        Ok(m.mul(self)?.data)
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.cols {
            return Err(Error::InvalidParameter("column mismatch in vstack".into()));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(IntMatrix { rows: self.rows + other.rows, cols: self.cols, data })
    }

    /// Keeps the listed rows.
    pub fn select_rows(&self, idx: &[usize]) -> IntMatrix {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend_from_slice(self.row(i));
        }
        IntMatrix { rows: idx.len(), cols: self.cols, data }
    }

    /// Keeps the listed columns.
    pub fn select_cols(&self, idx: &[usize]) -> IntMatrix {
        let mut m = Self::zeros(self.rows, idx.len());
        for i in 0..self.rows {
            for (k, &j) in idx.iter().enumerate() {
                m.set(i, k, self.get(i, j));
            }
        }
        m
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// `row dst += q · row src`.
    fn row_axpy(&mut self, dst: usize, src: usize, q: Int) -> Result<()> {
        if q == 0 {
            return Ok(());
        }
        for j in 0..self.cols {
            let s = self.get(src, j);
            if s != 0 {
                let v = add(self.get(dst, j), mul(q, s)?)?;
                self.set(dst, j, v);
            }
        }
        Ok(())
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -self.get(r, j);
            self.set(r, j, v);
        }
    }

    /// Rows `(a, b) ← (x·a + y·b, z·a + w·b)`.
    fn row_mix(&mut self, a: usize, b: usize, [x, y, z, w]: [Int; 4]) -> Result<()> {
        for j in 0..self.cols {
            let (u, v) = (self.get(a, j), self.get(b, j));
            if u == 0 && v == 0 {
                continue;
            }
            self.set(a, j, add(mul(x, u)?, mul(y, v)?)?);
            self.set(b, j, add(mul(z, u)?, mul(w, v)?)?);
        }
        Ok(())
    }

    /// Columns `(a, b) ← (x·a + y·b, z·a + w·b)`.
    fn col_mix(&mut self, a: usize, b: usize, [x, y, z, w]: [Int; 4]) -> Result<()> {
        for i in 0..self.rows {
            let (u, v) = (self.get(i, a), self.get(i, b));
            if u == 0 && v == 0 {
                continue;
            }
            self.set(i, a, add(mul(x, u)?, mul(y, v)?)?);
            self.set(i, b, add(mul(z, u)?, mul(w, v)?)?);
        }
        Ok(())
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.to_rows()).finish()
    }
}

/// Row Hermite normal form `H = U·A` with `U` unimodular.
#[derive(Clone, Debug)]
pub struct Hnf {
    pub h: IntMatrix,
    pub u: IntMatrix,
    /// Pivot column of each nonzero row of `h`, in order.
    pub pivots: Vec<usize>,
}

impl Hnf {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// The nonzero rows: a basis of the row lattice.
    pub fn basis(&self) -> IntMatrix {
        self.h.select_rows(&(0..self.rank()).collect::<Vec<_>>())
    }

    /// Rows of `U` whose image is zero: a basis of the left kernel of `A`.
    pub fn left_kernel(&self) -> IntMatrix {
        self.u.select_rows(&(self.rank()..self.h.rows()).collect::<Vec<_>>())
    }
}

/// Row-style HNF: echelon form, positive pivots, entries above each pivot
/// reduced into `[0, pivot)`, zero rows last.
pub fn hnf(a: &IntMatrix) -> Result<Hnf> {
    let mut h = a.clone();
    let mut u = IntMatrix::identity(a.rows);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..h.cols {
        if row == h.rows {
            break;
        }
        for i in row + 1..h.rows {
            let b = h.get(i, col);
            if b == 0 {
                continue;
            }
            let a_ = h.get(row, col);
            let (g, x, y) = xgcd(a_, b);
            let t = [x, y, -b / g, a_ / g];
            h.row_mix(row, i, t)?;
            u.row_mix(row, i, t)?;
        }
        let p = h.get(row, col);
        if p == 0 {
            continue;
        }
        if p < 0 {
            h.negate_row(row);
            u.negate_row(row);
        }
        let p = h.get(row, col);
        for k in 0..row {
            let q = h.get(k, col).div_euclid(p);
            h.row_axpy(k, row, -q)?;
            u.row_axpy(k, row, -q)?;
        }
        pivots.push(col);
        row += 1;
    }
    Ok(Hnf { h, u, pivots })
}

/// Coefficients `c` with `c·basis = v` when `v` lies in the row lattice of an
/// HNF basis (rows in echelon form with the given pivots).
pub fn solve_in_hnf(basis: &IntMatrix, pivots: &[usize], v: &[Int]) -> Result<Option<Vec<Int>>> {
    let mut rem = v.to_vec();
    let mut coeffs = vec![0; basis.rows()];
    for (r, &c) in pivots.iter().enumerate() {
        if rem[..c].iter().any(|x| *x != 0) {
            return Ok(None);
        }
        let p = basis.get(r, c);
        if rem[c] % p != 0 {
            return Ok(None);
        }
        let q = rem[c] / p;
        coeffs[r] = q;
        for j in c..rem.len() {
            rem[j] = add(rem[j], -mul(q, basis.get(r, j))?)?;
        }
    }
    Ok(rem.iter().all(|x| *x == 0).then_some(coeffs))
}

/// Smith normal form `S = U·A·V` with `U`, `V` unimodular; `v_inv = V⁻¹`.
#[derive(Clone, Debug)]
pub struct Snf {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
}

impl Snf {
    /// Nonzero diagonal entries, each dividing the next.
    pub fn invariants(&self) -> Vec<Int> {
        (0..self.s.rows.min(self.s.cols))
            .map(|i| self.s.get(i, i))
            .take_while(|d| *d != 0)
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariants().len()
    }
}

pub fn snf(a: &IntMatrix) -> Result<Snf> {
    let (m, n) = (a.rows, a.cols);
    let mut s = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);
    let mut vi = IntMatrix::identity(n);
    let mut t = 0;
    while t < m.min(n) {
        // Smallest nonzero entry in the remaining block becomes the pivot.
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                let x = s.get(i, j);
                if x != 0 && best.is_none_or(|(bi, bj)| x.abs() < s.get(bi, bj).abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        s.swap_rows(t, pi);
        u.swap_rows(t, pi);
        s.swap_cols(t, pj);
        v.swap_cols(t, pj);
        vi.swap_rows(t, pj);
        loop {
            let mut done = true;
            for i in t + 1..m {
                let b = s.get(i, t);
                if b == 0 {
                    continue;
                }
                let a_ = s.get(t, t);
                let (g, x, y) = xgcd(a_, b);
                let tr = [x, y, -b / g, a_ / g];
                s.row_mix(t, i, tr)?;
                u.row_mix(t, i, tr)?;
            }
            for j in t + 1..n {
                let b = s.get(t, j);
                if b == 0 {
                    continue;
                }
                let a_ = s.get(t, t);
                let (g, x, y) = xgcd(a_, b);
                let (p, q) = (-b / g, a_ / g);
                // New columns (t, j) = (x·c_t + y·c_j, p·c_t + q·c_j); the
                // inverse acts on rows t, j of V⁻¹ as [[q, -p], [-y, x]].
                s.col_mix(t, j, [x, y, p, q])?;
                v.col_mix(t, j, [x, y, p, q])?;
                vi.row_mix(t, j, [q, -p, -y, x])?;
                done = false;
            }
            if done && (t + 1..m).all(|i| s.get(i, t) == 0) {
                // Enforce divisibility: fold any non-multiple into row t.
                let d = s.get(t, t);
                let bad = (t + 1..m)
                    .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                    .find(|&(i, j)| s.get(i, j) % d != 0);
                match bad {
                    Some((i, _)) => {
                        s.row_axpy(t, i, 1)?;
                        u.row_axpy(t, i, 1)?;
                    }
                    None => break,
                }
            }
        }
        if s.get(t, t) < 0 {
            s.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }
    let out = Snf { s, u, v, v_inv: vi };
    debug_assert!(out.u.mul(a).and_then(|x| x.mul(&out.v)).map(|x| x == out.s).unwrap_or(false));
    Ok(out)
}

/// Left integer kernel `{v : v·A = 0}` as an HNF basis.
pub fn left_kernel(a: &IntMatrix) -> Result<IntMatrix> {
    let k = hnf(a)?.left_kernel();
    if k.rows() == 0 {
        return Ok(k);
    }
    Ok(hnf(&k)?.basis())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FGAbelianGroup {
    /// Order of each generator, `0` for infinite order.
    pub torsion: Vec<u64>,
}

impl FGAbelianGroup {
    pub fn new(torsion: Vec<u64>) -> Self {
        FGAbelianGroup { torsion }
    }

    pub fn free(rank: usize) -> Self {
        FGAbelianGroup { torsion: vec![0; rank] }
    }

    pub fn rank(&self) -> usize {
        self.torsion.len()
    }

    pub fn reduce(&self, v: &[i64]) -> Vec<i64> {
        v.iter()
            .zip(&self.torsion)
            .map(|(x, d)| if *d > 0 { x.rem_euclid(*d as i64) } else { *x })
            .collect()
    }

    fn relation_rows(&self) -> Vec<Vec<Int>> {
        let n = self.rank();
        self.torsion
            .iter()
            .enumerate()
            .filter(|(_, d)| **d > 0)
            .map(|(i, d)| {
                let mut r = vec![0; n];
                r[i] = *d as Int;
                r
            })
            .collect()
    }
}

/// A subgroup of an [`FGAbelianGroup`], stored as the HNF of its generators
/// together with the ambient torsion relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentLattice {
    ambient: FGAbelianGroup,
    basis: IntMatrix,
    pivots: Vec<usize>,
}

impl ExponentLattice {
    pub fn from_generators(ambient: &FGAbelianGroup, gens: &[Vec<i64>]) -> Result<Self> {
        let n = ambient.rank();
        let mut rows: Vec<Vec<Int>> = Vec::new();
        for g in gens {
            if g.len() != n {
                return Err(Error::AmbientMismatch);
            }
            rows.push(g.iter().map(|v| *v as Int).collect());
        }
        rows.extend(ambient.relation_rows());
        let m = IntMatrix::from_rows(n, &rows)?;
        let h = hnf(&m)?;
        Ok(ExponentLattice { ambient: ambient.clone(), basis: h.basis(), pivots: h.pivots })
    }

    pub fn ambient(&self) -> &FGAbelianGroup {
        &self.ambient
    }

    /// The canonical HNF basis (torsion relations included).
    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vec<i64>> {
        self.basis.to_rows().into_iter().map(|r| r.into_iter().map(|v| v as i64).collect()).collect()
    }

    pub fn contains(&self, v: &[i64]) -> Result<bool> {
        if v.len() != self.ambient.rank() {
            return Err(Error::AmbientMismatch);
        }
        let v: Vec<Int> = v.iter().map(|x| *x as Int).collect();
        Ok(solve_in_hnf(&self.basis, &self.pivots, &v)?.is_some())
    }

    /// `[ambient : self]`, or `None` when infinite.
    pub fn index(&self) -> Option<u128> {
        if self.pivots.len() < self.ambient.rank() {
            return None;
        }
        Some((0..self.pivots.len()).map(|r| self.basis.get(r, self.pivots[r]) as u128).product())
    }

    pub fn is_subgroup_of(&self, other: &ExponentLattice) -> Result<Option<Vec<i64>>> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch);
        }
        for row in self.basis_rows() {
            if !other.contains(&row)? {
                return Ok(Some(row));
            }
        }
        Ok(None)
    }
}

/// Outcome of comparing two subgroups; each witness is a basis vector of one
/// side that the other side does not contain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupComparison {
    pub equal: bool,
    pub left_not_in_right: Option<Vec<i64>>,
    pub right_not_in_left: Option<Vec<i64>>,
}

pub fn subgroup_equal(a: &ExponentLattice, b: &ExponentLattice) -> Result<SubgroupComparison> {
    let left_not_in_right = a.is_subgroup_of(b)?;
    let right_not_in_left = b.is_subgroup_of(a)?;
    let equal = left_not_in_right.is_none() && right_not_in_left.is_none();
    debug_assert_eq!(equal, a.basis == b.basis);
    Ok(SubgroupComparison { equal, left_not_in_right, right_not_in_left })
}

/// A homomorphism from an [`FGAbelianGroup`] to `∏ ℤ/T_k`, given by the
/// residues of each generator's image.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicTargetHom {
    ambient: FGAbelianGroup,
    targets: Vec<u64>,
    /// `images[i][k]` is the `k`-th component of generator `i`'s image.
    images: Vec<Vec<i64>>,
}

impl CyclicTargetHom {
    pub fn new(ambient: FGAbelianGroup, targets: Vec<u64>, images: Vec<Vec<i64>>) -> Result<Self> {
        if images.len() != ambient.rank() || images.iter().any(|r| r.len() != targets.len()) {
            return Err(Error::AmbientMismatch);
        }
        if targets.contains(&0) {
            return Err(Error::InvalidParameter("target orders must be positive".into()));
        }
        for (i, (d, img)) in ambient.torsion.iter().zip(&images).enumerate() {
            for (k, (t, c)) in targets.iter().zip(img).enumerate() {
                if *d > 0 && (*d as i128 * *c as i128).rem_euclid(*t as i128) != 0 {
                    return Err(Error::IncompatibleTorsion(format!(
                        "generator {i} has order {d} but image component {k} is {c} mod {t}"
                    )));
                }
            }
        }
        let images = images
            .into_iter()
            .map(|r| r.iter().zip(&targets).map(|(c, t)| c.rem_euclid(*t as i64)).collect())
            .collect();
        Ok(CyclicTargetHom { ambient, targets, images })
    }

    /// A map into a single cyclic group.
    pub fn cyclic(ambient: FGAbelianGroup, order: u64, images: Vec<i64>) -> Result<Self> {
        Self::new(ambient, vec![order], images.into_iter().map(|c| vec![c]).collect())
    }

    pub fn ambient(&self) -> &FGAbelianGroup {
        &self.ambient
    }

    pub fn targets(&self) -> &[u64] {
        &self.targets
    }

    pub fn apply(&self, v: &[i64]) -> Result<Vec<i64>> {
        if v.len() != self.ambient.rank() {
            return Err(Error::AmbientMismatch);
        }
        Ok(self
            .targets
            .iter()
            .enumerate()
            .map(|(k, t)| {
                let s: i128 = v.iter().zip(&self.images).map(|(e, img)| *e as i128 * img[k] as i128).sum();
                s.rem_euclid(*t as i128) as i64
            })
            .collect())
    }

    fn stacked(&self) -> Result<IntMatrix> {
        let k = self.targets.len();
        let img = IntMatrix::from_rows(k, &self.images)?;
        let diag: Vec<Int> = self.targets.iter().map(|t| *t as Int).collect();
        img.vstack(&IntMatrix::diagonal(&diag))
    }

    /// `|image|`, computed in the target as `∏T_k / [target : image]`.
    pub fn image_order(&self) -> Result<u128> {
        let h = hnf(&self.stacked()?)?;
        let det: u128 = (0..h.rank()).map(|r| h.h.get(r, h.pivots[r]) as u128).product();
        let total: u128 = self.targets.iter().map(|t| *t as u128).product();
        Ok(total / det)
    }
}

/// The kernel of a homomorphism into finite cyclic groups.
pub fn kernel(hom: &CyclicTargetHom) -> Result<ExponentLattice> {
    let n = hom.ambient.rank();
    let k = left_kernel(&hom.stacked()?)?;
    let gens: Vec<Vec<i64>> = k
        .to_rows()
        .into_iter()
        .map(|r| r[..n].iter().map(|v| i64::try_from(*v).map_err(|_| Error::Overflow)).collect())
        .collect::<Result<_>>()?;
    ExponentLattice::from_generators(&hom.ambient, &gens)
}

/// Least `k ≥ 0` with `base^k = target`, by exhaustive scan of `⟨base⟩`.
pub fn dlog<R: Ring>(ring: &R, target: &R::Elem, base: &R::Elem, limit: u64) -> Result<u64> {
    let mut acc = ring.one();
    for k in 0..=limit {
        if acc == *target {
            return Ok(k);
        }
        acc = ring.mul(&acc, base);
        if k > 0 && ring.is_one(&acc) {
            break;
        }
    }
    Err(Error::NotInSubgroup)
}

/// Multiplicative order of `a` by scanning, up to `limit`.
pub fn element_order<R: Ring>(ring: &R, a: &R::Elem, limit: u64) -> Option<u64> {
    let mut acc = a.clone();
    for k in 1..=limit {
        if ring.is_one(&acc) {
            return Some(k);
        }
        acc = ring.mul(&acc, a);
    }
    None
}
