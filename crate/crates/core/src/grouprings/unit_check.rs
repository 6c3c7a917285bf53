//! Invertibility: linear solves over GF(2)-algebras, candidate checks over
//! ℤ-based rings, and exact norms in `ℤ[x]/(f)`.

use crate::error::{Error, Result};

use super::poly::PolyQuot;
use super::ring::{Gf2Algebra, Ring};
use super::scalar::Integers;

/// Solves `e·v = 1` over GF(2); returns the inverse when `e` is a unit.
pub fn gf2_inverse<A: Gf2Algebra>(alg: &A, e: &A::Elem) -> Option<A::Elem> {
    let n = alg.gf2_dim();
    let basis: Vec<A::Elem> = (0..n)
        .map(|k| {
            let mut bits = vec![0u8; n];
            bits[k] = 1;
            alg.from_gf2_coords(&bits)
        })
        .collect();
    // Column k holds the coordinates of e·b_k; augment with the target.
    let cols: Vec<Vec<u8>> = basis.iter().map(|b| alg.gf2_coords(&alg.mul(e, b))).collect();
    let target = alg.gf2_coords(&alg.one());
    let mut rows: Vec<Vec<u8>> = (0..n)
        .map(|r| {
            let mut row: Vec<u8> = cols.iter().map(|c| c[r]).collect();
            row.push(target[r]);
            row
        })
        .collect();
    let solution = solve_gf2(&mut rows, n)?;
    let inv = alg.from_gf2_coords(&solution);
    (alg.is_one(&alg.mul(e, &inv)) && alg.is_one(&alg.mul(&inv, e))).then_some(inv)
}

/// Gaussian elimination on an augmented `n × (n+1)` system; `None` if the
/// system is singular or inconsistent.
fn solve_gf2(rows: &mut [Vec<u8>], n: usize) -> Option<Vec<u8>> {
    let mut pivot_row = 0;
    let mut pivots = Vec::new();
    for col in 0..n {
        let Some(r) = (pivot_row..rows.len()).find(|&r| rows[r][col] == 1) else {
            continue;
        };
        rows.swap(pivot_row, r);
        for r in 0..rows.len() {
            if r != pivot_row && rows[r][col] == 1 {
                let (src, dst) = if r < pivot_row {
                    let (lo, hi) = rows.split_at_mut(pivot_row);
                    (&hi[0], &mut lo[r])
                } else {
                    let (lo, hi) = rows.split_at_mut(r);
                    (&lo[pivot_row], &mut hi[0])
                };
                for (d, s) in dst.iter_mut().zip(src.iter()) {
                    *d ^= s;
                }
            }
        }
        pivots.push(col);
        pivot_row += 1;
    }
    if pivots.len() < n {
        return None;
    }
    Some((0..n).map(|r| rows[r][n]).collect())
}

/// Decides invertibility in a finite GF(2)-algebra.
pub fn unit_check<A: Gf2Algebra>(alg: &A, e: &A::Elem) -> Result<A::Elem> {
    gf2_inverse(alg, e).ok_or_else(|| Error::NotAUnit(alg.render(e)))
}

/// Confirms that `candidate` is a two-sided inverse of `e`.
pub fn verify_inverse<R: Ring>(ring: &R, e: &R::Elem, candidate: &R::Elem) -> Result<()> {
    if ring.is_one(&ring.mul(e, candidate)) && ring.is_one(&ring.mul(candidate, e)) {
        Ok(())
    } else {
        Err(Error::NotAUnit(format!(
            "{} is not inverse to {}",
            ring.render(candidate),
            ring.render(e)
        )))
    }
}

/// The norm `N(a) = det(v ↦ a·v)` in `ℤ[x]/(f)`; `a` is a unit iff it is ±1.
pub fn integral_norm(ring: &PolyQuot<Integers>, a: &[i64]) -> Result<i128> {
    let d = ring.degree();
    let a = a.to_vec();
    let mut m: Vec<Vec<i128>> = vec![vec![0; d]; d];
    for k in 0..d {
        let col = ring.mul(&a, &ring.monomial(k));
        for r in 0..d {
            m[r][k] = col[r] as i128;
        }
    }
    bareiss_det(m)
}

/// Fraction-free determinant.
pub fn bareiss_det(mut m: Vec<Vec<i128>>) -> Result<i128> {
    let n = m.len();
    if n == 0 {
        return Ok(1);
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            let Some(r) = (k + 1..n).find(|&r| m[r][k] != 0) else {
                return Ok(0);
            };
            m.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j]
                    .checked_mul(m[k][k])
                    .and_then(|a| m[i][k].checked_mul(m[k][j]).and_then(|b| a.checked_sub(b)))
                    .ok_or(Error::Overflow)?;
                m[i][j] = num / prev;
            }
        }
        prev = m[k][k];
    }
    Ok(sign * m[n - 1][n - 1])
}

#[cfg(test)]
mod tests {
    use super::super::group_ring::GroupRing;
    use super::super::poly::{cyclotomic, poly_mod, poly_mul};
    use super::super::scalar::Gf2;
    use super::*;
    use crate::groups::GroupSpec;

    #[test]
    fn klein_four_non_unit() {
        let f = GroupRing::new(GroupSpec::KleinFour, Gf2).unwrap();
        let e = f.from_terms(&[(1, [0, 0, 0]), (1, [1, 0, 0])]).unwrap();
        assert!(matches!(unit_check(&f, &e), Err(Error::NotAUnit(_))));
        let u = f.from_terms(&[(1, [0, 0, 0]), (1, [1, 0, 0]), (1, [0, 1, 0])]).unwrap();
        let inv = unit_check(&f, &u).unwrap();
        assert!(f.is_one(&f.mul(&u, &inv)));
    }

    #[test]
    fn one_plus_x4_mod_phi7_squared() {
        let phi = cyclotomic(7);
        let m = poly_mod(&poly_mul(&phi, &phi), 2);
        let r = PolyQuot::from_int_modulus(Gf2, &m, "x").unwrap();
        let e = r.from_int_coeffs(&[1, 0, 0, 0, 1]);
        unit_check(&r, &e).unwrap();
    }

    #[test]
    fn norms() {
        let zi = PolyQuot::from_int_modulus(Integers, &[1, 0, 1], "i").unwrap();
        assert_eq!(integral_norm(&zi, &[3, 4]).unwrap(), 25);
        assert_eq!(integral_norm(&zi, &[0, 1]).unwrap(), 1);
        assert_eq!(bareiss_det(vec![vec![0, 1], vec![1, 0]]).unwrap(), -1);
    }
}
