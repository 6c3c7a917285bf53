use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use swan_core::chains::dicyclic_resolution;
use swan_core::grouprings::{
    GroupRing, Gf2, Integers, IntegersMod, Lambda, Mat2, Mat2Ring, MatrixRep, ModNorm, QuaternionOrder, Ring, ZetaJ,
};
use swan_core::lambda_units::{lambda_unit_kernel, rho2_alpha_values, rho2_image_from_basis};
use swan_core::lattice::{hnf, kernel, snf, CyclicTargetHom, FGAbelianGroup, Int, IntMatrix};
use swan_core::swan::{dihedral_unit, patching_rep_with, sf_set, Rho2Map, SwanInput};
use swan_core::GroupSpec;

const TRIPLES: usize = 10_000;

fn check_axioms<R: Ring>(name: &str, ring: &R, seed: u64, mut gen: impl FnMut(&mut ChaCha8Rng) -> R::Elem) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (zero, one) = (ring.zero(), ring.one());
    for i in 0..TRIPLES {
        let (a, b, c) = (gen(&mut rng), gen(&mut rng), gen(&mut rng));
        let ab = ring.mul(&a, &b);
        let ctx = |law: &str| format!("{name}: {law} fails on triple {i}: {a:?}, {b:?}, {c:?}");
        assert_eq!(ring.add(&ring.add(&a, &b), &c), ring.add(&a, &ring.add(&b, &c)), "{}", ctx("+ assoc"));
        assert_eq!(ring.add(&a, &b), ring.add(&b, &a), "{}", ctx("+ comm"));
        assert_eq!(ring.add(&a, &zero), a, "{}", ctx("+ identity"));
        assert_eq!(ring.add(&a, &ring.neg(&a)), zero, "{}", ctx("+ inverse"));
        assert_eq!(ring.mul(&ab, &c), ring.mul(&a, &ring.mul(&b, &c)), "{}", ctx("· assoc"));
        assert_eq!(ring.mul(&a, &one), a, "{}", ctx("right unit"));
        assert_eq!(ring.mul(&one, &a), a, "{}", ctx("left unit"));
        let bc = ring.add(&b, &c);
        assert_eq!(ring.mul(&a, &bc), ring.add(&ab, &ring.mul(&a, &c)), "{}", ctx("left distrib"));
        assert_eq!(ring.mul(&bc, &a), ring.add(&ring.mul(&b, &a), &ring.mul(&c, &a)), "{}", ctx("right distrib"));
    }
}

fn small_vec(rng: &mut ChaCha8Rng, len: usize, bound: i64) -> Vec<i64> {
    (0..len).map(|_| rng.gen_range(-bound..=bound)).collect()
}

fn bits(rng: &mut ChaCha8Rng, len: usize) -> Vec<u8> {
    (0..len).map(|_| rng.gen_range(0..2u8)).collect()
}

#[test]
fn ring_axioms_scalars() {
    check_axioms("Z", &Integers, 1, |r| r.gen_range(-10_000..=10_000));
    let z56 = IntegersMod::new(56);
    check_axioms("Z/56", &z56, 2, |r| r.gen_range(0..56));
    check_axioms("GF(2)", &Gf2, 3, |r| r.gen_range(0..2));
}

#[test]
fn ring_axioms_polynomial_quotients() {
    let rep = MatrixRep::new(7).unwrap();
    let field = rep.field().clone();
    let deg = field.degree();
    check_axioms("F2[z]/sextic", &field, 4, |r| bits(r, deg));
    let mats = rep.matrices().clone();
    check_axioms("M2(F2[z]/sextic)", &mats, 5, |r| {
        Mat2::new(bits(r, deg), bits(r, deg), bits(r, deg), bits(r, deg))
    });
    let zeta = ZetaJ::new(7).unwrap();
    let d = zeta.cyclotomic_ring().degree();
    check_axioms("Z[zeta28, j]", &zeta, 6, |r| (small_vec(r, d, 3), small_vec(r, d, 3)));
}

#[test]
fn ring_axioms_group_rings() {
    let zq = GroupRing::new(GroupSpec::Dicyclic(14), Integers).unwrap();
    check_axioms("Z[Q56]", &zq, 7, |r| small_vec(r, 56, 2));
    let fq = GroupRing::new(GroupSpec::QSemidirect(3), Gf2).unwrap();
    check_axioms("F2[Q(16,3,1)]", &fq, 8, |r| bits(r, 48));
    let lambda = Lambda::new(7).unwrap();
    check_axioms("Lambda", &lambda, 9, |r| small_vec(r, 28, 2));
    let mn = ModNorm::new(GroupSpec::Dihedral(7)).unwrap();
    let zd = mn.group_ring().clone();
    check_axioms("Z[D14]/N", &mn, 10, |r| mn.reduce(&small_vec(r, zd.group().order(), 3)));
}

#[test]
fn ring_axioms_quaternions_and_matrices() {
    let h = QuaternionOrder::new(Integers);
    check_axioms("Z<i,j>", &h, 11, |r| [0; 4].map(|_| r.gen_range(-50..=50)));
    let m = Mat2Ring::new(IntegersMod::new(56));
    check_axioms("M2(Z/56)", &m, 12, |r| {
        Mat2::new(r.gen_range(0..56), r.gen_range(0..56), r.gen_range(0..56), r.gen_range(0..56))
    });
}

#[test]
fn dihedral_unit_inverse_for_small_n() {
    for n in 2..=15u32 {
        for r in (1..2 * n as i64).filter(|r| swan_core::arith::gcd(*r, 2 * n as i64) == 1) {
            dihedral_unit(n, r).unwrap_or_else(|e| panic!("D_{}: r = {r}: {e}", 2 * n));
        }
    }
}

fn class_with(rho: &Rho2Map, r: u64, s: u64) -> u8 {
    let input = SwanInput::new(7, r as i64).unwrap();
    rho.evaluate(&patching_rep_with(&input, s).unwrap().u).unwrap().class
}

fn least_inverse(r: u64) -> u64 {
    (1..56).find(|s| r * s % 56 == 1).unwrap()
}

#[test]
fn rho2_class_independent_of_s() {
    let rho = Rho2Map::new(7).unwrap();
    for r in sf_set(7).unwrap() {
        let s = least_inverse(r);
        let classes: Vec<u8> = [s, s + 56, s + 112].iter().map(|s| class_with(&rho, r, *s)).collect();
        assert!(classes.iter().all(|c| *c == classes[0]), "r = {r}: {classes:?}");
    }
}

#[test]
fn rho2_class_is_a_homomorphism_on_sf() {
    let rho = Rho2Map::new(7).unwrap();
    let sf = sf_set(7).unwrap();
    let class = |r: u64| class_with(&rho, r, least_inverse(r));
    for &a in &sf {
        for &b in &sf {
            assert_eq!(class(a * b % 56), class(a) ^ class(b), "r1 = {a}, r2 = {b}");
        }
    }
}

fn random_unimodular(rng: &mut ChaCha8Rng, n: usize, steps: usize) -> IntMatrix {
    let mut m = IntMatrix::identity(n);
    for _ in 0..steps {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if i == j {
            continue;
        }
        let c: Int = rng.gen_range(-2..=2);
        for k in 0..n {
            let v = m.get(i, k) + c * m.get(j, k);
            m.set(i, k, v);
        }
        if rng.gen_bool(0.2) {
            for k in 0..n {
                let (a, b) = (m.get(i, k), m.get(j, k));
                m.set(i, k, b);
                m.set(j, k, a);
            }
        }
    }
    m
}

#[test]
fn rho2_image_independent_of_kernel_basis() {
    let rows = lambda_unit_kernel(7).unwrap().kernel.basis_rows();
    let values = rho2_alpha_values(7).unwrap();
    let expected = rho2_image_from_basis(&rows, &values);
    let basis = IntMatrix::from_rows(6, &rows).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..200 {
        let u = random_unimodular(&mut rng, rows.len(), 12);
        let changed = u.mul(&basis).unwrap();
        let changed: Vec<Vec<i64>> = changed.to_rows().iter().map(|r| r.iter().map(|x| *x as i64).collect()).collect();
        assert_eq!(rho2_image_from_basis(&changed, &values), expected);
    }
}

#[test]
fn matrix_rep_is_multiplicative() {
    let rep = MatrixRep::new(7).unwrap();
    let fd = rep.group_ring();
    let n = fd.group().order();
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..500 {
        let (a, b) = (bits(&mut rng, n), bits(&mut rng, n));
        let lhs = rep.apply(&fd.mul(&a, &b)).unwrap();
        let rhs = rep.matrices().mul(&rep.apply(&a).unwrap(), &rep.apply(&b).unwrap());
        assert_eq!(lhs, rhs);
        let sum = rep.apply(&fd.add(&a, &b)).unwrap();
        assert_eq!(sum, rep.matrices().add(&rep.apply(&a).unwrap(), &rep.apply(&b).unwrap()));
    }
}

#[test]
fn homology_invariant_under_basis_change() {
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    for n in [2u32, 3] {
        let c = dicyclic_resolution(n, 1).unwrap();
        let before = c.all_homology().unwrap();
        for _ in 0..3 {
            let bases: Vec<IntMatrix> =
                c.zranks().iter().map(|r| random_unimodular(&mut rng, *r, *r)).collect();
            let d = c.change_basis(&bases).unwrap();
            assert!(d.squares_to_zero().unwrap());
            assert!(d.is_equivariant().unwrap());
            assert_eq!(d.all_homology().unwrap(), before, "Q_{}", 4 * n);
        }
    }
}

fn matrix_strategy() -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
    (1usize..6, 1usize..6).prop_flat_map(|(r, c)| (Just(r), Just(c), prop::collection::vec(-9i64..=9, r * c)))
}

fn to_matrix(r: usize, c: usize, data: &[i64]) -> IntMatrix {
    let rows: Vec<Vec<i64>> = data.chunks(c).map(|x| x.to_vec()).collect();
    IntMatrix::from_rows(c, &rows[..r]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn hnf_is_a_unimodular_transform((r, c, data) in matrix_strategy()) {
        let a = to_matrix(r, c, &data);
        let h = hnf(&a).unwrap();
        prop_assert_eq!(h.u.mul(&a).unwrap(), h.h.clone());
        prop_assert!(h.left_kernel().mul(&a).unwrap().is_zero());
        for (i, &p) in h.pivots.iter().enumerate() {
            prop_assert!(h.h.get(i, p) > 0);
            for k in 0..i {
                prop_assert!((0..h.h.get(i, p)).contains(&h.h.get(k, p)));
            }
        }
    }

    #[test]
    fn snf_diagonalizes_with_divisibility((r, c, data) in matrix_strategy()) {
        let a = to_matrix(r, c, &data);
        let s = snf(&a).unwrap();
        prop_assert_eq!(s.u.mul(&a).unwrap().mul(&s.v).unwrap(), s.s.clone());
        prop_assert_eq!(s.v.mul(&s.v_inv).unwrap(), IntMatrix::identity(c));
        let inv = s.invariants();
        for w in inv.windows(2) {
            prop_assert_eq!(w[1] % w[0], 0);
        }
        prop_assert_eq!(s.rank(), hnf(&a).unwrap().rank());
    }

    #[test]
    fn kernel_of_cyclic_hom(images in prop::collection::vec(-50i64..50, 4), order in 2u64..40) {
        let torsion = vec![0u64, 0, 6, 4];
        let images: Vec<i64> = images
            .iter()
            .zip(&torsion)
            .map(|(x, t)| if *t == 0 { *x } else { x * (order / swan_core::arith::gcd(order as i64, *t as i64) as u64) as i64 })
            .collect();
        let hom = CyclicTargetHom::cyclic(FGAbelianGroup::new(torsion), order, images).unwrap();
        let ker = kernel(&hom).unwrap();
        for row in ker.basis_rows() {
            prop_assert!(hom.apply(&row).unwrap().iter().all(|x| *x == 0));
        }
        prop_assert_eq!(ker.index(), Some(hom.image_order().unwrap()));
    }
}
