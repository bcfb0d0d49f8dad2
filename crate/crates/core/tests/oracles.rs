//! Values computed independently with a computer algebra system and frozen here.

use monodromy_core::cyclotomic::root_minus_one_membership;
use monodromy_core::inertia::{check_cohomology_criterion, group_closure, CoefficientMode, InertiaRep};
use monodromy_core::modular::ModMatrix;
use monodromy_core::spectral::{jordan_partition_unipotent, level2_check};
use monodromy_core::{wedge_power, ExactMatrix, IntPolynomial};

fn phi5() -> ExactMatrix {
    ExactMatrix::companion(&IntPolynomial::from_i64(&[1, 1, 1, 1, 1])).unwrap()
}

fn blocks(ell: usize, big: usize, rem: usize) -> Vec<usize> {
    let mut v = vec![ell; big];
    v.push(rem);
    v
}

#[test]
fn phi5_companion_has_order_five_and_no_fixed_vector_mod_7() {
    let c = phi5();
    assert!(c.pow(5).is_identity());
    assert_eq!(c.add_scalar(-1).kernel_dim_mod_prime(7).unwrap(), 0);
    let rep = InertiaRep::new(CoefficientMode::Integer { ell: 7 }, c, Vec::new(), None, "").unwrap();
    assert_eq!(group_closure(&rep, 7, 100).unwrap().len(), 5);
}

#[test]
fn wedge_jordan_partitions() {
    let cases: &[(usize, usize, Vec<usize>)] = &[
        (5, 2, vec![5, 1]),
        (7, 2, vec![7, 7, 1]),
        (7, 3, vec![7, 7, 6]),
        (7, 4, vec![7, 7, 1]),
        (11, 2, blocks(11, 4, 1)),
        (11, 3, blocks(11, 10, 10)),
        (11, 4, blocks(11, 19, 1)),
        (11, 5, blocks(11, 22, 10)),
        (11, 6, blocks(11, 19, 1)),
        (11, 7, blocks(11, 10, 10)),
        (11, 8, blocks(11, 4, 1)),
    ];
    for (ell, r, expected) in cases {
        let w = wedge_power(&ExactMatrix::jordan_block(ell - 1), *r).unwrap();
        let p = jordan_partition_unipotent(&w, *ell as u64).unwrap();
        assert_eq!(&p.blocks, expected, "ell={ell} r={r}");
    }
}

#[test]
fn cyclotomic_membership_values() {
    for (ell, s, r, n, expected) in [
        (3, 1, 2, 3, true),
        (5, 1, 4, 5, true),
        (5, 1, 3, 5, false),
        (5, 2, 20, 5, true),
        (5, 2, 19, 5, false),
    ] {
        assert_eq!(root_minus_one_membership(ell, s, r, n).unwrap(), expected, "({ell},{s},{r},{n})");
    }
}

#[test]
fn jordan_block_three_fails_level_two_at_four() {
    assert!(!level2_check(&ExactMatrix::jordan_block(3), 4));
}

#[test]
fn twisted_wedges_not_divisible() {
    for (ell, k, dim) in [(5u64, 2usize, 6usize), (5, 3, 6), (7, 2, 8)] {
        let c = ExactMatrix::companion(&monodromy_core::cyclotomic::cyclotomic_prime_power(ell, 1).unwrap()).unwrap();
        let g = c.direct_sum(&ExactMatrix::identity(dim - c.dim()));
        let w = wedge_power(&g, k).unwrap();
        assert!(!w.add_scalar(-1).pow(ell - 1).entries_divisible(ell), "({ell},{k})");
    }
}

#[test]
fn unipotent_wedges_nonvanishing() {
    // J_4 ⊕ I_{dim-4} over F_5
    for (dim, k) in [(6, 2), (6, 4), (7, 3)] {
        let a = ExactMatrix::jordan_block(4).direct_sum(&ExactMatrix::identity(dim - 4));
        let w = wedge_power(&a, k).unwrap();
        assert!(!ModMatrix::from_exact(&w.add_scalar(-1), 5).pow(4).is_zero(), "dim={dim} k={k}");
    }
}

#[test]
fn phi5_twist_fails_h1_test_mod_7() {
    let g = phi5().direct_sum(&ExactMatrix::identity(2));
    let rep = InertiaRep::new(CoefficientMode::Integer { ell: 7 }, g, Vec::new(), None, "").unwrap();
    assert!(!check_cohomology_criterion(&rep, 1, 2, 7, false, 100).unwrap().holds);
}

#[test]
fn order_three_twist_passes_mod_3() {
    let c3 = ExactMatrix::companion(&IntPolynomial::from_i64(&[1, 1, 1])).unwrap();
    let g = ExactMatrix::identity(2).direct_sum(&c3);
    let rep = InertiaRep::new(CoefficientMode::Integer { ell: 3 }, g, Vec::new(), None, "").unwrap();
    for r in [2, 3] {
        for k in 1..=3 {
            assert!(check_cohomology_criterion(&rep, k, r, 3, false, 100).unwrap().holds, "r={r} k={k}");
        }
    }
}
