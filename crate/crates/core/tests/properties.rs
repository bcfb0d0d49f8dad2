use monodromy_core::arith::{binomial, lcm};
use monodromy_core::cyclotomic::{cyclotomic_polynomial, root_minus_one_membership, MAX_SET_R};
use monodromy_core::exterior::wedge_functoriality_check;
use monodromy_core::modular::ModMatrix;
use monodromy_core::spectral::{is_quasi_unipotent, jordan_partition_unipotent};
use monodromy_core::verify::families::{random_unimodular, rng};
use monodromy_core::{cohomology_action, n_prime_set, n_set, wedge_power, ExactMatrix, IntPolynomial};
use num_bigint::BigInt;
use proptest::prelude::*;

fn matrix(dim: usize, bound: i64) -> impl Strategy<Value = ExactMatrix> {
    prop::collection::vec(-bound..=bound, dim * dim)
        .prop_map(move |v| ExactMatrix::from_fn(dim, |i, j| BigInt::from(v[i * dim + j])))
}

fn sized_matrix(max_dim: usize, bound: i64) -> impl Strategy<Value = ExactMatrix> {
    (1..=max_dim).prop_flat_map(move |d| matrix(d, bound))
}

fn unimodular(dim: usize) -> impl Strategy<Value = ExactMatrix> {
    any::<u64>().prop_map(move |seed| random_unimodular(dim, 3 * dim, &mut rng(seed)))
}

fn unitriangular(dim: usize) -> impl Strategy<Value = ExactMatrix> {
    prop::collection::vec(-2i64..=2, dim * dim).prop_map(move |v| {
        ExactMatrix::from_fn(dim, |i, j| match i.cmp(&j) {
            std::cmp::Ordering::Equal => BigInt::from(1),
            std::cmp::Ordering::Less => BigInt::from(v[i * dim + j]),
            std::cmp::Ordering::Greater => BigInt::from(0),
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn charpoly_is_conjugation_invariant(
        (a, p) in (2usize..=5).prop_flat_map(|d| (matrix(d, 3), unimodular(d)))
    ) {
        let p_inv = p.inverse_unimodular().unwrap();
        let conj = &(&p * &a) * &p_inv;
        prop_assert_eq!(conj.charpoly(), a.charpoly());
    }

    #[test]
    fn companion_has_its_polynomial_as_charpoly(coeffs in prop::collection::vec(-4i64..=4, 1..6)) {
        let mut c = coeffs.clone();
        c.push(1);
        let p = IntPolynomial::from_i64(&c);
        prop_assert_eq!(ExactMatrix::companion(&p).unwrap().charpoly(), p);
    }

    #[test]
    fn adjugate_identity(a in sized_matrix(5, 4)) {
        let lhs = &a * &a.adjugate();
        prop_assert_eq!(lhs, ExactMatrix::identity(a.dim()).scale(&a.determinant()));
    }

    #[test]
    fn unimodular_inverse(p in (1usize..=5).prop_flat_map(unimodular)) {
        let inv = p.inverse_unimodular().unwrap();
        prop_assert!((&p * &inv).is_identity());
        prop_assert!((&inv * &p).is_identity());
    }

    #[test]
    fn inverse_mod_is_an_inverse(a in sized_matrix(4, 5), n in 2u64..40) {
        match a.inverse_mod(n) {
            Ok(inv) => prop_assert!((&a * &inv).reduce_mod(n).is_identity()),
            Err(_) => {
                let det = a.determinant();
                prop_assert!(num_integer::Integer::gcd(&det, &BigInt::from(n)) != BigInt::from(1));
            }
        }
    }

    #[test]
    fn rank_and_kernel_add_up(a in sized_matrix(6, 3), ell in prop::sample::select(vec![2u64, 3, 5, 7, 11])) {
        let rank = a.rank_mod_prime(ell).unwrap();
        prop_assert_eq!(rank + a.kernel_dim_mod_prime(ell).unwrap(), a.dim());
        let over_q = monodromy_core::matrix::rank_over_rationals(a.dim(), a.dim(), a.entries());
        prop_assert!(rank <= over_q);
        prop_assert_eq!(over_q == a.dim(), a.determinant() != BigInt::from(0));
    }

    #[test]
    fn divisibility_is_an_ideal(a in sized_matrix(4, 5), n in 2u64..30) {
        let b = a.scale(&BigInt::from(n));
        prop_assert!(b.entries_divisible(n));
        prop_assert!((&b * &a).entries_divisible(n));
        prop_assert!((&a * &b).entries_divisible(n));
    }

    #[test]
    fn wedge_is_functorial((a, b, k) in (2usize..=5).prop_flat_map(|d| (matrix(d, 3), matrix(d, 3), 1..=d))) {
        prop_assert!(wedge_functoriality_check(&a, &b, k).unwrap());
    }

    #[test]
    fn wedge_commutes_with_transpose((a, k) in (2usize..=5).prop_flat_map(|d| (matrix(d, 3), 1..=d))) {
        prop_assert_eq!(wedge_power(&a.transpose(), k).unwrap(), wedge_power(&a, k).unwrap().transpose());
    }

    #[test]
    fn wedge_determinant_law((a, k) in (2usize..=4).prop_flat_map(|d| (matrix(d, 3), 1..=d))) {
        // det ∧^k A = det(A)^{C(n-1, k-1)}
        let n = a.dim();
        let expected = num_traits::Pow::pow(a.determinant(), binomial(n - 1, k - 1) as u32);
        prop_assert_eq!(wedge_power(&a, k).unwrap().determinant(), expected);
    }

    #[test]
    fn cohomology_action_is_a_homomorphism(
        (p, q, k) in (2usize..=5).prop_flat_map(|d| (unimodular(d), unimodular(d), 1..d))
    ) {
        let lhs = cohomology_action(&(&p * &q), k).unwrap();
        let rhs = &cohomology_action(&p, k).unwrap() * &cohomology_action(&q, k).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn jordan_partition_is_conjugation_invariant(
        (u, seed) in (2usize..=7).prop_flat_map(|d| (unitriangular(d), any::<u64>())),
        ell in prop::sample::select(vec![2u64, 3, 5, 7]),
    ) {
        let p = random_unimodular(u.dim(), 3 * u.dim(), &mut rng(seed));
        let conj = &(&p * &u) * &p.inverse_unimodular().unwrap();
        let a = jordan_partition_unipotent(&u, ell).unwrap();
        let b = jordan_partition_unipotent(&conj, ell).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(a.dim(), u.dim());
        // The largest block is the nilpotency index of u - 1 mod ℓ.
        let n = ModMatrix::from_exact(&u.add_scalar(-1), ell);
        prop_assert!(n.pow(a.max_block() as u64).is_zero());
        prop_assert!(!n.pow(a.max_block() as u64 - 1).is_zero() || a.max_block() == 1);
    }

    #[test]
    fn quasi_unipotent_order_is_lcm_of_conductors(ds in prop::collection::vec(1u64..=12, 1..4)) {
        let mut a: Option<ExactMatrix> = None;
        for &d in &ds {
            let c = ExactMatrix::companion(&cyclotomic_polynomial(d)).unwrap();
            a = Some(match a {
                None => c,
                Some(prev) => prev.direct_sum(&c),
            });
        }
        let report = is_quasi_unipotent(&a.unwrap());
        prop_assert!(report.is_quasi_unipotent);
        prop_assert_eq!(report.order, Some(ds.iter().fold(1, |acc, &d| lcm(acc, d))));
    }

    #[test]
    fn membership_matches_valuation_law(
        ell in prop::sample::select(vec![2u64, 3, 5, 7, 11]),
        s in 1u32..=2,
        m in 1u32..=3,
        r in 1u64..=40,
    ) {
        let threshold = u64::from(m) * ell.pow(s - 1) * (ell - 1);
        prop_assert_eq!(root_minus_one_membership(ell, s, r, ell.pow(m)).unwrap(), r >= threshold);
    }

    #[test]
    fn narrow_exceptional_set_is_a_subset(r in 1u64..=MAX_SET_R) {
        let full = n_set(r).unwrap();
        let narrow = n_prime_set(r).unwrap();
        prop_assert!(narrow.is_subset(&full));
        for n in full.difference(&narrow).iter() {
            let (ell, m) = monodromy_core::arith::prime_power(n).unwrap();
            prop_assert!(ell >= 5 && u64::from(m) * (ell - 1) == r);
        }
    }
}

#[test]
fn exceptional_sets_for_small_r() {
    let expected = [
        (1, "{1, 2}", "{1, 2}"),
        (2, "{1, 2, 3, 4}", "{1, 2, 3, 4}"),
        (3, "{1, 2, 3, 4, 8}", "{1, 2, 3, 4, 8}"),
        (4, "{1, 2, 3, 4, 5, 8, 9, 16}", "{1, 2, 3, 4, 8, 9, 16}"),
    ];
    for (r, full, narrow) in expected {
        assert_eq!(n_set(r).unwrap().to_string(), full);
        assert_eq!(n_prime_set(r).unwrap().to_string(), narrow);
    }
}

#[test]
fn exceptional_sets_reject_overflowing_r() {
    assert_eq!(n_set(MAX_SET_R).unwrap().as_slice().last(), Some(&(1u64 << 63)));
    assert!(n_set(MAX_SET_R + 1).is_err());
    assert!(n_prime_set(MAX_SET_R + 1).is_err());
}
