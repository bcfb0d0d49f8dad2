//! Unipotency, quasi-unipotency, echelon and Jordan-partition analysis.
//!
//! Unipotency of an integer representative is always tested over `Z`
//! (characteristic zero). Statements over `F_ℓ` go through
//! [`jordan_partition_unipotent`] and the explicit `*_mod` helpers.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::arith;
use crate::cyclotomic::cyclotomic_cached;
use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::modular::ModMatrix;
use crate::poly::IntPolynomial;

/// Jordan block sizes of a unipotent operator over `F_ℓ`, weakly decreasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanPartition {
    pub blocks: Vec<usize>,
    pub field_char: u64,
}

impl JordanPartition {
    pub fn dim(&self) -> usize {
        self.blocks.iter().sum()
    }

    /// Largest block, i.e. the nilpotency index of `A - 1`.
    pub fn max_block(&self) -> usize {
        self.blocks.first().copied().unwrap_or(0)
    }

    pub fn count(&self, size: usize) -> usize {
        self.blocks.iter().filter(|&&b| b == size).count()
    }
}

/// Cyclotomic factorization of a characteristic polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiUnipotentReport {
    pub is_quasi_unipotent: bool,
    /// Least `m` with every eigenvalue an `m`-th root of unity.
    pub order: Option<u64>,
    /// `(conductor d, multiplicity of Φ_d)`, ascending in `d`.
    pub cyclotomic_factors: Vec<(u64, u32)>,
}

pub fn is_unipotent(a: &ExactMatrix) -> bool {
    nilpotent(&a.add_scalar(-1))
}

pub fn is_neg_unipotent(a: &ExactMatrix) -> bool {
    nilpotent(&a.add_scalar(1))
}

/// `n^dim = 0`, via repeated squaring.
fn nilpotent(n: &ExactMatrix) -> bool {
    let dim = n.dim();
    let mut power = n.clone();
    let mut exponent = 1;
    while exponent < dim {
        if power.is_zero() {
            return true;
        }
        power = &power * &power;
        exponent *= 2;
    }
    power.is_zero()
}

/// Least `e` with `(a - I)^e = 0`, or `None` if `a` is not unipotent.
pub fn unipotent_echelon(a: &ExactMatrix) -> Option<usize> {
    let n = a.add_scalar(-1);
    let mut power = n.clone();
    for e in 1..=a.dim() {
        if power.is_zero() {
            return Some(e);
        }
        power = &power * &n;
    }
    None
}

/// `(a^m - I)^2 = 0` exactly.
pub fn level2_check(a: &ExactMatrix, m: u64) -> bool {
    let shifted = a.pow(m).add_scalar(-1);
    (&shifted * &shifted).is_zero()
}

/// Factors the characteristic polynomial into cyclotomic polynomials by
/// trial division over every conductor `d <= 2·dim²` with `φ(d) <= dim`.
pub fn is_quasi_unipotent(a: &ExactMatrix) -> QuasiUnipotentReport {
    let dim = a.dim() as u64;
    let bound = (2 * dim * dim).max(2);
    let mut rest = a.charpoly();
    let mut factors = Vec::new();
    let mut order = 1u64;
    let mut cache = BTreeMap::new();
    for d in 1..=bound {
        let remaining = rest.degree().unwrap_or(0) as u64;
        if arith::totient(d) > remaining {
            continue;
        }
        let phi = cyclotomic_cached(d, &mut cache);
        let mut mult = 0u32;
        while let Some(q) = rest.div_exact_monic(&phi) {
            rest = q;
            mult += 1;
        }
        if mult > 0 {
            factors.push((d, mult));
            order = arith::lcm(order, d);
        }
        if rest.is_one() {
            break;
        }
    }
    let complete = rest.is_one();
    QuasiUnipotentReport {
        is_quasi_unipotent: complete,
        order: complete.then_some(order),
        cyclotomic_factors: factors,
    }
}

/// Ranks of `N^0, N^1, …` over `F_ℓ` until they reach zero, where `N = a - I`.
///
/// Fails when `N` is not nilpotent modulo `ℓ`.
pub fn unipotent_rank_sequence(a: &ExactMatrix, ell: u64) -> Result<Vec<usize>> {
    if !arith::is_prime(ell) {
        return Err(Error::NotPrime(ell));
    }
    let dim = a.dim();
    let n = ModMatrix::from_exact(&a.add_scalar(-1), ell);
    let mut ranks = alloc::vec![dim];
    let mut power = ModMatrix::identity(dim, ell);
    while *ranks.last().expect("nonempty") > 0 {
        if ranks.len() > dim {
            return Err(Error::NotUnipotentMod(ell));
        }
        power = power.mul(&n);
        let rank = power.rank()?;
        if rank == *ranks.last().expect("nonempty") {
            return Err(Error::NotUnipotentMod(ell));
        }
        ranks.push(rank);
    }
    Ok(ranks)
}

/// Jordan partition of `a mod ℓ`, recovered from the rank sequence:
/// the number of blocks of size `>= j` is `rank(N^{j-1}) - rank(N^j)`.
pub fn jordan_partition_unipotent(a: &ExactMatrix, ell: u64) -> Result<JordanPartition> {
    let ranks = unipotent_rank_sequence(a, ell)?;
    let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    let mut blocks = Vec::new();
    for size in (1..=at_least.len()).rev() {
        let exactly = at_least[size - 1] - at_least.get(size).copied().unwrap_or(0);
        blocks.extend(core::iter::repeat_n(size, exactly));
    }
    Ok(JordanPartition {
        blocks,
        field_char: ell,
    })
}

/// `(a - I)^e ≡ 0 (mod ℓ)`.
pub fn shifted_power_vanishes_mod(a: &ExactMatrix, e: u64, modulus: u64) -> bool {
    ModMatrix::from_exact(&a.add_scalar(-1), modulus).pow(e).is_zero()
}

/// True iff `γ·a` is unipotent for the integer scalar `γ`.
pub fn scaled_is_unipotent(a: &ExactMatrix, gamma: i64) -> bool {
    is_unipotent(&a.scale(&gamma.into()))
}

/// `charpoly(a) = (x - 1)^dim`: the second, independent unipotency route.
pub fn charpoly_is_unipotent(a: &ExactMatrix) -> bool {
    a.charpoly() == IntPolynomial::linear_root(1).pow(a.dim() as u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_i64(rows).unwrap()
    }

    fn transvection() -> ExactMatrix {
        m(&[&[1, 1], &[0, 1]])
    }

    fn phi5_companion() -> ExactMatrix {
        ExactMatrix::companion(&IntPolynomial::from_i64(&[1, 1, 1, 1, 1])).unwrap()
    }

    #[test]
    fn unipotency_examples() {
        assert!(is_unipotent(&ExactMatrix::identity(3)));
        assert!(is_unipotent(&transvection()));
        assert!(!is_unipotent(&ExactMatrix::scalar(2, -1)));
        assert!(is_neg_unipotent(&ExactMatrix::scalar(2, -1)));
        assert!(is_neg_unipotent(&-&transvection()));
        assert!(!is_neg_unipotent(&ExactMatrix::identity(2)));
    }

    #[test]
    fn echelon_examples() {
        assert_eq!(unipotent_echelon(&ExactMatrix::identity(2)), Some(1));
        assert_eq!(unipotent_echelon(&transvection()), Some(2));
        assert_eq!(unipotent_echelon(&ExactMatrix::jordan_block(3)), Some(3));
        assert_eq!(unipotent_echelon(&ExactMatrix::scalar(2, -1)), None);
    }

    #[test]
    fn quasi_unipotent_examples() {
        let t = is_quasi_unipotent(&transvection());
        assert!(t.is_quasi_unipotent);
        assert_eq!(t.order, Some(1));
        assert_eq!(t.cyclotomic_factors, [(1, 2)]);

        let c = is_quasi_unipotent(&phi5_companion());
        assert_eq!(c.order, Some(5));
        assert_eq!(c.cyclotomic_factors, [(5, 1)]);

        let not = is_quasi_unipotent(&m(&[&[2, 0], &[0, 1]]));
        assert!(!not.is_quasi_unipotent);
        assert_eq!(not.order, None);

        // order lcm(2, 3, 4) = 12
        let mixed = ExactMatrix::scalar(1, -1)
            .direct_sum(&ExactMatrix::companion(&IntPolynomial::from_i64(&[1, 1, 1])).unwrap())
            .direct_sum(&m(&[&[0, -1], &[1, 0]]));
        assert_eq!(is_quasi_unipotent(&mixed).order, Some(12));
    }

    #[test]
    fn jordan_partition_examples() {
        let p = jordan_partition_unipotent(&ExactMatrix::identity(3), 5).unwrap();
        assert_eq!(p.blocks, [1, 1, 1]);
        let p = jordan_partition_unipotent(&ExactMatrix::jordan_block(4), 5).unwrap();
        assert_eq!(p.blocks, [4]);
        let w = crate::exterior::wedge_power(&ExactMatrix::jordan_block(4), 2).unwrap();
        let p = jordan_partition_unipotent(&w, 5).unwrap();
        assert_eq!(p.blocks, [5, 1]);
        assert_eq!(p.dim(), 6);
    }

    #[test]
    fn jordan_block_collapses_in_small_characteristic() {
        // (J_3 - 1)^2 has a 1 in the corner, so J_3 stays a single block mod 2.
        assert_eq!(jordan_partition_unipotent(&ExactMatrix::jordan_block(3), 2).unwrap().blocks, [3]);
        // 2·N vanishes mod 2, so the operator is the identity there.
        let a = m(&[&[1, 2], &[0, 1]]);
        assert_eq!(jordan_partition_unipotent(&a, 2).unwrap().blocks, [1, 1]);
    }

    #[test]
    fn jordan_rejects_non_unipotent() {
        assert_eq!(
            jordan_partition_unipotent(&ExactMatrix::scalar(2, -1), 5),
            Err(Error::NotUnipotentMod(5))
        );
        assert_eq!(jordan_partition_unipotent(&ExactMatrix::identity(2), 4), Err(Error::NotPrime(4)));
    }

    #[test]
    fn level2_examples() {
        for mm in 1..=6 {
            assert!(level2_check(&transvection(), mm));
        }
        assert!(!level2_check(&ExactMatrix::jordan_block(3), 1));
        assert!(!level2_check(&ExactMatrix::jordan_block(3), 4));
        assert!(level2_check(&-&transvection(), 2));
        assert!(!level2_check(&-&transvection(), 1));
    }

    #[test]
    fn two_unipotency_routes_agree() {
        let cases = [
            ExactMatrix::identity(3),
            ExactMatrix::jordan_block(4),
            phi5_companion(),
            ExactMatrix::scalar(3, -1),
            m(&[&[1, 5], &[0, 1]]),
            m(&[&[2, 1], &[1, 1]]),
        ];
        for a in &cases {
            assert_eq!(is_unipotent(a), charpoly_is_unipotent(a), "{a}");
        }
    }

    #[test]
    fn symplectic_scalings_other_than_sign_never_unipotent() {
        let g = m(&[&[1, 0, 1, 2], &[0, 1, 2, -1], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
        for gamma in [2, -2, 3] {
            assert!(!scaled_is_unipotent(&g, gamma));
        }
        assert!(scaled_is_unipotent(&g, 1));
        assert!(scaled_is_unipotent(&-&g, -1));
    }
}
