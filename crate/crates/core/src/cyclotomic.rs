//! Exceptional moduli `N(r)`, `N'(r)` and cyclotomic ideal membership.
//!
//! Membership of `(ζ - 1)^r` in `n·Z[ζ]` for a primitive `ℓ^s`-th root of
//! unity `ζ` is decided in the power basis of `Z[ζ]`. That ring is the full
//! ring of integers of `Q(ζ)`, and `n` is a rational integer, so
//! `n·(algebraic integers) ∩ Z[ζ] = n·Z[ζ]` and coefficientwise divisibility
//! is an exact test.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith;
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// Default cap on `ℓ^{s-1}(ℓ-1)` for root-of-unity scans.
pub const DEFAULT_DEGREE_CAP: u64 = 100;

/// Sorted set of prime powers, with `1` standing for the empty power.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PrimePowerSet(Vec<u64>);

impl PrimePowerSet {
    pub fn new(mut elements: Vec<u64>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        if let Some(bad) = elements.iter().find(|&&e| e != 1 && arith::prime_power(e).is_none()) {
            return Err(Error::InvalidParameter(format!("{bad} is not a prime power")));
        }
        Ok(Self(elements))
    }

    pub fn contains(&self, n: u64) -> bool {
        self.0.binary_search(&n).is_ok()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().copied()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.iter().all(|e| other.contains(e))
    }

    pub fn difference(&self, other: &Self) -> Self {
        Self(self.iter().filter(|&e| !other.contains(e)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for PrimePowerSet {
    /// Renders as `{1, 2, 3, 4}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

/// Largest `r` for which `N(r)` fits in `u64`; its largest element is `2^r`.
pub const MAX_SET_R: u64 = 63;

/// Prime powers `ℓ^m` (with `m >= 1`) satisfying `pred(ℓ, m)`, for `m(ℓ-1) <= r`.
fn prime_powers_bounded(r: u64, mut pred: impl FnMut(u64, u64) -> bool) -> Result<Vec<u64>> {
    if r > MAX_SET_R {
        return Err(Error::InvalidParameter(format!(
            "r must be at most {MAX_SET_R} so that 2^r fits in 64 bits, got {r}"
        )));
    }
    let mut out = vec![1];
    for ell in arith::primes_up_to(r + 1) {
        let mut power = 1u64;
        let mut m = 1;
        while m * (ell - 1) <= r {
            power = power.checked_mul(ell).expect("prime power overflows u64");
            if pred(ell, m) {
                out.push(power);
            }
            m += 1;
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// `N(r) = { ℓ^m : 0 <= m(ℓ-1) <= r }`, including `1`.
pub fn n_set(r: u64) -> Result<PrimePowerSet> {
    prime_powers_bounded(r, |_, _| true).map(PrimePowerSet)
}

/// `N'(r)`: prime powers with `m(ℓ-1) < r`, together with those for `ℓ ∈ {2, 3}`
/// and `m(ℓ-1) = r`.
pub fn n_prime_set(r: u64) -> Result<PrimePowerSet> {
    prime_powers_bounded(r, |ell, m| m * (ell - 1) < r || ell <= 3).map(PrimePowerSet)
}

/// The `ℓ^s`-th cyclotomic polynomial `Σ_{i<ℓ} x^{i·ℓ^{s-1}}`.
pub fn cyclotomic_prime_power(ell: u64, s: u32) -> Result<IntPolynomial> {
    if !arith::is_prime(ell) {
        return Err(Error::NotPrime(ell));
    }
    if s == 0 {
        return Err(Error::InvalidParameter("exponent s must be at least 1".into()));
    }
    let step = ell.pow(s - 1) as usize;
    let mut coeffs = vec![BigInt::zero(); step * (ell as usize - 1) + 1];
    for i in 0..ell as usize {
        coeffs[i * step] = BigInt::one();
    }
    Ok(IntPolynomial::new(coeffs))
}

/// The `d`-th cyclotomic polynomial for arbitrary `d >= 1`, by dividing
/// `x^d - 1` by `Φ_e` for every proper divisor `e`.
pub fn cyclotomic_polynomial(d: u64) -> IntPolynomial {
    cyclotomic_cached(d, &mut BTreeMap::new())
}

pub(crate) fn cyclotomic_cached(d: u64, cache: &mut BTreeMap<u64, IntPolynomial>) -> IntPolynomial {
    assert!(d >= 1);
    if let Some(p) = cache.get(&d) {
        return p.clone();
    }
    let mut p = IntPolynomial::monomial(BigInt::one(), d as usize);
    p = &p - &IntPolynomial::one();
    for e in (1..d).filter(|e| d.is_multiple_of(*e)) {
        p = p
            .div_exact_monic(&cyclotomic_cached(e, cache))
            .expect("cyclotomic polynomials divide x^d - 1");
    }
    cache.insert(d, p.clone());
    p
}

/// Degree `ℓ^{s-1}(ℓ-1)` of `Φ_{ℓ^s}`.
pub fn prime_power_totient(ell: u64, s: u32) -> u64 {
    ell.pow(s - 1) * (ell - 1)
}

/// Decides `(ζ - 1)^r ∈ n·Z[ζ]` for a primitive `ℓ^s`-th root of unity `ζ`.
///
/// Computes `(x - 1)^r mod Φ_{ℓ^s}` with coefficients reduced modulo `n`
/// along the way (legitimate because `Φ` is monic) and checks that the
/// result vanishes.
pub fn root_minus_one_membership(ell: u64, s: u32, r: u64, n: u64) -> Result<bool> {
    if n == 0 {
        return Err(Error::InvalidParameter("modulus n must be positive".into()));
    }
    let phi = cyclotomic_prime_power(ell, s)?;
    let deg = phi.degree().expect("nonzero");
    let low: Vec<u64> = phi.coeffs()[..deg]
        .iter()
        .map(|c| if c.is_zero() { 0 } else { 1 })
        .collect();
    let n128 = u128::from(n);
    // acc holds a polynomial of degree < deg, coefficients in [0, n).
    let mut acc = vec![0u128; deg];
    acc[0] = 1 % n128;
    for _ in 0..r {
        // acc * (x - 1) = x·acc - acc
        let top = acc[deg - 1];
        let mut next = vec![0u128; deg];
        for i in (1..deg).rev() {
            next[i] = (acc[i - 1] + n128 - acc[i]) % n128;
        }
        next[0] = (n128 - acc[0]) % n128;
        // x^deg ≡ -Σ low_i x^i
        if top != 0 {
            for (i, &c) in low.iter().enumerate() {
                if c != 0 {
                    next[i] = (next[i] + n128 - top) % n128;
                }
            }
        }
        acc = next;
    }
    Ok(acc.iter().all(|&c| c == 0))
}

/// Smallest exponent `m·ℓ^{s-1}(ℓ-1)` past which `(ζ - 1)^r` is divisible by `ℓ^m`.
///
/// The returned exponent is also checked against [`root_minus_one_membership`];
/// a failure there means the membership routine is wrong.
pub fn groupring_bound(ell: u64, s: u32, m: u32) -> Result<u64> {
    if !arith::is_prime(ell) {
        return Err(Error::NotPrime(ell));
    }
    if s == 0 || m == 0 {
        return Err(Error::InvalidParameter("s and m must be positive".into()));
    }
    let r = u64::from(m) * prime_power_totient(ell, s);
    let n = ell
        .checked_pow(m)
        .ok_or_else(|| Error::InvalidParameter(format!("{ell}^{m} overflows u64")))?;
    if !root_minus_one_membership(ell, s, r, n)? {
        return Err(Error::Internal(format!(
            "(ζ_{{{ell}^{s}}} - 1)^{r} not in {n}·Z[ζ]"
        )));
    }
    Ok(r)
}

/// Searches prime-power orders `ℓ^s` (ascending `ℓ`, then `s <= s_max`, with
/// `ℓ^{s-1}(ℓ-1) <= degree_cap`) for a root of unity `λ ≠ 1` with
/// `(λ - 1)^r ∈ n·Z̄`. Returns the first witness `(ℓ, s)`.
pub fn sharpness_scan(r: u64, n: u64, s_max: u32, degree_cap: u64) -> Result<Option<(u64, u32)>> {
    for ell in arith::primes_up_to(degree_cap + 1) {
        for s in 1..=s_max {
            let Some(power) = ell.checked_pow(s - 1) else { break };
            if power.saturating_mul(ell - 1) > degree_cap {
                break;
            }
            if root_minus_one_membership(ell, s, r, n)? {
                return Ok(Some((ell, s)));
            }
        }
    }
    Ok(None)
}

/// Text rendering of `N(r)`, `N'(r)` and their difference, one per line.
pub fn describe_sets(r: u64) -> Result<String> {
    let big = n_set(r)?;
    let small = n_prime_set(r)?;
    Ok(format!(
        "N({r}) = {big}\nN'({r}) = {small}\nN({r}) \\ N'({r}) = {}\n",
        big.difference(&small)
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    /// Exact big-integer reduction of `(x - 1)^r` modulo `Φ`, no modular shortcut.
    fn membership_oracle(ell: u64, s: u32, r: u32, n: u64) -> bool {
        let phi = cyclotomic_prime_power(ell, s).unwrap();
        IntPolynomial::linear_root(1)
            .pow(r)
            .rem_monic(&phi)
            .all_coeffs_divisible_by(&BigInt::from(n))
    }

    #[test]
    fn n_set_examples() {
        assert_eq!(n_set(1).unwrap().as_slice(), &[1, 2]);
        assert_eq!(n_set(2).unwrap().as_slice(), &[1, 2, 3, 4]);
        assert_eq!(n_set(3).unwrap().as_slice(), &[1, 2, 3, 4, 8]);
        assert_eq!(n_set(4).unwrap().as_slice(), &[1, 2, 3, 4, 5, 8, 9, 16]);
    }

    #[test]
    fn n_prime_set_examples() {
        assert_eq!(n_prime_set(4).unwrap().as_slice(), &[1, 2, 3, 4, 8, 9, 16]);
        assert_eq!(n_prime_set(2).unwrap().as_slice(), &[1, 2, 3, 4]);
        assert_eq!(n_prime_set(1).unwrap().as_slice(), &[1, 2]);
        assert_eq!(n_prime_set(3).unwrap().as_slice(), &[1, 2, 3, 4, 8]);
    }

    #[test]
    fn set_difference_is_large_primes_on_the_boundary() {
        for r in 1..=20u64 {
            let big = n_set(r).unwrap();
            let small = n_prime_set(r).unwrap();
            assert!(small.is_subset(&big));
            assert!(big.is_subset(&n_set(r + 1).unwrap()));
            let expected: Vec<u64> = big
                .iter()
                .filter(|&e| {
                    arith::prime_power(e)
                        .is_some_and(|(ell, m)| ell >= 5 && u64::from(m) * (ell - 1) == r)
                })
                .collect();
            assert_eq!(big.difference(&small).as_slice(), expected.as_slice(), "r={r}");
        }
    }

    #[test]
    fn display() {
        assert_eq!(n_set(2).unwrap().to_string(), "{1, 2, 3, 4}");
        assert_eq!(
            describe_sets(4).unwrap(),
            "N(4) = {1, 2, 3, 4, 5, 8, 9, 16}\nN'(4) = {1, 2, 3, 4, 8, 9, 16}\nN(4) \\ N'(4) = {5}\n"
        );
    }

    #[test]
    fn prime_power_set_validates() {
        assert!(PrimePowerSet::new(vec![1, 4, 6]).is_err());
        assert_eq!(PrimePowerSet::new(vec![9, 1, 9]).unwrap().as_slice(), &[1, 9]);
    }

    #[test]
    fn cyclotomic_examples() {
        assert_eq!(cyclotomic_prime_power(2, 1).unwrap(), IntPolynomial::from_i64(&[1, 1]));
        assert_eq!(cyclotomic_prime_power(3, 1).unwrap(), IntPolynomial::from_i64(&[1, 1, 1]));
        let phi25 = cyclotomic_prime_power(5, 2).unwrap();
        let mut expected = [0i64; 21];
        for i in 0..5 {
            expected[5 * i] = 1;
        }
        assert_eq!(phi25, IntPolynomial::from_i64(&expected));
        let x25 = &IntPolynomial::monomial(BigInt::one(), 25) - &IntPolynomial::one();
        let x5 = &IntPolynomial::monomial(BigInt::one(), 5) - &IntPolynomial::one();
        assert!(x25.div_exact_monic(&phi25).is_some());
        assert!(x5.rem_monic(&phi25) == x5);
        assert_eq!(cyclotomic_prime_power(4, 1), Err(Error::NotPrime(4)));
    }

    #[test]
    fn general_cyclotomic_agrees_on_prime_powers() {
        for (ell, s) in [(2u64, 1u32), (2, 3), (3, 2), (5, 1), (7, 1)] {
            assert_eq!(
                cyclotomic_polynomial(ell.pow(s)),
                cyclotomic_prime_power(ell, s).unwrap()
            );
        }
        assert_eq!(cyclotomic_polynomial(6), IntPolynomial::from_i64(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), IntPolynomial::from_i64(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn membership_examples() {
        assert_eq!(root_minus_one_membership(3, 1, 2, 3), Ok(true));
        assert_eq!(root_minus_one_membership(5, 1, 4, 5), Ok(true));
        assert_eq!(root_minus_one_membership(5, 1, 3, 5), Ok(false));
        assert_eq!(root_minus_one_membership(5, 2, 20, 5), Ok(true));
        assert_eq!(root_minus_one_membership(5, 2, 19, 5), Ok(false));
        assert_eq!(root_minus_one_membership(2, 1, 3, 8), Ok(true));
        assert_eq!(root_minus_one_membership(7, 1, 0, 1), Ok(true));
        assert!(root_minus_one_membership(6, 1, 2, 3).is_err());
    }

    #[test]
    fn groupring_examples() {
        assert_eq!(groupring_bound(3, 1, 1), Ok(2));
        assert_eq!(groupring_bound(2, 1, 3), Ok(3));
        assert_eq!(groupring_bound(5, 2, 1), Ok(20));
    }

    #[test]
    fn sharpness_examples() {
        assert_eq!(sharpness_scan(2, 4, 3, DEFAULT_DEGREE_CAP), Ok(Some((2, 1))));
        assert_eq!(sharpness_scan(2, 5, 3, DEFAULT_DEGREE_CAP), Ok(None));
        assert_eq!(sharpness_scan(4, 5, 3, DEFAULT_DEGREE_CAP), Ok(Some((5, 1))));
        assert_eq!(root_minus_one_membership(5, 2, 4, 5), Ok(false));
    }

    #[test]
    fn scan_finds_witness_exactly_on_n_set() {
        for r in 1..=8u64 {
            let big = n_set(r).unwrap();
            for n in 2..=40u64 {
                let found = sharpness_scan(r, n, 2, 40).unwrap();
                assert_eq!(found.is_some(), big.contains(n), "r={r} n={n}");
            }
        }
    }

    proptest! {
        #[test]
        fn membership_matches_exact_reduction(
            ell in prop::sample::select(vec![2u64, 3, 5, 7]),
            s in 1u32..=2,
            r in 0u32..=16,
            n in 1u64..=60,
        ) {
            prop_assert_eq!(
                root_minus_one_membership(ell, s, u64::from(r), n).unwrap(),
                membership_oracle(ell, s, r, n)
            );
        }

        #[test]
        fn membership_monotone_in_r_and_divisibility(
            ell in prop::sample::select(vec![2u64, 3, 5]),
            s in 1u32..=2,
            r in 0u64..=20,
            m in 1u32..=3,
        ) {
            let n = ell.pow(m);
            if root_minus_one_membership(ell, s, r, n).unwrap() {
                prop_assert!(root_minus_one_membership(ell, s, r + 1, n).unwrap());
                prop_assert!(root_minus_one_membership(ell, s, r, ell.pow(m - 1)).unwrap());
            }
        }
    }
}
