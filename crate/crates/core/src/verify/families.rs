//! Generators for the representation families and for random integer
//! conjugators.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::arith;
use crate::cyclotomic::cyclotomic_prime_power;
use crate::error::{Error, Result};
use crate::inertia::{CoefficientMode, InertiaRep};
use crate::matrix::ExactMatrix;

/// Prime used for the integer-mode families with no natural prime attached.
pub const FAMILY_ELL: u64 = 5;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `[[0, I], [-I, 0]]` of size `2d`.
pub fn standard_form(d: usize) -> ExactMatrix {
    ExactMatrix::from_fn(2 * d, |i, j| {
        if j == i + d {
            BigInt::from(1)
        } else if i == j + d {
            BigInt::from(-1)
        } else {
            BigInt::from(0)
        }
    })
}

/// `[[A, B], [C, D]]` from four `d × d` blocks.
fn blocks(a: &ExactMatrix, b: &ExactMatrix, c: &ExactMatrix, dd: &ExactMatrix) -> ExactMatrix {
    let d = a.dim();
    ExactMatrix::from_fn(2 * d, |i, j| {
        let block = match (i < d, j < d) {
            (true, true) => a,
            (true, false) => b,
            (false, true) => c,
            (false, false) => dd,
        };
        block.get(i % d, j % d).clone()
    })
}

pub fn random_symmetric<R: Rng>(d: usize, bound: i64, rng: &mut R) -> ExactMatrix {
    let mut entries = alloc::vec![0i64; d * d];
    for i in 0..d {
        for j in i..d {
            let v = rng.gen_range(-bound..=bound);
            entries[i * d + j] = v;
            entries[j * d + i] = v;
        }
    }
    ExactMatrix::from_fn(d, |i, j| BigInt::from(entries[i * d + j]))
}

/// `[[I, B], [0, I]]`; symplectic for the standard form when `B` is symmetric.
pub fn upper_transvection_block(b: &ExactMatrix) -> ExactMatrix {
    let d = b.dim();
    blocks(&ExactMatrix::identity(d), b, &ExactMatrix::zero(d), &ExactMatrix::identity(d))
}

fn lower_transvection_block(s: &ExactMatrix) -> ExactMatrix {
    let d = s.dim();
    blocks(&ExactMatrix::identity(d), &ExactMatrix::zero(d), s, &ExactMatrix::identity(d))
}

/// Product of `steps` random elementary matrices `I + c·e_{ij}`, `c ∈ [-2, 2]`.
pub fn random_unimodular<R: Rng>(dim: usize, steps: usize, rng: &mut R) -> ExactMatrix {
    let mut m = ExactMatrix::identity(dim);
    if dim < 2 {
        return m;
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..dim);
        let mut j = rng.gen_range(0..dim - 1);
        if j >= i {
            j += 1;
        }
        let c = rng.gen_range(-2i64..=2);
        // Row operation: row i += c·row j.
        let mut rows: Vec<Vec<BigInt>> = m.rows().map(<[BigInt]>::to_vec).collect();
        let add: Vec<BigInt> = rows[j].iter().map(|v| v * c).collect();
        for (v, a) in rows[i].iter_mut().zip(add) {
            *v += a;
        }
        m = ExactMatrix::from_rows(rows).expect("square by construction");
    }
    m
}

/// Product of random generators of `Sp_{2d}(Z)` for the standard form.
pub fn random_symplectic<R: Rng>(d: usize, steps: usize, rng: &mut R) -> ExactMatrix {
    let mut m = ExactMatrix::identity(2 * d);
    for _ in 0..steps {
        let factor = match rng.gen_range(0..3) {
            0 => upper_transvection_block(&random_symmetric(d, 1, rng)),
            1 => lower_transvection_block(&random_symmetric(d, 1, rng)),
            _ => {
                let a = random_unimodular(d, 2, rng);
                let a_inv_t = a.inverse_unimodular().expect("unimodular").transpose();
                blocks(&a, &ExactMatrix::zero(d), &ExactMatrix::zero(d), &a_inv_t)
            }
        };
        m = &m * &factor;
    }
    m
}

/// A random symplectic element with `(g - 1)^2 = 0`: a conjugate of
/// `[[I, B], [0, I]]` by a random symplectic matrix.
pub fn random_echelon2_symplectic<R: Rng>(d: usize, rng: &mut R) -> ExactMatrix {
    let base = upper_transvection_block(&random_symmetric(d, 2, rng));
    let p = random_symplectic(d, 4, rng);
    let p_inv = p.inverse_unimodular().expect("symplectic matrices are unimodular");
    &(&p * &base) * &p_inv
}

/// `p · a · p^{-1}` for a random unimodular `p`.
pub fn random_conjugate<R: Rng>(a: &ExactMatrix, steps: usize, rng: &mut R) -> ExactMatrix {
    let p = random_unimodular(a.dim(), steps, rng);
    let p_inv = p.inverse_unimodular().expect("unimodular");
    &(&p * a) * &p_inv
}

fn check_d(d: usize) -> Result<()> {
    if d == 0 {
        return Err(Error::InvalidParameter("d must be at least 1".into()));
    }
    Ok(())
}

fn check_symmetric(b: &ExactMatrix) -> Result<()> {
    if *b != b.transpose() {
        return Err(Error::InvalidParameter("B must be symmetric".into()));
    }
    Ok(())
}

/// Tame generator `[[I, B], [0, I]]` with a random symmetric `B`, entries in `[-2, 2]`.
pub fn gen_semistable_family(d: usize, seed: u64) -> Result<InertiaRep> {
    check_d(d)?;
    let b = random_symmetric(d, 2, &mut rng(seed));
    gen_semistable_with(&b, format!("semistable d={d} seed={seed}"))
}

pub fn gen_semistable_with(b: &ExactMatrix, label: impl Into<alloc::string::String>) -> Result<InertiaRep> {
    check_symmetric(b)?;
    InertiaRep::new(
        CoefficientMode::Integer { ell: FAMILY_ELL },
        upper_transvection_block(b),
        Vec::new(),
        Some(standard_form(b.dim())),
        label,
    )
}

/// Tame generator `-[[I, B], [0, I]]`.
pub fn gen_briefly_unstable_family(d: usize, seed: u64) -> Result<InertiaRep> {
    check_d(d)?;
    let b = random_symmetric(d, 2, &mut rng(seed));
    gen_briefly_unstable_with(&b, format!("briefly-unstable d={d} seed={seed}"))
}

pub fn gen_briefly_unstable_with(b: &ExactMatrix, label: impl Into<alloc::string::String>) -> Result<InertiaRep> {
    check_symmetric(b)?;
    InertiaRep::new(
        CoefficientMode::Integer { ell: FAMILY_ELL },
        -&upper_transvection_block(b),
        Vec::new(),
        Some(standard_form(b.dim())),
        label,
    )
}

/// `I_{2a} ⊕ C`, with `C` the companion matrix of `Φ_ℓ` for an odd prime `ℓ`.
pub fn gen_twisted_product(ell: u64, a: usize) -> Result<InertiaRep> {
    if !arith::is_prime(ell) {
        return Err(Error::NotPrime(ell));
    }
    if ell == 2 {
        return Err(Error::InvalidParameter(
            "ell must be odd for the companion construction; the ell = 2 case uses the \
             -I twist (see gen_twisted_product_even)"
                .into(),
        ));
    }
    if a == 0 {
        return Err(Error::InvalidParameter("a must be at least 1".into()));
    }
    let c = ExactMatrix::companion(&cyclotomic_prime_power(ell, 1)?)?;
    InertiaRep::new(
        CoefficientMode::Integer { ell },
        ExactMatrix::identity(2 * a).direct_sum(&c),
        Vec::new(),
        None,
        format!("twisted-product ell={ell} a={a}"),
    )
}

/// The `ℓ = 2` variant `I_{2a} ⊕ -I_2`.
pub fn gen_twisted_product_even(a: usize) -> Result<InertiaRep> {
    if a == 0 {
        return Err(Error::InvalidParameter("a must be at least 1".into()));
    }
    InertiaRep::new(
        CoefficientMode::Integer { ell: 2 },
        ExactMatrix::identity(2 * a).direct_sum(&ExactMatrix::scalar(2, -1)),
        Vec::new(),
        None,
        format!("twisted-product ell=2 a={a}"),
    )
}

/// [`gen_twisted_product`] for odd `ℓ`, [`gen_twisted_product_even`] for `ℓ = 2`.
pub fn gen_twisted_product_any(ell: u64, a: usize) -> Result<InertiaRep> {
    if ell == 2 {
        gen_twisted_product_even(a)
    } else {
        gen_twisted_product(ell, a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::inertia::{check_pm_unipotent, check_tate_criterion, fixed_space_trivial};

    fn m(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_i64(rows).unwrap()
    }

    #[test]
    fn semistable_examples() {
        let rep = gen_semistable_with(&m(&[&[1]]), "").unwrap();
        assert_eq!(*rep.tame(), m(&[&[1, 1], &[0, 1]]));
        let rep = gen_semistable_with(&ExactMatrix::zero(2), "").unwrap();
        assert!(rep.tame().is_identity());
        for seed in 0..5 {
            let rep = gen_semistable_family(2, seed).unwrap();
            let n = rep.tame().add_scalar(-1);
            assert!((&n * &n).is_zero());
            assert!(check_tate_criterion(&rep, 8).unwrap().holds);
        }
        assert_eq!(gen_semistable_family(3, 7), gen_semistable_family(3, 7));
        assert!(gen_semistable_family(0, 1).is_err());
    }

    #[test]
    fn briefly_unstable_examples() {
        let rep = gen_briefly_unstable_with(&m(&[&[0]]), "").unwrap();
        assert_eq!(*rep.tame(), ExactMatrix::scalar(2, -1));
        let rep = gen_briefly_unstable_with(&m(&[&[1]]), "").unwrap();
        assert!(fixed_space_trivial(&rep, 5).unwrap().holds);
        for seed in 0..5 {
            let rep = gen_briefly_unstable_family(2, seed).unwrap();
            assert!(check_pm_unipotent(&rep, 8).unwrap().holds);
            assert!(!check_tate_criterion(&rep, 8).unwrap().holds);
            assert!(fixed_space_trivial(&rep, 5).unwrap().holds);
        }
    }

    #[test]
    fn twisted_product_examples() {
        let rep = gen_twisted_product(3, 1).unwrap();
        let expected = ExactMatrix::identity(2).direct_sum(&m(&[&[0, -1], &[1, -1]]));
        assert_eq!(*rep.tame(), expected);
        let rep = gen_twisted_product(5, 1).unwrap();
        assert_eq!(rep.dim(), 6);
        assert!(rep.tame().pow(5).is_identity());
        assert!(!rep.tame().is_identity());
        for (ell, a) in [(3, 1), (5, 1), (7, 2)] {
            let rep = gen_twisted_product(ell, a).unwrap();
            assert!(!check_tate_criterion(&rep, 8).unwrap().holds);
            assert!(!fixed_space_trivial(&rep, ell).unwrap().holds);
        }
        assert!(gen_twisted_product(2, 1).is_err());
        assert!(gen_twisted_product(9, 1).is_err());
        let even = gen_twisted_product_even(1).unwrap();
        assert!(!fixed_space_trivial(&even, 2).unwrap().holds);
    }

    #[test]
    fn random_generators_are_what_they_claim() {
        let mut r = rng(11);
        for d in 1..=3 {
            let form = standard_form(d);
            let p = random_symplectic(d, 6, &mut r);
            assert!(p.is_symplectic(&form).unwrap());
            let g = random_echelon2_symplectic(d, &mut r);
            assert!(g.is_symplectic(&form).unwrap());
            let n = g.add_scalar(-1);
            assert!((&n * &n).is_zero());
        }
        let u = random_unimodular(4, 12, &mut r);
        assert!(u.inverse_unimodular().is_ok());
    }
}
