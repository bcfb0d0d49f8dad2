//! Exterior powers `∧^k(g)` and the induced action on cohomology.
//!
//! Basis vectors of `∧^k` are `e_{i1} ∧ … ∧ e_{ik}` with `i1 < … < ik`,
//! ordered colexicographically. The `(S, T)` entry of `∧^k(a)` is the minor of
//! `a` with rows `S` and columns `T`, both taken in ascending order, so no
//! extra signs appear.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::binomial;
use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;

/// Colex-ordered list of the `k`-element subsets of `{0, …, dim-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedgeBasisIndex {
    dim: usize,
    k: usize,
    subsets: Vec<u64>,
}

impl WedgeBasisIndex {
    pub fn new(dim: usize, k: usize) -> Result<Self> {
        if k > dim || dim > 63 {
            return Err(Error::WedgeOutOfRange { k, dim });
        }
        let mut subsets = Vec::with_capacity(binomial(dim, k));
        if k == 0 {
            subsets.push(0);
        } else {
            // Gosper's hack enumerates k-bit masks in increasing order, which
            // is colex order on the underlying subsets.
            let mut mask: u64 = (1 << k) - 1;
            let limit: u64 = 1 << dim;
            while mask < limit {
                subsets.push(mask);
                let c = mask & mask.wrapping_neg();
                let r = mask + c;
                mask = (((r ^ mask) >> 2) / c) | r;
            }
        }
        Ok(Self { dim, k, subsets })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.subsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subsets.is_empty()
    }

    /// Sorted members of the `idx`-th subset.
    pub fn subset(&self, idx: usize) -> Vec<usize> {
        mask_members(self.subsets[idx])
    }

    pub fn masks(&self) -> &[u64] {
        &self.subsets
    }

    /// Position of a subset (given as a bitmask) in colex order: the
    /// combinatorial number system `Σ C(s_i, i+1)`.
    pub fn rank_of_mask(mut mask: u64) -> usize {
        let mut rank = 0;
        let mut i = 1;
        while mask != 0 {
            rank += binomial(mask.trailing_zeros() as usize, i);
            mask &= mask - 1;
            i += 1;
        }
        rank
    }
}

fn mask_members(mut mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    out
}

/// Matrix of `∧^k(a)` on the colex basis.
///
/// Minors are built level by level: each `j × j` minor is a Laplace
/// expansion along its last column over the `(j-1) × (j-1)` minors of the
/// previous level. Only ring operations are used.
pub fn wedge_power(a: &ExactMatrix, k: usize) -> Result<ExactMatrix> {
    let n = a.dim();
    if k == 0 || k > n {
        return Err(Error::WedgeOutOfRange { k, dim: n });
    }
    if k == 1 {
        return Ok(a.clone());
    }
    // Level j table, indexed [row_subset_rank * len + col_subset_rank].
    let mut prev_basis = WedgeBasisIndex::new(n, 0)?;
    let mut prev: Vec<BigInt> = vec![BigInt::one()];
    for level in 1..=k {
        let basis = WedgeBasisIndex::new(n, level)?;
        let len = basis.len();
        let prev_len = prev_basis.len();
        let mut table = vec![BigInt::zero(); len * len];
        // For each row subset: (row, rank of the subset without that row).
        let row_terms: Vec<Vec<(usize, usize)>> = basis
            .masks()
            .iter()
            .map(|&rows| {
                mask_members(rows)
                    .into_iter()
                    .map(|row| (row, WedgeBasisIndex::rank_of_mask(rows & !(1 << row))))
                    .collect()
            })
            .collect();
        for (ci, &cols) in basis.masks().iter().enumerate() {
            let last_col = 63 - cols.leading_zeros() as usize;
            let rest_cols = WedgeBasisIndex::rank_of_mask(cols & !(1 << last_col));
            for (ri, terms) in row_terms.iter().enumerate() {
                let mut acc = BigInt::zero();
                for (pos, &(row, rest_rows)) in terms.iter().enumerate() {
                    let entry = a.get(row, last_col);
                    if entry.is_zero() {
                        continue;
                    }
                    let minor = &prev[rest_rows * prev_len + rest_cols];
                    if minor.is_zero() {
                        continue;
                    }
                    // Cofactor sign for row `pos`, column `level - 1` of the submatrix.
                    if (pos + level - 1) % 2 == 0 {
                        acc += entry * minor;
                    } else {
                        acc -= entry * minor;
                    }
                }
                table[ri * len + ci] = acc;
            }
        }
        prev = table;
        prev_basis = basis;
    }
    let len = prev_basis.len();
    Ok(ExactMatrix::from_fn(len, |i, j| core::mem::take(&mut prev[i * len + j])))
}

/// Action on the k-th cohomology, `(∧^k(a^{-1}))ᵀ`, for `a` invertible over `Z`.
pub fn cohomology_action(a: &ExactMatrix, k: usize) -> Result<ExactMatrix> {
    if k == 0 || k > a.dim() {
        return Err(Error::WedgeOutOfRange { k, dim: a.dim() });
    }
    let inv = a.inverse_unimodular()?;
    Ok(wedge_power(&inv, k)?.transpose())
}

/// Cohomology action over `Z/nZ`; entries reduced into `[0, n)`.
pub fn cohomology_action_mod(a: &ExactMatrix, k: usize, n: u64) -> Result<ExactMatrix> {
    if k == 0 || k > a.dim() {
        return Err(Error::WedgeOutOfRange { k, dim: a.dim() });
    }
    let inv = a.inverse_mod(n)?;
    Ok(wedge_power(&inv, k)?.transpose().reduce_mod(n))
}

/// Checks `∧^k(ab) = ∧^k(a) ∧^k(b)`.
pub fn wedge_functoriality_check(a: &ExactMatrix, b: &ExactMatrix, k: usize) -> Result<bool> {
    let ab = a.checked_mul(b)?;
    let lhs = wedge_power(&ab, k)?;
    let rhs = &wedge_power(a, k)? * &wedge_power(b, k)?;
    Ok(lhs == rhs)
}
