//! Dense matrices over `Z/nZ` with machine-word entries.
//!
//! Used for the residue-mode criteria and for rank and Jordan computations
//! over prime fields, where big-integer arithmetic would be wasted work.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::arith;
use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;

/// Rectangular matrix with entries in `[0, modulus)`, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModMatrix {
    rows: usize,
    cols: usize,
    modulus: u64,
    data: Vec<u64>,
}

#[inline]
fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(n)) as u64
}

impl ModMatrix {
    pub fn zero(rows: usize, cols: usize, modulus: u64) -> Self {
        assert!(modulus >= 1, "modulus must be positive");
        Self {
            rows,
            cols,
            modulus,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(dim: usize, modulus: u64) -> Self {
        let mut m = Self::zero(dim, dim, modulus);
        for i in 0..dim {
            m.data[i * dim + i] = 1 % modulus;
        }
        m
    }

    pub fn from_exact(a: &ExactMatrix, modulus: u64) -> Self {
        let n = BigInt::from(modulus);
        let data = a
            .entries()
            .iter()
            .map(|e| {
                let mut r = e % &n;
                if r < BigInt::from(0) {
                    r += &n;
                }
                r.to_u64().expect("residue fits in u64")
            })
            .collect();
        Self {
            rows: a.dim(),
            cols: a.dim(),
            modulus,
            data,
        }
    }

    /// Builds a matrix from row-major data, reducing every entry.
    pub fn from_data(rows: usize, cols: usize, modulus: u64, mut data: Vec<u64>) -> Self {
        assert!(modulus >= 1, "modulus must be positive");
        assert_eq!(data.len(), rows * cols);
        for v in &mut data {
            *v %= modulus;
        }
        Self {
            rows,
            cols,
            modulus,
            data,
        }
    }

    /// Conjugates by the elementary matrix `I + c·e_{ij}` (`i != j`):
    /// row `i` gains `c` times row `j`, then column `j` loses `c` times column `i`.
    pub fn conjugate_elementary(&mut self, i: usize, j: usize, c: u64) {
        assert_eq!(self.rows, self.cols);
        assert_ne!(i, j);
        let n = self.modulus;
        let c = c % n;
        let dim = self.cols;
        for col in 0..dim {
            let add = mul_mod(c, self.data[j * dim + col], n);
            let v = &mut self.data[i * dim + col];
            *v = ((u128::from(*v) + u128::from(add)) % u128::from(n)) as u64;
        }
        for row in 0..dim {
            let sub = mul_mod(c, self.data[row * dim + i], n);
            let v = &mut self.data[row * dim + j];
            *v = ((u128::from(*v) + u128::from(n - sub)) % u128::from(n)) as u64;
        }
    }

    /// Stacks several square matrices vertically.
    pub fn vstack(blocks: &[ModMatrix]) -> Self {
        let first = &blocks[0];
        let mut data = Vec::with_capacity(blocks.len() * first.data.len());
        let mut rows = 0;
        for b in blocks {
            assert_eq!(b.cols, first.cols);
            assert_eq!(b.modulus, first.modulus);
            data.extend_from_slice(&b.data);
            rows += b.rows;
        }
        Self {
            rows,
            cols: first.cols,
            modulus: first.modulus,
            data,
        }
    }

    pub fn to_exact(&self) -> ExactMatrix {
        assert_eq!(self.rows, self.cols);
        ExactMatrix::from_fn(self.rows, |i, j| BigInt::from(self.get(i, j)))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn data(&self) -> &[u64] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rows, self.modulus)
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zero(self.cols, self.rows, self.modulus);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.get(i, j);
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        let n = self.modulus;
        let mut out = self.clone();
        for v in &mut out.data {
            *v = (n - *v) % n;
        }
        out
    }

    /// `self + c * I`, with `c` taken modulo the modulus.
    pub fn add_scalar(&self, c: i64) -> Self {
        assert_eq!(self.rows, self.cols);
        let n = self.modulus;
        let c = c.rem_euclid(n as i64) as u64;
        let mut out = self.clone();
        for i in 0..self.rows {
            let v = &mut out.data[i * self.cols + i];
            *v = ((u128::from(*v) + u128::from(c)) % u128::from(n)) as u64;
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        assert_eq!(self.modulus, rhs.modulus, "modulus mismatch");
        let n = self.modulus;
        let mut out = Self::zero(self.rows, rhs.cols, n);
        for i in 0..self.rows {
            let row = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == 0 {
                    continue;
                }
                let rhs_row = &rhs.data[k * rhs.cols..(k + 1) * rhs.cols];
                for (acc, &b) in row.iter_mut().zip(rhs_row) {
                    if b != 0 {
                        *acc = ((u128::from(*acc) + u128::from(a) * u128::from(b)) % u128::from(n)) as u64;
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> Self {
        assert_eq!(self.rows, self.cols);
        let mut acc = Self::identity(self.rows, self.modulus);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Rank over the prime field `F_p`; the modulus must be prime.
    pub fn rank(&self) -> Result<usize> {
        let p = self.modulus;
        if !arith::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let mut a = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        for c in 0..cols {
            let Some(pivot) = (rank..rows).find(|&r| a[r * cols + c] != 0) else {
                continue;
            };
            if pivot != rank {
                for j in 0..cols {
                    a.swap(pivot * cols + j, rank * cols + j);
                }
            }
            let inv = arith::inv_mod(a[rank * cols + c], p).expect("nonzero element of a field");
            for j in c..cols {
                a[rank * cols + j] = mul_mod(a[rank * cols + j], inv, p);
            }
            for r in rank + 1..rows {
                let f = a[r * cols + c];
                if f == 0 {
                    continue;
                }
                for j in c..cols {
                    let sub = mul_mod(f, a[rank * cols + j], p);
                    a[r * cols + j] = (a[r * cols + j] + p - sub) % p;
                }
            }
            rank += 1;
            if rank == rows {
                break;
            }
        }
        Ok(rank)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_over_prime_field() {
        let a = ExactMatrix::from_i64(&[&[1, 2], &[2, 4]]).unwrap();
        assert_eq!(ModMatrix::from_exact(&a, 5).rank().unwrap(), 1);
        let b = ExactMatrix::from_i64(&[&[1, 2], &[3, 4]]).unwrap();
        // det = -2
        assert_eq!(ModMatrix::from_exact(&b, 2).rank().unwrap(), 1);
        assert_eq!(ModMatrix::from_exact(&b, 3).rank().unwrap(), 2);
    }

    #[test]
    fn rank_rejects_composite_modulus() {
        let a = ModMatrix::identity(2, 4);
        assert_eq!(a.rank(), Err(Error::NotPrime(4)));
    }

    #[test]
    fn negative_entries_reduce_into_range() {
        let a = ExactMatrix::from_i64(&[&[-1, 0], &[0, -7]]).unwrap();
        let m = ModMatrix::from_exact(&a, 5);
        assert_eq!(m.data(), &[4, 0, 0, 3]);
    }

    #[test]
    fn elementary_conjugation_matches_product() {
        let a = ExactMatrix::from_i64(&[&[1, 2, 0], &[0, 3, 1], &[4, 0, 5]]).unwrap();
        let e = ExactMatrix::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[2, 0, 1]]).unwrap();
        let e_inv = ExactMatrix::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[-2, 0, 1]]).unwrap();
        let expected = ModMatrix::from_exact(&(&(&e * &a) * &e_inv), 7);
        let mut m = ModMatrix::from_exact(&a, 7);
        m.conjugate_elementary(2, 0, 2);
        assert_eq!(m, expected);
    }

    #[test]
    fn power_of_order_two_element() {
        let minus_one = ModMatrix::identity(3, 7).neg();
        assert!(minus_one.pow(2).is_identity());
        assert!(!minus_one.pow(3).is_identity());
    }
}
