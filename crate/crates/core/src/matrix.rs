//! Exact square matrices over the integers.
//!
//! An [`ExactMatrix`] is the integer representative of an ℓ-adic operator.
//! Conditions of the form "`A` lies in `n·M_g(Z_ℓ)`" become exact entrywise
//! divisibility; no truncated ℓ-adic arithmetic is performed anywhere.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::arith;
use crate::error::{Error, Result};
use crate::modular::ModMatrix;
use crate::poly::IntPolynomial;

/// Square matrix with arbitrary-precision integer entries, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExactMatrix {
    dim: usize,
    entries: Vec<BigInt>,
}

impl ExactMatrix {
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::Empty);
        }
        let mut entries = Vec::with_capacity(dim * dim);
        for (row, values) in rows.into_iter().enumerate() {
            if values.len() != dim {
                return Err(Error::NotSquare {
                    row,
                    found: values.len(),
                    expected: dim,
                });
            }
            entries.extend(values);
        }
        Ok(Self { dim, entries })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        assert!(dim > 0, "matrix dimension must be positive");
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        Self { dim, entries }
    }

    pub fn zero(dim: usize) -> Self {
        Self::from_fn(dim, |_, _| BigInt::zero())
    }

    pub fn identity(dim: usize) -> Self {
        Self::scalar(dim, 1)
    }

    pub fn scalar(dim: usize, c: i64) -> Self {
        Self::from_fn(dim, |i, j| if i == j { BigInt::from(c) } else { BigInt::zero() })
    }

    /// Unipotent Jordan block of size `dim` (ones on the diagonal and superdiagonal).
    pub fn jordan_block(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| {
            if i == j || j == i + 1 {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        })
    }

    /// Companion matrix of a monic polynomial: ones on the subdiagonal and
    /// the negated low-order coefficients in the last column.
    pub fn companion(p: &IntPolynomial) -> Result<Self> {
        let degree = match p.degree() {
            Some(d) if d >= 1 && p.is_monic() => d,
            _ => {
                return Err(Error::InvalidParameter(
                    "companion matrix needs a monic polynomial of degree >= 1".to_string(),
                ))
            }
        };
        Ok(Self::from_fn(degree, |i, j| {
            if j == degree - 1 {
                -p.coeff(i)
            } else if i == j + 1 {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        }))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.dim + j]
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        self.entries.chunks(self.dim)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, v)| if i == j { v.is_one() } else { v.is_zero() })
        })
    }

    fn check_dims(&self, other: &Self) -> Result<()> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            })
        }
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        self.check_dims(rhs)?;
        let n = self.dim;
        let mut out = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &rhs.entries[k * n + j];
                    if !b.is_zero() {
                        out[i * n + j] += a * b;
                    }
                }
            }
        }
        Ok(Self { dim: n, entries: out })
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.check_dims(rhs)?;
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect();
        Ok(Self { dim: self.dim, entries })
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.check_dims(rhs)?;
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect();
        Ok(Self { dim: self.dim, entries })
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|v| v * c).collect(),
        }
    }

    /// `self + c·I`.
    pub fn add_scalar(&self, c: i64) -> Self {
        let mut out = self.clone();
        for i in 0..self.dim {
            out.entries[i * self.dim + i] += c;
        }
        out
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i).clone())
    }

    /// `self^e` by repeated squaring; `self^0 = I`.
    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = Self::identity(self.dim);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Block-diagonal sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let (a, b) = (self.dim, other.dim);
        Self::from_fn(a + b, |i, j| match (i < a, j < a) {
            (true, true) => self.get(i, j).clone(),
            (false, false) => other.get(i - a, j - a).clone(),
            _ => BigInt::zero(),
        })
    }

    /// Entries reduced into `[0, n)`.
    pub fn reduce_mod(&self, n: u64) -> Self {
        let m = BigInt::from(n);
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|v| v.mod_floor(&m)).collect(),
        }
    }

    /// True iff every entry is divisible by `n`, i.e. the matrix lies in `n·M(Z)`.
    pub fn entries_divisible(&self, n: u64) -> bool {
        self.entries_divisible_big(&BigInt::from(n))
    }

    pub fn entries_divisible_big(&self, n: &BigInt) -> bool {
        self.entries.iter().all(|v| (v % n).is_zero())
    }

    pub fn trace(&self) -> BigInt {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// Faddeev–LeVerrier recursion. Returns the characteristic polynomial and
    /// the last auxiliary matrix `M_n`, from which the adjugate follows.
    ///
    /// Every division is exact over the integers (Newton's identities).
    fn faddeev_leverrier(&self) -> (IntPolynomial, Self) {
        let n = self.dim;
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        let mut m = Self::identity(n);
        for k in 1..=n {
            let am = self * &m;
            let (c, rem) = (-am.trace()).div_rem(&BigInt::from(k));
            debug_assert!(rem.is_zero(), "Faddeev-LeVerrier division must be exact");
            coeffs[n - k] = c;
            if k < n {
                m = am.add_scalar_big(&coeffs[n - k]);
            }
        }
        (IntPolynomial::new(coeffs), m)
    }

    fn add_scalar_big(&self, c: &BigInt) -> Self {
        let mut out = self.clone();
        for i in 0..self.dim {
            out.entries[i * self.dim + i] += c;
        }
        out
    }

    /// Monic characteristic polynomial `det(xI - A)` with exact integer coefficients.
    pub fn charpoly(&self) -> IntPolynomial {
        self.faddeev_leverrier().0
    }

    pub fn determinant(&self) -> BigInt {
        let c0 = self.charpoly().coeff(0);
        if self.dim.is_multiple_of(2) {
            c0
        } else {
            -c0
        }
    }

    /// Adjugate matrix, so that `A · adj(A) = det(A) · I`.
    pub fn adjugate(&self) -> Self {
        let (_, m) = self.faddeev_leverrier();
        if self.dim % 2 == 1 {
            m
        } else {
            -&m
        }
    }

    /// Exact inverse over `Z`; requires `det = ±1`.
    pub fn inverse_unimodular(&self) -> Result<Self> {
        let det = self.determinant();
        if det.is_one() {
            Ok(self.adjugate())
        } else if (-&det).is_one() {
            Ok(-&self.adjugate())
        } else {
            Err(Error::NotInvertible("the integers (determinant is not ±1)".to_string()))
        }
    }

    /// Inverse over `Z/nZ`, entries reduced into `[0, n)`; requires `gcd(det, n) = 1`.
    pub fn inverse_mod(&self, n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("modulus must be positive".to_string()));
        }
        let det = self
            .determinant()
            .mod_floor(&BigInt::from(n))
            .to_u64()
            .expect("residue fits in u64");
        let inv = arith::inv_mod(det, n).ok_or_else(|| {
            Error::NotInvertible(alloc::format!("Z/{n}Z (determinant {det} is not a unit)"))
        })?;
        Ok(self.adjugate().scale(&BigInt::from(inv)).reduce_mod(n))
    }

    pub fn rank_mod_prime(&self, ell: u64) -> Result<usize> {
        if !arith::is_prime(ell) {
            return Err(Error::NotPrime(ell));
        }
        ModMatrix::from_exact(self, ell).rank()
    }

    pub fn kernel_dim_mod_prime(&self, ell: u64) -> Result<usize> {
        Ok(self.dim - self.rank_mod_prime(ell)?)
    }

    /// Checks `aᵀ · form · a = form`.
    ///
    /// The form must be alternating (antisymmetric with zero diagonal) and
    /// nondegenerate.
    pub fn is_symplectic(&self, form: &Self) -> Result<bool> {
        self.check_dims(form)?;
        check_alternating_form(form)?;
        Ok(&(&self.transpose() * form) * self == *form)
    }

    /// Matrix literal: JSON array of rows of decimal integer strings.
    pub fn to_literal(&self) -> String {
        let mut out = String::from("[");
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push('[');
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    out.push(',');
                }
                out.push('"');
                out.push_str(&v.to_string());
                out.push('"');
            }
            out.push(']');
        }
        out.push(']');
        out
    }
}

pub(crate) fn check_alternating_form(form: &ExactMatrix) -> Result<()> {
    let n = form.dim();
    for i in 0..n {
        if !form.get(i, i).is_zero() {
            return Err(Error::DegenerateForm);
        }
        for j in i + 1..n {
            if *form.get(i, j) != -form.get(j, i) {
                return Err(Error::DegenerateForm);
            }
        }
    }
    if form.determinant().is_zero() {
        return Err(Error::DegenerateForm);
    }
    Ok(())
}

/// Rank over `Q` of a `rows × cols` integer matrix, by fraction-free
/// (Bareiss) elimination.
pub fn rank_over_rationals(rows: usize, cols: usize, data: &[BigInt]) -> usize {
    assert_eq!(data.len(), rows * cols);
    let mut a = data.to_vec();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| !a[r * cols + c].is_zero()) else {
            continue;
        };
        if pivot != rank {
            for j in 0..cols {
                a.swap(pivot * cols + j, rank * cols + j);
            }
        }
        let p = a[rank * cols + c].clone();
        for r in rank + 1..rows {
            let f = a[r * cols + c].clone();
            for j in c..cols {
                let v = &p * &a[r * cols + j] - &f * &a[rank * cols + j];
                a[r * cols + j] = v / &prev;
            }
        }
        prev = p;
        rank += 1;
    }
    rank
}

impl Mul for &ExactMatrix {
    type Output = ExactMatrix;

    /// Panics on dimension mismatch; use [`ExactMatrix::checked_mul`] for a `Result`.
    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.checked_mul(rhs).expect("matrix dimensions must agree")
    }
}

impl Add for &ExactMatrix {
    type Output = ExactMatrix;

    fn add(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.checked_add(rhs).expect("matrix dimensions must agree")
    }
}

impl Sub for &ExactMatrix {
    type Output = ExactMatrix;

    fn sub(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.checked_sub(rhs).expect("matrix dimensions must agree")
    }
}

impl Neg for &ExactMatrix {
    type Output = ExactMatrix;

    fn neg(self) -> ExactMatrix {
        ExactMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|v| -v).collect(),
        }
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_literal())
    }
}
