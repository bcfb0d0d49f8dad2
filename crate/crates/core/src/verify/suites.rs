//! Brute-force suites. Every case is recomputed from scratch and a failing
//! case carries an input that can be fed back in.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use rand::Rng;

use super::families::{
    gen_briefly_unstable_family, gen_semistable_family, gen_twisted_product, gen_twisted_product_any,
    random_conjugate, random_echelon2_symplectic, rng,
};
use crate::arith;
use crate::cyclotomic::{
    groupring_bound, n_prime_set, n_set, prime_power_totient, root_minus_one_membership, sharpness_scan,
    DEFAULT_DEGREE_CAP,
};
use crate::error::{Error, Result};
use crate::exterior::{cohomology_action, wedge_power};
use crate::inertia::{
    check_cohomology_criterion, classify, fixed_space_trivial, integer_verdict, ClassifyOptions, Verdict,
    DEFAULT_CLOSURE_CAP, DEFAULT_WORD_BOUND,
};
use crate::matrix::ExactMatrix;
use crate::modular::ModMatrix;
use crate::spectral::{is_neg_unipotent, is_unipotent, jordan_partition_unipotent, level2_check, unipotent_echelon};

pub const SUITE_NAMES: [&str; 8] = [
    "level-two",
    "wedge-echelon",
    "jordan-blocks",
    "wedge-nonvanishing",
    "twist-contrapositive",
    "sharpness",
    "bounds",
    "classifier",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub case: String,
    pub input: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub cases: usize,
    pub passed: usize,
    pub failures: Vec<Failure>,
    pub notes: Vec<String>,
}

impl SuiteReport {
    pub fn new(suite: &str, seed: u64) -> Self {
        Self {
            suite: suite.to_string(),
            seed,
            cases: 0,
            passed: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(
        &mut self,
        case: String,
        pass: bool,
        input: impl FnOnce() -> String,
        detail: impl FnOnce() -> String,
    ) {
        self.cases += 1;
        if pass {
            self.passed += 1;
        } else {
            self.failures.push(Failure {
                case,
                input: input(),
                detail: detail(),
            });
        }
    }

    fn absorb(&mut self, other: SuiteReport) {
        self.cases += other.cases;
        self.passed += other.passed;
        self.failures.extend(other.failures);
        self.notes.extend(other.notes);
    }
}

/// Runs a suite by name with the default desk-scale parameters.
pub fn run_suite(name: &str, seed: u64) -> Result<SuiteReport> {
    match name {
        "level-two" => Ok(verify_level_two(6, 6, 5, seed)),
        "wedge-echelon" => Ok(verify_wedge_echelon(3, 100, seed)),
        "jordan-blocks" => verify_jordan_blocks(&[5, 7, 11], seed),
        "wedge-nonvanishing" => {
            let mut report = SuiteReport::new(name, seed);
            for (ell, dim, ks) in [(5, 6, 2..=4), (5, 7, 2..=5), (7, 8, 2..=6)] {
                let ks: Vec<usize> = ks.collect();
                report.absorb(verify_wedge_nonvanishing(ell, dim, &ks, seed)?);
            }
            Ok(report)
        }
        "twist-contrapositive" => {
            let mut report = SuiteReport::new(name, seed);
            for (ell, k, m) in [(5, 2, 1), (5, 3, 1), (7, 2, 1)] {
                report.absorb(verify_twist_contrapositive(ell, k, m, seed)?);
            }
            Ok(report)
        }
        "sharpness" => {
            let mut report = SuiteReport::new(name, seed);
            for (ell, m, r) in [(3, 1, 3), (2, 2, 2), (3, 1, 2)] {
                report.absorb(verify_sharpness(ell, m, r, &[1, 2, 3])?);
            }
            report.seed = seed;
            Ok(report)
        }
        "bounds" => {
            let mut report = verify_bounds()?;
            report.seed = seed;
            Ok(report)
        }
        "classifier" => verify_classifier(seed),
        _ => Err(Error::InvalidParameter(format!(
            "unknown suite '{name}'; expected one of {}",
            SUITE_NAMES.join(", ")
        ))),
    }
}

/// Every suite in [`SUITE_NAMES`] order.
pub fn run_all(seed: u64) -> Result<Vec<SuiteReport>> {
    SUITE_NAMES.iter().map(|name| run_suite(name, seed)).collect()
}

/// `J_2^{⊕c} ⊕ I` of size `dim`.
fn echelon2_base(dim: usize, copies: usize) -> ExactMatrix {
    let mut m = ExactMatrix::jordan_block(2);
    for _ in 1..copies {
        m = m.direct_sum(&ExactMatrix::jordan_block(2));
    }
    if m.dim() < dim {
        m = m.direct_sum(&ExactMatrix::identity(dim - m.dim()));
    }
    m
}

fn shifted_square_is_zero(g: &ExactMatrix, c: i64) -> bool {
    let n = g.add_scalar(c);
    (&n * &n).is_zero()
}

/// Random conjugates of echelon-2 and echelon-3 unipotents, and their
/// negatives: the level-2 test `(g^m - 1)^2 = 0` holds for every `m` in the
/// first case and for no `m` in the second.
pub fn verify_level_two(dim_max: usize, m_max: u64, trials: usize, seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new("level-two", seed);
    let mut r = rng(seed);
    for dim in 2..=dim_max {
        for trial in 0..trials {
            let copies = 1 + trial % (dim / 2);
            let g = random_conjugate(&echelon2_base(dim, copies), 2 * dim, &mut r);
            let h = -&g;
            let pass = unipotent_echelon(&g) == Some(2)
                && (1..=m_max).all(|m| level2_check(&g, m))
                && shifted_square_is_zero(&h, 1)
                && (1..=m_max).filter(|m| m % 2 == 0).all(|m| level2_check(&h, m));
            report.record(
                format!("echelon 2, dim {dim}, trial {trial}"),
                pass,
                || g.to_literal(),
                || format!("level-2 test failed for a unipotent of echelon 2 or its negative (m <= {m_max})"),
            );

            if dim < 3 {
                continue;
            }
            let base = if dim == 3 {
                ExactMatrix::jordan_block(3)
            } else {
                ExactMatrix::jordan_block(3).direct_sum(&ExactMatrix::identity(dim - 3))
            };
            let g = random_conjugate(&base, 2 * dim, &mut r);
            let h = -&g;
            let pass = unipotent_echelon(&g) == Some(3)
                && (1..=m_max).all(|m| !level2_check(&g, m))
                && !shifted_square_is_zero(&h, 1)
                && (1..=m_max).filter(|m| m % 2 == 0).all(|m| !level2_check(&h, m));
            report.record(
                format!("echelon 3, dim {dim}, trial {trial}"),
                pass,
                || g.to_literal(),
                || format!("level-2 test passed for some m <= {m_max} on a unipotent of echelon 3"),
            );
        }
    }
    report
}

/// `(∧^k g - 1)^{k+1} = 0` for random symplectic `g` with `(g - 1)^2 = 0`
/// and every `1 <= k <= 2d - 1`; the same for `-g` when `k` is even; and
/// unipotency of `∧^k g` forces `g` (odd `k`) or `±g` (even `k`) unipotent.
pub fn verify_wedge_echelon(d_max: usize, trials: usize, seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new("wedge-echelon", seed);
    let mut r = rng(seed);
    let mut samples: Vec<(String, ExactMatrix)> = Vec::new();
    for d in 1..=d_max {
        for trial in 0..trials {
            let g = random_echelon2_symplectic(d, &mut r);
            let neg = -&g;
            for k in 1..2 * d {
                let w = wedge_power(&g, k).expect("k < dim");
                let pass = w.add_scalar(-1).pow(k as u64 + 1).is_zero();
                report.record(
                    format!("d={d} trial={trial} k={k}"),
                    pass,
                    || g.to_literal(),
                    || format!("(wedge^{k} g - 1)^{} is nonzero", k + 1),
                );
                if k % 2 == 0 {
                    let w = wedge_power(&neg, k).expect("k < dim");
                    let pass = w.add_scalar(-1).pow(k as u64 + 1).is_zero();
                    report.record(
                        format!("d={d} trial={trial} k={k} negated"),
                        pass,
                        || neg.to_literal(),
                        || format!("(wedge^{k} g - 1)^{} is nonzero for g = -unipotent", k + 1),
                    );
                }
            }
            if trial == 0 {
                samples.push((format!("random echelon 2, d={d}"), g));
                samples.push((format!("negated random echelon 2, d={d}"), neg));
            }
        }
    }

    for d in 1..=d_max {
        for (label, rep) in [
            ("semistable", gen_semistable_family(d, seed)),
            ("briefly-unstable", gen_briefly_unstable_family(d, seed)),
        ] {
            samples.push((format!("{label} d={d}"), rep.expect("d >= 1").tame().clone()));
        }
    }
    for (ell, a) in [(2, 1), (3, 1), (5, 1), (3, 2)] {
        let rep = gen_twisted_product_any(ell, a).expect("valid parameters");
        samples.push((format!("twisted product ell={ell} a={a}"), rep.tame().clone()));
    }
    for dim in [4, 6] {
        let j = ExactMatrix::jordan_block(3).direct_sum(&ExactMatrix::identity(dim - 3));
        samples.push((format!("J3 + I, dim {dim}"), j.clone()));
        samples.push((format!("-(J3 + I), dim {dim}"), -&j));
    }
    for (label, g) in &samples {
        for k in 1..g.dim() {
            let w = wedge_power(g, k).expect("k < dim");
            let pass = !is_unipotent(&w)
                || if k % 2 == 1 {
                    is_unipotent(g)
                } else {
                    is_unipotent(g) || is_neg_unipotent(g)
                };
            report.record(
                format!("converse, {label}, k={k}"),
                pass,
                || g.to_literal(),
                || format!("wedge^{k} g is unipotent but g is not (up to sign for even k)"),
            );
        }
    }
    report
}

/// Jordan partition of `∧^r(J_{ℓ-1})` mod `ℓ` for `2 <= r <= ℓ - 3`: every
/// block has size `ℓ` except one of size `1` or `ℓ - 1`, and
/// `(∧^r J - 1)^{ℓ-1}` is nonzero mod `ℓ`. The partition is cross-checked on
/// a random conjugate by bisecting the nilpotency index and by kernel ranks.
pub fn verify_jordan_blocks(ells: &[u64], seed: u64) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("jordan-blocks", seed);
    let mut r = rng(seed);
    for &ell in ells {
        if ell < 5 || !arith::is_prime(ell) {
            return Err(Error::InvalidParameter(format!("ell must be a prime >= 5, got {ell}")));
        }
        let a = ExactMatrix::jordan_block(ell as usize - 1);
        for wedge in 2..=ell as usize - 3 {
            let w = wedge_power(&a, wedge)?;
            let dim = w.dim();
            let input = || format!("{{\"ell\":{ell},\"r\":{wedge}}}");
            let partition = match jordan_partition_unipotent(&w, ell) {
                Ok(p) => p,
                Err(e) => {
                    report.record(format!("ell={ell} r={wedge} partition"), false, input, || e.to_string());
                    continue;
                }
            };
            let odd: Vec<usize> = partition.blocks.iter().copied().filter(|&b| b != ell as usize).collect();
            let shape_ok = odd.len() == 1 && (odd[0] == 1 || odd[0] == ell as usize - 1);
            report.record(format!("ell={ell} r={wedge} partition"), shape_ok, input, || {
                format!("blocks {:?}", partition.blocks)
            });
            if let [rem] = odd[..] {
                report.notes.push(format!(
                    "ell={ell} r={wedge}: dim {dim} = {}x{ell} + {rem}",
                    partition.count(ell as usize)
                ));
            }

            let shifted = ModMatrix::from_exact(&w.add_scalar(-1), ell);
            let nonzero = !shifted.pow(ell - 1).is_zero();
            report.record(format!("ell={ell} r={wedge} nonvanishing"), nonzero, input, || {
                format!("(wedge^{wedge} J - 1)^{} vanishes mod {ell}", ell - 1)
            });

            let mut conj = shifted.clone();
            for _ in 0..3 * dim {
                let i = r.gen_range(0..dim);
                let mut j = r.gen_range(0..dim - 1);
                if j >= i {
                    j += 1;
                }
                conj.conjugate_elementary(i, j, r.gen_range(1..ell));
            }
            let index = nilpotency_index_by_bisection(&conj);
            let mut agree = index == Some(partition.max_block());
            let mut power = ModMatrix::identity(dim, ell);
            for j in 1..=partition.max_block() {
                power = power.mul(&conj);
                let kernel = dim - power.rank()?;
                let expected: usize = partition.blocks.iter().map(|&b| b.min(j)).sum();
                agree &= kernel == expected;
            }
            report.record(format!("ell={ell} r={wedge} cross-oracle"), agree, input, || {
                format!(
                    "conjugate has nilpotency index {index:?} or kernel ranks inconsistent with {:?}",
                    partition.blocks
                )
            });
        }
    }
    Ok(report)
}

/// Least `e` with `n^e = 0`, found by bisection over `[1, dim]`.
fn nilpotency_index_by_bisection(n: &ModMatrix) -> Option<usize> {
    let dim = n.rows();
    if !n.pow(dim as u64).is_zero() {
        return None;
    }
    let (mut lo, mut hi) = (1, dim);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if n.pow(mid as u64).is_zero() {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Some(lo)
}

/// Upper unitriangular matrix with entries in `[-2, 2]` above the diagonal.
fn random_unitriangular<R: Rng>(dim: usize, rng: &mut R) -> ExactMatrix {
    let mut entries = alloc::vec![0i64; dim * dim];
    for i in 0..dim {
        entries[i * dim + i] = 1;
        for j in i + 1..dim {
            entries[i * dim + j] = rng.gen_range(-2..=2);
        }
    }
    ExactMatrix::from_fn(dim, |i, j| BigInt::from(entries[i * dim + j]))
}

/// For `A = J_{ℓ-1} ⊕ R` with `R` a random unipotent, conjugated at random:
/// `(∧^k A - 1)^{ℓ-1}` is nonzero mod `ℓ` for each requested `k`.
pub fn verify_wedge_nonvanishing(ell: u64, dim: usize, ks: &[usize], seed: u64) -> Result<SuiteReport> {
    if ell < 5 || !arith::is_prime(ell) {
        return Err(Error::InvalidParameter(format!("ell must be a prime >= 5, got {ell}")));
    }
    let block = ell as usize - 1;
    if dim < block + 1 {
        return Err(Error::InvalidParameter(format!("dim must be at least {}, got {dim}", block + 1)));
    }
    if let Some(&k) = ks.iter().find(|&&k| k < 2 || k + 2 > dim) {
        return Err(Error::InvalidParameter(format!("k must satisfy 2 <= k <= dim - 2, got {k}")));
    }
    let mut report = SuiteReport::new("wedge-nonvanishing", seed);
    let mut r = rng(seed ^ (ell << 32) ^ dim as u64);
    for trial in 0..3 {
        let rest = random_unitriangular(dim - block, &mut r);
        let a = random_conjugate(&ExactMatrix::jordan_block(block).direct_sum(&rest), 2 * dim, &mut r);
        let pre = !ModMatrix::from_exact(&a.add_scalar(-1), ell).pow(ell - 2).is_zero();
        report.record(
            format!("ell={ell} dim={dim} trial={trial} precondition"),
            pre,
            || a.to_literal(),
            || format!("(A - 1)^{} vanishes mod {ell}", ell - 2),
        );
        for &k in ks {
            let w = wedge_power(&a, k)?;
            let nonzero = !ModMatrix::from_exact(&w.add_scalar(-1), ell).pow(ell - 1).is_zero();
            report.record(
                format!("ell={ell} dim={dim} trial={trial} k={k}"),
                nonzero,
                || a.to_literal(),
                || format!("(wedge^{k} A - 1)^{} vanishes mod {ell}", ell - 1),
            );
        }
    }
    Ok(report)
}

/// For `g = C_{Φ_ℓ} ⊕ I` and random conjugates: `g` is not unipotent but
/// `g^ℓ` is, `∧^k g` is not unipotent, and `(∧^k g - 1)^{m(ℓ-1)}` is not
/// divisible by `ℓ^m`.
pub fn verify_twist_contrapositive(ell: u64, k: usize, m: u32, seed: u64) -> Result<SuiteReport> {
    if ell < 5 || !arith::is_prime(ell) {
        return Err(Error::InvalidParameter(format!("ell must be a prime >= 5, got {ell}")));
    }
    if k < 2 || m == 0 {
        return Err(Error::InvalidParameter("need k >= 2 and m >= 1".into()));
    }
    let block = ell as usize - 1;
    let dim = (block + 2).max(k + 2);
    let modulus = BigInt::from(ell).pow(m);
    let base = gen_twisted_product(ell, 1)?.tame().clone();
    let base = if base.dim() < dim {
        base.direct_sum(&ExactMatrix::identity(dim - base.dim()))
    } else {
        base
    };
    let mut report = SuiteReport::new("twist-contrapositive", seed);
    let mut r = rng(seed ^ (ell << 32) ^ ((k as u64) << 16) ^ u64::from(m));
    for trial in 0..4 {
        let g = if trial == 0 {
            base.clone()
        } else {
            random_conjugate(&base, 2 * dim, &mut r)
        };
        let w = wedge_power(&g, k)?;
        let exponent = u64::from(m) * (ell - 1);
        let pass = !is_unipotent(&g)
            && is_unipotent(&g.pow(ell))
            && !is_unipotent(&w)
            && !w.add_scalar(-1).pow(exponent).entries_divisible_big(&modulus);
        report.record(
            format!("ell={ell} k={k} m={m} dim={dim} trial={trial}"),
            pass,
            || g.to_literal(),
            || format!("(wedge^{k} g - 1)^{exponent} is divisible by {modulus} or a unipotency check failed"),
        );
    }
    Ok(report)
}

/// For `n = ℓ^m ∈ N'(r)`, the twisted product passes the mod-`n` test on
/// each `H^k` although it is neither semistable nor without fixed vectors.
pub fn verify_sharpness(ell: u64, m: u32, r: u64, ks: &[usize]) -> Result<SuiteReport> {
    if !arith::is_prime(ell) || m == 0 {
        return Err(Error::InvalidParameter(format!("need a prime ell and m >= 1, got ell={ell}, m={m}")));
    }
    let mu = u64::from(m);
    let condition = mu * (ell - 1) < r || (ell == 2 && r == mu) || (ell == 3 && r == 2 * mu);
    if !condition {
        return Err(Error::InvalidParameter(format!(
            "(ell, m, r) = ({ell}, {m}, {r}) needs m(ell-1) < r, or ell = 2 and r = m, or ell = 3 and r = 2m"
        )));
    }
    let n = ell.pow(m);
    let rep = gen_twisted_product_any(ell, 1)?;
    let opts = ClassifyOptions::default();
    let mut report = SuiteReport::new("sharpness", 0);
    let verdict = integer_verdict(&rep, DEFAULT_WORD_BOUND)?.verdict;
    let fixed_trivial = fixed_space_trivial(&rep, ell)?.holds;
    for &k in ks {
        let action = cohomology_action(rep.tame(), k)?;
        let divisible = action.add_scalar(-1).pow(r).entries_divisible(n);
        let criterion = check_cohomology_criterion(&rep, k, r, n, false, DEFAULT_CLOSURE_CAP)?.holds;
        let classified = classify(&rep, k, r, n, &opts)?.verdict;
        let pass = divisible
            && criterion
            && verdict == Verdict::NotSemistablePattern
            && !fixed_trivial
            && classified == Verdict::Indeterminate;
        report.record(
            format!("ell={ell} m={m} r={r} k={k}"),
            pass,
            || format!("{{\"ell\":{ell},\"m\":{m},\"r\":{r},\"k\":{k}}}"),
            || {
                format!(
                    "divisible={divisible} criterion={criterion} integer verdict={verdict} \
                     fixed space trivial={fixed_trivial} classify={classified}"
                )
            },
        );
    }
    Ok(report)
}

/// Exceptional sets and cyclotomic membership.
///
/// - membership of `(ζ_{ℓ^s} - 1)^r` in `ℓ^m·Z[ζ]` holds iff `r >= m·ℓ^{s-1}(ℓ-1)`,
///   for `ℓ ∈ {2, 3, 5, 7}`, `s <= 2`, `m <= 3`, `r <= 24`;
/// - a root of unity `λ ≠ 1` with `(λ - 1)^r ∈ n·Z̄` exists iff `n ∈ N(r)`,
///   for `r <= 8`, `2 <= n <= 50`;
/// - `N'(r) ⊆ N(r)` with difference `{ℓ^m : ℓ >= 5, m(ℓ-1) = r}`, `r <= 24`.
pub fn verify_bounds() -> Result<SuiteReport> {
    let mut report = SuiteReport::new("bounds", 0);
    for ell in [2u64, 3, 5, 7] {
        for s in 1..=2u32 {
            for m in 1..=3u32 {
                let threshold = u64::from(m) * prime_power_totient(ell, s);
                let bound = groupring_bound(ell, s, m)?;
                report.record(
                    format!("groupring ell={ell} s={s} m={m}"),
                    bound == threshold,
                    || format!("{{\"ell\":{ell},\"s\":{s},\"m\":{m}}}"),
                    || format!("bound {bound}, expected {threshold}"),
                );
                for r in 1..=24u64 {
                    let n = ell.pow(m);
                    let member = root_minus_one_membership(ell, s, r, n)?;
                    report.record(
                        format!("membership ell={ell} s={s} m={m} r={r}"),
                        member == (r >= threshold),
                        || format!("{{\"ell\":{ell},\"s\":{s},\"r\":{r},\"n\":{n}}}"),
                        || format!("membership {member}, threshold {threshold}"),
                    );
                }
            }
        }
    }
    for r in 1..=8u64 {
        let set = n_set(r)?;
        for n in 2..=50u64 {
            let witness = sharpness_scan(r, n, 3, DEFAULT_DEGREE_CAP)?;
            report.record(
                format!("scan r={r} n={n}"),
                witness.is_some() == set.contains(n),
                || format!("{{\"r\":{r},\"n\":{n}}}"),
                || format!("witness {witness:?}, n in N(r): {}", set.contains(n)),
            );
        }
    }
    for r in 1..=24u64 {
        let full = n_set(r)?;
        let narrow = n_prime_set(r)?;
        let mut expected: Vec<u64> = arith::primes_up_to(r + 1)
            .into_iter()
            .filter(|&ell| ell >= 5 && r % (ell - 1) == 0)
            .map(|ell| ell.pow((r / (ell - 1)) as u32))
            .collect();
        expected.sort_unstable();
        let diff = full.difference(&narrow);
        report.record(
            format!("sets r={r}"),
            narrow.is_subset(&full) && diff.as_slice() == expected.as_slice(),
            || format!("{{\"r\":{r}}}"),
            || format!("N(r) = {full}, N'(r) = {narrow}"),
        );
    }
    Ok(report)
}

/// Residue-mode classification agrees with the integer-level verdict, and
/// both match the family's expected pattern, for `k ∈ {1, 2, 3}`,
/// `r = k + 1` and every `n <= 50` outside `N'(r)`.
pub fn verify_classifier(seed: u64) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("classifier", seed);
    let opts = ClassifyOptions::default();
    let families = [
        (gen_semistable_family(3, seed)?, Verdict::SemistablePattern),
        (gen_briefly_unstable_family(3, seed)?, Verdict::BrieflyUnstablePattern),
        (gen_twisted_product(5, 1)?, Verdict::NotSemistablePattern),
    ];
    for (rep, expected) in &families {
        let integer = integer_verdict(rep, opts.word_bound)?.verdict;
        for k in 1..=3usize {
            let r = k as u64 + 1;
            let exceptional = n_prime_set(r)?;
            for n in (2..=50u64).filter(|&n| !exceptional.contains(n)) {
                let residue = classify(&rep.to_residue(n)?, k, r, n, &opts)?.verdict;
                let full = classify(rep, k, r, n, &opts)?.verdict;
                report.record(
                    format!("{} k={k} r={r} n={n}", rep.label()),
                    residue == integer && full == integer && integer == *expected,
                    || format!("{{\"tame\":{},\"k\":{k},\"r\":{r},\"n\":{n}}}", rep.tame().to_literal()),
                    || format!("residue {residue}, integer-mode classify {full}, integer {integer}, expected {expected}"),
                );
            }
        }
    }
    Ok(report)
}
