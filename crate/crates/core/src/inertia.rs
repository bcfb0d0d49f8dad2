//! Simulated inertia images and the mod-`n` classification decision table.
//!
//! An [`InertiaRep`] is a finitely generated matrix group: a tame generator
//! `t` and wild generators `w1, w2, …`. In residue mode the group generated
//! modulo `n` is finite and enumerated exactly by [`group_closure`]. In
//! integer mode the group may be infinite, and the integer-level tests run
//! over the words `t^i` and `wj·t^i` up to a word bound.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::arith;
use crate::cyclotomic::{n_prime_set, n_set};
use crate::error::{Error, Result};
use crate::exterior::cohomology_action_mod;
use crate::matrix::{check_alternating_form, rank_over_rationals, ExactMatrix};
use crate::modular::ModMatrix;
use crate::spectral::{is_neg_unipotent, is_quasi_unipotent, is_unipotent};

pub const DEFAULT_CLOSURE_CAP: usize = 20_000;
pub const DEFAULT_WORD_BOUND: u32 = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoefficientMode {
    /// Integer representative of an `ℓ`-adic operator.
    Integer { ell: u64 },
    /// Matrices over `Z/nZ`, stored with entries in `[0, n)`.
    Residue { n: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InertiaRep {
    dim: usize,
    mode: CoefficientMode,
    tame: ExactMatrix,
    wild: Vec<ExactMatrix>,
    form: Option<ExactMatrix>,
    label: String,
}

impl InertiaRep {
    /// Validates and builds a representation.
    ///
    /// Residue-mode generators are reduced into `[0, n)`.
    pub fn new(
        mode: CoefficientMode,
        tame: ExactMatrix,
        wild: Vec<ExactMatrix>,
        form: Option<ExactMatrix>,
        label: impl Into<String>,
    ) -> Result<Self> {
        let dim = tame.dim();
        if dim == 0 || dim % 2 == 1 {
            return Err(Error::InvalidRepresentation(format!(
                "dimension must be even and positive, got {dim}"
            )));
        }
        for (i, w) in wild.iter().enumerate() {
            if w.dim() != dim {
                return Err(Error::InvalidRepresentation(format!(
                    "wild generator w{} has dimension {}, expected {dim}",
                    i + 1,
                    w.dim()
                )));
            }
        }
        let (tame, wild) = match mode {
            CoefficientMode::Integer { ell } => {
                if !arith::is_prime(ell) {
                    return Err(Error::NotPrime(ell));
                }
                (tame, wild)
            }
            CoefficientMode::Residue { n } => {
                if n < 2 {
                    return Err(Error::InvalidRepresentation(format!(
                        "residue modulus must be at least 2, got {n}"
                    )));
                }
                (tame.reduce_mod(n), wild.iter().map(|w| w.reduce_mod(n)).collect())
            }
        };
        let rep = Self {
            dim,
            mode,
            tame,
            wild,
            form,
            label: label.into(),
        };
        rep.validate()?;
        Ok(rep)
    }

    fn validate(&self) -> Result<()> {
        for (name, g) in self.generators() {
            match self.mode {
                CoefficientMode::Integer { .. } => {
                    let det = g.determinant();
                    if !det.is_one() && !(-&det).is_one() {
                        return Err(Error::InvalidRepresentation(format!(
                            "generator {name} has determinant {det}, not a unit over the integers"
                        )));
                    }
                    if !is_quasi_unipotent(g).is_quasi_unipotent {
                        return Err(Error::InvalidRepresentation(format!(
                            "generator {name} is not quasi-unipotent"
                        )));
                    }
                }
                CoefficientMode::Residue { n } => {
                    let det = g.determinant().mod_floor(&BigInt::from(n));
                    if !det.gcd(&BigInt::from(n)).is_one() {
                        return Err(Error::InvalidRepresentation(format!(
                            "generator {name} has determinant {det}, not a unit mod {n}"
                        )));
                    }
                }
            }
        }
        if let Some(form) = &self.form {
            if form.dim() != self.dim {
                return Err(Error::InvalidRepresentation(format!(
                    "form has dimension {}, expected {}",
                    form.dim(),
                    self.dim
                )));
            }
            check_alternating_form(form)?;
            for (name, g) in self.generators() {
                let defect = &(&(&g.transpose() * form) * g) - form;
                let preserved = match self.mode {
                    CoefficientMode::Integer { .. } => defect.is_zero(),
                    CoefficientMode::Residue { n } => defect.entries_divisible(n),
                };
                if !preserved {
                    return Err(Error::InvalidRepresentation(format!(
                        "generator {name} does not preserve the symplectic form"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mode(&self) -> CoefficientMode {
        self.mode
    }

    pub fn tame(&self) -> &ExactMatrix {
        &self.tame
    }

    pub fn wild(&self) -> &[ExactMatrix] {
        &self.wild
    }

    pub fn form(&self) -> Option<&ExactMatrix> {
        self.form.as_ref()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Named generators: `t`, then `w1, w2, …`.
    pub fn generators(&self) -> Vec<(String, &ExactMatrix)> {
        let mut out = Vec::with_capacity(1 + self.wild.len());
        out.push(("t".to_string(), &self.tame));
        for (i, w) in self.wild.iter().enumerate() {
            out.push((format!("w{}", i + 1), w));
        }
        out
    }

    pub fn check_dim_cap(&self, max_dim: usize) -> Result<()> {
        if self.dim > max_dim {
            return Err(Error::InvalidRepresentation(format!(
                "dimension {} exceeds the cap of {max_dim}",
                self.dim
            )));
        }
        Ok(())
    }

    /// The same generators read modulo `n`.
    pub fn to_residue(&self, n: u64) -> Result<Self> {
        if let CoefficientMode::Residue { n: current } = self.mode {
            if current % n != 0 {
                return Err(Error::InvalidParameter(format!(
                    "cannot reduce a mod-{current} representation mod {n}"
                )));
            }
        }
        Self::new(
            CoefficientMode::Residue { n },
            self.tame.clone(),
            self.wild.clone(),
            self.form.clone(),
            self.label.clone(),
        )
    }

    /// The representation with every generator negated.
    pub fn negated(&self) -> Self {
        let neg = |g: &ExactMatrix| match self.mode {
            CoefficientMode::Integer { .. } => -g,
            CoefficientMode::Residue { n } => (-g).reduce_mod(n),
        };
        Self {
            dim: self.dim,
            mode: self.mode,
            tame: neg(&self.tame),
            wild: self.wild.iter().map(neg).collect(),
            form: self.form.clone(),
            label: format!("-({})", self.label),
        }
    }

    fn require_integer(&self, what: &str) -> Result<u64> {
        match self.mode {
            CoefficientMode::Integer { ell } => Ok(ell),
            CoefficientMode::Residue { .. } => Err(Error::InvalidParameter(format!(
                "{what} needs an integer-mode representation"
            ))),
        }
    }

    /// Integer-mode checked set: `t^i` for `1 <= i <= word_bound`, then
    /// `wj` and `wj·t^i` for each wild generator.
    fn checked_words(&self, word_bound: u32) -> Vec<(String, ExactMatrix)> {
        let mut tame_powers = Vec::with_capacity(word_bound as usize + 1);
        tame_powers.push(ExactMatrix::identity(self.dim));
        for i in 1..=word_bound as usize {
            tame_powers.push(&tame_powers[i - 1] * &self.tame);
        }
        let mut out = Vec::new();
        for (i, p) in tame_powers.iter().enumerate().skip(1) {
            out.push((power_word("t", i), p.clone()));
        }
        for (j, w) in self.wild.iter().enumerate() {
            let name = format!("w{}", j + 1);
            out.push((name.clone(), w.clone()));
            for (i, p) in tame_powers.iter().enumerate().skip(1) {
                out.push((format!("{name}*{}", power_word("t", i)), w * p));
            }
        }
        out
    }
}

fn power_word(base: &str, i: usize) -> String {
    if i == 1 {
        base.to_string()
    } else {
        format!("{base}^{i}")
    }
}

/// One element of a closure, with the BFS word that reached it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElement {
    pub word: String,
    pub matrix: ExactMatrix,
}

/// Breadth-first closure of the generators under multiplication mod `n`.
///
/// Elements are listed in BFS order starting from the identity `e`; each new
/// element is a known element times a generator on the right.
pub fn group_closure(rep: &InertiaRep, n: u64, cap: usize) -> Result<Vec<GroupElement>> {
    Ok(closure_mod(rep, n, cap)?
        .into_iter()
        .map(|(word, m)| GroupElement {
            word,
            matrix: m.to_exact(),
        })
        .collect())
}

fn closure_mod(rep: &InertiaRep, n: u64, cap: usize) -> Result<Vec<(String, ModMatrix)>> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("modulus must be at least 2, got {n}")));
    }
    if let CoefficientMode::Residue { n: base } = rep.mode {
        if base % n != 0 {
            return Err(Error::InvalidParameter(format!(
                "n = {n} does not divide the representation modulus {base}"
            )));
        }
    }
    let gens: Vec<(String, ModMatrix)> = rep
        .generators()
        .into_iter()
        .map(|(name, g)| {
            g.inverse_mod(n)?;
            Ok((name, ModMatrix::from_exact(g, n)))
        })
        .collect::<Result<_>>()?;
    let identity = ModMatrix::identity(rep.dim, n);
    let mut seen = BTreeMap::new();
    seen.insert(identity.clone(), ());
    let mut elements = alloc::vec![("e".to_string(), identity)];
    let mut queue = VecDeque::from([0usize]);
    while let Some(idx) = queue.pop_front() {
        for (name, g) in &gens {
            let next = elements[idx].1.mul(g);
            if seen.contains_key(&next) {
                continue;
            }
            if elements.len() == cap {
                return Err(Error::ClosureCap { cap });
            }
            let word = if idx == 0 {
                name.clone()
            } else {
                format!("{}*{name}", elements[idx].0)
            };
            seen.insert(next.clone(), ());
            elements.push((word, next));
            queue.push_back(elements.len() - 1);
        }
    }
    Ok(elements)
}

/// One per-element test record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Evidence {
    pub word: String,
    pub test: String,
    pub pass: bool,
}

/// Outcome of a criterion together with its per-element records.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Checked {
    pub holds: bool,
    pub evidence: Vec<Evidence>,
}

/// `(g - I)^2 = 0` for every checked word.
pub fn check_tate_criterion(rep: &InertiaRep, word_bound: u32) -> Result<Checked> {
    rep.require_integer("the level-2 unipotency test")?;
    let mut evidence = Vec::new();
    for (word, g) in rep.checked_words(word_bound) {
        let shifted = g.add_scalar(-1);
        let pass = (&shifted * &shifted).is_zero();
        evidence.push(Evidence {
            word,
            test: "(g-1)^2 = 0".to_string(),
            pass,
        });
    }
    Ok(Checked {
        holds: evidence.iter().all(|e| e.pass),
        evidence,
    })
}

/// Every checked word is unipotent or minus a unipotent.
pub fn check_pm_unipotent(rep: &InertiaRep, word_bound: u32) -> Result<Checked> {
    rep.require_integer("the signed unipotency test")?;
    let mut evidence = Vec::new();
    for (word, g) in rep.checked_words(word_bound) {
        let (test, pass) = if is_unipotent(&g) {
            ("g unipotent", true)
        } else if is_neg_unipotent(&g) {
            ("-g unipotent", true)
        } else {
            ("neither g nor -g unipotent", false)
        };
        evidence.push(Evidence {
            word,
            test: test.to_string(),
            pass,
        });
    }
    Ok(Checked {
        holds: evidence.iter().all(|e| e.pass),
        evidence,
    })
}

/// The generators have no common nonzero fixed vector over `Q`.
///
/// The stacked matrix of all `g - I` is ranked exactly over `Q` and again
/// over `F_ℓ`. Full rank mod `ℓ` forces full rank over `Q`, so the two
/// answers can only disagree in one direction.
pub fn fixed_space_trivial(rep: &InertiaRep, ell: u64) -> Result<Checked> {
    rep.require_integer("the fixed-space test")?;
    if !arith::is_prime(ell) {
        return Err(Error::NotPrime(ell));
    }
    let gens = rep.generators();
    let words: Vec<&str> = gens.iter().map(|(name, _)| name.as_str()).collect();
    let word = words.join(",");
    let shifted: Vec<ExactMatrix> = gens.iter().map(|(_, g)| g.add_scalar(-1)).collect();
    let stacked: Vec<BigInt> = shifted.iter().flat_map(|s| s.entries().iter().cloned()).collect();
    let rows = shifted.len() * rep.dim;
    let trivial_q = rank_over_rationals(rows, rep.dim, &stacked) == rep.dim;
    let blocks: Vec<ModMatrix> = shifted.iter().map(|s| ModMatrix::from_exact(s, ell)).collect();
    let trivial_mod = ModMatrix::vstack(&blocks).rank()? == rep.dim;
    if trivial_mod && !trivial_q {
        return Err(Error::Internal(format!(
            "common fixed space is zero mod {ell} but nonzero over Q"
        )));
    }
    Ok(Checked {
        holds: trivial_q,
        evidence: alloc::vec![
            Evidence {
                word: word.clone(),
                test: "no common fixed vector over Q".to_string(),
                pass: trivial_q,
            },
            Evidence {
                word,
                test: format!("no common fixed vector mod {ell}"),
                pass: trivial_mod,
            },
        ],
    })
}

/// For every element `σ` of the closure mod `n`, with `M` the action of `σ`
/// on `H^k`: `(M - I)^r ≡ 0 (mod n)`, or with `signed`, alternatively
/// `(M + I)^r ≡ 0 (mod n)`.
pub fn check_cohomology_criterion(
    rep: &InertiaRep,
    k: usize,
    r: u64,
    n: u64,
    signed: bool,
    cap: usize,
) -> Result<Checked> {
    if k == 0 || k >= rep.dim {
        return Err(Error::InvalidParameter(format!(
            "k must satisfy 1 <= k < dim = {}, got {k}",
            rep.dim
        )));
    }
    let mut evidence = Vec::new();
    for (word, sigma) in closure_mod(rep, n, cap)? {
        let action = ModMatrix::from_exact(&cohomology_action_mod(&sigma.to_exact(), k, n)?, n);
        let (test, pass) = if action.add_scalar(-1).pow(r).is_zero() {
            (format!("(M-1)^{r} = 0 mod {n}"), true)
        } else if signed && action.add_scalar(1).pow(r).is_zero() {
            (format!("(M+1)^{r} = 0 mod {n}"), true)
        } else if signed {
            (format!("(M-1)^{r} and (M+1)^{r} nonzero mod {n}"), false)
        } else {
            (format!("(M-1)^{r} nonzero mod {n}"), false)
        };
        evidence.push(Evidence { word, test, pass });
    }
    Ok(Checked {
        holds: evidence.iter().all(|e| e.pass),
        evidence,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Verdict {
    SemistablePattern,
    BrieflyUnstablePattern,
    NotSemistablePattern,
    Indeterminate,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::SemistablePattern => "SemistablePattern",
            Verdict::BrieflyUnstablePattern => "BrieflyUnstablePattern",
            Verdict::NotSemistablePattern => "NotSemistablePattern",
            Verdict::Indeterminate => "Indeterminate",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub verdict: Verdict,
    pub reason: String,
    pub theorem: String,
    pub evidence: Vec<Evidence>,
    pub caveats: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassifyOptions {
    pub cap: usize,
    pub word_bound: u32,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        Self {
            cap: DEFAULT_CLOSURE_CAP,
            word_bound: DEFAULT_WORD_BOUND,
        }
    }
}

const THM_EXCEPTIONAL: &str = "exceptional modulus";
const THM_ODD: &str = "mod-n unipotency criterion, odd degree";
const THM_ODD_SIGNED: &str = "signed mod-n criterion, odd degree";
const THM_EVEN: &str = "mod-n unipotency criterion, even degree";
const THM_ONE_SIDED: &str = "one-sided mod-n criterion, r <= k";

/// Verdict from the integer-level tests alone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerVerdict {
    pub verdict: Verdict,
    pub evidence: Vec<Evidence>,
}

/// Level-2 test first, then the signed test together with a trivial fixed
/// space; anything else is not semistable.
pub fn integer_verdict(rep: &InertiaRep, word_bound: u32) -> Result<IntegerVerdict> {
    let ell = rep.require_integer("the integer verdict")?;
    let tate = check_tate_criterion(rep, word_bound)?;
    let mut evidence = tate.evidence;
    if tate.holds {
        return Ok(IntegerVerdict {
            verdict: Verdict::SemistablePattern,
            evidence,
        });
    }
    let pm = check_pm_unipotent(rep, word_bound)?;
    let fixed = fixed_space_trivial(rep, ell)?;
    evidence.extend(pm.evidence);
    evidence.extend(fixed.evidence);
    let verdict = if pm.holds && fixed.holds {
        Verdict::BrieflyUnstablePattern
    } else {
        Verdict::NotSemistablePattern
    };
    Ok(IntegerVerdict { verdict, evidence })
}

/// Caveats attached to every classification of `rep`.
pub fn caveats(rep: &InertiaRep, opts: &ClassifyOptions) -> Vec<String> {
    let mut out = Vec::new();
    if rep.form.is_none() {
        out.push(
            "no symplectic form declared: the reduction to the scalars 1 and -1 is only \
             justified for symplectic operators"
                .to_string(),
        );
    }
    if let CoefficientMode::Integer { .. } = rep.mode {
        out.push(format!(
            "integer-level tests run over t^i and wj*t^i for i <= {}, modeling inertia as a \
             cyclic tame quotient over a finite wild part",
            opts.word_bound
        ));
    }
    out.push(
        "residue characteristic 2 is not modeled: the henselian hypothesis needed there has \
         no matrix-level counterpart"
            .to_string(),
    );
    out
}

/// Runs the decision table for the action on `H^k` with exponent `r` and
/// modulus `n`.
///
/// When `2 <= k <= dim - 2` and `k < r` the exceptional set is `N'(r)`,
/// otherwise `N(r)`; a modulus in the exceptional set is `Indeterminate`.
/// For `r <= k` only the one-sided implication (criterion passes, so the
/// pattern is semistable or briefly unstable) is available.
pub fn classify(rep: &InertiaRep, k: usize, r: u64, n: u64, opts: &ClassifyOptions) -> Result<Classification> {
    let dim = rep.dim;
    if k == 0 || k >= dim {
        return Err(Error::InvalidParameter(format!(
            "k must satisfy 1 <= k < dim = {dim}, got {k}"
        )));
    }
    if r == 0 {
        return Err(Error::InvalidParameter("r must be at least 1".to_string()));
    }
    if n < 2 {
        return Err(Error::InvalidParameter(format!("n must be at least 2, got {n}")));
    }
    let caveats = caveats(rep, opts);
    let two_sided = (k as u64) < r;
    let window = two_sided && k >= 2 && k + 2 <= dim;
    let (set_name, exceptional) = if window {
        ("N'", n_prime_set(r)?)
    } else {
        ("N", n_set(r)?)
    };
    let done = |verdict, theorem: &str, reason: String, evidence| Classification {
        verdict,
        reason,
        theorem: theorem.to_string(),
        evidence,
        caveats: caveats.clone(),
    };
    if exceptional.contains(n) {
        return Ok(done(
            Verdict::Indeterminate,
            THM_EXCEPTIONAL,
            format!(
                "n = {n} lies in {set_name}({r}) = {exceptional}; a twist by a nontrivial root of \
                 unity can pass the mod-{n} test, so the test decides nothing"
            ),
            Vec::new(),
        ));
    }
    let main_theorem = match (two_sided, k % 2 == 1) {
        (false, _) => THM_ONE_SIDED,
        (true, true) => THM_ODD,
        (true, false) => THM_EVEN,
    };
    let unsigned = check_cohomology_criterion(rep, k, r, n, false, opts.cap)?;
    let mut evidence = unsigned.evidence;

    if unsigned.holds {
        if k % 2 == 1 {
            return Ok(done(
                Verdict::SemistablePattern,
                main_theorem,
                format!("every element satisfies (M-1)^{r} = 0 mod {n} on H^{k}, k odd"),
                evidence,
            ));
        }
        let (verdict, reason) = disambiguate(rep, n, opts, &mut evidence)?;
        return Ok(done(verdict, main_theorem, reason, evidence));
    }

    if k.is_multiple_of(2) {
        return Ok(if two_sided {
            done(
                Verdict::NotSemistablePattern,
                main_theorem,
                format!("some element has (M-1)^{r} nonzero mod {n} on H^{k}, k even"),
                evidence,
            )
        } else {
            done(
                Verdict::Indeterminate,
                main_theorem,
                format!("the mod-{n} test fails, which decides nothing when r = {r} <= k = {k}"),
                evidence,
            )
        });
    }

    let signed = check_cohomology_criterion(rep, k, r, n, true, opts.cap)?;
    evidence.extend(signed.evidence);
    if !signed.holds {
        return Ok(if two_sided {
            done(
                Verdict::NotSemistablePattern,
                THM_ODD_SIGNED,
                format!("some element has both (M-1)^{r} and (M+1)^{r} nonzero mod {n} on H^{k}"),
                evidence,
            )
        } else {
            done(
                Verdict::Indeterminate,
                THM_ONE_SIDED,
                format!("the signed mod-{n} test fails, which decides nothing when r = {r} <= k = {k}"),
                evidence,
            )
        });
    }
    if !two_sided {
        let (verdict, reason) = disambiguate(rep, n, opts, &mut evidence)?;
        return Ok(done(verdict, THM_ONE_SIDED, reason, evidence));
    }
    match rep.mode {
        CoefficientMode::Residue { .. } => Ok(done(
            Verdict::BrieflyUnstablePattern,
            THM_ODD_SIGNED,
            format!(
                "(M-1)^{r} fails but (M-1)^{r} or (M+1)^{r} vanishes mod {n} for every element on H^{k}"
            ),
            evidence,
        )),
        CoefficientMode::Integer { ell } => {
            let pm = check_pm_unipotent(rep, opts.word_bound)?;
            let fixed = fixed_space_trivial(rep, ell)?;
            evidence.extend(pm.evidence);
            evidence.extend(fixed.evidence);
            Ok(if pm.holds && fixed.holds {
                done(
                    Verdict::BrieflyUnstablePattern,
                    THM_ODD_SIGNED,
                    format!(
                        "the signed mod-{n} test passes on H^{k}; every checked word is unipotent \
                         or minus a unipotent and there is no common fixed vector"
                    ),
                    evidence,
                )
            } else {
                done(
                    Verdict::NotSemistablePattern,
                    THM_ODD_SIGNED,
                    format!(
                        "the signed mod-{n} test passes on H^{k}, but the integer-level \
                         confirmation fails, and the integer-level result takes precedence"
                    ),
                    evidence,
                )
            })
        }
    }
}

/// Separates the semistable and briefly unstable patterns once the mod-`n`
/// test has passed.
fn disambiguate(
    rep: &InertiaRep,
    n: u64,
    opts: &ClassifyOptions,
    evidence: &mut Vec<Evidence>,
) -> Result<(Verdict, String)> {
    match rep.mode {
        CoefficientMode::Integer { ell } => {
            let tate = check_tate_criterion(rep, opts.word_bound)?;
            evidence.extend(tate.evidence);
            if tate.holds {
                return Ok((
                    Verdict::SemistablePattern,
                    format!("the mod-{n} test passes and every checked word satisfies (g-1)^2 = 0"),
                ));
            }
            let pm = check_pm_unipotent(rep, opts.word_bound)?;
            let fixed = fixed_space_trivial(rep, ell)?;
            evidence.extend(pm.evidence);
            evidence.extend(fixed.evidence);
            Ok(if pm.holds && fixed.holds {
                (
                    Verdict::BrieflyUnstablePattern,
                    format!(
                        "the mod-{n} test passes; (g-1)^2 = 0 fails, but every checked word is \
                         unipotent or minus a unipotent and there is no common fixed vector"
                    ),
                )
            } else {
                (
                    Verdict::NotSemistablePattern,
                    format!(
                        "the mod-{n} test passes, but neither the level-2 test nor the signed \
                         unipotency test holds at the integer level, and the integer-level result \
                         takes precedence"
                    ),
                )
            })
        }
        CoefficientMode::Residue { .. } => {
            let small = n_set(2)?;
            if small.contains(n) {
                return Ok((
                    Verdict::Indeterminate,
                    format!(
                        "the mod-{n} test passes but cannot separate the semistable and briefly \
                         unstable patterns: the H^1 test needs n outside N(2) = {small}"
                    ),
                ));
            }
            let h1 = check_cohomology_criterion(rep, 1, 2, n, false, opts.cap)?;
            evidence.extend(h1.evidence);
            Ok(if h1.holds {
                (
                    Verdict::SemistablePattern,
                    format!("the mod-{n} test passes and (M-1)^2 = 0 mod {n} on H^1"),
                )
            } else {
                (
                    Verdict::BrieflyUnstablePattern,
                    format!("the mod-{n} test passes but (M-1)^2 is nonzero mod {n} on H^1"),
                )
            })
        }
    }
}
