//! JSON file formats. Big integers are always decimal strings.

use monodromy_core::inertia::{Classification, CoefficientMode, Evidence, InertiaRep};
use monodromy_core::verify::{Failure, SuiteReport};
use monodromy_core::ExactMatrix;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::CliError;

pub type MatrixJson = Vec<Vec<String>>;

pub fn matrix_to_json(m: &ExactMatrix) -> MatrixJson {
    m.rows().map(|row| row.iter().map(ToString::to_string).collect()).collect()
}

pub fn matrix_from_json(what: &str, rows: &MatrixJson) -> Result<ExactMatrix, CliError> {
    let parsed = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, s)| {
                    s.trim().parse::<BigInt>().map_err(|_| {
                        CliError::Input(format!("{what}: entry ({i}, {j}) = {s:?} is not a decimal integer"))
                    })
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    ExactMatrix::from_rows(parsed).map_err(|e| CliError::Input(format!("{what}: {e}")))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum ModeJson {
    Integer { ell: u64 },
    Residue { n: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepFile {
    pub dim: usize,
    pub mode: ModeJson,
    pub tame: MatrixJson,
    #[serde(default)]
    pub wild: Vec<MatrixJson>,
    #[serde(default)]
    pub form: Option<MatrixJson>,
    #[serde(default)]
    pub label: String,
}

impl RepFile {
    pub fn from_rep(rep: &InertiaRep) -> Self {
        Self {
            dim: rep.dim(),
            mode: match rep.mode() {
                CoefficientMode::Integer { ell } => ModeJson::Integer { ell },
                CoefficientMode::Residue { n } => ModeJson::Residue { n },
            },
            tame: matrix_to_json(rep.tame()),
            wild: rep.wild().iter().map(matrix_to_json).collect(),
            form: rep.form().map(matrix_to_json),
            label: rep.label().to_string(),
        }
    }

    pub fn to_rep(&self) -> Result<InertiaRep, CliError> {
        let tame = matrix_from_json("tame", &self.tame)?;
        if tame.dim() != self.dim {
            return Err(CliError::Input(format!(
                "declared dim {} but tame generator is {}x{}",
                self.dim,
                tame.dim(),
                tame.dim()
            )));
        }
        let wild = self
            .wild
            .iter()
            .enumerate()
            .map(|(i, w)| matrix_from_json(&format!("wild[{i}]"), w))
            .collect::<Result<Vec<_>, _>>()?;
        let form = self.form.as_ref().map(|f| matrix_from_json("form", f)).transpose()?;
        let mode = match self.mode {
            ModeJson::Integer { ell } => CoefficientMode::Integer { ell },
            ModeJson::Residue { n } => CoefficientMode::Residue { n },
        };
        InertiaRep::new(mode, tame, wild, form, self.label.clone()).map_err(CliError::from)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvidenceJson {
    pub word: String,
    pub test: String,
    pub pass: bool,
}

impl From<&Evidence> for EvidenceJson {
    fn from(e: &Evidence) -> Self {
        Self {
            word: e.word.clone(),
            test: e.test.clone(),
            pass: e.pass,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyParams {
    pub label: String,
    pub k: usize,
    pub r: u64,
    pub n: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub verdict: String,
    pub reason: String,
    pub theorem: String,
    pub evidence: Vec<EvidenceJson>,
    pub caveats: Vec<String>,
    pub parameters: ClassifyParams,
}

impl ClassificationReport {
    pub fn new(c: &Classification, parameters: ClassifyParams) -> Self {
        Self {
            verdict: c.verdict.to_string(),
            reason: c.reason.clone(),
            theorem: c.theorem.clone(),
            evidence: c.evidence.iter().map(EvidenceJson::from).collect(),
            caveats: c.caveats.clone(),
            parameters,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureJson {
    pub case: String,
    pub input: String,
    pub detail: String,
}

impl From<&Failure> for FailureJson {
    fn from(f: &Failure) -> Self {
        Self {
            case: f.case.clone(),
            input: f.input.clone(),
            detail: f.detail.clone(),
        }
    }
}

/// Wall time is kept out of this struct so that reports are reproducible
/// byte for byte.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReportJson {
    pub suite: String,
    pub seed: u64,
    pub cases: usize,
    pub passed: usize,
    pub ok: bool,
    pub failures: Vec<FailureJson>,
    pub notes: Vec<String>,
}

impl From<&SuiteReport> for SuiteReportJson {
    fn from(r: &SuiteReport) -> Self {
        Self {
            suite: r.suite.clone(),
            seed: r.seed,
            cases: r.cases,
            passed: r.passed,
            ok: r.ok(),
            failures: r.failures.iter().map(FailureJson::from).collect(),
            notes: r.notes.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AggregateReport {
    pub seed: u64,
    pub cases: usize,
    pub passed: usize,
    pub ok: bool,
    pub suites: Vec<SuiteReportJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NrReport {
    pub r: u64,
    pub n: Vec<u64>,
    pub n_prime: Vec<u64>,
    pub difference: Vec<u64>,
}
