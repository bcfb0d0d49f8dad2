use std::fmt::Write as _;
use std::path::Path;
use std::time::Instant;

use monodromy_core::cyclotomic::{groupring_bound, root_minus_one_membership, sharpness_scan, MAX_SET_R};
use monodromy_core::inertia::{classify, ClassifyOptions};
use monodromy_core::verify::{self, SuiteReport, SUITE_NAMES};
use monodromy_core::{n_prime_set, n_set};

use crate::format::{AggregateReport, ClassificationReport, ClassifyParams, NrReport, RepFile, SuiteReportJson};
use crate::{max_dim, to_json, CliError, Format, Output};

pub fn nr(r: u64, format: Format) -> Result<Output, CliError> {
    if !(1..=MAX_SET_R).contains(&r) {
        return Err(CliError::Input(format!("r must satisfy 1 <= r <= {MAX_SET_R}, got {r}")));
    }
    let full = n_set(r)?;
    let narrow = n_prime_set(r)?;
    let diff = full.difference(&narrow);
    Ok(Output::ok(match format {
        Format::Text => format!("N({r}) = {full}\nN'({r}) = {narrow}\nN({r}) \\ N'({r}) = {diff}\n"),
        Format::Json => to_json(&NrReport {
            r,
            n: full.as_slice().to_vec(),
            n_prime: narrow.as_slice().to_vec(),
            difference: diff.as_slice().to_vec(),
        }),
    }))
}

pub fn membership(ell: u64, s: u32, r: u64, n: u64, format: Format) -> Result<Output, CliError> {
    let member = root_minus_one_membership(ell, s, r, n)?;
    Ok(Output::ok(match format {
        Format::Text => format!(
            "(zeta_{ell}^{s} - 1)^{r} {} {n}*Z[zeta]\n",
            if member { "is in" } else { "is not in" }
        ),
        Format::Json => to_json(&serde_json::json!({
            "ell": ell, "s": s, "r": r, "n": n, "member": member,
        })),
    }))
}

pub fn scan(r: u64, n: u64, s_max: u32, degree_cap: u64, format: Format) -> Result<Output, CliError> {
    if n < 2 {
        return Err(CliError::Input(format!("n must be at least 2, got {n}")));
    }
    let witness = sharpness_scan(r, n, s_max, degree_cap)?;
    Ok(Output::ok(match format {
        Format::Text => match witness {
            Some((ell, s)) => format!("witness: zeta of order {ell}^{s} has (zeta - 1)^{r} in {n}*Z-bar\n"),
            None => format!("no root of unity of order ell^s (s <= {s_max}, degree <= {degree_cap}) works for r = {r}, n = {n}\n"),
        },
        Format::Json => to_json(&serde_json::json!({
            "r": r, "n": n, "s_max": s_max, "degree_cap": degree_cap,
            "witness": witness.map(|(ell, s)| serde_json::json!({"ell": ell, "s": s})),
        })),
    }))
}

pub fn groupring(ell: u64, s: u32, m: u32, format: Format) -> Result<Output, CliError> {
    let bound = groupring_bound(ell, s, m)?;
    Ok(Output::ok(match format {
        Format::Text => format!("(zeta_{ell}^{s} - 1)^r lies in {ell}^{m}*Z[zeta] for all r >= {bound}\n"),
        Format::Json => to_json(&serde_json::json!({"ell": ell, "s": s, "m": m, "bound": bound})),
    }))
}

pub struct ClassifyArgs<'a> {
    pub file: &'a Path,
    pub k: usize,
    pub r: u64,
    pub n: u64,
    pub cap: usize,
    pub word_bound: u32,
}

pub fn load_rep(path: &Path) -> Result<monodromy_core::InertiaRep, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    let file: RepFile = serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("malformed representation file {}: {e}", path.display())))?;
    let rep = file.to_rep()?;
    rep.check_dim_cap(max_dim()?)?;
    Ok(rep)
}

pub fn classify_file(args: &ClassifyArgs<'_>, format: Format) -> Result<Output, CliError> {
    if args.r < 1 || args.r > MAX_SET_R {
        return Err(CliError::Input(format!("r must satisfy 1 <= r <= {MAX_SET_R}, got {}", args.r)));
    }
    if args.n < 2 {
        return Err(CliError::Input(format!("n must be at least 2, got {}", args.n)));
    }
    if args.cap == 0 {
        return Err(CliError::Input("cap must be positive".into()));
    }
    let rep = load_rep(args.file)?;
    if args.k < 1 || args.k >= rep.dim() {
        return Err(CliError::Input(format!("k must satisfy 1 <= k < dim = {}, got {}", rep.dim(), args.k)));
    }
    let opts = ClassifyOptions {
        cap: args.cap,
        word_bound: args.word_bound,
    };
    let c = classify(&rep, args.k, args.r, args.n, &opts)?;
    let params = ClassifyParams {
        label: rep.label().to_string(),
        k: args.k,
        r: args.r,
        n: args.n,
    };
    let report = ClassificationReport::new(&c, params);
    Ok(Output::ok(match format {
        Format::Json => to_json(&report),
        Format::Text => {
            let failing = report.evidence.iter().filter(|e| !e.pass).count();
            let mut s = format!(
                "verdict: {}\ntheorem: {}\nreason: {}\nevidence: {} records, {failing} failing\n",
                report.verdict,
                report.theorem,
                report.reason,
                report.evidence.len()
            );
            for e in report.evidence.iter().filter(|e| !e.pass).take(10) {
                let _ = writeln!(s, "  fail {}: {}", e.word, e.test);
            }
            for c in &report.caveats {
                let _ = writeln!(s, "caveat: {c}");
            }
            s
        }
    }))
}

/// Runs one suite or `all`; wall times go to `timings` rather than into the
/// report body.
pub fn verify_suites(
    suite: &str,
    seed: u64,
    format: Format,
    timings: &mut Vec<(String, f64)>,
) -> Result<Output, CliError> {
    let names: Vec<&str> = if suite == "all" {
        SUITE_NAMES.to_vec()
    } else if SUITE_NAMES.contains(&suite) {
        vec![suite]
    } else {
        return Err(CliError::Input(format!(
            "unknown suite '{suite}'; expected all or one of {}",
            SUITE_NAMES.join(", ")
        )));
    };
    let mut reports: Vec<SuiteReport> = Vec::new();
    for name in names {
        let start = Instant::now();
        reports.push(verify::run_suite(name, seed)?);
        timings.push((name.to_string(), start.elapsed().as_secs_f64()));
    }
    let ok = reports.iter().all(SuiteReport::ok);
    let body = match format {
        Format::Json if suite == "all" => to_json(&AggregateReport {
            seed,
            cases: reports.iter().map(|r| r.cases).sum(),
            passed: reports.iter().map(|r| r.passed).sum(),
            ok,
            suites: reports.iter().map(SuiteReportJson::from).collect(),
        }),
        Format::Json => to_json(&SuiteReportJson::from(&reports[0])),
        Format::Text => {
            let mut s = String::new();
            for (r, (_, secs)) in reports.iter().zip(timings.iter()) {
                let _ = writeln!(
                    s,
                    "{:<22} {:>5}/{:<5} {}  {secs:.2}s",
                    r.suite,
                    r.passed,
                    r.cases,
                    if r.ok() { "ok" } else { "FAILED" }
                );
                for f in &r.failures {
                    let _ = writeln!(s, "  {}: {}\n    input: {}", f.case, f.detail, f.input);
                }
                for n in &r.notes {
                    let _ = writeln!(s, "  note: {n}");
                }
            }
            s
        }
    };
    Ok(Output {
        body,
        exit_code: if ok { 0 } else { 4 },
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Semistable,
    BrieflyUnstable,
    TwistedProduct,
    SignTwist,
}

pub struct GenArgs {
    pub family: Family,
    pub d: usize,
    pub seed: u64,
    pub ell: u64,
    pub a: usize,
}

pub fn generate(args: &GenArgs) -> Result<Output, CliError> {
    let rep = match args.family {
        Family::Semistable => verify::gen_semistable_family(args.d, args.seed)?,
        Family::BrieflyUnstable => verify::gen_briefly_unstable_family(args.d, args.seed)?,
        Family::TwistedProduct => {
            if args.ell == 2 {
                return Err(CliError::Input(
                    "ell must be odd for the companion construction; for ell = 2 use the \
                     sign-twist family (I ⊕ -I)"
                        .into(),
                ));
            }
            verify::gen_twisted_product(args.ell, args.a)?
        }
        Family::SignTwist => verify::gen_twisted_product_even(args.a)?,
    };
    rep.check_dim_cap(max_dim()?)?;
    Ok(Output::ok(to_json(&RepFile::from_rep(&rep))))
}
