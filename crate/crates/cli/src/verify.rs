//! Runs the fixture catalogue against the analyzer and reports mismatches,
//! including the byte-pinned rewriting and Hermite form fixtures.

use crate::fixtures::Fixture;
use pretzel_core::classify::{analyze, KnotReport};
use pretzel_core::coset::SchreierSystem;
use pretzel_core::freefactor::Budget;
use pretzel_core::intmat::IntMatrix;
use pretzel_core::knot::PretzelKnot;
use pretzel_core::word::{Alphabet, Word};
use rayon::prelude::*;

pub struct CaseResult {
    pub fixture: Fixture,
    pub mismatches: Vec<String>,
    pub error: Option<String>,
}

impl CaseResult {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.error.is_none()
    }
}

fn verdict_word<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_value(v)
        .ok()
        .and_then(|x| x.as_str().map(str::to_string))
        .unwrap_or_default()
}

/// Field-by-field comparison; returns one message per mismatch.
pub fn compare_report(fixture: &Fixture, report: &KnotReport) -> Vec<String> {
    let mut out = Vec::new();
    let mut check = |field: &str, expected: &Option<String>, got: String| {
        if let Some(e) = expected {
            if e != &got {
                out.push(format!("{field}: expected {e}, got {got}"));
            }
        }
    };
    check("ffp", &fixture.expected.ffp, verdict_word(&report.ffp_overall));
    check("rtfn", &fixture.expected.rtfn, verdict_word(&report.rtfn));
    check("biorder", &fixture.expected.biorder, verdict_word(&report.biorder));
    check("sigma2_lo", &fixture.expected.sigma2_lo, verdict_word(&report.sigma2_lo));
    out
}

/// Analyzes every fixture knot and returns the raw reports.
pub fn run_all_reports(
    fixtures: &[Fixture],
    budget: &Budget,
    jobs: usize,
) -> Vec<(Fixture, Result<KnotReport, String>)> {
    let one = |f: &Fixture| -> (Fixture, Result<KnotReport, String>) {
        let report = PretzelKnot::parse(&f.knot)
            .map_err(|e| e.to_string())
            .and_then(|k| analyze(&k, budget).map_err(|e| e.to_string()));
        (f.clone(), report)
    };
    if jobs <= 1 {
        fixtures.iter().map(one).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool");
        pool.install(|| fixtures.par_iter().map(one).collect())
    }
}

pub fn run_case(fixture: &Fixture, budget: &Budget) -> CaseResult {
    let knot = match PretzelKnot::parse(&fixture.knot) {
        Ok(k) => k,
        Err(e) => {
            return CaseResult {
                fixture: fixture.clone(),
                mismatches: Vec::new(),
                error: Some(e.to_string()),
            }
        }
    };
    match analyze(&knot, budget) {
        Ok(report) => CaseResult {
            fixture: fixture.clone(),
            mismatches: compare_report(fixture, &report),
            error: None,
        },
        Err(e) => CaseResult {
            fixture: fixture.clone(),
            mismatches: Vec::new(),
            error: Some(e.to_string()),
        },
    }
}

pub fn run_all(fixtures: &[Fixture], budget: &Budget, jobs: usize) -> Vec<CaseResult> {
    if jobs <= 1 {
        fixtures.iter().map(|f| run_case(f, budget)).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool");
        pool.install(|| fixtures.par_iter().map(|f| run_case(f, budget)).collect())
    }
}

/// Byte-pinned fixtures: the two rewriting strings of P(-5,7,9) and the two
/// Hermite forms they come from.
pub fn pinned_fixtures() -> Result<(), String> {
    let m = IntMatrix::from_i64(&[&[1, -4], &[-3, 7]]);
    let h = m.hermite_form();
    if h != IntMatrix::from_i64(&[&[1, 1], &[0, 5]]) {
        return Err(format!("hermite [[1,-4],[-3,7]] gave {h}"));
    }
    let m = IntMatrix::from_i64(&[&[1, -4], &[-3, 8]]);
    let h = m.hermite_form();
    if h != IntMatrix::from_i64(&[&[1, 0], &[0, 4]]) {
        return Err(format!("hermite [[1,-4],[-3,8]] gave {h}"));
    }

    let knot = PretzelKnot::parse("P(-5,7,9)").map_err(|e| e.to_string())?;
    let gens = knot.boundary_generators().map_err(|e| e.to_string())?;
    let rewritten = rewrite_side(&gens.alphabet, &gens.h).map_err(|e| e.to_string())?;
    let expect = ["x4^-1 x3 x2 x1 x0^-2", "x4 x1^-1 x2^-1 x3^-1 x4"];
    for (got, want) in rewritten.iter().zip(expect) {
        if got.to_string() != want {
            return Err(format!("rewriting mismatch: expected `{want}`, got `{got}`"));
        }
    }
    Ok(())
}

fn rewrite_side(
    alphabet: &Alphabet,
    side: &[Word],
) -> Result<Vec<Word>, pretzel_core::coset::CosetError> {
    let stack = IntMatrix::from_rows(
        side.iter()
            .map(|g| g.abelianize().iter().map(|&v| num_bigint::BigInt::from(v)).collect())
            .collect(),
    )
    .expect("rectangular stack");
    let sys = SchreierSystem::build(alphabet, &stack)?;
    side.iter().map(|w| sys.rewrite(w)).collect()
}
