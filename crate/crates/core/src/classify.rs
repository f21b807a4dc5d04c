//! Assembles invariants into verdicts per knot: free factor property of the
//! standard Seifert surface, residual torsion-free nilpotence of the
//! commutator subgroup, bi-orderability of the knot group, and
//! left-orderability of the double branched cover's group.
//!
//! Routing rules:
//! * trivial Alexander polynomial disproves residual torsion-free nilpotence;
//! * a unit Seifert determinant forces the free factor property to fail
//!   (only the trefoil and figure-eight are fibered of genus one);
//! * otherwise both Schreier systems are built and the free-factor search
//!   runs on each side; a positive overall verdict plus a prime-power
//!   leading coefficient proves residual torsion-free nilpotence;
//! * root conditions are decided by the sign of the determinant (genus one)
//!   or the fixed factorization (chain family), never numerically.

use crate::freefactor::{self, Budget, FfOutcome, FfVerdict, Witness};
use crate::intmat::{bi, IntMatrix};
use crate::knot::{
    is_prime_power, AlexanderPolynomial, KnotError, KnotForm, PretzelKnot,
};
use crate::coset::SchreierSystem;
use crate::fold::SubgroupGraph;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AnalyzeError {
    #[error(transparent)]
    Knot(#[from] KnotError),
    #[error(transparent)]
    FreeFactor(#[from] freefactor::FfError),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FfpOverall {
    Satisfied,
    NotSatisfied,
    Unknown,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RtfnVerdict {
    Proved,
    Disproved,
    Unknown,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BiorderVerdict {
    BiOrderable,
    NotBiOrderable,
    Unknown,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Sigma2Verdict {
    Yes,
    No,
    Unknown,
}

/// Full invariant report for one knot. Numeric fields serialize as strings
/// so the JSON schema is independent of integer width.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KnotReport {
    pub input: String,
    pub knot: String,
    pub family: String,
    pub genus: usize,
    pub n: String,
    pub delta: Vec<String>,
    pub rhf: bool,
    /// kernel index measured on the folded graph of the Schreier basis;
    /// absent when not rationally homologically fibered
    pub index: Option<String>,
    pub ffp_h: FfVerdict,
    pub ffp_k: FfVerdict,
    pub ffp_overall: FfpOverall,
    pub rtfn: RtfnVerdict,
    pub rtfn_reason: String,
    pub biorder: BiorderVerdict,
    pub biorder_reason: String,
    pub sigma2_lo: Sigma2Verdict,
    pub timing_ms: u64,
}

fn unknown_verdict() -> FfVerdict {
    FfVerdict {
        outcome: FfOutcome::Unknown,
        witness: None,
        preprocessing: Vec::new(),
        candidates_tried: 0,
        ball_pairs_checked: 0,
    }
}

fn unit_determinant_verdict() -> FfVerdict {
    FfVerdict {
        outcome: FfOutcome::NotFreeFactor,
        witness: Some(Witness::UnitDeterminant),
        preprocessing: Vec::new(),
        candidates_tried: 0,
        ball_pairs_checked: 0,
    }
}

/// Free factor property of the standard Seifert surface: both push-off
/// subgroups must be free factors of their kernels.
pub fn ffp(
    knot: &PretzelKnot,
    budget: &Budget,
) -> Result<(FfVerdict, FfVerdict, FfpOverall), AnalyzeError> {
    let n = knot.seifert_det()?;
    if n.is_zero() {
        // infinite kernel index; the technique does not apply
        return Ok((unknown_verdict(), unknown_verdict(), FfpOverall::Unknown));
    }
    if n.abs() == bi(1) {
        // trivial quotient: a free factor here would make the knot fibered
        // of genus one, impossible outside the two-bridge cases
        return Ok((
            unit_determinant_verdict(),
            unit_determinant_verdict(),
            FfpOverall::NotSatisfied,
        ));
    }
    let gens = knot.boundary_generators()?;
    let h = freefactor::decide(&gens.h, budget)?;
    let k = freefactor::decide(&gens.k, budget)?;
    let overall = match (h.outcome, k.outcome) {
        (FfOutcome::FreeFactor, FfOutcome::FreeFactor) => FfpOverall::Satisfied,
        (FfOutcome::NotFreeFactor, _) | (_, FfOutcome::NotFreeFactor) => FfpOverall::NotSatisfied,
        _ => FfpOverall::Unknown,
    };
    Ok((h, k, overall))
}

/// Residual torsion-free nilpotence of the commutator subgroup. A failed
/// free factor property never disproves it; those cases stay unresolved.
pub fn rtfn(knot: &PretzelKnot, ffp_overall: FfpOverall) -> Result<(RtfnVerdict, String), AnalyzeError> {
    let (s_plus, _) = knot.seifert_matrices()?;
    let delta = AlexanderPolynomial::from_seifert(&s_plus);
    if delta.is_trivial() {
        return Ok((
            RtfnVerdict::Disproved,
            "trivial Alexander polynomial".to_string(),
        ));
    }
    let lead = delta.at_zero();
    match ffp_overall {
        FfpOverall::Satisfied => {
            if is_prime_power(&lead)? {
                Ok((
                    RtfnVerdict::Proved,
                    format!("free factor property holds and |Δ(0)| = {} is a prime power", lead.abs()),
                ))
            } else {
                Ok((
                    RtfnVerdict::Unknown,
                    format!("free factor property holds but |Δ(0)| = {} is not a prime power", lead.abs()),
                ))
            }
        }
        FfpOverall::NotSatisfied => Ok((
            RtfnVerdict::Unknown,
            "free factor property fails; the criterion is one-sided".to_string(),
        )),
        FfpOverall::Unknown => Ok((
            RtfnVerdict::Unknown,
            "free factor property undecided".to_string(),
        )),
    }
}

/// Bi-orderability of the knot group. Root conditions are decided exactly:
/// genus one has two positive real roots iff N < 0 and no real roots iff
/// N > 0; the chain family has roots {2, 1/2}.
pub fn biorder(
    knot: &PretzelKnot,
    rtfn: RtfnVerdict,
) -> Result<(BiorderVerdict, String), AnalyzeError> {
    match knot.form() {
        KnotForm::GenusOne(_) => {
            let n = knot.seifert_det()?;
            if n.is_positive() {
                Ok((
                    BiorderVerdict::NotBiOrderable,
                    "Δ has no positive real root (N > 0)".to_string(),
                ))
            } else if n.is_zero() {
                Ok((BiorderVerdict::Unknown, "trivial Alexander polynomial".to_string()))
            } else if rtfn == RtfnVerdict::Proved {
                Ok((
                    BiorderVerdict::BiOrderable,
                    "commutator subgroup residually torsion-free nilpotent and all roots of Δ real positive (N < 0)"
                        .to_string(),
                ))
            } else {
                Ok((
                    BiorderVerdict::Unknown,
                    "roots real positive but residual torsion-free nilpotence unresolved".to_string(),
                ))
            }
        }
        KnotForm::AlternatingSign(_) => {
            if rtfn == RtfnVerdict::Proved {
                Ok((
                    BiorderVerdict::BiOrderable,
                    "commutator subgroup residually torsion-free nilpotent and Δ = ±(t-2)^k (2t-1)^k has real positive roots"
                        .to_string(),
                ))
            } else {
                Ok((
                    BiorderVerdict::Unknown,
                    "residual torsion-free nilpotence unresolved".to_string(),
                ))
            }
        }
    }
}

/// Left-orderability of the double branched cover's fundamental group,
/// decided by the inequality -p <= q for genus-one knots with p < -1.
pub fn sigma2_lo(knot: &PretzelKnot) -> Sigma2Verdict {
    match knot.form() {
        KnotForm::GenusOne(g) if !g.two_bridge && g.p < -1 => {
            if -g.p <= g.q {
                Sigma2Verdict::Yes
            } else {
                Sigma2Verdict::No
            }
        }
        _ => Sigma2Verdict::Unknown,
    }
}

/// Folded-graph index of the H-side kernel: builds the Schreier basis of
/// the kernel of `F -> Z^n / S+` and folds its ambient definitions.
fn graph_index(knot: &PretzelKnot) -> Result<usize, AnalyzeError> {
    let gens = knot.boundary_generators()?;
    let stack = IntMatrix::from_rows(
        gens.h
            .iter()
            .map(|g| g.abelianize().iter().map(|&v| BigInt::from(v)).collect())
            .collect(),
    )
    .expect("exponent rows are rectangular");
    let sys = SchreierSystem::build(&gens.alphabet, &stack)
        .map_err(freefactor::FfError::Coset)?;
    let graph = SubgroupGraph::from_generators(&gens.alphabet, &sys.definitions());
    graph
        .index()
        .ok_or_else(|| AnalyzeError::Internal("kernel graph must be a finite cover".into()))
}

/// Kernel words must fold to the same index on both sides; the invariant
/// factor chains of the two Seifert matrices must agree.
fn cross_checks(knot: &PretzelKnot, report: &KnotReport) -> Result<(), AnalyzeError> {
    let (s_plus, s_minus) = knot.seifert_matrices()?;
    if s_plus.smith_invariants() != s_minus.smith_invariants() {
        return Err(AnalyzeError::Internal(
            "the two kernels present non-isomorphic quotients".into(),
        ));
    }
    let delta_zero = AlexanderPolynomial::from_seifert(&s_plus).at_zero().abs();
    if report.rhf {
        let index = report
            .index
            .as_ref()
            .ok_or_else(|| AnalyzeError::Internal("missing index for fibered knot".into()))?;
        if index != &delta_zero.to_string() {
            return Err(AnalyzeError::Internal(format!(
                "graph index {index} != |Δ(0)| = {delta_zero}"
            )));
        }
    }
    Ok(())
}

fn validate(
    report: &KnotReport,
    knot: &PretzelKnot,
    delta: &AlexanderPolynomial,
    n: &BigInt,
) -> Result<(), AnalyzeError> {
    let fail = |msg: String| Err(AnalyzeError::Internal(msg));
    if (report.rtfn == RtfnVerdict::Disproved) != delta.is_trivial() {
        return fail("rtfn = Disproved must coincide with Δ ≐ 1".into());
    }
    if report.rtfn == RtfnVerdict::Proved {
        if !report.rhf
            || report.ffp_overall != FfpOverall::Satisfied
            || !is_prime_power(&delta.at_zero()).unwrap_or(false)
        {
            return fail("rtfn = Proved needs rhf, FFP, and a prime-power |Δ(0)|".into());
        }
    }
    let genus_one = matches!(knot.form(), KnotForm::GenusOne(_));
    if report.biorder == BiorderVerdict::BiOrderable {
        let roots_ok = if genus_one { n.is_negative() } else { true };
        if report.rtfn != RtfnVerdict::Proved || !roots_ok {
            return fail("BiOrderable needs rtfn = Proved and real positive roots".into());
        }
    }
    if report.biorder == BiorderVerdict::NotBiOrderable {
        let no_positive_root = if genus_one { n.is_positive() } else { false };
        if !report.rhf || !no_positive_root {
            return fail("NotBiOrderable needs rhf and no positive real root".into());
        }
    }
    match (
        report.ffp_overall,
        report.ffp_h.outcome,
        report.ffp_k.outcome,
    ) {
        (FfpOverall::Satisfied, FfOutcome::FreeFactor, FfOutcome::FreeFactor) => {}
        (FfpOverall::NotSatisfied, h, k)
            if h == FfOutcome::NotFreeFactor || k == FfOutcome::NotFreeFactor => {}
        (FfpOverall::Unknown, h, k)
            if h != FfOutcome::NotFreeFactor && k != FfOutcome::NotFreeFactor => {}
        _ => return fail("ffp_overall inconsistent with the side verdicts".into()),
    }
    Ok(())
}

/// Analyzes one knot and returns the full report. Two-bridge knots are
/// declined (their parameters collapse the standard surface).
pub fn analyze(knot: &PretzelKnot, budget: &Budget) -> Result<KnotReport, AnalyzeError> {
    let start = std::time::Instant::now();
    if knot.is_two_bridge() {
        return Err(KnotError::TwoBridge(knot.original_params().to_vec()).into());
    }
    let (s_plus, _) = knot.seifert_matrices()?;
    let n = s_plus.determinant().expect("Seifert matrix is square");
    let delta = AlexanderPolynomial::from_seifert(&s_plus);
    let rhf = !n.is_zero();

    let (ffp_h, ffp_k, ffp_overall) = ffp(knot, budget)?;
    let (rtfn_verdict, rtfn_reason) = rtfn(knot, ffp_overall)?;
    let (biorder_verdict, biorder_reason) = biorder(knot, rtfn_verdict)?;
    let sigma2 = sigma2_lo(knot);
    let index = if rhf {
        Some(graph_index(knot)?.to_string())
    } else {
        None
    };

    let report = KnotReport {
        input: format!("P({})", knot.original_params().iter().map(i64::to_string).collect::<Vec<_>>().join(",")),
        knot: knot.name(),
        family: match knot.form() {
            KnotForm::GenusOne(_) => "genus_one".to_string(),
            KnotForm::AlternatingSign(_) => "alternating_sign".to_string(),
        },
        genus: knot.genus(),
        n: n.to_string(),
        delta: delta.coeffs().iter().map(BigInt::to_string).collect(),
        rhf,
        index,
        ffp_h,
        ffp_k,
        ffp_overall,
        rtfn: rtfn_verdict,
        rtfn_reason,
        biorder: biorder_verdict,
        biorder_reason,
        sigma2_lo: sigma2,
        timing_ms: start.elapsed().as_millis() as u64,
    };
    cross_checks(knot, &report)?;
    validate(&report, knot, &delta, &n)?;
    Ok(report)
}

/// Shading class of a chart cell.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ChartClass {
    Satisfies,
    Fails,
    TrivialDelta,
    Unknown,
}

#[derive(Clone, Debug, Serialize)]
pub struct ChartCell {
    pub q: i64,
    pub r: i64,
    pub n: String,
    pub class: ChartClass,
}

#[derive(Clone, Debug, Serialize)]
pub struct Chart {
    pub p: i64,
    pub cells: Vec<ChartCell>,
}

/// Grid of free-factor classes for `P(2p+1, 2q+1, 2r+1)` over `q <= r`.
pub fn chart(p: i64, qmax: i64, rmax: i64, budget: &Budget) -> Result<Chart, AnalyzeError> {
    let mut cells = Vec::new();
    for q in 1..=qmax {
        for r in q..=rmax {
            let knot = PretzelKnot::from_triple([2 * p + 1, 2 * q + 1, 2 * r + 1])?;
            let n = knot.seifert_det()?;
            let class = if n.is_zero() {
                ChartClass::TrivialDelta
            } else {
                let (_, _, overall) = ffp(&knot, budget)?;
                match overall {
                    FfpOverall::Satisfied => ChartClass::Satisfies,
                    FfpOverall::NotSatisfied => ChartClass::Fails,
                    FfpOverall::Unknown => ChartClass::Unknown,
                }
            };
            cells.push(ChartCell { q, r, n: n.to_string(), class });
        }
    }
    Ok(Chart { p, cells })
}
