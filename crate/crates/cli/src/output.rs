//! Plain-text, CSV, and markdown rendering of reports, sweeps, and charts.

use pretzel_core::classify::{Chart, ChartClass, KnotReport};
use pretzel_core::freefactor::{FfOutcome, Witness};

fn verdict_word<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_value(v)
        .ok()
        .and_then(|x| x.as_str().map(str::to_string))
        .unwrap_or_default()
}

fn describe_side(v: &pretzel_core::freefactor::FfVerdict) -> String {
    let mut s = match v.outcome {
        FfOutcome::FreeFactor => "free factor".to_string(),
        FfOutcome::NotFreeFactor => "not a free factor".to_string(),
        FfOutcome::Unknown => "undecided".to_string(),
    };
    match &v.witness {
        Some(Witness::BasisExtension { removed }) => {
            s += &format!(" (drop {{{}}})", removed.join(", "));
        }
        Some(Witness::UnitDeterminant) => s += " (trivial quotient)",
        Some(Witness::NonPrimitiveElement { element, proper_power, .. }) => {
            let kind = if *proper_power { "proper power" } else { "non-primitive" };
            s += &format!(" ({kind} {element})");
        }
        None => {}
    }
    if !v.preprocessing.is_empty() {
        s += &format!(" [after {} preprocessing step(s)]", v.preprocessing.len());
    }
    s
}

pub fn report_text(r: &KnotReport) -> String {
    let mut out = String::new();
    let mut line = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };
    line(format!("knot:            {} (input {})", r.knot, r.input));
    line(format!("family:          {} (genus {})", r.family, r.genus));
    line(format!("N = det S+:      {}", r.n));
    line(format!("Delta coeffs:    [{}]", r.delta.join(", ")));
    line(format!("rhf:             {}", r.rhf));
    line(format!(
        "kernel index:    {}",
        r.index.clone().unwrap_or_else(|| "infinite".into())
    ));
    line(format!("H side:          {}", describe_side(&r.ffp_h)));
    line(format!("K side:          {}", describe_side(&r.ffp_k)));
    line(format!("free factor:     {}", verdict_word(&r.ffp_overall)));
    line(format!("rtfn:            {} ({})", verdict_word(&r.rtfn), r.rtfn_reason));
    line(format!(
        "bi-orderable:    {} ({})",
        verdict_word(&r.biorder),
        r.biorder_reason
    ));
    line(format!("sigma2 left-ord: {}", verdict_word(&r.sigma2_lo)));
    line(format!("time:            {} ms", r.timing_ms));
    out
}

pub fn report_json(r: &KnotReport) -> String {
    serde_json::to_string_pretty(r).expect("report serializes")
}

const SWEEP_HEADER: [&str; 7] = ["q", "r", "n", "ffp", "rtfn", "biorder", "sigma2_lo"];

fn sweep_row(r: &KnotReport, q: i64, rr: i64) -> [String; 7] {
    [
        q.to_string(),
        rr.to_string(),
        r.n.clone(),
        verdict_word(&r.ffp_overall),
        verdict_word(&r.rtfn),
        verdict_word(&r.biorder),
        verdict_word(&r.sigma2_lo),
    ]
}

pub fn sweep_csv(rows: &[(i64, i64, KnotReport)]) -> String {
    let mut out = SWEEP_HEADER.join(",");
    out.push('\n');
    for (q, r, rep) in rows {
        out.push_str(&sweep_row(rep, *q, *r).join(","));
        out.push('\n');
    }
    out
}

pub fn sweep_markdown(rows: &[(i64, i64, KnotReport)]) -> String {
    let mut out = format!("| {} |\n", SWEEP_HEADER.join(" | "));
    out += &format!("|{}\n", "---|".repeat(SWEEP_HEADER.len()));
    for (q, r, rep) in rows {
        out += &format!("| {} |\n", sweep_row(rep, *q, *r).join(" | "));
    }
    out
}

pub fn sweep_json(rows: &[(i64, i64, KnotReport)]) -> String {
    let reports: Vec<&KnotReport> = rows.iter().map(|(_, _, r)| r).collect();
    serde_json::to_string_pretty(&reports).expect("reports serialize")
}

fn class_mark(c: ChartClass) -> &'static str {
    match c {
        ChartClass::Satisfies => "+",
        ChartClass::Fails => "-",
        ChartClass::TrivialDelta => ".",
        ChartClass::Unknown => "?",
    }
}

pub fn chart_csv(chart: &Chart) -> String {
    let mut out = String::from("q,r,n,ffp_class\n");
    for c in &chart.cells {
        out += &format!("{},{},{},{}\n", c.q, c.r, c.n, verdict_word(&c.class));
    }
    out
}

/// Markdown grid: rows are q, columns are r, each cell `N` marked with the
/// free-factor class (+ satisfied, - failed, . trivial, ? unknown).
pub fn chart_markdown(chart: &Chart) -> String {
    let qs: Vec<i64> = {
        let mut v: Vec<i64> = chart.cells.iter().map(|c| c.q).collect();
        v.dedup();
        v
    };
    let rmax = chart.cells.iter().map(|c| c.r).max().unwrap_or(0);
    let rmin = chart.cells.iter().map(|c| c.r).min().unwrap_or(0);
    let mut out = format!("P({},Q,R) free factor classes\n\n", 2 * chart.p + 1);
    out += "| Q\\R |";
    for r in rmin..=rmax {
        out += &format!(" {} |", 2 * r + 1);
    }
    out += "\n|";
    out += &"---|".repeat((rmax - rmin + 2) as usize);
    out += "\n";
    for q in qs {
        out += &format!("| **{}** |", 2 * q + 1);
        for r in rmin..=rmax {
            match chart.cells.iter().find(|c| c.q == q && c.r == r) {
                Some(c) => out += &format!(" {}{} |", c.n, class_mark(c.class)),
                None => out += "  |",
            }
        }
        out += "\n";
    }
    out
}
