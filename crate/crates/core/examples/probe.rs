//! Ad hoc sweep used while validating the decision ladder against the
//! regression families. Run: cargo run --release -p pretzel-core --example probe

use pretzel_core::classify::{analyze, FfpOverall};
use pretzel_core::freefactor::Budget;
use pretzel_core::knot::PretzelKnot;

fn main() {
    let budget = Budget::default();
    let args: Vec<String> = std::env::args().skip(1).collect();
    if !args.is_empty() {
        for spec in &args {
            let knot = PretzelKnot::parse(spec).unwrap();
            let t = std::time::Instant::now();
            match analyze(&knot, &budget) {
                Ok(r) => println!(
                    "{spec}: n={} ffp={:?} (h={:?} k={:?}) rtfn={:?} biorder={:?} sigma2={:?} [{} ms]",
                    r.n, r.ffp_overall, r.ffp_h.outcome, r.ffp_k.outcome, r.rtfn, r.biorder,
                    r.sigma2_lo, t.elapsed().as_millis()
                ),
                Err(e) => println!("{spec}: ERROR {e}"),
            }
        }
        return;
    }

    let mut cases: Vec<(String, &str)> = Vec::new();
    let push = |cases: &mut Vec<(String, &str)>, a: i64, b: i64, c: i64, expect: &'static str| {
        cases.push((format!("P({a},{b},{c})"), expect));
    };
    // negatives
    for (q, r) in [(2, 5), (3, 3)] {
        push(&mut cases, -3, 2 * q + 1, 2 * r + 1, "NotSatisfied");
    }
    for (q, r) in [(3, 5), (3, 6), (3, 10), (3, 11), (3, 12), (4, 4), (4, 6), (4, 7), (4, 8), (5, 5), (5, 6)] {
        push(&mut cases, -5, 2 * q + 1, 2 * r + 1, "NotSatisfied");
    }
    // unit determinant family, q = 2..6
    for q in 2..=6i64 {
        push(&mut cases, 1 - 2 * q, 2 * q + 1, 2 * q * q + 1, "NotSatisfied");
        push(&mut cases, 1 - 2 * q, 2 * q + 1, 2 * q * q - 3, "NotSatisfied");
    }
    // counterexample family
    for q in 3..=6i64 {
        push(&mut cases, 1 - 2 * q, 2 * q + 1, 4 * q - 3, "Satisfied");
    }
    // p <= -3, q = 1 family, full r sweep
    for p in -6..=-3i64 {
        for r in 1..=30i64 {
            push(&mut cases, 2 * p + 1, 3, 2 * r + 1, "Satisfied");
        }
    }
    // p = -2 family: q = 1 all r; (q=2, r>=6); (q=3, r>=4); q>3
    for r in 1..=30i64 {
        push(&mut cases, -3, 3, 2 * r + 1, "Satisfied");
    }
    for r in 6..=30i64 {
        push(&mut cases, -3, 5, 2 * r + 1, "Satisfied");
    }
    for r in 4..=30i64 {
        push(&mut cases, -3, 7, 2 * r + 1, "Satisfied");
    }
    for q in 4..=30i64 {
        for r in q..=30 {
            push(&mut cases, -3, 2 * q + 1, 2 * r + 1, "Satisfied");
        }
    }
    // p = -3 family: (q=3, r>=13); (q=4, r>=9); (q=5, r>=7); q>5
    for r in 13..=30i64 {
        push(&mut cases, -5, 7, 2 * r + 1, "Satisfied");
    }
    for r in 9..=30i64 {
        push(&mut cases, -5, 9, 2 * r + 1, "Satisfied");
    }
    for r in 7..=30i64 {
        push(&mut cases, -5, 11, 2 * r + 1, "Satisfied");
    }
    for q in 6..=30i64 {
        for r in q..=30 {
            push(&mut cases, -5, 2 * q + 1, 2 * r + 1, "Satisfied");
        }
    }
    push(&mut cases, -5, 7, 7, "Satisfied");
    push(&mut cases, -5, 7, 9, "Satisfied");

    let start = std::time::Instant::now();
    let mut bad = 0;
    let mut slowest = (0u128, String::new());
    for (spec, expect) in &cases {
        let knot = PretzelKnot::parse(spec).unwrap();
        let t = std::time::Instant::now();
        let r = match analyze(&knot, &budget) {
            Ok(r) => r,
            Err(e) => {
                println!("FAIL {spec}: analyze error {e}");
                bad += 1;
                continue;
            }
        };
        let ms = t.elapsed().as_millis();
        if ms > slowest.0 {
            slowest = (ms, spec.clone());
        }
        let got = match r.ffp_overall {
            FfpOverall::Satisfied => "Satisfied",
            FfpOverall::NotSatisfied => "NotSatisfied",
            FfpOverall::Unknown => "Unknown",
        };
        if got != *expect {
            bad += 1;
            println!("FAIL {spec}: n={} expected {expect} got {got} [{ms} ms]", r.n);
        }
    }
    // family route
    for k in 1..=3usize {
        for r in 1..=10i64 {
            let knot = PretzelKnot::family(k, r).unwrap();
            let rep = analyze(&knot, &budget).unwrap();
            let ok = rep.ffp_overall == FfpOverall::Satisfied
                && rep.index.as_deref() == Some((1usize << k).to_string().as_str());
            if !ok {
                bad += 1;
                println!("FAIL family k={k} r={r}: {:?} index {:?}", rep.ffp_overall, rep.index);
            }
        }
    }
    println!(
        "mismatches: {bad}/{} in {:?}; slowest {} at {} ms",
        cases.len() + 30,
        start.elapsed(),
        slowest.1,
        slowest.0
    );
}
