//! `pretzel`: analyze pretzel knots for orderability properties, sweep
//! parameter grids, regenerate the results chart, and run the regression
//! verifier.
//!
//! Exit codes: 0 success, 1 usage error, 2 internal error, 3 verification
//! mismatch.

use clap::{Args, Parser, Subcommand, ValueEnum};
use pretzel_cli::{fixtures, output, verify};
use pretzel_core::classify::{analyze, chart, AnalyzeError, KnotReport};
use pretzel_core::freefactor::Budget;
use pretzel_core::knot::{KnotError, PretzelKnot};
use rayon::prelude::*;

#[derive(Parser)]
#[command(name = "pretzel", version, about = "Pretzel knot orderability calculator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Markdown,
    Text,
}

#[derive(Args, Clone, Copy)]
struct BudgetArgs {
    /// Nielsen ball radius for the obstruction search
    #[arg(long, default_value_t = 3)]
    nielsen_radius: usize,
    /// maximum |s| for the ambient substitutions a -> b^s a
    #[arg(long, default_value_t = 2)]
    subst_max: i64,
    /// cap on dropped-generator candidates per positive search
    #[arg(long, default_value_t = 1_000_000)]
    candidate_cap: u64,
}

impl BudgetArgs {
    fn to_budget(self) -> Result<Budget, String> {
        if self.nielsen_radius > 6 {
            return Err("--nielsen-radius above 6 explodes the ball".into());
        }
        if !(0..=4).contains(&self.subst_max) {
            return Err("--subst-max must be between 0 and 4".into());
        }
        if self.candidate_cap == 0 {
            return Err("--candidate-cap must be positive".into());
        }
        Ok(Budget {
            nielsen_radius: self.nielsen_radius,
            subst_max: self.subst_max,
            candidate_cap: self.candidate_cap,
            ..Budget::default()
        })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one knot, e.g. `P(-5,7,9)` or `P(3,-3,3,-3,7)`
    Analyze {
        /// knot spec; omit when using --family
        spec: Option<String>,
        /// alternating-sign chain by block count and twist parameter: k r
        #[arg(long, num_args = 2, value_names = ["K", "R"], conflicts_with = "spec", allow_hyphen_values = true)]
        family: Option<Vec<i64>>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// write Graphviz dumps of the two kernel graphs into this directory
        #[arg(long)]
        dot_dir: Option<std::path::PathBuf>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// One verdict row per (q, r) with q <= r for fixed p
    Sweep {
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
        #[arg(long)]
        qmax: i64,
        #[arg(long)]
        rmax: i64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// worker threads (default: all cores); output is order-stable
        #[arg(long)]
        jobs: Option<usize>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Free-factor class grid over (q, r) for fixed p
    Chart {
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
        #[arg(long)]
        qmax: i64,
        #[arg(long)]
        rmax: i64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Run the bundled regression fixtures and report mismatches
    VerifyPaper {
        /// restrict to one fixture source (e.g. lemjustdontwork)
        #[arg(long)]
        only: Option<String>,
        /// external fixture file instead of the bundled set
        #[arg(long)]
        fixtures: Option<std::path::PathBuf>,
        #[arg(long)]
        jobs: Option<usize>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Print the bundled fixture catalogue as JSON
    DumpFixtures,
}

enum RunError {
    Usage(String),
    Internal(String),
    VerifyMismatch,
}

impl From<KnotError> for RunError {
    fn from(e: KnotError) -> Self {
        RunError::Usage(e.to_string())
    }
}

impl From<AnalyzeError> for RunError {
    fn from(e: AnalyzeError) -> Self {
        match e {
            AnalyzeError::Knot(k) => RunError::Usage(k.to_string()),
            other => RunError::Internal(other.to_string()),
        }
    }
}

const SWEEP_CAP: i64 = 64;

fn run() -> Result<(), RunError> {
    let cli = Cli::try_parse().map_err(|e| RunError::Usage(e.to_string()))?;
    match cli.command {
        Command::Analyze { spec, family, format, dot_dir, budget } => {
            let budget = budget.to_budget().map_err(RunError::Usage)?;
            let knot = match (&spec, &family) {
                (Some(s), None) => PretzelKnot::parse(s)?,
                (None, Some(kr)) => PretzelKnot::family(
                    usize::try_from(kr[0])
                        .map_err(|_| RunError::Usage("family block count must be positive".into()))?,
                    kr[1],
                )?,
                _ => return Err(RunError::Usage("give a knot spec or --family K R".into())),
            };
            if knot.is_two_bridge() {
                println!(
                    "{}: two-bridge pretzel (a parameter is ±1); analysis declined.\n\
                     Two-bridge knot groups have residually torsion-free nilpotent\n\
                     commutator subgroups by other means; this tool does not treat them.",
                    knot.name()
                );
                return Ok(());
            }
            let report = analyze(&knot, &budget)?;
            if let Some(dir) = dot_dir {
                dump_graphs(&knot, &dir).map_err(RunError::Internal)?;
            }
            match format {
                Format::Json => println!("{}", output::report_json(&report)),
                Format::Text => print!("{}", output::report_text(&report)),
                _ => return Err(RunError::Usage("analyze supports --format json|text".into())),
            }
            Ok(())
        }
        Command::Sweep { p, qmax, rmax, format, jobs, budget } => {
            let budget = budget.to_budget().map_err(RunError::Usage)?;
            check_bounds(qmax, rmax)?;
            let rows = sweep_rows(p, qmax, rmax, &budget, jobs)?;
            match format {
                Format::Csv => print!("{}", output::sweep_csv(&rows)),
                Format::Markdown => print!("{}", output::sweep_markdown(&rows)),
                Format::Json => println!("{}", output::sweep_json(&rows)),
                Format::Text => return Err(RunError::Usage("sweep supports csv|markdown|json".into())),
            }
            Ok(())
        }
        Command::Chart { p, qmax, rmax, format, budget } => {
            let budget = budget.to_budget().map_err(RunError::Usage)?;
            check_bounds(qmax, rmax)?;
            let grid = chart(p, qmax, rmax, &budget)?;
            match format {
                Format::Csv => print!("{}", output::chart_csv(&grid)),
                Format::Markdown => print!("{}", output::chart_markdown(&grid)),
                _ => return Err(RunError::Usage("chart supports --format csv|markdown".into())),
            }
            Ok(())
        }
        Command::VerifyPaper { only, fixtures: path, jobs, budget } => {
            let budget = budget.to_budget().map_err(RunError::Usage)?;
            let mut cases = match path {
                Some(p) => {
                    let text = std::fs::read_to_string(&p).map_err(|e| {
                        RunError::Usage(format!("cannot read fixtures {}: {e}", p.display()))
                    })?;
                    fixtures::from_json(&text)
                        .map_err(|e| RunError::Usage(format!("bad fixture file: {e}")))?
                }
                None => fixtures::paper_fixtures(),
            };
            if let Some(src) = &only {
                cases.retain(|f| &f.source == src);
                if cases.is_empty() {
                    return Err(RunError::Usage(format!("no fixtures with source `{src}`")));
                }
            }
            let jobs = jobs.unwrap_or_else(num_cpus);
            let results = verify::run_all(&cases, &budget, jobs);
            let mut failed = 0usize;
            for r in &results {
                if r.passed() {
                    println!("[ok]   {} ({})", r.fixture.knot, r.fixture.source);
                } else {
                    failed += 1;
                    let detail = r
                        .error
                        .clone()
                        .unwrap_or_else(|| r.mismatches.join("; "));
                    println!("[FAIL] {} ({}): {}", r.fixture.knot, r.fixture.source, detail);
                }
            }
            let pinned = if only.is_none() {
                match verify::pinned_fixtures() {
                    Ok(()) => {
                        println!("[ok]   pinned rewriting and Hermite fixtures");
                        true
                    }
                    Err(e) => {
                        println!("[FAIL] pinned fixtures: {e}");
                        failed += 1;
                        false
                    }
                }
            } else {
                true
            };
            let _ = pinned;
            println!(
                "verified {} case(s), {} mismatch(es)",
                results.len(),
                failed
            );
            if failed > 0 {
                return Err(RunError::VerifyMismatch);
            }
            Ok(())
        }
        Command::DumpFixtures => {
            println!("{}", fixtures::to_json(&fixtures::paper_fixtures()));
            Ok(())
        }
    }
}

fn check_bounds(qmax: i64, rmax: i64) -> Result<(), RunError> {
    if qmax < 1 || rmax < 1 || qmax > SWEEP_CAP || rmax > SWEEP_CAP {
        return Err(RunError::Usage(format!(
            "sweep bounds must lie in 1..={SWEEP_CAP}"
        )));
    }
    Ok(())
}

fn num_cpus() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn sweep_rows(
    p: i64,
    qmax: i64,
    rmax: i64,
    budget: &Budget,
    jobs: Option<usize>,
) -> Result<Vec<(i64, i64, KnotReport)>, RunError> {
    let mut params = Vec::new();
    for q in 1..=qmax {
        for r in q..=rmax {
            params.push((q, r));
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or_else(num_cpus))
        .build()
        .map_err(|e| RunError::Internal(e.to_string()))?;
    let rows: Result<Vec<_>, RunError> = pool.install(|| {
        params
            .par_iter()
            .map(|&(q, r)| {
                let knot = PretzelKnot::from_triple([2 * p + 1, 2 * q + 1, 2 * r + 1])
                    .map_err(RunError::from)?;
                let report = analyze(&knot, budget).map_err(RunError::from)?;
                Ok((q, r, report))
            })
            .collect()
    });
    rows
}

fn dump_graphs(knot: &PretzelKnot, dir: &std::path::Path) -> Result<(), String> {
    use num_bigint::BigInt;
    use pretzel_core::coset::SchreierSystem;
    use pretzel_core::fold::SubgroupGraph;
    use pretzel_core::intmat::IntMatrix;
    let gens = knot.boundary_generators().map_err(|e| e.to_string())?;
    std::fs::create_dir_all(dir).map_err(|e| e.to_string())?;
    for (name, side) in [("h", &gens.h), ("k", &gens.k)] {
        let stack = IntMatrix::from_rows(
            side.iter()
                .map(|g| g.abelianize().iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
        .expect("rectangular stack");
        let sys = SchreierSystem::build(&gens.alphabet, &stack).map_err(|e| e.to_string())?;
        let graph = SubgroupGraph::from_generators(&gens.alphabet, &sys.definitions());
        let path = dir.join(format!("{name}.dot"));
        std::fs::write(&path, graph.to_dot()).map_err(|e| e.to_string())?;
    }
    Ok(())
}

fn main() {
    let outcome = std::panic::catch_unwind(run);
    let code = match outcome {
        Ok(Ok(())) => 0,
        Ok(Err(RunError::Usage(msg))) => {
            eprintln!("{msg}");
            1
        }
        Ok(Err(RunError::Internal(msg))) => {
            eprintln!("internal error: {msg}");
            2
        }
        Ok(Err(RunError::VerifyMismatch)) => 3,
        Err(_) => {
            eprintln!("internal error: panic during analysis");
            2
        }
    };
    std::process::exit(code);
}
