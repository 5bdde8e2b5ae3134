//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails. Runs as a plain binary so the lines always reach the
//! `cargo test` output.

use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use hyperindep::config::{Check, VerifyConfig};
use hyperindep::corpus::Family;
use hyperindep::hg::parse_hg;
use hyperindep::verify::{self, recheck, Scope, Summary, Tally};
use hyperindep_core::bounds::bound_report;
use hyperindep_core::exact::{alpha_k_exact, chi_k_exact};
use hyperindep_core::generate::gen_complete;
use hyperindep_core::rational::ratio;
use hyperindep_core::BoundName;

const BUDGET: u64 = 50_000_000;
const CRITERION_1_LIMIT: Duration = Duration::from_secs(30);
const CRITERION_2_LIMIT: Duration = Duration::from_secs(300);
const CRITERION_4_LIMIT: Duration = Duration::from_secs(1);
/// Absolute tolerance on the floating point bound at `K_4^(3)`.
const CPS_TOL: f64 = 1e-9;

struct Outcome {
    ok: bool,
    note: String,
}

fn outcome(ok: bool, note: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        note: note.into(),
    }
}

fn clean(t: Tally) -> bool {
    t.cases > 0 && t.violations == 0 && t.unknown == 0
}

fn describe(label: &str, t: Tally) -> String {
    format!(
        "{label}: {} cases, {} violations, {} unknown",
        t.cases, t.violations, t.unknown
    )
}

fn family(summary: &Summary, check: Check, f: Family) -> Tally {
    summary.tally(check, Scope::Family(f))
}

fn criterion_1() -> Outcome {
    let cfg = VerifyConfig {
        random: None,
        replication: None,
        checks: vec![Check::BoundSoundness],
        ..VerifyConfig::default()
    };
    let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let start = Instant::now();
    let summary = pool.install(|| verify::run(&cfg)).expect("corpus");
    let elapsed = start.elapsed();
    let t = family(&summary, Check::BoundSoundness, Family::Exhaustive);
    outcome(
        clean(t) && t.cases == 1024 * 4 && elapsed < CRITERION_1_LIMIT,
        format!("{} in {:.2?} single-threaded", describe("exhaustive n=5 s=3", t), elapsed),
    )
}

fn criterion_2(summary: &Summary, elapsed: Duration) -> Outcome {
    let t = family(summary, Check::BoundSoundness, Family::Random);
    outcome(
        clean(t) && t.cases == 500 * 4 && elapsed < CRITERION_2_LIMIT,
        format!("{} (full default run {:.2?})", describe("random", t), elapsed),
    )
}

fn criterion_3() -> Outcome {
    let h = gen_complete(4, 3).unwrap();
    let mut fails = Vec::new();
    for (k, want) in [(0, 2), (1, 3), (2, 3)] {
        let got = alpha_k_exact(&h, k, BUDGET).unwrap().value();
        if got != Some(want) {
            fails.push(format!("alpha_{k} = {got:?}"));
        }
    }
    let chi = chi_k_exact(&h, 1, BUDGET).unwrap().value();
    if chi != Some(2) {
        fails.push(format!("chi_1 = {chi:?}"));
    }

    let exact = |k: usize, b: BoundName| {
        bound_report(&h, k)
            .get(b)
            .and_then(|v| v.exact_value().cloned())
    };
    let expect = [
        (0, BoundName::AvgDegree, ratio(4, 3)),
        (0, BoundName::AvgDegreeSimple, ratio(4, 3)),
        (0, BoundName::CaroTuzaAlpha, ratio(192, 105)),
        (2, BoundName::AvgDegree, ratio(8, 3)),
        (2, BoundName::AvgDegreeSimple, ratio(12, 5)),
        (2, BoundName::MaxDegree, ratio(2, 1)),
    ];
    for (k, b, want) in expect {
        if exact(k, b).as_ref() != Some(&want) {
            fails.push(format!("{b} at k={k}: {:?}", exact(k, b)));
        }
    }
    // Every vertex has degree 3 and s = 3: 4 · e^{-γ/2} · 4^{-1/2}.
    let gamma = 0.577_215_664_901_532_9_f64;
    let cps_expected = 2.0 * (-gamma / 2.0).exp();
    let cps = bound_report(&h, 0)
        .get(BoundName::Cps)
        .and_then(|v| v.amount.as_ref().map(|a| a.to_f64()));
    match cps {
        Some(x) if (x - cps_expected).abs() <= CPS_TOL && (x - 1.4986).abs() < 5e-5 => {}
        other => fails.push(format!("cps = {other:?}, expected {cps_expected}")),
    }
    let best = bound_report(&h, 1).best;
    if best != 2.into() {
        fails.push(format!("best at k=1 = {best}"));
    }
    outcome(
        fails.is_empty(),
        if fails.is_empty() {
            "K4(3): alpha_0..2 = 2,3,3; chi_1 = 2; bound values exact; cps within 1e-9".into()
        } else {
            fails.join("; ")
        },
    )
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let (checked, failures) = verify::fg_suite();
    let elapsed = start.elapsed();
    outcome(
        failures.is_empty() && elapsed < CRITERION_4_LIMIT,
        format!("{checked} grid comparisons, {} failures, {elapsed:.2?}", failures.len()),
    )
}

fn both(summary: &Summary, check: Check) -> (bool, String) {
    let e = family(summary, check, Family::Exhaustive);
    let r = family(summary, check, Family::Random);
    (
        clean(e) && clean(r),
        format!("{}; {}", describe("exhaustive", e), describe("random", r)),
    )
}

fn criterion_5(summary: &Summary) -> Outcome {
    let (ok, note) = both(summary, Check::Extraction);
    outcome(ok, format!("greedy, partition, thm37 targets and best maximality; {note}"))
}

fn criterion_6(summary: &Summary) -> Outcome {
    let (ok, note) = both(summary, Check::Partition);
    let d = &summary.diag;
    outcome(
        ok && d.partition_fallback_events == 0,
        format!(
            "{note}; fallback events {}; chi_k exact on {} cases",
            d.partition_fallback_events, d.chi_completed
        ),
    )
}

fn criterion_7(summary: &Summary) -> Outcome {
    let t = summary.total(Check::Remark);
    let d = &summary.diag;
    outcome(
        t.cases > 0 && t.violations == 0,
        format!(
            "{} rows with delta >= k(k+1), {} violations; strict in {} of {} rows where k does not divide delta (reported)",
            t.cases, t.violations, d.remark_strict_held, d.remark_strict_rows
        ),
    )
}

fn criterion_8(summary: &Summary) -> Outcome {
    let t = family(summary, Check::Replication, Family::Replication);
    outcome(
        clean(t) && t.cases == 20 * 4 * 2,
        describe("20 bases, c in {2,3}, k in 0..=3", t),
    )
}

fn criterion_9(summary: &Summary) -> Outcome {
    let (ok, note) = both(summary, Check::OracleAgreement);
    outcome(ok, format!("branch and bound vs subset sweep (n <= 12); {note}"))
}

/// The fault-injected config must fail with exit 1, dump counterexamples, and
/// each dump must reproduce its failure.
fn self_test() -> Outcome {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../configs");
    let dir = tempfile::tempdir().unwrap();
    let status = Command::new(env!("CARGO_BIN_EXE_hyperindep"))
        .arg("verify")
        .arg(root.join("fault-inflate.conf"))
        .arg("--output")
        .arg(dir.path())
        .output()
        .expect("run binary");
    let code = status.status.code();
    let cfg = VerifyConfig::parse(&std::fs::read_to_string(root.join("fault-inflate.conf")).unwrap())
        .unwrap();
    let mut dumps = 0;
    let mut reproduced = 0;
    for entry in std::fs::read_dir(dir.path()).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().is_some_and(|e| e == "hg") {
            dumps += 1;
            let h = parse_hg(&std::fs::read_to_string(&path).unwrap()).unwrap();
            let diag: serde_json::Value =
                serde_json::from_str(&std::fs::read_to_string(path.with_extension("json")).unwrap())
                    .unwrap();
            let k = diag["k"].as_u64().unwrap() as usize;
            if !recheck(&h, Check::BoundSoundness, k, &cfg).is_empty() {
                reproduced += 1;
            }
        }
    }
    outcome(
        code == Some(1) && dumps > 0 && reproduced == dumps,
        format!("fault inflate:edge_count -> exit {code:?}, {dumps} dumps, {reproduced} reproduced"),
    )
}

fn main() -> ExitCode {
    let start = Instant::now();
    let summary = verify::run(&VerifyConfig::default()).expect("default corpus");
    let full = start.elapsed();

    let results = [
        ("1", "exhaustive soundness", criterion_1()),
        ("2", "random soundness", criterion_2(&summary, full)),
        ("3", "known values", criterion_3()),
        ("4", "f/g analytic suite", criterion_4()),
        ("5", "constructive achievement", criterion_5(&summary)),
        ("6", "partition contract", criterion_6(&summary)),
        ("7", "remark regime", criterion_7(&summary)),
        ("8", "replication invariance", criterion_8(&summary)),
        ("9", "oracle self-check", criterion_9(&summary)),
        ("self-test", "fault injection", self_test()),
    ];
    let mut failed = 0;
    for (id, name, o) in &results {
        println!(
            "criterion {id} {name}: {} ({})",
            if o.ok { "PASS" } else { "FAIL" },
            o.note
        );
        failed += usize::from(!o.ok);
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
