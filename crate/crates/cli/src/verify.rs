//! Corpus verification. Instances are checked in parallel; results are merged
//! in corpus order so the report is identical from run to run.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use hyperindep_core::bounds::{bound_report, eval_f, eval_g, BoundAmount, BoundReport};
use hyperindep_core::exact::{alpha_k_exact, alpha_k_sweep, chi_k_exact, OracleResult, Witness};
use hyperindep_core::extract::{
    best_extract, greedy_peel, partition_extract, thm37_extract_detailed, thm37_target,
};
use hyperindep_core::partition::{ceil_classes, k_partition};
use hyperindep_core::rational::{from_int, is_integer, ratio, Rational};
use hyperindep_core::{BoundName, Hypergraph, VertexSet};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::config::{Check, Fault, VerifyConfig};
use crate::corpus::{self, Family, Instance};
use crate::hg::write_hg;

/// Counterexamples written to disk per check; the rest are only counted.
pub const MAX_DUMPS_PER_CHECK: usize = 10;

/// Relative tolerance for comparing per-vertex values of the floating point
/// bound between an instance and its replication.
pub const CPS_REPLICATION_RTOL: f64 = 1e-12;

#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct Tally {
    pub cases: u64,
    pub violations: u64,
    /// Cases skipped because an oracle ran out of budget.
    pub unknown: u64,
}

impl Tally {
    fn absorb(&mut self, other: Tally) {
        self.cases += other.cases;
        self.violations += other.violations;
        self.unknown += other.unknown;
    }
}

/// Observations that are reported but never fail the run.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Diagnostics {
    pub ct_diag_cases: u64,
    pub ct_diag_above_alpha: u64,
    pub thm37_runs: u64,
    pub thm37_phases: u64,
    pub thm37_full_phases: u64,
    pub thm37_full_phase_band_missed: u64,
    pub thm37_early_stops: u64,
    pub thm37_early_stop_ceil_missed: u64,
    pub thm37_stalls: u64,
    pub thm37_greedy_won: u64,
    pub remark_rows: u64,
    pub remark_strict_rows: u64,
    pub remark_strict_held: u64,
    pub remark_divisible_equal: u64,
    pub partition_fallback_events: u64,
    pub partition_fallback_divisible: u64,
    pub chi_completed: u64,
}

impl Diagnostics {
    fn absorb(&mut self, o: &Diagnostics) {
        self.ct_diag_cases += o.ct_diag_cases;
        self.ct_diag_above_alpha += o.ct_diag_above_alpha;
        self.thm37_runs += o.thm37_runs;
        self.thm37_phases += o.thm37_phases;
        self.thm37_full_phases += o.thm37_full_phases;
        self.thm37_full_phase_band_missed += o.thm37_full_phase_band_missed;
        self.thm37_early_stops += o.thm37_early_stops;
        self.thm37_early_stop_ceil_missed += o.thm37_early_stop_ceil_missed;
        self.thm37_stalls += o.thm37_stalls;
        self.thm37_greedy_won += o.thm37_greedy_won;
        self.remark_rows += o.remark_rows;
        self.remark_strict_rows += o.remark_strict_rows;
        self.remark_strict_held += o.remark_strict_held;
        self.remark_divisible_equal += o.remark_divisible_equal;
        self.partition_fallback_events += o.partition_fallback_events;
        self.partition_fallback_divisible += o.partition_fallback_divisible;
        self.chi_completed += o.chi_completed;
    }
}

/// A failed check on one instance.
#[derive(Debug, Clone, PartialEq)]
pub struct Finding {
    pub check: Check,
    pub k: usize,
    /// Replication factor, for replication findings.
    pub copies: Option<usize>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub finding: Finding,
    pub family: Option<Family>,
    pub index: usize,
    pub origin: String,
    pub instance: Option<Hypergraph>,
    /// Files written for this violation, if any.
    pub dump: Option<PathBuf>,
}

/// Checks and diagnostics for one instance.
#[derive(Debug, Default, Clone)]
pub struct CaseReport {
    pub tallies: BTreeMap<Check, Tally>,
    pub findings: Vec<Finding>,
    pub diag: Diagnostics,
}

impl CaseReport {
    fn unknown(&mut self, check: Check) {
        let t = self.tallies.entry(check).or_default();
        t.cases += 1;
        t.unknown += 1;
    }

    /// Counts one case for `check` and records every detail as a finding.
    fn record(&mut self, check: Check, k: usize, copies: Option<usize>, details: Vec<String>) {
        let t = self.tallies.entry(check).or_default();
        t.cases += 1;
        if !details.is_empty() {
            t.violations += 1;
            self.findings.push(Finding {
                check,
                k,
                copies,
                detail: details.join("; "),
            });
        }
    }
}

/// Which sub-corpus a tally belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Scope {
    Family(Family),
    Grid,
}

impl Scope {
    pub fn as_str(self) -> &'static str {
        match self {
            Scope::Family(f) => f.as_str(),
            Scope::Grid => "grid",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Summary {
    pub seed: u64,
    pub k_values: Vec<usize>,
    pub instances: BTreeMap<Family, usize>,
    pub tallies: BTreeMap<(Check, Scope), Tally>,
    /// Violations in corpus order, at most [`MAX_DUMPS_PER_CHECK`] per check.
    pub violations: Vec<Violation>,
    pub diag: Diagnostics,
}

impl Summary {
    pub fn passed(&self) -> bool {
        self.tallies.values().all(|t| t.violations == 0)
    }

    pub fn tally(&self, check: Check, scope: Scope) -> Tally {
        self.tallies.get(&(check, scope)).copied().unwrap_or_default()
    }

    /// Sum over every scope.
    pub fn total(&self, check: Check) -> Tally {
        let mut t = Tally::default();
        for ((c, _), v) in &self.tallies {
            if *c == check {
                t.absorb(*v);
            }
        }
        t
    }

    fn absorb_case(&mut self, inst: &Instance, case: CaseReport) {
        for (check, t) in case.tallies {
            self.tallies
                .entry((check, Scope::Family(inst.family)))
                .or_default()
                .absorb(t);
        }
        self.diag.absorb(&case.diag);
        for finding in case.findings {
            let kept = self
                .violations
                .iter()
                .filter(|v| v.finding.check == finding.check)
                .count();
            if kept < MAX_DUMPS_PER_CHECK {
                self.violations.push(Violation {
                    finding,
                    family: Some(inst.family),
                    index: inst.index,
                    origin: inst.origin(),
                    instance: Some(inst.h.clone()),
                    dump: None,
                });
            }
        }
    }
}

fn applies(cfg: &VerifyConfig, check: Check) -> bool {
    cfg.checks.contains(&check)
}

fn alpha(h: &Hypergraph, k: usize, budget: u64) -> OracleResult {
    alpha_k_exact(h, k, budget).expect("corpus instances fit the oracle")
}

/// `⌈a / b⌉` for positive `b`.
fn div_ceil(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

fn bound_soundness(
    report: &BoundReport,
    alpha_k: Option<usize>,
    fault: Option<Fault>,
    diag: &mut Diagnostics,
) -> Option<Vec<String>> {
    let alpha_k = BigInt::from(alpha_k?);
    let mut details = Vec::new();
    for b in &report.bounds {
        let Some(amount) = &b.amount else { continue };
        let mut ceil = amount.ceil();
        let injected = fault == Some(Fault::Inflate(b.name));
        if injected {
            ceil += 1;
        }
        if b.name == BoundName::CaroTuzaKDiag {
            diag.ct_diag_cases += 1;
            diag.ct_diag_above_alpha += u64::from(ceil > alpha_k);
            continue;
        }
        if ceil > alpha_k {
            details.push(format!(
                "{} = {}{} rounds up to {} > alpha_k = {}",
                b.name,
                render_amount(amount),
                if injected { " + 1 (injected)" } else { "" },
                ceil,
                alpha_k
            ));
        }
    }
    Some(details)
}

fn render_amount(a: &BoundAmount) -> String {
    match a {
        BoundAmount::Exact(r) => r.to_string(),
        BoundAmount::Approx(x) => format!("{x:e}"),
    }
}

fn extraction(h: &Hypergraph, k: usize, diag: &mut Diagnostics) -> Vec<String> {
    let (n, e) = (h.order(), h.edge_count());
    let mut details = Vec::new();
    let mut sizes = Vec::new();

    match greedy_peel(h, k, None) {
        Ok(g) => {
            // size >= n - e/(k+1), cleared of denominators.
            if g.size() * (k + 1) + e < n * (k + 1) {
                details.push(format!("greedy size {} < n - e/(k+1) = {}", g.size(), ratio(n * (k + 1) - e, k + 1)));
            }
            if g.trace.len() > e / (k + 1) {
                details.push(format!("greedy took {} removals > floor(e/(k+1)) = {}", g.trace.len(), e / (k + 1)));
            }
            sizes.push(g.size());
        }
        Err(err) => details.push(format!("greedy: {err}")),
    }

    match thm37_extract_detailed(h, k) {
        Ok(r) => {
            let target = thm37_target(h, k);
            if r.result.size() < target {
                details.push(format!("thm37 size {} < target {}", r.result.size(), target));
            }
            diag.thm37_runs += 1;
            diag.thm37_phases += r.phases.len() as u64;
            diag.thm37_greedy_won += u64::from(r.greedy_won);
            diag.thm37_stalls += u64::from(r.partition_classes.is_some());
            for p in &r.phases {
                if let Some(ok) = p.remainder_in_lower_band {
                    diag.thm37_full_phases += 1;
                    diag.thm37_full_phase_band_missed += u64::from(!ok);
                }
                if let Some(ok) = p.early_stop_ceil_classes_ok {
                    diag.thm37_early_stops += 1;
                    diag.thm37_early_stop_ceil_missed += u64::from(!ok);
                }
            }
            sizes.push(r.result.size());
        }
        Err(err) => details.push(format!("thm37: {err}")),
    }

    if k >= 1 {
        match partition_extract(h, k) {
            Ok(p) => {
                let need = div_ceil(n, ceil_classes(h, k));
                if p.size() < need {
                    details.push(format!("partition size {} < ceil(n/ceil(delta/k)) = {}", p.size(), need));
                }
                sizes.push(p.size());
            }
            Err(err) => details.push(format!("partition: {err}")),
        }
    }

    match best_extract(h, k) {
        Ok(b) => {
            if let Some(&top) = sizes.iter().max() {
                if b.size() < top {
                    details.push(format!("best size {} < component size {}", b.size(), top));
                }
            }
            for v in (0..n).filter(|&v| !b.set.contains(v)) {
                let mut grown = b.set.members().to_vec();
                grown.push(v);
                let holds = h
                    .is_k_independent(&VertexSet::new(grown), k)
                    .map(|r| r.holds())
                    .unwrap_or(false);
                if holds {
                    details.push(format!("best is not maximal: vertex {} can be added", v + 1));
                    break;
                }
            }
        }
        Err(err) => details.push(format!("best: {err}")),
    }
    details
}

fn partition(
    h: &Hypergraph,
    k: usize,
    alpha_k: Option<usize>,
    chi_max_n: usize,
    budget: u64,
    diag: &mut Diagnostics,
) -> (Vec<String>, bool) {
    let mut details = Vec::new();
    let c = ceil_classes(h, k);
    let run = k_partition(h, k).expect("k >= 1");
    let p = &run.partition;
    if p.len() != c {
        details.push(format!("{} classes, expected ceil(delta/k) = {c}", p.len()));
    }
    if run.fallback_events > 0 {
        details.push(format!("{} fallback events", run.fallback_events));
        diag.partition_fallback_events += run.fallback_events as u64;
        if h.max_degree().is_multiple_of(k) {
            diag.partition_fallback_divisible += 1;
        }
    }
    if !p.is_cover_of(h.order()) {
        details.push("classes do not partition the vertex set".into());
    }
    if p.max_class_degree() > k {
        details.push(format!("class induced degree {} > k", p.max_class_degree()));
    }
    if run.moves.len() > h.edge_count() {
        details.push(format!("{} moves > e = {}", run.moves.len(), h.edge_count()));
    }

    let mut unknown = false;
    if h.order() <= chi_max_n {
        let chi = chi_k_exact(h, k, budget).expect("corpus instances fit the oracle");
        match chi.value() {
            Some(chi_k) => {
                diag.chi_completed += 1;
                if chi_k > c {
                    details.push(format!("chi_k = {chi_k} > ceil(delta/k) = {c}"));
                }
                if let Some(a) = alpha_k {
                    if a * chi_k < h.order() {
                        details.push(format!("alpha_k = {a} < n/chi_k = {}/{chi_k}", h.order()));
                    }
                }
                if let Some(Witness::Partition(w)) = chi.witness() {
                    if w.len() != chi_k || !w.is_cover_of(h.order()) || w.max_class_degree() > k {
                        details.push("chi_k witness is not a valid partition".into());
                    }
                }
            }
            None => unknown = true,
        }
    }
    (details, unknown)
}

fn oracle_agreement(h: &Hypergraph, k: usize, result: &OracleResult, sweep_max_n: usize) -> Option<Vec<String>> {
    let value = result.value()?;
    let mut details = Vec::new();
    if let Some(Witness::Set(w)) = result.witness() {
        let ok = w.len() == value
            && h.is_k_independent(w, k).map(|r| r.holds()).unwrap_or(false);
        if !ok {
            details.push("alpha_k witness does not certify the value".into());
        }
    }
    if k >= h.max_degree() && value != h.order() {
        details.push(format!("alpha_k = {value} != n although k >= delta"));
    }
    if h.order() <= sweep_max_n {
        let (swept, _) = alpha_k_sweep(h, k).expect("small instance");
        if swept != value {
            details.push(format!("branch and bound gives {value}, subset sweep gives {swept}"));
        }
    }
    Some(details)
}

fn remark(report: &BoundReport, diag: &mut Diagnostics) -> Option<Vec<String>> {
    let k = report.k;
    if k == 0 || report.delta < k * (k + 1) {
        return None;
    }
    let simple = report.get(BoundName::AvgDegreeSimple)?.exact_value()?.clone();
    let maxdeg = report.get(BoundName::MaxDegree)?.exact_value()?.clone();
    diag.remark_rows += 1;
    if !report.delta.is_multiple_of(k) {
        diag.remark_strict_rows += 1;
        diag.remark_strict_held += u64::from(simple > maxdeg);
    } else if simple == maxdeg {
        diag.remark_divisible_equal += 1;
    }
    let mut details = Vec::new();
    if simple < maxdeg {
        details.push(format!("avg_degree_simple = {simple} < max_degree = {maxdeg}"));
    }
    Some(details)
}

/// Runs every configured per-instance check on an exhaustive or random
/// instance, for each `k` in the config.
pub fn evaluate_main(h: &Hypergraph, cfg: &VerifyConfig) -> CaseReport {
    let mut out = CaseReport::default();
    let needs_oracle = [Check::BoundSoundness, Check::Partition, Check::OracleAgreement]
        .iter()
        .any(|c| applies(cfg, *c));
    let mut previous: Option<(usize, usize)> = None;

    let mut ks = cfg.k_values.clone();
    ks.sort_unstable();
    ks.dedup();
    for k in ks {
        let report = bound_report(h, k);
        let oracle = needs_oracle.then(|| alpha(h, k, cfg.budget));
        let alpha_k = oracle.as_ref().and_then(OracleResult::value);

        if applies(cfg, Check::BoundSoundness) {
            match bound_soundness(&report, alpha_k, cfg.fault, &mut out.diag) {
                Some(d) => out.record(Check::BoundSoundness, k, None, d),
                None => out.unknown(Check::BoundSoundness),
            }
        }
        if applies(cfg, Check::Extraction) {
            let d = extraction(h, k, &mut out.diag);
            out.record(Check::Extraction, k, None, d);
        }
        if applies(cfg, Check::Partition) && k >= 1 {
            let (d, unknown) = partition(h, k, alpha_k, cfg.chi_max_n, cfg.budget, &mut out.diag);
            if unknown && d.is_empty() {
                out.unknown(Check::Partition);
            } else {
                out.record(Check::Partition, k, None, d);
            }
        }
        if applies(cfg, Check::OracleAgreement) {
            let oracle = oracle.as_ref().expect("oracle computed");
            match oracle_agreement(h, k, oracle, cfg.sweep_max_n) {
                Some(mut d) => {
                    if let (Some((pk, pa)), Some(a)) = (previous, alpha_k) {
                        if a < pa {
                            d.push(format!("alpha_k decreases from {pa} at k = {pk} to {a}"));
                        }
                    }
                    out.record(Check::OracleAgreement, k, None, d);
                }
                None => out.unknown(Check::OracleAgreement),
            }
        }
        if applies(cfg, Check::Remark) {
            if let Some(d) = remark(&report, &mut out.diag) {
                out.record(Check::Remark, k, None, d);
            }
        }
        if let Some(a) = alpha_k {
            previous = Some((k, a));
        }
    }
    out
}

fn per_vertex_mismatch(a: &BoundAmount, n: usize, b: &BoundAmount, m: usize) -> bool {
    match (a, b) {
        (BoundAmount::Exact(x), BoundAmount::Exact(y)) => {
            x / from_int(n) != y / from_int(m)
        }
        _ => {
            let (x, y) = (a.to_f64() / n as f64, b.to_f64() / m as f64);
            (x - y).abs() > CPS_REPLICATION_RTOL * x.abs().max(y.abs())
        }
    }
}

/// Compares `H` with each configured replication `cH` for every `k`.
pub fn evaluate_replication(h: &Hypergraph, cfg: &VerifyConfig) -> CaseReport {
    let mut out = CaseReport::default();
    if !applies(cfg, Check::Replication) {
        return out;
    }
    let copies = cfg.replication.as_ref().map_or(&[][..], |r| &r.copies[..]);
    for &k in &cfg.k_values {
        let base = bound_report(h, k);
        let base_alpha = alpha(h, k, cfg.budget).value();
        for &c in copies {
            let big = h.replicate(c).expect("positive copies");
            let Some(a) = base_alpha else {
                out.unknown(Check::Replication);
                continue;
            };
            let Some(big_alpha) = alpha(&big, k, cfg.budget).value() else {
                out.unknown(Check::Replication);
                continue;
            };
            let mut details = Vec::new();
            if big_alpha != c * a {
                details.push(format!("alpha_k(cH) = {big_alpha} != c * alpha_k(H) = {}", c * a));
            }
            let rep = bound_report(&big, k);
            if rep.d != base.d {
                details.push(format!("average degree {} != {}", rep.d, base.d));
            }
            for (x, y) in base.bounds.iter().zip(&rep.bounds) {
                match (&x.amount, &y.amount) {
                    (None, None) => {}
                    (Some(a), Some(b)) => {
                        if per_vertex_mismatch(a, h.order(), b, big.order()) {
                            details.push(format!(
                                "{} per vertex: {} / {} vs {} / {}",
                                x.name,
                                render_amount(a),
                                h.order(),
                                render_amount(b),
                                big.order()
                            ));
                        }
                    }
                    _ => details.push(format!("{} applicability differs", x.name)),
                }
            }
            out.record(Check::Replication, k, Some(c), details);
        }
    }
    out
}

/// The f/g identities on the grid `p/q`, `0 <= p <= 40`, `1 <= q <= 12`.
/// Returns the number of comparisons made and the failures.
pub fn fg_suite() -> (u64, Vec<String>) {
    let mut xs: Vec<Rational> = (0..=40)
        .flat_map(|p| (1..=12).map(move |q| ratio(p, q)))
        .collect();
    xs.sort();
    xs.dedup();
    let fs: Vec<Rational> = xs.iter().map(|x| eval_f(x).expect("non-negative")).collect();
    let one = from_int(1);
    let zero = from_int(0);
    let mut checked = 0;
    let mut failures = Vec::new();
    for (x, f) in xs.iter().zip(&fs) {
        checked += 2;
        if *x > zero && *f != eval_g(x).expect("non-negative") {
            failures.push(format!("f({x}) != g({x})"));
        }
        let recip = &one / (&one + x);
        if *f < recip || (*f == recip) != is_integer(x) {
            failures.push(format!("f({x}) = {f} against 1/(1+x) = {recip}"));
        }
    }
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            checked += 2;
            if fs[i] <= fs[j] {
                failures.push(format!("f not decreasing between {} and {}", xs[i], xs[j]));
            }
            let mid = eval_f(&((&xs[i] + &xs[j]) / from_int(2))).expect("non-negative");
            if mid * from_int(2) > &fs[i] + &fs[j] {
                failures.push(format!("f not midpoint convex at {}, {}", xs[i], xs[j]));
            }
        }
    }
    (checked, failures)
}

/// Re-runs one check at one `k` on a single instance and returns the
/// failures. Replication uses the configured copy counts.
pub fn recheck(h: &Hypergraph, check: Check, k: usize, cfg: &VerifyConfig) -> Vec<Finding> {
    let mut one = cfg.clone();
    one.checks = vec![check];
    one.k_values = vec![k];
    let case = if check == Check::Replication {
        evaluate_replication(h, &one)
    } else {
        evaluate_main(h, &one)
    };
    case.findings
}

#[derive(Debug, thiserror::Error)]
pub enum VerifyError {
    #[error("no instances")]
    EmptyCorpus,
    #[error("corpus generation failed: {0}")]
    Corpus(#[from] hyperindep_core::Error),
    #[error("writing counterexamples: {0}")]
    Io(#[from] io::Error),
}

/// Builds the corpus and runs every configured check.
pub fn run(cfg: &VerifyConfig) -> Result<Summary, VerifyError> {
    let main = corpus::build_main(cfg)?;
    let replication = if applies(cfg, Check::Replication) {
        corpus::build_replication(cfg)?
    } else {
        Vec::new()
    };
    let main_checks = cfg.checks.iter().any(|c| !matches!(c, Check::Replication | Check::FgProperties));
    let grid = applies(cfg, Check::FgProperties);
    if (main.is_empty() || !main_checks) && replication.is_empty() && !grid {
        return Err(VerifyError::EmptyCorpus);
    }

    let mut summary = Summary {
        seed: cfg.seed,
        k_values: cfg.k_values.clone(),
        instances: BTreeMap::new(),
        tallies: BTreeMap::new(),
        violations: Vec::new(),
        diag: Diagnostics::default(),
    };

    if grid {
        let (checked, failures) = fg_suite();
        let t = summary
            .tallies
            .entry((Check::FgProperties, Scope::Grid))
            .or_default();
        t.cases = checked;
        t.violations = failures.len() as u64;
        for detail in failures.into_iter().take(MAX_DUMPS_PER_CHECK) {
            summary.violations.push(Violation {
                finding: Finding {
                    check: Check::FgProperties,
                    k: 0,
                    copies: None,
                    detail,
                },
                family: None,
                index: 0,
                origin: "grid".into(),
                instance: None,
                dump: None,
            });
        }
    }

    if main_checks {
        for inst in &main {
            *summary.instances.entry(inst.family).or_default() += 1;
        }
        let cases: Vec<CaseReport> = main.par_iter().map(|i| evaluate_main(&i.h, cfg)).collect();
        for (inst, case) in main.iter().zip(cases) {
            summary.absorb_case(inst, case);
        }
    }
    if !replication.is_empty() {
        summary.instances.insert(Family::Replication, replication.len());
        let cases: Vec<CaseReport> = replication
            .par_iter()
            .map(|i| evaluate_replication(&i.h, cfg))
            .collect();
        for (inst, case) in replication.iter().zip(cases) {
            summary.absorb_case(inst, case);
        }
    }
    Ok(summary)
}

#[derive(Serialize)]
struct Diagnosis<'a> {
    check: &'static str,
    family: Option<&'static str>,
    index: usize,
    k: usize,
    copies: Option<usize>,
    origin: &'a str,
    detail: &'a str,
    n: Option<usize>,
    m: Option<usize>,
    s: Option<usize>,
}

/// Writes each violation as `<stem>.hg` plus `<stem>.json` under `dir`.
pub fn write_dumps(summary: &mut Summary, dir: &Path) -> io::Result<()> {
    if summary.violations.is_empty() {
        return Ok(());
    }
    fs::create_dir_all(dir)?;
    for (i, v) in summary.violations.iter_mut().enumerate() {
        let f = &v.finding;
        let stem = match v.family {
            Some(fam) => format!("{}-{}-{}-k{}", f.check, fam, v.index, f.k),
            None => format!("{}-{}", f.check, i),
        };
        let stem = match f.copies {
            Some(c) => format!("{stem}-c{c}"),
            None => stem,
        };
        let diagnosis = Diagnosis {
            check: f.check.as_str(),
            family: v.family.map(Family::as_str),
            index: v.index,
            k: f.k,
            copies: f.copies,
            origin: &v.origin,
            detail: &f.detail,
            n: v.instance.as_ref().map(Hypergraph::order),
            m: v.instance.as_ref().map(Hypergraph::edge_count),
            s: v.instance.as_ref().map(Hypergraph::uniformity),
        };
        if let Some(h) = &v.instance {
            fs::write(dir.join(format!("{stem}.hg")), write_hg(h))?;
        }
        let json = serde_json::to_string_pretty(&diagnosis).expect("serializable");
        fs::write(dir.join(format!("{stem}.json")), json + "\n")?;
        v.dump = Some(dir.join(stem));
    }
    Ok(())
}

/// The plain-text report. Contains no timings or paths beyond the dump
/// locations, so fixed inputs give byte-identical output.
pub fn render(summary: &Summary) -> String {
    let mut out = String::new();
    let ks: Vec<String> = summary.k_values.iter().map(usize::to_string).collect();
    writeln!(out, "seed {}  k = {}", summary.seed, ks.join(",")).unwrap();
    let corpus: Vec<String> = summary
        .instances
        .iter()
        .map(|(f, n)| format!("{f} {n}"))
        .collect();
    if !corpus.is_empty() {
        writeln!(out, "instances: {}", corpus.join(", ")).unwrap();
    }
    writeln!(out).unwrap();
    writeln!(
        out,
        "{:<18} {:<12} {:>8} {:>10} {:>8}",
        "check", "scope", "cases", "violations", "unknown"
    )
    .unwrap();
    for ((check, scope), t) in &summary.tallies {
        writeln!(
            out,
            "{:<18} {:<12} {:>8} {:>10} {:>8}",
            check.as_str(),
            scope.as_str(),
            t.cases,
            t.violations,
            t.unknown
        )
        .unwrap();
    }

    let d = &summary.diag;
    writeln!(out, "\ndiagnostics").unwrap();
    writeln!(
        out,
        "  caro_tuza_k_diag above alpha_k: {} of {}",
        d.ct_diag_above_alpha, d.ct_diag_cases
    )
    .unwrap();
    writeln!(
        out,
        "  thm37: {} runs, {} phases; full phases ending outside the lower band: {} of {}; early stops with ceil(delta/k) > r+1: {} of {}; stalls coloured: {}; plain greedy larger: {}",
        d.thm37_runs,
        d.thm37_phases,
        d.thm37_full_phase_band_missed,
        d.thm37_full_phases,
        d.thm37_early_stop_ceil_missed,
        d.thm37_early_stops,
        d.thm37_stalls,
        d.thm37_greedy_won
    )
    .unwrap();
    writeln!(
        out,
        "  remark: {} rows; strict in {} of {} rows where k does not divide delta; equal in {} divisible rows",
        d.remark_rows, d.remark_strict_held, d.remark_strict_rows, d.remark_divisible_equal
    )
    .unwrap();
    writeln!(
        out,
        "  partition fallback events: {} ({} with k dividing delta); chi_k computed exactly: {}",
        d.partition_fallback_events, d.partition_fallback_divisible, d.chi_completed
    )
    .unwrap();

    if !summary.violations.is_empty() {
        writeln!(out, "\ncounterexamples").unwrap();
        for v in &summary.violations {
            let f = &v.finding;
            let copies = f.copies.map(|c| format!(" c={c}")).unwrap_or_default();
            write!(out, "  {} {} k={}{}: {}", f.check, v.origin, f.k, copies, f.detail).unwrap();
            if let Some(p) = &v.dump {
                write!(out, " [{}.hg]", p.display()).unwrap();
            }
            writeln!(out).unwrap();
        }
    }
    writeln!(out, "\nresult: {}", if summary.passed() { "PASS" } else { "FAIL" }).unwrap();
    out
}
