//! Bound-tightness table: one CSV row per `(instance, k)`.

use std::io;

use hyperindep_core::bounds::{bound_report, BoundAmount};
use hyperindep_core::exact::alpha_k_exact;
use hyperindep_core::extract::{best_extract, greedy_peel, partition_extract, thm37_extract};
use hyperindep_core::{BoundName, Hypergraph};
use rayon::prelude::*;

/// `x` with 12 significant digits, trailing zeros dropped; scientific
/// notation outside `[1e-5, 1e12)`.
pub fn sig12(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        let fixed = format!("{x:.decimals$}");
        trim_zeros(&fixed).into()
    } else {
        format!("{}e{exp}", trim_zeros(mantissa))
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub fn header() -> Vec<String> {
    let mut cols: Vec<String> = ["instance", "n", "m", "s", "delta", "d", "k"]
        .into_iter()
        .map(String::from)
        .collect();
    for b in BoundName::ALL {
        cols.push(b.as_str().into());
        cols.push(format!("{}_exact", b.as_str()));
    }
    for c in ["best", "alpha_k", "greedy", "thm37", "partition", "best_extract"] {
        cols.push(c.into());
    }
    cols
}

/// One row; exact values are `num/den`, missing values are empty.
pub fn row(name: &str, h: &Hypergraph, k: usize, budget: u64) -> Vec<String> {
    let report = bound_report(h, k);
    let mut cells = vec![
        name.to_string(),
        report.n.to_string(),
        report.e.to_string(),
        report.s.to_string(),
        report.delta.to_string(),
        format!("{}/{}", report.d.numer(), report.d.denom()),
        k.to_string(),
    ];
    for b in BoundName::ALL {
        let amount = report.get(b).and_then(|v| v.amount.as_ref());
        cells.push(amount.map(|a| sig12(a.to_f64())).unwrap_or_default());
        cells.push(
            amount
                .and_then(BoundAmount::exact)
                .map(|r| format!("{}/{}", r.numer(), r.denom()))
                .unwrap_or_default(),
        );
    }
    cells.push(report.best.to_string());
    let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
    cells.push(opt(alpha_k_exact(h, k, budget).ok().and_then(|r| r.value())));
    cells.push(opt(greedy_peel(h, k, None).ok().map(|r| r.size())));
    cells.push(opt(thm37_extract(h, k).ok().map(|r| r.size())));
    cells.push(opt((k >= 1).then(|| partition_extract(h, k).ok().map(|r| r.size())).flatten()));
    cells.push(opt(best_extract(h, k).ok().map(|r| r.size())));
    cells
}

/// Writes the header and one row per instance and `k`, instances outermost.
pub fn write_csv<W: io::Write>(
    out: W,
    instances: &[(String, Hypergraph)],
    ks: &[usize],
    budget: u64,
) -> csv::Result<()> {
    let jobs: Vec<(&str, &Hypergraph, usize)> = instances
        .iter()
        .flat_map(|(name, h)| ks.iter().map(move |&k| (name.as_str(), h, k)))
        .collect();
    let rows: Vec<Vec<String>> = jobs
        .par_iter()
        .map(|&(name, h, k)| row(name, h, k, budget))
        .collect();
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header())?;
    for r in rows {
        w.write_record(r)?;
    }
    w.flush()?;
    Ok(())
}
