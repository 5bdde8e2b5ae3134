//! Closed-form lower bounds on `α_k(H)`.
//!
//! Everything except the Csaba–Plick–Shokoufandeh bound is evaluated over exact
//! rationals; that one involves `e^{-γ/(s-1)}` and is a double.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::hypergraph::Hypergraph;
use crate::rational::{self, from_int, ratio, Rational};

/// Euler–Mascheroni constant to 17 significant digits.
#[allow(clippy::excessive_precision)]
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_86;

/// `f(x) = 1/(1+x) · (1 + {x}(1-{x}) / ((⌊x⌋+1)(⌊x⌋+2)))` for `x >= 0`.
pub fn eval_f(x: &Rational) -> Result<Rational, Error> {
    if !rational::is_nonnegative(x) {
        return Err(Error::NegativeArgument);
    }
    let fl = rational::floor(x);
    let fr = rational::frac(x);
    let one = Rational::one();
    let correction = &fr * (&one - &fr) / Rational::from_integer((&fl + 1) * (&fl + 2));
    Ok((&one + correction) / (&one + x))
}

/// `g(0) = 1`, `g(x) = (2⌈x⌉ - x) / (⌈x⌉(1 + ⌈x⌉))` for `x > 0`.
pub fn eval_g(x: &Rational) -> Result<Rational, Error> {
    if !rational::is_nonnegative(x) {
        return Err(Error::NegativeArgument);
    }
    if x.is_zero() {
        return Ok(Rational::one());
    }
    let c = rational::ceil(x);
    let denom = Rational::from_integer(&c * (&c + 1));
    Ok((Rational::from_integer(c * 2) - x) / denom)
}

/// Argument of `f` for the average-degree bound: `2d/(s(k+1)) = 2e/(n(k+1))`.
pub fn avg_degree_argument(h: &Hypergraph, k: usize) -> Rational {
    ratio(2 * h.edge_count(), h.order() * (k + 1))
}

/// `Π_{i=1}^{d} (1 - 1/(i(s-1)+1))`, one for `d = 0`.
pub fn caro_tuza_product(s: usize, d: usize) -> Rational {
    (1..=d).fold(Rational::one(), |acc, i| acc * ratio(i * (s - 1), i * (s - 1) + 1))
}

/// Caro–Tuza weight `f_{kc,s}(i)` in their own indexing (`kc = 1` is ordinary
/// independence).
pub fn caro_tuza_weight(kc: usize, s: usize, i: usize) -> Result<Rational, Error> {
    if kc == 0 {
        return Err(Error::ZeroK);
    }
    if i <= kc {
        let linear = Rational::one() - ratio(i, kc * s);
        debug_assert!(i != kc || linear == caro_tuza_product(s, 1));
        Ok(linear)
    } else {
        Ok(caro_tuza_product(s, i - kc + 1))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundName {
    /// `n / ⌈Δ/k⌉`
    MaxDegree,
    /// `n - e/(k+1)`
    EdgeCount,
    /// `f(2e/(n(k+1))) · n`
    AvgDegree,
    /// `s(k+1) n / (s(k+1) + 2d)`
    AvgDegreeSimple,
    /// `Σ_v Π (1 - 1/(i(s-1)+1))`, independence only
    CaroTuzaAlpha,
    /// `e^{-γ/(s-1)} Σ (d_v+1)^{-1/(s-1)}`, independence only
    Cps,
    /// `Σ f_{k+1,s}(d_v)`
    CaroTuzaK,
    /// `Σ f_{k,s}(d_v)`, the alternative index reading
    CaroTuzaKDiag,
}

impl BoundName {
    pub const ALL: [BoundName; 8] = [
        BoundName::MaxDegree,
        BoundName::EdgeCount,
        BoundName::AvgDegree,
        BoundName::AvgDegreeSimple,
        BoundName::CaroTuzaAlpha,
        BoundName::Cps,
        BoundName::CaroTuzaK,
        BoundName::CaroTuzaKDiag,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            BoundName::MaxDegree => "max_degree",
            BoundName::EdgeCount => "edge_count",
            BoundName::AvgDegree => "avg_degree",
            BoundName::AvgDegreeSimple => "avg_degree_simple",
            BoundName::CaroTuzaAlpha => "caro_tuza_alpha",
            BoundName::Cps => "cps",
            BoundName::CaroTuzaK => "caro_tuza_k",
            BoundName::CaroTuzaKDiag => "caro_tuza_k_diag",
        }
    }

    pub fn parse(name: &str) -> Option<BoundName> {
        BoundName::ALL.into_iter().find(|b| b.as_str() == name)
    }

    /// Whether the bound takes part in `best`. The Caro–Tuza k-variants are
    /// reported only.
    pub fn counts_toward_best(self) -> bool {
        !matches!(self, BoundName::CaroTuzaK | BoundName::CaroTuzaKDiag)
    }
}

impl fmt::Display for BoundName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum BoundAmount {
    Exact(Rational),
    Approx(f64),
}

impl BoundAmount {
    pub fn to_f64(&self) -> f64 {
        match self {
            BoundAmount::Exact(r) => rational::to_f64(r),
            BoundAmount::Approx(x) => *x,
        }
    }

    /// Smallest integer the bound certifies for `α_k`.
    pub fn ceil(&self) -> BigInt {
        match self {
            BoundAmount::Exact(r) => rational::ceil(r),
            BoundAmount::Approx(x) => rational::ceil_f64(*x),
        }
    }

    pub fn exact(&self) -> Option<&Rational> {
        match self {
            BoundAmount::Exact(r) => Some(r),
            BoundAmount::Approx(_) => None,
        }
    }
}

/// One lower bound: a value when applicable, otherwise the reason it is not.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundValue {
    pub name: BoundName,
    pub amount: Option<BoundAmount>,
    pub reason: Option<String>,
}

impl BoundValue {
    fn exact(name: BoundName, value: Rational) -> Self {
        BoundValue {
            name,
            amount: Some(BoundAmount::Exact(value)),
            reason: None,
        }
    }

    fn not_applicable(name: BoundName, reason: &str) -> Self {
        BoundValue {
            name,
            amount: None,
            reason: Some(reason.into()),
        }
    }

    pub fn applicable(&self) -> bool {
        self.amount.is_some()
    }

    pub fn exact_value(&self) -> Option<&Rational> {
        self.amount.as_ref().and_then(BoundAmount::exact)
    }
}

/// `n / ⌈Δ/k⌉`; for `Δ = 0` a single class suffices and the value is `n`.
pub fn bound_max_degree(h: &Hypergraph, k: usize) -> BoundValue {
    if k == 0 {
        return BoundValue::not_applicable(BoundName::MaxDegree, "k = 0: the bound divides by k");
    }
    let classes = h.max_degree().div_ceil(k).max(1);
    BoundValue::exact(BoundName::MaxDegree, ratio(h.order(), classes))
}

/// `n - e/(k+1)`, reported even when non-positive.
pub fn bound_edge_count(h: &Hypergraph, k: usize) -> BoundValue {
    let value = from_int(h.order()) - ratio(h.edge_count(), k + 1);
    BoundValue::exact(BoundName::EdgeCount, value)
}

/// `f(2e/(n(k+1))) · n`.
pub fn bound_avg_degree(h: &Hypergraph, k: usize) -> BoundValue {
    let f = eval_f(&avg_degree_argument(h, k)).expect("argument is non-negative");
    BoundValue::exact(BoundName::AvgDegree, f * from_int(h.order()))
}

/// `n²(k+1) / (n(k+1) + 2e)`, equal to `s(k+1)n / (s(k+1) + 2d)`.
pub fn bound_avg_degree_simple(h: &Hypergraph, k: usize) -> BoundValue {
    let n = h.order();
    let value = ratio(n * n * (k + 1), n * (k + 1) + 2 * h.edge_count());
    BoundValue::exact(BoundName::AvgDegreeSimple, value)
}

fn degree_histogram(h: &Hypergraph) -> Vec<usize> {
    let degrees = h.degrees();
    let mut hist = alloc::vec![0usize; degrees.iter().copied().max().unwrap_or(0) + 1];
    for d in degrees {
        hist[d] += 1;
    }
    hist
}

/// Caro–Tuza independence bound `Σ_v Π_{i=1}^{d(v)} (1 - 1/(i(s-1)+1))`.
pub fn bound_caro_tuza_alpha(h: &Hypergraph) -> BoundValue {
    let s = h.uniformity();
    let mut product = Rational::one();
    let mut total = Rational::zero();
    for (d, &count) in degree_histogram(h).iter().enumerate() {
        if d > 0 {
            product *= ratio(d * (s - 1), d * (s - 1) + 1);
        }
        if count > 0 {
            total += &product * from_int(count);
        }
    }
    BoundValue::exact(BoundName::CaroTuzaAlpha, total)
}

/// Csaba–Plick–Shokoufandeh bound, `s >= 3` only.
pub fn bound_cps(h: &Hypergraph) -> BoundValue {
    let s = h.uniformity();
    if s < 3 {
        return BoundValue::not_applicable(BoundName::Cps, "s = 2: the bound needs s >= 3");
    }
    let exponent = 1.0 / (s - 1) as f64;
    let sum: f64 = h
        .degrees()
        .into_iter()
        .map(|d| 1.0 / libm::pow((d + 1) as f64, exponent))
        .sum();
    BoundValue {
        name: BoundName::Cps,
        amount: Some(BoundAmount::Approx(libm::exp(-EULER_GAMMA * exponent) * sum)),
        reason: None,
    }
}

fn caro_tuza_sum(h: &Hypergraph, kc: usize) -> Result<Rational, Error> {
    let s = h.uniformity();
    let mut total = Rational::zero();
    for (d, &count) in degree_histogram(h).iter().enumerate() {
        if count > 0 {
            total += caro_tuza_weight(kc, s, d)? * from_int(count);
        }
    }
    Ok(total)
}

/// `Σ_x f_{kc,s}(d(x))` with the Caro–Tuza index `kc >= 1`.
pub fn bound_caro_tuza_k(h: &Hypergraph, kc: usize) -> Result<BoundValue, Error> {
    Ok(BoundValue::exact(BoundName::CaroTuzaK, caro_tuza_sum(h, kc)?))
}

/// Summary of an instance plus every bound applicable at `k`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub n: usize,
    pub e: usize,
    pub s: usize,
    pub k: usize,
    pub delta: usize,
    pub d: Rational,
    pub bounds: Vec<BoundValue>,
    /// Max of `⌈value⌉` over applicable bounds that count toward it.
    pub best: BigInt,
}

impl BoundReport {
    pub fn get(&self, name: BoundName) -> Option<&BoundValue> {
        self.bounds.iter().find(|b| b.name == name)
    }
}

/// Evaluates every bound for `(h, k)`. The independence-only bounds appear at
/// `k = 0`; the Caro–Tuza k-bound is reported at `kc = k + 1` and, as a
/// diagnostic, at `kc = k`.
pub fn bound_report(h: &Hypergraph, k: usize) -> BoundReport {
    let profile = h.degree_profile();
    let mut bounds = alloc::vec![
        bound_max_degree(h, k),
        bound_edge_count(h, k),
        bound_avg_degree(h, k),
        bound_avg_degree_simple(h, k),
    ];
    if k == 0 {
        bounds.push(bound_caro_tuza_alpha(h));
        bounds.push(bound_cps(h));
    }
    bounds.push(BoundValue::exact(
        BoundName::CaroTuzaK,
        caro_tuza_sum(h, k + 1).expect("k + 1 >= 1"),
    ));
    bounds.push(if k == 0 {
        BoundValue::not_applicable(BoundName::CaroTuzaKDiag, "k = 0: Caro-Tuza index must be >= 1")
    } else {
        BoundValue::exact(
            BoundName::CaroTuzaKDiag,
            caro_tuza_sum(h, k).expect("k >= 1"),
        )
    });
    let best = bounds
        .iter()
        .filter(|b| b.name.counts_toward_best())
        .filter_map(|b| b.amount.as_ref().map(BoundAmount::ceil))
        .max()
        .unwrap_or_else(BigInt::zero);
    BoundReport {
        n: h.order(),
        e: h.edge_count(),
        s: h.uniformity(),
        k,
        delta: profile.max_degree,
        d: profile.avg_degree,
        bounds,
        best,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::gen_complete;

    fn k43() -> Hypergraph {
        gen_complete(4, 3).unwrap()
    }

    fn exact(b: BoundValue) -> Rational {
        b.exact_value().cloned().expect("exact value")
    }

    #[test]
    fn f_examples() {
        assert_eq!(eval_f(&from_int(0)).unwrap(), from_int(1));
        assert_eq!(eval_f(&from_int(2)).unwrap(), ratio(1, 3));
        assert_eq!(eval_f(&ratio(1, 2)).unwrap(), ratio(3, 4));
        assert_eq!(eval_f(&ratio(3, 2)).unwrap(), ratio(5, 12));
        assert_eq!(eval_f(&ratio(-1, 2)), Err(Error::NegativeArgument));
    }

    #[test]
    fn g_examples() {
        assert_eq!(eval_g(&from_int(0)).unwrap(), from_int(1));
        assert_eq!(eval_g(&ratio(1, 2)).unwrap(), ratio(3, 4));
        assert_eq!(eval_g(&from_int(2)).unwrap(), ratio(1, 3));
        assert_eq!(eval_g(&ratio(-3, 1)), Err(Error::NegativeArgument));
    }

    #[test]
    fn max_degree_bound() {
        assert_eq!(exact(bound_max_degree(&k43(), 1)), ratio(4, 3));
        assert_eq!(exact(bound_max_degree(&k43(), 2)), from_int(2));
        let empty = Hypergraph::empty(5, 3).unwrap();
        assert_eq!(exact(bound_max_degree(&empty, 1)), from_int(5));
        assert!(!bound_max_degree(&k43(), 0).applicable());
    }

    #[test]
    fn edge_count_bound() {
        assert_eq!(exact(bound_edge_count(&k43(), 1)), from_int(2));
        assert_eq!(exact(bound_edge_count(&k43(), 0)), from_int(0));
        let empty = Hypergraph::empty(7, 3).unwrap();
        for k in 0..4 {
            assert_eq!(exact(bound_edge_count(&empty, k)), from_int(7));
        }
        // Dense instances go negative and stay negative.
        let dense = gen_complete(6, 3).unwrap();
        assert_eq!(exact(bound_edge_count(&dense, 0)), from_int(-14));
    }

    #[test]
    fn avg_degree_bounds() {
        assert_eq!(exact(bound_avg_degree(&k43(), 0)), ratio(4, 3));
        assert_eq!(exact(bound_avg_degree(&k43(), 2)), ratio(8, 3));
        let single = Hypergraph::new(3, 3, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(exact(bound_avg_degree(&single, 0)), from_int(2));

        assert_eq!(exact(bound_avg_degree_simple(&k43(), 0)), ratio(4, 3));
        assert_eq!(exact(bound_avg_degree_simple(&k43(), 2)), ratio(12, 5));
        assert_eq!(exact(bound_avg_degree_simple(&single, 0)), ratio(9, 5));
    }

    #[test]
    fn caro_tuza_alpha_bound() {
        assert_eq!(exact(bound_caro_tuza_alpha(&k43())), ratio(192, 105));
        assert_eq!(exact(bound_caro_tuza_alpha(&Hypergraph::empty(5, 3).unwrap())), from_int(5));
        // s = 2 reduces to Caro–Wei: each endpoint of a single edge weighs 1/2.
        let edge = Hypergraph::new(2, 2, vec![vec![0, 1]]).unwrap();
        assert_eq!(exact(bound_caro_tuza_alpha(&edge)), from_int(1));
        let edge3 = Hypergraph::new(3, 3, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(exact(bound_caro_tuza_alpha(&edge3)), from_int(2));
    }

    #[test]
    fn cps_bound() {
        let v = bound_cps(&k43()).amount.unwrap().to_f64();
        let expected = libm::exp(-EULER_GAMMA / 2.0) * 4.0 / 2.0;
        assert!((v - expected).abs() < 1e-12);
        assert!((v - 1.4986).abs() < 1e-4);
        let v = bound_cps(&Hypergraph::empty(5, 3).unwrap()).amount.unwrap().to_f64();
        assert!((v - 3.7466).abs() < 1e-4);
        let graph = gen_complete(4, 2).unwrap();
        assert!(!bound_cps(&graph).applicable());
    }

    #[test]
    fn caro_tuza_k_bound() {
        assert_eq!(exact(bound_caro_tuza_k(&k43(), 1).unwrap()), ratio(192, 105));
        assert_eq!(caro_tuza_weight(2, 5, 0).unwrap(), from_int(1));
        assert_eq!(caro_tuza_weight(2, 3, 2).unwrap(), ratio(2, 3));
        assert_eq!(caro_tuza_product(3, 1), ratio(2, 3));
        assert_eq!(bound_caro_tuza_k(&k43(), 0), Err(Error::ZeroK));
    }

    #[test]
    fn caro_tuza_branches_agree_at_kc() {
        for s in 2..7 {
            for kc in 1..7 {
                let linear = Rational::one() - ratio(kc, kc * s);
                assert_eq!(linear, caro_tuza_product(s, 1));
                assert_eq!(caro_tuza_weight(kc, s, kc).unwrap(), linear);
            }
        }
    }

    #[test]
    fn report_examples() {
        let r = bound_report(&k43(), 1);
        let value = |name| r.get(name).unwrap().exact_value().cloned().unwrap();
        assert_eq!(value(BoundName::MaxDegree), ratio(4, 3));
        assert_eq!(value(BoundName::EdgeCount), from_int(2));
        assert_eq!(value(BoundName::AvgDegree), from_int(2));
        assert_eq!(value(BoundName::AvgDegreeSimple), from_int(2));
        assert_eq!(r.best, BigInt::from(2));
        assert!(r.get(BoundName::CaroTuzaAlpha).is_none());

        let r = bound_report(&Hypergraph::empty(5, 3).unwrap(), 0);
        assert_eq!(r.best, BigInt::from(5));
        assert!(r
            .bounds
            .iter()
            .filter(|b| b.name != BoundName::Cps)
            .filter_map(BoundValue::exact_value)
            .all(|v| *v == from_int(5)));

        let r = bound_report(&k43(), 0);
        assert_eq!(r.best, BigInt::from(2));
        assert_eq!(r.d, from_int(3));
        assert_eq!(r.delta, 3);
        assert!(!r.get(BoundName::MaxDegree).unwrap().applicable());
        assert!(!r.get(BoundName::CaroTuzaKDiag).unwrap().applicable());
    }
}
