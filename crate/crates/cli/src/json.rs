//! JSON renderings with fixed field order. Vertex ids are 1-based, matching
//! the `.hg` format. Big integers are emitted as plain JSON numbers.

use hyperindep_core::bounds::{BoundAmount, BoundReport};
use hyperindep_core::exact::{OracleOutcome, OracleResult, Witness};
use hyperindep_core::{ExtractionResult, Rational, VertexSet};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::Number;

fn big(v: &BigInt) -> Number {
    v.to_string().parse().expect("integer literal")
}

fn one_based(set: &VertexSet) -> Vec<usize> {
    set.iter().map(|v| v + 1).collect()
}

#[derive(Serialize)]
pub struct RationalJson {
    pub num: Number,
    pub den: Number,
}

impl From<&Rational> for RationalJson {
    fn from(r: &Rational) -> Self {
        RationalJson {
            num: big(r.numer()),
            den: big(r.denom()),
        }
    }
}

#[derive(Serialize)]
pub struct BoundJson {
    pub name: &'static str,
    pub num: Option<Number>,
    pub den: Option<Number>,
    pub float: Option<f64>,
    pub applicable: bool,
    pub reason: Option<String>,
}

#[derive(Serialize)]
pub struct BoundReportJson {
    pub n: usize,
    pub e: usize,
    pub s: usize,
    pub k: usize,
    pub delta: usize,
    pub d: RationalJson,
    pub bounds: Vec<BoundJson>,
    pub best: Number,
}

impl From<&BoundReport> for BoundReportJson {
    fn from(r: &BoundReport) -> Self {
        let bounds = r
            .bounds
            .iter()
            .map(|b| {
                let exact = b.amount.as_ref().and_then(BoundAmount::exact);
                BoundJson {
                    name: b.name.as_str(),
                    num: exact.map(|x| big(x.numer())),
                    den: exact.map(|x| big(x.denom())),
                    float: b.amount.as_ref().map(BoundAmount::to_f64),
                    applicable: b.applicable(),
                    reason: b.reason.clone(),
                }
            })
            .collect();
        BoundReportJson {
            n: r.n,
            e: r.e,
            s: r.s,
            k: r.k,
            delta: r.delta,
            d: (&r.d).into(),
            bounds,
            best: big(&r.best),
        }
    }
}

#[derive(Serialize)]
pub struct TraceJson {
    pub op: &'static str,
    pub vertex: usize,
    pub degree: usize,
}

#[derive(Serialize)]
pub struct ExtractionJson {
    pub algorithm: &'static str,
    pub k: usize,
    pub size: usize,
    pub set: Vec<usize>,
    pub certified_max_degree: usize,
    pub trace: Vec<TraceJson>,
}

impl From<&ExtractionResult> for ExtractionJson {
    fn from(r: &ExtractionResult) -> Self {
        ExtractionJson {
            algorithm: r.algorithm.as_str(),
            k: r.k,
            size: r.size(),
            set: one_based(&r.set),
            certified_max_degree: r.certified_max_degree,
            trace: r
                .trace
                .iter()
                .map(|s| TraceJson {
                    op: s.op.as_str(),
                    vertex: s.vertex + 1,
                    degree: s.degree,
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
#[serde(untagged)]
pub enum WitnessJson {
    Set(Vec<usize>),
    Partition(Vec<Vec<usize>>),
}

#[derive(Serialize)]
pub struct OracleJson {
    pub quantity: &'static str,
    pub k: usize,
    pub value: Option<usize>,
    pub status: &'static str,
    pub witness: Option<WitnessJson>,
    pub nodes: u64,
}

impl From<&OracleResult> for OracleJson {
    fn from(r: &OracleResult) -> Self {
        let (status, witness) = match &r.outcome {
            OracleOutcome::Exact { witness, .. } => (
                "exact",
                Some(match witness {
                    Witness::Set(s) => WitnessJson::Set(one_based(s)),
                    Witness::Partition(p) => {
                        WitnessJson::Partition(p.classes.iter().map(one_based).collect())
                    }
                }),
            ),
            OracleOutcome::BudgetExceeded => ("budget_exceeded", None),
        };
        OracleJson {
            quantity: r.quantity.as_str(),
            k: r.k,
            value: r.value(),
            status,
            witness,
            nodes: r.nodes,
        }
    }
}

pub fn to_string<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use hyperindep_core::bounds::bound_report;
    use hyperindep_core::exact::alpha_k_exact;
    use hyperindep_core::extract::thm37_extract;
    use hyperindep_core::generate::{gen_complete, gen_random_uniform};

    #[test]
    fn bound_report_field_order() {
        let h = gen_complete(4, 3).unwrap();
        let text = to_string(&BoundReportJson::from(&bound_report(&h, 1)));
        assert!(text.starts_with(
            r#"{"n":4,"e":4,"s":3,"k":1,"delta":3,"d":{"num":3,"den":1},"bounds":[{"name":"max_degree","num":4,"den":3,"float":1.3333333333333333,"applicable":true,"reason":null}"#
        ));
        assert!(text.ends_with(r#""best":2}"#));
    }

    #[test]
    fn not_applicable_bound_has_nulls() {
        let h = gen_complete(4, 2).unwrap();
        let text = to_string(&BoundReportJson::from(&bound_report(&h, 0)));
        assert!(text.contains(
            r#"{"name":"cps","num":null,"den":null,"float":null,"applicable":false,"reason":"s = 2: the bound needs s >= 3"}"#
        ));
    }

    #[test]
    fn big_rationals_stay_exact() {
        // Degree-heavy instance: the Caro–Tuza denominators exceed 64 bits.
        let h = gen_random_uniform(14, 300, 4, 5).unwrap();
        let report = bound_report(&h, 0);
        let text = to_string(&BoundReportJson::from(&report));
        let ct = report
            .get(hyperindep_core::BoundName::CaroTuzaAlpha)
            .unwrap()
            .exact_value()
            .unwrap()
            .clone();
        assert!(text.contains(&format!(r#""num":{},"den":{}"#, ct.numer(), ct.denom())));
    }

    #[test]
    fn extraction_and_oracle_shapes() {
        let h = gen_complete(4, 3).unwrap();
        let text = to_string(&ExtractionJson::from(&thm37_extract(&h, 0).unwrap()));
        assert_eq!(
            text,
            r#"{"algorithm":"thm37","k":0,"size":2,"set":[3,4],"certified_max_degree":0,"trace":[{"op":"remove","vertex":1,"degree":3},{"op":"remove","vertex":2,"degree":1}]}"#
        );
        let oracle = alpha_k_exact(&h, 1, 1000).unwrap();
        let text = to_string(&OracleJson::from(&oracle));
        assert!(text.starts_with(r#"{"quantity":"alpha_k","k":1,"value":3,"status":"exact","witness":["#));
        let starved = alpha_k_exact(&h, 0, 0).unwrap();
        assert_eq!(
            to_string(&OracleJson::from(&starved)),
            r#"{"quantity":"alpha_k","k":0,"value":null,"status":"budget_exceeded","witness":null,"nodes":0}"#
        );
    }
}
