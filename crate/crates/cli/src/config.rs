//! Flat `key = value` configuration for `verify`.
//!
//! Blank lines and lines starting with `#` are ignored. Lists are
//! comma-separated; ranges are written `lo..hi` (inclusive). Unknown keys are
//! errors so typos do not silently fall back to defaults.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use hyperindep_core::BoundName;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    BoundSoundness,
    Extraction,
    FgProperties,
    Replication,
    Partition,
    OracleAgreement,
    Remark,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::BoundSoundness,
        Check::Extraction,
        Check::FgProperties,
        Check::Replication,
        Check::Partition,
        Check::OracleAgreement,
        Check::Remark,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Check::BoundSoundness => "bound-soundness",
            Check::Extraction => "extraction",
            Check::FgProperties => "fg-properties",
            Check::Replication => "replication",
            Check::Partition => "partition",
            Check::OracleAgreement => "oracle-agreement",
            Check::Remark => "remark",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Check {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Check::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| ConfigError::Value {
                key: "checks".into(),
                value: s.into(),
            })
    }
}

/// A deliberately corrupted bound, used to self-test the harness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Adds one to the named bound before comparing it with the oracle.
    Inflate(BoundName),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExhaustiveSpec {
    pub n: usize,
    pub s: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RandomSpec {
    pub count: usize,
    pub n_min: usize,
    pub n_max: usize,
    /// Edge counts are drawn from `0..=m_per_n * n`, capped at `C(n, s)`.
    pub m_per_n: usize,
    pub s: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReplicationSpec {
    pub count: usize,
    pub n_max: usize,
    pub copies: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyConfig {
    pub exhaustive: Option<ExhaustiveSpec>,
    pub random: Option<RandomSpec>,
    pub replication: Option<ReplicationSpec>,
    pub k_values: Vec<usize>,
    pub seed: u64,
    pub budget: u64,
    /// Oracle self-agreement runs on instances up to this order.
    pub sweep_max_n: usize,
    /// Exact `χ_k` runs on instances up to this order.
    pub chi_max_n: usize,
    pub checks: Vec<Check>,
    pub output: Option<PathBuf>,
    pub fault: Option<Fault>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            exhaustive: Some(ExhaustiveSpec { n: 5, s: 3 }),
            random: Some(RandomSpec {
                count: 500,
                n_min: 8,
                n_max: 14,
                m_per_n: 3,
                s: vec![2, 3, 4],
            }),
            replication: Some(ReplicationSpec {
                count: 20,
                n_max: 7,
                copies: vec![2, 3],
            }),
            k_values: vec![0, 1, 2, 3],
            seed: 20_240_601,
            budget: 50_000_000,
            sweep_max_n: 12,
            chi_max_n: 14,
            checks: Check::ALL.to_vec(),
            output: None,
            fault: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConfigError {
    #[error("line {0}: expected `key = value`")]
    Syntax(usize),
    #[error("unknown key `{0}`")]
    UnknownKey(String),
    #[error("bad value `{value}` for `{key}`")]
    Value { key: String, value: String },
    #[error("{0}")]
    Invalid(String),
}

fn parse_num<T: FromStr>(key: &str, value: &str) -> Result<T, ConfigError> {
    value.trim().parse().map_err(|_| ConfigError::Value {
        key: key.into(),
        value: value.into(),
    })
}

fn parse_list<T: FromStr>(key: &str, value: &str) -> Result<Vec<T>, ConfigError> {
    if value.trim().is_empty() {
        return Ok(Vec::new());
    }
    value.split(',').map(|v| parse_num(key, v)).collect()
}

fn parse_range(key: &str, value: &str) -> Result<(usize, usize), ConfigError> {
    let bad = || ConfigError::Value {
        key: key.into(),
        value: value.into(),
    };
    let (lo, hi) = value.split_once("..").ok_or_else(bad)?;
    let lo = parse_num(key, lo)?;
    let hi = parse_num(key, hi)?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn on_off(key: &str, value: &str) -> Result<bool, ConfigError> {
    match value {
        "on" | "true" | "yes" => Ok(true),
        "off" | "false" | "no" => Ok(false),
        _ => Err(ConfigError::Value {
            key: key.into(),
            value: value.into(),
        }),
    }
}

impl VerifyConfig {
    /// Starts from [`VerifyConfig::default`] and applies every key in `text`.
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let mut cfg = VerifyConfig::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or(ConfigError::Syntax(i + 1))?;
            cfg.apply(key.trim(), value.trim())?;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    fn apply(&mut self, key: &str, value: &str) -> Result<(), ConfigError> {
        let exhaustive = || ExhaustiveSpec { n: 5, s: 3 };
        let random = || VerifyConfig::default().random.expect("default random");
        let replication = || VerifyConfig::default().replication.expect("default replication");
        match key {
            "exhaustive" => {
                self.exhaustive = on_off(key, value)?.then(|| self.exhaustive.clone().unwrap_or_else(exhaustive))
            }
            "exhaustive_n" => self.exhaustive.get_or_insert_with(exhaustive).n = parse_num(key, value)?,
            "exhaustive_s" => self.exhaustive.get_or_insert_with(exhaustive).s = parse_num(key, value)?,
            "random" => {
                self.random = on_off(key, value)?.then(|| self.random.clone().unwrap_or_else(random))
            }
            "random_count" => self.random.get_or_insert_with(random).count = parse_num(key, value)?,
            "random_n" => {
                let (lo, hi) = parse_range(key, value)?;
                let r = self.random.get_or_insert_with(random);
                r.n_min = lo;
                r.n_max = hi;
            }
            "random_m_per_n" => self.random.get_or_insert_with(random).m_per_n = parse_num(key, value)?,
            "random_s" => self.random.get_or_insert_with(random).s = parse_list(key, value)?,
            "replication" => {
                self.replication =
                    on_off(key, value)?.then(|| self.replication.clone().unwrap_or_else(replication))
            }
            "replication_count" => {
                self.replication.get_or_insert_with(replication).count = parse_num(key, value)?
            }
            "replication_n_max" => {
                self.replication.get_or_insert_with(replication).n_max = parse_num(key, value)?
            }
            "replication_copies" => {
                self.replication.get_or_insert_with(replication).copies = parse_list(key, value)?
            }
            "k" => self.k_values = parse_list(key, value)?,
            "seed" => self.seed = parse_num(key, value)?,
            "budget" => self.budget = parse_num(key, value)?,
            "sweep_max_n" => self.sweep_max_n = parse_num(key, value)?,
            "chi_max_n" => self.chi_max_n = parse_num(key, value)?,
            "checks" => {
                self.checks = if value == "all" {
                    Check::ALL.to_vec()
                } else {
                    parse_list(key, value)?
                }
            }
            "output" => self.output = Some(PathBuf::from(value)),
            "fault" => {
                self.fault = match value.split_once(':') {
                    None if value == "none" => None,
                    Some(("inflate", name)) => Some(Fault::Inflate(BoundName::parse(name).ok_or_else(|| {
                        ConfigError::Value {
                            key: key.into(),
                            value: value.into(),
                        }
                    })?)),
                    _ => {
                        return Err(ConfigError::Value {
                            key: key.into(),
                            value: value.into(),
                        })
                    }
                }
            }
            _ => return Err(ConfigError::UnknownKey(key.into())),
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        let invalid = |msg: &str| Err(ConfigError::Invalid(msg.into()));
        if let Some(e) = &self.exhaustive {
            if e.s < 2 || e.s > e.n {
                return invalid("exhaustive corpus needs 2 <= s <= n");
            }
            match hyperindep_core::generate::binomial(e.n, e.s) {
                Some(c) if c <= 20 => {}
                _ => return invalid("exhaustive corpus limited to C(n, s) <= 20 possible edges"),
            }
        }
        if let Some(r) = &self.random {
            if r.n_min == 0 || r.s.is_empty() || r.s.iter().any(|&s| s < 2 || s > r.n_min) {
                return invalid("random corpus needs a non-empty s list with 2 <= s <= n_min");
            }
            if r.n_max > 64 {
                return invalid("random corpus limited to n <= 64");
            }
        }
        if let Some(r) = &self.replication {
            if r.n_max < 2 || r.copies.is_empty() || r.copies.contains(&0) {
                return invalid("replication needs n_max >= 2 and positive copy counts");
            }
        }
        if self.k_values.is_empty() {
            return invalid("k list is empty");
        }
        if self.checks.is_empty() {
            return invalid("no checks selected");
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_match_acceptance_corpus() {
        let cfg = VerifyConfig::parse("# nothing\n").unwrap();
        assert_eq!(cfg, VerifyConfig::default());
        assert_eq!(cfg.exhaustive, Some(ExhaustiveSpec { n: 5, s: 3 }));
        assert_eq!(cfg.random.as_ref().unwrap().count, 500);
        assert_eq!(cfg.k_values, [0, 1, 2, 3]);
    }

    #[test]
    fn overrides() {
        let cfg = VerifyConfig::parse(
            "random_count = 7\nrandom_n = 6..9\nrandom_s = 2,3\nk = 1\nchecks = extraction,remark\nexhaustive = off\nfault = inflate:avg_degree\nseed = 9\n",
        )
        .unwrap();
        let r = cfg.random.unwrap();
        assert_eq!((r.count, r.n_min, r.n_max), (7, 6, 9));
        assert_eq!(r.s, [2, 3]);
        assert_eq!(cfg.k_values, [1]);
        assert_eq!(cfg.checks, [Check::Extraction, Check::Remark]);
        assert!(cfg.exhaustive.is_none());
        assert_eq!(cfg.fault, Some(Fault::Inflate(BoundName::AvgDegree)));
        assert_eq!(cfg.seed, 9);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(VerifyConfig::parse("nonsense").unwrap_err(), ConfigError::Syntax(1));
        assert_eq!(
            VerifyConfig::parse("colour = blue").unwrap_err(),
            ConfigError::UnknownKey("colour".into())
        );
        assert!(matches!(
            VerifyConfig::parse("random_n = 9..3"),
            Err(ConfigError::Value { .. })
        ));
        assert!(matches!(
            VerifyConfig::parse("checks = everything"),
            Err(ConfigError::Value { .. })
        ));
        assert!(matches!(VerifyConfig::parse("k = "), Err(ConfigError::Invalid(_))));
        assert!(matches!(
            VerifyConfig::parse("exhaustive_n = 7"),
            Err(ConfigError::Invalid(_))
        ));
    }
}
