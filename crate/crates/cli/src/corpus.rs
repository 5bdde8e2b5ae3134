//! Corpus construction. Every instance is rebuilt from the config and its
//! index alone, so a report line such as `random #17` is enough to regenerate
//! the instance anywhere.

use std::fmt;

use hyperindep_core::generate::{binomial, gen_random_uniform, in_range, pcg_stream};
use hyperindep_core::{Error as CoreError, Hypergraph};

use crate::config::{ExhaustiveSpec, RandomSpec, ReplicationSpec, VerifyConfig};

/// PCG stream offset for replication bases, keeping them independent of the
/// random corpus drawn from the same seed.
pub const REPLICATION_STREAM: u64 = 1 << 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Exhaustive,
    Random,
    Replication,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::Exhaustive => "exhaustive",
            Family::Random => "random",
            Family::Replication => "replication",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Generator parameters of a random instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Draw {
    pub n: usize,
    pub m: u64,
    pub s: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub family: Family,
    pub index: usize,
    pub draw: Option<Draw>,
    pub h: Hypergraph,
}

impl Instance {
    pub fn label(&self) -> String {
        format!("{} #{}", self.family, self.index)
    }

    pub fn origin(&self) -> String {
        match self.draw {
            Some(d) => format!(
                "{}: gen_random_uniform(n={}, m={}, s={}, seed={})",
                self.label(),
                d.n,
                d.m,
                d.s,
                d.seed
            ),
            None => format!("{}: edge subset mask {}", self.label(), self.index),
        }
    }
}

/// Instance `index` of the exhaustive family: the edges of `K_n^(s)` whose
/// lexicographic rank is a set bit of `index`.
pub fn exhaustive_instance(spec: &ExhaustiveSpec, index: usize) -> Result<Instance, CoreError> {
    let complete = hyperindep_core::generate::gen_complete(spec.n, spec.s)?;
    let edges = complete
        .edges()
        .iter()
        .enumerate()
        .filter(|(r, _)| index >> r & 1 == 1)
        .map(|(_, e)| e.clone());
    Ok(Instance {
        family: Family::Exhaustive,
        index,
        draw: None,
        h: Hypergraph::new(spec.n, spec.s, edges)?,
    })
}

pub fn exhaustive_count(spec: &ExhaustiveSpec) -> usize {
    let edges = binomial(spec.n, spec.s).expect("validated") as u32;
    1usize << edges
}

/// Draws `(n, m, s, seed)` for member `index` of a random family: `s` from
/// the list, `n` in `[max(n_min, s), n_max]`, `m` in `[0, min(m_per_n·n, C(n,s))]`.
fn draw(
    seed: u64,
    stream: u64,
    s_list: &[usize],
    n_min: usize,
    n_max: usize,
    m_per_n: usize,
) -> Draw {
    let mut rng = pcg_stream(seed, stream);
    let s = s_list[in_range(&mut rng, 0, s_list.len() as u64 - 1) as usize];
    let n = in_range(&mut rng, n_min.max(s) as u64, n_max.max(s) as u64) as usize;
    let cap = binomial(n, s).map_or(u64::MAX, |c| c.min(u128::from(u64::MAX)) as u64);
    let m = in_range(&mut rng, 0, ((m_per_n * n) as u64).min(cap));
    Draw {
        n,
        m,
        s,
        seed: in_range(&mut rng, 0, u64::MAX),
    }
}

fn from_draw(family: Family, index: usize, d: Draw) -> Result<Instance, CoreError> {
    Ok(Instance {
        family,
        index,
        draw: Some(d),
        h: gen_random_uniform(d.n, d.m, d.s, d.seed)?,
    })
}

pub fn random_instance(spec: &RandomSpec, seed: u64, index: usize) -> Result<Instance, CoreError> {
    let d = draw(seed, index as u64, &spec.s, spec.n_min, spec.n_max, spec.m_per_n);
    from_draw(Family::Random, index, d)
}

/// Base instance `index` for the replication check: `s ∈ {2, 3}`, `n` in
/// `[3, n_max]`, at most `2n` edges.
pub fn replication_instance(
    spec: &ReplicationSpec,
    seed: u64,
    index: usize,
) -> Result<Instance, CoreError> {
    let s_list: Vec<usize> = [2, 3].into_iter().filter(|&s| s <= spec.n_max).collect();
    let d = draw(seed, REPLICATION_STREAM + index as u64, &s_list, spec.n_max.min(3), spec.n_max, 2);
    from_draw(Family::Replication, index, d)
}

/// The exhaustive and random families, in that order.
pub fn build_main(cfg: &VerifyConfig) -> Result<Vec<Instance>, CoreError> {
    let mut out = Vec::new();
    if let Some(spec) = &cfg.exhaustive {
        for i in 0..exhaustive_count(spec) {
            out.push(exhaustive_instance(spec, i)?);
        }
    }
    if let Some(spec) = &cfg.random {
        for i in 0..spec.count {
            out.push(random_instance(spec, cfg.seed, i)?);
        }
    }
    Ok(out)
}

pub fn build_replication(cfg: &VerifyConfig) -> Result<Vec<Instance>, CoreError> {
    match &cfg.replication {
        Some(spec) => (0..spec.count)
            .map(|i| replication_instance(spec, cfg.seed, i))
            .collect(),
        None => Ok(Vec::new()),
    }
}
