//! Exact `α_k` and `χ_k` for small instances (at most 64 vertices).
//!
//! Vertex sets are `u64` masks and an edge lies inside a set when its mask is a
//! subset. Running out of node budget yields [`OracleOutcome::BudgetExceeded`],
//! never an approximate value.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::hypergraph::{Hypergraph, VertexSet};
use crate::partition::Partition;

pub const MAX_ORACLE_VERTICES: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    AlphaK,
    ChiK,
}

impl Quantity {
    pub fn as_str(self) -> &'static str {
        match self {
            Quantity::AlphaK => "alpha_k",
            Quantity::ChiK => "chi_k",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Set(VertexSet),
    Partition(Partition),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleOutcome {
    Exact { value: usize, witness: Witness },
    BudgetExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub quantity: Quantity,
    pub k: usize,
    pub outcome: OracleOutcome,
    /// Search nodes visited.
    pub nodes: u64,
}

impl OracleResult {
    pub fn value(&self) -> Option<usize> {
        match &self.outcome {
            OracleOutcome::Exact { value, .. } => Some(*value),
            OracleOutcome::BudgetExceeded => None,
        }
    }

    pub fn witness(&self) -> Option<&Witness> {
        match &self.outcome {
            OracleOutcome::Exact { witness, .. } => Some(witness),
            OracleOutcome::BudgetExceeded => None,
        }
    }
}

/// Bitmask view of a hypergraph.
struct Masks {
    n: usize,
    edges: Vec<u64>,
    /// Masks of the edges through each vertex.
    incident: Vec<Vec<u64>>,
}

impl Masks {
    fn new(h: &Hypergraph) -> Result<Self, Error> {
        let n = h.order();
        if n > MAX_ORACLE_VERTICES {
            return Err(Error::TooLarge {
                n,
                max: MAX_ORACLE_VERTICES,
            });
        }
        let edges: Vec<u64> = h
            .edges()
            .iter()
            .map(|e| e.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect();
        let mut incident = vec![Vec::new(); n];
        for &m in &edges {
            for v in bits(m) {
                incident[v].push(m);
            }
        }
        Ok(Masks { n, edges, incident })
    }

    fn degree_in(&self, v: usize, set: u64) -> usize {
        self.incident[v].iter().filter(|&&e| e & !set == 0).count()
    }

    fn is_k_independent(&self, set: u64, k: usize) -> bool {
        bits(set).all(|v| self.degree_in(v, set) <= k)
    }
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if m == 0 {
            return None;
        }
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        Some(v)
    })
}

fn mask_to_set(m: u64) -> VertexSet {
    VertexSet::new(bits(m).collect())
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

struct AlphaSearch<'a> {
    masks: &'a Masks,
    k: usize,
    budget: u64,
    nodes: u64,
    best: Option<u64>,
    exhausted: bool,
}

impl AlphaSearch<'_> {
    fn best_len(&self) -> Option<u32> {
        self.best.map(u64::count_ones)
    }

    fn search(&mut self, set: u64, forced: u64) {
        if self.exhausted {
            return;
        }
        if self.nodes >= self.budget {
            self.exhausted = true;
            return;
        }
        self.nodes += 1;
        if self.best_len().is_some_and(|b| set.count_ones() <= b) {
            return;
        }
        // Branch on the most violated vertex, lowest id on ties.
        let mut branch: Option<(usize, usize)> = None;
        for v in bits(set) {
            let d = self.masks.degree_in(v, set);
            if d > self.k && branch.is_none_or(|(_, bd)| d > bd) {
                branch = Some((v, d));
            }
        }
        let Some((v, _)) = branch else {
            self.best = Some(set);
            return;
        };
        // Any valid subset misses a vertex of these k+1 edges.
        let union = self.masks.incident[v]
            .iter()
            .filter(|&&e| e & !set == 0)
            .take(self.k + 1)
            .fold(0u64, |acc, &e| acc | e);
        let mut keep = forced;
        for u in bits(union & !forced) {
            self.search(set & !(1 << u), keep);
            keep |= 1 << u;
        }
    }
}

/// Branch-and-bound `α_k`.
pub fn alpha_k_exact(h: &Hypergraph, k: usize, budget: u64) -> Result<OracleResult, Error> {
    let masks = Masks::new(h)?;
    let mut search = AlphaSearch {
        masks: &masks,
        k,
        budget,
        nodes: 0,
        best: None,
        exhausted: false,
    };
    search.search(full_mask(masks.n), 0);
    let outcome = match (search.exhausted, search.best) {
        (false, Some(best)) => OracleOutcome::Exact {
            value: best.count_ones() as usize,
            witness: Witness::Set(mask_to_set(best)),
        },
        // The empty set is always k-independent, so an unfinished search is
        // the only way to end without a best set.
        _ => OracleOutcome::BudgetExceeded,
    };
    Ok(OracleResult {
        quantity: Quantity::AlphaK,
        k,
        outcome,
        nodes: search.nodes,
    })
}

/// Largest order accepted by [`alpha_k_sweep`].
pub const MAX_SWEEP_VERTICES: usize = 24;

/// Reference `α_k` by checking all `2^n` subsets.
pub fn alpha_k_sweep(h: &Hypergraph, k: usize) -> Result<(usize, VertexSet), Error> {
    let n = h.order();
    if n > MAX_SWEEP_VERTICES {
        return Err(Error::TooLarge {
            n,
            max: MAX_SWEEP_VERTICES,
        });
    }
    let masks = Masks::new(h)?;
    let mut best = 0u64;
    for set in 0..=full_mask(n) {
        if set.count_ones() > best.count_ones() && masks.is_k_independent(set, k) {
            best = set;
        }
    }
    Ok((best.count_ones() as usize, mask_to_set(best)))
}

struct ChiSearch<'a> {
    masks: &'a Masks,
    k: usize,
    budget: u64,
    nodes: u64,
    class_of: Vec<usize>,
    /// Induced degree of each vertex within its class, over assigned vertices.
    degree: Vec<usize>,
    /// Edges whose highest vertex is `v`; they close when `v` is assigned.
    closing: Vec<Vec<u64>>,
}

impl ChiSearch<'_> {
    /// `Some(true)` if vertices `v..n` can be placed in `classes` classes,
    /// `None` if the budget ran out.
    fn assign(&mut self, v: usize, used: usize, classes: usize) -> Option<bool> {
        if v == self.masks.n {
            return Some(true);
        }
        for c in 0..classes.min(used + 1) {
            if self.nodes >= self.budget {
                return None;
            }
            self.nodes += 1;
            self.class_of[v] = c;
            let mut closed = Vec::new();
            for &e in &self.closing[v] {
                if bits(e).all(|u| self.class_of[u] == c) {
                    closed.push(e);
                }
            }
            for &e in &closed {
                for u in bits(e) {
                    self.degree[u] += 1;
                }
            }
            let ok = closed
                .iter()
                .all(|&e| bits(e).all(|u| self.degree[u] <= self.k));
            let found = if ok {
                self.assign(v + 1, used.max(c + 1), classes)
            } else {
                Some(false)
            };
            for &e in &closed {
                for u in bits(e) {
                    self.degree[u] -= 1;
                }
            }
            match found {
                Some(false) => {}
                other => return other,
            }
        }
        Some(false)
    }
}

/// `χ_k` by iterative deepening on the class count; `k >= 1`.
pub fn chi_k_exact(h: &Hypergraph, k: usize, budget: u64) -> Result<OracleResult, Error> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    let masks = Masks::new(h)?;
    let n = masks.n;
    let mut closing = vec![Vec::new(); n];
    for &e in &masks.edges {
        closing[63 - e.leading_zeros() as usize].push(e);
    }
    let mut search = ChiSearch {
        masks: &masks,
        k,
        budget,
        nodes: 0,
        class_of: vec![0; n],
        degree: vec![0; n],
        closing,
    };
    // ⌊Δ/(k+1)⌋ + 1 classes always suffice, so the loop ends.
    for classes in 1..=n {
        match search.assign(0, 0, classes) {
            Some(true) => {
                let partition = Partition::from_assignment(h, &search.class_of, classes);
                return Ok(OracleResult {
                    quantity: Quantity::ChiK,
                    k,
                    outcome: OracleOutcome::Exact {
                        value: classes,
                        witness: Witness::Partition(partition),
                    },
                    nodes: search.nodes,
                });
            }
            Some(false) => {}
            None => break,
        }
    }
    Ok(OracleResult {
        quantity: Quantity::ChiK,
        k,
        outcome: OracleOutcome::BudgetExceeded,
        nodes: search.nodes,
    })
}
