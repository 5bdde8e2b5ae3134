//! Constructive k-independent sets.
//!
//! * [`greedy_peel`]: delete a vertex of current degree `>= k+1` until none is
//!   left; at least `n - e/(k+1)` vertices survive.
//! * [`thm37_extract`]: band-by-band threshold peeling that reaches
//!   `⌈f(2e/(n(k+1))) · n⌉`.
//! * [`partition_extract`]: largest class of a `⌈Δ/k⌉`-class defective
//!   colouring.
//! * [`best_extract`]: best of the above, made maximal by re-adding vertices.
//!
//! Every result is checked against the input hypergraph before it is returned.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::ToPrimitive;

use crate::bounds::avg_degree_argument;
use crate::error::Error;
use crate::hypergraph::{Hypergraph, KIndependence, VertexSet};
use crate::partition::{k_partition, lovasz_partition, PartitionRun};
use crate::rational::{self, ratio, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Greedy,
    Thm37,
    Partition,
    Best,
}

impl Algorithm {
    pub fn as_str(self) -> &'static str {
        match self {
            Algorithm::Greedy => "greedy",
            Algorithm::Thm37 => "thm37",
            Algorithm::Partition => "partition",
            Algorithm::Best => "best",
        }
    }

    pub fn parse(name: &str) -> Option<Algorithm> {
        [
            Algorithm::Greedy,
            Algorithm::Thm37,
            Algorithm::Partition,
            Algorithm::Best,
        ]
        .into_iter()
        .find(|a| a.as_str() == name)
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TraceOp {
    Remove,
    Move,
}

impl TraceOp {
    pub fn as_str(self) -> &'static str {
        match self {
            TraceOp::Remove => "remove",
            TraceOp::Move => "move",
        }
    }
}

/// One algorithm step on an original vertex id, with the degree that
/// triggered it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TraceStep {
    pub op: TraceOp,
    pub vertex: usize,
    pub degree: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtractionResult {
    pub set: VertexSet,
    pub k: usize,
    pub algorithm: Algorithm,
    pub trace: Vec<TraceStep>,
    pub certified_max_degree: usize,
}

impl ExtractionResult {
    pub fn size(&self) -> usize {
        self.set.len()
    }

    fn certified(
        h: &Hypergraph,
        set: VertexSet,
        k: usize,
        algorithm: Algorithm,
        trace: Vec<TraceStep>,
    ) -> Result<Self, Error> {
        match h.is_k_independent(&set, k)? {
            KIndependence::Independent { max_degree } => Ok(ExtractionResult {
                set,
                k,
                algorithm,
                trace,
                certified_max_degree: max_degree,
            }),
            KIndependence::Violated { degree, .. } => Err(Error::NotIndependent {
                k,
                max_degree: degree,
            }),
        }
    }
}

/// Mutable working copy for vertex deletion.
struct Peeler<'a> {
    h: &'a Hypergraph,
    incidence: Vec<Vec<usize>>,
    vertex_alive: Vec<bool>,
    edge_alive: Vec<bool>,
    degree: Vec<usize>,
    vertices: usize,
    edges: usize,
}

impl<'a> Peeler<'a> {
    fn new(h: &'a Hypergraph) -> Self {
        Peeler {
            h,
            incidence: h.incidence(),
            vertex_alive: vec![true; h.order()],
            edge_alive: vec![true; h.edge_count()],
            degree: h.degrees(),
            vertices: h.order(),
            edges: h.edge_count(),
        }
    }

    /// Live vertex of maximum current degree, lowest id on ties.
    fn max_degree_vertex(&self) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for v in (0..self.degree.len()).filter(|&v| self.vertex_alive[v]) {
            if best.is_none_or(|(_, d)| self.degree[v] > d) {
                best = Some((v, self.degree[v]));
            }
        }
        best
    }

    fn remove(&mut self, v: usize) {
        debug_assert!(self.vertex_alive[v]);
        self.vertex_alive[v] = false;
        self.vertices -= 1;
        for &ei in &self.incidence[v] {
            if self.edge_alive[ei] {
                self.edge_alive[ei] = false;
                self.edges -= 1;
                for &u in &self.h.edges()[ei] {
                    self.degree[u] -= 1;
                }
            }
        }
    }

    /// Removes max-degree vertices while one has degree `>= threshold`, at
    /// most `cap` times. Returns the number removed.
    fn peel(&mut self, threshold: usize, cap: Option<usize>, trace: &mut Vec<TraceStep>) -> usize {
        let mut removed = 0;
        while cap.is_none_or(|c| removed < c) {
            match self.max_degree_vertex() {
                Some((v, d)) if d >= threshold => {
                    trace.push(TraceStep {
                        op: TraceOp::Remove,
                        vertex: v,
                        degree: d,
                    });
                    self.remove(v);
                    removed += 1;
                }
                _ => break,
            }
        }
        removed
    }

    fn survivors(&self) -> VertexSet {
        VertexSet::new(
            (0..self.vertex_alive.len())
                .filter(|&v| self.vertex_alive[v])
                .collect(),
        )
    }

    fn max_degree(&self) -> usize {
        self.max_degree_vertex().map_or(0, |(_, d)| d)
    }
}

/// Peels vertices of degree `>= threshold` (default `k + 1`), highest degree
/// first and lowest id on ties. Fails with [`Error::NotIndependent`] if a
/// custom threshold leaves a set that is not k-independent.
pub fn greedy_peel(
    h: &Hypergraph,
    k: usize,
    threshold: Option<usize>,
) -> Result<ExtractionResult, Error> {
    let threshold = threshold.unwrap_or(k + 1).max(1);
    let mut peeler = Peeler::new(h);
    let mut trace = Vec::new();
    peeler.peel(threshold, None, &mut trace);
    ExtractionResult::certified(h, peeler.survivors(), k, Algorithm::Greedy, trace)
}

/// Book-keeping for one peeling phase of [`thm37_extract_detailed`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeelPhase {
    /// Live vertices and edges when the phase started.
    pub n: usize,
    pub e: usize,
    /// Band `r >= 1`: `r < 2e/(n(k+1)) <= r + 1`.
    pub band: usize,
    /// `t = (2e - n r (k+1)) / ((r+2)(k+1))`.
    pub t: Rational,
    /// Removal cap `⌈t⌉`.
    pub cap: usize,
    /// Removal threshold `(r+1)(k+1)`.
    pub threshold: usize,
    pub removed: usize,
    /// After a full `cap`-removal phase: whether the remainder has
    /// `2e'/(n'(k+1)) <= r`.
    pub remainder_in_lower_band: Option<bool>,
    /// After an early stop with `k >= 1`: whether `⌈Δ'/k⌉ <= r + 1`.
    pub early_stop_ceil_classes_ok: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Thm37Report {
    pub result: ExtractionResult,
    pub phases: Vec<PeelPhase>,
    /// Classes used when the band peeling stalled and the remainder was
    /// coloured instead.
    pub partition_classes: Option<usize>,
    /// Size reached by the band procedure alone, before comparing against
    /// plain greedy peeling.
    pub procedure_size: usize,
    /// Plain greedy peeling did strictly better than the band procedure.
    pub greedy_won: bool,
}

fn band_of(n: usize, e: usize, k: usize) -> usize {
    // ⌈x⌉ - 1 with x = 2e/(n(k+1)) > 0.
    let x = ratio(2 * e, n * (k + 1));
    rational::ceil(&x).to_usize().expect("small band") - 1
}

/// Average-degree extraction, returning per-phase diagnostics.
///
/// While edges remain, let `r` be the band of the current average degree. In
/// band 0 peel with threshold `k + 1` and stop. Otherwise remove up to `⌈t⌉`
/// vertices of degree `>= (r+1)(k+1)`; each such removal keeps
/// `(2/(r+2))(n - e/((r+1)(k+1)))`, a lower supporting line of
/// `f(2e/(n(k+1))) n`, from decreasing. If no vertex qualifies the remainder
/// has `Δ < (r+1)(k+1)` and a `⌊Δ/(k+1)⌋ + 1 <= r + 1` class partition
/// supplies a class of size `>= n/(r+1)`.
pub fn thm37_extract_detailed(h: &Hypergraph, k: usize) -> Result<Thm37Report, Error> {
    let mut peeler = Peeler::new(h);
    let mut trace = Vec::new();
    let mut phases = Vec::new();
    let mut partition_classes = None;
    let mut set = None;

    while peeler.edges > 0 {
        let (n, e) = (peeler.vertices, peeler.edges);
        let band = band_of(n, e, k);
        if band == 0 {
            peeler.peel(k + 1, None, &mut trace);
            break;
        }
        let t = ratio(2 * e - n * band * (k + 1), (band + 2) * (k + 1));
        let cap = rational::ceil(&t).to_usize().expect("cap fits");
        let threshold = (band + 1) * (k + 1);
        let removed = peeler.peel(threshold, Some(cap), &mut trace);
        let mut phase = PeelPhase {
            n,
            e,
            band,
            t,
            cap,
            threshold,
            removed,
            remainder_in_lower_band: None,
            early_stop_ceil_classes_ok: None,
        };
        if removed == cap {
            phase.remainder_in_lower_band =
                Some(peeler.vertices == 0 || 2 * peeler.edges <= peeler.vertices * band * (k + 1));
        } else if k >= 1 {
            phase.early_stop_ceil_classes_ok = Some(peeler.max_degree().div_ceil(k) <= band + 1);
        }
        phases.push(phase);

        if removed == 0 {
            let remainder = peeler.survivors();
            let sub = h.induced(&remainder)?;
            let run = lovasz_partition(&sub, k);
            partition_classes = Some(run.partition.len());
            let to_original = |v: usize| remainder.members()[v];
            trace.extend(run.moves.iter().map(|m| TraceStep {
                vertex: to_original(m.vertex),
                ..*m
            }));
            let best = &run.partition.classes[run.partition.largest_class()];
            set = Some(best.iter().map(to_original).collect::<VertexSet>());
            break;
        }
    }

    let set = set.unwrap_or_else(|| peeler.survivors());
    let procedure_size = set.len();
    let greedy = greedy_peel(h, k, None)?;
    let greedy_won = greedy.size() > procedure_size;
    let (set, trace) = if greedy_won {
        (greedy.set, greedy.trace)
    } else {
        (set, trace)
    };
    Ok(Thm37Report {
        result: ExtractionResult::certified(h, set, k, Algorithm::Thm37, trace)?,
        phases,
        partition_classes,
        procedure_size,
        greedy_won,
    })
}

/// Average-degree extraction; size at least `⌈f(2e/(n(k+1))) · n⌉`.
pub fn thm37_extract(h: &Hypergraph, k: usize) -> Result<ExtractionResult, Error> {
    thm37_extract_detailed(h, k).map(|r| r.result)
}

/// The guaranteed size `⌈f(2e/(n(k+1))) · n⌉` of [`thm37_extract`].
pub fn thm37_target(h: &Hypergraph, k: usize) -> usize {
    let f = crate::bounds::eval_f(&avg_degree_argument(h, k)).expect("non-negative");
    rational::ceil(&(f * rational::from_int(h.order())))
        .to_usize()
        .expect("target fits")
}

/// Largest class of [`k_partition`], together with the full run.
pub fn partition_extract_detailed(
    h: &Hypergraph,
    k: usize,
) -> Result<(ExtractionResult, PartitionRun), Error> {
    let run = k_partition(h, k)?;
    let set = run.partition.classes[run.partition.largest_class()].clone();
    let result = ExtractionResult::certified(h, set, k, Algorithm::Partition, run.moves.clone())?;
    Ok((result, run))
}

/// Largest class of a `⌈Δ/k⌉`-class partition; `k >= 1`.
pub fn partition_extract(h: &Hypergraph, k: usize) -> Result<ExtractionResult, Error> {
    partition_extract_detailed(h, k).map(|(r, _)| r)
}

/// Adds every vertex outside `set`, in ascending id order, whose addition keeps
/// the set k-independent. The result is maximal.
pub fn augment(h: &Hypergraph, set: &VertexSet, k: usize) -> Result<VertexSet, Error> {
    let n = h.order();
    let incidence = h.incidence();
    let edges = h.edges();
    let mut inside = vec![false; n];
    for v in set.iter() {
        inside[v] = true;
    }
    let mut degree = vec![0usize; n];
    for (v, d) in set.iter().zip(h.induced_degrees(set)?) {
        degree[v] = d;
    }
    let mut bump = vec![0usize; n];
    for v in 0..n {
        if inside[v] {
            continue;
        }
        let closing: Vec<usize> = incidence[v]
            .iter()
            .copied()
            .filter(|&ei| edges[ei].iter().all(|&u| u == v || inside[u]))
            .collect();
        if closing.len() > k {
            continue;
        }
        let touched: Vec<usize> = closing
            .iter()
            .flat_map(|&ei| edges[ei].iter().copied())
            .filter(|&u| u != v)
            .collect();
        for &u in &touched {
            bump[u] += 1;
        }
        let fits = touched.iter().all(|&u| degree[u] + bump[u] <= k);
        if fits {
            for &u in &touched {
                degree[u] += bump[u];
                bump[u] = 0;
            }
            degree[v] = closing.len();
            inside[v] = true;
        }
        for &u in &touched {
            bump[u] = 0;
        }
    }
    Ok(VertexSet::new((0..n).filter(|&v| inside[v]).collect()))
}

/// Best of greedy peeling, average-degree extraction and (for `k >= 1`)
/// partition extraction, then made maximal. Ties keep the earlier candidate in
/// that order.
pub fn best_extract(h: &Hypergraph, k: usize) -> Result<ExtractionResult, Error> {
    let mut best = greedy_peel(h, k, None)?;
    let mut candidates = vec![thm37_extract(h, k)?];
    if k >= 1 {
        candidates.push(partition_extract(h, k)?);
    }
    for c in candidates {
        if c.size() > best.size() {
            best = c;
        }
    }
    let set = augment(h, &best.set, k)?;
    ExtractionResult::certified(h, set, k, Algorithm::Best, best.trace)
}
