//! Defective colouring: split `V(H)` into classes that each induce maximum
//! degree at most `k`.
//!
//! Local search on the number of monochromatic edges (edges whose vertices all
//! share a class). A vertex `v` with more than `k` monochromatic edges moves to
//! the class where it would have the fewest. Each edge through `v` can be
//! monochromatic in at most one class, so with `c` classes some class offers at
//! most `⌊(Δ - deg_own)/(c - 1)⌋` edges; for `c = ⌈Δ/k⌉` or
//! `c = ⌊Δ/(k+1)⌋ + 1` that is below the current count and the potential
//! drops by at least one per move.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::extract::{TraceOp, TraceStep};
use crate::hypergraph::{Hypergraph, VertexSet};

/// Disjoint classes covering `V(H)`, with the induced max degree of each.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    pub classes: Vec<VertexSet>,
    pub class_max_degrees: Vec<usize>,
}

impl Partition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn max_class_degree(&self) -> usize {
        self.class_max_degrees.iter().copied().max().unwrap_or(0)
    }

    /// Index of the largest class, lowest index on ties.
    pub fn largest_class(&self) -> usize {
        let mut best = 0;
        for (i, c) in self.classes.iter().enumerate() {
            if c.len() > self.classes[best].len() {
                best = i;
            }
        }
        best
    }

    /// Checks the classes are a disjoint cover of `0..n`.
    pub fn is_cover_of(&self, n: usize) -> bool {
        let mut seen = vec![false; n];
        for v in self.classes.iter().flat_map(VertexSet::iter) {
            if v >= n || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        seen.into_iter().all(|x| x)
    }

    pub(crate) fn from_assignment(h: &Hypergraph, class_of: &[usize], classes: usize) -> Self {
        let mut members = vec![Vec::new(); classes];
        for (v, &c) in class_of.iter().enumerate() {
            members[c].push(v);
        }
        let classes: Vec<VertexSet> = members.into_iter().map(VertexSet::new).collect();
        let class_max_degrees = classes
            .iter()
            .map(|c| h.induced_max_degree(c).expect("ids in range"))
            .collect();
        Partition {
            classes,
            class_max_degrees,
        }
    }
}

/// Result of a local-search run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionRun {
    pub partition: Partition,
    /// Every move, with the induced degree the vertex had before moving.
    pub moves: Vec<TraceStep>,
    /// Times a violating vertex had no improving class and a new class was
    /// opened. Zero whenever the requested class count is large enough.
    pub fallback_events: usize,
}

/// Local search starting from the round-robin assignment `v -> v mod classes`.
pub fn local_search(h: &Hypergraph, k: usize, classes: usize) -> PartitionRun {
    let n = h.order();
    let classes = classes.max(1);
    let incidence = h.incidence();
    let edges = h.edges();
    let mut class_of: Vec<usize> = (0..n).map(|v| v % classes).collect();
    let mut class_count = classes;

    let monochromatic =
        |class_of: &[usize], e: &[usize]| e.iter().all(|&u| class_of[u] == class_of[e[0]]);
    let mut mono: Vec<bool> = edges.iter().map(|e| monochromatic(&class_of, e)).collect();
    let mut degree = vec![0usize; n];
    for (e, _) in edges.iter().zip(&mono).filter(|(_, &m)| m) {
        for &u in e {
            degree[u] += 1;
        }
    }

    let mut moves = Vec::new();
    let mut fallback_events = 0;
    while let Some(v) = (0..n).find(|&v| degree[v] > k) {
        // Edges through v that would be monochromatic if v joined class j.
        let mut prospective = vec![0usize; class_count];
        for &ei in &incidence[v] {
            let mut others = edges[ei].iter().filter(|&&u| u != v);
            let first = *others.next().expect("s >= 2");
            let target = class_of[first];
            if others.all(|&u| class_of[u] == target) {
                prospective[target] += 1;
            }
        }
        let own = class_of[v];
        let target = (0..class_count)
            .filter(|&j| j != own)
            .min_by_key(|&j| (prospective[j], j))
            .filter(|&j| prospective[j] < degree[v]);
        let target = match target {
            Some(j) => j,
            None => {
                fallback_events += 1;
                class_count += 1;
                class_count - 1
            }
        };
        moves.push(TraceStep {
            op: TraceOp::Move,
            vertex: v,
            degree: degree[v],
        });
        class_of[v] = target;
        for &ei in &incidence[v] {
            let now = monochromatic(&class_of, &edges[ei]);
            if now != mono[ei] {
                for &u in &edges[ei] {
                    if now {
                        degree[u] += 1;
                    } else {
                        degree[u] -= 1;
                    }
                }
                mono[ei] = now;
            }
        }
    }

    PartitionRun {
        partition: Partition::from_assignment(h, &class_of, class_count),
        moves,
        fallback_events,
    }
}

/// Class count `⌈Δ/k⌉` (at least one) used by [`k_partition`].
pub fn ceil_classes(h: &Hypergraph, k: usize) -> usize {
    h.max_degree().div_ceil(k).max(1)
}

/// Exactly `⌈Δ/k⌉` classes (one when `Δ <= k`), each inducing max degree at
/// most `k`. Classes may be empty when `⌈Δ/k⌉ > n`.
pub fn k_partition(h: &Hypergraph, k: usize) -> Result<PartitionRun, Error> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    Ok(local_search(h, k, ceil_classes(h, k)))
}

/// `⌊Δ/(k+1)⌋ + 1` classes; defined for every `k >= 0`.
pub fn lovasz_partition(h: &Hypergraph, k: usize) -> PartitionRun {
    local_search(h, k, h.max_degree() / (k + 1) + 1)
}
