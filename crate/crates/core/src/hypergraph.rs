//! The s-uniform hypergraph value type and its degree arithmetic.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::rational::{ratio, Rational};

/// An immutable s-uniform hypergraph on the vertices `0..n`.
///
/// Edges are strictly increasing vertex lists kept in lexicographic order, so
/// two equal hypergraphs compare (and serialize) identically. Multi-edges are
/// rejected.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    s: usize,
    edges: Vec<Vec<usize>>,
}

/// Degree data of a hypergraph: `sum(degrees) = s * e`, `avg_degree = s * e / n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub max_degree: usize,
    pub avg_degree: Rational,
}

/// A strictly increasing list of vertex ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSet(members)
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    fn check_range(&self, n: usize) -> Result<(), Error> {
        match self.0.last() {
            Some(&v) if v >= n => Err(Error::VertexOutOfRange { vertex: v, n }),
            _ => Ok(()),
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter.into_iter().collect())
    }
}

/// Outcome of a k-independence check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KIndependence {
    /// Every vertex of the set has induced degree at most `k`.
    Independent { max_degree: usize },
    /// `vertex` lies in `degree > k` edges inside the set; `witness` holds
    /// `k + 1` of them.
    Violated {
        vertex: usize,
        degree: usize,
        witness: Vec<Vec<usize>>,
    },
}

impl KIndependence {
    pub fn holds(&self) -> bool {
        matches!(self, KIndependence::Independent { .. })
    }
}

impl Hypergraph {
    /// Builds a hypergraph from edges in any order. Vertices inside an edge may
    /// be listed in any order; the stored form is canonical.
    pub fn new<I>(n: usize, s: usize, edges: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = Vec<usize>>,
    {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        if s < 2 {
            return Err(Error::Uniformity(s));
        }
        let mut canonical = edges
            .into_iter()
            .enumerate()
            .map(|(i, e)| Self::canonical_edge(n, s, i, e))
            .collect::<Result<Vec<_>, _>>()?;
        canonical.sort_unstable();
        if let Some(w) = canonical.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].clone()));
        }
        Ok(Hypergraph {
            n,
            s,
            edges: canonical,
        })
    }

    /// Edge-free hypergraph on `n` vertices.
    pub fn empty(n: usize, s: usize) -> Result<Self, Error> {
        Self::new(n, s, Vec::new())
    }

    /// Sorts one edge and checks arity, range and repeated vertices. `index`
    /// only labels the error.
    pub fn canonical_edge(
        n: usize,
        s: usize,
        index: usize,
        mut edge: Vec<usize>,
    ) -> Result<Vec<usize>, Error> {
        if edge.len() != s {
            return Err(Error::EdgeArity {
                edge: index,
                expected: s,
                found: edge.len(),
            });
        }
        if let Some(&v) = edge.iter().find(|&&v| v >= n) {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        edge.sort_unstable();
        if let Some(w) = edge.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::RepeatedVertex {
                edge: index,
                vertex: w[0],
            });
        }
        Ok(edge)
    }

    /// Trusted constructor for edges already canonical and sorted.
    pub(crate) fn from_sorted_edges(n: usize, s: usize, edges: Vec<Vec<usize>>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(edges
            .iter()
            .all(|e| e.len() == s && e.windows(2).all(|p| p[0] < p[1]) && e[s - 1] < n));
        Hypergraph { n, s, edges }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn uniformity(&self) -> usize {
        self.s
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &v in self.edges.iter().flatten() {
            deg[v] += 1;
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let degrees = self.degrees();
        let max_degree = degrees.iter().copied().max().unwrap_or(0);
        DegreeProfile {
            degrees,
            max_degree,
            avg_degree: ratio(self.s * self.edges.len(), self.n),
        }
    }

    /// Edge indices incident to each vertex.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e {
                inc[v].push(i);
            }
        }
        inc
    }

    /// The subhypergraph induced by `set`: vertices are relabelled to
    /// `0..|set|` in increasing order and only edges entirely inside `set`
    /// survive.
    pub fn induced(&self, set: &VertexSet) -> Result<Hypergraph, Error> {
        set.check_range(self.n)?;
        if set.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        let mut relabel = vec![usize::MAX; self.n];
        for (new, old) in set.iter().enumerate() {
            relabel[old] = new;
        }
        // Relabelling is monotone, so the filtered edge list stays sorted.
        let edges = self
            .edges
            .iter()
            .filter(|e| e.iter().all(|&v| relabel[v] != usize::MAX))
            .map(|e| e.iter().map(|&v| relabel[v]).collect())
            .collect();
        Ok(Self::from_sorted_edges(set.len(), self.s, edges))
    }

    /// `H - v`: drops `v` and every edge through it, shifting higher ids down.
    pub fn remove_vertex(&self, v: usize) -> Result<Hypergraph, Error> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        if self.n == 1 {
            return Err(Error::LastVertex);
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| !e.contains(&v))
            .map(|e| e.iter().map(|&u| if u > v { u - 1 } else { u }).collect())
            .collect();
        Ok(Self::from_sorted_edges(self.n - 1, self.s, edges))
    }

    /// Disjoint union of `copies` copies; copy `i` occupies ids
    /// `i*n .. (i+1)*n`.
    pub fn replicate(&self, copies: usize) -> Result<Hypergraph, Error> {
        if copies == 0 {
            return Err(Error::ZeroCopies);
        }
        let edges = (0..copies)
            .flat_map(|c| {
                let offset = c * self.n;
                self.edges
                    .iter()
                    .map(move |e| e.iter().map(|&v| v + offset).collect())
            })
            .collect();
        Ok(Self::from_sorted_edges(self.n * copies, self.s, edges))
    }

    /// Induced degree of every member of `set`, indexed by position in `set`.
    pub fn induced_degrees(&self, set: &VertexSet) -> Result<Vec<usize>, Error> {
        set.check_range(self.n)?;
        let mut pos = vec![usize::MAX; self.n];
        for (i, v) in set.iter().enumerate() {
            pos[v] = i;
        }
        let mut deg = vec![0; set.len()];
        for e in &self.edges {
            if e.iter().all(|&v| pos[v] != usize::MAX) {
                for &v in e {
                    deg[pos[v]] += 1;
                }
            }
        }
        Ok(deg)
    }

    /// `Δ(H[set])`, zero for the empty set.
    pub fn induced_max_degree(&self, set: &VertexSet) -> Result<usize, Error> {
        Ok(self.induced_degrees(set)?.into_iter().max().unwrap_or(0))
    }

    /// Whether `Δ(H[set]) <= k`; on failure reports the vertex with the largest
    /// induced degree (lowest id on ties) and `k + 1` edges through it.
    pub fn is_k_independent(&self, set: &VertexSet, k: usize) -> Result<KIndependence, Error> {
        let deg = self.induced_degrees(set)?;
        let (pos, degree) = match deg.iter().enumerate().max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0))) {
            Some((p, &d)) => (p, d),
            None => return Ok(KIndependence::Independent { max_degree: 0 }),
        };
        if degree <= k {
            return Ok(KIndependence::Independent { max_degree: degree });
        }
        let vertex = set.members()[pos];
        let witness = self
            .edges
            .iter()
            .filter(|e| e.contains(&vertex) && e.iter().all(|&u| set.contains(u)))
            .take(k + 1)
            .cloned()
            .collect();
        Ok(KIndependence::Violated {
            vertex,
            degree,
            witness,
        })
    }
}
