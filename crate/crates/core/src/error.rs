use alloc::vec::Vec;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("hypergraph needs at least one vertex")]
    NoVertices,
    #[error("uniformity must be at least 2, got {0}")]
    Uniformity(usize),
    #[error("edge {edge} has {found} vertices, expected {expected}")]
    EdgeArity {
        edge: usize,
        expected: usize,
        found: usize,
    },
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge {edge} repeats vertex {vertex}")]
    RepeatedVertex { edge: usize, vertex: usize },
    #[error("duplicate edge {0:?}")]
    DuplicateEdge(Vec<usize>),
    #[error("cannot remove the only vertex")]
    LastVertex,
    #[error("vertex set is empty")]
    EmptyVertexSet,
    #[error("{m} edges requested but only {available} {s}-subsets of {n} vertices exist")]
    TooManyEdges {
        n: usize,
        s: usize,
        m: u64,
        available: u128,
    },
    #[error("uniformity {s} exceeds vertex count {n}")]
    UniformityExceedsOrder { n: usize, s: usize },
    #[error("number of {s}-subsets of {n} vertices does not fit in 64 bits")]
    IndexSpaceTooLarge { n: usize, s: usize },
    #[error("negative argument")]
    NegativeArgument,
    #[error("k = 0 is not supported here (defective colouring needs k >= 1)")]
    ZeroK,
    #[error("replication factor must be at least 1")]
    ZeroCopies,
    #[error("instance has {n} vertices, oracle supports at most {max}")]
    TooLarge { n: usize, max: usize },
    #[error("result is not {k}-independent: induced max degree {max_degree}")]
    NotIndependent { k: usize, max_degree: usize },
}
