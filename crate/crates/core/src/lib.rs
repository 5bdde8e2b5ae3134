//! Lower bounds, constructive extraction and exact oracles for the
//! k-independence number of s-uniform hypergraphs.
//!
//! A set `S` of vertices is *k-independent* when every vertex of `S` lies in at
//! most `k` edges that are completely contained in `S`. The crate is `no_std`
//! (it needs `alloc`); file formats and the command line live in the companion
//! `hyperindep` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bounds;
pub mod error;
pub mod exact;
pub mod extract;
pub mod generate;
pub mod hypergraph;
pub mod partition;
pub mod rational;

pub use bounds::{BoundAmount, BoundName, BoundReport, BoundValue};
pub use error::Error;
pub use exact::{OracleOutcome, OracleResult, Quantity};
pub use extract::{Algorithm, ExtractionResult, TraceOp, TraceStep};
pub use hypergraph::{DegreeProfile, Hypergraph, KIndependence, VertexSet};
pub use partition::Partition;
pub use rational::Rational;
