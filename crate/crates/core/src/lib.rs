//! Exact minimum degree elimination orderings for sparse symmetric patterns.
//!
//! The crate is organised around a few pieces:
//!
//! * [`graph`]: immutable simple graphs and a handful of generators.
//! * [`mindegree`]: the fast engine, which keeps the fill graph both as an
//!   explicit adjacency structure and as a union of cliques (hyperedges),
//!   so that only edges spanning the symmetric difference of merged
//!   hyperedges are ever examined.
//! * [`oracle`]: brute-force reference implementations used as ground truth.
//! * [`ufiller`]: adversarial filler graphs that force any minimum degree
//!   ordering into quadratic fill, plus the clique-union reduction built on them.
//! * [`io`]: Matrix Market, edge list, permutation and run statistics files.

pub mod bench;
pub mod error;
pub mod graph;
pub mod io;
pub mod mindegree;
pub mod oracle;
pub mod ufiller;

pub use error::{Error, Result};
pub use graph::{Graph, VertexId};
pub use mindegree::{
    fast_minimum_degree, Backend, BackendKind, EliminationResult, OrderingConfig, TieBreak,
};
