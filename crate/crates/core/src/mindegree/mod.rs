//! Exact minimum degree orderings in `O(nm)` time.
//!
//! [`fast_minimum_degree`] picks a backend for the explicit fill graph
//! (a dense bit matrix, or per-vertex ordered sets for large `n`) and runs
//! the [`Engine`] to completion. The result carries the ordering together
//! with the exact fill set `E⁺` and the number of insertion attempts `k`,
//! which [`AttemptBounds`] checks against its analytic upper bounds.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

pub mod adjacency;
pub mod bounds;
pub mod bucket;
pub mod engine;
pub mod epoch;
pub mod hyperedges;
pub mod tiebreak;

pub use adjacency::{DenseAdjacency, FillAdjacency, OrderedSetAdjacency};
pub use bounds::{AttemptBounds, BoundViolation};
pub use bucket::BucketQueue;
pub use engine::{Engine, StepStats};
pub use epoch::EpochArray;
pub use hyperedges::HyperedgeStore;
pub use tiebreak::{TieBreak, TieBreaker};

/// Largest `n` for which [`Backend::Auto`] picks the dense bit matrix (8 MiB).
pub const DEFAULT_DENSE_LIMIT: usize = 8192;

/// Requested fill-graph representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum Backend {
    Dense,
    OrderedSet,
    #[default]
    Auto,
}

/// Representation that actually produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BackendKind {
    Dense,
    OrderedSet,
    /// The brute-force reference in [`crate::oracle`].
    Naive,
}

impl std::fmt::Display for BackendKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            BackendKind::Dense => "dense",
            BackendKind::OrderedSet => "ordered-set",
            BackendKind::Naive => "naive",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrderingConfig {
    pub backend: Backend,
    pub tie_break: TieBreak,
    pub dense_limit: usize,
}

impl Default for OrderingConfig {
    fn default() -> Self {
        OrderingConfig {
            backend: Backend::Auto,
            tie_break: TieBreak::SmallestId,
            dense_limit: DEFAULT_DENSE_LIMIT,
        }
    }
}

impl OrderingConfig {
    pub fn new(backend: Backend, tie_break: TieBreak) -> Self {
        OrderingConfig {
            backend,
            tie_break,
            ..Default::default()
        }
    }

    pub fn resolve_backend(&self, n: usize) -> Result<BackendKind> {
        match self.backend {
            Backend::Dense if n > self.dense_limit => Err(Error::Config(format!(
                "dense backend requested for n = {n}, above the dense limit {}",
                self.dense_limit
            ))),
            Backend::Dense => Ok(BackendKind::Dense),
            Backend::OrderedSet => Ok(BackendKind::OrderedSet),
            Backend::Auto if n <= self.dense_limit => Ok(BackendKind::Dense),
            Backend::Auto => Ok(BackendKind::OrderedSet),
        }
    }
}

/// Outcome of a complete elimination.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EliminationResult {
    /// `ordering[i]` is the vertex eliminated at step `i`.
    pub ordering: Vec<VertexId>,
    /// Fill degree of `ordering[i]` at the moment it was eliminated.
    pub eliminated_degrees: Vec<usize>,
    /// Every original and fill edge ever present, as sorted `(u, v)`, `u < v`.
    pub fill_edges: Vec<(VertexId, VertexId)>,
    pub m_plus: usize,
    /// Number of vertex pairs examined for insertion (present or not).
    pub insertion_attempts: u64,
    pub backend: BackendKind,
}

impl EliminationResult {
    pub(crate) fn empty(backend: BackendKind) -> Self {
        EliminationResult {
            ordering: Vec::new(),
            eliminated_degrees: Vec::new(),
            fill_edges: Vec::new(),
            m_plus: 0,
            insertion_attempts: 0,
            backend,
        }
    }

    /// Equality of everything except the backend tag.
    pub fn same_outcome(&self, other: &EliminationResult) -> bool {
        self.ordering == other.ordering
            && self.eliminated_degrees == other.eliminated_degrees
            && self.fill_edges == other.fill_edges
            && self.m_plus == other.m_plus
            && self.insertion_attempts == other.insertion_attempts
    }

    pub fn bounds(&self, g: &Graph) -> AttemptBounds {
        AttemptBounds::new(g, &self.fill_edges)
    }

    /// `histogram[d]` counts the steps that eliminated a vertex of fill degree `d`.
    pub fn degree_histogram(&self) -> Vec<usize> {
        let len = self.eliminated_degrees.iter().max().map_or(0, |&d| d + 1);
        let mut histogram = vec![0; len];
        for &d in &self.eliminated_degrees {
            histogram[d] += 1;
        }
        histogram
    }
}

/// Computes a minimum degree elimination ordering of `g`.
pub fn fast_minimum_degree(g: &Graph, config: &OrderingConfig) -> Result<EliminationResult> {
    let backend = config.resolve_backend(g.n())?;
    if g.n() == 0 {
        return Ok(EliminationResult::empty(backend));
    }
    match backend {
        BackendKind::Dense => Engine::<DenseAdjacency>::new(g, config.tie_break).run(),
        BackendKind::OrderedSet => Engine::<OrderedSetAdjacency>::new(g, config.tie_break).run(),
        BackendKind::Naive => unreachable!("resolve_backend never yields the oracle"),
    }
}
