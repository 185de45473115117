//! Deciding whether a union of cliques `K_{V_1} ∪ .. ∪ K_{V_d}` is the
//! complete graph `K_V`, using any minimum degree ordering routine.
//!
//! Each subset gets its own min-degree filler. A minimum degree ordering
//! eliminates every extra first, which leaves exactly the union of cliques;
//! the next vertex `v` has minimum degree in that union. The union is
//! complete iff `v` is adjacent to all other vertices, i.e. iff every vertex
//! of `V` is reachable from `v` through eliminated extras only.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::mindegree::{fast_minimum_degree, OrderingConfig};
use crate::oracle;

use super::FillerBuilder;

/// Subsets `V_i` of `{0, .., n-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueUnionInstance {
    pub n: usize,
    /// Each subset sorted and deduplicated; empty subsets are dropped.
    pub subsets: Vec<Vec<VertexId>>,
}

impl CliqueUnionInstance {
    pub fn new(n: usize, subsets: Vec<Vec<VertexId>>) -> Result<Self> {
        let mut cleaned = Vec::with_capacity(subsets.len());
        for mut s in subsets {
            if let Some(&v) = s.iter().find(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { u: v, v, n });
            }
            s.sort_unstable();
            s.dedup();
            if !s.is_empty() {
                cleaned.push(s);
            }
        }
        Ok(CliqueUnionInstance { n, subsets: cleaned })
    }

    pub fn union_graph(&self) -> Graph {
        self.subsets
            .iter()
            .fold(Graph::empty(self.n), |acc, s| {
                acc.union(&Graph::complete(s, self.n).expect("validated ids"))
            })
    }
}

/// The union of a min-degree filler per subset, extras numbered from `n`.
///
/// Returns the graph and the number of extras.
pub fn reduction_graph(instance: &CliqueUnionInstance) -> (Graph, usize) {
    let mut builder = FillerBuilder::new(instance.n);
    for s in &instance.subsets {
        builder.min_degree(s);
    }
    let lg = builder.finish(Vec::new());
    let extras = lg.w_set.len();
    let graph = if lg.graph.n() < instance.n {
        lg.graph.union(&Graph::empty(instance.n))
    } else {
        lg.graph
    };
    (graph, extras)
}

/// Decides `∪ K_{V_i} = K_V` using `order`, any exact minimum degree ordering routine.
pub fn clique_union<F>(instance: &CliqueUnionInstance, mut order: F) -> Result<bool>
where
    F: FnMut(&Graph) -> Result<Vec<VertexId>>,
{
    let n = instance.n;
    if n == 0 {
        return Ok(true);
    }
    let (graph, extras) = reduction_graph(instance);
    let ordering = order(&graph)?;
    oracle::check_permutation(graph.n(), &ordering)?;
    if ordering[..extras].iter().any(|&v| v < n) {
        return Ok(false);
    }
    let v = ordering[extras];

    // walk through eliminated extras from v and count reached vertices of V
    let mut seen = vec![false; graph.n()];
    seen[v] = true;
    let mut stack = vec![v];
    let mut reached = 0;
    while let Some(x) = stack.pop() {
        if x < n {
            reached += 1;
            if x != v {
                continue;
            }
        }
        for &y in graph.neighbors(x) {
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    Ok(reached == n)
}

/// [`clique_union`] with the default fast ordering.
pub fn clique_union_default(instance: &CliqueUnionInstance) -> Result<bool> {
    clique_union(instance, |g| {
        fast_minimum_degree(g, &OrderingConfig::default()).map(|r| r.ordering)
    })
}

/// Reference answer: materialize the union and count its edges.
pub fn clique_union_bruteforce(instance: &CliqueUnionInstance) -> bool {
    let n = instance.n;
    instance.union_graph().m() == n * n.saturating_sub(1) / 2
}
