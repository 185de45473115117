//! Immutable simple undirected graphs over dense `0..n` vertex ids.

use std::fmt;

use crate::error::{Error, Result};

pub mod generators;

/// Dense 0-based vertex index.
pub type VertexId = usize;

/// A simple undirected graph with sorted adjacency lists.
///
/// Self-loops are dropped and parallel edges collapsed at construction, so
/// every neighbor list is strictly increasing and symmetric.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<VertexId>>,
    m: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from unordered pairs. Duplicates collapse, self-loops vanish.
    pub fn from_edge_list<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { u, v, n });
            }
            if u == v {
                continue;
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        Ok(Self::from_raw_adjacency(adjacency))
    }

    /// Sorts and deduplicates raw (already symmetric, in-range, loop-free) lists.
    fn from_raw_adjacency(mut adjacency: Vec<Vec<VertexId>>) -> Self {
        let mut total = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            total += list.len();
        }
        let g = Graph {
            adjacency,
            m: total / 2,
        };
        debug_assert!(g.check_invariants().is_ok());
        g
    }

    /// Complete graph on `u_set` inside a vertex space of size `n`.
    pub fn complete(u_set: &[VertexId], n: usize) -> Result<Self> {
        let mut members = u_set.to_vec();
        members.sort_unstable();
        members.dedup();
        let mut edges = Vec::with_capacity(members.len() * members.len().saturating_sub(1) / 2);
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                edges.push((u, v));
            }
        }
        Graph::from_edge_list(n, edges)
    }

    /// Edge-set union. The vertex space is the larger of the two.
    pub fn union(&self, other: &Graph) -> Graph {
        let n = self.n().max(other.n());
        let mut adjacency = vec![Vec::new(); n];
        for (v, list) in adjacency.iter_mut().enumerate() {
            let a = self.adjacency.get(v).map(Vec::as_slice).unwrap_or(&[]);
            let b = other.adjacency.get(v).map(Vec::as_slice).unwrap_or(&[]);
            list.reserve(a.len() + b.len());
            list.extend_from_slice(a);
            list.extend_from_slice(b);
        }
        Self::from_raw_adjacency(adjacency)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of neighbors of `v`. Panics if `v >= n`.
    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    #[inline]
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.n() && v < self.n() && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, list)| {
            let start = list.partition_point(|&v| v <= u);
            list[start..].iter().map(move |&v| (u, v))
        })
    }

    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let mut total = 0;
        for (u, list) in self.adjacency.iter().enumerate() {
            if list.windows(2).any(|w| w[0] >= w[1]) {
                return Err(format!("neighbor list of {u} is not strictly increasing"));
            }
            for &v in list {
                if v == u {
                    return Err(format!("self-loop at {u}"));
                }
                if v >= self.n() || self.adjacency[v].binary_search(&u).is_err() {
                    return Err(format!("edge ({u}, {v}) is not symmetric"));
                }
            }
            total += list.len();
        }
        if total != 2 * self.m {
            return Err(format!("degree sum {total} != 2m = {}", 2 * self.m));
        }
        Ok(())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("m", &self.m)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}
