//! Explicit fill-graph adjacency structures.

use std::collections::BTreeSet;

use crate::graph::{Graph, VertexId};

use super::BackendKind;

/// Mutable symmetric adjacency with per-vertex degree counts.
///
/// Eliminated vertices lose all their edges, so `degree` always counts
/// active neighbors only.
pub trait FillAdjacency {
    fn from_graph(g: &Graph) -> Self
    where
        Self: Sized;

    fn kind(&self) -> BackendKind;

    fn contains(&self, u: VertexId, v: VertexId) -> bool;

    /// Inserts `{u, v}`; returns whether it was absent.
    fn insert(&mut self, u: VertexId, v: VertexId) -> bool;

    /// Removes `{u, v}`; returns whether it was present.
    fn remove(&mut self, u: VertexId, v: VertexId) -> bool;

    fn degree(&self, v: VertexId) -> usize;

    /// Sorted neighbor list.
    fn neighbors(&self, v: VertexId) -> Vec<VertexId>;

    fn vertex_count(&self) -> usize;

    fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::new();
        for u in 0..self.vertex_count() {
            out.extend(self.neighbors(u).into_iter().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }
}

/// n x n bit matrix. O(1) queries and updates, n²/8 bytes.
#[derive(Debug, Clone)]
pub struct DenseAdjacency {
    n: usize,
    words: usize,
    bits: Vec<u64>,
    degree: Vec<usize>,
}

impl DenseAdjacency {
    #[inline]
    fn slot(&self, u: VertexId, v: VertexId) -> (usize, u64) {
        (u * self.words + v / 64, 1u64 << (v % 64))
    }

    #[inline]
    fn get(&self, u: VertexId, v: VertexId) -> bool {
        let (i, mask) = self.slot(u, v);
        self.bits[i] & mask != 0
    }

    #[inline]
    fn set(&mut self, u: VertexId, v: VertexId, on: bool) {
        let (i, mask) = self.slot(u, v);
        if on {
            self.bits[i] |= mask;
        } else {
            self.bits[i] &= !mask;
        }
    }
}

impl FillAdjacency for DenseAdjacency {
    fn from_graph(g: &Graph) -> Self {
        let n = g.n();
        let words = n.div_ceil(64);
        let mut adj = DenseAdjacency {
            n,
            words,
            bits: vec![0; n * words],
            degree: g.degrees(),
        };
        for (u, v) in g.edges() {
            adj.set(u, v, true);
            adj.set(v, u, true);
        }
        adj
    }

    fn kind(&self) -> BackendKind {
        BackendKind::Dense
    }

    #[inline]
    fn contains(&self, u: VertexId, v: VertexId) -> bool {
        self.get(u, v)
    }

    #[inline]
    fn insert(&mut self, u: VertexId, v: VertexId) -> bool {
        if self.get(u, v) {
            return false;
        }
        self.set(u, v, true);
        self.set(v, u, true);
        self.degree[u] += 1;
        self.degree[v] += 1;
        true
    }

    #[inline]
    fn remove(&mut self, u: VertexId, v: VertexId) -> bool {
        if !self.get(u, v) {
            return false;
        }
        self.set(u, v, false);
        self.set(v, u, false);
        self.degree[u] -= 1;
        self.degree[v] -= 1;
        true
    }

    #[inline]
    fn degree(&self, v: VertexId) -> usize {
        self.degree[v]
    }

    fn neighbors(&self, v: VertexId) -> Vec<VertexId> {
        let row = &self.bits[v * self.words..(v + 1) * self.words];
        let mut out = Vec::with_capacity(self.degree[v]);
        for (w, &word) in row.iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                out.push(w * 64 + bits.trailing_zeros() as usize);
                bits &= bits - 1;
            }
        }
        out
    }

    fn vertex_count(&self) -> usize {
        self.n
    }
}

/// Per-vertex balanced ordered sets. O(log n) per operation, O(n + m⁺) space.
#[derive(Debug, Clone)]
pub struct OrderedSetAdjacency {
    sets: Vec<BTreeSet<VertexId>>,
}

impl FillAdjacency for OrderedSetAdjacency {
    fn from_graph(g: &Graph) -> Self {
        OrderedSetAdjacency {
            sets: (0..g.n())
                .map(|v| g.neighbors(v).iter().copied().collect())
                .collect(),
        }
    }

    fn kind(&self) -> BackendKind {
        BackendKind::OrderedSet
    }

    fn contains(&self, u: VertexId, v: VertexId) -> bool {
        self.sets[u].contains(&v)
    }

    fn insert(&mut self, u: VertexId, v: VertexId) -> bool {
        if !self.sets[u].insert(v) {
            return false;
        }
        self.sets[v].insert(u);
        true
    }

    fn remove(&mut self, u: VertexId, v: VertexId) -> bool {
        if !self.sets[u].remove(&v) {
            return false;
        }
        self.sets[v].remove(&u);
        true
    }

    fn degree(&self, v: VertexId) -> usize {
        self.sets[v].len()
    }

    fn neighbors(&self, v: VertexId) -> Vec<VertexId> {
        self.sets[v].iter().copied().collect()
    }

    fn vertex_count(&self) -> usize {
        self.sets.len()
    }
}
