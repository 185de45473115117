use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

use super::adjacency::FillAdjacency;
use super::bucket::BucketQueue;
use super::epoch::EpochArray;
use super::hyperedges::HyperedgeStore;
use super::tiebreak::{TieBreak, TieBreaker};
use super::EliminationResult;

/// Counters for a single elimination step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct StepStats {
    pub vertex: VertexId,
    /// Fill degree of the vertex when it was eliminated, i.e. `|W|`.
    pub degree: usize,
    pub attempts: u64,
    pub fill_added: usize,
    pub edges_removed: usize,
    pub hyperedges_merged: usize,
}

/// Incremental minimum degree elimination over a fill adjacency backend.
///
/// The fill graph is kept twice: explicitly in `adjacency`, and as the union
/// of cliques over the valid hyperedges. Eliminating `a` merges every valid
/// hyperedge through `a` into `W = N⁺(a)` one hyperedge at a time; when
/// hyperedge `U` is merged into the partial `W`, only pairs in
/// `(W \ U) x (U \ W)` can be missing from the adjacency.
pub struct Engine<A> {
    adjacency: A,
    hyperedges: HyperedgeStore,
    queue: BucketQueue,
    tie_break: TieBreaker,
    in_w: EpochArray,
    in_u: EpochArray,
    active: Vec<bool>,
    w: Vec<VertexId>,
    u_buf: Vec<VertexId>,
    x_buf: Vec<VertexId>,
    y_buf: Vec<VertexId>,
    ordering: Vec<VertexId>,
    eliminated_degrees: Vec<usize>,
    original_edges: Vec<(VertexId, VertexId)>,
    inserted: Vec<(VertexId, VertexId)>,
    attempts: u64,
}

#[inline]
fn try_insert<A: FillAdjacency>(
    adjacency: &mut A,
    attempts: &mut u64,
    inserted: &mut Vec<(VertexId, VertexId)>,
    u: VertexId,
    v: VertexId,
) -> bool {
    *attempts += 1;
    let added = adjacency.insert(u, v);
    if added {
        inserted.push((u.min(v), u.max(v)));
    }
    added
}

impl<A: FillAdjacency> Engine<A> {
    pub fn new(g: &Graph, tie_break: TieBreak) -> Self {
        let n = g.n();
        let original_edges: Vec<_> = g.edges().collect();
        let mut hyperedges = HyperedgeStore::new(n);
        for &(u, v) in &original_edges {
            hyperedges.push(&[u, v]);
        }
        let mut queue = BucketQueue::new(n);
        for v in 0..n {
            queue.insert(v, g.degree(v));
        }
        Engine {
            adjacency: A::from_graph(g),
            hyperedges,
            queue,
            tie_break: TieBreaker::new(tie_break),
            in_w: EpochArray::new(n),
            in_u: EpochArray::new(n),
            active: vec![true; n],
            w: Vec::new(),
            u_buf: Vec::new(),
            x_buf: Vec::new(),
            y_buf: Vec::new(),
            ordering: Vec::with_capacity(n),
            eliminated_degrees: Vec::with_capacity(n),
            original_edges,
            inserted: Vec::new(),
            attempts: 0,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.active.len()
    }

    pub fn is_done(&self) -> bool {
        self.ordering.len() == self.active.len()
    }

    pub fn is_active(&self, v: VertexId) -> bool {
        self.active[v]
    }

    pub fn adjacency(&self) -> &A {
        &self.adjacency
    }

    pub fn hyperedges(&self) -> &HyperedgeStore {
        &self.hyperedges
    }

    pub fn ordering(&self) -> &[VertexId] {
        &self.ordering
    }

    pub fn insertion_attempts(&self) -> u64 {
        self.attempts
    }

    /// Number of original plus inserted edges seen so far.
    pub fn m_plus(&self) -> usize {
        self.original_edges.len() + self.inserted.len()
    }

    /// Removes and returns an active vertex of minimum fill degree.
    pub fn select_minimum_degree(&mut self) -> Result<VertexId> {
        self.queue.extract_min(&mut self.tie_break)
    }

    /// Counts one insertion attempt and adds `{u, v}` if absent.
    pub fn attempt_insert(&mut self, u: VertexId, v: VertexId) -> bool {
        debug_assert!(u != v && self.active[u] && self.active[v]);
        let added = try_insert(&mut self.adjacency, &mut self.attempts, &mut self.inserted, u, v);
        if added {
            for x in [u, v] {
                if self.queue.contains(x) {
                    self.queue.update(x, self.adjacency.degree(x));
                }
            }
        }
        added
    }

    /// Eliminates `a`, turning its fill neighborhood into a clique.
    pub fn eliminate_vertex(&mut self, a: VertexId) -> Result<StepStats> {
        if a >= self.active.len() || !self.active[a] {
            return Err(Error::State(format!("vertex {a} is not active")));
        }
        self.active[a] = false;
        if self.queue.contains(a) {
            self.queue.remove(a);
        }
        let degree = self.adjacency.degree(a);
        let attempts_before = self.attempts;
        let inserted_before = self.inserted.len();
        let mut stats = StepStats {
            vertex: a,
            degree,
            ..StepStats::default()
        };

        let mut w = std::mem::take(&mut self.w);
        let mut u_buf = std::mem::take(&mut self.u_buf);
        let mut x_buf = std::mem::take(&mut self.x_buf);
        let mut y_buf = std::mem::take(&mut self.y_buf);
        w.clear();
        self.in_w.reset();

        for h in self.hyperedges.take_incidence(a) {
            if !self.hyperedges.is_valid(h) {
                continue;
            }
            self.hyperedges.invalidate(h);
            stats.hyperedges_merged += 1;

            u_buf.clear();
            u_buf.extend(self.hyperedges.members(h).iter().copied().filter(|&u| u != a));
            y_buf.clear();
            y_buf.extend(u_buf.iter().copied().filter(|&u| !self.in_w.contains(u)));
            if y_buf.is_empty() {
                continue;
            }

            if !w.is_empty() {
                self.in_u.reset();
                for &u in &u_buf {
                    self.in_u.insert(u);
                }
                x_buf.clear();
                x_buf.extend(w.iter().copied().filter(|&x| !self.in_u.contains(x)));
                for &x in &x_buf {
                    for &y in &y_buf {
                        try_insert(
                            &mut self.adjacency,
                            &mut self.attempts,
                            &mut self.inserted,
                            x,
                            y,
                        );
                    }
                }
            }

            for &b in &y_buf {
                let present = self.adjacency.remove(a, b);
                debug_assert!(present, "edge ({a}, {b}) missing from fill graph");
                stats.edges_removed += 1;
                self.in_w.insert(b);
                w.push(b);
            }
        }

        if !w.is_empty() {
            self.hyperedges.push(&w);
        }
        for &v in &w {
            self.queue.update(v, self.adjacency.degree(v));
        }
        debug_assert_eq!(w.len(), degree);
        debug_assert_eq!(self.adjacency.degree(a), 0);

        stats.attempts = self.attempts - attempts_before;
        stats.fill_added = self.inserted.len() - inserted_before;
        self.ordering.push(a);
        self.eliminated_degrees.push(degree);

        self.w = w;
        self.u_buf = u_buf;
        self.x_buf = x_buf;
        self.y_buf = y_buf;
        Ok(stats)
    }

    /// Selects and eliminates one vertex; `None` once every vertex is gone.
    pub fn step(&mut self) -> Result<Option<StepStats>> {
        if self.is_done() {
            return Ok(None);
        }
        let a = self.select_minimum_degree()?;
        self.eliminate_vertex(a).map(Some)
    }

    pub fn run(mut self) -> Result<EliminationResult> {
        while self.step()?.is_some() {}
        self.finish()
    }

    pub fn finish(self) -> Result<EliminationResult> {
        if !self.is_done() {
            return Err(Error::State(format!(
                "{} of {} vertices eliminated",
                self.ordering.len(),
                self.active.len()
            )));
        }
        let backend = self.adjacency.kind();
        let mut fill_edges = self.original_edges;
        fill_edges.extend(self.inserted);
        fill_edges.sort_unstable();
        debug_assert!(fill_edges.windows(2).all(|w| w[0] != w[1]));
        Ok(EliminationResult {
            m_plus: fill_edges.len(),
            ordering: self.ordering,
            eliminated_degrees: self.eliminated_degrees,
            fill_edges,
            insertion_attempts: self.attempts,
            backend,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators;
    use crate::mindegree::adjacency::{DenseAdjacency, OrderedSetAdjacency};

    fn engine(g: &Graph) -> Engine<DenseAdjacency> {
        Engine::new(g, TieBreak::SmallestId)
    }

    #[test]
    fn c4_first_step_merges_two_hyperedges() {
        // Hand simulation: hyperedges {0,1} then {0,3}. After the first, W = {1};
        // the second has U = {3}, Y = {3}, X = {1}: exactly one attempt {1,3}.
        let mut e = engine(&generators::cycle(4));
        assert_eq!(e.select_minimum_degree().unwrap(), 0);
        let s = e.eliminate_vertex(0).unwrap();
        assert_eq!(s.attempts, 1);
        assert_eq!(s.fill_added, 1);
        assert_eq!(s.edges_removed, 2);
        assert_eq!(s.degree, 2);
        assert_eq!(s.hyperedges_merged, 2);
        assert!(e.adjacency().contains(1, 3));
        let valid: Vec<Vec<usize>> = e.hyperedges().valid_hyperedges().map(<[_]>::to_vec).collect();
        assert!(valid.contains(&vec![1, 3]));
    }

    #[test]
    fn isolated_vertex_appends_nothing() {
        let g = Graph::empty(2);
        let mut e = engine(&g);
        let s = e.eliminate_vertex(1).unwrap();
        assert_eq!((s.attempts, s.degree, s.hyperedges_merged), (0, 0, 0));
        assert!(e.hyperedges().is_empty());
    }

    #[test]
    fn star_leaf_has_no_attempts() {
        let mut e = engine(&generators::star(4));
        let before = e.hyperedges().len();
        let s = e.eliminate_vertex(0).unwrap();
        assert_eq!((s.attempts, s.degree, s.fill_added), (0, 1, 0));
        assert_eq!(e.hyperedges().len(), before + 1);
        assert_eq!(e.hyperedges().members(before), &[4]);
    }

    #[test]
    fn inactive_vertex_is_state_error() {
        let mut e = engine(&generators::path(3));
        e.eliminate_vertex(1).unwrap();
        assert!(matches!(e.eliminate_vertex(1), Err(Error::State(_))));
        assert!(matches!(e.eliminate_vertex(7), Err(Error::State(_))));
    }

    #[test]
    fn attempt_insert_counts_every_call() {
        let mut e: Engine<OrderedSetAdjacency> = Engine::new(&generators::path(4), TieBreak::SmallestId);
        assert!(e.attempt_insert(0, 3));
        assert_eq!((e.adjacency().degree(0), e.adjacency().degree(3)), (2, 2));
        assert!(!e.attempt_insert(3, 0));
        assert!(!e.attempt_insert(0, 1));
        assert_eq!(e.insertion_attempts(), 3);
        assert_eq!(e.m_plus(), 4);
    }

    #[test]
    fn finish_requires_completion() {
        let mut e = engine(&generators::path(3));
        e.step().unwrap();
        assert!(matches!(e.finish(), Err(Error::State(_))));
    }
}
