//! Brute-force references taken straight from the definitions.
//!
//! Nothing here shares code with [`crate::mindegree`] beyond the graph type
//! and the tie-break policy. Elimination is simulated on an explicit dense
//! fill graph: remove the vertex, join all of its neighbors.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::mindegree::{BackendKind, EliminationResult, TieBreak, TieBreaker};

/// Largest graph the dense simulations accept (32 MiB of bits).
pub const ORACLE_MAX_VERTICES: usize = 1 << 14;

/// Explicit symmetric fill graph as rows of bits.
struct ExplicitFill {
    words: usize,
    rows: Vec<u64>,
    degree: Vec<usize>,
    active: Vec<bool>,
}

impl ExplicitFill {
    fn new(g: &Graph) -> Result<Self> {
        let n = g.n();
        if n > ORACLE_MAX_VERTICES {
            return Err(Error::Config(format!(
                "oracle simulation limited to {ORACLE_MAX_VERTICES} vertices, got {n}"
            )));
        }
        let words = n.div_ceil(64);
        let mut rows = vec![0u64; n * words];
        for u in 0..n {
            for &v in g.neighbors(u) {
                rows[u * words + v / 64] |= 1 << (v % 64);
            }
        }
        Ok(ExplicitFill {
            words,
            rows,
            degree: g.degrees(),
            active: vec![true; n],
        })
    }

    fn has(&self, u: VertexId, v: VertexId) -> bool {
        self.rows[u * self.words + v / 64] & (1 << (v % 64)) != 0
    }

    fn toggle(&mut self, u: VertexId, v: VertexId) {
        self.rows[u * self.words + v / 64] ^= 1 << (v % 64);
    }

    fn neighbors(&self, v: VertexId) -> Vec<VertexId> {
        let mut out = Vec::new();
        for w in 0..self.words {
            let mut bits = self.rows[v * self.words + w];
            while bits != 0 {
                out.push(w * 64 + bits.trailing_zeros() as usize);
                bits &= bits - 1;
            }
        }
        out
    }

    fn min_degree(&self) -> Option<usize> {
        (0..self.active.len())
            .filter(|&v| self.active[v])
            .map(|v| self.degree[v])
            .min()
    }

    /// Removes `v`, joins its neighbors pairwise. Returns the edges added.
    fn eliminate(&mut self, v: VertexId) -> Vec<(VertexId, VertexId)> {
        let nbrs = self.neighbors(v);
        let mut added = Vec::new();
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                if !self.has(a, b) {
                    self.toggle(a, b);
                    self.toggle(b, a);
                    self.degree[a] += 1;
                    self.degree[b] += 1;
                    added.push((a, b));
                }
            }
        }
        for &a in &nbrs {
            self.toggle(a, v);
            self.toggle(v, a);
            self.degree[a] -= 1;
        }
        self.degree[v] = 0;
        self.active[v] = false;
        added
    }
}

/// Fill graph after eliminating `eliminated`: survivors `u, v` are adjacent
/// iff some path joins them with every internal vertex eliminated.
///
/// Eliminated vertices stay in the id space with no edges. Each connected
/// component of the eliminated-induced subgraph turns its surviving
/// boundary into a clique.
pub fn fill_graph(g: &Graph, eliminated: &[VertexId]) -> Graph {
    let n = g.n();
    let mut gone = vec![false; n];
    for &v in eliminated {
        assert!(v < n, "eliminated vertex {v} out of range");
        gone[v] = true;
    }

    let mut edges: Vec<(VertexId, VertexId)> =
        g.edges().filter(|&(u, v)| !gone[u] && !gone[v]).collect();

    let mut seen = vec![false; n];
    let mut boundary_mark = vec![usize::MAX; n];
    let mut stack = Vec::new();
    for root in 0..n {
        if !gone[root] || seen[root] {
            continue;
        }
        let mut boundary = Vec::new();
        seen[root] = true;
        stack.push(root);
        while let Some(x) = stack.pop() {
            for &y in g.neighbors(x) {
                if gone[y] {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                } else if boundary_mark[y] != root {
                    boundary_mark[y] = root;
                    boundary.push(y);
                }
            }
        }
        for (i, &a) in boundary.iter().enumerate() {
            for &b in &boundary[i + 1..] {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edge_list(n, edges).expect("ids in range")
}

/// Rejects anything but a permutation of `0..n`.
pub fn check_permutation(n: usize, ordering: &[VertexId]) -> Result<()> {
    if ordering.len() != n {
        return Err(Error::InvalidInput(format!(
            "ordering has {} entries for {n} vertices",
            ordering.len()
        )));
    }
    let mut seen = vec![false; n];
    for &v in ordering {
        if v >= n {
            return Err(Error::InvalidInput(format!("vertex {v} out of range 0..{n}")));
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::InvalidInput(format!("vertex {v} appears twice")));
        }
    }
    Ok(())
}

/// Textbook minimum degree: scan for the minimum, join the neighborhood, repeat.
///
/// `insertion_attempts` counts every neighbor pair examined.
pub fn naive_minimum_degree(g: &Graph, tie_break: TieBreak) -> Result<EliminationResult> {
    let n = g.n();
    let mut fill = ExplicitFill::new(g)?;
    let mut tb = TieBreaker::new(tie_break);
    let mut result = EliminationResult::empty(BackendKind::Naive);
    result.fill_edges = g.edges().collect();
    let mut candidates = Vec::new();
    for _ in 0..n {
        let min = fill.min_degree().expect("active vertex left");
        candidates.clear();
        candidates.extend((0..n).filter(|&v| fill.active[v] && fill.degree[v] == min));
        let v = tb.choose(&mut candidates);
        result.insertion_attempts += (min * min.saturating_sub(1) / 2) as u64;
        result.fill_edges.extend(fill.eliminate(v));
        result.ordering.push(v);
        result.eliminated_degrees.push(min);
    }
    for e in &mut result.fill_edges {
        *e = (e.0.min(e.1), e.0.max(e.1));
    }
    result.fill_edges.sort_unstable();
    result.m_plus = result.fill_edges.len();
    Ok(result)
}

/// First step at which an ordering stops being minimum degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    /// 1-based: step 1 is the first elimination.
    pub step: usize,
    pub vertex: VertexId,
    pub degree: usize,
    /// Smallest-id active vertex of minimum degree at that step.
    pub witness: VertexId,
    pub witness_degree: usize,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "step {}: vertex {} has fill degree {}, but vertex {} has fill degree {}",
            self.step, self.vertex, self.degree, self.witness, self.witness_degree
        )
    }
}

/// `Ok(None)` iff every step eliminates a vertex of minimum fill degree.
pub fn verify_min_degree_ordering(g: &Graph, ordering: &[VertexId]) -> Result<Option<Violation>> {
    check_permutation(g.n(), ordering)?;
    let mut fill = ExplicitFill::new(g)?;
    for (step, &v) in ordering.iter().enumerate() {
        let min = fill.min_degree().expect("active vertex left");
        if fill.degree[v] != min {
            let witness = (0..g.n())
                .find(|&w| fill.active[w] && fill.degree[w] == min)
                .expect("minimum is attained");
            return Ok(Some(Violation {
                step: step + 1,
                vertex: v,
                degree: fill.degree[v],
                witness,
                witness_degree: min,
            }));
        }
        fill.eliminate(v);
    }
    Ok(None)
}

/// `|E⁺|` of an arbitrary ordering.
pub fn fill_count_of_ordering(g: &Graph, ordering: &[VertexId]) -> Result<usize> {
    check_permutation(g.n(), ordering)?;
    let mut fill = ExplicitFill::new(g)?;
    let mut total = g.m();
    for &v in ordering {
        total += fill.eliminate(v).len();
    }
    Ok(total)
}

/// Each edge directed once, from the endpoint of smaller degree (ties by id).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    out: Vec<Vec<VertexId>>,
}

impl Orientation {
    pub fn out_neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.out[v]
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.out[v].len()
    }

    pub fn max_out_degree(&self) -> usize {
        self.out.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    pub fn arcs(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().map(move |&v| (u, v)))
    }
}

pub fn orient_bounded_outdegree(g: &Graph) -> Orientation {
    let mut out = vec![Vec::new(); g.n()];
    for (u, v) in g.edges() {
        if (g.degree(u), u) <= (g.degree(v), v) {
            out[u].push(v);
        } else {
            out[v].push(u);
        }
    }
    Orientation { out }
}
