//! Adversarial filler graphs.
//!
//! A `U`-filler is a graph on `U ∪ W` (with `W` the *extra* vertices) whose
//! fill graph after eliminating all of `W` is the complete graph on `U`.
//! The constructions here build, bottom up:
//!
//! * [`u_comb`]: a path of `|U|` extras matched one-to-one onto `U`;
//!   no surviving extra ever exceeds fill degree `|U|`.
//! * [`bounded_filler`]: combs over every pair of parts of `U`, parts of
//!   size at most `⌊d/2⌋`, so surviving extras stay at degree `<= d`.
//! * [`min_degree_filler`]: recursive halving glued by a bounded filler.
//!   Every minimum degree ordering of it eliminates all extras before any
//!   vertex of `U`, which forces `|U|(|U|-1)/2` fill edges from a graph with
//!   `O(|U| log |U|)` vertices and edges.
//!
//! Extra vertices are always fresh ids above every id of `U`, so unions of
//! fillers never share extras.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::oracle;

mod checks;
mod clique_union;

pub use checks::{check_d_bounded, check_min_degree_property, CheckConfig, CheckReport, Coverage, Witness};
pub use clique_union::{clique_union, clique_union_bruteforce, clique_union_default, reduction_graph, CliqueUnionInstance};

/// Graphs up to this size are returned as a plain clique by [`min_degree_filler`].
pub const CLIQUE_BASE_CASE: usize = 7;

/// A graph together with its target set `U` and extra vertices `W`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    /// Sorted, disjoint from `w_set`.
    pub u_set: Vec<VertexId>,
    /// Sorted.
    pub w_set: Vec<VertexId>,
}

impl LabeledGraph {
    pub fn is_extra(&self, v: VertexId) -> bool {
        self.w_set.binary_search(&v).is_ok()
    }

    pub fn extra_mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.graph.n()];
        for &w in &self.w_set {
            mask[w] = true;
        }
        mask
    }

    /// Vertex count of the filler itself (`|U| + |W|`).
    pub fn vertex_count(&self) -> usize {
        self.u_set.len() + self.w_set.len()
    }
}

/// Accumulates filler edges and hands out fresh extra ids.
#[derive(Debug)]
pub(crate) struct FillerBuilder {
    next: VertexId,
    edges: Vec<(VertexId, VertexId)>,
    extras: Vec<VertexId>,
}

impl FillerBuilder {
    pub(crate) fn new(first_extra: VertexId) -> Self {
        FillerBuilder {
            next: first_extra,
            edges: Vec::new(),
            extras: Vec::new(),
        }
    }

    fn fresh(&mut self) -> VertexId {
        let v = self.next;
        self.next += 1;
        self.extras.push(v);
        v
    }

    /// Path of extras in the order of `targets`, each matched to its target.
    pub(crate) fn comb(&mut self, targets: &[VertexId]) {
        let mut prev = None;
        for &u in targets {
            let e = self.fresh();
            self.edges.push((u, e));
            if let Some(p) = prev {
                self.edges.push((p, e));
            }
            prev = Some(e);
        }
    }

    /// `targets` must be sorted; parts are consecutive chunks.
    pub(crate) fn bounded(&mut self, targets: &[VertexId], d: usize) {
        let parts: Vec<&[VertexId]> = targets.chunks((d / 2).max(1)).collect();
        if parts.len() == 1 {
            self.comb(parts[0]);
            return;
        }
        let mut merged = Vec::new();
        for (i, a) in parts.iter().enumerate() {
            for b in &parts[i + 1..] {
                merged.clear();
                merged.extend_from_slice(a);
                merged.extend_from_slice(b);
                self.comb(&merged);
            }
        }
    }

    /// `targets` must be sorted.
    pub(crate) fn min_degree(&mut self, targets: &[VertexId]) {
        let size = targets.len();
        if size <= CLIQUE_BASE_CASE {
            for (i, &u) in targets.iter().enumerate() {
                for &v in &targets[i + 1..] {
                    self.edges.push((u, v));
                }
            }
            return;
        }
        let (low, high) = targets.split_at(size / 2);
        self.min_degree(low);
        self.min_degree(high);
        self.bounded(targets, size / 2 - 2);
    }

    pub(crate) fn finish(self, u_set: Vec<VertexId>) -> LabeledGraph {
        let graph = Graph::from_edge_list(self.next, self.edges).expect("ids below next");
        LabeledGraph {
            graph,
            u_set,
            w_set: self.extras,
        }
    }
}

fn normalized(u_set: &[VertexId]) -> Vec<VertexId> {
    let mut u = u_set.to_vec();
    u.sort_unstable();
    u.dedup();
    u
}

fn first_extra(u: &[VertexId]) -> VertexId {
    u.last().map_or(0, |&max| max + 1)
}

fn require_nonempty(u: &[VertexId]) -> Result<()> {
    if u.is_empty() {
        return Err(Error::InvalidInput("target set U is empty".into()));
    }
    Ok(())
}

/// `|U|` extras on a path, matched to `U` in ascending order.
pub fn u_comb(u_set: &[VertexId]) -> Result<LabeledGraph> {
    let u = normalized(u_set);
    require_nonempty(&u)?;
    let mut builder = FillerBuilder::new(first_extra(&u));
    builder.comb(&u);
    Ok(builder.finish(u))
}

/// A `d`-bounded `U`-filler made of combs over pairs of parts.
pub fn bounded_filler(u_set: &[VertexId], d: usize) -> Result<LabeledGraph> {
    if d < 2 {
        return Err(Error::InvalidInput(format!("degree bound d = {d} must be at least 2")));
    }
    let u = normalized(u_set);
    let mut builder = FillerBuilder::new(first_extra(&u));
    builder.bounded(&u, d);
    Ok(builder.finish(u))
}

/// A `(|U|-3)`-bounded min-degree `U`-filler.
pub fn min_degree_filler(u_set: &[VertexId]) -> Result<LabeledGraph> {
    let u = normalized(u_set);
    require_nonempty(&u)?;
    let mut builder = FillerBuilder::new(first_extra(&u));
    builder.min_degree(&u);
    Ok(builder.finish(u))
}

/// Eliminating all of `W` leaves exactly the complete graph on `U`.
pub fn is_filler(lg: &LabeledGraph) -> bool {
    let fill = oracle::fill_graph(&lg.graph, &lg.w_set);
    match Graph::complete(&lg.u_set, lg.graph.n()) {
        Ok(k_u) => fill == k_u,
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn comb_on_three() {
        let lg = u_comb(&[0, 1, 2]).unwrap();
        assert_eq!(lg.w_set, vec![3, 4, 5]);
        let edges: Vec<_> = lg.graph.edges().collect();
        assert_eq!(edges, vec![(0, 3), (1, 4), (2, 5), (3, 4), (4, 5)]);
        assert!(is_filler(&lg));
    }

    #[test]
    fn comb_on_one_and_two() {
        let one = u_comb(&[0]).unwrap();
        assert_eq!((one.graph.n(), one.graph.m()), (2, 1));
        assert!(is_filler(&one));
        let two = u_comb(&[0, 1]).unwrap();
        assert_eq!((two.graph.n(), two.graph.m()), (4, 3));
        assert!(is_filler(&two));
    }

    #[test]
    fn empty_target_set_is_rejected() {
        assert!(matches!(u_comb(&[]), Err(Error::InvalidInput(_))));
        assert!(matches!(min_degree_filler(&[]), Err(Error::InvalidInput(_))));
        assert!(matches!(bounded_filler(&[0, 1], 1), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn bounded_single_part_is_one_comb() {
        let lg = bounded_filler(&[0, 1, 2, 3], 4).unwrap();
        assert_eq!(lg.graph, u_comb(&[0, 1, 2, 3]).unwrap().graph);
        let tiny = bounded_filler(&[0], 2).unwrap();
        assert_eq!(tiny.w_set.len(), 1);
        assert!(is_filler(&tiny));
    }

    #[test]
    fn bounded_pairs_of_singletons() {
        let lg = bounded_filler(&[0, 1, 2, 3, 4, 5], 2).unwrap();
        assert_eq!(lg.w_set.len(), 2 * 15);
        assert_eq!(lg.graph.m(), 3 * 15);
        assert!(is_filler(&lg));
    }

    #[test]
    fn min_degree_base_case_is_clique() {
        let lg = min_degree_filler(&[0, 1, 2, 3]).unwrap();
        assert!(lg.w_set.is_empty());
        assert_eq!(lg.graph, Graph::complete(&[0, 1, 2, 3], 4).unwrap());
    }

    #[test]
    fn min_degree_eight_structure() {
        let u: Vec<_> = (0..8).collect();
        let lg = min_degree_filler(&u).unwrap();
        // two K4 halves plus 28 two-extra combs
        let k4s = Graph::complete(&[0, 1, 2, 3], 8)
            .unwrap()
            .union(&Graph::complete(&[4, 5, 6, 7], 8).unwrap());
        let g3 = bounded_filler(&u, 2).unwrap();
        assert_eq!(lg.graph, k4s.union(&g3.graph));
        assert_eq!(lg.w_set.len(), 56);
        assert_eq!(lg.graph.m(), 12 + 84);
        assert!(is_filler(&lg));
    }

    #[test]
    fn non_contiguous_targets() {
        let lg = min_degree_filler(&[3, 10, 11, 20, 21, 22, 30, 31, 40]).unwrap();
        assert!(lg.w_set.iter().all(|&w| w > 40));
        assert!(is_filler(&lg));
    }

    #[test]
    fn star_and_clique_are_fillers() {
        let star = LabeledGraph {
            graph: crate::graph::generators::star(4),
            u_set: vec![0, 1, 2, 3],
            w_set: vec![4],
        };
        assert!(is_filler(&star));
        let k = LabeledGraph {
            graph: Graph::complete(&[0, 1, 2], 3).unwrap(),
            u_set: vec![0, 1, 2],
            w_set: vec![],
        };
        assert!(is_filler(&k));
    }

    #[test]
    fn comb_missing_matching_edge_is_not_filler() {
        let lg = u_comb(&[0, 1, 2]).unwrap();
        let edges = lg.graph.edges().filter(|&e| e != (1, 4));
        let broken = LabeledGraph {
            graph: Graph::from_edge_list(lg.graph.n(), edges).unwrap(),
            ..lg
        };
        assert!(!is_filler(&broken));
    }
}
