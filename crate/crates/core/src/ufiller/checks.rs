//! Checkers for the filler properties over subsets `X` of extra vertices.
//!
//! Three strategies, tried in order:
//!
//! 1. **Exhaustive**: every relevant `X ⊆ W` when `2^|W|` fits the subset budget.
//! 2. **Decomposed**: exact search that exploits the block structure of the
//!    graph. Fill paths run through eliminated extras only, so they never
//!    leave a connected component ("block") of the extras-induced subgraph.
//!    The fill graph after eliminating `X` is therefore the union, over
//!    blocks, of the block's own fill graph, plus the static `U`–`U` edges.
//!    Each block is enumerated on its own and the per-block states are
//!    combined exactly.
//! 3. **Sampled**: `subset_budget` seeded random subsets plus every prefix
//!    of a greedy minimum degree elimination. A pass only means no
//!    counterexample was found.

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, VertexId};
use crate::mindegree::{fast_minimum_degree, OrderingConfig};
use crate::oracle;

use super::LabeledGraph;

/// Largest block enumerated state by state in the decomposed search.
const MAX_BLOCK_EXTRAS: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckConfig {
    /// Exhaustive threshold on `2^|W|`, and the number of random samples.
    pub subset_budget: usize,
    /// Upper bound on the states visited by the decomposed search; 0 disables it.
    pub decomposed_limit: u64,
    pub seed: u64,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            subset_budget: 500,
            decomposed_limit: 1 << 24,
            seed: 0x5eed,
        }
    }
}

impl CheckConfig {
    pub fn with_budget(subset_budget: usize) -> Self {
        CheckConfig {
            subset_budget,
            ..Default::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coverage {
    Exhaustive { subsets: u64 },
    Decomposed { states: u64 },
    Sampled { subsets: usize },
}

/// A subset of eliminated extras and the offending vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub eliminated: Vec<VertexId>,
    pub vertex: VertexId,
    pub degree: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub holds: bool,
    pub coverage: Coverage,
    pub witness: Option<Witness>,
}

impl CheckReport {
    /// Whether a pass covers every subset rather than a sample.
    pub fn is_exact(&self) -> bool {
        !matches!(self.coverage, Coverage::Sampled { .. })
    }

    fn new(coverage: Coverage, witness: Option<Witness>) -> Self {
        CheckReport {
            holds: witness.is_none(),
            coverage,
            witness,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Property {
    /// Every minimum-degree survivor is an extra, for proper `X ⊂ W`.
    MinDegree,
    /// Every surviving extra has degree at most `d`, for `X ⊆ W`.
    Bounded(usize),
}

impl Property {
    fn allows_full(self) -> bool {
        matches!(self, Property::Bounded(_))
    }
}

/// After eliminating any proper `X ⊂ W`, all minimum fill degree vertices are extras.
pub fn check_min_degree_property(lg: &LabeledGraph, config: &CheckConfig) -> CheckReport {
    run(lg, Property::MinDegree, config)
}

/// After eliminating any `X ⊆ W`, every surviving extra has fill degree at most `d`.
pub fn check_d_bounded(lg: &LabeledGraph, d: usize, config: &CheckConfig) -> CheckReport {
    run(lg, Property::Bounded(d), config)
}

fn run(lg: &LabeledGraph, property: Property, config: &CheckConfig) -> CheckReport {
    let w = lg.w_set.len();
    if w == 0 {
        return CheckReport::new(Coverage::Exhaustive { subsets: 0 }, None);
    }
    if w < 63 && (1u64 << w) <= config.subset_budget as u64 {
        return exhaustive(lg, property);
    }
    if let Some(report) = decomposed(lg, property, config.decomposed_limit) {
        return report;
    }
    sampled(lg, property, config)
}

/// Checks a single subset directly on the oracle fill graph.
fn evaluate(lg: &LabeledGraph, extra: &[bool], property: Property, x: &[VertexId]) -> Option<Witness> {
    let fill = oracle::fill_graph(&lg.graph, x);
    let mut gone = vec![false; lg.graph.n()];
    for &v in x {
        gone[v] = true;
    }
    let surviving_extras = lg.w_set.iter().copied().filter(|&w| !gone[w]);
    let witness = |vertex: VertexId| Witness {
        eliminated: x.to_vec(),
        vertex,
        degree: fill.degree(vertex),
    };
    match property {
        Property::MinDegree => {
            let min = surviving_extras
                .chain(lg.u_set.iter().copied())
                .map(|v| fill.degree(v))
                .min()?;
            lg.u_set
                .iter()
                .copied()
                .find(|&u| fill.degree(u) == min)
                .map(witness)
        }
        Property::Bounded(d) => surviving_extras
            .filter(|&w| extra[w])
            .find(|&w| fill.degree(w) > d)
            .map(witness),
    }
}

fn exhaustive(lg: &LabeledGraph, property: Property) -> CheckReport {
    let extra = lg.extra_mask();
    let w = lg.w_set.len();
    let full = (1u64 << w) - 1;
    let mut subsets = 0;
    let mut x = Vec::with_capacity(w);
    for mask in 0..=full {
        if mask == full && !property.allows_full() {
            break;
        }
        x.clear();
        x.extend((0..w).filter(|&i| mask >> i & 1 == 1).map(|i| lg.w_set[i]));
        subsets += 1;
        if let Some(found) = evaluate(lg, &extra, property, &x) {
            return CheckReport::new(Coverage::Exhaustive { subsets }, Some(found));
        }
    }
    CheckReport::new(Coverage::Exhaustive { subsets }, None)
}

fn sampled(lg: &LabeledGraph, property: Property, config: &CheckConfig) -> CheckReport {
    let extra = lg.extra_mask();
    let w = lg.w_set.len();
    let max_size = if property.allows_full() { w } else { w - 1 };
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut subsets = 0;

    for _ in 0..config.subset_budget {
        let size = rng.random_range(0..=max_size);
        let mut x: Vec<_> = index::sample(&mut rng, w, size)
            .into_iter()
            .map(|i| lg.w_set[i])
            .collect();
        x.sort_unstable();
        subsets += 1;
        if let Some(found) = evaluate(lg, &extra, property, &x) {
            return CheckReport::new(Coverage::Sampled { subsets }, Some(found));
        }
    }

    // Prefixes of a greedy run: the states a minimum degree ordering visits.
    if let Ok(greedy) = fast_minimum_degree(&lg.graph, &OrderingConfig::default()) {
        let order: Vec<_> = greedy
            .ordering
            .into_iter()
            .filter(|&v| extra[v] || lg.u_set.binary_search(&v).is_ok())
            .collect();
        for len in 0..=max_size {
            let prefix = &order[..len];
            if prefix.iter().any(|&v| !extra[v]) {
                break;
            }
            subsets += 1;
            if let Some(found) = evaluate(lg, &extra, property, prefix) {
                return CheckReport::new(Coverage::Sampled { subsets }, Some(found));
            }
        }
    }
    CheckReport::new(Coverage::Sampled { subsets }, None)
}

/// One connected component of the extras-induced subgraph.
struct Block {
    extras: Vec<VertexId>,
    /// Non-extra neighbors of the block's extras.
    attachments: Vec<VertexId>,
    /// Local graph on `extras ++ attachments` without attachment-attachment edges.
    local: Graph,
}

/// Summary of one block after eliminating a subset (bitmask) of its extras.
struct BlockState {
    /// Minimum and maximum degree over surviving extras, with the argmax.
    min_extra: Option<usize>,
    max_extra: Option<(usize, VertexId)>,
    /// Per attachment: non-extra neighbors as a bitset over `U` indices.
    u_neighbors: Vec<Vec<u64>>,
    /// Per attachment: number of surviving extras adjacent in the fill graph.
    extra_neighbors: Vec<usize>,
}

fn blocks(lg: &LabeledGraph, extra: &[bool]) -> Vec<Block> {
    let g = &lg.graph;
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for &root in &lg.w_set {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut extras = vec![root];
        let mut head = 0;
        while head < extras.len() {
            let x = extras[head];
            head += 1;
            for &y in g.neighbors(x) {
                if extra[y] && !seen[y] {
                    seen[y] = true;
                    extras.push(y);
                }
            }
        }
        extras.sort_unstable();
        let mut attachments: Vec<_> = extras
            .iter()
            .flat_map(|&x| g.neighbors(x).iter().copied())
            .filter(|&y| !extra[y])
            .collect();
        attachments.sort_unstable();
        attachments.dedup();

        let k = extras.len();
        let local_id = |v: VertexId| {
            extras
                .binary_search(&v)
                .ok()
                .or_else(|| attachments.binary_search(&v).ok().map(|i| k + i))
        };
        let mut edges = Vec::new();
        for (i, &x) in extras.iter().enumerate() {
            for &y in g.neighbors(x) {
                if let Some(j) = local_id(y) {
                    edges.push((i, j));
                }
            }
        }
        let local = Graph::from_edge_list(k + attachments.len(), edges).expect("local ids");
        out.push(Block {
            extras,
            attachments,
            local,
        });
    }
    out
}

fn evaluate_block(block: &Block, mask: u64, u_index: &[usize], words: usize) -> BlockState {
    let k = block.extras.len();
    let eliminated: Vec<_> = (0..k).filter(|&i| mask >> i & 1 == 1).collect();
    let fill = oracle::fill_graph(&block.local, &eliminated);
    let mut min_extra = None;
    let mut max_extra: Option<(usize, VertexId)> = None;
    for i in (0..k).filter(|&i| mask >> i & 1 == 0) {
        let d = fill.degree(i);
        min_extra = Some(min_extra.map_or(d, |m: usize| m.min(d)));
        if max_extra.is_none_or(|(best, _)| d > best) {
            max_extra = Some((d, block.extras[i]));
        }
    }
    let mut u_neighbors = Vec::with_capacity(block.attachments.len());
    let mut extra_neighbors = Vec::with_capacity(block.attachments.len());
    for a in 0..block.attachments.len() {
        let mut bits = vec![0u64; words];
        let mut extras = 0;
        for &y in fill.neighbors(k + a) {
            if y < k {
                extras += 1;
            } else {
                let idx = u_index[block.attachments[y - k]];
                bits[idx / 64] |= 1 << (idx % 64);
            }
        }
        u_neighbors.push(bits);
        extra_neighbors.push(extras);
    }
    BlockState {
        min_extra,
        max_extra,
        u_neighbors,
        extra_neighbors,
    }
}

fn eliminated_extras(block: &Block, mask: u64) -> impl Iterator<Item = VertexId> + '_ {
    (0..block.extras.len())
        .filter(move |&i| mask >> i & 1 == 1)
        .map(|i| block.extras[i])
}

fn decomposed(lg: &LabeledGraph, property: Property, limit: u64) -> Option<CheckReport> {
    if limit == 0 {
        return None;
    }
    let extra = lg.extra_mask();
    let blocks = blocks(lg, &extra);
    if blocks.iter().any(|b| b.extras.len() > MAX_BLOCK_EXTRAS) {
        return None;
    }
    let block_states: u64 = blocks.iter().map(|b| 1u64 << b.extras.len()).sum();
    if block_states > limit {
        return None;
    }
    // Attachments outside U would be survivors the combination step ignores.
    if blocks
        .iter()
        .flat_map(|b| &b.attachments)
        .any(|a| lg.u_set.binary_search(a).is_err())
    {
        return None;
    }

    let mut u_index = vec![usize::MAX; lg.graph.n()];
    for (i, &u) in lg.u_set.iter().enumerate() {
        u_index[u] = i;
    }
    let words = lg.u_set.len().div_ceil(64).max(1);

    match property {
        Property::Bounded(d) => {
            for block in &blocks {
                for mask in 0..1u64 << block.extras.len() {
                    let state = evaluate_block(block, mask, &u_index, words);
                    if let Some((degree, vertex)) = state.max_extra.filter(|&(deg, _)| deg > d) {
                        let witness = Witness {
                            eliminated: eliminated_extras(block, mask).collect(),
                            vertex,
                            degree,
                        };
                        return Some(CheckReport::new(
                            Coverage::Decomposed { states: block_states },
                            Some(witness),
                        ));
                    }
                }
            }
            Some(CheckReport::new(Coverage::Decomposed { states: block_states }, None))
        }
        Property::MinDegree => min_degree_decomposed(lg, &blocks, &u_index, words, limit),
    }
}

fn min_degree_decomposed(
    lg: &LabeledGraph,
    blocks: &[Block],
    u_index: &[usize],
    words: usize,
    limit: u64,
) -> Option<CheckReport> {
    // blocks touching each U vertex, with the attachment slot inside the block
    let mut touching: Vec<Vec<(usize, usize)>> = vec![Vec::new(); lg.u_set.len()];
    for (b, block) in blocks.iter().enumerate() {
        for (slot, &a) in block.attachments.iter().enumerate() {
            touching[u_index[a]].push((b, slot));
        }
    }
    let mut combinations: u64 = 0;
    for list in &touching {
        let product = list
            .iter()
            .try_fold(1u64, |acc, &(b, _)| acc.checked_mul(1u64 << blocks[b].extras.len()))?;
        combinations = combinations.checked_add(product)?;
    }
    let block_states: u64 = blocks.iter().map(|b| 1u64 << b.extras.len()).sum();
    if combinations.saturating_add(block_states) > limit {
        return None;
    }
    let states = combinations + block_states;

    let tables: Vec<Vec<BlockState>> = blocks
        .iter()
        .map(|block| {
            (0..1u64 << block.extras.len())
                .map(|mask| evaluate_block(block, mask, u_index, words))
                .collect()
        })
        .collect();
    // best non-full state of each block for keeping min extra degree high
    let best_partial: Vec<Option<(usize, u64)>> = tables
        .iter()
        .map(|table| {
            let full = table.len() as u64 - 1;
            (0..full)
                .filter_map(|mask| table[mask as usize].min_extra.map(|m| (m, mask)))
                .max_by_key(|&(m, mask)| (m, std::cmp::Reverse(mask)))
        })
        .collect();

    for (ui, &u) in lg.u_set.iter().enumerate() {
        let mut static_bits = vec![0u64; words];
        for &v in lg.graph.neighbors(u) {
            if u_index[v] != usize::MAX {
                static_bits[u_index[v] / 64] |= 1 << (u_index[v] % 64);
            }
        }
        let list = &touching[ui];
        let mut in_list = vec![false; blocks.len()];
        for &(b, _) in list {
            in_list[b] = true;
        }
        // one other block left partially eliminated, the rest fully
        let rest_best = (0..blocks.len())
            .filter(|&b| !in_list[b])
            .filter_map(|b| best_partial[b].map(|(m, mask)| (m, b, mask)))
            .max_by_key(|&(m, b, _)| (m, std::cmp::Reverse(b)));

        let mut masks = vec![0u64; list.len()];
        loop {
            let mut bits = static_bits.clone();
            let mut extras = 0;
            let mut min_extra: Option<usize> = None;
            for (&(b, slot), &mask) in list.iter().zip(&masks) {
                let state = &tables[b][mask as usize];
                for (acc, w) in bits.iter_mut().zip(&state.u_neighbors[slot]) {
                    *acc |= w;
                }
                extras += state.extra_neighbors[slot];
                if let Some(m) = state.min_extra {
                    min_extra = Some(min_extra.map_or(m, |cur| cur.min(m)));
                }
            }
            let partial_rest = if min_extra.is_none() { rest_best } else { None };
            if let Some(bound) = min_extra.or(partial_rest.map(|(m, _, _)| m)) {
                let degree = bits.iter().map(|w| w.count_ones() as usize).sum::<usize>() + extras;
                if degree <= bound {
                    let mut eliminated = Vec::new();
                    for (b, block) in blocks.iter().enumerate() {
                        if let Some(i) = list.iter().position(|&(lb, _)| lb == b) {
                            eliminated.extend(eliminated_extras(block, masks[i]));
                        } else if let Some((_, rb, rmask)) = partial_rest.filter(|&(_, rb, _)| rb == b) {
                            eliminated.extend(eliminated_extras(&blocks[rb], rmask));
                        } else {
                            eliminated.extend(block.extras.iter().copied());
                        }
                    }
                    eliminated.sort_unstable();
                    let witness = Witness {
                        eliminated,
                        vertex: u,
                        degree,
                    };
                    return Some(CheckReport::new(Coverage::Decomposed { states }, Some(witness)));
                }
            }
            // odometer
            let mut i = 0;
            loop {
                if i == masks.len() {
                    break;
                }
                masks[i] += 1;
                if masks[i] < 1u64 << blocks[list[i].0].extras.len() {
                    break;
                }
                masks[i] = 0;
                i += 1;
            }
            if i == masks.len() {
                break;
            }
        }
    }
    Some(CheckReport::new(Coverage::Decomposed { states }, None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators;
    use crate::ufiller::{min_degree_filler, u_comb};
    use proptest::prelude::*;

    fn exact_only() -> CheckConfig {
        CheckConfig {
            subset_budget: 0,
            decomposed_limit: 1 << 30,
            seed: 1,
        }
    }

    #[test]
    fn mindeg_eight_holds_exactly() {
        let lg = min_degree_filler(&(0..8).collect::<Vec<_>>()).unwrap();
        let report = check_min_degree_property(&lg, &CheckConfig::default());
        assert!(report.holds && report.is_exact(), "{report:?}");
        assert!(matches!(report.coverage, Coverage::Decomposed { .. }));
    }

    #[test]
    fn clique_is_vacuously_min_degree() {
        let lg = min_degree_filler(&[0, 1, 2]).unwrap();
        let report = check_min_degree_property(&lg, &CheckConfig::default());
        assert!(report.holds);
        assert_eq!(report.coverage, Coverage::Exhaustive { subsets: 0 });
    }

    #[test]
    fn bare_comb_is_not_min_degree() {
        let lg = u_comb(&[0, 1, 2]).unwrap();
        let report = check_min_degree_property(&lg, &CheckConfig::default());
        assert!(!report.holds);
        assert!(matches!(report.coverage, Coverage::Exhaustive { .. }));
        // with nothing eliminated every target has degree 1, the path ends 2
        let w = report.witness.unwrap();
        assert_eq!((w.eliminated.len(), w.vertex, w.degree), (0, 0, 1));
    }

    #[test]
    fn comb_bounds() {
        let lg = u_comb(&[0, 1, 2, 3]).unwrap();
        let ok = check_d_bounded(&lg, 4, &CheckConfig::default());
        assert!(ok.holds && matches!(ok.coverage, Coverage::Exhaustive { subsets: 16 }));
        let bad = check_d_bounded(&lg, 1, &CheckConfig::default());
        assert!(!bad.holds);
        assert!(bad.witness.unwrap().degree >= 2);
    }

    #[test]
    fn sixteen_bounded_sampled() {
        let lg = min_degree_filler(&(0..16).collect::<Vec<_>>()).unwrap();
        let config = CheckConfig {
            decomposed_limit: 0,
            ..CheckConfig::with_budget(200)
        };
        let report = check_d_bounded(&lg, 13, &config);
        assert!(report.holds);
        assert!(matches!(report.coverage, Coverage::Sampled { .. }));
        let exact = check_d_bounded(&lg, 13, &CheckConfig::default());
        assert!(exact.holds && exact.is_exact());
    }

    #[test]
    fn sampling_finds_comb_violation() {
        let lg = u_comb(&(0..40).collect::<Vec<_>>()).unwrap();
        let config = CheckConfig {
            decomposed_limit: 0,
            ..CheckConfig::with_budget(50)
        };
        let report = check_min_degree_property(&lg, &config);
        assert!(!report.holds);
        let w = report.witness.unwrap();
        assert!(evaluate(&lg, &lg.extra_mask(), Property::MinDegree, &w.eliminated).is_some());
    }

    /// Random labeled graph: `w` extras among `n` vertices, every vertex labeled.
    fn random_labeled(n: usize, w: usize, p: f64, seed: u64) -> LabeledGraph {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let graph = generators::gnp(n, p, &mut rng);
        let mut w_set: Vec<_> = index::sample(&mut rng, n, w.min(n)).into_iter().collect();
        w_set.sort_unstable();
        let u_set = (0..n).filter(|v| w_set.binary_search(v).is_err()).collect();
        LabeledGraph { graph, u_set, w_set }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn decomposed_agrees_with_exhaustive(n in 2usize..12, w in 1usize..9, p in 0.1f64..0.6, seed in any::<u64>()) {
            let lg = random_labeled(n, w, p, seed);
            prop_assume!(!lg.u_set.is_empty());
            let extra = lg.extra_mask();
            for property in [Property::MinDegree, Property::Bounded(2), Property::Bounded(3)] {
                let brute = exhaustive(&lg, property);
                let fast = decomposed(&lg, property, 1 << 30).expect("small enough");
                prop_assert_eq!(brute.holds, fast.holds, "{:?}", property);
                if let Some(witness) = fast.witness {
                    prop_assert!(evaluate(&lg, &extra, property, &witness.eliminated).is_some());
                    if property == Property::MinDegree {
                        prop_assert!(witness.eliminated.len() < lg.w_set.len());
                    }
                }
            }
        }
    }

    #[test]
    fn exact_config_on_small_fillers() {
        for size in 1..=10 {
            let lg = min_degree_filler(&(0..size).collect::<Vec<_>>()).unwrap();
            let md = check_min_degree_property(&lg, &exact_only());
            assert!(md.holds && md.is_exact(), "size {size}: {md:?}");
        }
    }
}
