use crate::graph::VertexId;

pub type HyperedgeId = usize;

/// Append-only list of vertex sets whose cliques, restricted to the valid
/// ones, cover the current fill graph.
///
/// Removed hyperedges are only marked invalid. Incidence lists keep stale
/// handles and callers skip them on traversal.
#[derive(Debug, Clone, Default)]
pub struct HyperedgeStore {
    members: Vec<VertexId>,
    offsets: Vec<usize>,
    valid: Vec<bool>,
    incidence: Vec<Vec<HyperedgeId>>,
}

impl HyperedgeStore {
    pub fn new(n: usize) -> Self {
        HyperedgeStore {
            members: Vec::new(),
            offsets: vec![0],
            valid: Vec::new(),
            incidence: vec![Vec::new(); n],
        }
    }

    pub fn push(&mut self, set: &[VertexId]) -> HyperedgeId {
        let id = self.valid.len();
        self.members.extend_from_slice(set);
        self.offsets.push(self.members.len());
        self.valid.push(true);
        for &v in set {
            self.incidence[v].push(id);
        }
        id
    }

    pub fn members(&self, h: HyperedgeId) -> &[VertexId] {
        &self.members[self.offsets[h]..self.offsets[h + 1]]
    }

    pub fn is_valid(&self, h: HyperedgeId) -> bool {
        self.valid[h]
    }

    pub fn invalidate(&mut self, h: HyperedgeId) {
        self.valid[h] = false;
    }

    /// Total number of hyperedges ever created.
    pub fn len(&self) -> usize {
        self.valid.len()
    }

    pub fn is_empty(&self) -> bool {
        self.valid.is_empty()
    }

    /// Takes `v`'s incidence list, leaving it empty.
    pub fn take_incidence(&mut self, v: VertexId) -> Vec<HyperedgeId> {
        std::mem::take(&mut self.incidence[v])
    }

    pub fn incidence(&self, v: VertexId) -> &[HyperedgeId] {
        &self.incidence[v]
    }

    pub fn valid_hyperedges(&self) -> impl Iterator<Item = &[VertexId]> + '_ {
        (0..self.len())
            .filter(|&h| self.valid[h])
            .map(|h| self.members(h))
    }

    /// Edge set of the union of cliques over valid hyperedges, as sorted pairs.
    pub fn clique_union_edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut edges = Vec::new();
        for set in self.valid_hyperedges() {
            for (i, &u) in set.iter().enumerate() {
                for &v in &set[i + 1..] {
                    edges.push((u.min(v), u.max(v)));
                }
            }
        }
        edges.sort_unstable();
        edges.dedup();
        edges
    }
}
