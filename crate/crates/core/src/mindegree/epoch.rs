use crate::graph::VertexId;

/// Set over `0..n` with O(1) clearing: `v` is a member iff its stamp equals
/// the current epoch.
#[derive(Debug, Clone)]
pub struct EpochArray {
    stamp: Vec<u64>,
    epoch: u64,
}

impl EpochArray {
    pub fn new(n: usize) -> Self {
        EpochArray {
            stamp: vec![0; n],
            epoch: 1,
        }
    }

    /// Empties the set.
    #[inline]
    pub fn reset(&mut self) {
        self.epoch += 1;
    }

    #[inline]
    pub fn insert(&mut self, v: VertexId) {
        self.stamp[v] = self.epoch;
    }

    #[inline]
    pub fn contains(&self, v: VertexId) -> bool {
        self.stamp[v] == self.epoch
    }
}
