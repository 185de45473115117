use crate::error::{Error, Result};
use crate::graph::VertexId;

use super::tiebreak::TieBreaker;

const NIL: usize = usize::MAX;

/// Degree-indexed buckets of intrusive doubly-linked lists.
///
/// `cached_min` never exceeds the smallest non-empty bucket: inserting below it
/// lowers it, and extraction scans upward from it.
#[derive(Debug, Clone)]
pub struct BucketQueue {
    head: Vec<usize>,
    next: Vec<usize>,
    prev: Vec<usize>,
    key: Vec<usize>,
    queued: Vec<bool>,
    len: usize,
    cached_min: usize,
    scratch: Vec<VertexId>,
}

impl BucketQueue {
    /// Queue for vertices `0..n` with keys in `0..n`.
    pub fn new(n: usize) -> Self {
        BucketQueue {
            head: vec![NIL; n.max(1)],
            next: vec![NIL; n],
            prev: vec![NIL; n],
            key: vec![0; n],
            queued: vec![false; n],
            len: 0,
            cached_min: n.max(1),
            scratch: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.queued[v]
    }

    pub fn key(&self, v: VertexId) -> Option<usize> {
        self.queued[v].then_some(self.key[v])
    }

    pub fn insert(&mut self, v: VertexId, key: usize) {
        debug_assert!(!self.queued[v], "vertex {v} already queued");
        self.key[v] = key;
        self.queued[v] = true;
        self.prev[v] = NIL;
        self.next[v] = self.head[key];
        if self.head[key] != NIL {
            self.prev[self.head[key]] = v;
        }
        self.head[key] = v;
        self.len += 1;
        if key < self.cached_min {
            self.cached_min = key;
        }
    }

    pub fn remove(&mut self, v: VertexId) {
        debug_assert!(self.queued[v], "vertex {v} not queued");
        let (p, n) = (self.prev[v], self.next[v]);
        if p == NIL {
            self.head[self.key[v]] = n;
        } else {
            self.next[p] = n;
        }
        if n != NIL {
            self.prev[n] = p;
        }
        self.queued[v] = false;
        self.len -= 1;
    }

    /// Moves `v` to bucket `key`; a no-op when the key is unchanged.
    pub fn update(&mut self, v: VertexId, key: usize) {
        if self.queued[v] && self.key[v] == key {
            return;
        }
        if self.queued[v] {
            self.remove(v);
        }
        self.insert(v, key);
    }

    /// Members of the bucket at `key`, in list order.
    pub fn bucket(&self, key: usize) -> impl Iterator<Item = VertexId> + '_ {
        let mut cur = self.head.get(key).copied().unwrap_or(NIL);
        std::iter::from_fn(move || {
            (cur != NIL).then(|| {
                let v = cur;
                cur = self.next[v];
                v
            })
        })
    }

    /// Smallest non-empty key, advancing the cached minimum.
    pub fn min_key(&mut self) -> Option<usize> {
        if self.len == 0 {
            return None;
        }
        while self.head[self.cached_min] == NIL {
            self.cached_min += 1;
        }
        Some(self.cached_min)
    }

    /// Removes and returns a vertex of minimum key, chosen among the minimum
    /// bucket by `tie_break`.
    pub fn extract_min(&mut self, tie_break: &mut TieBreaker) -> Result<VertexId> {
        let key = self
            .min_key()
            .ok_or_else(|| Error::State("bucket queue is empty".into()))?;
        let mut candidates = std::mem::take(&mut self.scratch);
        candidates.clear();
        candidates.extend(self.bucket(key));
        let v = tie_break.choose(&mut candidates);
        self.scratch = candidates;
        self.remove(v);
        Ok(v)
    }
}
