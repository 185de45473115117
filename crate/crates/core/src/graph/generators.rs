//! Small deterministic and seeded random graph families.

use rand::seq::index;
use rand::Rng;

use super::Graph;

pub fn path(n: usize) -> Graph {
    Graph::from_edge_list(n, (1..n).map(|v| (v - 1, v))).expect("ids in range")
}

pub fn cycle(n: usize) -> Graph {
    let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    if n > 2 {
        edges.push((n - 1, 0));
    }
    Graph::from_edge_list(n, edges).expect("ids in range")
}

/// Star with `leaves` leaves `0..leaves` and center `leaves`.
pub fn star(leaves: usize) -> Graph {
    Graph::from_edge_list(leaves + 1, (0..leaves).map(|v| (v, leaves))).expect("ids in range")
}

pub fn complete(n: usize) -> Graph {
    let all: Vec<_> = (0..n).collect();
    Graph::complete(&all, n).expect("ids in range")
}

/// `rows x cols` grid with 4-neighborhoods, row-major ids.
pub fn grid(rows: usize, cols: usize) -> Graph {
    let mut edges = Vec::with_capacity(2 * rows * cols);
    for r in 0..rows {
        for c in 0..cols {
            let v = r * cols + c;
            if c + 1 < cols {
                edges.push((v, v + 1));
            }
            if r + 1 < rows {
                edges.push((v, v + cols));
            }
        }
    }
    Graph::from_edge_list(rows * cols, edges).expect("ids in range")
}

/// Erdős–Rényi G(n, p).
pub fn gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, edges).expect("ids in range")
}

/// Uniform graph with exactly `min(m, n(n-1)/2)` edges.
pub fn gnm<R: Rng + ?Sized>(n: usize, m: usize, rng: &mut R) -> Graph {
    let total = n * n.saturating_sub(1) / 2;
    let m = m.min(total);
    if total == 0 {
        return Graph::empty(n);
    }
    let edges = index::sample(rng, total, m).into_iter().map(|k| pair_from_index(n, k));
    Graph::from_edge_list(n, edges).expect("ids in range")
}

/// Inverse of the row-major enumeration of pairs `u < v`.
fn pair_from_index(n: usize, k: usize) -> (usize, usize) {
    // pairs preceding row u
    let offset = |u: usize| u * n - u * (u + 1) / 2;
    let (mut lo, mut hi) = (0, n - 1);
    while hi - lo > 1 {
        let mid = (lo + hi) / 2;
        if offset(mid) <= k {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo, lo + 1 + k - offset(lo))
}
