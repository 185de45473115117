//! Upper bounds on the number of insertion attempts.
//!
//! With `deg` taken in the input graph and `E⁺` the set of all edges ever
//! present in the fill graph:
//!
//! * `k <= Σ_{uv ∈ E⁺} min(deg u, deg v)`
//! * `k <= Δ · m⁺`
//! * `k <= 2m · sqrt(2 m⁺)`, checked in integers as `k² <= 8 m² m⁺`.

use thiserror::Error;

use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AttemptBounds {
    pub sum_min_degree: u64,
    pub max_degree: u64,
    pub m: u64,
    pub m_plus: u64,
}

#[derive(Debug, Clone, PartialEq, Error)]
#[error("{attempts} insertion attempts exceed the {bound_name} bound ({bound})")]
pub struct BoundViolation {
    pub bound_name: &'static str,
    pub attempts: u64,
    pub bound: f64,
}

impl AttemptBounds {
    pub fn new(g: &Graph, fill_edges: &[(VertexId, VertexId)]) -> Self {
        let sum_min_degree = fill_edges
            .iter()
            .map(|&(u, v)| g.degree(u).min(g.degree(v)) as u64)
            .sum();
        AttemptBounds {
            sum_min_degree,
            max_degree: g.max_degree() as u64,
            m: g.m() as u64,
            m_plus: fill_edges.len() as u64,
        }
    }

    pub fn delta_m_plus(&self) -> u64 {
        self.max_degree * self.m_plus
    }

    /// `2m · sqrt(2 m⁺)`, for reporting.
    pub fn sqrt_bound(&self) -> f64 {
        2.0 * self.m as f64 * (2.0 * self.m_plus as f64).sqrt()
    }

    pub fn within_sqrt_bound(&self, attempts: u64) -> bool {
        let k = attempts as u128;
        let m = self.m as u128;
        k * k <= 8 * m * m * self.m_plus as u128
    }

    pub fn check(&self, attempts: u64) -> Result<(), BoundViolation> {
        let violation = |bound_name, bound| BoundViolation {
            bound_name,
            attempts,
            bound,
        };
        if attempts > self.sum_min_degree {
            return Err(violation("sum of min degrees", self.sum_min_degree as f64));
        }
        if attempts > self.delta_m_plus() {
            return Err(violation("max degree times m+", self.delta_m_plus() as f64));
        }
        if !self.within_sqrt_bound(attempts) {
            return Err(violation("2m sqrt(2 m+)", self.sqrt_bound()));
        }
        Ok(())
    }
}
