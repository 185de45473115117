//! Benchmark suites that double as runtime checks of the attempt bounds.

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{generators, Graph};
use crate::mindegree::{fast_minimum_degree, OrderingConfig};
use crate::ufiller::min_degree_filler;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    /// `G(n, m)` with `m = 4n`; size is `n`.
    Random,
    /// Square grid; size is the side length.
    Grid,
    /// Min-degree filler; size is `|U|`.
    Ufiller,
}

impl std::str::FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "random" => Ok(Suite::Random),
            "grid" => Ok(Suite::Grid),
            "ufiller" => Ok(Suite::Ufiller),
            other => Err(Error::Config(format!("unknown bench suite `{other}`"))),
        }
    }
}

impl std::fmt::Display for Suite {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Suite::Random => "random",
            Suite::Grid => "grid",
            Suite::Ufiller => "ufiller",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub suite: String,
    pub size: usize,
    pub n: usize,
    pub m: usize,
    pub m_plus: usize,
    pub attempts: u64,
    pub sum_min_degree: u64,
    pub delta_m_plus: u64,
    pub sqrt_bound: f64,
    /// Fastest of the repeats.
    pub wall_ms: f64,
}

pub const BENCH_COLUMNS: [&str; 10] = [
    "suite",
    "size",
    "n",
    "m",
    "m_plus",
    "attempts",
    "sum_min_degree",
    "delta_m_plus",
    "sqrt_bound",
    "wall_ms",
];

impl BenchRow {
    pub fn tsv_header() -> String {
        BENCH_COLUMNS.join("\t")
    }

    pub fn to_tsv(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{:.1}\t{:.3}",
            self.suite,
            self.size,
            self.n,
            self.m,
            self.m_plus,
            self.attempts,
            self.sum_min_degree,
            self.delta_m_plus,
            self.sqrt_bound,
            self.wall_ms
        )
    }
}

pub fn instance(suite: Suite, size: usize, seed: u64) -> Result<Graph> {
    Ok(match suite {
        Suite::Random => {
            let max_edges = size * size.saturating_sub(1) / 2;
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ size as u64);
            generators::gnm(size, (4 * size).min(max_edges), &mut rng)
        }
        Suite::Grid => generators::grid(size, size),
        Suite::Ufiller => min_degree_filler(&(0..size).collect::<Vec<_>>())?.graph,
    })
}

/// Runs one instance `repeats` times (at least once) and checks every bound.
pub fn run_instance(suite: Suite, size: usize, repeats: usize, seed: u64, config: &OrderingConfig) -> Result<BenchRow> {
    let g = instance(suite, size, seed)?;
    let mut best = f64::INFINITY;
    let mut result = None;
    for _ in 0..repeats.max(1) {
        let start = Instant::now();
        let r = fast_minimum_degree(&g, config)?;
        best = best.min(start.elapsed().as_secs_f64() * 1e3);
        result = Some(r);
    }
    let result = result.expect("at least one repeat");
    let bounds = result.bounds(&g);
    bounds
        .check(result.insertion_attempts)
        .map_err(|v| Error::Check(format!("{suite} size {size}: {v}")))?;
    if suite == Suite::Ufiller && result.m_plus < size * size.saturating_sub(1) / 2 {
        return Err(Error::Check(format!(
            "ufiller size {size}: m+ = {} is below |U|(|U|-1)/2",
            result.m_plus
        )));
    }
    log::info!("{suite} {size}: n={} k={} {best:.3} ms", g.n(), result.insertion_attempts);
    Ok(BenchRow {
        suite: suite.to_string(),
        size,
        n: g.n(),
        m: g.m(),
        m_plus: result.m_plus,
        attempts: result.insertion_attempts,
        sum_min_degree: bounds.sum_min_degree,
        delta_m_plus: bounds.delta_m_plus(),
        sqrt_bound: bounds.sqrt_bound(),
        wall_ms: best,
    })
}

pub fn run_suite(suite: Suite, sizes: &[usize], repeats: usize, seed: u64, config: &OrderingConfig) -> Result<Vec<BenchRow>> {
    sizes
        .iter()
        .map(|&size| run_instance(suite, size, repeats, seed, config))
        .collect()
}
