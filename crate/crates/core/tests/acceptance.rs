//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::cell::Cell;
use std::process::ExitCode;
use std::time::Instant;

use mindeg::bench::{self, Suite};
use mindeg::graph::generators;
use mindeg::mindegree::{DenseAdjacency, Engine, FillAdjacency, OrderedSetAdjacency};
use mindeg::oracle;
use mindeg::ufiller::{
    check_d_bounded, check_min_degree_property, clique_union, clique_union_bruteforce, is_filler,
    min_degree_filler, CheckConfig, CliqueUnionInstance,
};
use mindeg::{fast_minimum_degree, Backend, Graph, OrderingConfig, TieBreak};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

thread_local! {
    static BOUND_CHECKS: Cell<usize> = const { Cell::new(0) };
    static BOUND_FAILURES: Cell<usize> = const { Cell::new(0) };
}

/// Checks all three attempt bounds and records the outcome for criterion 3.
fn record_bounds(g: &Graph, r: &mindeg::EliminationResult) -> Result<(), String> {
    BOUND_CHECKS.with(|c| c.set(c.get() + 1));
    r.bounds(g).check(r.insertion_attempts).map_err(|v| {
        BOUND_FAILURES.with(|c| c.set(c.get() + 1));
        v.to_string()
    })
}

fn rules(seed: u64) -> [TieBreak; 3] {
    [TieBreak::SmallestId, TieBreak::LargestId, TieBreak::Random { seed }]
}

fn oracle_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut runs = 0;
    for case in 0..1000 {
        let n = rng.random_range(2..=50);
        let p = rng.random_range(0.0..=0.5);
        let g = generators::gnp(n, p, &mut rng);
        for backend in [Backend::Dense, Backend::OrderedSet] {
            for tb in rules(case) {
                let r = fast_minimum_degree(&g, &OrderingConfig::new(backend, tb)).map_err(|e| e.to_string())?;
                if let Some(v) = oracle::verify_min_degree_ordering(&g, &r.ordering).map_err(|e| e.to_string())? {
                    return Err(format!("case {case} {backend:?} {tb}: {v}"));
                }
                let fill = oracle::fill_count_of_ordering(&g, &r.ordering).map_err(|e| e.to_string())?;
                if fill != r.m_plus {
                    return Err(format!("case {case}: m+ {} but oracle counts {fill}", r.m_plus));
                }
                record_bounds(&g, &r).map_err(|e| format!("case {case}: {e}"))?;
                runs += 1;
            }
        }
    }
    Ok(format!("{runs} runs verified"))
}

fn cross_check_run<A: FillAdjacency>(g: &Graph, tb: TieBreak) -> Result<usize, String> {
    let mut engine = Engine::<A>::new(g, tb);
    let mut steps = 0;
    loop {
        let hyper = engine.hyperedges().clique_union_edges();
        let explicit = engine.adjacency().edges();
        let fill: Vec<_> = oracle::fill_graph(g, engine.ordering()).edges().collect();
        if hyper != explicit || explicit != fill {
            return Err(format!("after {:?}: hyperedges {hyper:?}, adjacency {explicit:?}, oracle {fill:?}", engine.ordering()));
        }
        if engine.step().map_err(|e| e.to_string())?.is_none() {
            break;
        }
        steps += 1;
    }
    let r = engine.finish().map_err(|e| e.to_string())?;
    record_bounds(g, &r)?;
    Ok(steps)
}

fn hypergraph_cross_check() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut steps = 0;
    for case in 0..100 {
        let n = rng.random_range(1..=20);
        let p = rng.random_range(0.0..=0.6);
        let g = generators::gnp(n, p, &mut rng);
        let tb = rules(case)[case as usize % 3];
        steps += cross_check_run::<DenseAdjacency>(&g, tb).map_err(|e| format!("case {case}: {e}"))?;
        steps += cross_check_run::<OrderedSetAdjacency>(&g, tb).map_err(|e| format!("case {case}: {e}"))?;
    }
    Ok(format!("{steps} steps, three representations equal at each"))
}

fn filler_correctness() -> Outcome {
    let mut notes = Vec::new();
    for size in (1..=10).chain([16, 32, 64]) {
        let u: Vec<_> = (0..size).collect();
        let lg = min_degree_filler(&u).map_err(|e| e.to_string())?;
        if !is_filler(&lg) {
            return Err(format!("|U|={size} is not a filler"));
        }
        let config = CheckConfig::with_budget(500);
        let md = check_min_degree_property(&lg, &config);
        let bounded = check_d_bounded(&lg, size.saturating_sub(3), &config);
        for (name, report) in [("min-degree", &md), ("bounded", &bounded)] {
            if !report.holds {
                return Err(format!("|U|={size} {name}: {:?}", report.witness));
            }
            if size <= 10 && !report.is_exact() {
                return Err(format!("|U|={size} {name}: only sampled"));
            }
        }
        let tag = |exact: bool| if exact { "exact" } else { "sampled" };
        if size >= 8 {
            notes.push(format!("{size}:{}/{}", tag(md.is_exact()), tag(bounded.is_exact())));
        }
    }
    Ok(format!("sizes 1..10 exact; coverage {}", notes.join(" ")))
}

fn sparsity_scaling() -> Outcome {
    let mut edge_ratios = Vec::new();
    let mut degree_ratios = Vec::new();
    for size in [8usize, 16, 32, 64, 128, 256] {
        let lg = min_degree_filler(&(0..size).collect::<Vec<_>>()).map_err(|e| e.to_string())?;
        let scale = 1.0 + (size as f64).log2();
        edge_ratios.push(lg.graph.m() as f64 / (size as f64 * scale));
        degree_ratios.push(lg.graph.max_degree() as f64 / scale);
    }
    let spread = |ratios: &[f64]| ratios.iter().fold(0.0f64, |acc, &r| acc.max(r / ratios[0]));
    let (edges, degrees) = (spread(&edge_ratios), spread(&degree_ratios));
    let summary = format!("max ratio vs |U|=8: edges {edges:.3}, max degree {degrees:.3}");
    if edges < 2.0 && degrees < 2.0 {
        Ok(summary)
    } else {
        Err(summary)
    }
}

fn worst_case_fill() -> Outcome {
    let lg = min_degree_filler(&(0..256).collect::<Vec<_>>()).map_err(|e| e.to_string())?;
    let start = Instant::now();
    let r = fast_minimum_degree(&lg.graph, &OrderingConfig::default()).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed().as_secs_f64();
    record_bounds(&lg.graph, &r)?;
    if r.m_plus < 256 * 255 / 2 {
        return Err(format!("m+ = {}", r.m_plus));
    }
    let w = lg.w_set.len();
    if let Some(v) = r.ordering[..w].iter().find(|&&v| !lg.is_extra(v)) {
        return Err(format!("target vertex {v} eliminated among the first {w}"));
    }
    Ok(format!("n={} m+={} first {w} eliminated are extras, {elapsed:.2}s", lg.graph.n(), r.m_plus))
}

fn reduction_agreement() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut complete = 0;
    for case in 0..500u64 {
        let n = rng.random_range(1..=32);
        let d = rng.random_range(1..=8);
        let density = rng.random_range(0.2..=0.9);
        let subsets = (0..d).map(|_| (0..n).filter(|_| rng.random_bool(density)).collect()).collect();
        let instance = CliqueUnionInstance::new(n, subsets).map_err(|e| e.to_string())?;
        let expected = clique_union_bruteforce(&instance);
        let tb = rules(case)[case as usize % 3];
        let fast = clique_union(&instance, |g| {
            let r = fast_minimum_degree(g, &OrderingConfig::new(Backend::Auto, tb))?;
            Ok(r.ordering)
        })
        .map_err(|e| e.to_string())?;
        let naive = clique_union(&instance, |g| oracle::naive_minimum_degree(g, tb).map(|r| r.ordering))
            .map_err(|e| e.to_string())?;
        if fast != expected || naive != expected {
            return Err(format!("case {case}: brute {expected}, fast {fast}, naive {naive}"));
        }
        complete += expected as usize;
    }
    Ok(format!("500 instances ({complete} complete) agree under both engines"))
}

fn orientation() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut worst = 0.0f64;
    for case in 0..200 {
        let n = rng.random_range(1..=200);
        let p = rng.random_range(0.0..=0.6);
        let g = generators::gnp(n, p, &mut rng);
        let o = oracle::orient_bounded_outdegree(&g);
        let d = o.max_out_degree();
        if o.arc_count() != g.m() || d * d > 2 * g.m() {
            return Err(format!("case {case}: out-degree {d}, m = {}", g.m()));
        }
        if g.m() > 0 {
            worst = worst.max((d * d) as f64 / (2 * g.m()) as f64);
        }
    }
    Ok(format!("200 graphs, max outdeg²/2m = {worst:.3}"))
}

fn scaling_smoke() -> Outcome {
    let mut rows = Vec::new();
    for n in [1000, 2000, 4000, 8000] {
        let row = bench::run_instance(Suite::Random, n, 1, 9, &OrderingConfig::default()).map_err(|e| e.to_string())?;
        BOUND_CHECKS.with(|c| c.set(c.get() + 1));
        if row.attempts > (row.n * row.m) as u64 {
            return Err(format!("n={n}: k={} > n·m", row.attempts));
        }
        rows.push(row);
    }
    let ratios: Vec<String> = rows
        .windows(2)
        .map(|w| format!("{:.2}", w[1].wall_ms / w[0].wall_ms.max(1e-6)))
        .collect();
    let ks: Vec<String> = rows.iter().map(|r| r.attempts.to_string()).collect();
    Ok(format!("k = [{}] <= n·m; wall-time doubling ratios [{}]", ks.join(", "), ratios.join(", ")))
}

fn attempt_bounds() -> Outcome {
    let (checks, failures) = (BOUND_CHECKS.with(Cell::get), BOUND_FAILURES.with(Cell::get));
    // grid and ufiller bench rows check the same bounds internally
    bench::run_suite(Suite::Grid, &[4, 8, 16, 32, 64], 1, 0, &OrderingConfig::default()).map_err(|e| e.to_string())?;
    bench::run_suite(Suite::Ufiller, &[16, 64, 128], 1, 0, &OrderingConfig::default()).map_err(|e| e.to_string())?;
    if failures > 0 {
        return Err(format!("{failures} of {checks} runs exceeded a bound"));
    }
    Ok(format!("{} runs within all three bounds", checks + 8))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("oracle equivalence", oracle_equivalence),
        ("hypergraph/adjacency cross-check", hypergraph_cross_check),
        ("filler correctness", filler_correctness),
        ("sparsity scaling", sparsity_scaling),
        ("worst-case fill", worst_case_fill),
        ("reduction agreement", reduction_agreement),
        ("orientation", orientation),
        ("scaling smoke", scaling_smoke),
        ("insertion-attempt bounds", attempt_bounds),
    ];
    // criterion 3 runs last so it can report on every bound check made before it
    let numbers = [1, 2, 4, 5, 6, 7, 8, 9, 3];
    let mut results: Vec<(usize, &str, Outcome, f64)> = Vec::new();
    for (&number, (name, check)) in numbers.iter().zip(criteria) {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        results.push((number, name, outcome, start.elapsed().as_secs_f64()));
    }
    results.sort_by_key(|r| r.0);
    let mut failed = 0;
    for (number, name, outcome, secs) in &results {
        match outcome {
            Ok(detail) => println!("PASS criterion {number}: {name} ({detail}) [{secs:.1}s]"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {number}: {name} ({detail}) [{secs:.1}s]");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
