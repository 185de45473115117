use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use log::info;

use mindeg::bench::{self, BenchRow, Suite};
use mindeg::io::{self as mio, MatrixMarketOptions, RunStats, StatsFormat};
use mindeg::oracle;
use mindeg::ufiller::{self, CliqueUnionInstance, LabeledGraph};
use mindeg::{fast_minimum_degree, Backend, Error, Graph, OrderingConfig, TieBreak};

#[derive(Parser)]
#[command(name = "mindeg", version, about = "Exact minimum degree orderings and adversarial filler graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a minimum degree ordering.
    Order(OrderArgs),
    /// Check that a permutation is a minimum degree ordering.
    Verify(VerifyArgs),
    /// Print run statistics of an ordering.
    Stats(StatsArgs),
    /// Write a filler graph and its U/W labels.
    GenUfiller(GenArgs),
    /// Decide whether a union of cliques is complete.
    CliqueUnion(CliqueUnionArgs),
    /// Run a benchmark suite and check the attempt bounds on every row.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    /// Matrix Market coordinate
    Mm,
    /// `u v` edge list
    Edges,
}

#[derive(Args)]
struct InputArgs {
    /// Graph file (.mtx is read as Matrix Market unless --format says otherwise).
    input: PathBuf,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Symmetrize general Matrix Market patterns instead of rejecting them.
    #[arg(long)]
    symmetrize: bool,
}

impl InputArgs {
    fn read(&self) -> mindeg::Result<Graph> {
        let format = self.format.unwrap_or_else(|| {
            match self.input.extension().and_then(|e| e.to_str()) {
                Some("mtx") | Some("mm") => Format::Mm,
                _ => Format::Edges,
            }
        });
        let g = match format {
            Format::Mm => mio::read_matrix_market(&self.input, MatrixMarketOptions { symmetrize: self.symmetrize })?,
            Format::Edges => mio::read_edge_list(&self.input)?,
        };
        info!("read {}: n={} m={}", self.input.display(), g.n(), g.m());
        Ok(g)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum BackendArg {
    Dense,
    #[value(alias = "ordered-set")]
    Sparse,
    Auto,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TieBreakArg {
    Smallest,
    Largest,
    Random,
}

#[derive(Args)]
struct EngineArgs {
    #[arg(long, value_enum, default_value = "auto")]
    backend: BackendArg,
    #[arg(long, value_enum, default_value = "smallest")]
    tie_break: TieBreakArg,
    /// Seed for `--tie-break random` (required there).
    #[arg(long, required_if_eq("tie_break", "random"))]
    seed: Option<u64>,
    /// Largest n for the dense backend.
    #[arg(long, default_value_t = mindeg::mindegree::DEFAULT_DENSE_LIMIT)]
    dense_limit: usize,
}

impl EngineArgs {
    fn tie_break(&self) -> TieBreak {
        match self.tie_break {
            TieBreakArg::Smallest => TieBreak::SmallestId,
            TieBreakArg::Largest => TieBreak::LargestId,
            TieBreakArg::Random => TieBreak::Random {
                seed: self.seed.expect("clap requires --seed"),
            },
        }
    }

    fn config(&self) -> OrderingConfig {
        OrderingConfig {
            backend: match self.backend {
                BackendArg::Dense => Backend::Dense,
                BackendArg::Sparse => Backend::OrderedSet,
                BackendArg::Auto => Backend::Auto,
            },
            tie_break: self.tie_break(),
            dense_limit: self.dense_limit,
        }
    }
}

#[derive(Args)]
struct OrderArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    engine: EngineArgs,
    /// Permutation output; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    stats: Option<PathBuf>,
    #[arg(long, default_value = "json")]
    stats_format: StatsFormat,
    /// Verify the ordering with the brute-force oracle before writing it.
    #[arg(long)]
    self_check: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleArg {
    Naive,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Permutation file, one 0-based id per line.
    perm: PathBuf,
    #[arg(long, value_enum, default_value = "naive")]
    oracle: OracleArg,
}

#[derive(Args)]
struct StatsArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    engine: EngineArgs,
    #[arg(long, default_value = "json")]
    stats_format: StatsFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Comb,
    Bounded,
    Mindeg,
}

#[derive(Args)]
struct GenArgs {
    /// |U|; targets are 0..size, extras follow.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    size: u64,
    #[arg(long, value_enum, default_value = "mindeg")]
    kind: Kind,
    /// Degree bound for `--kind bounded`.
    #[arg(long, value_parser = clap::value_parser!(u64).range(2..), required_if_eq("kind", "bounded"))]
    d: Option<u64>,
    /// Edge list output; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    labels: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum EngineKind {
    Fast,
    Naive,
}

#[derive(Args)]
struct CliqueUnionArgs {
    /// Instance file: `n d`, then d lines of ids.
    instance: PathBuf,
    #[arg(long, value_enum, default_value = "fast")]
    engine: EngineKind,
    #[command(flatten)]
    engine_args: EngineArgs,
    /// Also run the brute force and fail on disagreement.
    #[arg(long)]
    check: bool,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long)]
    suite: Suite,
    /// Comma-separated sizes; may be empty.
    #[arg(long, default_value = "")]
    sizes: String,
    #[arg(long, default_value_t = 1)]
    repeats: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// TSV output; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// A failed check that is reported on stdout and exits with status 1.
struct Failure(String);

enum Outcome {
    Ok,
    Failed(Failure),
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Check(_) | Error::State(_) => 1,
        Error::Config(_) => 2,
        Error::Parse { .. }
        | Error::Io(_)
        | Error::UnsupportedFormat(_)
        | Error::InvalidInput(_)
        | Error::VertexOutOfRange { .. } => 3,
    }
}

fn emit(path: Option<&Path>, text: &str) -> mindeg::Result<()> {
    match path {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn timed_order(g: &Graph, engine: &EngineArgs) -> mindeg::Result<(mindeg::EliminationResult, RunStats)> {
    let config = engine.config();
    let start = Instant::now();
    let result = fast_minimum_degree(g, &config)?;
    let wall_ms = start.elapsed().as_secs_f64() * 1e3;
    result
        .bounds(g)
        .check(result.insertion_attempts)
        .map_err(|v| Error::Check(v.to_string()))?;
    let stats = RunStats::from_result(g, &result, config.tie_break, wall_ms);
    Ok((result, stats))
}

fn order(args: &OrderArgs) -> mindeg::Result<Outcome> {
    let g = args.input.read()?;
    let (result, stats) = timed_order(&g, &args.engine)?;
    info!("m+={} k={} backend={}", result.m_plus, result.insertion_attempts, result.backend);
    if args.self_check {
        if let Some(v) = oracle::verify_min_degree_ordering(&g, &result.ordering)? {
            return Ok(Outcome::Failed(Failure(format!("self-check failed: violation at {v}"))));
        }
    }
    emit(args.out.as_deref(), &mio::format_permutation(&result.ordering))?;
    if let Some(path) = &args.stats {
        mio::write_stats(&stats, path, args.stats_format)?;
    }
    Ok(Outcome::Ok)
}

fn verify(args: &VerifyArgs) -> mindeg::Result<Outcome> {
    let OracleArg::Naive = args.oracle;
    let g = args.input.read()?;
    let ordering = mio::read_permutation(&args.perm)?;
    if ordering.len() != g.n() {
        return Err(Error::InvalidInput(format!(
            "permutation has {} entries but the graph has {} vertices",
            ordering.len(),
            g.n()
        )));
    }
    match oracle::verify_min_degree_ordering(&g, &ordering)? {
        None => {
            println!("VALID");
            Ok(Outcome::Ok)
        }
        Some(v) => Ok(Outcome::Failed(Failure(format!("INVALID: violation at {v}")))),
    }
}

fn stats(args: &StatsArgs) -> mindeg::Result<Outcome> {
    let g = args.input.read()?;
    let (_, stats) = timed_order(&g, &args.engine)?;
    emit(None, &stats.format(args.stats_format))?;
    Ok(Outcome::Ok)
}

fn gen_ufiller(args: &GenArgs) -> mindeg::Result<Outcome> {
    let u: Vec<_> = (0..args.size as usize).collect();
    let lg: LabeledGraph = match args.kind {
        Kind::Comb => ufiller::u_comb(&u)?,
        Kind::Bounded => ufiller::bounded_filler(&u, args.d.expect("clap requires --d") as usize)?,
        Kind::Mindeg => ufiller::min_degree_filler(&u)?,
    };
    info!("filler: |U|={} |W|={} m={}", lg.u_set.len(), lg.w_set.len(), lg.graph.m());
    emit(args.out.as_deref(), &mio::format_edge_list(&lg.graph))?;
    if let Some(path) = &args.labels {
        mio::write_labels(&lg, path)?;
    }
    Ok(Outcome::Ok)
}

fn clique_union(args: &CliqueUnionArgs) -> mindeg::Result<Outcome> {
    let instance: CliqueUnionInstance = mio::read_clique_union_instance(&args.instance)?;
    let config = args.engine_args.config();
    let answer = match args.engine {
        EngineKind::Fast => ufiller::clique_union(&instance, |g| fast_minimum_degree(g, &config).map(|r| r.ordering))?,
        EngineKind::Naive => {
            ufiller::clique_union(&instance, |g| oracle::naive_minimum_degree(g, config.tie_break).map(|r| r.ordering))?
        }
    };
    println!("{answer}");
    if args.check {
        let expected = ufiller::clique_union_bruteforce(&instance);
        if expected != answer {
            return Ok(Outcome::Failed(Failure(format!("disagreement: brute force says {expected}"))));
        }
    }
    Ok(Outcome::Ok)
}

fn parse_sizes(sizes: &str) -> mindeg::Result<Vec<usize>> {
    sizes
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| Error::Config(format!("invalid size `{s}`"))))
        .collect()
}

fn bench(args: &BenchArgs) -> mindeg::Result<Outcome> {
    let sizes = parse_sizes(&args.sizes)?;
    let rows = bench::run_suite(args.suite, &sizes, args.repeats, args.seed, &OrderingConfig::default())?;
    let mut out = BenchRow::tsv_header() + "\n";
    for row in &rows {
        out.push_str(&row.to_tsv());
        out.push('\n');
    }
    emit(args.out.as_deref(), &out)?;
    Ok(Outcome::Ok)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Order(args) => order(args),
        Command::Verify(args) => verify(args),
        Command::Stats(args) => stats(args),
        Command::GenUfiller(args) => gen_ufiller(args),
        Command::CliqueUnion(args) => clique_union(args),
        Command::Bench(args) => bench(args),
    };
    match outcome {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Failed(Failure(message))) => {
            println!("{message}");
            ExitCode::from(1)
        }
        Err(err) => {
            eprintln!("mindeg: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}
