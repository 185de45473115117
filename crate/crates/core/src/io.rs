//! Readers and writers: Matrix Market patterns, edge lists, permutations,
//! clique-union instances, filler labels and run statistics.
//!
//! Every reader rejects malformed input with the offending line number
//! (1-based). Writers are byte-deterministic.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::mindegree::{EliminationResult, TieBreak};
use crate::oracle;
use crate::ufiller::{CliqueUnionInstance, LabeledGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct MatrixMarketOptions {
    /// Symmetrize the pattern of a `general` matrix instead of rejecting
    /// structurally unsymmetric input.
    pub symmetrize: bool,
}

pub fn read_matrix_market(path: impl AsRef<Path>, options: MatrixMarketOptions) -> Result<Graph> {
    parse_matrix_market(&fs::read_to_string(path)?, options)
}

/// Non-comment lines with their 1-based line numbers.
fn data_lines(text: &str, comment: char) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim()))
        .filter(move |(_, line)| !line.is_empty() && !line.starts_with(comment))
}

fn parse_token<T: FromStr>(token: &str, line: usize, what: &str) -> Result<T> {
    token
        .parse()
        .map_err(|_| Error::parse(line, format!("expected {what}, found `{token}`")))
}

pub fn parse_matrix_market(text: &str, options: MatrixMarketOptions) -> Result<Graph> {
    let banner = text.lines().next().unwrap_or("");
    let words: Vec<String> = banner.split_whitespace().map(str::to_ascii_lowercase).collect();
    if words.len() != 5 || words[0] != "%%matrixmarket" {
        return Err(Error::parse(1, "expected `%%MatrixMarket matrix <format> <field> <symmetry>`"));
    }
    if words[1] != "matrix" {
        return Err(Error::UnsupportedFormat(format!("object `{}`", words[1])));
    }
    match words[2].as_str() {
        "coordinate" => {}
        "array" => return Err(Error::UnsupportedFormat("dense `array` matrices".into())),
        other => return Err(Error::parse(1, format!("unknown format `{other}`"))),
    }
    let values = match words[3].as_str() {
        "pattern" => 0,
        "real" | "integer" => 1,
        "complex" => 2,
        other => return Err(Error::parse(1, format!("unknown field `{other}`"))),
    };
    let general = match words[4].as_str() {
        "general" => true,
        "symmetric" | "skew-symmetric" | "hermitian" => false,
        other => return Err(Error::parse(1, format!("unknown symmetry `{other}`"))),
    };

    let mut lines = data_lines(text, '%');
    let (size_line, size) = lines
        .next()
        .ok_or_else(|| Error::parse(text.lines().count().max(1), "missing size line"))?;
    let dims: Vec<&str> = size.split_whitespace().collect();
    if dims.len() != 3 {
        return Err(Error::parse(size_line, "size line must be `rows cols entries`"));
    }
    let rows: usize = parse_token(dims[0], size_line, "row count")?;
    let cols: usize = parse_token(dims[1], size_line, "column count")?;
    let nnz: usize = parse_token(dims[2], size_line, "entry count")?;
    if rows != cols {
        return Err(Error::parse(size_line, format!("matrix is {rows}x{cols}, not square")));
    }

    let mut entries = Vec::with_capacity(nnz);
    let mut entry_lines = Vec::with_capacity(nnz);
    for (line, content) in lines {
        if entries.len() == nnz {
            return Err(Error::parse(line, format!("more than the declared {nnz} entries")));
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.len() != 2 + values {
            return Err(Error::parse(
                line,
                format!("expected {} tokens, found {}", 2 + values, tokens.len()),
            ));
        }
        let i: usize = parse_token(tokens[0], line, "row index")?;
        let j: usize = parse_token(tokens[1], line, "column index")?;
        for value in &tokens[2..] {
            parse_token::<f64>(value, line, "numeric value")?;
        }
        if i == 0 || j == 0 || i > rows || j > cols {
            return Err(Error::parse(line, format!("index ({i}, {j}) outside {rows}x{cols}")));
        }
        entries.push((i - 1, j - 1));
        entry_lines.push(line);
    }
    if entries.len() < nnz {
        return Err(Error::parse(
            text.lines().count(),
            format!("declared {nnz} entries, found {}", entries.len()),
        ));
    }

    if general && !options.symmetrize {
        let mut present: Vec<(usize, usize)> = entries.iter().copied().filter(|(i, j)| i != j).collect();
        present.sort_unstable();
        present.dedup();
        for (k, &(i, j)) in entries.iter().enumerate() {
            if i != j && present.binary_search(&(j, i)).is_err() {
                return Err(Error::parse(
                    entry_lines[k],
                    format!(
                        "entry ({}, {}) has no transpose; general matrix is not structurally symmetric",
                        i + 1,
                        j + 1
                    ),
                ));
            }
        }
    } else if general {
        log::warn!("symmetrizing the pattern of a general matrix");
    }
    Graph::from_edge_list(rows, entries)
}

pub fn read_edge_list(path: impl AsRef<Path>) -> Result<Graph> {
    parse_edge_list(&fs::read_to_string(path)?)
}

/// `u v` lines with 0-based ids and `#` comments.
///
/// The first line is read as an `n m` header when exactly `m` lines follow
/// it and every endpoint is below `n`. Without a header, `n` is one more
/// than the largest id.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut pairs = Vec::new();
    for (line, content) in data_lines(text, '#') {
        let content = content.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(Error::parse(line, format!("expected two vertex ids, found {}", tokens.len())));
        }
        let u: usize = parse_token(tokens[0], line, "a vertex id")?;
        let v: usize = parse_token(tokens[1], line, "a vertex id")?;
        pairs.push((u, v));
    }
    if let Some(&(n, m)) = pairs.first() {
        let rest = &pairs[1..];
        if rest.len() == m && rest.iter().all(|&(u, v)| u < n && v < n) {
            return Graph::from_edge_list(n, rest.iter().copied());
        }
    }
    let n = pairs.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    Graph::from_edge_list(n, pairs)
}

pub fn format_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn write_edge_list(g: &Graph, path: impl AsRef<Path>) -> Result<()> {
    Ok(fs::write(path, format_edge_list(g))?)
}

pub fn format_permutation(ordering: &[VertexId]) -> String {
    let mut out = String::with_capacity(ordering.len() * 6);
    for v in ordering {
        writeln!(out, "{v}").unwrap();
    }
    out
}

pub fn write_permutation(ordering: &[VertexId], path: impl AsRef<Path>) -> Result<()> {
    Ok(fs::write(path, format_permutation(ordering))?)
}

pub fn read_permutation(path: impl AsRef<Path>) -> Result<Vec<VertexId>> {
    parse_permutation(&fs::read_to_string(path)?)
}

/// One id per line; the ids must be a permutation of `0..len`.
pub fn parse_permutation(text: &str) -> Result<Vec<VertexId>> {
    let ordering = data_lines(text, '#')
        .map(|(line, content)| parse_token(content, line, "a vertex id"))
        .collect::<Result<Vec<VertexId>>>()?;
    oracle::check_permutation(ordering.len(), &ordering)?;
    Ok(ordering)
}

pub fn read_clique_union_instance(path: impl AsRef<Path>) -> Result<CliqueUnionInstance> {
    parse_clique_union_instance(&fs::read_to_string(path)?)
}

/// First line `n d`, then `d` lines of space-separated ids. A blank line is an
/// empty subset.
pub fn parse_clique_union_instance(text: &str) -> Result<CliqueUnionInstance> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim()))
        .filter(|(_, line)| !line.starts_with('#'))
        .skip_while(|(_, line)| line.is_empty());
    let (header_line, header) = lines.next().ok_or_else(|| Error::parse(1, "missing `n d` header"))?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    if tokens.len() != 2 {
        return Err(Error::parse(header_line, "header must be `n d`"));
    }
    let n: usize = parse_token(tokens[0], header_line, "vertex count n")?;
    let d: usize = parse_token(tokens[1], header_line, "subset count d")?;

    let mut subsets = Vec::with_capacity(d);
    for (line, content) in lines {
        if subsets.len() == d {
            if content.is_empty() {
                continue;
            }
            return Err(Error::parse(line, format!("more than the declared {d} subsets")));
        }
        let subset = content
            .split_whitespace()
            .map(|t| {
                let v: usize = parse_token(t, line, "a vertex id")?;
                if v >= n {
                    return Err(Error::parse(line, format!("vertex {v} outside 0..{n}")));
                }
                Ok(v)
            })
            .collect::<Result<Vec<_>>>()?;
        subsets.push(subset);
    }
    if subsets.len() < d {
        return Err(Error::parse(
            text.lines().count().max(1),
            format!("declared {d} subsets, found {}", subsets.len()),
        ));
    }
    CliqueUnionInstance::new(n, subsets)
}

pub fn format_clique_union_instance(instance: &CliqueUnionInstance) -> String {
    let mut out = format!("{} {}\n", instance.n, instance.subsets.len());
    for s in &instance.subsets {
        let ids: Vec<String> = s.iter().map(usize::to_string).collect();
        writeln!(out, "{}", ids.join(" ")).unwrap();
    }
    out
}

/// `id U` or `id W` per vertex of the filler, ascending by id.
pub fn format_labels(lg: &LabeledGraph) -> String {
    let extra = lg.extra_mask();
    let mut out = String::new();
    for (v, &is_extra) in extra.iter().enumerate() {
        if is_extra {
            writeln!(out, "{v} W").unwrap();
        } else if lg.u_set.binary_search(&v).is_ok() {
            writeln!(out, "{v} U").unwrap();
        }
    }
    out
}

pub fn write_labels(lg: &LabeledGraph, path: impl AsRef<Path>) -> Result<()> {
    Ok(fs::write(path, format_labels(lg))?)
}

/// Counters of one ordering run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunStats {
    pub n: usize,
    pub m: usize,
    pub m_plus: usize,
    pub insertion_attempts: u64,
    pub max_degree: usize,
    pub backend: String,
    pub tie_break: String,
    pub wall_ms: f64,
    /// `degree_histogram[d]` counts the steps that eliminated a vertex of fill degree `d`.
    pub degree_histogram: Vec<usize>,
}

/// Column order of [`StatsFormat::Tsv`].
pub const TSV_COLUMNS: [&str; 9] = [
    "n",
    "m",
    "m_plus",
    "insertion_attempts",
    "max_degree",
    "backend",
    "tie_break",
    "wall_ms",
    "degree_histogram",
];

impl RunStats {
    pub fn from_result(g: &Graph, result: &EliminationResult, tie_break: TieBreak, wall_ms: f64) -> Self {
        RunStats {
            n: g.n(),
            m: g.m(),
            m_plus: result.m_plus,
            insertion_attempts: result.insertion_attempts,
            max_degree: g.max_degree(),
            backend: result.backend.to_string(),
            tie_break: tie_break.to_string(),
            wall_ms,
            degree_histogram: result.degree_histogram(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain struct") + "\n"
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::parse(e.line(), e.to_string()))
    }

    /// Header row plus one data row; the histogram is comma-separated.
    pub fn to_tsv(&self) -> String {
        let histogram: Vec<String> = self.degree_histogram.iter().map(usize::to_string).collect();
        format!(
            "{}\n{}\t{}\t{}\t{}\t{}\t{}\t{}\t{:.3}\t{}\n",
            TSV_COLUMNS.join("\t"),
            self.n,
            self.m,
            self.m_plus,
            self.insertion_attempts,
            self.max_degree,
            self.backend,
            self.tie_break,
            self.wall_ms,
            histogram.join(","),
        )
    }

    pub fn format(&self, format: StatsFormat) -> String {
        match format {
            StatsFormat::Json => self.to_json(),
            StatsFormat::Tsv => self.to_tsv(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum StatsFormat {
    #[default]
    Json,
    Tsv,
}

impl FromStr for StatsFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(StatsFormat::Json),
            "tsv" => Ok(StatsFormat::Tsv),
            other => Err(Error::Config(format!("unknown stats format `{other}`"))),
        }
    }
}

pub fn write_stats(stats: &RunStats, path: impl AsRef<Path>, format: StatsFormat) -> Result<()> {
    Ok(fs::write(path, stats.format(format))?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators;
    use crate::mindegree::{fast_minimum_degree, OrderingConfig};
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn mm(text: &str) -> Result<Graph> {
        parse_matrix_market(text, MatrixMarketOptions::default())
    }

    fn line_of(err: Error) -> usize {
        match err {
            Error::Parse { line, .. } => line,
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn matrix_market_pattern_path() {
        let g = mm("%%MatrixMarket matrix coordinate pattern symmetric\n% c\n3 3 3\n1 1\n2 1\n3 2\n").unwrap();
        assert_eq!(g, generators::path(3));
    }

    #[test]
    fn matrix_market_fields_are_discarded() {
        let real = mm("%%MatrixMarket matrix coordinate real symmetric\n3 3 2\n2 1 0.5\n3 2 -1e3\n").unwrap();
        let complex = mm("%%MatrixMarket matrix coordinate complex hermitian\n3 3 2\n2 1 1 2\n3 2 0 -1\n").unwrap();
        assert_eq!(real, generators::path(3));
        assert_eq!(complex, real);
        let bad = mm("%%MatrixMarket matrix coordinate real symmetric\n3 3 1\n2 1 x\n").unwrap_err();
        assert_eq!(line_of(bad), 3);
    }

    #[test]
    fn matrix_market_rejections() {
        assert!(matches!(
            mm("%%MatrixMarket matrix array real general\n2 2\n1\n0\n0\n1\n"),
            Err(Error::UnsupportedFormat(_))
        ));
        let out_of_range = mm("%%MatrixMarket matrix coordinate pattern symmetric\n3 3 1\n4 1\n").unwrap_err();
        assert_eq!(line_of(out_of_range), 3);
        assert_eq!(line_of(mm("%%MatrixMarket matrix\n").unwrap_err()), 1);
        assert_eq!(line_of(mm("%%MatrixMarket matrix coordinate pattern general\n3 3 2\n2 1\n").unwrap_err()), 3);
        assert!(mm("%%MatrixMarket matrix coordinate pattern general\n3 3 1\n2 1\n1 2\n").is_err());
        assert!(mm("%%MatrixMarket matrix coordinate pattern general\n3 2 0\n").is_err());
    }

    #[test]
    fn general_matrices_are_strict_unless_symmetrized() {
        let text = "%%MatrixMarket matrix coordinate pattern general\n3 3 3\n2 1\n1 2\n3 2\n";
        assert_eq!(line_of(mm(text).unwrap_err()), 5);
        let g = parse_matrix_market(text, MatrixMarketOptions { symmetrize: true }).unwrap();
        assert_eq!(g, generators::path(3));
        let symmetric = "%%MatrixMarket matrix coordinate integer general\n2 2 3\n1 2 4\n2 1 4\n2 2 1\n";
        assert_eq!(mm(symmetric).unwrap().m(), 1);
    }

    #[test]
    fn edge_list_examples() {
        assert_eq!(parse_edge_list("0 1\n1 2").unwrap(), generators::path(3));
        assert_eq!(parse_edge_list("# only a header\n3 0\n").unwrap(), Graph::empty(3));
        assert_eq!(parse_edge_list("").unwrap(), Graph::empty(0));
        assert_eq!(parse_edge_list("3 2\n0 1 # trailing\n1 2\n").unwrap(), generators::path(3));
        assert_eq!(line_of(parse_edge_list("0 1\n1 x\n").unwrap_err()), 2);
        assert_eq!(line_of(parse_edge_list("0 1 2\n").unwrap_err()), 1);
    }

    #[test]
    fn permutation_examples() {
        assert_eq!(format_permutation(&[2, 0, 1]), "2\n0\n1\n");
        assert_eq!(parse_permutation("2\n0\n1\n").unwrap(), vec![2, 0, 1]);
        assert!(matches!(parse_permutation("0\n0\n"), Err(Error::InvalidInput(_))));
        assert!(matches!(parse_permutation("0\n2\n"), Err(Error::InvalidInput(_))));
        assert_eq!(line_of(parse_permutation("0\n-1\n").unwrap_err()), 2);
    }

    #[test]
    fn clique_union_instances() {
        let inst = parse_clique_union_instance("3 2\n0 1\n1 2\n").unwrap();
        assert_eq!(inst.subsets, vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(format_clique_union_instance(&inst), "3 2\n0 1\n1 2\n");
        assert_eq!(line_of(parse_clique_union_instance("3 2\n0 1\n").unwrap_err()), 2);
        assert_eq!(line_of(parse_clique_union_instance("3 1\n0 3\n").unwrap_err()), 2);
        assert_eq!(line_of(parse_clique_union_instance("3 1\n0 1\n2\n").unwrap_err()), 3);
        assert_eq!(line_of(parse_clique_union_instance("3\n").unwrap_err()), 1);
    }

    #[test]
    fn labels_mark_extras() {
        let lg = crate::ufiller::u_comb(&[0, 1]).unwrap();
        assert_eq!(format_labels(&lg), "0 U\n1 U\n2 W\n3 W\n");
    }

    #[test]
    fn stats_for_p3() {
        let g = generators::path(3);
        let r = fast_minimum_degree(&g, &OrderingConfig::default()).unwrap();
        let stats = RunStats::from_result(&g, &r, TieBreak::SmallestId, 0.25);
        let json = stats.to_json();
        assert!(json.contains("\"m_plus\": 2"));
        assert!(json.contains("\"insertion_attempts\": 0"));
        assert_eq!(RunStats::from_json(&json).unwrap(), stats);
        let tsv = stats.to_tsv();
        let mut rows = tsv.lines();
        assert_eq!(rows.next().unwrap(), TSV_COLUMNS.join("\t"));
        assert_eq!(rows.next().unwrap(), "3\t2\t2\t0\t2\tdense\tsmallest-id\t0.250\t1,2");
    }

    #[test]
    fn stats_format_parses() {
        assert_eq!("tsv".parse::<StatsFormat>().unwrap(), StatsFormat::Tsv);
        assert!("xml".parse::<StatsFormat>().is_err());
    }

    proptest! {
        #[test]
        fn edge_list_round_trip(n in 0usize..60, p in 0.0f64..0.3, seed in any::<u64>()) {
            let g = generators::gnp(n, p, &mut ChaCha8Rng::seed_from_u64(seed));
            prop_assert_eq!(parse_edge_list(&format_edge_list(&g)).unwrap(), g);
        }

        #[test]
        fn permutation_round_trip(perm in (0usize..100).prop_flat_map(|n| Just((0..n).collect::<Vec<_>>()).prop_shuffle())) {
            prop_assert_eq!(parse_permutation(&format_permutation(&perm)).unwrap(), perm);
        }

        #[test]
        fn stats_json_round_trip(n in 0usize..1000, m in 0usize..1000, mp in 0usize..5000, k in any::<u64>(), hist in proptest::collection::vec(0usize..100, 0..10)) {
            let stats = RunStats {
                n, m, m_plus: mp, insertion_attempts: k, max_degree: m.min(n),
                backend: "dense".into(), tie_break: "random:7".into(), wall_ms: 1.5, degree_histogram: hist,
            };
            prop_assert_eq!(RunStats::from_json(&stats.to_json()).unwrap(), stats);
        }

        #[test]
        fn matrix_market_matches_edge_list(n in 1usize..30, p in 0.0f64..0.4, seed in any::<u64>()) {
            let g = generators::gnp(n, p, &mut ChaCha8Rng::seed_from_u64(seed));
            let mut text = format!("%%MatrixMarket matrix coordinate pattern symmetric\n{n} {n} {}\n", g.m());
            for (u, v) in g.edges() {
                writeln!(text, "{} {}", v + 1, u + 1).unwrap();
            }
            prop_assert_eq!(mm(&text).unwrap(), g);
        }
    }
}
