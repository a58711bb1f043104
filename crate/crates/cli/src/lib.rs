//! Command implementations behind the `dicon` binary. Every command reads a
//! [`GraphFile`], runs the library on dense ids and reports original labels.

pub mod graph_file;

use std::fmt::Write as _;
use std::path::Path;
use std::time::Instant;

use dicon::oracle::{self, BLOCK_LIMIT};
use dicon::{
    block_2e_at_vertex, blocks_2d_at_vertex, compute_blocks, is_strongly_connected, mscss_with,
    random_strongly_connected, scc, verify_solution, BlockKind, DiGraph, MscssConfig, SolutionKind,
    Strategy,
};
use serde::Serialize;
use serde_json::Value;

pub use graph_file::{GraphFile, ParseError};

pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_GUARD: i32 = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn new(code: i32, message: impl Into<String>) -> Self {
        CliError {
            code,
            message: message.into(),
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.message)
    }
}

pub fn load(path: &Path) -> Result<GraphFile, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::new(EXIT_PARSE, format!("cannot read {}: {e}", path.display())))?;
    GraphFile::parse(&text)
        .map_err(|e| CliError::new(EXIT_PARSE, format!("{}: {e}", path.display())))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    pub timing: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options { timing: true }
    }
}

/// A command's report in both renderings. The JSON form carries the full
/// structured result; the text form is a short human summary.
#[derive(Clone, Debug, PartialEq)]
pub struct Output {
    pub json: Value,
    pub text: String,
    /// Non-zero when the command ran but its check failed.
    pub code: i32,
}

#[derive(Serialize)]
struct InputSummary<'a> {
    n: usize,
    m: usize,
    labels: &'a [u64],
}

#[derive(Serialize)]
struct Report<'a, T: Serialize> {
    command: &'static str,
    input: InputSummary<'a>,
    result: T,
    #[serde(skip_serializing_if = "Option::is_none")]
    timing_ms: Option<f64>,
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed().as_secs_f64() * 1e3)
}

fn finish<T: Serialize>(
    command: &'static str,
    file: &GraphFile,
    result: T,
    ms: f64,
    opts: Options,
    mut text: String,
) -> Output {
    let timing_ms = opts.timing.then_some(ms);
    if let Some(ms) = timing_ms {
        let _ = writeln!(text, "time: {ms:.3} ms");
    }
    let report = Report {
        command,
        input: InputSummary {
            n: file.graph.n(),
            m: file.graph.m(),
            labels: &file.labels,
        },
        result,
        timing_ms,
    };
    Output {
        json: serde_json::to_value(report).expect("reports serialize"),
        text,
        code: 0,
    }
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn family_text(title: &str, family: &[Vec<u64>]) -> String {
    let mut text = format!("{title} ({}):\n", family.len());
    for b in family {
        let _ = writeln!(text, "  {{{}}}", join(b));
    }
    text
}

fn yes(flag: bool) -> &'static str {
    if flag {
        "yes"
    } else {
        "no"
    }
}

#[derive(Serialize)]
struct AnalyzeResult {
    strongly_connected: bool,
    scc_count: usize,
    saps: Vec<u64>,
    bridges: Vec<(u64, u64)>,
    t_sap: usize,
    t_sb: usize,
    is_2vertex_connected: bool,
    is_2edge_connected: bool,
}

/// SAPs and strong bridges, found per SCC: a vertex or edge separates the
/// whole graph exactly when it separates its own SCC.
pub fn analyze(file: &GraphFile, opts: Options) -> Output {
    let g = &file.graph;
    let ((strong, cells, saps, bridges), ms) = timed(|| {
        let cells = scc(g);
        let mut saps = Vec::new();
        let mut bridges = Vec::new();
        for cell in cells.cells().iter().filter(|c| c.len() >= 2) {
            let sub = g.induced_subgraph(cell);
            let r = dicon::report(&sub.graph).expect("an SCC is strongly connected");
            saps.extend(r.saps.iter().map(|&v| sub.to_parent(v)));
            bridges.extend(r.bridges.iter().map(|&e| sub.edge_to_parent(e)));
        }
        (is_strongly_connected(g), cells.len(), saps, bridges)
    });
    let result = AnalyzeResult {
        strongly_connected: strong,
        scc_count: cells,
        saps: file.label_set(&saps),
        bridges: file.label_edges(&bridges),
        t_sap: saps.len(),
        t_sb: bridges.len(),
        is_2vertex_connected: strong && g.n() >= 3 && saps.is_empty(),
        is_2edge_connected: strong && bridges.is_empty(),
    };
    let mut text = format!("n={} m={}\n", g.n(), g.m());
    let _ = writeln!(
        text,
        "strongly connected: {} (SCC count {})",
        yes(strong),
        cells
    );
    let _ = writeln!(
        text,
        "strong articulation points ({}): {}",
        result.t_sap,
        join(&result.saps)
    );
    let arrows: Vec<String> = result
        .bridges
        .iter()
        .map(|(a, b)| format!("{a}->{b}"))
        .collect();
    let _ = writeln!(
        text,
        "strong bridges ({}): {}",
        result.t_sb,
        arrows.join(" ")
    );
    let _ = writeln!(
        text,
        "2-vertex-connected: {}",
        yes(result.is_2vertex_connected)
    );
    let _ = writeln!(text, "2-edge-connected: {}", yes(result.is_2edge_connected));
    finish("analyze", file, result, ms, opts, text)
}

fn strategy_name(s: Strategy) -> &'static str {
    match s {
        Strategy::Dominators => "dom",
        Strategy::Enumeration => "enum",
        Strategy::Auto => "auto",
    }
}

#[derive(Serialize)]
struct BlocksResult {
    kind: BlockKind,
    algo: &'static str,
    count: usize,
    blocks: Vec<Vec<u64>>,
}

pub fn blocks(file: &GraphFile, kind: BlockKind, algo: Strategy, opts: Options) -> Output {
    let (family, ms) = timed(|| compute_blocks(&file.graph, kind, algo));
    let blocks = file.label_family(family.blocks());
    let text = family_text(&format!("{kind} blocks"), &blocks);
    let result = BlocksResult {
        kind,
        algo: strategy_name(algo),
        count: blocks.len(),
        blocks,
    };
    finish("blocks", file, result, ms, opts, text)
}

#[derive(Serialize)]
struct BlocksAtResult {
    vertex: u64,
    kind: BlockKind,
    blocks: Vec<Vec<u64>>,
}

/// Blocks containing `vertex`, answered on the SCC that contains it.
pub fn blocks_at(
    file: &GraphFile,
    vertex: u64,
    kind: BlockKind,
    opts: Options,
) -> Result<Output, CliError> {
    let v = file.id_of(vertex).ok_or_else(|| {
        CliError::new(
            EXIT_PRECONDITION,
            format!("vertex {vertex} is not in the graph"),
        )
    })?;
    if kind == BlockKind::TwoStrong {
        return Err(CliError::new(
            EXIT_PRECONDITION,
            "per-vertex queries support 2d and 2e only",
        ));
    }
    let g = &file.graph;
    let (found, ms) = timed(|| {
        let cells = scc(g);
        let cell = &cells.cells()[cells.cell_of(v)];
        if cell.len() < 2 {
            return Vec::new();
        }
        let sub = g.induced_subgraph(cell);
        let local = sub.original.binary_search(&v).expect("v is in its SCC");
        let found = match kind {
            BlockKind::TwoDirected => blocks_2d_at_vertex(&sub.graph, local).expect("strong"),
            _ => {
                let b = block_2e_at_vertex(&sub.graph, local).expect("strong");
                if b.is_empty() {
                    Vec::new()
                } else {
                    vec![b]
                }
            }
        };
        found
            .into_iter()
            .map(|b| b.into_iter().map(|x| sub.to_parent(x)).collect())
            .collect::<Vec<Vec<usize>>>()
    });
    let blocks = file.label_family(&found);
    let text = family_text(&format!("{kind} blocks containing {vertex}"), &blocks);
    let result = BlocksAtResult {
        vertex,
        kind,
        blocks,
    };
    Ok(finish("blocks-at", file, result, ms, opts, text))
}

#[derive(Serialize)]
struct MscssResult {
    preserve: SolutionKind,
    edge_count: usize,
    input_edge_count: usize,
    budget_bound: usize,
    budget_strict: bool,
    budget_recomputed: bool,
    within_budget: bool,
    strongly_connected: bool,
    structure_preserved: bool,
    feasible: bool,
    edges: Vec<(u64, u64)>,
}

pub fn mscss(
    file: &GraphFile,
    preserve: SolutionKind,
    skip_blockless: bool,
    opts: Options,
) -> Result<Output, CliError> {
    let g = &file.graph;
    let config = MscssConfig {
        skip_blockless,
        ..MscssConfig::default()
    };
    let (solution, ms) = timed(|| mscss_with(g, preserve, &config));
    let solution = solution.map_err(|e| CliError::new(EXIT_PRECONDITION, e.to_string()))?;
    let check = verify_solution(g, &solution);
    let result = MscssResult {
        preserve,
        edge_count: solution.edge_count,
        input_edge_count: g.m(),
        budget_bound: solution.budget.bound,
        budget_strict: solution.budget.strict,
        budget_recomputed: solution.budget.recomputed,
        within_budget: check.within_budget,
        strongly_connected: check.strongly_connected,
        structure_preserved: check.structure_preserved,
        feasible: check.feasible(),
        edges: file.label_edges(&solution.edges),
    };
    let relation = if result.budget_strict { "<" } else { "<=" };
    let mut text = format!(
        "preserve {preserve}: {} of {} edges (bound {relation} {}{})\n",
        result.edge_count,
        result.input_edge_count,
        result.budget_bound,
        if result.budget_recomputed {
            ", raised for repaired tree pairs"
        } else {
            ""
        }
    );
    let _ = writeln!(
        text,
        "strongly connected: {}  structure preserved: {}  within budget: {}",
        yes(result.strongly_connected),
        yes(result.structure_preserved),
        yes(result.within_budget)
    );
    let arrows: Vec<String> = result
        .edges
        .iter()
        .map(|(a, b)| format!("{a}->{b}"))
        .collect();
    let _ = writeln!(text, "edges: {}", arrows.join(" "));
    Ok(finish("mscss", file, result, ms, opts, text))
}

#[derive(Serialize)]
struct Check {
    name: String,
    equal: bool,
}

#[derive(Serialize)]
struct OracleResult {
    all_equal: bool,
    checks: Vec<Check>,
}

/// Compares every fast computation with its brute-force counterpart.
pub fn oracle_check(file: &GraphFile, opts: Options) -> Result<Output, CliError> {
    let g = &file.graph;
    if g.n() > BLOCK_LIMIT {
        return Err(CliError::new(
            EXIT_GUARD,
            format!(
                "oracle-check is limited to {BLOCK_LIMIT} vertices, graph has {}",
                g.n()
            ),
        ));
    }
    let (checks, ms) = timed(|| oracle_checks(g));
    let all_equal = checks.iter().all(|c| c.equal);
    let mut text = String::new();
    for c in &checks {
        let _ = writeln!(
            text,
            "{:<32} {}",
            c.name,
            if c.equal { "equal" } else { "DIFFERENT" }
        );
    }
    let _ = writeln!(text, "all equal: {}", yes(all_equal));
    let mut out = finish(
        "oracle-check",
        file,
        OracleResult { all_equal, checks },
        ms,
        opts,
        text,
    );
    if !all_equal {
        out.code = EXIT_MISMATCH;
    }
    Ok(out)
}

fn oracle_checks(g: &DiGraph) -> Vec<Check> {
    let mut checks = Vec::new();
    let mut push = |name: String, equal: bool| checks.push(Check { name, equal });
    let strong = is_strongly_connected(g);
    if strong {
        push(
            "saps".into(),
            dicon::strong_articulation_points(g).ok() == oracle::oracle_saps(g).ok(),
        );
        push(
            "bridges".into(),
            dicon::strong_bridges(g).ok() == oracle::oracle_bridges(g).ok(),
        );
    }
    let mut families = Vec::new();
    for kind in BlockKind::ALL {
        let truth = oracle::oracle_blocks(g, kind).expect("size checked");
        for algo in [Strategy::Dominators, Strategy::Enumeration] {
            let fast = compute_blocks(g, kind, algo);
            push(
                format!("blocks {kind} {}", strategy_name(algo)),
                fast == truth,
            );
        }
        families.push(truth);
    }
    if strong {
        let (two_d, two_e) = (&families[0], &families[2]);
        let at_2d = (0..g.n()).all(|v| blocks_2d_at_vertex(g, v).ok() == Some(two_d.containing(v)));
        push("blocks-at 2d, every vertex".into(), at_2d);
        let at_2e = (0..g.n()).all(|v| {
            let expected = two_e.containing(v).into_iter().next().unwrap_or_default();
            block_2e_at_vertex(g, v).ok() == Some(expected)
        });
        push("blocks-at 2e, every vertex".into(), at_2e);
    }
    checks
}

/// A seeded random strongly connected graph with labels `0..n`.
pub fn generate(n: usize, m: usize, seed: u64) -> Result<GraphFile, CliError> {
    random_strongly_connected(n, m, seed)
        .map(GraphFile::unlabeled)
        .map_err(|e| CliError::new(EXIT_PRECONDITION, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig1() -> GraphFile {
        GraphFile::parse(include_str!("../../../fixtures/fig1.edges")).unwrap()
    }

    const QUIET: Options = Options { timing: false };

    #[test]
    fn blocks_report_uses_labels() {
        let out = blocks(&fig1(), BlockKind::TwoDirected, Strategy::Dominators, QUIET);
        assert_eq!(
            out.json["result"]["blocks"],
            serde_json::json!([[1, 2, 3, 6], [4, 6, 8, 10]])
        );
        assert_eq!(out.json["input"]["n"], 12);
        assert!(out.json.get("timing_ms").is_none());
        assert!(out.text.contains("{4 6 8 10}"));
    }

    #[test]
    fn algorithms_agree_modulo_name() {
        for kind in BlockKind::ALL {
            let a =
                blocks(&fig1(), kind, Strategy::Dominators, QUIET).json["result"]["blocks"].clone();
            let b = blocks(&fig1(), kind, Strategy::Enumeration, QUIET).json["result"]["blocks"]
                .clone();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn analyze_non_strong_graph() {
        let f = GraphFile::parse("5 7\n0 1\n1 2\n2 0\n2 3\n3 4\n4 3\n1 0\n").unwrap();
        let out = analyze(&f, QUIET);
        let r = &out.json["result"];
        assert_eq!(r["strongly_connected"], false);
        assert_eq!(r["scc_count"], 2);
        assert_eq!(r["saps"], serde_json::json!([0, 1]));
        assert_eq!(
            r["bridges"],
            serde_json::json!([[0, 1], [1, 2], [2, 0], [3, 4], [4, 3]])
        );
    }

    #[test]
    fn blocks_at_restricts_to_the_scc() {
        let f = GraphFile::parse("4 7\n0 1\n1 0\n1 2\n2 1\n0 2\n2 0\n2 3\n").unwrap();
        let out = blocks_at(&f, 1, BlockKind::TwoDirected, QUIET).unwrap();
        assert_eq!(out.json["result"]["blocks"], serde_json::json!([[0, 1, 2]]));
        let out = blocks_at(&f, 3, BlockKind::TwoEdge, QUIET).unwrap();
        assert_eq!(out.json["result"]["blocks"], serde_json::json!([]));
        assert_eq!(
            blocks_at(&f, 9, BlockKind::TwoEdge, QUIET)
                .unwrap_err()
                .code,
            EXIT_PRECONDITION
        );
    }

    #[test]
    fn mscss_rejects_non_strong() {
        let f = GraphFile::parse("3 2\n0 1\n1 2\n").unwrap();
        let e = mscss(&f, SolutionKind::Saps, false, QUIET).unwrap_err();
        assert_eq!(e.code, EXIT_PRECONDITION);
    }

    #[test]
    fn oracle_guard() {
        let big = generate(13, 20, 0).unwrap();
        assert_eq!(oracle_check(&big, QUIET).unwrap_err().code, EXIT_GUARD);
        let out = oracle_check(&generate(8, 20, 7).unwrap(), QUIET).unwrap();
        assert_eq!(out.json["result"]["all_equal"], true);
        assert_eq!(out.code, 0);
    }
}
