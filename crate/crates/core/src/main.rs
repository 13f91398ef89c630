//! `plandec`: decompositions, drawings and their certificates from the shell.
//!
//! Every command reads an edge list (`n m` then `u v` per line) or JSON
//! artifacts, and writes JSON artifacts: into `--out DIR` one file each, or
//! to stdout as a single object keyed by file name. Human-readable tables go
//! to stderr. Exit codes: 0 ok, 2 parse, 3 precondition, 4 bound or invariant.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use plandec::decomp::{degen_omega, identity_decomposition, quadratic_decomp, DecompositionJson};
use plandec::draw::{count_crossings, render, to_svg, BoundCheck, CertifiedDrawing, DrawingJson};
use plandec::graph::layout::straight_line_layout_of;
use plandec::graph::minor::{has_minor_with_cap, MinorTarget, MINOR_ORACLE_CAP};
use plandec::graph::planarity::is_planar;
use plandec::graph::treewidth::{treewidth_exact_with_cap, TREEWIDTH_ORACLE_CAP};
use plandec::minor_free::{
    crossings_k5, k33_planar_partition, k33_rectilinear_drawing, planar_omega_decomp_k5, strong_3_decomp_k5,
    strong_omega_decomp_k5, wagner_k5_decompose, SumTree, SumTreeJson,
};
use plandec::partition::{
    convex_treewidth_pipeline, tree_partition, tree_partition_width_bound_holds, Partition, PartitionJson,
};
use plandec::{Decomposition, Drawing, Error, Graph, Result};

#[derive(Parser)]
#[command(name = "plandec", version, about = "Planar decompositions and certified drawings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decomposition of a graph with width, spread and order against the class bounds.
    Decompose(DecomposeArgs),
    /// Drawing with its exact crossing report and bound checks.
    Draw(RunArgs),
    /// Re-check JSON artifacts; exit 0 iff every invariant holds.
    Verify(VerifyArgs),
    /// Clique-sum tree and planar ω-decomposition of a K5-minor-free graph.
    K5Decomp(RunArgs),
    /// `draw --class k5`.
    K5Draw(RunArgs),
    /// `draw --class k33`.
    K33Draw(RunArgs),
    /// Tree-partition from an exact tree decomposition.
    TreePartition(RunArgs),
    /// `draw --class treewidth`: convex drawing from a tree-partition.
    ConvexDraw(RunArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Class {
    K5,
    K33,
    Treewidth,
    Generic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Level {
    Fast,
    Full,
}

#[derive(Args, Clone)]
struct RunArgs {
    /// Edge list: first line `n m`, then one `u v` per edge, 0-based.
    #[arg(long = "in")]
    input: PathBuf,
    /// Directory for the artifacts; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Class::Generic)]
    class: Class,
    /// Also emit `drawing.svg` with crossings marked.
    #[arg(long)]
    svg: bool,
    /// `full` first confirms class membership with the exact oracles.
    #[arg(long, value_enum, default_value_t = Level::Fast)]
    verify: Level,
}

#[derive(Args)]
struct DecomposeArgs {
    #[command(flatten)]
    run: RunArgs,
    #[arg(long)]
    strong: bool,
    /// Clique size the decomposition must cover; 2 by default.
    #[arg(long)]
    p: Option<usize>,
    /// Bags `{i, j}` on a grid, for any graph.
    #[arg(long)]
    quadratic: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Artifact files; a drawing and its report are cross-checked.
    #[arg(long = "in", required = true, num_args = 1..)]
    input: Vec<PathBuf>,
    #[arg(long, value_enum, default_value_t = Level::Fast)]
    verify: Level,
}

/// Artifacts in write order, keyed by file name.
type Artifacts = BTreeMap<String, Value>;

struct Outcome {
    artifacts: Artifacts,
    svg: Option<String>,
    table: Vec<Row>,
}

/// One line of the certificate table; `bound` is informative when `hard` is false.
struct Row {
    name: String,
    value: String,
    bound: String,
    ok: bool,
    hard: bool,
}

impl Row {
    fn new(name: &str, value: impl ToString, bound: impl ToString, ok: bool) -> Row {
        Row { name: name.into(), value: value.to_string(), bound: bound.to_string(), ok, hard: true }
    }

    fn info(name: &str, value: impl ToString) -> Row {
        Row { name: name.into(), value: value.to_string(), bound: "-".into(), ok: true, hard: false }
    }

    fn flag(mut self) -> Row {
        self.hard = false;
        self
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(4),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

/// `Ok(false)` when a hard row failed.
fn run(cmd: Command) -> Result<bool> {
    let (out, outcome) = match cmd {
        Command::Decompose(a) => (a.run.out.clone(), decompose(&a)?),
        Command::Draw(a) => (a.out.clone(), draw(&a, a.class)?),
        Command::K5Draw(a) => (a.out.clone(), draw(&a, Class::K5)?),
        Command::K33Draw(a) => (a.out.clone(), draw(&a, Class::K33)?),
        Command::ConvexDraw(a) => (a.out.clone(), draw(&a, Class::Treewidth)?),
        Command::K5Decomp(a) => (a.out.clone(), k5_decomp(&a)?),
        Command::TreePartition(a) => (a.out.clone(), tree_partition_cmd(&a)?),
        Command::Verify(a) => (None, verify(&a)?),
    };
    print_table(&outcome.table);
    emit(out.as_deref(), &outcome)?;
    Ok(outcome.table.iter().all(|r| r.ok || !r.hard))
}

fn emit(out: Option<&Path>, o: &Outcome) -> Result<()> {
    match out {
        Some(dir) => {
            fs::create_dir_all(dir)?;
            for (name, v) in &o.artifacts {
                fs::write(dir.join(name), serde_json::to_string_pretty(v)? + "\n")?;
            }
            if let Some(svg) = &o.svg {
                fs::write(dir.join("drawing.svg"), svg)?;
            }
        }
        None if o.artifacts.is_empty() => {}
        None => {
            let mut all: BTreeMap<&str, Value> = o.artifacts.iter().map(|(k, v)| (k.as_str(), v.clone())).collect();
            if let Some(svg) = &o.svg {
                all.insert("drawing.svg", Value::String(svg.clone()));
            }
            println!("{}", serde_json::to_string_pretty(&all)?);
        }
    }
    Ok(())
}

fn print_table(rows: &[Row]) {
    let w = rows.iter().map(|r| r.name.len()).max().unwrap_or(0);
    for r in rows {
        let status = match (r.hard, r.ok) {
            (false, true) if r.bound == "-" => "",
            (_, true) => "ok",
            (true, false) => "FAIL",
            (false, false) => "flagged",
        };
        eprintln!("{:w$}  {:>10}  {:>14}  {status}", r.name, r.value, r.bound);
    }
}

fn read_graph(path: &Path) -> Result<Graph> {
    Graph::parse_edge_list(&fs::read_to_string(path)?)
}

fn to_value<T: Serialize>(t: &T) -> Result<Value> {
    Ok(serde_json::to_value(t)?)
}

/// Oracle caps from `PLANDEC_ORACLE_CAP`: `a/b` for tree-width and minors, or
/// one number for both.
fn oracle_caps() -> Result<(usize, usize)> {
    let Ok(raw) = std::env::var("PLANDEC_ORACLE_CAP") else {
        return Ok((TREEWIDTH_ORACLE_CAP, MINOR_ORACLE_CAP));
    };
    let bad = || Error::Parse(format!("PLANDEC_ORACLE_CAP={raw:?}: want `n` or `tw/minor`"));
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    match raw.split_once('/') {
        Some((a, b)) => Ok((num(a)?, num(b)?)),
        None => num(&raw).map(|c| (c, c)),
    }
}

/// Rows confirming that `g` lies in `class`; errors past the oracle caps.
fn class_rows(g: &Graph, class: Class) -> Result<Vec<Row>> {
    let (tw_cap, minor_cap) = oracle_caps()?;
    let minor_free = |h: MinorTarget, name: &str| -> Result<Row> {
        let has = has_minor_with_cap(g, h, minor_cap)?;
        Ok(Row::new(name, !has, true, !has))
    };
    Ok(match class {
        Class::K5 => vec![minor_free(MinorTarget::K5, "K5-minor-free")?],
        Class::K33 => vec![minor_free(MinorTarget::K33, "K3,3-minor-free")?],
        Class::Treewidth => vec![Row::info("treewidth (exact)", treewidth_exact_with_cap(g, tw_cap)?.0)],
        Class::Generic => Vec::new(),
    })
}

/// Stops a run whose input failed the class check; only the table is reported.
fn rejected(table: &[Row]) -> bool {
    table.iter().any(|r| r.hard && !r.ok)
}

fn only_table(table: Vec<Row>) -> Outcome {
    Outcome { artifacts: Artifacts::new(), svg: None, table }
}

fn graph_rows(g: &Graph) -> Vec<Row> {
    vec![Row::info("vertices", g.n()), Row::info("edges", g.m()), Row::info("max degree", g.max_degree())]
}

fn decomposition_rows(d: &Decomposition) -> Vec<Row> {
    let report = d.validate();
    let mut rows = vec![
        Row::info("strong", d.strong),
        Row::info("p", d.p),
        Row::new("valid", report.ok, true, report.ok),
        Row::new("planar D", report.metrics.planar, true, report.metrics.planar),
    ];
    for v in &report.violations {
        rows.push(Row::new("violation", v, "-", false));
    }
    rows
}

fn decompose(a: &DecomposeArgs) -> Result<Outcome> {
    let g = read_graph(&a.run.input)?;
    let n = g.n();
    let mut table = graph_rows(&g);
    if a.run.verify == Level::Full && !a.quadratic {
        table.extend(class_rows(&g, a.run.class)?);
    }
    if rejected(&table) {
        return Ok(only_table(table));
    }
    let p = a.p.unwrap_or(2);
    // Width and order bounds each construction guarantees.
    // The empty graph has one decomposition, whatever the class.
    let (d, width_bound, order_bound): (Decomposition, usize, String) = if n == 0 {
        (identity_decomposition(&g), 0, "0".into())
    } else if a.quadratic {
        (quadratic_decomp(&g), 2, format!("{}", n * (n + 1) / 2))
    } else {
        match a.run.class {
            Class::K5 if a.strong && p > 3 => (strong_omega_decomp_k5(&g)?, 4, format!("{}", (4 * n / 3).max(4) - 4)),
            Class::K5 if a.strong => (strong_3_decomp_k5(&g)?, 3, format!("{}", (3 * n).max(8) - 8)),
            Class::K5 => (planar_omega_decomp_k5(&g)?, 2, format!("{}", (4 * n / 3).max(2) - 2)),
            Class::K33 => {
                let part = k33_planar_partition(&g)?;
                (part.as_decomposition(), 2, format!("{}", n))
            }
            Class::Treewidth => {
                let (tw_cap, _) = oracle_caps()?;
                let (tw, td) = treewidth_exact_with_cap(&g, tw_cap)?;
                (td, tw + 1, "-".into())
            }
            Class::Generic if a.strong || p > 2 => (degen_omega(&g), n.max(1), format!("{n}")),
            Class::Generic => (identity_decomposition(&g), 1, format!("{n}")),
        }
    };
    if n == 0 && d.order() == 0 {
        table.push(Row::info("order", 0));
    } else {
        table.push(Row::new("width", d.width(), width_bound, d.width() <= width_bound));
        let order_ok = order_bound.parse::<usize>().map_or(true, |b| n < 4 || d.order() <= b);
        table.push(Row::new("order", d.order(), order_bound, order_ok));
        table.push(Row::info("spread", d.metrics().spread));
    }
    table.extend(decomposition_rows(&d));
    if a.strong && !d.strong {
        table.push(Row::new("strong", false, true, false));
    }
    let mut artifacts = Artifacts::new();
    artifacts.insert("decomposition.json".into(), to_value(&d.to_json())?);
    Ok(Outcome { artifacts, svg: None, table })
}

fn check_rows(checks: &[BoundCheck]) -> Vec<Row> {
    checks
        .iter()
        .map(|c| {
            let bound = if c.den == 1 { c.num.to_string() } else { format!("{}/{}", c.num, c.den) };
            Row::new(&c.name, c.value, bound, c.holds())
        })
        .collect()
}

fn draw(a: &RunArgs, class: Class) -> Result<Outcome> {
    let g = read_graph(&a.input)?;
    let mut table = graph_rows(&g);
    if a.verify == Level::Full {
        table.extend(class_rows(&g, class)?);
    }
    if rejected(&table) {
        return Ok(only_table(table));
    }
    let cd: CertifiedDrawing = match class {
        Class::K5 => crossings_k5(&g, a.seed)?,
        Class::K33 => k33_rectilinear_drawing(&g, a.seed)?,
        Class::Treewidth => {
            let (tw_cap, _) = oracle_caps()?;
            let td = treewidth_exact_with_cap(&g, tw_cap)?.1;
            let out = convex_treewidth_pipeline(&g, Some(&td))?;
            let tp = &out.tree_partition;
            let within = tree_partition_width_bound_holds(tp.width, tp.tw, g.max_degree());
            table.push(Row::info("treewidth", tp.tw));
            table.push(Row::new("partition width", tp.width, "5/2 (tw+1)(7/2 Δ - 1)", within).flag());
            out.drawing
        }
        Class::Generic => generic_drawing(&g, a.seed)?,
    };
    table.push(Row::info("crossings", cd.report.total));
    table.push(Row::info("max per edge", cd.report.max_per_edge()));
    table.extend(check_rows(&cd.checks));
    let mut artifacts = Artifacts::new();
    artifacts.insert("drawing.json".into(), to_value(&cd.drawing.to_json())?);
    artifacts.insert("report.json".into(), report_json(class, &cd)?);
    let svg = if a.svg { Some(to_svg(&cd.drawing, true)?) } else { None };
    Ok(Outcome { artifacts, svg, table })
}

/// Plane straight-line drawing when `g` is planar, else the grid decomposition rendered.
fn generic_drawing(g: &Graph, seed: u64) -> Result<CertifiedDrawing> {
    if is_planar(g) {
        let drawing = Drawing::straight(g.clone(), straight_line_layout_of(g)?);
        let report = count_crossings(&drawing)?;
        let checks = vec![BoundCheck::at_most("crossings <= 0 (planar)", report.total, 0)];
        return Ok(CertifiedDrawing { drawing, report, checks });
    }
    let out = render(&quadratic_decomp(g), seed)?;
    let checks = vec![
        BoundCheck::at_most("crossings <= 2 Δ² Σ C(|X|+1, 2)", out.report.total, out.bounds.crossing_bound),
        BoundCheck::at_most("bends <= s(v) + s(w) - 2", usize::from(!out.bounds.bends_ok), 0),
    ];
    Ok(CertifiedDrawing { drawing: out.drawing, report: out.report, checks })
}

fn report_json(class: Class, cd: &CertifiedDrawing) -> Result<Value> {
    Ok(json!({
        "class": class,
        "crossings": to_value(&cd.report)?,
        "checks": to_value(&cd.checks)?,
        "holds": cd.holds(),
    }))
}

fn k5_decomp(a: &RunArgs) -> Result<Outcome> {
    let g = read_graph(&a.input)?;
    let mut table = graph_rows(&g);
    if a.verify == Level::Full {
        table.extend(class_rows(&g, Class::K5)?);
    }
    if rejected(&table) {
        return Ok(only_table(table));
    }
    let tree = wagner_k5_decompose(&g)?;
    let count = |k| tree.pieces.iter().filter(|p| p.kind == k).count();
    use plandec::minor_free::PieceKind;
    table.push(Row::info("planar pieces", count(PieceKind::Planar)));
    table.push(Row::info("V8 pieces", count(PieceKind::V8)));
    table.push(Row::info("joins", tree.joins.len()));
    let rebuilt = tree.check(&g).is_ok();
    table.push(Row::new("recomposes", rebuilt, true, rebuilt));
    let mut artifacts = Artifacts::new();
    artifacts.insert("sumtree.json".into(), to_value(&tree.to_json())?);
    if g.n() > 0 {
        let d = planar_omega_decomp_k5(&g)?;
        let doubletons = d.bags.iter().filter(|b| b.len() == 2).count();
        let singletons = d.bags.iter().filter(|b| b.len() == 1).count();
        table.push(Row::new("width", d.width(), 2, d.width() <= 2));
        let n = g.n();
        table.push(Row::new("doubleton bags", doubletons, n.saturating_sub(2), doubletons + 2 <= n.max(2)));
        table.push(Row::new("singleton bags", singletons, n / 3, n < 4 || singletons <= n / 3));
        table.extend(decomposition_rows(&d));
        artifacts.insert("decomposition.json".into(), to_value(&d.to_json())?);
    }
    Ok(Outcome { artifacts, svg: None, table })
}

fn tree_partition_cmd(a: &RunArgs) -> Result<Outcome> {
    let g = read_graph(&a.input)?;
    let mut table = graph_rows(&g);
    let (tw_cap, _) = oracle_caps()?;
    let (tw, td) = treewidth_exact_with_cap(&g, tw_cap)?;
    let tp = tree_partition(&g, &td)?;
    let forest = tp.partition.pattern().is_forest();
    table.push(Row::info("treewidth", tw));
    table.push(Row::new("pattern is a forest", forest, true, forest));
    let within = tree_partition_width_bound_holds(tp.width, tp.tw, g.max_degree());
    table.push(Row::new("width", tp.width, "5/2 (tw+1)(7/2 Δ - 1)", within).flag());
    let mut artifacts = Artifacts::new();
    artifacts.insert("partition.json".into(), to_value(&tp.partition.to_json())?);
    Ok(Outcome { artifacts, svg: None, table })
}

/// Artifact kinds told apart by their keys.
enum Artifact {
    Decomposition(Decomposition),
    Partition(Partition),
    SumTree(SumTree),
    Drawing(Drawing),
    Report(Value),
}

fn load(path: &Path) -> Result<Artifact> {
    let v: Value = serde_json::from_str(&fs::read_to_string(path)?)?;
    let has = |k: &str| v.get(k).is_some();
    let name = path.display();
    Ok(if has("dedges") {
        Artifact::Decomposition(Decomposition::from_json(&serde_json::from_value::<DecompositionJson>(v)?)?)
    } else if has("pieces") {
        Artifact::SumTree(SumTree::from_json(&serde_json::from_value::<SumTreeJson>(v)?)?)
    } else if has("points") {
        Artifact::Drawing(Drawing::from_json(&serde_json::from_value::<DrawingJson>(v)?)?)
    } else if has("bags") {
        Artifact::Partition(Partition::from_json(&serde_json::from_value::<PartitionJson>(v)?)?)
    } else if has("checks") && has("crossings") {
        Artifact::Report(v)
    } else {
        return Err(Error::Parse(format!("{name}: not a decomposition, partition, sum tree, drawing or report")));
    })
}

fn verify(a: &VerifyArgs) -> Result<Outcome> {
    let mut table = Vec::new();
    let mut counted: Option<(usize, Vec<usize>)> = None;
    let mut reports = Vec::new();
    for path in &a.input {
        let name = path.display().to_string();
        table.push(Row::info("artifact", &name));
        match load(path)? {
            Artifact::Decomposition(d) => {
                if a.verify == Level::Full {
                    let (tw_cap, _) = oracle_caps()?;
                    let tw = treewidth_exact_with_cap(&d.host, tw_cap)?.0;
                    // A strong decomposition over a forest is a tree decomposition.
                    if d.strong && d.dgraph.is_forest() && d.validate().ok {
                        table.push(Row::new("width - 1 >= treewidth", d.width().saturating_sub(1), tw, d.width() > tw));
                    }
                }
                table.extend(decomposition_rows(&d));
            }
            Artifact::Partition(p) => {
                let pattern = p.pattern();
                table.push(Row::info("width", p.width()));
                table.push(Row::info("pattern planar", is_planar(&pattern)));
                table.push(Row::info("pattern is a forest", pattern.is_forest()));
            }
            Artifact::SumTree(t) => {
                let rebuilt = t.recompose().and_then(|g| t.check(&g));
                table.push(Row::new("leaves and joins", rebuilt.is_ok(), true, rebuilt.is_ok()));
                if let Err(e) = rebuilt {
                    table.push(Row::new("violation", e, "-", false));
                }
            }
            Artifact::Drawing(dr) => {
                let report = count_crossings(&dr)?;
                table.push(Row::info("crossings", report.total));
                if a.verify == Level::Full {
                    table.push(Row::info("max per edge", report.max_per_edge()));
                }
                counted = Some((report.total, report.per_edge));
            }
            Artifact::Report(v) => reports.push(v),
        }
    }
    for v in reports {
        let checks: Vec<CheckJson> = serde_json::from_value(v["checks"].clone())?;
        for c in checks {
            let b = BoundCheck { name: c.name, value: c.value, num: c.num, den: c.den, strict: c.strict };
            table.extend(check_rows(std::slice::from_ref(&b)));
        }
        if let Some((total, per_edge)) = &counted {
            let said_total = v["crossings"]["total"].as_u64().map(|t| t as usize);
            let said_edges: Option<Vec<usize>> = serde_json::from_value(v["crossings"]["per_edge"].clone()).ok();
            let agree = said_total == Some(*total) && said_edges.as_ref() == Some(per_edge);
            table.push(Row::new("report matches drawing", agree, true, agree));
        }
    }
    Ok(Outcome { artifacts: Artifacts::new(), svg: None, table })
}

#[derive(serde::Deserialize)]
struct CheckJson {
    name: String,
    value: u64,
    num: u64,
    den: u64,
    strict: bool,
}
