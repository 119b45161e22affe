//! The `lgg` command line. [`run`] takes explicit streams so it can be driven from tests.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use lgg::io::{emit_document, emit_svg, parse_dimacs, parse_document, GraphDocument, SvgStyle};
use lgg::{
    brute_force_lgg_valid, brute_force_min_dilation, brute_force_mwis, brute_force_sat, build_conflict_graph,
    decision_dilation_with, dilation_matrix, dilation_pair, dilation_with, gabriel_graph, gen_ladder,
    gen_ladder_augmented, gen_ladder_augmented_lgg, gen_max34_instance, gen_random_cnf, gen_random_max34,
    gen_random_points, gen_sat3_instance, gen_unit_distance_grid, max_glgg_exact, max_glgg_greedy,
    min_dilation_lgg_with, verify_lgg, BoundingBox, CnfFormula, Error, Exec, GeometricGraph, MinDilationOptions,
    Rational, ReductionInstance,
};

#[derive(Parser, Debug)]
#[command(name = "lgg", version, about = "Locally Gabriel graph toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check that every edge of a graph is locally Gabriel (exit 1 if not).
    Verify {
        /// Graph document; `-` or absent reads standard input.
        graph: Option<PathBuf>,
        /// Also run the brute-force checker and report both answers.
        #[arg(long)]
        oracle: bool,
    },
    /// Emit the Gabriel graph of a point set.
    Gabriel { points: Option<PathBuf> },
    /// Find a largest (or heaviest) locally Gabriel subgraph.
    Maximize(MaximizeArgs),
    /// Dilation of a graph, or of one vertex pair.
    Dilation {
        graph: Option<PathBuf>,
        #[arg(long, num_args = 2, value_names = ["U", "V"])]
        pair: Option<Vec<usize>>,
        /// Include the full pair matrix.
        #[arg(long)]
        matrix: bool,
    },
    /// Minimum-dilation LGG over a small point set.
    MinDilation(MinDilationArgs),
    /// Generate instances.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Render a graph as SVG.
    Plot {
        graph: Option<PathBuf>,
        #[arg(short, long)]
        output: PathBuf,
        /// Draw conflicting edges in red.
        #[arg(long)]
        highlight_conflicts: bool,
    },
}

#[derive(Args, Debug)]
struct MaximizeArgs {
    graph: Option<PathBuf>,
    #[arg(long, conflicts_with = "greedy")]
    exact: bool,
    #[arg(long)]
    greedy: bool,
    /// Time budget in seconds for the exact search.
    #[arg(long)]
    budget: Option<f64>,
    /// Use the document's edge weights instead of unit weights.
    #[arg(long)]
    weights: bool,
    /// Decide whether some GLGG reaches this weight (exit 1 if not).
    #[arg(long)]
    at_least: Option<String>,
    #[arg(long)]
    oracle: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args, Debug)]
struct MinDilationArgs {
    points: Option<PathBuf>,
    /// Maximum number of maximal LGGs to enumerate.
    #[arg(long, default_value_t = 100_000)]
    cap: usize,
    #[arg(long, default_value_t = 12)]
    max_points: usize,
    /// Decide whether some LGG has dilation at most this value (exit 1 if not).
    #[arg(long)]
    at_most: Option<String>,
    #[arg(long)]
    oracle: bool,
}

#[derive(Subcommand, Debug)]
enum GenKind {
    /// Two slanted chains of n points.
    Ladder {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: Option<String>,
    },
    /// The ladder with one outward point per chain gap.
    LadderAug {
        #[arg(long)]
        n: usize,
        /// Emit the witness LGG (detours dotted) instead of bare points.
        #[arg(long)]
        witness: bool,
    },
    /// 3-SAT reduction instance.
    Sat3(FormulaArgs),
    /// MAX-(3,4)-SAT reduction instance.
    Max34 {
        #[command(flatten)]
        formula: FormulaArgs,
        /// Known optimum clause count (otherwise computed by brute force when small).
        #[arg(long)]
        opt: Option<usize>,
    },
    /// Unit-distance grid graph.
    UnitGrid {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
    },
    /// Random points in the unit square.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Emit the Gabriel graph of the points.
        #[arg(long)]
        gabriel: bool,
    },
}

#[derive(Args, Debug)]
struct FormulaArgs {
    /// DIMACS CNF file; otherwise a random formula is drawn.
    #[arg(long)]
    cnf: Option<PathBuf>,
    #[arg(long, default_value_t = 3)]
    vars: usize,
    #[arg(long, default_value_t = 1)]
    clauses: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

/// A failure to compute, reported as exit code 2.
#[derive(Debug)]
enum Failure {
    Lib(Error),
    Io(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn document(&self) -> Value {
        match self {
            Failure::Lib(Error::Parse { line, column, message }) => {
                json!({"error": {"kind": "parse", "line": line, "column": column, "message": message}})
            }
            Failure::Lib(Error::Validation { field, message }) => {
                json!({"error": {"kind": "validation", "field": field, "message": message}})
            }
            Failure::Lib(e) => json!({"error": {"kind": "invalid", "message": e.to_string()}}),
            Failure::Io(m) => json!({"error": {"kind": "io", "message": m}}),
            Failure::Usage(m) => json!({"error": {"kind": "usage", "message": m}}),
        }
    }
}

struct Output {
    document: Value,
    /// Raw text written instead of the JSON document (graph documents).
    text: Option<String>,
    negative: bool,
}

impl Output {
    fn json(document: Value) -> Self {
        Output { document, text: None, negative: false }
    }
}

fn read_input(path: &Option<PathBuf>, stdin: &mut dyn Read) -> Result<String, Failure> {
    match path {
        Some(p) if p != Path::new("-") => {
            std::fs::read_to_string(p).map_err(|e| Failure::Io(format!("{}: {e}", p.display())))
        }
        _ => {
            let mut s = String::new();
            stdin.read_to_string(&mut s).map_err(|e| Failure::Io(format!("stdin: {e}")))?;
            Ok(s)
        }
    }
}

fn parse_rational(text: &str, what: &str) -> Result<Rational, Failure> {
    text.parse().map_err(|_| Failure::Usage(format!("{what}: `{text}` is not a number")))
}

fn edges_json(g: &GeometricGraph, ids: &[usize]) -> Value {
    Value::Array(ids.iter().map(|&e| json!([g.edge(e).a, g.edge(e).b])).collect())
}

fn verify(graph: &Option<PathBuf>, oracle: bool, stdin: &mut dyn Read) -> Result<Output, Failure> {
    let g = parse_document(&read_input(graph, stdin)?)?.graph;
    let verdict = verify_lgg(&g);
    let mut doc = json!({"command": "verify", "valid": verdict.valid, "witness": verdict.witness});
    if oracle {
        doc["oracle_valid"] = json!(brute_force_lgg_valid(&g));
    }
    Ok(Output { document: doc, text: None, negative: !verdict.valid })
}

fn maximize(args: &MaximizeArgs, stdin: &mut dyn Read) -> Result<Output, Failure> {
    let g = parse_document(&read_input(&args.graph, stdin)?)?.graph;
    let mut cg = build_conflict_graph(&g);
    if !args.weights {
        cg = cg.with_unit_weights();
    }
    let method = if args.greedy { "greedy" } else { "exact" };
    let budget = match args.budget {
        Some(s) if !(s.is_finite() && s >= 0.0) => {
            return Err(Failure::Usage("--budget must be a non-negative number".into()))
        }
        Some(s) => Some(Duration::from_secs_f64(s)),
        None => None,
    };
    let result = if args.greedy { max_glgg_greedy(&cg, args.seed) } else { max_glgg_exact(&cg, budget) };
    let mut doc = json!({
        "command": "maximize",
        "method": method,
        "optimal": result.optimal,
        "edge_count": result.chosen.len(),
        "total_weight": result.total_weight,
        "nodes_explored": result.nodes_explored,
        "conflict_nodes": cg.node_count(),
        "conflict_arcs": cg.arcs().len(),
        "edges": edges_json(&g, &result.chosen),
    });
    if args.oracle {
        let answer = brute_force_mwis(&cg)?;
        doc["oracle_weight"] = json!(answer.weight);
    }
    let mut negative = false;
    if let Some(m) = &args.at_least {
        let m = parse_rational(m, "--at-least")?;
        let reached = result.total_weight >= m;
        if !reached && !result.optimal {
            return Err(Failure::Usage("budget exhausted before the decision was settled".into()));
        }
        doc["at_least"] = json!(m);
        doc["decision"] = json!(reached);
        negative = !reached;
    }
    Ok(Output { document: doc, text: None, negative })
}

fn dilation_cmd(
    graph: &Option<PathBuf>,
    pair: &Option<Vec<usize>>,
    matrix: bool,
    stdin: &mut dyn Read,
) -> Result<Output, Failure> {
    let g = parse_document(&read_input(graph, stdin)?)?.graph;
    if let Some(p) = pair {
        let value = dilation_pair(&g, p[0], p[1])?;
        return Ok(Output::json(json!({"command": "dilation", "pair": [p[0], p[1]], "dilation": value})));
    }
    let report = if matrix { dilation_matrix(&g, Exec::default())? } else { dilation_with(&g, Exec::default())? };
    let mut doc = json!({"command": "dilation"});
    doc["global"] = json!(report.global);
    doc["witness_pair"] = json!(report.witness_pair);
    if let Some(m) = report.per_pair {
        doc["per_pair"] = json!(m);
    }
    Ok(Output::json(doc))
}

fn min_dilation_cmd(args: &MinDilationArgs, stdin: &mut dyn Read) -> Result<Output, Failure> {
    let points = parse_document(&read_input(&args.points, stdin)?)?.graph.points().clone();
    let opts = MinDilationOptions { cap: args.cap, max_points: args.max_points, exec: Exec::default() };
    let best = min_dilation_lgg_with(&points, &opts)?;
    let mut doc = json!({
        "command": "min-dilation",
        "dilation": best.dilation,
        "candidates_evaluated": best.candidates_evaluated,
        "truncated": best.truncated,
        "edges": best.best.edge_pairs(),
    });
    if args.oracle {
        doc["oracle_dilation"] = json!(brute_force_min_dilation(&points)?);
    }
    let mut negative = false;
    if let Some(k) = &args.at_most {
        let k = if k == "inf" { None } else { Some(parse_rational(k, "--at-most")?) };
        let yes = decision_dilation_with(&points, k.as_ref(), &opts)?;
        doc["at_most"] = k.map_or(json!("inf"), |k| json!(k));
        doc["decision"] = json!(yes);
        negative = !yes;
    }
    Ok(Output { document: doc, text: None, negative })
}

fn formula(args: &FormulaArgs, max34: bool) -> Result<CnfFormula, Failure> {
    match &args.cnf {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
            Ok(parse_dimacs(&text, max34)?)
        }
        None if max34 => Ok(gen_random_max34(args.vars, args.seed)?),
        None => Ok(gen_random_cnf(args.vars, args.clauses, args.seed)?),
    }
}

fn reduction_metadata(inst: &ReductionInstance, generator: &str) -> Map<String, Value> {
    let clauses: Vec<Value> =
        inst.formula.clauses.iter().map(|c| json!([c[0].to_dimacs(), c[1].to_dimacs(), c[2].to_dimacs()])).collect();
    let mut m = Map::new();
    m.insert("generator".into(), json!(generator));
    m.insert("num_vars".into(), json!(inst.formula.num_vars));
    m.insert("clauses".into(), Value::Array(clauses));
    m.insert("clause_edges".into(), json!(inst.e1.len()));
    m.insert("target".into(), json!(inst.target));
    m
}

fn generate(kind: &GenKind) -> Result<Output, Failure> {
    let mut meta = Map::new();
    let graph = match kind {
        GenKind::Ladder { n, r } => {
            let r = r.as_deref().map(|r| parse_rational(r, "--r")).transpose()?;
            meta.insert("generator".into(), json!("ladder"));
            meta.insert("n".into(), json!(n));
            if let Some(r) = &r {
                meta.insert("r".into(), json!(r));
            }
            GeometricGraph::build(gen_ladder(*n, r)?, &[])?
        }
        GenKind::LadderAug { n, witness } => {
            meta.insert("generator".into(), json!("ladder-aug"));
            meta.insert("n".into(), json!(n));
            if *witness {
                let w = gen_ladder_augmented_lgg(*n)?;
                meta.insert("dotted_edges".into(), json!(w.detours));
                w.graph
            } else {
                GeometricGraph::build(gen_ladder_augmented(*n)?, &[])?
            }
        }
        GenKind::Sat3(args) => {
            let inst = gen_sat3_instance(&formula(args, false)?)?;
            meta = reduction_metadata(&inst, "sat3");
            inst.graph
        }
        GenKind::Max34 { formula: args, opt } => {
            let f = formula(args, true)?;
            let opt = match opt {
                Some(o) => Some(*o),
                None if f.num_vars <= lgg::oracles::SAT_LIMIT => Some(brute_force_sat(&f)?.max_satisfied),
                None => None,
            };
            let inst = gen_max34_instance(&f, opt)?;
            meta = reduction_metadata(&inst, "max34");
            inst.graph
        }
        GenKind::UnitGrid { rows, cols } => {
            meta.insert("generator".into(), json!("unit-grid"));
            meta.insert("rows".into(), json!(rows));
            meta.insert("cols".into(), json!(cols));
            gen_unit_distance_grid(*rows, *cols)?
        }
        GenKind::Random { n, seed, gabriel } => {
            let points = gen_random_points(*n, *seed, &BoundingBox::unit())?;
            meta.insert("generator".into(), json!("random"));
            meta.insert("n".into(), json!(n));
            meta.insert("seed".into(), json!(seed));
            if *gabriel {
                meta.insert("edges".into(), json!("gabriel"));
                gabriel_graph(&points)
            } else {
                GeometricGraph::build(points, &[])?
            }
        }
    };
    Ok(Output { document: Value::Null, text: Some(emit_document(&graph, &meta)), negative: false })
}

fn plot(graph: &Option<PathBuf>, output: &Path, highlight: bool, stdin: &mut dyn Read) -> Result<Output, Failure> {
    let GraphDocument { graph, metadata } = parse_document(&read_input(graph, stdin)?)?;
    let dotted = metadata
        .get("dotted_edges")
        .and_then(Value::as_array)
        .map(|a| a.iter().filter_map(|v| v.as_u64().map(|v| v as usize)).collect())
        .unwrap_or_default();
    let style = SvgStyle { dotted, highlight_conflicts: highlight, ..SvgStyle::default() };
    std::fs::write(output, emit_svg(&graph, &style)).map_err(|e| Failure::Io(format!("{}: {e}", output.display())))?;
    Ok(Output::json(json!({
        "command": "plot",
        "output": output.display().to_string(),
        "vertices": graph.vertex_count(),
        "edges": graph.edge_count(),
    })))
}

fn dispatch(cli: &Cli, stdin: &mut dyn Read) -> Result<Output, Failure> {
    match &cli.command {
        Command::Verify { graph, oracle } => verify(graph, *oracle, stdin),
        Command::Gabriel { points } => {
            let doc = parse_document(&read_input(points, stdin)?)?;
            let g = gabriel_graph(doc.graph.points());
            let mut meta = doc.metadata;
            meta.insert("edges".into(), json!("gabriel"));
            Ok(Output { document: Value::Null, text: Some(emit_document(&g, &meta)), negative: false })
        }
        Command::Maximize(args) => maximize(args, stdin),
        Command::Dilation { graph, pair, matrix } => dilation_cmd(graph, pair, *matrix, stdin),
        Command::MinDilation(args) => min_dilation_cmd(args, stdin),
        Command::Gen { kind } => generate(kind),
        Command::Plot { graph, output, highlight_conflicts } => plot(graph, output, *highlight_conflicts, stdin),
    }
}

fn write_json(out: &mut dyn Write, doc: &Value) {
    let text = serde_json::to_string_pretty(doc).expect("documents serialize");
    let _ = writeln!(out, "{text}");
}

/// Runs the CLI. Exit codes: 0 success, 1 negative decision, 2 usage or input error.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{}", e.render());
                return 0;
            }
            write_json(stderr, &Failure::Usage(e.render().to_string().trim_end().to_string()).document());
            return 2;
        }
    };
    match dispatch(&cli, stdin) {
        Ok(out) => {
            match &out.text {
                Some(text) => {
                    let _ = stdout.write_all(text.as_bytes());
                }
                None => write_json(stdout, &out.document),
            }
            if out.negative {
                1
            } else {
                0
            }
        }
        Err(f) => {
            write_json(stderr, &f.document());
            2
        }
    }
}
