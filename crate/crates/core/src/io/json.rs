//! The graph document format.
//!
//! ```json
//! {
//!   "version": "lgg-graph/1",
//!   "points": [
//!     ["0", "0"],
//!     ["1/3", "-0.00001"]
//!   ],
//!   "edges": [
//!     [0, 1],
//!     [0, 2, "1/2"]
//!   ],
//!   "metadata": {"generator": "ladder", "n": 16}
//! }
//! ```
//!
//! Coordinates and weights are strings (JSON numbers are also accepted and
//! read exactly). Emission is canonical, so a canonical document survives a
//! parse/emit round trip byte for byte.

use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::graph::{GeometricGraph, PointSet};
use crate::rational::Rational;

pub const GRAPH_VERSION: &str = "lgg-graph/1";

/// A parsed document: the graph plus its free-form metadata.
#[derive(Clone, Debug)]
pub struct GraphDocument {
    pub graph: GeometricGraph,
    pub metadata: Map<String, Value>,
}

fn invalid(field: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Validation { field: field.into(), message: message.into() }
}

fn exact_number(value: &Value, field: &str) -> Result<Rational> {
    let text = match value {
        Value::String(s) => s.clone(),
        Value::Number(n) => n.to_string(),
        _ => return Err(invalid(field, "expected a number or numeric string")),
    };
    text.parse().map_err(|_| invalid(field, format!("`{text}` is not a decimal or p/q number")))
}

fn index(value: &Value, field: &str, len: usize) -> Result<usize> {
    let i = value
        .as_u64()
        .and_then(|i| usize::try_from(i).ok())
        .ok_or_else(|| invalid(field, "expected a non-negative integer index"))?;
    if i >= len {
        return Err(invalid(field, format!("index {i} out of range for {len} points")));
    }
    Ok(i)
}

/// Parses a document; syntax errors carry line and column, structural ones the field path.
pub fn parse_document(text: &str) -> Result<GraphDocument> {
    let root: Value = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let Value::Object(mut root) = root else { return Err(invalid("$", "expected an object")) };

    match root.get("version") {
        Some(Value::String(v)) if v == GRAPH_VERSION => {}
        Some(other) => return Err(invalid("version", format!("unsupported version {other}"))),
        None => return Err(invalid("version", "missing")),
    }

    let raw_points = match root.get("points") {
        Some(Value::Array(a)) => a,
        _ => return Err(invalid("points", "expected an array")),
    };
    let mut points = Vec::with_capacity(raw_points.len());
    for (i, p) in raw_points.iter().enumerate() {
        let field = format!("points[{i}]");
        let pair = p.as_array().filter(|a| a.len() == 2).ok_or_else(|| invalid(&field, "expected [x, y]"))?;
        let x = exact_number(&pair[0], &format!("{field}[0]"))?;
        let y = exact_number(&pair[1], &format!("{field}[1]"))?;
        points.push(Point::new(x, y));
    }
    let points = PointSet::new(points).map_err(|e| match e {
        Error::DuplicatePoint { first, second } => {
            invalid(format!("points[{second}]"), format!("duplicates points[{first}]"))
        }
        other => other,
    })?;
    let n = points.len();

    let raw_edges = match root.get("edges") {
        Some(Value::Array(a)) => a.as_slice(),
        None => &[],
        _ => return Err(invalid("edges", "expected an array")),
    };
    let mut seen = std::collections::HashMap::new();
    let mut edges = Vec::with_capacity(raw_edges.len());
    for (i, e) in raw_edges.iter().enumerate() {
        let field = format!("edges[{i}]");
        let entry = e
            .as_array()
            .filter(|a| a.len() == 2 || a.len() == 3)
            .ok_or_else(|| invalid(&field, "expected [a, b] or [a, b, weight]"))?;
        let a = index(&entry[0], &format!("{field}[0]"), n)?;
        let b = index(&entry[1], &format!("{field}[1]"), n)?;
        if a == b {
            return Err(invalid(&field, format!("self-loop at vertex {a}")));
        }
        if let Some(j) = seen.insert((a.min(b), a.max(b)), i) {
            return Err(invalid(&field, format!("duplicates edges[{j}]")));
        }
        let weight = match entry.get(2) {
            Some(w) => exact_number(w, &format!("{field}[2]"))?,
            None => Rational::one(),
        };
        if weight.is_negative() {
            return Err(invalid(format!("{field}[2]"), "weight must be non-negative"));
        }
        edges.push((a, b, weight));
    }
    let graph = GeometricGraph::build_weighted(points, edges)?;

    let metadata = match root.remove("metadata") {
        Some(Value::Object(m)) => m,
        None => Map::new(),
        Some(_) => return Err(invalid("metadata", "expected an object")),
    };
    Ok(GraphDocument { graph, metadata })
}

pub fn parse_graph(text: &str) -> Result<GeometricGraph> {
    Ok(parse_document(text)?.graph)
}

fn quoted(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

pub fn emit_document(g: &GeometricGraph, metadata: &Map<String, Value>) -> String {
    let mut out = String::new();
    out.push_str("{\n");
    out.push_str(&format!("  \"version\": {},\n", quoted(GRAPH_VERSION)));
    let points: Vec<String> = g
        .points()
        .iter()
        .map(|p| format!("    [{}, {}]", quoted(&p.x.to_canonical_string()), quoted(&p.y.to_canonical_string())))
        .collect();
    push_array(&mut out, "points", &points);
    out.push_str(",\n");
    let edges: Vec<String> = g
        .edges()
        .iter()
        .map(|e| {
            if e.weight == Rational::one() {
                format!("    [{}, {}]", e.a, e.b)
            } else {
                format!("    [{}, {}, {}]", e.a, e.b, quoted(&e.weight.to_canonical_string()))
            }
        })
        .collect();
    push_array(&mut out, "edges", &edges);
    out.push_str(",\n");
    let meta = serde_json::to_string(metadata).expect("metadata serializes");
    out.push_str(&format!("  \"metadata\": {meta}\n}}\n"));
    out
}

fn push_array(out: &mut String, key: &str, rows: &[String]) {
    if rows.is_empty() {
        out.push_str(&format!("  \"{key}\": []"));
    } else {
        out.push_str(&format!("  \"{key}\": [\n{}\n  ]", rows.join(",\n")));
    }
}

pub fn emit_graph(g: &GeometricGraph) -> String {
    emit_document(g, &Map::new())
}

#[cfg(test)]
mod tests {
    use super::*;

    const SMALL: &str = r#"{
  "version": "lgg-graph/1",
  "points": [
    ["0", "0"],
    ["1/3", "-0.00001"],
    ["2", "5"]
  ],
  "edges": [
    [0, 1],
    [1, 2, "0.5"]
  ],
  "metadata": {"generator":"test","n":3}
}
"#;

    #[test]
    fn canonical_round_trip_is_byte_stable() {
        let doc = parse_document(SMALL).unwrap();
        assert_eq!(emit_document(&doc.graph, &doc.metadata), SMALL);
    }

    #[test]
    fn coordinates_are_exact() {
        let g = parse_graph(SMALL).unwrap();
        assert_eq!(g.point(1).x, Rational::new(1, 3));
        assert_eq!(g.point(1).y, Rational::new(-1, 100_000));
        assert_eq!(g.edge(1).weight, Rational::new(1, 2));
    }

    #[test]
    fn numbers_are_read_exactly() {
        let g = parse_graph(r#"{"version":"lgg-graph/1","points":[[0,0],[0.1,1e-3]],"edges":[[0,1]]}"#).unwrap();
        assert_eq!(g.point(1).x, Rational::new(1, 10));
        assert_eq!(g.point(1).y, Rational::new(1, 1000));
        assert_eq!((g.vertex_count(), g.edge_count()), (2, 1));
    }

    #[test]
    fn empty_graph_round_trip() {
        let text = "{\n  \"version\": \"lgg-graph/1\",\n  \"points\": [],\n  \"edges\": [],\n  \"metadata\": {}\n}\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(emit_graph(&g), text);
    }

    fn field_of(text: &str) -> String {
        match parse_graph(text) {
            Err(Error::Validation { field, .. }) => field,
            other => panic!("expected a validation error, got {other:?}"),
        }
    }

    #[test]
    fn validation_errors_name_the_field() {
        let pts = r#""version":"lgg-graph/1","points":[["0","0"],["1","0"]]"#;
        assert_eq!(field_of(&format!("{{{pts},\"edges\":[[0,0]]}}")), "edges[0]");
        assert_eq!(field_of(&format!("{{{pts},\"edges\":[[0,1],[1,0]]}}")), "edges[1]");
        assert_eq!(field_of(&format!("{{{pts},\"edges\":[[0,5]]}}")), "edges[0][1]");
        assert_eq!(field_of(&format!("{{{pts},\"edges\":[[0,1,\"-1\"]]}}")), "edges[0][2]");
        assert_eq!(field_of(r#"{"version":"lgg-graph/1","points":[["0","0"],["0","0"]]}"#), "points[1]");
        assert_eq!(field_of(r#"{"version":"lgg-graph/1","points":[["0","x"]]}"#), "points[0][1]");
        assert_eq!(field_of(r#"{"version":"other","points":[]}"#), "version");
    }

    #[test]
    fn syntax_errors_are_positioned() {
        match parse_graph("{\n  \"version\": \"lgg-graph/1\",\n  \"points\": [,]\n}") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (3, 14)),
            other => panic!("{other:?}"),
        }
    }
}
