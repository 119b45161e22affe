//! File formats: graph documents, DIMACS CNF and SVG figures.

mod dimacs;
mod json;
mod svg;

pub use dimacs::{emit_dimacs, parse_dimacs};
pub use json::{emit_document, emit_graph, parse_document, parse_graph, GraphDocument, GRAPH_VERSION};
pub use svg::{emit_svg, SvgStyle};
