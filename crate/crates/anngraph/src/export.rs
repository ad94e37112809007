//! Deterministic exporters: a JSON document schema that round-trips, and
//! GraphViz DOT with optional fill colors from a coloring.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::coloring::Coloring;
use crate::error::{ExportError, ModelError};
use crate::graph::{DenseGraph, Graph, ReducedGraph};
use crate::model::{GraphKind, PointSet};

/// Largest size the exporters accept; beyond it the edge lists leave the
/// megabyte range.
pub const EXPORT_CAP: u32 = 10;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DocumentMeta {
    pub vertex_count: u64,
    pub edge_count: u64,
}

/// Serializable image of a reduced graph. Vertices are support masks in
/// enumeration order; edges are mask pairs, smaller mask first, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub n: u32,
    pub kind: GraphKind,
    pub vertices: Vec<u64>,
    pub edges: Vec<(u64, u64)>,
    pub meta: DocumentMeta,
}

pub fn graph_document(g: &ReducedGraph) -> Result<GraphDocument, ModelError> {
    if g.n() > EXPORT_CAP {
        return Err(ModelError::TooLarge {
            n: g.n(),
            cap: EXPORT_CAP,
        });
    }
    let vertices: Vec<u64> = g.vertices().iter().map(|v| v.bits()).collect();
    let mut edges = Vec::new();
    for u in 0..g.vertex_count() {
        for v in u + 1..g.vertex_count() {
            if g.adjacent(u, v) {
                let (a, b) = (vertices[u], vertices[v]);
                edges.push((a.min(b), a.max(b)));
            }
        }
    }
    edges.sort_unstable();
    Ok(GraphDocument {
        n: g.n(),
        kind: g.kind(),
        meta: DocumentMeta {
            vertex_count: vertices.len() as u64,
            edge_count: edges.len() as u64,
        },
        vertices,
        edges,
    })
}

/// Compact single-line JSON with a trailing newline; identical input gives
/// identical bytes.
pub fn to_json(doc: &GraphDocument) -> String {
    let mut s = serde_json::to_string(doc).expect("document serialization cannot fail");
    s.push('\n');
    s
}

/// Parses and fully validates a graph document.
pub fn parse_json(s: &str) -> Result<GraphDocument, ExportError> {
    let doc: GraphDocument = serde_json::from_str(s)?;
    let mut seen = BTreeMap::new();
    for (i, &mask) in doc.vertices.iter().enumerate() {
        PointSet::new(mask, doc.n)?;
        if seen.insert(mask, i).is_some() {
            return Err(ExportError::DuplicateVertex(mask));
        }
    }
    for &(a, b) in &doc.edges {
        if !seen.contains_key(&a) || !seen.contains_key(&b) {
            return Err(ExportError::UnknownEdgeVertex(a, b));
        }
    }
    if doc.meta.vertex_count != doc.vertices.len() as u64 {
        return Err(ExportError::Meta(format!(
            "vertex_count {} vs {} vertices",
            doc.meta.vertex_count,
            doc.vertices.len()
        )));
    }
    if doc.meta.edge_count != doc.edges.len() as u64 {
        return Err(ExportError::Meta(format!(
            "edge_count {} vs {} edges",
            doc.meta.edge_count,
            doc.edges.len()
        )));
    }
    Ok(doc)
}

/// Materializes a parsed document as an explicit graph, with the vertex
/// order and labels of the original reduced graph.
pub fn rebuild(doc: &GraphDocument) -> Result<DenseGraph, ExportError> {
    let mut index = BTreeMap::new();
    let mut g = DenseGraph::new(doc.vertices.len());
    for (i, &mask) in doc.vertices.iter().enumerate() {
        let v = PointSet::new(mask, doc.n)?;
        if index.insert(mask, i).is_some() {
            return Err(ExportError::DuplicateVertex(mask));
        }
        g.set_label(i, v.to_string());
    }
    for &(a, b) in &doc.edges {
        let (&u, &v) = match (index.get(&a), index.get(&b)) {
            (Some(u), Some(v)) => (u, v),
            _ => return Err(ExportError::UnknownEdgeVertex(a, b)),
        };
        g.add_edge(u, v);
    }
    Ok(g)
}

/// GraphViz DOT for a reduced graph. Node ids are `v{mask}` with indicator
/// labels; an optional coloring adds HSV fills, one hue per color class.
pub fn dot(g: &ReducedGraph, coloring: Option<&Coloring>) -> Result<String, ExportError> {
    if g.n() > EXPORT_CAP {
        return Err(ExportError::Model(ModelError::TooLarge {
            n: g.n(),
            cap: EXPORT_CAP,
        }));
    }
    if let Some(c) = coloring {
        if c.n() != g.n() {
            return Err(ExportError::Model(ModelError::SpaceMismatch(g.n(), c.n())));
        }
    }
    let palette = coloring.map(|c| c.palette_size().max(1)).unwrap_or(1);
    let mut out = String::new();
    writeln!(out, "graph {}_n{} {{", g.kind().short_name(), g.n()).unwrap();
    for &v in g.vertices() {
        match coloring {
            None => writeln!(out, "  v{} [label=\"1_{}\"];", v.bits(), v).unwrap(),
            Some(c) => {
                let color = c
                    .color_of(v)
                    .ok_or_else(|| ExportError::UncoloredVertex(v.to_string()))?;
                let hue = color as f64 / palette as f64;
                writeln!(
                    out,
                    "  v{} [label=\"1_{}\", style=filled, fillcolor=\"{hue:.3} 0.45 0.95\"];",
                    v.bits(),
                    v
                )
                .unwrap();
            }
        }
    }
    let mut edges = Vec::new();
    for u in 0..g.vertex_count() {
        for v in u + 1..g.vertex_count() {
            if g.adjacent(u, v) {
                let (a, b) = (g.vertex(u).bits(), g.vertex(v).bits());
                edges.push((a.min(b), a.max(b)));
            }
        }
    }
    edges.sort_unstable();
    for (a, b) in edges {
        writeln!(out, "  v{a} -- v{b};").unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}

/// Serializes a coloring as compact JSON with a trailing newline.
pub fn coloring_json(c: &Coloring) -> String {
    let mut s = serde_json::to_string(c).expect("coloring serialization cannot fail");
    s.push('\n');
    s
}

/// Parses a coloring and checks every key is a valid support mask.
pub fn parse_coloring(s: &str) -> Result<Coloring, ExportError> {
    let c: Coloring = serde_json::from_str(s)?;
    for &mask in c.assignment().keys() {
        PointSet::new(mask, c.n())?;
    }
    Ok(c)
}
