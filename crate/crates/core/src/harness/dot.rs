//! Graphviz DOT export, and a reader for the subset this module writes.

use std::fmt::Write as _;

use crate::digraph::{Digraph, DigraphError, ParseError};
use crate::labeling::{induce_arc_labels, VertexLabeling};

/// Renders `d` as one `digraph` block with vertices `v0..v{n-1}`. With a
/// labeling, vertices carry their 0/1 label and arcs their induced label.
pub fn to_dot(d: &Digraph, labeling: Option<&VertexLabeling>) -> Result<String, DigraphError> {
    let arc_labels = labeling.map(|f| induce_arc_labels(d, f)).transpose()?;
    let mut out = String::from("digraph D {\n");
    for v in 0..d.vertex_count() {
        match labeling {
            Some(f) => writeln!(out, "  v{v} [label=\"{}\"];", f.get(v)),
            None => writeln!(out, "  v{v};"),
        }
        .expect("writing to a string");
    }
    for (i, (u, v)) in d.arcs().iter().enumerate() {
        match &arc_labels {
            Some(g) => writeln!(out, "  v{u} -> v{v} [label=\"{}\"];", g[i]),
            None => writeln!(out, "  v{u} -> v{v};"),
        }
        .expect("writing to a string");
    }
    out.push_str("}\n");
    Ok(out)
}

fn vertex_id(token: &str, line: usize) -> Result<usize, ParseError> {
    token
        .strip_prefix('v')
        .and_then(|rest| rest.parse().ok())
        .ok_or_else(|| ParseError {
            line,
            message: format!("expected a vertex like v3, found {token:?}"),
        })
}

fn label_attr(stmt: &str) -> Option<&str> {
    let start = stmt.find("label=\"")? + "label=\"".len();
    let len = stmt[start..].find('"')?;
    Some(&stmt[start..start + len])
}

/// Reads back output of [`to_dot`]: the digraph, plus the vertex labeling
/// when every vertex carries one.
pub fn parse_dot(text: &str) -> Result<(Digraph, Option<VertexLabeling>), ParseError> {
    let mut vertices: Vec<(usize, Option<u8>)> = Vec::new();
    let mut arcs = Vec::new();
    let mut last = 1;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last = line;
        let stmt = raw.trim().trim_end_matches(';').trim();
        if stmt.is_empty() || stmt.starts_with("//") || stmt.starts_with("digraph") || stmt == "}" {
            continue;
        }
        let head = stmt.split('[').next().unwrap_or(stmt).trim();
        if let Some((from, to)) = head.split_once("->") {
            arcs.push((vertex_id(from.trim(), line)?, vertex_id(to.trim(), line)?));
        } else {
            let v = vertex_id(head, line)?;
            let label = match label_attr(stmt) {
                Some("0") => Some(0),
                Some("1") => Some(1),
                Some(other) => {
                    return Err(ParseError {
                        line,
                        message: format!("vertex label must be 0 or 1, found {other:?}"),
                    })
                }
                None => None,
            };
            vertices.push((v, label));
        }
    }
    vertices.sort_by_key(|&(v, _)| v);
    if vertices.iter().enumerate().any(|(i, &(v, _))| i != v) {
        return Err(ParseError {
            line: last,
            message: "vertices must be declared exactly once as v0..v{n-1}".into(),
        });
    }
    let d = Digraph::new(vertices.len(), arcs).map_err(|e| ParseError {
        line: last,
        message: e.to_string(),
    })?;
    let labels: Option<Vec<u8>> = vertices.iter().map(|&(_, l)| l).collect();
    let labeling = labels
        .filter(|l| !l.is_empty())
        .map(|l| VertexLabeling::new(l).expect("binary"));
    Ok((d, labeling))
}
