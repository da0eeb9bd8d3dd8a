//! Edge-list text format.
//!
//! ```text
//! # optional comments
//! vertices 4
//! 0 1
//! 1 2
//! ```
//!
//! Vertices are 0-indexed. Self-loops and repeated edges (in either
//! orientation) are rejected with the offending line number.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut vertex_count: Option<usize> = None;
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        let mut fields = line.split_whitespace();
        let first = fields.next().unwrap();
        let Some(n) = vertex_count else {
            if first != "vertices" {
                return Err(err(format!(
                    "expected `vertices <N>` header, found `{line}`"
                )));
            }
            let n: usize = fields
                .next()
                .ok_or_else(|| err("missing vertex count".into()))?
                .parse()
                .map_err(|e| err(format!("bad vertex count: {e}")))?;
            if n == 0 {
                return Err(err("vertex count must be positive".into()));
            }
            if fields.next().is_some() {
                return Err(err("trailing fields after vertex count".into()));
            }
            vertex_count = Some(n);
            continue;
        };
        let parse = |s: Option<&str>| -> Result<usize> {
            s.ok_or_else(|| err("expected two vertex indices".into()))?
                .parse()
                .map_err(|e| err(format!("bad vertex index: {e}")))
        };
        let u = parse(Some(first))?;
        let v = parse(fields.next())?;
        if fields.next().is_some() {
            return Err(err("trailing fields after edge".into()));
        }
        if u >= n || v >= n {
            return Err(err(format!("edge {u} {v} outside 0..{n}")));
        }
        if u == v {
            return Err(err(format!("self-loop at vertex {u}")));
        }
        let key = (u.min(v), u.max(v));
        if !seen.insert(key) {
            return Err(err(format!("duplicate edge {} {}", key.0, key.1)));
        }
        edges.push(key);
    }
    let n = vertex_count.ok_or(Error::Parse {
        line: text.lines().count().max(1),
        message: "missing `vertices <N>` header".into(),
    })?;
    Graph::from_edges(n, &edges)
}

pub fn format_graph(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "vertices {}", g.vertex_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn load_graph(path: impl AsRef<Path>) -> Result<Graph> {
    parse_graph(&fs::read_to_string(path)?)
}

pub fn save_graph(g: &Graph, path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, format_graph(g))?;
    Ok(())
}
