//! Plain-text edge lists.
//!
//! ```text
//! # comment
//! # provenance: {"family":"petersen"}
//! p 10 15
//! 0 1
//! 0 4
//! ```
//!
//! Comment lines start with `#`; the optional header `p N M` fixes the vertex
//! count and the number of edge lines. Without a header the vertex count is
//! one more than the largest id. The writer always emits the header and the
//! edges `u < v` in lexicographic order.

use std::fmt::Write as _;

use cyclic_core::Graph;
use serde_json::Value;
use thiserror::Error;

const PROVENANCE_PREFIX: &str = "provenance:";

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("header announced {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] cyclic_core::Error),
}

/// A parsed edge list.
#[derive(Debug, Clone)]
pub struct EdgeListFile {
    pub graph: Graph,
    /// JSON object from a `# provenance: {...}` comment, if any.
    pub provenance: Option<Value>,
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        msg: msg.into(),
    }
}

fn parse_id(token: &str, line: usize) -> Result<usize, ParseError> {
    token
        .parse()
        .map_err(|_| syntax(line, format!("expected a base-10 id, got {token:?}")))
}

pub fn parse(text: &str) -> Result<EdgeListFile, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut provenance = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(json) = comment.trim().strip_prefix(PROVENANCE_PREFIX) {
                provenance = serde_json::from_str(json.trim()).ok();
            }
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            ["p", n, m] => {
                if header.is_some() || !edges.is_empty() {
                    return Err(syntax(line_no, "header must precede all edges"));
                }
                header = Some((parse_id(n, line_no)?, parse_id(m, line_no)?));
            }
            [u, v] => edges.push((parse_id(u, line_no)?, parse_id(v, line_no)?)),
            _ => {
                return Err(syntax(
                    line_no,
                    format!("expected \"u v\" or \"p N M\", got {line:?}"),
                ))
            }
        }
    }
    let n = match header {
        Some((n, m)) => {
            if m != edges.len() {
                return Err(ParseError::EdgeCount {
                    expected: m,
                    found: edges.len(),
                });
            }
            n
        }
        None => edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0),
    };
    Ok(EdgeListFile {
        graph: Graph::from_edge_list(n, &edges)?,
        provenance,
    })
}

/// Canonical text form of `g`.
pub fn write(g: &Graph, provenance: Option<&Value>) -> String {
    let mut out = String::new();
    if let Some(p) = provenance {
        let _ = writeln!(out, "# {PROVENANCE_PREFIX} {p}");
    }
    let _ = writeln!(out, "p {} {}", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
