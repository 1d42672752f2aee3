//! Plain-text edge-list format.
//!
//! ```text
//! # comment lines start with '#'
//! n m k
//! u v
//! ...
//! ```
//!
//! Each of the `m` edge lines has `0 <= u < v < n`. A `k` of `-1` means no
//! parameter is attached.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeList {
    pub graph: Graph,
    pub k: Option<usize>,
    /// Comment lines without the leading `#` and one optional space.
    pub comments: Vec<String>,
}

pub fn parse_edge_list(text: &str) -> Result<EdgeList> {
    let mut comments = Vec::new();
    let mut header: Option<(usize, usize, Option<usize>)> = None;
    let mut builder = GraphBuilder::new(0);
    let mut seen = std::collections::HashSet::new();
    let mut edges = 0usize;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if let Some(c) = line.strip_prefix('#') {
            comments.push(c.strip_prefix(' ').unwrap_or(c).to_string());
            continue;
        }
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let err = |msg: String| Error::Parse { line: line_no, msg };
        match header {
            None => {
                if fields.len() != 3 {
                    return Err(err(format!("expected header `n m k`, found `{line}`")));
                }
                let n = parse_count(fields[0]).map_err(err)?;
                let m = parse_count(fields[1]).map_err(err)?;
                let k = match fields[2].parse::<i64>() {
                    Ok(-1) => None,
                    Ok(k) if k >= 0 => Some(k as usize),
                    _ => return Err(err(format!("invalid parameter `{}`", fields[2]))),
                };
                header = Some((n, m, k));
                builder = GraphBuilder::new(n);
            }
            Some((n, m, _)) => {
                if fields.len() != 2 {
                    return Err(err(format!("expected edge `u v`, found `{line}`")));
                }
                let u = parse_count(fields[0]).map_err(err)?;
                let v = parse_count(fields[1]).map_err(err)?;
                if !(u < v && v < n) {
                    return Err(err(format!("edge `{u} {v}` violates 0 <= u < v < {n}")));
                }
                if !seen.insert((u, v)) {
                    return Err(err(format!("duplicate edge `{u} {v}`")));
                }
                edges += 1;
                if edges > m {
                    return Err(err(format!("more than the declared {m} edges")));
                }
                builder.add_edge(u, v)?;
            }
        }
    }

    let (_, m, k) = header.ok_or(Error::Parse {
        line: 0,
        msg: "missing header line".into(),
    })?;
    if edges != m {
        return Err(Error::Parse {
            line: 0,
            msg: format!("declared {m} edges but found {edges}"),
        });
    }
    Ok(EdgeList {
        graph: builder.build(),
        k,
        comments,
    })
}

fn parse_count(s: &str) -> std::result::Result<usize, String> {
    s.parse::<usize>()
        .map_err(|_| format!("expected a non-negative integer, found `{s}`"))
}

/// Renders `g` with the given comments (each emitted as a `# ` line before
/// the header).
pub fn write_edge_list(g: &Graph, k: Option<usize>, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    let k_field = k.map_or_else(|| "-1".to_string(), |k| k.to_string());
    let _ = writeln!(out, "{} {} {}", g.n(), g.m(), k_field);
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
