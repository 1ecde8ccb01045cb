//! Text formats: edge-list graph files, generator expressions, and the
//! product corpus file.
//!
//! Edge-list format: the first significant line is `n m`, followed by `m`
//! lines `u v` with 0-based endpoints. Lines starting with `#` and blank
//! lines are ignored. Generator expressions are accepted wherever a file
//! path is: `P<n>`, `C<n>`, `K<n>`, `S<k>` (star with `k` leaves), and
//! `LEX(<expr>,<expr>)`.

use crate::error::{Error, Result};
use crate::graph::{lex_product, Graph};
use std::path::Path;

fn format_err(line: usize, message: impl Into<String>) -> Error {
    Error::Format {
        line,
        message: message.into(),
    }
}

/// Parses the `n m` / `u v` edge-list format.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut significant = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line_no, header) = significant
        .next()
        .ok_or_else(|| format_err(0, "missing `n m` header line"))?;
    let mut parts = header.split_whitespace();
    let n: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| format_err(line_no, "header must be `n m`"))?;
    let m: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| format_err(line_no, "header must be `n m`"))?;
    if parts.next().is_some() {
        return Err(format_err(line_no, "header must be exactly `n m`"));
    }

    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (line_no, line) = significant
            .next()
            .ok_or_else(|| format_err(0, format!("expected {m} edge lines")))?;
        let mut parts = line.split_whitespace();
        let u: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| format_err(line_no, "edge line must be `u v`"))?;
        let v: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| format_err(line_no, "edge line must be `u v`"))?;
        if parts.next().is_some() {
            return Err(format_err(line_no, "edge line must be exactly `u v`"));
        }
        edges.push((u, v));
    }
    if let Some((line_no, _)) = significant.next() {
        return Err(format_err(line_no, "trailing content after the last edge"));
    }
    Graph::from_edge_list(n, &edges)
}

/// Renders a graph in the edge-list format, edges ascending.
pub fn emit_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.order(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Does this token look like a generator expression rather than a path?
pub fn is_expression(token: &str) -> bool {
    if token.starts_with("LEX(") {
        return true;
    }
    let mut chars = token.chars();
    matches!(chars.next(), Some('P' | 'C' | 'K' | 'S'))
        && token.len() > 1
        && chars.all(|c| c.is_ascii_digit())
}

/// Parses `P<n>`, `C<n>`, `K<n>`, `S<k>`, or `LEX(<expr>,<expr>)`.
pub fn parse_expression(expr: &str) -> Result<Graph> {
    let unknown = || Error::UnknownExpression(expr.to_string());
    if let Some(inner) = expr.strip_prefix("LEX(").and_then(|r| r.strip_suffix(')')) {
        // split at the comma that sits at nesting depth zero
        let mut depth = 0usize;
        let mut split = None;
        for (i, c) in inner.char_indices() {
            match c {
                '(' => depth += 1,
                ')' => depth = depth.checked_sub(1).ok_or_else(unknown)?,
                ',' if depth == 0 => {
                    if split.is_some() {
                        return Err(unknown());
                    }
                    split = Some(i);
                }
                _ => {}
            }
        }
        let at = split.ok_or_else(unknown)?;
        let g = parse_expression(inner[..at].trim())?;
        let h = parse_expression(inner[at + 1..].trim())?;
        return lex_product(&g, &h);
    }
    if !is_expression(expr) {
        return Err(unknown());
    }
    let n: usize = expr[1..].parse().map_err(|_| unknown())?;
    match expr.as_bytes()[0] {
        b'P' => Graph::path(n),
        b'C' => Graph::cycle(n),
        b'K' => Graph::complete(n),
        b'S' => Graph::star(n),
        _ => Err(unknown()),
    }
}

/// Loads a graph from a generator expression or an edge-list file.
/// Relative paths resolve against `base`.
pub fn load_graph(token: &str, base: &Path) -> Result<Graph> {
    if is_expression(token) {
        parse_expression(token)
    } else {
        let path = if Path::new(token).is_absolute() {
            Path::new(token).to_path_buf()
        } else {
            base.join(token)
        };
        let text = std::fs::read_to_string(&path)?;
        let stem = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| token.to_string());
        Ok(parse_edge_list(&text)?.named(stem))
    }
}

/// Expected outcome of one corpus product case.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expected {
    /// Pinned minimum identifying code size of the product.
    Value(usize),
    /// `?`: derive the value by oracle and record it.
    Oracle,
    /// `x`: the product is expected to be non-identifiable.
    NotIdentifiable,
}

#[derive(Clone, Debug)]
pub struct CorpusCase {
    pub g_spec: String,
    pub h_spec: String,
    pub expected: Expected,
}

/// Reads a corpus file: one `<G> <H> <expected>` case per line, where
/// expected is a number, `?` (derive by oracle and record), or `x` (the
/// product is not identifiable). `#` comments and blank lines are ignored.
pub fn load_corpus(path: &Path) -> Result<Vec<CorpusCase>> {
    let text = std::fs::read_to_string(path)?;
    let mut cases = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let (g_spec, h_spec, expected) = match (parts.next(), parts.next(), parts.next(), parts.next()) {
            (Some(g), Some(h), Some(e), None) => (g, h, e),
            _ => return Err(format_err(i + 1, "corpus line must be `<G> <H> <expected>`")),
        };
        let expected = match expected {
            "?" => Expected::Oracle,
            "x" => Expected::NotIdentifiable,
            v => Expected::Value(
                v.parse()
                    .map_err(|_| format_err(i + 1, format!("bad expected value `{v}`")))?,
            ),
        };
        cases.push(CorpusCase {
            g_spec: g_spec.to_string(),
            h_spec: h_spec.to_string(),
            expected,
        });
    }
    Ok(cases)
}
