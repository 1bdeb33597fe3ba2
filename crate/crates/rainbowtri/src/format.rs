//! Plain-text graph files.
//!
//! A file is a header line followed by one line per edge or arc. Blank
//! lines and lines whose first non-space character is `#` are ignored
//! everywhere.
//!
//! ```text
//! ecg <n> <m>      # edge-colored graph on vertices 0..n with m edges
//! <u> <v> <color>  # one per edge, u < v
//!
//! dig <n> <m>      # oriented graph on vertices 0..n with m arcs
//! <u> <v>          # one per arc, tail first
//! ```
//!
//! Parsing is strict: the declared count must match the body, endpoints
//! must be in range, and repeated edges, repeated arcs, loops, and arc
//! pairs in both directions are rejected. Every error names the 1-based
//! line it was found on. [`parse`] inverts [`serialize`] exactly.

use std::collections::BTreeSet;

use crate::colored_graph::ColoredGraph;
use crate::oriented_graph::OrientedGraph;
use crate::{Color, GraphKind};

/// A graph read from text, of whichever kind the header declared.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParsedGraph {
    Colored(ColoredGraph),
    Oriented(OrientedGraph),
}

impl ParsedGraph {
    pub fn kind(&self) -> GraphKind {
        match self {
            ParsedGraph::Colored(_) => GraphKind::Colored,
            ParsedGraph::Oriented(_) => GraphKind::Oriented,
        }
    }
}

/// A rejected input, pointing at the offending line.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    /// 1-based line number in the original text.
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

fn parse_number<T: std::str::FromStr>(token: &str, what: &str, line: usize) -> Result<T, ParseError> {
    token
        .parse()
        .map_err(|_| err(line, format!("invalid {what} `{token}`")))
}

// (1-based line number, whitespace-split tokens) for every line that is
// neither blank nor a comment
fn significant_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(idx, raw)| {
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            None
        } else {
            Some((idx + 1, trimmed.split_whitespace().collect()))
        }
    })
}

/// Reads one graph of either kind from `text`.
pub fn parse(text: &str) -> Result<ParsedGraph, ParseError> {
    let mut lines = significant_lines(text);
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| err(1, "empty input: expected a header `ecg <n> <m>` or `dig <n> <m>`"))?;
    if header.len() != 3 {
        return Err(err(
            header_line,
            format!("header must be `<kind> <n> <m>`, got {} fields", header.len()),
        ));
    }
    let n: usize = parse_number(header[1], "vertex count", header_line)?;
    let m: usize = parse_number(header[2], "edge count", header_line)?;
    match header[0] {
        "ecg" => parse_colored_body(n, m, header_line, lines).map(ParsedGraph::Colored),
        "dig" => parse_oriented_body(n, m, header_line, lines).map(ParsedGraph::Oriented),
        other => Err(err(
            header_line,
            format!("unknown graph kind `{other}`; expected `ecg` or `dig`"),
        )),
    }
}

fn check_endpoint(v: usize, n: usize, line: usize) -> Result<(), ParseError> {
    if v >= n {
        return Err(err(
            line,
            format!("vertex {v} out of range for a graph on {n} vertices"),
        ));
    }
    Ok(())
}

fn parse_colored_body<'a>(
    n: usize,
    m: usize,
    header_line: usize,
    lines: impl Iterator<Item = (usize, Vec<&'a str>)>,
) -> Result<ColoredGraph, ParseError> {
    let mut edges: Vec<(usize, usize, Color)> = Vec::with_capacity(m);
    let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
    for (line, tokens) in lines {
        if edges.len() == m {
            return Err(err(
                line,
                format!("unexpected extra line after the declared {m} edges"),
            ));
        }
        if tokens.len() != 3 {
            return Err(err(
                line,
                format!("edge line must be `<u> <v> <color>`, got {} fields", tokens.len()),
            ));
        }
        let u: usize = parse_number(tokens[0], "vertex", line)?;
        let v: usize = parse_number(tokens[1], "vertex", line)?;
        let color: Color = parse_number(tokens[2], "color", line)?;
        check_endpoint(u, n, line)?;
        check_endpoint(v, n, line)?;
        if u == v {
            return Err(err(line, format!("self-loop at vertex {u}")));
        }
        if u > v {
            return Err(err(
                line,
                format!("edge endpoints must be listed low to high, got {u} {v}"),
            ));
        }
        if !seen.insert((u, v)) {
            return Err(err(line, format!("duplicate edge {{{u}, {v}}}")));
        }
        edges.push((u, v, color));
    }
    if edges.len() != m {
        return Err(err(
            header_line,
            format!("header declares {m} edges but {} edge lines follow", edges.len()),
        ));
    }
    ColoredGraph::new(n, edges).map_err(|e| err(header_line, e.to_string()))
}

fn parse_oriented_body<'a>(
    n: usize,
    m: usize,
    header_line: usize,
    lines: impl Iterator<Item = (usize, Vec<&'a str>)>,
) -> Result<OrientedGraph, ParseError> {
    let mut arcs: Vec<(usize, usize)> = Vec::with_capacity(m);
    let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
    for (line, tokens) in lines {
        if arcs.len() == m {
            return Err(err(
                line,
                format!("unexpected extra line after the declared {m} arcs"),
            ));
        }
        if tokens.len() != 2 {
            return Err(err(
                line,
                format!("arc line must be `<tail> <head>`, got {} fields", tokens.len()),
            ));
        }
        let u: usize = parse_number(tokens[0], "vertex", line)?;
        let v: usize = parse_number(tokens[1], "vertex", line)?;
        check_endpoint(u, n, line)?;
        check_endpoint(v, n, line)?;
        if u == v {
            return Err(err(line, format!("self-loop at vertex {u}")));
        }
        if seen.contains(&(v, u)) {
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            return Err(err(line, format!("arcs in both directions between {a} and {b}")));
        }
        if !seen.insert((u, v)) {
            return Err(err(line, format!("duplicate arc ({u}, {v})")));
        }
        arcs.push((u, v));
    }
    if arcs.len() != m {
        return Err(err(
            header_line,
            format!("header declares {m} arcs but {} arc lines follow", arcs.len()),
        ));
    }
    OrientedGraph::new(n, arcs).map_err(|e| err(header_line, e.to_string()))
}

/// Writes `g` in the `ecg` format, edges sorted low endpoint first.
pub fn serialize_colored(g: &ColoredGraph) -> String {
    let mut out = format!("ecg {} {}\n", g.vertex_count(), g.edge_count());
    for (u, v, color) in g.edges() {
        out.push_str(&format!("{u} {v} {color}\n"));
    }
    out
}

/// Writes `d` in the `dig` format, arcs in lexicographic order.
pub fn serialize_oriented(d: &OrientedGraph) -> String {
    let mut out = format!("dig {} {}\n", d.vertex_count(), d.arc_count());
    for (u, v) in d.arcs() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Writes either kind in its own format.
pub fn serialize(g: &ParsedGraph) -> String {
    match g {
        ParsedGraph::Colored(g) => serialize_colored(g),
        ParsedGraph::Oriented(d) => serialize_oriented(d),
    }
}
