//! Text formats.
//!
//! Graphs use the DIMACS edge format: `p edge <n> <m>` followed by `m` lines
//! `e <u> <v>` with 1-indexed vertices. Hypergraphs use `h <n> <m>` followed by
//! `m` lines of space-separated 1-indexed vertex ids (a blank line is an empty
//! edge). Lines starting with `c` are comments in both formats.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError, Hypergraph};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing header line")]
    MissingHeader,
    #[error("header declares {declared} edges, found {found}")]
    EdgeCount { declared: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, msg: msg.into() }
}

fn parse_vertex(tok: &str, n: usize, line: usize) -> Result<usize, ParseError> {
    let v: usize = tok.parse().map_err(|_| syntax(line, format!("bad vertex id `{tok}`")))?;
    if v == 0 || v > n {
        return Err(syntax(line, format!("vertex {v} outside 1..={n}")));
    }
    Ok(v - 1)
}

fn parse_count(tok: Option<&str>, line: usize, what: &str) -> Result<usize, ParseError> {
    let tok = tok.ok_or_else(|| syntax(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| syntax(line, format!("bad {what} `{tok}`")))
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let mut toks = raw.split_whitespace();
        match toks.next() {
            None | Some("c") => continue,
            Some("p") => {
                if header.is_some() {
                    return Err(syntax(line, "duplicate header"));
                }
                if toks.next() != Some("edge") {
                    return Err(syntax(line, "expected `p edge <n> <m>`"));
                }
                let n = parse_count(toks.next(), line, "vertex count")?;
                let m = parse_count(toks.next(), line, "edge count")?;
                header = Some((n, m));
            }
            Some("e") => {
                let (n, _) = header.ok_or_else(|| syntax(line, "edge before header"))?;
                let u = parse_vertex(toks.next().ok_or_else(|| syntax(line, "missing endpoint"))?, n, line)?;
                let v = parse_vertex(toks.next().ok_or_else(|| syntax(line, "missing endpoint"))?, n, line)?;
                if u == v {
                    return Err(syntax(line, format!("self-loop at vertex {}", u + 1)));
                }
                edges.push((u, v));
            }
            Some(other) => return Err(syntax(line, format!("unknown line type `{other}`"))),
        }
        if toks.next().is_some() {
            return Err(syntax(line, "trailing tokens"));
        }
    }
    let (n, m) = header.ok_or(ParseError::MissingHeader)?;
    if edges.len() != m {
        return Err(ParseError::EdgeCount { declared: m, found: edges.len() });
    }
    Ok(Graph::new(n, edges)?)
}

pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph, ParseError> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim_start().starts_with('c'));
    let (n, m) = loop {
        let (idx, raw) = lines.next().ok_or(ParseError::MissingHeader)?;
        let mut toks = raw.split_whitespace();
        match toks.next() {
            None => continue,
            Some("h") => {
                let n = parse_count(toks.next(), idx + 1, "vertex count")?;
                let m = parse_count(toks.next(), idx + 1, "edge count")?;
                if toks.next().is_some() {
                    return Err(syntax(idx + 1, "trailing tokens"));
                }
                break (n, m);
            }
            Some(_) => return Err(syntax(idx + 1, "expected `h <n> <m>`")),
        }
    };
    let mut edges = Vec::with_capacity(m);
    for (idx, raw) in lines.by_ref().take(m) {
        let e = raw.split_whitespace().map(|t| parse_vertex(t, n, idx + 1)).collect::<Result<Vec<_>, _>>()?;
        edges.push(e);
    }
    if edges.len() != m {
        return Err(ParseError::EdgeCount { declared: m, found: edges.len() });
    }
    if let Some((idx, _)) = lines.find(|(_, l)| !l.trim().is_empty()) {
        return Err(syntax(idx + 1, "content after the declared edges"));
    }
    Ok(Hypergraph::new(n, edges)?)
}

pub fn serialize_hypergraph(h: &Hypergraph) -> String {
    let mut out = format!("h {} {}\n", h.n(), h.edge_count());
    for e in h.edges() {
        let line: Vec<String> = e.iter().map(|v| (v + 1).to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}
