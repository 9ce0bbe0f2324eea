//! Line-oriented text format for digraphs and undirected graphs.
//!
//! ```text
//! digraph            # or `ugraph`
//! v a 0              # vertex `a` with color 0
//! v b 1
//! e a b              # edge a -> b (unordered for ugraph)
//! ```
//!
//! `#` starts a comment and blank lines are skipped. Writing is canonical:
//! vertices in id order, then edges in lexicographic order.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::digraph::{Color, Digraph, UGraph};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Graph {
    Directed(Digraph),
    Undirected(UGraph),
}

impl Graph {
    pub fn underlying(&self) -> UGraph {
        match self {
            Graph::Directed(g) => g.underlying(),
            Graph::Undirected(g) => g.clone(),
        }
    }
}

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Parses a DGF document. Errors carry the 1-based line number.
pub fn parse(text: &str) -> Result<Graph> {
    let mut directed = None;
    let mut names: Vec<String> = Vec::new();
    let mut colors: Vec<Color> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut edge_lines: Vec<usize> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if directed.is_none() {
            directed = match tokens.as_slice() {
                ["digraph"] => Some(true),
                ["ugraph"] => Some(false),
                _ => return Err(err(line_no, "expected header `digraph` or `ugraph`")),
            };
            continue;
        }
        match tokens.as_slice() {
            ["v", name, color] => {
                if index.contains_key(*name) {
                    return Err(err(line_no, format!("vertex {name:?} declared twice")));
                }
                let color = match *color {
                    "0" => Color::Zero,
                    "1" => Color::One,
                    other => return Err(err(line_no, format!("invalid color {other:?}"))),
                };
                index.insert(name.to_string(), names.len());
                names.push(name.to_string());
                colors.push(color);
            }
            ["e", from, to] => {
                let lookup = |name: &str| {
                    index
                        .get(name)
                        .copied()
                        .ok_or_else(|| err(line_no, format!("undeclared vertex {name:?}")))
                };
                edges.push((lookup(from)?, lookup(to)?));
                edge_lines.push(line_no);
            }
            ["v", ..] => return Err(err(line_no, "expected `v <name> <0|1>`")),
            ["e", ..] => return Err(err(line_no, "expected `e <from> <to>`")),
            [other, ..] => return Err(err(line_no, format!("unknown directive {other:?}"))),
            [] => unreachable!("blank lines are skipped"),
        }
    }

    let Some(directed) = directed else {
        return Err(err(1, "empty document"));
    };
    // Rebuild edge by edge so that a failure can name its line.
    let attach = |e: Error| -> Error {
        let pos = match &e {
            Error::LoopEdge(u) => edges.iter().position(|&(a, b)| a == *u && b == *u),
            Error::MonochromaticEdge(u, v) | Error::DuplicateEdge(u, v) => {
                let hits: Vec<usize> = edges
                    .iter()
                    .enumerate()
                    .filter(|(_, &(a, b))| {
                        (a, b) == (*u, *v) || (!directed && (b, a) == (*u, *v))
                    })
                    .map(|(i, _)| i)
                    .collect();
                match e {
                    Error::DuplicateEdge(..) => hits.get(1).copied(),
                    _ => hits.first().copied(),
                }
            }
            _ => None,
        };
        match pos {
            Some(p) => err(edge_lines[p], describe(&e, &names)),
            None => e,
        }
    };
    if directed {
        Digraph::with_names(names.clone(), &colors, &edges)
            .map(Graph::Directed)
            .map_err(attach)
    } else {
        UGraph::with_names(names.clone(), &colors, &edges)
            .map(Graph::Undirected)
            .map_err(attach)
    }
}

fn describe(e: &Error, names: &[String]) -> String {
    match e {
        Error::LoopEdge(u) => format!("loop edge at {}", names[*u]),
        Error::MonochromaticEdge(u, v) => {
            format!("edge {} {} joins two vertices of the same color", names[*u], names[*v])
        }
        Error::DuplicateEdge(u, v) => format!("duplicate edge {} {}", names[*u], names[*v]),
        other => other.to_string(),
    }
}

pub fn parse_digraph(text: &str) -> Result<Digraph> {
    match parse(text)? {
        Graph::Directed(g) => Ok(g),
        Graph::Undirected(_) => Err(err(1, "expected a `digraph` document")),
    }
}

pub fn write_digraph(g: &Digraph) -> String {
    let mut s = String::from("digraph\n");
    for v in 0..g.n() {
        let _ = writeln!(s, "v {} {}", g.name(v), g.color(v).index());
    }
    for (u, v) in g.edges() {
        let _ = writeln!(s, "e {} {}", g.name(u), g.name(v));
    }
    s
}

pub fn write_ugraph(g: &UGraph) -> String {
    let mut s = String::from("ugraph\n");
    for v in 0..g.n() {
        let _ = writeln!(s, "v {} {}", g.name(v), g.color(v).index());
    }
    for (u, v) in g.edges() {
        let _ = writeln!(s, "e {} {}", g.name(u), g.name(v));
    }
    s
}

pub fn write(g: &Graph) -> String {
    match g {
        Graph::Directed(d) => write_digraph(d),
        Graph::Undirected(u) => write_ugraph(u),
    }
}
