//! graph6, DOT and edge-list JSON.
//!
//! graph6 follows the usual ASCII encoding: a size prefix `N(n)` followed by
//! the upper triangle of the adjacency matrix in column order
//! (`(0,1), (0,2), (1,2), (0,3), ...`), packed six bits per byte, most
//! significant bit first, each byte offset by 63.

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

fn push_size(out: &mut String, n: usize) {
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::new();
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push(((acc << (6 - nbits)) + 63) as char);
    }
    out
}

pub fn from_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let sextet = |i: usize| -> Result<usize> {
        match bytes.get(i) {
            Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as usize),
            Some(&b) => Err(Error::Parse(format!("invalid graph6 byte {b:#04x} at offset {i}"))),
            None => Err(Error::Parse("truncated graph6 string".into())),
        }
    };
    let (n, mut pos) = if bytes.first() != Some(&b'~') {
        (sextet(0)?, 1)
    } else if bytes.get(1) != Some(&b'~') {
        ((1..4).try_fold(0, |acc, i| Ok::<_, Error>(acc << 6 | sextet(i)?))?, 4)
    } else {
        ((2..8).try_fold(0, |acc, i| Ok::<_, Error>(acc << 6 | sextet(i)?))?, 8)
    };

    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pos + pairs.div_ceil(6);
    if bytes.len() != expected {
        return Err(Error::Parse(format!(
            "graph6 body for {n} vertices needs {expected} bytes, got {}",
            bytes.len()
        )));
    }
    let mut g = Graph::empty(n);
    let mut bit = 0;
    let mut cur = 0;
    for j in 1..n {
        for i in 0..j {
            if bit == 0 {
                cur = sextet(pos)?;
                pos += 1;
                bit = 6;
            }
            bit -= 1;
            if cur >> bit & 1 == 1 {
                g.link(i, j);
            }
        }
    }
    if bit > 0 && cur & ((1 << bit) - 1) != 0 {
        return Err(Error::Parse("nonzero graph6 padding bits".into()));
    }
    Ok(g)
}

pub fn to_dot(g: &Graph, name: &str) -> String {
    let mut out = format!("graph {name} {{\n");
    for v in 0..g.order() {
        out.push_str(&format!("  {v};\n"));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

/// `{"n": int, "edges": [[u, v], ...]}` with `u < v`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeList {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for EdgeList {
    fn from(g: &Graph) -> Self {
        EdgeList {
            n: g.order(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl TryFrom<EdgeList> for Graph {
    type Error = Error;

    fn try_from(e: EdgeList) -> Result<Graph> {
        Graph::from_edges(e.n, e.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

pub fn to_json(g: &Graph) -> String {
    serde_json::to_string(&EdgeList::from(g)).expect("edge lists always serialize")
}

pub fn from_json(text: &str) -> Result<Graph> {
    let e: EdgeList = serde_json::from_str(text)?;
    Graph::try_from(e)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    Dot,
    Json,
}

impl std::str::FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            "dot" => Ok(GraphFormat::Dot),
            "json" => Ok(GraphFormat::Json),
            other => Err(Error::Parse(format!("unknown graph format {other:?}"))),
        }
    }
}

pub fn render(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Graph6 => to_graph6(g) + "\n",
        GraphFormat::Dot => to_dot(g, "G"),
        GraphFormat::Json => to_json(g) + "\n",
    }
}

/// Reads edge-list JSON when the text starts with `{`, graph6 otherwise.
pub fn parse_any(text: &str) -> Result<Graph> {
    if text.trim_start().starts_with('{') {
        from_json(text)
    } else {
        from_graph6(text.lines().next().unwrap_or(""))
    }
}
