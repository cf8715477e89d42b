//! The text instance format.
//!
//! ```text
//! # optional comments
//! n m
//! 1 2 3
//! 2 4 w=5
//! ```
//!
//! The first data line holds the vertex and edge counts; vertices are
//! `1..=n`. Each further data line lists one edge's vertices, optionally
//! followed by a `w=<int>` weight. `#` starts a comment line.

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::set::IdSet;

/// A parsed instance: the hypergraph plus its per-edge weights when the file
/// carried any (missing entries default to 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub hypergraph: Hypergraph,
    pub edge_weights: Option<Vec<u64>>,
}

pub fn parse(text: &str) -> Result<Instance> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'));

    let (lineno, header) = lines
        .next()
        .ok_or_else(|| Error::Parse("missing header line".into()))?;
    let mut parts = header.split_whitespace();
    let n: usize = parse_int(parts.next(), lineno, "vertex count")?;
    let m: usize = parse_int(parts.next(), lineno, "edge count")?;
    if parts.next().is_some() {
        return Err(Error::Parse(format!(
            "line {lineno}: expected exactly `n m`"
        )));
    }
    if n == 0 || n >= IdSet::CAPACITY {
        return Err(Error::Parse(format!(
            "line {lineno}: vertex count {n} outside 1..{}",
            IdSet::CAPACITY
        )));
    }

    let mut edges: Vec<IdSet> = Vec::with_capacity(m);
    let mut weights: Vec<u64> = Vec::with_capacity(m);
    let mut any_weight = false;
    for _ in 0..m {
        let (lineno, line) = lines
            .next()
            .ok_or_else(|| Error::Parse(format!("expected {m} edge lines")))?;
        let mut edge = IdSet::EMPTY;
        let mut weight = 1u64;
        for token in line.split_whitespace() {
            if let Some(value) = token.strip_prefix("w=") {
                weight = value
                    .parse()
                    .map_err(|_| Error::Parse(format!("line {lineno}: bad weight `{token}`")))?;
                any_weight = true;
            } else {
                let v: usize = token
                    .parse()
                    .map_err(|_| Error::Parse(format!("line {lineno}: bad vertex id `{token}`")))?;
                if v == 0 || v > n {
                    return Err(Error::Parse(format!(
                        "line {lineno}: vertex {v} outside 1..={n}"
                    )));
                }
                edge.insert(v);
            }
        }
        if edge.is_empty() {
            return Err(Error::Parse(format!("line {lineno}: empty edge")));
        }
        edges.push(edge);
        weights.push(weight);
    }
    if let Some((lineno, _)) = lines.next() {
        return Err(Error::Parse(format!(
            "line {lineno}: trailing content after {m} edges"
        )));
    }

    let vertices: IdSet = (1..=n).collect();
    let hypergraph = Hypergraph::from_parts(vertices, edges, false)?;
    Ok(Instance {
        hypergraph,
        edge_weights: if any_weight { Some(weights) } else { None },
    })
}

fn parse_int(token: Option<&str>, lineno: usize, what: &str) -> Result<usize> {
    token
        .ok_or_else(|| Error::Parse(format!("line {lineno}: missing {what}")))?
        .parse()
        .map_err(|_| Error::Parse(format!("line {lineno}: bad {what}")))
}

/// Canonical text rendering; vertices are relabeled to `1..=n` in ascending
/// id order (the identity for generator output).
pub fn render(h: &Hypergraph, edge_weights: Option<&[u64]>) -> String {
    let ids = h.vertices().to_vec();
    let position = |v: usize| ids.iter().position(|&u| u == v).unwrap() + 1;
    let mut out = format!("{} {}\n", ids.len(), h.edge_count());
    for (i, edge) in h.edges().iter().enumerate() {
        let labels: Vec<String> = edge.iter().map(|v| position(v).to_string()).collect();
        out.push_str(&labels.join(" "));
        if let Some(weights) = edge_weights {
            out.push_str(&format!(" w={}", weights[i]));
        }
        out.push('\n');
    }
    out
}
