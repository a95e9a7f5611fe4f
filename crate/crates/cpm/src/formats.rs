//! Text formats: adjacency lists, edge lists, witness maps, census records
//! and cycle tables.

use std::fmt::Write as _;

use cpm_core::cycles::CensusRow;
use cpm_core::graphs::{Adjacency, SimpleGraph};
use cpm_core::isomorphisms::{from_pairs, to_pairs};
use cpm_core::{CpmGraph, Family, Permutation};
use serde::{Deserialize, Serialize};

use crate::census::CensusRecord;
use crate::error::{CliError, Result};

pub fn header(g: &CpmGraph) -> String {
    match g.family() {
        Family::Cpm(p) => format!("# CPM {} {} {} {} {}", p.m, p.s, p.n, p.r, g.order()),
        Family::PraegerXu { t, s } => format!("# PX {t} {s} {}", g.order()),
    }
}

fn sorted_neighbors<G: Adjacency + ?Sized>(g: &G, x: usize) -> Vec<u32> {
    let mut nb = g.neighbors(x).to_vec();
    nb.sort_unstable();
    nb
}

/// `<index>: <neighbor indices>` per vertex in index order, neighbours ascending.
pub fn adjacency_text(g: &CpmGraph) -> String {
    let mut out = header(g);
    out.push('\n');
    for x in 0..g.order() {
        let nb: Vec<String> = sorted_neighbors(g, x).iter().map(u32::to_string).collect();
        let _ = writeln!(out, "{x}: {}", nb.join(" "));
    }
    out
}

/// One `u v` line per edge with `u < v`, sorted.
pub fn edge_list_text(g: &CpmGraph) -> String {
    let mut out = header(g);
    out.push('\n');
    for x in 0..g.order() {
        for y in sorted_neighbors(g, x) {
            if (x as u32) < y {
                let _ = writeln!(out, "{x} {y}");
            }
        }
    }
    out
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_index(tok: &str, line: usize) -> Result<u32> {
    tok.parse().map_err(|_| CliError::Parse {
        line,
        detail: format!("not a vertex index: {tok:?}"),
    })
}

/// Reads the adjacency format back. Vertices must be listed as `0, 1, …`.
pub fn parse_adjacency(text: &str) -> Result<SimpleGraph> {
    let mut adj = Vec::new();
    for (line, l) in content_lines(text) {
        let (head, rest) = l.split_once(':').ok_or(CliError::Parse {
            line,
            detail: "missing ':'".into(),
        })?;
        let x = parse_index(head.trim(), line)?;
        if x as usize != adj.len() {
            return Err(CliError::Parse {
                line,
                detail: format!("expected vertex {}, found {x}", adj.len()),
            });
        }
        adj.push(rest.split_whitespace().map(|t| parse_index(t, line)).collect::<Result<Vec<_>>>()?);
    }
    let n = adj.len() as u32;
    for (x, nb) in adj.iter().enumerate() {
        if let Some(&y) = nb.iter().find(|&&y| y >= n || !adj[y as usize].contains(&(x as u32))) {
            return Err(CliError::Parse {
                line: x + 2,
                detail: format!("edge {x}-{y} is not symmetric"),
            });
        }
    }
    Ok(SimpleGraph::from_adjacency(adj))
}

/// Reads the edge-list format back; the order is taken from the header.
pub fn parse_edge_list(text: &str) -> Result<SimpleGraph> {
    let order = text
        .lines()
        .next()
        .and_then(|h| h.split_whitespace().last())
        .and_then(|t| t.parse::<usize>().ok())
        .ok_or(CliError::Parse {
            line: 1,
            detail: "header must end with the vertex count".into(),
        })?;
    let mut edges = Vec::new();
    for (line, l) in content_lines(text) {
        let mut it = l.split_whitespace();
        let (Some(a), Some(b), None) = (it.next(), it.next(), it.next()) else {
            return Err(CliError::Parse {
                line,
                detail: "expected two indices".into(),
            });
        };
        let (a, b) = (parse_index(a, line)? as usize, parse_index(b, line)? as usize);
        if a >= order || b >= order {
            return Err(CliError::Parse {
                line,
                detail: format!("index out of range for {order} vertices"),
            });
        }
        edges.push((a, b));
    }
    Ok(SimpleGraph::from_edges(order, &edges))
}

/// A vertex map as a JSON array of `[vertex, image]` pairs.
pub fn witness_json(map: &Permutation) -> String {
    serde_json::to_string(&to_pairs(map)).expect("pairs serialize")
}

pub fn parse_witness_json(text: &str) -> Result<Permutation> {
    let pairs: Vec<(u32, u32)> = serde_json::from_str(text)?;
    Ok(from_pairs(&pairs)?)
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct JsonRecord {
    pub m: u64,
    pub s: u64,
    pub n: u64,
    pub r: u64,
    pub order: u64,
    pub radius: u64,
    pub class: String,
    pub stab: serde_json::Number,
    pub aut_order: serde_json::Number,
    pub verified: String,
    pub iso_class: usize,
}

fn big_number(x: &num_bigint::BigUint) -> serde_json::Number {
    x.to_string().parse().expect("decimal digits form a JSON number")
}

impl From<&CensusRecord> for JsonRecord {
    fn from(rec: &CensusRecord) -> Self {
        let p = rec.params;
        JsonRecord {
            m: p.m,
            s: p.s,
            n: p.n,
            r: p.r,
            order: rec.order,
            radius: rec.radius,
            class: rec.sym_class.kind.short_name().to_string(),
            stab: big_number(&rec.sym_class.stabilizer_order),
            aut_order: big_number(&rec.sym_class.predicted_aut_order),
            verified: rec.verified.as_str().to_string(),
            iso_class: rec.iso_class_id,
        }
    }
}

pub fn census_jsonl(records: &[&CensusRecord]) -> String {
    let mut out = String::new();
    for rec in records {
        out.push_str(&serde_json::to_string(&JsonRecord::from(*rec)).expect("record serializes"));
        out.push('\n');
    }
    out
}

pub fn census_table(records: &[&CensusRecord]) -> String {
    let mut out = format!(
        "{:>5}  {:<16} {:>7} {:>6}  {:<5} {:>8} {:>12}  {}\n",
        "class", "(m,s,n,r)", "order", "radius", "kind", "stab", "|Aut|", "verified"
    );
    for rec in records {
        let _ = writeln!(
            out,
            "{:>5}  {:<16} {:>7} {:>6}  {:<5} {:>8} {:>12}  {}",
            rec.iso_class_id,
            rec.params.to_string(),
            rec.order,
            rec.radius,
            rec.sym_class.kind.short_name(),
            rec.sym_class.stabilizer_order,
            rec.sym_class.predicted_aut_order,
            rec.verified.as_str()
        );
    }
    out
}

/// `trace, length, total, per-anchor, per-non-anchor`. The anchor column shows
/// `positive/negative` when the two anchor kinds differ.
pub fn cycle_table(rows: &[CensusRow]) -> String {
    let mut out = format!(
        "{:<14} {:>6} {:>10} {:>10} {:>14}\n",
        "trace", "length", "total", "per-anchor", "per-non-anchor"
    );
    for row in rows {
        let anchor = if row.per_positive_anchor == row.per_negative_anchor {
            row.per_positive_anchor.to_string()
        } else {
            format!("{}/{}", row.per_positive_anchor, row.per_negative_anchor)
        };
        let _ = writeln!(
            out,
            "{:<14} {:>6} {:>10} {:>10} {:>14}",
            row.trace.compact(),
            row.length,
            row.total,
            anchor,
            row.per_non_anchor
        );
    }
    out
}
