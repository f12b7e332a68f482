//! The part of the crystal reachable from a seed by raising operators.

use std::collections::HashMap;
use std::fmt::Write as _;

use anyhow::{bail, Result};
use mvlab_core::mv::{is_mv, raise, weight};
use mvlab_core::GenPermutahedron;
use serde::Serialize;

use crate::doc::coords;

pub const MAX_DEPTH: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Node {
    pub id: String,
    pub depth: usize,
    pub weight: Vec<i64>,
    pub submodular: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub from: String,
    pub to: String,
    pub i: usize,
}

/// Nodes are distinct submodular tables, numbered `P0, P1, ...` in breadth-first order
/// with operators tried in increasing `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrystalGraph {
    pub n: usize,
    pub depth: usize,
    pub nodes: Vec<Node>,
    pub edges: Vec<Edge>,
}

/// Every `e_{i_1} ... e_{i_k} P` with `k <= depth`.
pub fn build(seed: &GenPermutahedron, depth: usize) -> Result<CrystalGraph> {
    if depth > MAX_DEPTH {
        bail!("depth {depth} exceeds the maximum {MAX_DEPTH}");
    }
    if !is_mv(seed) {
        bail!("the seed polytope is not MV");
    }
    let n = seed.n();
    let mut index: HashMap<Vec<i64>, usize> = HashMap::new();
    let mut polytopes = vec![seed.clone()];
    let mut depths = vec![0];
    let mut edges = Vec::new();
    index.insert(seed.table().to_vec(), 0);
    let mut next = 0;
    while next < polytopes.len() {
        let (from, d) = (next, depths[next]);
        next += 1;
        if d == depth {
            continue;
        }
        for i in 1..n {
            let q = raise(&polytopes[from], i)?;
            let to = *index.entry(q.table().to_vec()).or_insert_with(|| {
                polytopes.push(q);
                depths.push(d + 1);
                polytopes.len() - 1
            });
            edges.push(Edge {
                from: id(from),
                to: id(to),
                i,
            });
        }
    }
    let nodes = polytopes
        .iter()
        .zip(depths)
        .enumerate()
        .map(|(k, (p, depth))| Node {
            id: id(k),
            depth,
            weight: coords(&weight(p)),
            submodular: p.table().to_vec(),
        })
        .collect();
    Ok(CrystalGraph { n, depth, nodes, edges })
}

fn id(k: usize) -> String {
    format!("P{k}")
}

impl CrystalGraph {
    /// One `P --e_i--> P'` line per edge.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for e in &self.edges {
            writeln!(out, "{} --e{}--> {}", e.from, e.i, e.to).unwrap();
        }
        out
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph crystal {\n");
        for node in &self.nodes {
            let weight: Vec<String> = node.weight.iter().map(i64::to_string).collect();
            writeln!(
                out,
                "  {} [label=\"{}\\nwt ({})\"];",
                node.id,
                node.id,
                weight.join(",")
            )
            .unwrap();
        }
        for e in &self.edges {
            writeln!(out, "  {} -> {} [label=\"e{}\"];", e.from, e.to, e.i).unwrap();
        }
        out.push_str("}\n");
        out
    }
}
