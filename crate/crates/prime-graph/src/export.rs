use std::fmt::Write;

use group_model::{phi_of_index, Family};
use serde_json::{json, Value};
use zsig_arith::{eta, nu_eps};

use crate::error::Result;
use crate::graph::{IndexGraph, Vertex};
use crate::large::{classify_large, Largeness};

fn index_value(graph: &IndexGraph, i: u64) -> u64 {
    match graph.group().family() {
        Family::LinearUnitary => nu_eps(i, graph.group().sign()),
        _ => eta(i),
    }
}

fn edges(graph: &IndexGraph) -> Vec<(Vertex, Vertex)> {
    let mut out = Vec::new();
    for a in 0..graph.len() {
        for b in graph.nonadjacent_to(a).iter().filter(|&b| b > a) {
            out.push((graph.vertex(a), graph.vertex(b)));
        }
    }
    out
}

/// Nonadjacency graph in DOT format.
pub fn to_dot(graph: &IndexGraph) -> Result<String> {
    let mut s = String::new();
    let name = graph
        .group()
        .short_name()
        .replace(['(', ')', '+', '-'], "_");
    writeln!(s, "graph nonadjacency_{name} {{").unwrap();
    for &v in graph.vertices() {
        match v {
            Vertex::Index(i) => {
                let large = classify_large(graph, i)? == Largeness::Large;
                writeln!(
                    s,
                    "  v{i} [label=\"{i}\", phi={}, value={}, large={large}];",
                    phi_of_index(i, graph.group()),
                    index_value(graph, i)
                )
                .unwrap();
            }
            Vertex::Characteristic => writeln!(s, "  p [label=\"p\", shape=box];").unwrap(),
        }
    }
    let id = |v: Vertex| match v {
        Vertex::Index(i) => format!("v{i}"),
        Vertex::Characteristic => "p".into(),
    };
    for (a, b) in edges(graph) {
        writeln!(s, "  {} -- {};", id(a), id(b)).unwrap();
    }
    s.push_str("}\n");
    Ok(s)
}

/// Nonadjacency graph as JSON.
pub fn to_json(graph: &IndexGraph) -> Result<Value> {
    let mut vertices = Vec::new();
    for &v in graph.vertices() {
        vertices.push(match v {
            Vertex::Index(i) => json!({
                "index": i,
                "phi": phi_of_index(i, graph.group()),
                "value": index_value(graph, i),
                "large": classify_large(graph, i)? == Largeness::Large,
            }),
            Vertex::Characteristic => json!({ "index": "p" }),
        });
    }
    let edges: Vec<Value> = edges(graph)
        .into_iter()
        .map(|(a, b)| json!([a.to_string(), b.to_string()]))
        .collect();
    Ok(json!({
        "group": graph.group().to_string(),
        "t": graph.t(),
        "vertices": vertices,
        "nonadjacent": edges,
    }))
}
