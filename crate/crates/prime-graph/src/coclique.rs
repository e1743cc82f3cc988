use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{IndexGraph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CocliqueSource {
    TableFormula,
    ExactSearch,
}

/// A coclique of the index graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CocliqueReport {
    pub indices: BTreeSet<u64>,
    pub size: usize,
    pub includes_char: bool,
    pub source: CocliqueSource,
}

impl CocliqueReport {
    fn from_vertices(vs: BTreeSet<Vertex>, source: CocliqueSource) -> Self {
        let includes_char = vs.contains(&Vertex::Characteristic);
        let indices = vs
            .iter()
            .filter_map(|v| match v {
                Vertex::Index(i) => Some(*i),
                Vertex::Characteristic => None,
            })
            .collect();
        CocliqueReport {
            indices,
            size: vs.len(),
            includes_char,
            source,
        }
    }
}

/// A largest coclique, through `anchor` when one is given.
pub fn max_coclique_exact(graph: &IndexGraph, anchor: Option<Vertex>) -> Result<CocliqueReport> {
    let bits = match anchor {
        None => graph.largest_coclique_in(graph.all()),
        Some(v) => {
            let pos = graph.require(v)?;
            let mut b = graph.largest_coclique_in(graph.nonadjacent_to(pos));
            b.insert(pos);
            b
        }
    };
    let vs = graph.to_vertices(bits);
    debug_assert!(graph
        .is_coclique(&vs.iter().copied().collect::<Vec<_>>())
        .unwrap());
    Ok(CocliqueReport::from_vertices(
        vs,
        CocliqueSource::ExactSearch,
    ))
}
