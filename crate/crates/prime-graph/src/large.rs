use group_model::phi_of_index;
use serde::{Deserialize, Serialize};

use crate::error::{GraphError, Result};
use crate::graph::{IndexGraph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Largeness {
    Large,
    Small,
}

/// Whether primes of index `i` lie in some largest coclique.
pub fn classify_large(graph: &IndexGraph, i: u64) -> Result<Largeness> {
    let large = graph.anchored_size(Vertex::Index(i))? == graph.t();
    let g = graph.group();
    if g.n() >= 13 {
        let twice_phi = 2 * phi_of_index(i, g);
        let n = g.n() as u64;
        if twice_phi >= n && !large {
            return Err(GraphError::LemmaViolation(format!(
                "index {i} of {} has φ ≥ n/2 but is small",
                g.short_name()
            )));
        }
        if large && twice_phi + 2 < n {
            return Err(GraphError::LemmaViolation(format!(
                "index {i} of {} is large with φ < n/2 − 1",
                g.short_name()
            )));
        }
    }
    Ok(if large {
        Largeness::Large
    } else {
        Largeness::Small
    })
}
