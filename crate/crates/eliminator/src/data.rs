use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use group_model::GroupDescriptor;
use prime_graph::{zeta_table, GraphShape, IndexGraph, Vertex, ZetaTable};

use crate::error::Result;

/// Graph invariants of one group that the elimination steps consult.
#[derive(Debug, Clone)]
pub struct GroupData {
    pub graph: IndexGraph,
    pub zeta: ZetaTable,
    pub large: BTreeSet<u64>,
    pub char_clique: usize,
}

struct Shared {
    zeta: ZetaTable,
    large: BTreeSet<u64>,
    char_clique: usize,
}

fn cache() -> &'static Mutex<HashMap<GraphShape, Arc<Shared>>> {
    static CACHE: OnceLock<Mutex<HashMap<GraphShape, Arc<Shared>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

impl GroupData {
    pub fn of(group: &GroupDescriptor) -> Result<GroupData> {
        let graph = IndexGraph::new(group)?;
        let shape = GraphShape::of(group);
        let cached = cache().lock().expect("cache poisoned").get(&shape).cloned();
        let shared = match cached {
            Some(s) => s,
            None => {
                let zeta = zeta_table(&graph)?;
                let large = graph.analysis().j_set.clone();
                let char_clique = graph.anchored_size(Vertex::Characteristic)?;
                let s = Arc::new(Shared {
                    zeta,
                    large,
                    char_clique,
                });
                cache()
                    .lock()
                    .expect("cache poisoned")
                    .entry(shape)
                    .or_insert(s)
                    .clone()
            }
        };
        let mut zeta = shared.zeta.clone();
        zeta.group = *group;
        Ok(GroupData {
            graph,
            zeta,
            large: shared.large.clone(),
            char_clique: shared.char_clique,
        })
    }

    pub fn group(&self) -> &GroupDescriptor {
        self.graph.group()
    }

    pub fn t(&self) -> usize {
        self.zeta.t
    }

    /// Whether two distinct graph indices are adjacent.
    pub fn adjacent(&self, i: u64, j: u64) -> Result<bool> {
        Ok(!self
            .graph
            .are_nonadjacent(Vertex::Index(i), Vertex::Index(j))?)
    }

    /// Indices `j ∈ N` with `ζ(j) = value`.
    pub fn fibre(&self, value: usize) -> BTreeSet<u64> {
        self.zeta
            .n
            .iter()
            .filter(|&&j| self.zeta.zeta[&j] == value)
            .copied()
            .collect()
    }
}
