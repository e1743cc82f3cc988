use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use group_model::{valid_indices, Family, GroupDescriptor, Sign};
use serde::{Deserialize, Serialize};

use crate::adjacency::{char_nonadjacent, is_vertex_index, nonadjacent};
use crate::bits::Bits;
use crate::clique::CliqueSearch;
use crate::error::{GraphError, Result};

/// A vertex of the index graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Vertex {
    Index(u64),
    Characteristic,
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Index(i) => write!(f, "{i}"),
            Vertex::Characteristic => write!(f, "p"),
        }
    }
}

/// Data that fixes the index graph up to isomorphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GraphShape {
    pub family: Family,
    pub sign: Sign,
    pub n: u32,
    pub q_is_two: bool,
}

impl GraphShape {
    pub fn of(group: &GroupDescriptor) -> Self {
        let family = match group.family() {
            Family::OddOrthogonal => Family::Symplectic,
            f => f,
        };
        GraphShape {
            family,
            sign: group.sign(),
            n: group.n(),
            q_is_two: group.q() == 2,
        }
    }
}

/// Coclique numbers of the whole graph, computed once per shape.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub t: usize,
    pub anchored: Vec<usize>,
    pub e_set: BTreeSet<u64>,
    pub j_set: BTreeSet<u64>,
}

struct Structure {
    vertices: Vec<Vertex>,
    nonadj: Vec<Bits>,
    analysis: OnceLock<Analysis>,
}

/// Prime graph of a classical group restricted to index classes, plus the characteristic.
#[derive(Clone)]
pub struct IndexGraph {
    group: GroupDescriptor,
    inner: Arc<Structure>,
}

impl fmt::Debug for IndexGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IndexGraph")
            .field("group", &self.group.short_name())
            .field("vertices", &self.inner.vertices.len())
            .finish()
    }
}

fn cache() -> &'static Mutex<HashMap<GraphShape, Arc<Structure>>> {
    static CACHE: OnceLock<Mutex<HashMap<GraphShape, Arc<Structure>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn build(group: &GroupDescriptor) -> Result<Structure> {
    let mut vertices: Vec<Vertex> = valid_indices(group)
        .into_iter()
        .filter(|&i| is_vertex_index(i, group))
        .map(Vertex::Index)
        .collect();
    vertices.push(Vertex::Characteristic);
    if vertices.len() > Bits::CAPACITY {
        return Err(GraphError::Range(format!(
            "{} has more than {} vertices",
            group.short_name(),
            Bits::CAPACITY
        )));
    }
    let mut nonadj = vec![Bits::empty(); vertices.len()];
    for a in 0..vertices.len() {
        for b in a + 1..vertices.len() {
            let hit = match (vertices[a], vertices[b]) {
                (Vertex::Index(i), Vertex::Index(j)) => nonadjacent(i, j, group)?,
                (Vertex::Index(i), Vertex::Characteristic)
                | (Vertex::Characteristic, Vertex::Index(i)) => char_nonadjacent(i, group),
                _ => false,
            };
            if hit {
                nonadj[a].insert(b);
                nonadj[b].insert(a);
            }
        }
    }
    Ok(Structure {
        vertices,
        nonadj,
        analysis: OnceLock::new(),
    })
}

impl IndexGraph {
    pub fn new(group: &GroupDescriptor) -> Result<Self> {
        let shape = GraphShape::of(group);
        if let Some(s) = cache().lock().expect("graph cache").get(&shape) {
            return Ok(IndexGraph {
                group: *group,
                inner: s.clone(),
            });
        }
        let built = Arc::new(build(group)?);
        let inner = cache()
            .lock()
            .expect("graph cache")
            .entry(shape)
            .or_insert(built)
            .clone();
        Ok(IndexGraph {
            group: *group,
            inner,
        })
    }

    pub fn group(&self) -> &GroupDescriptor {
        &self.group
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.inner.vertices
    }

    pub fn indices(&self) -> impl Iterator<Item = u64> + '_ {
        self.inner.vertices.iter().filter_map(|v| match v {
            Vertex::Index(i) => Some(*i),
            Vertex::Characteristic => None,
        })
    }

    pub fn len(&self) -> usize {
        self.inner.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inner.vertices.is_empty()
    }

    pub fn contains_index(&self, i: u64) -> bool {
        self.position(Vertex::Index(i)).is_some()
    }

    pub fn position(&self, v: Vertex) -> Option<usize> {
        match v {
            Vertex::Characteristic => Some(self.inner.vertices.len() - 1),
            Vertex::Index(_) => self.inner.vertices[..self.inner.vertices.len() - 1]
                .binary_search(&v)
                .ok(),
        }
    }

    pub(crate) fn require(&self, v: Vertex) -> Result<usize> {
        self.position(v).ok_or_else(|| {
            GraphError::Domain(format!(
                "{v} is not a vertex of the graph of {}",
                self.group.short_name()
            ))
        })
    }

    pub fn vertex(&self, pos: usize) -> Vertex {
        self.inner.vertices[pos]
    }

    pub fn are_nonadjacent(&self, a: Vertex, b: Vertex) -> Result<bool> {
        let pa = self.require(a)?;
        let pb = self.require(b)?;
        Ok(self.inner.nonadj[pa].contains(pb))
    }

    /// Vertices nonadjacent to `pos`.
    pub fn nonadjacent_to(&self, pos: usize) -> Bits {
        self.inner.nonadj[pos]
    }

    pub(crate) fn search(&self) -> CliqueSearch<'_> {
        CliqueSearch::new(&self.inner.nonadj)
    }

    pub fn all(&self) -> Bits {
        Bits::full(self.len())
    }

    pub fn to_vertices(&self, bits: Bits) -> BTreeSet<Vertex> {
        bits.iter().map(|p| self.vertex(p)).collect()
    }

    pub fn analysis(&self) -> &Analysis {
        self.inner.analysis.get_or_init(|| self.compute_analysis())
    }

    fn compute_analysis(&self) -> Analysis {
        let search = self.search();
        let all = self.all();
        let t = search.maximum(all).len();
        let anchored: Vec<usize> = (0..self.len())
            .map(|v| 1 + search.maximum(self.inner.nonadj[v]).len())
            .collect();
        let mut e_set = BTreeSet::new();
        let mut j_set = BTreeSet::new();
        for (pos, &size) in anchored.iter().enumerate() {
            if size != t {
                continue;
            }
            if let Vertex::Index(i) = self.vertex(pos) {
                j_set.insert(i);
                let mut rest = all;
                rest.remove(pos);
                if !search.has_clique(rest, t) {
                    e_set.insert(i);
                }
            }
        }
        Analysis {
            t,
            anchored,
            e_set,
            j_set,
        }
    }

    /// t(L): the largest coclique size.
    pub fn t(&self) -> usize {
        self.analysis().t
    }

    /// Largest size of a coclique through `v`.
    pub fn anchored_size(&self, v: Vertex) -> Result<usize> {
        Ok(self.analysis().anchored[self.require(v)?])
    }

    /// Union of the other vertices over all largest cocliques through `v`.
    pub fn anchored_union(&self, v: Vertex) -> Result<BTreeSet<Vertex>> {
        let pos = self.require(v)?;
        let size = self.analysis().anchored[pos];
        let search = self.search();
        let around = self.inner.nonadj[pos];
        Ok(around
            .iter()
            .filter(|&w| search.has_clique(around.and(self.inner.nonadj[w]), size - 2))
            .map(|w| self.vertex(w))
            .collect())
    }

    /// Vertices common to all largest cocliques through `v`, other than `v`.
    pub fn anchored_intersection(&self, v: Vertex) -> Result<BTreeSet<Vertex>> {
        let pos = self.require(v)?;
        let size = self.analysis().anchored[pos];
        let search = self.search();
        let around = self.inner.nonadj[pos];
        Ok(around
            .iter()
            .filter(|&w| {
                let mut rest = around;
                rest.remove(w);
                !search.has_clique(rest, size - 1)
            })
            .map(|w| self.vertex(w))
            .collect())
    }

    /// Whether the given vertices are pairwise nonadjacent.
    pub fn is_coclique(&self, vs: &[Vertex]) -> Result<bool> {
        let pos: Vec<usize> = vs.iter().map(|&v| self.require(v)).collect::<Result<_>>()?;
        Ok(pos.iter().enumerate().all(|(k, &a)| {
            pos[k + 1..]
                .iter()
                .all(|&b| a != b && self.inner.nonadj[a].contains(b))
        }))
    }

    /// A largest coclique inside `candidates`.
    pub fn largest_coclique_in(&self, candidates: Bits) -> Bits {
        self.search().maximum(candidates)
    }

    pub fn has_coclique_in(&self, candidates: Bits, k: usize) -> bool {
        self.search().has_clique(candidates, k)
    }

    pub fn bits_of(&self, vs: impl IntoIterator<Item = Vertex>) -> Result<Bits> {
        vs.into_iter().map(|v| self.require(v)).collect()
    }
}
