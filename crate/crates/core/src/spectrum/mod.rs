//! Taut loop length spectra of finite graphs and their comparison.

mod related;
mod taut;

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

pub use related::{k_related, ScannedSpectrum};
pub use taut::{taut_spectrum, Certificate, LengthReport, LengthStatus, TautSpectrumReport};

use crate::complex::{SimplicialComplex, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpectrumError {
    #[error("edge at vertex {0} is a self-loop")]
    SelfLoop(Vertex),
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph has no vertices")]
    Empty,
    #[error("k must be at least 1")]
    ZeroK,
    #[error("scan ceiling {ceiling} is below the threshold {needed} = k² + 2k + 2")]
    CeilingTooSmall { ceiling: u64, needed: u64 },
    #[error("length {length} lies above the declared scan ceiling {ceiling}")]
    AboveCeiling { length: u64, ceiling: u64 },
    #[error("graph file: {0}")]
    File(String),
}

/// A finite simple graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: BTreeMap<Vertex, BTreeSet<Vertex>>,
}

impl Graph {
    /// Duplicate and reversed edges are merged.
    pub fn new(
        vertices: impl IntoIterator<Item = Vertex>,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self, SpectrumError> {
        let mut adjacency: BTreeMap<Vertex, BTreeSet<Vertex>> =
            vertices.into_iter().map(|v| (v, BTreeSet::new())).collect();
        for (u, v) in edges {
            if u == v {
                return Err(SpectrumError::SelfLoop(u));
            }
            adjacency.entry(u).or_default().insert(v);
            adjacency.entry(v).or_default().insert(u);
        }
        Ok(Graph { adjacency })
    }

    /// The 1-skeleton.
    pub fn from_complex(complex: &SimplicialComplex) -> Self {
        Graph { adjacency: complex.adjacency() }
    }

    /// The cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        let n = n as Vertex;
        Graph::new(0..n, (0..n).map(|i| (i, (i + 1) % n))).expect("no self-loops")
    }

    /// Cycles of the given lengths (each at least 3) glued at vertex 0.
    pub fn wedge_of_cycles(lengths: &[usize]) -> Self {
        let mut edges = Vec::new();
        let mut next: Vertex = 1;
        for &len in lengths {
            let mut prev = 0;
            for _ in 1..len {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
            edges.push((prev, 0));
        }
        Graph::new([0], edges).expect("no self-loops")
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.adjacency.keys().copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adjacency.get(&v).into_iter().flatten().copied()
    }

    /// Edges `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adjacency.iter().flat_map(|(&u, n)| n.range(u + 1..).map(move |&v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.values().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn is_connected(&self) -> bool {
        let Some(&root) = self.adjacency.keys().next() else { return true };
        self.bfs_parents(root).len() == self.adjacency.len()
    }

    /// Parent map of a breadth-first tree; the root maps to itself.
    pub(crate) fn bfs_parents(&self, root: Vertex) -> BTreeMap<Vertex, Vertex> {
        let mut parent = BTreeMap::from([(root, root)]);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for w in self.neighbors(u) {
                if let std::collections::btree_map::Entry::Vacant(e) = parent.entry(w) {
                    e.insert(u);
                    queue.push_back(w);
                }
            }
        }
        parent
    }

    /// Rank of the fundamental group.
    pub fn cycle_rank(&self) -> usize {
        let components = {
            let mut seen = BTreeSet::new();
            let mut count = 0;
            for v in self.vertices() {
                if !seen.contains(&v) {
                    count += 1;
                    seen.extend(self.bfs_parents(v).into_keys());
                }
            }
            count
        };
        self.edge_count() + components - self.vertex_count()
    }

    pub fn to_file(&self) -> GraphFile {
        let isolated = self.adjacency.iter().filter(|(_, n)| n.is_empty()).map(|(&v, _)| v).collect();
        GraphFile { vertices: isolated, edges: self.edges().map(|(u, v)| [u, v]).collect() }
    }
}

/// Edge-list form: `{"edges": [[0, 1], [1, 2], [2, 0]]}`, with isolated
/// vertices optionally listed under `"vertices"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub vertices: Vec<Vertex>,
    pub edges: Vec<[Vertex; 2]>,
}

impl GraphFile {
    pub fn into_graph(self) -> Result<Graph, SpectrumError> {
        Graph::new(self.vertices, self.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wedge_shape() {
        let g = Graph::wedge_of_cycles(&[3, 4]);
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 7);
        assert_eq!(g.cycle_rank(), 2);
        assert!(g.is_connected());
        assert_eq!(Graph::cycle(5).cycle_rank(), 1);
    }

    #[test]
    fn file_round_trip() {
        let g = Graph::new([7], [(0, 1), (1, 0), (1, 2)]).unwrap();
        let json = serde_json::to_string(&g.to_file()).unwrap();
        assert_eq!(json, r#"{"vertices":[7],"edges":[[0,1],[1,2]]}"#);
        let back: GraphFile = serde_json::from_str(&json).unwrap();
        assert_eq!(back.into_graph().unwrap(), g);
        assert!(!g.is_connected());
        assert_eq!(Graph::new([], [(3, 3)]), Err(SpectrumError::SelfLoop(3)));
    }
}
