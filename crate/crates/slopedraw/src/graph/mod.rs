//! Simple undirected graphs of maximum degree three and the structural
//! algorithms the drawing pipelines dispatch on.

mod cuts;
mod iso;
mod matching;
mod mcut;
mod supercycle;
mod triangle;

pub use cuts::{bridges, find_bridges_and_small_cuts, CutReport};
pub use iso::find_isomorphism;
pub use matching::{perfect_matching, MatchingError};
pub use mcut::{find_suitable_mcut, is_suitable_mcut, MCut, MCutError};
pub use supercycle::{
    ceil_log2_ratio, find_supercycle, girth, girth_cycle, is_supercycle, moore_bound,
    supercycle_bound, supercycle_bound_table, GirthError,
};
pub use triangle::{contract_triangle, TriangleContraction, TriangleError};

use std::collections::{HashMap, VecDeque};
use thiserror::Error;

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {0} out of range")]
    VertexOutOfRange(VertexId),
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("parallel edge {0}-{1}")]
    ParallelEdge(VertexId, VertexId),
    #[error("vertex {0} has degree greater than three")]
    DegreeViolation(VertexId),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<VertexId>>,
    edges: Vec<(VertexId, VertexId)>,
    index: HashMap<(VertexId, VertexId), EdgeId>,
}

impl Graph {
    /// Builds a graph; edge ids follow the input order and each edge is
    /// stored with its smaller endpoint first.
    pub fn new(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Graph, GraphError> {
        let mut adj = vec![Vec::new(); n];
        let mut stored = Vec::with_capacity(edges.len());
        let mut index = HashMap::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange(u));
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let key = (u.min(v), u.max(v));
            if index.contains_key(&key) {
                return Err(GraphError::ParallelEdge(key.0, key.1));
            }
            index.insert(key, stored.len());
            stored.push(key);
            adj[u].push(v);
            adj[v].push(u);
        }
        for (v, list) in adj.iter_mut().enumerate() {
            if list.len() > 3 {
                return Err(GraphError::DegreeViolation(v));
            }
            list.sort_unstable();
        }
        Ok(Graph { adj, edges: stored, index })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    pub fn edge_id(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.index.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.edge_id(u, v).is_some()
    }

    pub fn is_cubic(&self) -> bool {
        self.adj.iter().all(|a| a.len() == 3)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.components().len() == 1
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        self.components_avoiding(&[])
    }

    /// Components of the graph with the given edges deleted.
    pub fn components_avoiding(&self, removed: &[EdgeId]) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if seen[w] || removed.contains(&self.edge_id(u, w).unwrap()) {
                        continue;
                    }
                    seen[w] = true;
                    comp.push(w);
                    queue.push_back(w);
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Induced subgraph on `vertices`; vertex `k` of the result is
    /// `vertices[k]` of `self`.
    pub fn induced(&self, vertices: &[VertexId]) -> Graph {
        let mut pos = HashMap::with_capacity(vertices.len());
        for (k, &v) in vertices.iter().enumerate() {
            pos.insert(v, k);
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            if let (Some(&a), Some(&b)) = (pos.get(&u), pos.get(&v)) {
                edges.push((a, b));
            }
        }
        Graph::new(vertices.len(), &edges).expect("induced subgraph of a valid graph")
    }

    /// Whether the graph is a single cycle.
    pub fn is_cycle(&self) -> bool {
        self.n() >= 3 && self.adj.iter().all(|a| a.len() == 2) && self.is_connected()
    }

    pub fn has_triangle(&self) -> bool {
        self.edges.iter().any(|&(u, v)| self.adj[u].iter().any(|w| self.adj[v].contains(w)))
    }
}

/// A few named graphs used throughout tests and fixtures.
pub mod named {
    use super::Graph;

    pub fn complete4() -> Graph {
        Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    pub fn k33() -> Graph {
        Graph::new(6, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)])
            .unwrap()
    }

    /// Outer cycle 0..4, spokes `i – i+5`, inner pentagram.
    pub fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::new(10, &e).unwrap()
    }

    pub fn prism() -> Graph {
        Graph::new(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])
            .unwrap()
    }

    /// Hamiltonian cubic graph from LCF notation: the cycle `0..n` plus a
    /// chord from `i` to `i + shifts[i mod len]`, the pattern repeated.
    pub fn lcf(n: usize, shifts: &[i64], repeats: usize) -> Graph {
        let mut e: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        for k in 0..repeats {
            for (j, &s) in shifts.iter().enumerate() {
                let i = k * shifts.len() + j;
                let t = ((i as i64 + s).rem_euclid(n as i64)) as usize;
                if i < t {
                    e.push((i, t));
                }
            }
        }
        Graph::new(n, &e).unwrap()
    }

    pub fn heawood() -> Graph {
        lcf(14, &[5, -5], 7)
    }

    pub fn mobius_kantor() -> Graph {
        lcf(16, &[5, -5], 8)
    }

    pub fn pappus() -> Graph {
        lcf(18, &[5, 7, -7, 7, -7, -5], 3)
    }

    /// Petersen graph with one vertex replaced by a triangle.
    pub fn tietze() -> Graph {
        let e = [
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0),
            (0, 8), (8, 7), (7, 6), (6, 5),
            (9, 10), (10, 11), (11, 9),
            (8, 3), (6, 2), (1, 9), (7, 11), (4, 10),
        ];
        Graph::new(12, &e).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &e).unwrap()
    }

    pub fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &e).unwrap()
    }

}
