use thiserror::Error;

use super::{EdgeId, Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TriangleError {
    #[error("graph has no triangle")]
    NoTriangle,
    #[error("every triangle has boundary edges sharing an outside vertex")]
    NonDisjointBoundary,
    #[error("graph is not cubic")]
    NotCubic,
}

/// Record of one triangle contraction. Vertices of the original graph other
/// than the triangle keep their relative order; the contracted vertex is last.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleContraction {
    pub contracted_vertex: VertexId,
    pub original_triangle: [VertexId; 3],
    pub boundary_edges: [EdgeId; 3],
    /// Outside endpoint of each boundary edge, in the original numbering.
    pub outside: [VertexId; 3],
    /// Original id of each vertex of the contracted graph (the contracted
    /// vertex maps to `original_triangle[0]`).
    pub new_to_old: Vec<VertexId>,
    pub old_to_new: Vec<Option<VertexId>>,
}

pub fn contract_triangle(g: &Graph) -> Result<(Graph, TriangleContraction), TriangleError> {
    if !g.is_cubic() {
        return Err(TriangleError::NotCubic);
    }
    let mut seen_triangle = false;
    for a in 0..g.n() {
        for &b in g.neighbors(a).iter().filter(|&&b| b > a) {
            for &c in g.neighbors(b).iter().filter(|&&c| c > b) {
                if !g.has_edge(a, c) {
                    continue;
                }
                seen_triangle = true;
                let tri = [a, b, c];
                let outside: Vec<VertexId> = tri
                    .iter()
                    .map(|&t| *g.neighbors(t).iter().find(|w| !tri.contains(w)).unwrap())
                    .collect();
                if outside[0] == outside[1] || outside[1] == outside[2] || outside[0] == outside[2] {
                    continue;
                }
                return Ok(build(g, tri, [outside[0], outside[1], outside[2]]));
            }
        }
    }
    Err(if seen_triangle { TriangleError::NonDisjointBoundary } else { TriangleError::NoTriangle })
}

fn build(g: &Graph, tri: [VertexId; 3], outside: [VertexId; 3]) -> (Graph, TriangleContraction) {
    let n = g.n();
    let mut old_to_new = vec![None; n];
    let mut new_to_old = Vec::with_capacity(n - 2);
    for v in 0..n {
        if !tri.contains(&v) {
            old_to_new[v] = Some(new_to_old.len());
            new_to_old.push(v);
        }
    }
    let t = new_to_old.len();
    new_to_old.push(tri[0]);
    let mut edges = Vec::with_capacity(g.m() - 3);
    for &(u, v) in g.edges() {
        match (old_to_new[u], old_to_new[v]) {
            (Some(a), Some(b)) => edges.push((a, b)),
            (Some(a), None) | (None, Some(a)) => edges.push((a, t)),
            (None, None) => {}
        }
    }
    let h = Graph::new(t + 1, &edges).expect("contraction of a disjoint-boundary triangle is simple");
    let boundary_edges = [0, 1, 2].map(|i| g.edge_id(tri[i], outside[i]).unwrap());
    let rec = TriangleContraction {
        contracted_vertex: t,
        original_triangle: tri,
        boundary_edges,
        outside,
        new_to_old,
        old_to_new,
    };
    (h, rec)
}

impl TriangleContraction {
    /// Rebuilds the original graph's edge set from the contracted one.
    pub fn expand_edges(&self, h: &Graph) -> Vec<(VertexId, VertexId)> {
        let t = self.contracted_vertex;
        let mut out = Vec::with_capacity(h.m() + 3);
        for &(u, v) in h.edges() {
            if u != t && v != t {
                out.push((self.new_to_old[u], self.new_to_old[v]));
            }
        }
        let [a, b, c] = self.original_triangle;
        out.extend([(a, b), (b, c), (a, c)]);
        for i in 0..3 {
            out.push((self.original_triangle[i], self.outside[i]));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::super::named;
    use super::*;

    fn normalized(mut e: Vec<(VertexId, VertexId)>) -> Vec<(VertexId, VertexId)> {
        for x in e.iter_mut() {
            *x = (x.0.min(x.1), x.0.max(x.1));
        }
        e.sort_unstable();
        e
    }

    #[test]
    fn prism_contracts_to_k4() {
        let g = named::prism();
        let (h, rec) = contract_triangle(&g).unwrap();
        assert_eq!(h.n(), 4);
        assert!(h.is_cubic());
        assert_eq!(h.m(), 6);
        assert_eq!(rec.original_triangle, [0, 1, 2]);
        assert_eq!(normalized(rec.expand_edges(&h)), normalized(g.edges().to_vec()));
    }

    #[test]
    fn errors() {
        assert_eq!(contract_triangle(&named::petersen()).unwrap_err(), TriangleError::NoTriangle);
        assert_eq!(
            contract_triangle(&named::complete4()).unwrap_err(),
            TriangleError::NonDisjointBoundary
        );
    }

    #[test]
    fn tietze_contracts_to_petersen_size() {
        let (h, _) = contract_triangle(&named::tietze()).unwrap();
        assert_eq!(h.n(), 10);
        assert_eq!(super::super::girth(&h), Some(5));
    }
}
