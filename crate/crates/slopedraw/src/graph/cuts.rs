use super::{EdgeId, Graph, VertexId};

/// Bridges, minimal 2-edge cuts, cut vertices and minimal 2-vertex cuts.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CutReport {
    pub bridges: Vec<EdgeId>,
    pub two_edge_cuts: Vec<(EdgeId, EdgeId)>,
    pub cut_vertices: Vec<VertexId>,
    pub two_vertex_cuts: Vec<(VertexId, VertexId)>,
}

struct Lowlink {
    bridges: Vec<EdgeId>,
    articulation: Vec<VertexId>,
}

/// Iterative Tarjan lowlink over the graph with one edge or vertex hidden.
fn lowlink(g: &Graph, skip_edge: Option<EdgeId>, skip_vertex: Option<VertexId>) -> Lowlink {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    let mut bridges = Vec::new();
    let mut is_art = vec![false; n];
    for root in 0..n {
        if disc[root] != usize::MAX || Some(root) == skip_vertex {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        // (vertex, parent edge, next neighbor index)
        let mut stack: Vec<(VertexId, Option<EdgeId>, usize)> = vec![(root, None, 0)];
        while let Some(top) = stack.last_mut() {
            let (u, pe) = (top.0, top.1);
            let nbrs = g.neighbors(u);
            if top.2 < nbrs.len() {
                let w = nbrs[top.2];
                top.2 += 1;
                let e = g.edge_id(u, w).unwrap();
                if Some(e) == skip_edge || Some(w) == skip_vertex || Some(e) == pe {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if u == root {
                        root_children += 1;
                    }
                    stack.push((w, Some(e), 0));
                } else {
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[u]);
                    if low[u] > disc[p] {
                        bridges.push(pe.unwrap());
                    }
                    if p != root && low[u] >= disc[p] {
                        is_art[p] = true;
                    }
                }
            }
        }
        if root_children > 1 {
            is_art[root] = true;
        }
    }
    bridges.sort_unstable();
    Lowlink { bridges, articulation: (0..n).filter(|&v| is_art[v]).collect() }
}

/// Bridges only, sorted by edge id.
pub fn bridges(g: &Graph) -> Vec<EdgeId> {
    let mut b = lowlink(g, None, None).bridges;
    b.sort_unstable();
    b
}

pub fn find_bridges_and_small_cuts(g: &Graph) -> CutReport {
    let base = lowlink(g, None, None);
    let mut two_edge_cuts = Vec::new();
    for e in 0..g.m() {
        if base.bridges.contains(&e) {
            continue;
        }
        for f in lowlink(g, Some(e), None).bridges {
            if f > e && !base.bridges.contains(&f) {
                two_edge_cuts.push((e, f));
            }
        }
    }
    let mut two_vertex_cuts = Vec::new();
    for v in 0..g.n() {
        if base.articulation.contains(&v) {
            continue;
        }
        for w in lowlink(g, None, Some(v)).articulation {
            if w > v && !base.articulation.contains(&w) {
                two_vertex_cuts.push((v, w));
            }
        }
    }
    CutReport {
        bridges: base.bridges,
        two_edge_cuts,
        cut_vertices: base.articulation,
        two_vertex_cuts,
    }
}

#[cfg(test)]
mod tests {
    use super::super::named;
    use super::*;

    fn disconnects(g: &Graph, removed: &[EdgeId]) -> bool {
        g.components_avoiding(removed).len() > 1
    }

    #[test]
    fn path_edges_are_bridges() {
        let p = named::path(5);
        let r = find_bridges_and_small_cuts(&p);
        assert_eq!(r.bridges, vec![0, 1, 2, 3]);
        assert_eq!(r.cut_vertices, vec![1, 2, 3]);
    }

    #[test]
    fn petersen_is_three_edge_connected() {
        let r = find_bridges_and_small_cuts(&named::petersen());
        assert!(r.bridges.is_empty());
        assert!(r.two_edge_cuts.is_empty());
        assert!(r.cut_vertices.is_empty());
        assert!(r.two_vertex_cuts.is_empty());
    }

    #[test]
    fn agrees_with_deletion_oracle_on_prism_pairs() {
        // Two prisms joined by swapping one edge each way: 2-edge-connected only.
        let mut e: Vec<(usize, usize)> = named::prism().edges().to_vec();
        e.retain(|&x| x != (0, 3));
        let mut e2: Vec<(usize, usize)> =
            named::prism().edges().iter().map(|&(a, b)| (a + 6, b + 6)).collect();
        e2.retain(|&x| x != (6, 9));
        e.extend(e2);
        e.push((0, 6));
        e.push((3, 9));
        let g = Graph::new(12, &e).unwrap();
        let r = find_bridges_and_small_cuts(&g);
        assert!(r.bridges.is_empty());
        let mut oracle = Vec::new();
        for a in 0..g.m() {
            for b in a + 1..g.m() {
                if disconnects(&g, &[a, b]) {
                    oracle.push((a, b));
                }
            }
        }
        assert_eq!(r.two_edge_cuts, oracle);
        for &(a, b) in &r.two_edge_cuts {
            let (p, q) = (g.edge(a), g.edge(b));
            assert!(p.0 != q.0 && p.0 != q.1 && p.1 != q.0 && p.1 != q.1);
        }
    }
}
