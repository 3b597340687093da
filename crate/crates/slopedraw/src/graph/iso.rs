use super::{Graph, VertexId};

/// A bijection `f` with `uv ∈ E(g) ⇔ f(u)f(v) ∈ E(h)`, if one exists.
/// Plain backtracking over a BFS order of `g`; meant for graphs of a few
/// dozen vertices.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<VertexId>> {
    let n = g.n();
    if n != h.n() || g.m() != h.m() {
        return None;
    }
    let mut dg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..n).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return None;
    }
    let order = bfs_order(g);
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(g, h, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn bfs_order(g: &Graph) -> Vec<VertexId> {
    let mut seen = vec![false; g.n()];
    let mut order = Vec::with_capacity(g.n());
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let start = order.len();
        order.push(s);
        let mut i = start;
        while i < order.len() {
            for &w in g.neighbors(order[i]) {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
            i += 1;
        }
    }
    order
}

fn extend(
    g: &Graph,
    h: &Graph,
    order: &[VertexId],
    k: usize,
    map: &mut [VertexId],
    used: &mut [bool],
) -> bool {
    let Some(&v) = order.get(k) else { return true };
    // A mapped neighbour restricts the candidates to its image's neighbours.
    let anchor = g.neighbors(v).iter().find(|&&w| map[w] != usize::MAX);
    let candidates: Vec<VertexId> = match anchor {
        Some(&w) => h.neighbors(map[w]).to_vec(),
        None => (0..h.n()).collect(),
    };
    for c in candidates {
        if used[c] || h.degree(c) != g.degree(v) {
            continue;
        }
        let consistent = g
            .neighbors(v)
            .iter()
            .filter(|&&w| map[w] != usize::MAX)
            .all(|&w| h.has_edge(c, map[w]));
        let mapped_adjacent = g.neighbors(v).iter().filter(|&&w| map[w] != usize::MAX).count();
        let image_adjacent = h.neighbors(c).iter().filter(|&&x| used[x]).count();
        if !consistent || mapped_adjacent != image_adjacent {
            continue;
        }
        map[v] = c;
        used[c] = true;
        if extend(g, h, order, k + 1, map, used) {
            return true;
        }
        map[v] = usize::MAX;
        used[c] = false;
    }
    false
}
