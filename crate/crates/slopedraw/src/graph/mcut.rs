use thiserror::Error;

use super::{find_supercycle, is_supercycle, EdgeId, Graph, VertexId};

/// A cut whose edges form a matching and whose sides are both supercycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MCut {
    pub side_a: Vec<VertexId>,
    pub side_b: Vec<VertexId>,
    pub cut_edges: Vec<EdgeId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MCutError {
    #[error("no suitable M-cut found")]
    NotFound,
    #[error("graph must be connected and cubic")]
    NotCubic,
}

/// Graphs below this size get the exhaustive search when absorption fails.
const EXHAUSTIVE_LIMIT: usize = 18;

fn cut_between(g: &Graph, in_a: &[bool]) -> Vec<EdgeId> {
    (0..g.m())
        .filter(|&e| {
            let (u, v) = g.edge(e);
            in_a[u] != in_a[v]
        })
        .collect()
}

fn make_cut(g: &Graph, in_a: &[bool]) -> MCut {
    let side_a = (0..g.n()).filter(|&v| in_a[v]).collect();
    let side_b = (0..g.n()).filter(|&v| !in_a[v]).collect();
    MCut { side_a, side_b, cut_edges: cut_between(g, in_a) }
}

/// Checks every M-cut invariant from scratch.
pub fn is_suitable_mcut(g: &Graph, mc: &MCut) -> bool {
    let n = g.n();
    let mut side = vec![0u8; n];
    for &v in &mc.side_a {
        if v >= n || side[v] != 0 {
            return false;
        }
        side[v] = 1;
    }
    for &v in &mc.side_b {
        if v >= n || side[v] != 0 {
            return false;
        }
        side[v] = 2;
    }
    if side.iter().any(|&s| s == 0) {
        return false;
    }
    let mut expected: Vec<EdgeId> =
        (0..g.m()).filter(|&e| side[g.edge(e).0] != side[g.edge(e).1]).collect();
    let mut given = mc.cut_edges.clone();
    expected.sort_unstable();
    given.sort_unstable();
    if expected != given {
        return false;
    }
    let mut touched = vec![false; n];
    for &e in &given {
        let (u, v) = g.edge(e);
        if touched[u] || touched[v] {
            return false;
        }
        touched[u] = true;
        touched[v] = true;
    }
    is_supercycle(g, &mc.side_a) && is_supercycle(g, &mc.side_b)
}

fn absorb(g: &Graph) -> Option<MCut> {
    let n = g.n();
    let mut in_a = vec![false; n];
    for v in find_supercycle(g).ok()? {
        in_a[v] = true;
    }
    // Absorb common neighbours of cut edges, lowest id first.
    loop {
        let next = (0..n).find(|&v| !in_a[v] && g.neighbors(v).iter().filter(|&&w| in_a[w]).count() >= 2);
        match next {
            Some(v) => in_a[v] = true,
            None => break,
        }
    }
    let rest: Vec<VertexId> = (0..n).filter(|&v| !in_a[v]).collect();
    if rest.is_empty() {
        return None;
    }
    let h = g.induced(&rest);
    let comps: Vec<Vec<VertexId>> =
        h.components().into_iter().map(|c| c.into_iter().map(|k| rest[k]).collect()).collect();
    let score = |c: &Vec<VertexId>| {
        let cut = c
            .iter()
            .map(|&v| g.neighbors(v).iter().filter(|&&w| in_a[w]).count())
            .sum::<usize>();
        c.len() as i64 - cut as i64
    };
    let best = comps
        .iter()
        .enumerate()
        .max_by(|(i, a), (j, b)| score(a).cmp(&score(b)).then(comps[*j][0].cmp(&comps[*i][0])))
        .map(|(i, _)| i)?;
    for (i, c) in comps.iter().enumerate() {
        if i != best {
            for &v in c {
                in_a[v] = true;
            }
        }
    }
    Some(make_cut(g, &in_a))
}

fn exhaustive(g: &Graph) -> Option<MCut> {
    let n = g.n();
    let budget = n / 2;
    // Vertex 0 stays on side A; every bipartition is visited once.
    for mask in 0u64..(1u64 << (n - 1)) {
        let mut in_a = vec![false; n];
        in_a[0] = true;
        for v in 1..n {
            in_a[v] = mask >> (v - 1) & 1 == 0;
        }
        let cut = cut_between(g, &in_a);
        if cut.is_empty() || cut.len() > budget {
            continue;
        }
        let mc = make_cut(g, &in_a);
        if is_suitable_mcut(g, &mc) {
            return Some(mc);
        }
    }
    None
}

pub fn find_suitable_mcut(g: &Graph) -> Result<MCut, MCutError> {
    if !g.is_cubic() || !g.is_connected() {
        return Err(MCutError::NotCubic);
    }
    if let Some(mc) = absorb(g) {
        if is_suitable_mcut(g, &mc) {
            return Ok(mc);
        }
    }
    if g.n() < EXHAUSTIVE_LIMIT {
        if let Some(mc) = exhaustive(g) {
            return Ok(mc);
        }
    }
    Err(MCutError::NotFound)
}
