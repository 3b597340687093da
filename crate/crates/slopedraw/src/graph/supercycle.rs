use std::collections::{HashMap, VecDeque};

use num_bigint::BigInt;
use thiserror::Error;

use super::{EdgeId, Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GirthError {
    #[error("graph is acyclic")]
    Acyclic,
    #[error("graph is not cubic")]
    NotCubic,
    #[error("graph is not connected")]
    Disconnected,
}

/// `⌈log₂(num/den)⌉` for positive integers, computed exactly.
pub fn ceil_log2_ratio(num: u64, den: u64) -> i64 {
    assert!(num > 0 && den > 0);
    let (num, den) = (BigInt::from(num), BigInt::from(den));
    // Smallest k with num <= den·2^k.
    let holds = |k: i64| {
        if k >= 0 {
            num <= den.clone() << (k as usize)
        } else {
            num.clone() << ((-k) as usize) <= den
        }
    };
    let mut k = 0i64;
    while !holds(k) {
        k += 1;
    }
    while holds(k - 1) {
        k -= 1;
    }
    k
}

/// Largest girth a connected cubic graph on `n` vertices can have.
pub fn moore_bound(n: usize) -> usize {
    (2 * ceil_log2_ratio(n as u64 + 3, 3)) as usize
}

/// Size bound on the supercycle found from a girth-`g` cycle.
pub fn supercycle_bound(n: usize, g: usize) -> usize {
    (2 * ceil_log2_ratio(n as u64 + 1, g as u64) + g as i64 - 1) as usize
}

/// One row of the bound table: `(N, 2s − 2, max girth, argmax girth)`.
pub fn supercycle_bound_table(n: usize) -> (i64, i64, i64, i64) {
    let mg = 2 * ceil_log2_ratio(n as u64 + 3, 3);
    let mut max: i64 = -1;
    let mut g: i64 = 0;
    if mg >= 3 {
        for i in 3..=mg {
            let exp = 2 * ceil_log2_ratio(n as u64 + 1, i as u64) + i - 1;
            if max < exp {
                max = exp;
                g = i;
            }
        }
    }
    (n as i64, 2 * max - 2, mg, g)
}

fn require_cubic(g: &Graph) -> Result<(), GirthError> {
    if !g.is_cubic() {
        return Err(GirthError::NotCubic);
    }
    if !g.is_connected() {
        return Err(GirthError::Disconnected);
    }
    Ok(())
}

/// Length of a shortest cycle, or `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    shortest_cycle(g).map(|c| c.len())
}

fn shortest_cycle(g: &Graph) -> Option<Vec<VertexId>> {
    let n = g.n();
    let mut best: Option<(usize, VertexId, VertexId, VertexId)> = None;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            if let Some((len, ..)) = best {
                if 2 * dist[u] + 1 >= len {
                    break;
                }
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    if best.map_or(true, |b| len < b.0) {
                        best = Some((len, s, u, w));
                    }
                }
            }
        }
    }
    let (_, s, u, w) = best?;
    // Rebuild the two BFS branches from s.
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    seen[s] = true;
    let mut queue = VecDeque::from([s]);
    while let Some(a) = queue.pop_front() {
        for &b in g.neighbors(a) {
            if !seen[b] {
                seen[b] = true;
                parent[b] = a;
                queue.push_back(b);
            }
        }
    }
    let branch = |mut x: VertexId| {
        let mut p = vec![x];
        while x != s {
            x = parent[x];
            p.push(x);
        }
        p
    };
    let a = branch(u);
    let b = branch(w);
    let mut cycle: Vec<VertexId> = a.into_iter().rev().collect();
    cycle.extend(&b[..b.len() - 1]);
    let mut dedup = cycle.clone();
    dedup.sort_unstable();
    dedup.dedup();
    if dedup.len() != cycle.len() {
        return None;
    }
    Some(cycle)
}

/// A shortest cycle of a connected cubic graph, as a vertex sequence.
pub fn girth_cycle(g: &Graph) -> Result<Vec<VertexId>, GirthError> {
    require_cubic(g)?;
    shortest_cycle(g).ok_or(GirthError::Acyclic)
}

/// Whether `set` induces a connected subgraph with minimum degree at least
/// two and some vertex of degree three.
pub fn is_supercycle(g: &Graph, set: &[VertexId]) -> bool {
    if set.is_empty() {
        return false;
    }
    let h = g.induced(set);
    h.is_connected() && (0..h.n()).all(|v| h.degree(v) >= 2) && (0..h.n()).any(|v| h.degree(v) == 3)
}

/// A small supercycle: contract a girth cycle to one node, grow a BFS tree
/// in the resulting multigraph until an edge closes a cycle, then expand.
pub fn find_supercycle(g: &Graph) -> Result<Vec<VertexId>, GirthError> {
    let cycle = girth_cycle(g)?;
    let n = g.n();
    let mut on_cycle = vec![false; n];
    for &v in &cycle {
        on_cycle[v] = true;
    }
    // Node usize::MAX is the contracted cycle.
    const ROOT: usize = usize::MAX;
    let node = |v: VertexId| if on_cycle[v] { ROOT } else { v };
    let root_edges: Vec<EdgeId> = (0..g.m())
        .filter(|&e| {
            let (a, b) = g.edge(e);
            on_cycle[a] != on_cycle[b]
        })
        .collect();
    let mut parent_edge: HashMap<usize, EdgeId> = HashMap::new();
    let mut visited: HashMap<usize, bool> = HashMap::new();
    visited.insert(ROOT, true);
    let mut queue = VecDeque::from([ROOT]);
    let mut closing: Option<(usize, usize)> = None;
    'bfs: while let Some(u) = queue.pop_front() {
        let edges: Vec<EdgeId> = if u == ROOT {
            root_edges.clone()
        } else {
            let mut es: Vec<EdgeId> = g.neighbors(u).iter().map(|&w| g.edge_id(u, w).unwrap()).collect();
            es.sort_unstable();
            es
        };
        for e in edges {
            if parent_edge.get(&u) == Some(&e) {
                continue;
            }
            let (a, b) = g.edge(e);
            let other = if u == ROOT {
                if on_cycle[a] { b } else { a }
            } else if a == u {
                b
            } else {
                a
            };
            let w = node(other);
            if w == u {
                continue;
            }
            if visited.contains_key(&w) {
                closing = Some((u, w));
                break 'bfs;
            }
            visited.insert(w, true);
            parent_edge.insert(w, e);
            queue.push_back(w);
        }
    }
    let (x, y) = closing.ok_or(GirthError::Acyclic)?;
    let mut set: Vec<VertexId> = cycle.clone();
    for start in [x, y] {
        let mut cur = start;
        while cur != ROOT {
            set.push(cur);
            let (a, b) = g.edge(parent_edge[&cur]);
            cur = node(if a == cur { b } else { a });
        }
    }
    set.sort_unstable();
    set.dedup();
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::super::named;
    use super::*;

    #[test]
    fn exact_ceil_log2() {
        assert_eq!(ceil_log2_ratio(1, 1), 0);
        assert_eq!(ceil_log2_ratio(8, 1), 3);
        assert_eq!(ceil_log2_ratio(9, 1), 4);
        assert_eq!(ceil_log2_ratio(7, 3), 2);
        assert_eq!(ceil_log2_ratio(1, 2), -1);
        assert_eq!(ceil_log2_ratio(1, 3), -1);
        assert_eq!(ceil_log2_ratio(1, 4), -2);
        assert_eq!(ceil_log2_ratio(3, 4), 0);
    }

    #[test]
    fn bound_table_rows() {
        assert_eq!(supercycle_bound_table(6), (6, 10, 4, 3));
        assert_eq!(supercycle_bound_table(18), (18, 16, 6, 4));
        assert_eq!(supercycle_bound_table(42), (42, 24, 8, 8));
    }

    #[test]
    fn girths_of_named_graphs() {
        assert_eq!(girth_cycle(&named::complete4()).unwrap().len(), 3);
        assert_eq!(girth_cycle(&named::petersen()).unwrap().len(), 5);
        let h = named::heawood();
        assert_eq!(girth_cycle(&h).unwrap().len(), 6);
        assert_eq!(moore_bound(14), 6);
    }

    #[test]
    fn supercycles_of_named_graphs() {
        let k4 = named::complete4();
        assert_eq!(find_supercycle(&k4).unwrap(), vec![0, 1, 2, 3]);
        let p = named::petersen();
        let s = find_supercycle(&p).unwrap();
        assert!(is_supercycle(&p, &s));
        assert!(s.len() <= supercycle_bound(10, 5));
    }

    #[test]
    fn rejects_non_cubic() {
        let dumbbell =
            Graph::new(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3)]).unwrap();
        assert_eq!(find_supercycle(&dumbbell), Err(GirthError::NotCubic));
    }
}
