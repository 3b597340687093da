//! Seeded random instances for tests and benchmarks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::coords::Rat;
use crate::graph::{bridges, Graph, VertexId};
use crate::solver::LinearFormSystem;

/// Connected graph on `n ≥ 2` vertices with maximum degree three that is
/// neither a cycle nor cubic.
pub fn random_subcubic<R: Rng>(n: usize, rng: &mut R) -> Graph {
    assert!(n >= 2);
    loop {
        let mut deg = vec![0usize; n];
        let mut edges = Vec::new();
        for v in 1..n {
            let open: Vec<VertexId> = (0..v).filter(|&u| deg[u] < 3).collect();
            let u = *open.choose(rng).expect("a tree of max degree three has a free slot");
            edges.push((u, v));
            deg[u] += 1;
            deg[v] += 1;
        }
        let extra = rng.gen_range(0..=n / 2 + 1);
        for _ in 0..extra {
            let open: Vec<VertexId> = (0..n).filter(|&u| deg[u] < 3).collect();
            if open.len() < 2 {
                break;
            }
            let a = *open.choose(rng).unwrap();
            let b = *open.choose(rng).unwrap();
            if a == b || edges.contains(&(a.min(b), a.max(b))) {
                continue;
            }
            edges.push((a.min(b), a.max(b)));
            deg[a] += 1;
            deg[b] += 1;
        }
        let g = Graph::new(n, &edges).expect("simple graph");
        if !g.is_cycle() && !g.is_cubic() {
            return g;
        }
    }
}

/// Uniform-ish random cubic graph on an even `n ≥ 4` by the pairing model,
/// rejecting loops, multi-edges and disconnected results.
pub fn random_cubic<R: Rng>(n: usize, rng: &mut R) -> Graph {
    assert!(n >= 4 && n % 2 == 0);
    'outer: loop {
        let mut points: Vec<VertexId> = (0..3 * n).map(|i| i / 3).collect();
        points.shuffle(rng);
        let mut edges = Vec::with_capacity(3 * n / 2);
        for pair in points.chunks(2) {
            let (a, b) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if a == b || edges.contains(&(a, b)) {
                continue 'outer;
            }
            edges.push((a, b));
        }
        let g = Graph::new(n, &edges).expect("simple graph");
        if g.is_connected() {
            return g;
        }
    }
}

/// Random connected cubic graph without bridges and triangles; `n ≥ 6`.
pub fn random_bridgeless_triangle_free_cubic<R: Rng>(n: usize, rng: &mut R) -> Graph {
    assert!(n >= 6 && n % 2 == 0);
    loop {
        let g = random_cubic(n, rng);
        if !g.has_triangle() && bridges(&g).is_empty() {
            return g;
        }
    }
}

/// Random system of `n` linear forms with non-negative coefficients where
/// every node is reachable from the constant, by planting a random
/// spanning arborescence and adding sparse extra entries.
pub fn random_linear_system<R: Rng>(n: usize, rng: &mut R) -> LinearFormSystem {
    let zero = Rat::from_integer(0.into());
    let mut a0 = vec![zero.clone(); n];
    let mut a = vec![vec![zero; n]; n];
    let coeff = |rng: &mut R| Rat::new(rng.gen_range(1..=9).into(), rng.gen_range(1..=4).into());
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    a0[order[0]] = coeff(rng);
    for k in 1..n {
        let j = order[rng.gen_range(0..k)];
        a[order[k]][j] = coeff(rng);
    }
    for i in 0..n {
        if rng.gen_bool(0.2) {
            a0[i] = coeff(rng);
        }
        for j in 0..n {
            if i != j && rng.gen_bool(1.5 / n as f64) {
                a[i][j] = coeff(rng);
            }
        }
    }
    LinearFormSystem::new(a0, a).expect("non-negative square system")
}

/// As [`random_linear_system`] with node `victim` cut off from the
/// constant: nothing reachable points into it.
pub fn random_linear_system_with_unreachable<R: Rng>(n: usize, rng: &mut R) -> (LinearFormSystem, usize) {
    let sys = random_linear_system(n, rng);
    let victim = rng.gen_range(0..n);
    let zero = Rat::from_integer(0.into());
    let mut a0 = sys.constants().to_vec();
    let mut a: Vec<Vec<Rat>> = sys.matrix().to_vec();
    a0[victim] = zero.clone();
    for j in 0..n {
        if j != victim {
            a[victim][j] = zero.clone();
        }
    }
    (LinearFormSystem::new(a0, a).expect("non-negative square system"), victim)
}
