//! Collects every connected cubic graph of a given order by sampling random
//! pairings until the known number of isomorphism classes is reached, then
//! prints them as sorted graph6 lines.
//!
//! `cargo run --release --example sample_corpus -- 14 509 > data/corpus/cubic_14.g6`

use std::collections::{HashMap, VecDeque};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use slopedraw::gen::random_cubic;
use slopedraw::graph::{find_isomorphism, Graph};
use slopedraw::io::to_graph6;

/// Sorted per-vertex BFS profiles: layer sizes plus the edges inside layers.
fn invariant(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut all: Vec<Vec<usize>> = (0..n)
        .map(|s| {
            let mut dist = vec![usize::MAX; n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in g.neighbors(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
                }
            }
            let mut profile = vec![0; n + 1];
            for &d in &dist {
                profile[d] += 1;
            }
            profile[n] = g.edges().iter().filter(|&&(a, b)| dist[a] == dist[b]).map(|&(a, _)| 1 + 100 * dist[a]).sum();
            profile
        })
        .collect();
    all.sort();
    all
}

fn main() {
    let mut args = std::env::args().skip(1);
    let usage = "usage: sample_corpus ORDER COUNT [SEED]";
    let n: usize = args.next().and_then(|a| a.parse().ok()).expect(usage);
    let target: usize = args.next().and_then(|a| a.parse().ok()).expect(usage);
    let seed: u64 = args.next().and_then(|a| a.parse().ok()).unwrap_or(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut classes: HashMap<Vec<Vec<usize>>, Vec<Graph>> = HashMap::new();
    let (mut found, mut draws) = (0, 0u64);
    while found < target {
        draws += 1;
        let g = random_cubic(n, &mut rng);
        let bucket = classes.entry(invariant(&g)).or_default();
        if bucket.iter().all(|h| find_isomorphism(&g, h).is_none()) {
            bucket.push(g);
            found += 1;
        }
    }
    let mut lines: Vec<String> = classes.values().flatten().map(to_graph6).collect();
    lines.sort();
    for l in lines {
        println!("{l}");
    }
    eprintln!("{found} classes after {draws} draws");
}
