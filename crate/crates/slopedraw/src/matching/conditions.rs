//! The path and covering conditions on distinguished edges, checked from
//! the cycle system alone.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use super::CycleSystem;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConditionError {
    #[error("cycle {0} has no distinguished edge")]
    Undistinguished(usize),
    #[error("component of cycle {0}: distinguished edges do not form a path")]
    NotAPath(usize),
    #[error("component of cycle {first}: cycles {cycles:?} lie inside the distinguished lines")]
    TooManyCovered { first: usize, cycles: Vec<usize> },
}

/// Components of the cycle-connectivity graph, each with the linear order
/// of its distinguished lines. Components are listed by smallest cycle id.
pub fn check_conditions(cs: &CycleSystem) -> Result<Vec<(Vec<usize>, Vec<usize>)>, ConditionError> {
    let k = cs.cycles.len();
    let mut pairs = Vec::with_capacity(k);
    for c in 0..k {
        pairs.push(cs.distinguished_lines(c).ok_or(ConditionError::Undistinguished(c))?);
    }

    // Cycles sharing a distinguished line, by repeated relabelling.
    let mut label: Vec<usize> = (0..k).collect();
    loop {
        let mut changed = false;
        for a in 0..k {
            for b in a + 1..k {
                let (p, q) = (pairs[a], pairs[b]);
                let share = p.0 == q.0 || p.0 == q.1 || p.1 == q.0 || p.1 == q.1;
                if share && label[a] != label[b] {
                    let m = label[a].min(label[b]);
                    label[a] = m;
                    label[b] = m;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let mut comps: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for c in 0..k {
        comps.entry(label[c]).or_default().push(c);
    }

    let mut out = Vec::with_capacity(comps.len());
    for (first, members) in comps {
        let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        let mut seen_pairs = BTreeSet::new();
        for &c in &members {
            let (a, b) = pairs[c];
            if !seen_pairs.insert((a.min(b), a.max(b))) {
                return Err(ConditionError::NotAPath(first));
            }
            adj.entry(a).or_default().push(b);
            adj.entry(b).or_default().push(a);
        }
        // A connected graph with one more vertex than edges and no vertex
        // of degree three is a path.
        if adj.len() != members.len() + 1 || adj.values().any(|n| n.len() > 2) {
            return Err(ConditionError::NotAPath(first));
        }
        let start = *adj.iter().find(|(_, n)| n.len() == 1).ok_or(ConditionError::NotAPath(first))?.0;
        let mut order = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while let Some(&next) = adj[&cur].iter().find(|&&w| w != prev) {
            order.push(next);
            prev = cur;
            cur = next;
        }
        if order.len() != adj.len() {
            return Err(ConditionError::NotAPath(first));
        }

        let dset: BTreeSet<usize> = order.iter().copied().collect();
        let covered: Vec<usize> =
            members.iter().copied().filter(|&c| cs.lines(c).iter().all(|l| dset.contains(l))).collect();
        if covered.len() > 1 {
            return Err(ConditionError::TooManyCovered { first, cycles: covered });
        }
        out.push((members, order));
    }
    Ok(out)
}
