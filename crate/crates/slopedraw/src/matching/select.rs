//! Choosing the distinguished edges by walking from cycle to cycle through
//! shared matching edges.

use super::{check_conditions, CycleSystem, MatchingDrawError};

/// A position in a cycle: `(cycle, index)`.
type Slot = (usize, usize);

/// Rounds of walks, each growing one component of the cycle-connectivity
/// graph in both directions from a starting edge. The walk stops at any
/// cycle already visited. Ties go to the lowest cycle and position.
pub fn select_distinguished_edges(cs: &CycleSystem) -> Result<CycleSystem, MatchingDrawError> {
    let mut out = cs.clone();
    let k = cs.cycles.len();
    let lines = cs.matching.len();
    let mut occ: Vec<Vec<Slot>> = vec![Vec::new(); lines];
    for (c, cyc) in cs.cycles.iter().enumerate() {
        for (i, &v) in cyc.iter().enumerate() {
            occ[cs.line_of[v]].push((c, i));
        }
    }
    let other = |line: usize, from: Slot| -> Slot {
        let o = &occ[line];
        if o[0] == from {
            o[1]
        } else {
            o[0]
        }
    };
    let len = |c: usize| cs.cycles[c].len();
    let line_at = |(c, i): Slot| cs.line_of[cs.cycles[c][i]];

    let mut visited = vec![false; k];
    for start in 0..k {
        if visited[start] {
            continue;
        }
        // Starting edge: one end line should continue into another cycle,
        // preferably a fresh one.
        let n = len(start);
        let mut pick: Option<(usize, Slot, Slot, u8)> = None;
        for i in 0..n {
            let (a, b) = ((start, i), (start, (i + 1) % n));
            for (y, z) in [(b, a), (a, b)] {
                let (c, _) = other(line_at(y), y);
                let rank = if c != start && !visited[c] { 0 } else if c != start { 1 } else { 2 };
                if pick.map_or(true, |p| rank < p.3) {
                    pick = Some((i, y, z, rank));
                }
            }
        }
        let (i, y, z, _) = pick.expect("a cycle has edges");
        out.distinguished[start] = Some(i);
        visited[start] = true;

        let z_line = line_at(z);
        let y_end = walk(&mut out, &mut visited, y, Some(z_line), &other, &line_at)?;
        walk(&mut out, &mut visited, z, Some(y_end), &other, &line_at)?;
    }
    check_conditions(&out)?;
    Ok(out)
}

/// Continues from the line at `from` into the cycle holding its other
/// occurrence, never closing onto `avoid`. Returns the last line reached.
fn walk(
    out: &mut CycleSystem,
    visited: &mut [bool],
    mut from: Slot,
    avoid: Option<usize>,
    other: &dyn Fn(usize, Slot) -> Slot,
    line_at: &dyn Fn(Slot) -> usize,
) -> Result<usize, MatchingDrawError> {
    loop {
        let line = line_at(from);
        let (c, p) = other(line, from);
        if visited[c] {
            return Ok(line);
        }
        let n = out.cycles[c].len();
        let fwd = (p, (c, (p + 1) % n));
        let back = ((p + n - 1) % n, (c, (p + n - 1) % n));
        let mut options = [fwd, back];
        options.sort_by_key(|o| o.0);
        let (edge, next) = options
            .into_iter()
            .find(|&(_, s)| Some(line_at(s)) != avoid)
            .ok_or_else(|| MatchingDrawError::Precondition("walk closed a cycle of distinguished edges".into()))?;
        out.distinguished[c] = Some(edge);
        visited[c] = true;
        from = next;
    }
}
