use num_traits::{One, Signed, Zero};

use crate::coords::{compare, ExactCoord, Point, Rat};
use crate::drawing::Drawing;
use crate::slope::SlopeSet;
use crate::solver::{LinearFormSystem, SolverSolution};

use super::{check_conditions, CycleSystem, MatchingDrawError};

/// Left-to-right order of the vertical lines and what sits in each gap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineLayout {
    pub order: Vec<usize>,
    /// Gap `k` lies between `order[k]` and `order[k+1]`: the cycle whose
    /// distinguished edge spans it, or `None` for a unit gap.
    pub gaps: Vec<Option<usize>>,
}

impl LineLayout {
    fn position(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (k, &l) in self.order.iter().enumerate() {
            pos[l] = k;
        }
        pos
    }
}

/// Orders the lines component by component and writes the rise of every
/// cycle's climbing path as a linear form in the distinguished gaps.
pub fn build_linear_forms(cs: &CycleSystem) -> Result<(LinearFormSystem, LineLayout), MatchingDrawError> {
    let comps = check_conditions(cs)?;
    let lines = cs.matching.len();
    let mut order: Vec<usize> = comps.iter().flat_map(|(_, o)| o.iter().copied()).collect();
    let mut placed = vec![false; lines];
    for &l in &order {
        placed[l] = true;
    }
    order.extend((0..lines).filter(|&l| !placed[l]));

    let k = cs.cycles.len();
    let mut gaps = vec![None; lines.saturating_sub(1)];
    let mut lay = LineLayout { order, gaps: Vec::new() };
    let pos = lay.position();
    for c in 0..k {
        let (a, b) = cs.distinguished_lines(c).expect("checked above");
        let (p, q) = (pos[a].min(pos[b]), pos[a].max(pos[b]));
        debug_assert_eq!(q, p + 1);
        gaps[p] = Some(c);
    }
    lay.gaps = gaps;

    let mut a0 = vec![Rat::zero(); k];
    let mut a = vec![vec![Rat::zero(); k]; k];
    for c in 0..k {
        let d = cs.distinguished[c].expect("checked above");
        for i in (0..cs.cycles[c].len()).filter(|&i| i != d) {
            let (u, v) = cs.edge_lines(c, i);
            let (p, q) = (pos[u].min(pos[v]), pos[u].max(pos[v]));
            for gap in &lay.gaps[p..q] {
                match gap {
                    Some(j) => a[c][*j] += Rat::one(),
                    None => a0[c] += Rat::one(),
                }
            }
        }
    }
    Ok((LinearFormSystem::new(a0, a)?, lay))
}

/// Places the lines at the solved gaps and stacks the cycles upwards, each
/// climbing from the left end of its distinguished edge to the right end.
pub fn layout(cs: &CycleSystem, lines: &LineLayout, sol: &SolverSolution) -> Drawing {
    let mut xs = vec![Rat::zero(); lines.order.len()];
    let mut x = Rat::zero();
    for (k, &l) in lines.order.iter().enumerate() {
        if k > 0 {
            x += match lines.gaps[k - 1] {
                Some(j) => sol.x[j].clone(),
                None => Rat::one(),
            };
        }
        xs[l] = x.clone();
    }
    let at = |v: usize| xs[cs.line_of[v]].clone();

    let mut points = vec![Point::ints(0, 0); cs.line_of.len()];
    let mut base = Rat::zero();
    for (c, cyc) in cs.cycles.iter().enumerate() {
        let n = cyc.len();
        let d = cs.distinguished[c].expect("distinguished edges chosen");
        let (u, v) = (cyc[d], cyc[(d + 1) % n]);
        // Walk away from the distinguished edge, starting on its left end.
        let path: Vec<usize> = if at(u) < at(v) {
            (0..n).map(|s| cyc[(d + n - s) % n]).collect()
        } else {
            (0..n).map(|s| cyc[(d + 1 + s) % n]).collect()
        };
        let mut y = base.clone();
        let mut prev_x = at(path[0]);
        for &w in &path {
            let wx = at(w);
            y += (&wx - &prev_x).abs();
            prev_x = wx.clone();
            points[w] = Point::new(ExactCoord::from_rat(wx), ExactCoord::from_rat(y.clone()));
        }
        base = y + Rat::one();
    }
    debug_assert!(points.iter().all(|p| compare(&p.y, &ExactCoord::zero()).is_ge()));
    Drawing::new(points, SlopeSet::matching(&sol.common_value))
}
