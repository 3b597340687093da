//! Four-slope drawings of bridgeless, triangle-free cubic graphs.
//!
//! A perfect matching is drawn on vertical lines. What remains is a set of
//! disjoint cycles; each cycle loses one distinguished edge and the rest of
//! it climbs from line to line with slopes 1 and −1. The distinguished edge
//! joins two adjacent lines, and the gaps between lines are solved for so
//! that all distinguished edges get the same slope `c > 1`.

mod conditions;
mod layout;
mod select;

pub use conditions::{check_conditions, ConditionError};
pub use layout::{build_linear_forms, layout, LineLayout};
pub use select::select_distinguished_edges;

use thiserror::Error;

use crate::coords::Rat;
use crate::drawing::Drawing;
use crate::graph::{perfect_matching, EdgeId, Graph, VertexId};
use crate::solver::{solve_equal_ratios, SolverError};
use crate::verify::verify_drawing;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingDrawError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("the complement of the matching has a triangle through vertex {0}")]
    TriangleFound(VertexId),
    #[error("distinguished edges violate the conditions: {0}")]
    Conditions(#[from] ConditionError),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error("drawing rejected by the verifier: {0}")]
    Rejected(String),
}

/// The cycles left after removing a perfect matching, and the chosen
/// distinguished edge of each.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleSystem {
    /// Matching edges; the index of an edge here names its vertical line.
    pub matching: Vec<EdgeId>,
    /// Line of each vertex.
    pub line_of: Vec<usize>,
    /// Each cycle as a cyclic vertex sequence.
    pub cycles: Vec<Vec<VertexId>>,
    /// Position `i` in a cycle names its edge from entry `i` to entry `i+1`.
    pub distinguished: Vec<Option<usize>>,
}

impl CycleSystem {
    /// The cycle as its cyclic sequence of lines.
    pub fn lines(&self, c: usize) -> Vec<usize> {
        self.cycles[c].iter().map(|&v| self.line_of[v]).collect()
    }

    /// The two lines at the ends of edge `i` of cycle `c`.
    pub fn edge_lines(&self, c: usize, i: usize) -> (usize, usize) {
        let cyc = &self.cycles[c];
        (self.line_of[cyc[i]], self.line_of[cyc[(i + 1) % cyc.len()]])
    }

    /// Distinguished matching edges of cycle `c`.
    pub fn distinguished_lines(&self, c: usize) -> Option<(usize, usize)> {
        self.distinguished[c].map(|i| self.edge_lines(c, i))
    }
}

/// Splits `E(g) ∖ matching` into cycles. Fails on a triangle.
pub fn decompose_cycles(g: &Graph, matching: &[EdgeId]) -> Result<CycleSystem, MatchingDrawError> {
    if !g.is_cubic() {
        return Err(MatchingDrawError::Precondition("graph must be cubic".into()));
    }
    let mut line_of = vec![usize::MAX; g.n()];
    for (i, &e) in matching.iter().enumerate() {
        let (u, v) = g.edge(e);
        if line_of[u] != usize::MAX || line_of[v] != usize::MAX {
            return Err(MatchingDrawError::Precondition("matching edges share a vertex".into()));
        }
        line_of[u] = i;
        line_of[v] = i;
    }
    if let Some(v) = line_of.iter().position(|&l| l == usize::MAX) {
        return Err(MatchingDrawError::Precondition(format!("vertex {v} is not matched")));
    }
    let mate = |v: VertexId| {
        let (a, b) = g.edge(matching[line_of[v]]);
        if a == v {
            b
        } else {
            a
        }
    };
    let mut seen = vec![false; g.n()];
    let mut cycles = Vec::new();
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        let mut cyc = vec![s];
        seen[s] = true;
        let (mut prev, mut cur) = (s, s);
        loop {
            let next = *g
                .neighbors(cur)
                .iter()
                .filter(|&&w| w != mate(cur) && w != prev)
                .min()
                .expect("two non-matching edges at every vertex");
            if next == s {
                break;
            }
            seen[next] = true;
            cyc.push(next);
            prev = cur;
            cur = next;
        }
        if cyc.len() == 3 {
            return Err(MatchingDrawError::TriangleFound(cyc[0]));
        }
        cycles.push(cyc);
    }
    let k = cycles.len();
    Ok(CycleSystem { matching: matching.to_vec(), line_of, cycles, distinguished: vec![None; k] })
}

/// The whole pipeline: matching, cycles, distinguished edges, gaps, drawing,
/// verification.
pub fn draw_four_slopes(g: &Graph) -> Result<Drawing, MatchingDrawError> {
    draw_four_slopes_with(g, None)
}

/// As [`draw_four_slopes`] with the common slope `c` of the distinguished
/// edges fixed in advance. It must exceed the spectral radius of the gap
/// system.
pub fn draw_four_slopes_with(g: &Graph, c: Option<Rat>) -> Result<Drawing, MatchingDrawError> {
    if !g.is_connected() {
        return Err(MatchingDrawError::Precondition("graph must be connected".into()));
    }
    if g.has_triangle() {
        return Err(MatchingDrawError::Precondition("graph has a triangle".into()));
    }
    let m = perfect_matching(g).map_err(|e| MatchingDrawError::Precondition(e.to_string()))?;
    let cs = select_distinguished_edges(&decompose_cycles(g, &m)?)?;
    let (sys, lines) = build_linear_forms(&cs)?;
    let sol = solve_equal_ratios(&sys, c)?;
    let d = layout(&cs, &lines, &sol);
    verify_drawing(g, &d.points, &d.slopes).map_err(|v| MatchingDrawError::Rejected(v.to_string()))?;
    Ok(d)
}
