//! Independent certification of drawings and slope sets.

mod conditions;
mod slopeset;

pub use conditions::{check_low_degree_conditions, check_support, ConditionViolation};
pub use slopeset::{slope_set_is_good, GoodSetWitness, SlopeSetError};

use std::collections::HashMap;

use num_traits::Zero;
use serde_json::{json, Value};
use thiserror::Error;

use crate::coords::{segment_slope_class, strictly_between, ExactCoord, Point, Rat, SlopeClass};
use crate::graph::{Graph, VertexId};
use crate::slope::SlopeSet;

/// First violated clause of the drawing definition, with witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("drawing has {got} points for {expected} vertices")]
    PointCount { expected: usize, got: usize },
    #[error("vertices {0} and {1} share a point")]
    DuplicatePoint(VertexId, VertexId),
    #[error("edge {0}-{1} has a slope outside the declared set")]
    SlopeNotInSet(VertexId, VertexId),
    #[error("vertex {vertex} lies inside edge {u}-{v}")]
    VertexOnEdge { vertex: VertexId, u: VertexId, v: VertexId },
}

impl Violation {
    pub fn clause(&self) -> &'static str {
        match self {
            Violation::PointCount { .. } => "points",
            Violation::DuplicatePoint(..) => "distinct",
            Violation::SlopeNotInSet(..) => "slope",
            Violation::VertexOnEdge { .. } => "interior",
        }
    }

    pub fn to_json(&self) -> Value {
        let witness = match self {
            Violation::PointCount { expected, got } => json!({"expected": expected, "got": got}),
            Violation::DuplicatePoint(a, b) => json!({"vertices": [a, b]}),
            Violation::SlopeNotInSet(u, v) => json!({"edge": [u, v]}),
            Violation::VertexOnEdge { vertex, u, v } => json!({"vertex": vertex, "edge": [u, v]}),
        };
        json!({"clause": self.clause(), "message": self.to_string(), "witness": witness})
    }
}

/// Checks that the points are distinct, every edge has a slope in `slopes`
/// and no vertex lies in the open interior of an edge.
pub fn verify_drawing(g: &Graph, points: &[Point], slopes: &SlopeSet) -> Result<(), Violation> {
    if points.len() != g.n() {
        return Err(Violation::PointCount { expected: g.n(), got: points.len() });
    }
    let mut seen: HashMap<&Point, VertexId> = HashMap::with_capacity(points.len());
    for (v, p) in points.iter().enumerate() {
        if let Some(&u) = seen.get(p) {
            return Err(Violation::DuplicatePoint(u, v));
        }
        seen.insert(p, v);
    }
    let slope_list = slopes.as_slice();
    let mut edge_slope = Vec::with_capacity(g.m());
    for &(u, v) in g.edges() {
        let dx = &points[v].x - &points[u].x;
        let dy = &points[v].y - &points[u].y;
        match slope_list.iter().position(|s| s.matches(&dx, &dy)) {
            Some(k) => edge_slope.push(k),
            None => return Err(Violation::SlopeNotInSet(u, v)),
        }
    }
    // Vertices on a common line of slope s share the key of that line.
    let mut lines: HashMap<(usize, ExactCoord), Vec<VertexId>> = HashMap::new();
    let used: Vec<bool> = (0..slope_list.len()).map(|k| edge_slope.contains(&k)).collect();
    for (v, p) in points.iter().enumerate() {
        for (k, s) in slope_list.iter().enumerate() {
            if used[k] {
                lines.entry((k, s.line_key(p))).or_default().push(v);
            }
        }
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let k = edge_slope[e];
        let key = slope_list[k].line_key(&points[u]);
        for &w in &lines[&(k, key)] {
            if w != u && w != v && strictly_between(&points[w], &points[u], &points[v]) {
                return Err(Violation::VertexOnEdge { vertex: w, u, v });
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DependenceError {
    #[error("edge {0} of the cycle is not E, NE or NW")]
    SlopeOutOfRange(usize),
    #[error("cycle needs at least three points")]
    TooShort,
}

/// Certificate `Σ cᵢ·xᵢ = 0` for a closed polygon drawn with slopes in
/// `{E, NE, NW}`; `cᵢ` is nonzero exactly at turning points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DependenceCertificate {
    pub coefficients: Vec<Rat>,
    pub turning_points: Vec<usize>,
}

pub fn check_cycle_slope_dependence(points: &[Point]) -> Result<DependenceCertificate, DependenceError> {
    let k = points.len();
    if k < 3 {
        return Err(DependenceError::TooShort);
    }
    let mut lambda = Vec::with_capacity(k);
    for i in 0..k {
        let class = segment_slope_class(&points[i], &points[(i + 1) % k])
            .map_err(|_| DependenceError::SlopeOutOfRange(i))?;
        lambda.push(match class {
            SlopeClass::E => 0i64,
            SlopeClass::NE => 1,
            SlopeClass::NW => -1,
            _ => return Err(DependenceError::SlopeOutOfRange(i)),
        });
    }
    let coefficients: Vec<Rat> =
        (0..k).map(|i| Rat::from_integer((lambda[(i + k - 1) % k] - lambda[i]).into())).collect();
    let sum = points
        .iter()
        .zip(&coefficients)
        .fold(ExactCoord::zero(), |acc, (p, c)| &acc + &p.x.scale(c));
    assert!(sum.is_zero(), "slope identity failed on a closed polygon");
    let turning_points = (0..k).filter(|&i| !coefficients[i].is_zero()).collect();
    Ok(DependenceCertificate { coefficients, turning_points })
}

/// The slopes the edges actually use, if all are rational.
pub fn used_slopes(g: &Graph, points: &[Point]) -> Option<SlopeSet> {
    let mut out = Vec::new();
    for &(u, v) in g.edges() {
        out.push(crate::slope::slope_of(&points[u], &points[v])?);
    }
    Some(SlopeSet::new(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;
    use crate::slope::tangent;

    #[test]
    fn interior_vertex_detected() {
        let g = Graph::new(3, &[(0, 2)]).unwrap();
        let pts = vec![Point::ints(0, 0), Point::ints(1, 1), Point::ints(2, 2)];
        assert_eq!(
            verify_drawing(&g, &pts, &SlopeSet::basic()),
            Err(Violation::VertexOnEdge { vertex: 1, u: 0, v: 2 })
        );
    }

    #[test]
    fn slope_outside_set() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let pts = vec![Point::ints(0, 0), Point::ints(1, 2)];
        assert_eq!(verify_drawing(&g, &pts, &SlopeSet::basic()), Err(Violation::SlopeNotInSet(0, 1)));
        let s = SlopeSet::new([tangent(2, 1)]);
        assert_eq!(verify_drawing(&g, &pts, &s), Ok(()));
    }

    #[test]
    fn unit_square_k4() {
        let pts = vec![Point::ints(0, 0), Point::ints(1, 0), Point::ints(1, 1), Point::ints(0, 1)];
        assert_eq!(verify_drawing(&named::complete4(), &pts, &SlopeSet::basic()), Ok(()));
        let dup = vec![Point::ints(0, 0), Point::ints(1, 0), Point::ints(1, 1), Point::ints(0, 0)];
        assert_eq!(
            verify_drawing(&named::complete4(), &dup, &SlopeSet::basic()),
            Err(Violation::DuplicatePoint(0, 3))
        );
    }

    #[test]
    fn triangle_certificate() {
        // (0,0) NE to (1,1), SE to (2,0), W back.
        let pts = vec![Point::ints(0, 0), Point::ints(1, 1), Point::ints(2, 0)];
        let cert = check_cycle_slope_dependence(&pts).unwrap();
        assert_eq!(cert.turning_points, vec![0, 1, 2]);
        let square = vec![Point::ints(0, 0), Point::ints(0, 1), Point::ints(1, 1)];
        assert_eq!(check_cycle_slope_dependence(&square), Err(DependenceError::SlopeOutOfRange(0)));
    }
}
