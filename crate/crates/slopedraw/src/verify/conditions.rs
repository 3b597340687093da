use std::collections::{BTreeSet, HashMap};

use thiserror::Error;

use super::{verify_drawing, Violation};
use crate::coords::{compare, ExactCoord, Point};
use crate::graph::{Graph, VertexId};
use crate::slope::SlopeSet;

/// Postconditions of the basic-slope embedding of a graph with low-degree
/// vertices.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConditionViolation {
    #[error("invalid drawing: {0}")]
    Drawing(Violation),
    #[error("vertex {0} is not at its prescribed x-coordinate")]
    PrescribedX(VertexId),
    #[error("vertex {above} lies North of degree-two vertex {vertex}")]
    NorthOfLowDegree { vertex: VertexId, above: VertexId },
    #[error("vertex {above} lies Northwest of degree-one vertex {vertex}")]
    NorthwestOfDegreeOne { vertex: VertexId, above: VertexId },
    #[error("x-coordinate of vertex {vertex} uses basis index {index}")]
    Support { vertex: VertexId, index: u32 },
}

/// Checks a valid basic-slope drawing, prescribed
/// x-coordinates, nothing North of a vertex of degree at most two and
/// nothing Northwest of a vertex of degree at most one.
pub fn check_low_degree_conditions(
    g: &Graph,
    points: &[Point],
    prescribed: &[Option<ExactCoord>],
) -> Result<(), ConditionViolation> {
    verify_drawing(g, points, &SlopeSet::basic()).map_err(ConditionViolation::Drawing)?;
    for (v, x) in prescribed.iter().enumerate() {
        if let Some(x) = x {
            if points[v].x != *x {
                return Err(ConditionViolation::PrescribedX(v));
            }
        }
    }
    let mut by_x: HashMap<&ExactCoord, Vec<VertexId>> = HashMap::new();
    let mut by_diag: HashMap<ExactCoord, Vec<VertexId>> = HashMap::new();
    for (v, p) in points.iter().enumerate() {
        by_x.entry(&p.x).or_default().push(v);
        by_diag.entry(&p.x + &p.y).or_default().push(v);
    }
    for v in 0..g.n() {
        if g.degree(v) > 2 {
            continue;
        }
        let p = &points[v];
        for &u in &by_x[&p.x] {
            if u != v && compare(&points[u].y, &p.y).is_gt() {
                return Err(ConditionViolation::NorthOfLowDegree { vertex: v, above: u });
            }
        }
        if g.degree(v) <= 1 {
            for &u in &by_diag[&(&p.x + &p.y)] {
                if u != v && compare(&points[u].y, &p.y).is_gt() {
                    return Err(ConditionViolation::NorthwestOfDegreeOne { vertex: v, above: u });
                }
            }
        }
    }
    Ok(())
}

/// Every x-coordinate is a rational combination of the allowed
/// basis elements and the unit.
pub fn check_support(points: &[Point], allowed: &BTreeSet<u32>) -> Result<(), ConditionViolation> {
    for (v, p) in points.iter().enumerate() {
        for index in p.x.support() {
            if index != 0 && !allowed.contains(&index) {
                return Err(ConditionViolation::Support { vertex: v, index });
            }
        }
    }
    Ok(())
}
