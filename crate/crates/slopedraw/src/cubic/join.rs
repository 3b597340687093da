use crate::coords::{ExactCoord, Point};
use crate::drawing::Drawing;
use crate::graph::{is_suitable_mcut, EdgeId, Graph, MCut, VertexId};
use crate::slope::SlopeSet;
use crate::subcubic::embed_prescribed;
use crate::verify::verify_drawing;

use super::{max_y, min_y, place, shift, CubicError};

/// A bridge or a minimal 2-edge cut of a connected cubic graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitCut {
    Bridge(EdgeId),
    TwoEdge(EdgeId, EdgeId),
}

/// Draws both sides of the cut separately, turns the second upside down and
/// puts it above the first so that the cut edges are vertical.
pub fn split_and_join(g: &Graph, cut: SplitCut) -> Result<Drawing, CubicError> {
    let edges = match cut {
        SplitCut::Bridge(e) => vec![e],
        SplitCut::TwoEdge(e, f) => {
            let (a, b) = g.edge(e);
            let (c, d) = g.edge(f);
            if a == c || a == d || b == c || b == d {
                return Err(CubicError::Precondition("a minimal 2-edge cut is vertex-disjoint".into()));
            }
            vec![e, f]
        }
    };
    let comps = g.components_avoiding(&edges);
    if comps.len() != 2 {
        return Err(CubicError::Precondition("the cut must separate the graph into two sides".into()));
    }
    join(g, &comps[0], &edges)
}

/// Draws the two sides of a suitable M-cut with opposite x-coordinates on
/// the cut vertices and joins them with vertical edges.
pub fn assemble_mcut_drawing(g: &Graph, mc: &MCut) -> Result<Drawing, CubicError> {
    if !is_suitable_mcut(g, mc) {
        return Err(CubicError::Precondition("the M-cut is not suitable".into()));
    }
    join(g, &mc.side_a, &mc.cut_edges)
}

/// Shared by both cut types: cut vertex `aᵢ` on side A gets `ξᵢ`, its
/// partner `bᵢ` gets `−ξᵢ`, and side B is rotated by π so both sit on the
/// line `x = ξᵢ`.
fn join(g: &Graph, side_a: &[VertexId], cut: &[EdgeId]) -> Result<Drawing, CubicError> {
    let mut in_a = vec![false; g.n()];
    for &v in side_a {
        in_a[v] = true;
    }
    let side_b: Vec<VertexId> = (0..g.n()).filter(|&v| !in_a[v]).collect();
    let mut px_a = vec![None; g.n()];
    let mut px_b = vec![None; g.n()];
    for (i, &e) in cut.iter().enumerate() {
        let (u, v) = g.edge(e);
        let (a, b) = if in_a[u] { (u, v) } else { (v, u) };
        if in_a[b] || px_a[a].is_some() || px_b[b].is_some() {
            return Err(CubicError::Precondition("cut edges must form a matching between the sides".into()));
        }
        let xi = ExactCoord::xi(i as u32 + 1);
        px_b[b] = Some(-&xi);
        px_a[a] = Some(xi);
    }
    // Vertices of degree below three in g itself also need coordinates.
    let mut next = cut.len() as u32 + 1;
    for v in 0..g.n() {
        let px = if in_a[v] { &mut px_a } else { &mut px_b };
        if g.degree(v) < 3 && px[v].is_none() {
            px[v] = Some(ExactCoord::xi(next));
            next += 1;
        }
    }
    let draw_side = |side: &[VertexId], px: &[Option<ExactCoord>]| {
        let h = g.induced(side);
        let local: Vec<Option<ExactCoord>> = side.iter().map(|&v| px[v].clone()).collect();
        embed_prescribed(&h, &local).map_err(|e| CubicError::Failed(format!("side of the cut: {e}")))
    };
    let pa = draw_side(side_a, &px_a)?;
    let mut pb: Vec<Point> = draw_side(&side_b, &px_b)?.into_iter().map(|p| Point::new(-&p.x, -&p.y)).collect();
    let dy = &(&max_y(&pa) - &min_y(&pb)) + &ExactCoord::int(1);
    shift(&mut pb, &ExactCoord::zero(), &dy);
    let mut out = vec![None; g.n()];
    place(&mut out, side_a, pa);
    place(&mut out, &side_b, pb);
    let points: Vec<Point> = out.into_iter().map(|p| p.expect("both sides cover the graph")).collect();
    let slopes = SlopeSet::basic();
    verify_drawing(g, &points, &slopes).map_err(|v| CubicError::Failed(format!("joined drawing: {v}")))?;
    Ok(Drawing::new(points, slopes))
}
