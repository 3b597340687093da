use crate::coords::{compare, ExactCoord, Point};
use crate::graph::{Graph, VertexId};

use super::geom::{reflect_x_axis, se_at, w_at};
use super::{req, verified, Canvas, EmbedError};

/// Draws the cycle `v₀ v₁ … vₘ` with `x(vᵢ) = xs[i−1]` using E, NE and NW
/// edges only. The result is indexed like the cycle: `v₀` first. No vertex
/// is North of another, `v₀` has the largest y-coordinate, and `x(v₀)` is a
/// rational combination of `xs`.
///
/// `v₁` starts on the x-axis and each next vertex goes Southeast or West of
/// its predecessor; `v₀` closes the cycle where the Northeast ray from `vₘ`
/// meets the x-axis. If `x₂ < x₁` the mirror image is built.
pub fn embed_cycle(xs: &[ExactCoord]) -> Vec<Point> {
    assert!(xs.len() >= 2, "a cycle has at least three vertices");
    let flip = compare(&xs[1], &xs[0]).is_lt();
    let xs: Vec<ExactCoord> = if flip { xs.iter().map(|x| -x).collect() } else { xs.to_vec() };
    let mut path = Vec::with_capacity(xs.len());
    path.push(Point::new(xs[0].clone(), ExactCoord::zero()));
    for x in &xs[1..] {
        let last = path.last().unwrap();
        let next = if compare(x, &last.x).is_gt() { se_at(last, x) } else { w_at(last, x) };
        path.push(next);
    }
    let last = path.last().unwrap();
    let v0 = Point::new(&last.x - &last.y, ExactCoord::zero());
    let mut out = Vec::with_capacity(xs.len() + 1);
    out.push(v0);
    out.extend(path);
    if flip {
        for p in &mut out {
            p.x = -&p.x;
        }
    }
    out
}

/// Two disjoint cycles `C = v₀…vₘ` and `C′ = v₀′…vₖ′` joined by the edge
/// `v₀v₀′`. Each is drawn by [`embed_cycle`]; `C′` is turned upside down and
/// lifted so that `v₀′` is Northeast or Northwest of `v₀`.
pub fn embed_two_cycles_with_edge(xs: &[ExactCoord], xs2: &[ExactCoord]) -> (Vec<Point>, Vec<Point>) {
    let c1 = embed_cycle(xs);
    let mut c2 = embed_cycle(xs2);
    let dx = &c2[0].x - &c1[0].x;
    let rise = if dx.signum().is_lt() { -dx } else { dx };
    reflect_x_axis(&mut c2);
    let lift = &c1[0].y + &rise;
    super::geom::translate(&mut c2, &ExactCoord::zero(), &lift);
    (c1, c2)
}

/// Cyclic order of a cycle graph starting at `start`, towards its smaller
/// neighbour.
fn cycle_order(g: &Graph, start: VertexId, avoid: Option<VertexId>) -> Vec<VertexId> {
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = *g.neighbors(start).iter().find(|&&w| Some(w) != avoid).unwrap();
    while cur != start {
        order.push(cur);
        let next = *g.neighbors(cur).iter().find(|&&w| w != prev && Some(w) != avoid).unwrap();
        prev = cur;
        cur = next;
    }
    order
}

/// A cycle whose single vertex without a prescribed x-coordinate becomes
/// `v₀`.
pub(super) fn cycle_with_exception(g: &Graph, px: &[Option<ExactCoord>]) -> Result<Vec<Point>, EmbedError> {
    let free: Vec<VertexId> = (0..g.n()).filter(|&v| px[v].is_none()).collect();
    if free.len() != 1 {
        return Err(EmbedError::Precondition(
            "a cycle needs exactly one vertex without a prescribed x-coordinate".into(),
        ));
    }
    let order = cycle_order(g, free[0], None);
    let xs = order[1..].iter().map(|&v| req(px, v)).collect::<Result<Vec<_>, _>>()?;
    let pts = embed_cycle(&xs);
    let mut canvas = Canvas::new(g.n());
    for (v, p) in order.into_iter().zip(pts) {
        canvas.put(v, p);
    }
    Ok(canvas.finish())
}

/// Two cycles joined by one edge, if `g` is that.
pub(super) fn two_cycles(g: &Graph, px: &[Option<ExactCoord>]) -> Result<Option<Vec<Point>>, EmbedError> {
    let big: Vec<VertexId> = (0..g.n()).filter(|&v| g.degree(v) == 3).collect();
    if big.len() != 2 || !g.has_edge(big[0], big[1]) || (0..g.n()).any(|v| g.degree(v) == 1) {
        return Ok(None);
    }
    let (p, q) = (big[0], big[1]);
    let comps = g.components_avoiding(&[g.edge_id(p, q).unwrap()]);
    if comps.len() != 2 {
        return Ok(None);
    }
    let c1 = cycle_order(g, p, Some(q));
    let c2 = cycle_order(g, q, Some(p));
    let xs1 = c1[1..].iter().map(|&v| req(px, v)).collect::<Result<Vec<_>, _>>()?;
    let xs2 = c2[1..].iter().map(|&v| req(px, v)).collect::<Result<Vec<_>, _>>()?;
    let (d1, d2) = embed_two_cycles_with_edge(&xs1, &xs2);
    let mut canvas = Canvas::new(g.n());
    for (v, pt) in c1.into_iter().zip(d1).chain(c2.into_iter().zip(d2)) {
        canvas.put(v, pt);
    }
    verified(g, canvas.finish(), px, "two cycles joined by an edge").map(Some)
}
