//! Basic-slope drawings of graphs of maximum degree three.
//!
//! Cubic graphs are reduced until the subcubic embedder applies: bridges and
//! 2-edge cuts split the graph into two subcubic sides, triangles are
//! contracted and re-expanded afterwards, and otherwise a suitable M-cut
//! splits it. A few small graphs without any of these fall back on stored
//! drawings. Whatever is left is reported as a [`Fallback`].

mod expand;
mod fixtures;
mod join;

pub use expand::expand_triangle;
pub use fixtures::{fixture, fixture_names, Fixture};
pub use join::{assemble_mcut_drawing, split_and_join, SplitCut};

use thiserror::Error;

use crate::coords::{ExactCoord, Point};
use crate::drawing::Drawing;
use crate::graph::{
    contract_triangle, find_bridges_and_small_cuts, find_isomorphism, find_suitable_mcut, Graph, VertexId,
};
use crate::slope::SlopeSet;
use crate::subcubic::{embed_cycle, embed_subcubic, XAssignment};
use crate::verify::verify_drawing;

/// The basic pipeline has no drawing for this graph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("no basic-slope construction applies: {reason}")]
pub struct Fallback {
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CubicError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("construction failed: {0}")]
    Failed(String),
    #[error("no free slope at the contracted vertex")]
    NoFreeSlope,
}

fn fallback(reason: impl Into<String>) -> Fallback {
    Fallback { reason: reason.into() }
}

/// Draws `g` with the slopes E, N, NE and NW, or explains why not. A
/// returned drawing has passed [`verify_drawing`].
pub fn draw_cubic_basic(g: &Graph) -> Result<Drawing, Fallback> {
    if g.max_degree() > 3 {
        return Err(fallback("maximum degree exceeds three"));
    }
    let points = draw_any(g)?;
    let slopes = SlopeSet::basic();
    verify_drawing(g, &points, &slopes).map_err(|v| fallback(format!("assembled drawing rejected: {v}")))?;
    Ok(Drawing::new(points, slopes))
}

fn draw_any(g: &Graph) -> Result<Vec<Point>, Fallback> {
    if g.n() == 0 {
        return Ok(Vec::new());
    }
    let comps = g.components();
    if comps.len() == 1 {
        return draw_connected(g);
    }
    let mut out = vec![Point::ints(0, 0); g.n()];
    let mut top: Option<ExactCoord> = None;
    for comp in comps {
        let mut pts = draw_connected(&g.induced(&comp))?;
        if let Some(t) = &top {
            let dy = &(t - &min_y(&pts)) + &ExactCoord::int(1);
            shift(&mut pts, &ExactCoord::zero(), &dy);
        }
        top = Some(max_y(&pts));
        for (l, p) in pts.into_iter().enumerate() {
            out[comp[l]] = p;
        }
    }
    Ok(out)
}

fn draw_connected(g: &Graph) -> Result<Vec<Point>, Fallback> {
    if g.n() == 1 {
        return Ok(vec![Point::ints(0, 0)]);
    }
    if g.is_cycle() {
        return Ok(draw_cycle(g));
    }
    if !g.is_cubic() {
        return embed_subcubic(g, &XAssignment::fresh(g))
            .map(|d| d.points)
            .map_err(|e| fallback(format!("subcubic embedding: {e}")));
    }
    draw_connected_cubic(g, None).map(|d| d.points)
}

fn draw_cycle(g: &Graph) -> Vec<Point> {
    let mut order = vec![0];
    let mut prev = 0;
    let mut cur = g.neighbors(0)[0];
    while cur != 0 {
        order.push(cur);
        let next = *g.neighbors(cur).iter().find(|&&w| w != prev).expect("cycle");
        prev = cur;
        cur = next;
    }
    let xs: Vec<ExactCoord> = (1..order.len() as u32).map(ExactCoord::xi).collect();
    let mut out = vec![Point::ints(0, 0); g.n()];
    for (v, p) in order.into_iter().zip(embed_cycle(&xs)) {
        out[v] = p;
    }
    out
}

/// Draws a connected cubic graph whose innermost core, 3-edge-connected and
/// triangle-free without a suitable M-cut or stored drawing, is handed to
/// `core`. Contracted triangles around that core are expanded again within
/// the slope set of the core's drawing. The result is verified.
pub fn draw_cubic_with_core(g: &Graph, core: &dyn Fn(&Graph) -> Option<Drawing>) -> Result<Drawing, Fallback> {
    if !g.is_cubic() || !g.is_connected() {
        return Err(fallback("expected a connected cubic graph"));
    }
    let d = draw_connected_cubic(g, Some(core))?;
    verify_drawing(g, &d.points, &d.slopes).map_err(|v| fallback(format!("assembled drawing rejected: {v}")))?;
    Ok(d)
}

/// Connected cubic graphs, in the order bridge, 2-edge cut, triangle,
/// M-cut, stored drawing. Only then is `core` consulted.
fn draw_connected_cubic(g: &Graph, core: Option<&dyn Fn(&Graph) -> Option<Drawing>>) -> Result<Drawing, Fallback> {
    let basic = |pts: Vec<Point>| Drawing::new(pts, SlopeSet::basic());
    if g.n() == 4 {
        return Ok(basic(vec![Point::ints(0, 0), Point::ints(1, 0), Point::ints(1, 1), Point::ints(0, 1)]));
    }
    let cuts = find_bridges_and_small_cuts(g);
    if let Some(&b) = cuts.bridges.first() {
        return split_and_join(g, SplitCut::Bridge(b)).map_err(|e| fallback(e.to_string()));
    }
    for &(e, f) in &cuts.two_edge_cuts {
        let (a, b) = g.edge(e);
        let (c, d) = g.edge(f);
        if [a, b].iter().any(|v| *v == c || *v == d) {
            continue;
        }
        return split_and_join(g, SplitCut::TwoEdge(e, f)).map_err(|e| fallback(e.to_string()));
    }
    let contracted = contract_triangle(g).ok();
    if let Some((h, rec)) = &contracted {
        if let Ok(d) = draw_connected_cubic(h, None) {
            return expand_triangle(h, &d, rec).map_err(|e| fallback(e.to_string()));
        }
    }
    if let Ok(mc) = find_suitable_mcut(g) {
        return assemble_mcut_drawing(g, &mc).map_err(|e| fallback(e.to_string()));
    }
    for name in fixture_names() {
        let fx = fixture(name);
        if let Some(f) = find_isomorphism(&fx.graph, g) {
            let mut out = vec![Point::ints(0, 0); g.n()];
            for (u, p) in fx.drawing.points.iter().enumerate() {
                out[f[u]] = p.clone();
            }
            return Ok(basic(out));
        }
    }
    let Some(core) = core else {
        return Err(fallback(match contracted {
            Some(_) => format!("cubic graph on {} vertices whose triangle-free core has no construction", g.n()),
            None => format!(
                "3-edge-connected, triangle-free cubic graph on {} vertices without a suitable M-cut or stored drawing",
                g.n()
            ),
        }));
    };
    match contracted {
        Some((h, rec)) => {
            let d = draw_connected_cubic(&h, Some(core))?;
            expand_triangle(&h, &d, &rec).map_err(|e| fallback(e.to_string()))
        }
        None => core(g).ok_or_else(|| fallback(format!("no drawing for the core on {} vertices", g.n()))),
    }
}

pub fn min_y(pts: &[Point]) -> ExactCoord {
    pts.iter().map(|p| &p.y).min_by(|a, b| crate::coords::compare(a, b)).cloned().unwrap_or_else(ExactCoord::zero)
}

pub fn max_y(pts: &[Point]) -> ExactCoord {
    pts.iter().map(|p| &p.y).max_by(|a, b| crate::coords::compare(a, b)).cloned().unwrap_or_else(ExactCoord::zero)
}

pub fn shift(pts: &mut [Point], dx: &ExactCoord, dy: &ExactCoord) {
    for p in pts {
        *p = p.translate(dx, dy);
    }
}

/// Maps each vertex of a part to its id in the whole graph.
fn place(out: &mut [Option<Point>], map: &[VertexId], pts: Vec<Point>) {
    for (l, p) in pts.into_iter().enumerate() {
        out[map[l]] = Some(p);
    }
}
