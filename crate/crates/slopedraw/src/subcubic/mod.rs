//! Basic-slope drawings of connected graphs of maximum degree three that are
//! not cycles and have a vertex of degree less than three.
//!
//! Every vertex of degree at most two receives a prescribed x-coordinate,
//! and the output satisfies:
//!
//! 1. prescribed x-coordinates are met exactly;
//! 2. every edge is E, N, NE or NW;
//! 3. no vertex lies North of a vertex of degree two;
//! 4. no vertex lies North or Northwest of a vertex of degree one;
//! 5. every x-coordinate is a rational combination of the prescribed ones
//!    and the unit.
//!
//! The construction is an induction on the number of vertices. Vertices
//! whose degree drops inside a recursive instance get fresh basis elements;
//! once the whole drawing is certified those are replaced by close rational
//! approximations of their numeric values and the result is certified again.

mod cases;
mod cycles;
mod geom;
mod procedure;
mod search;

pub use cycles::{embed_cycle, embed_two_cycles_with_edge};

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use thiserror::Error;

use crate::coords::{basis_square, ExactCoord, Point, Rat};
use crate::drawing::Drawing;
use crate::graph::{Graph, VertexId};
use crate::slope::SlopeSet;
use crate::verify::{check_low_degree_conditions, check_support};

/// Prescribed x-coordinates: a distinct basis index for every vertex of
/// degree at most two.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XAssignment {
    indices: BTreeMap<VertexId, u32>,
}

impl XAssignment {
    /// Indices `1, 2, …` to the low-degree vertices in id order.
    pub fn fresh(g: &Graph) -> XAssignment {
        let indices =
            (0..g.n()).filter(|&v| g.degree(v) <= 2).zip(1u32..).collect::<BTreeMap<_, _>>();
        XAssignment { indices }
    }

    pub fn from_indices(indices: BTreeMap<VertexId, u32>) -> XAssignment {
        XAssignment { indices }
    }

    pub fn get(&self, v: VertexId) -> Option<u32> {
        self.indices.get(&v).copied()
    }

    pub fn basis(&self) -> BTreeSet<u32> {
        self.indices.values().copied().collect()
    }

    pub fn coords(&self, n: usize) -> Vec<Option<ExactCoord>> {
        (0..n).map(|v| self.get(v).map(ExactCoord::xi)).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbedError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("construction failed: {0}")]
    Failed(String),
}

/// Draws `g` with the basic slopes and x-coordinates `xs`, certifying all
/// five conditions before returning.
pub fn embed_subcubic(g: &Graph, xs: &XAssignment) -> Result<Drawing, EmbedError> {
    let mut seen = BTreeSet::new();
    for v in 0..g.n() {
        match (g.degree(v) <= 2, xs.get(v)) {
            (true, None) => return Err(pre(format!("vertex {v} has degree ≤ 2 but no x-coordinate"))),
            (false, Some(_)) => return Err(pre(format!("vertex {v} has degree 3 but an x-coordinate"))),
            (_, Some(0)) => return Err(pre("basis index 0 is the unit".into())),
            (_, Some(i)) if !seen.insert(i) => return Err(pre(format!("basis index {i} used twice"))),
            _ => {}
        }
    }
    let points = embed_prescribed(g, &xs.coords(g.n()))?;
    Ok(Drawing::new(points, SlopeSet::basic()))
}

/// As [`embed_subcubic`] with arbitrary prescribed coordinates, which must
/// be linearly independent over the rationals together with the unit.
pub fn embed_prescribed(g: &Graph, px: &[Option<ExactCoord>]) -> Result<Vec<Point>, EmbedError> {
    if g.n() == 0 {
        return Err(pre("empty graph".into()));
    }
    if !g.is_connected() {
        return Err(pre("graph is disconnected".into()));
    }
    if g.is_cycle() {
        return Err(pre("graph is a cycle".into()));
    }
    if (0..g.n()).all(|v| g.degree(v) == 3) {
        return Err(pre("graph is cubic".into()));
    }
    if px.len() != g.n() || (0..g.n()).any(|v| (g.degree(v) <= 2) != px[v].is_some()) {
        return Err(pre("x-coordinates must be given for exactly the vertices of degree ≤ 2".into()));
    }
    let allowed: BTreeSet<u32> = px.iter().flatten().flat_map(|x| x.support()).collect();
    let first_aux = allowed.iter().max().map_or(1, |m| m + 1);
    let mut ctx = Ctx { next_aux: first_aux, aux: Vec::new(), work: 0 };
    let pts = connected(g, px, &mut ctx)?;
    finalize(g, px, pts, &ctx.aux, &allowed)
}

fn pre(msg: String) -> EmbedError {
    EmbedError::Precondition(msg)
}

const WORK_LIMIT: usize = 50_000;

pub(crate) struct Ctx {
    next_aux: u32,
    aux: Vec<u32>,
    work: usize,
}

impl Ctx {
    fn fresh(&mut self) -> ExactCoord {
        let i = self.next_aux;
        self.next_aux += 1;
        self.aux.push(i);
        ExactCoord::xi(i)
    }

    fn tick(&mut self) -> Result<(), EmbedError> {
        self.work += 1;
        if self.work > WORK_LIMIT {
            return Err(EmbedError::Failed("work budget exhausted".into()));
        }
        Ok(())
    }

    fn exhausted(&self) -> bool {
        self.work > WORK_LIMIT
    }
}

/// Subgraph of a parent graph with the local-to-parent vertex map.
pub(crate) struct Piece {
    g: Graph,
    map: Vec<VertexId>,
}

impl Piece {
    fn induced(parent: &Graph, keep: &[VertexId]) -> Piece {
        Piece { g: parent.induced(keep), map: keep.to_vec() }
    }

    fn local(&self, v: VertexId) -> usize {
        self.map.iter().position(|&w| w == v).expect("vertex belongs to the piece")
    }

    fn px(&self, px: &[Option<ExactCoord>]) -> Vec<Option<ExactCoord>> {
        self.map.iter().map(|&v| px[v].clone()).collect()
    }
}

/// Collects points for the vertices of a parent graph.
struct Canvas(Vec<Option<Point>>);

impl Canvas {
    fn new(n: usize) -> Canvas {
        Canvas(vec![None; n])
    }

    fn put(&mut self, v: VertexId, p: Point) {
        self.0[v] = Some(p);
    }

    fn put_piece(&mut self, piece: &Piece, pts: &[Point]) {
        for (l, p) in pts.iter().enumerate() {
            self.put(piece.map[l], p.clone());
        }
    }

    fn finish(self) -> Vec<Point> {
        self.0.into_iter().map(|p| p.expect("every vertex placed")).collect()
    }
}

fn req(px: &[Option<ExactCoord>], v: VertexId) -> Result<ExactCoord, EmbedError> {
    px[v].clone().ok_or_else(|| pre(format!("vertex {v} of degree ≤ 2 has no x-coordinate")))
}

fn check(g: &Graph, pts: &[Point], px: &[Option<ExactCoord>]) -> bool {
    check_low_degree_conditions(g, pts, px).is_ok()
}

fn verified(g: &Graph, pts: Vec<Point>, px: &[Option<ExactCoord>], what: &str) -> Result<Vec<Point>, EmbedError> {
    if check(g, &pts, px) {
        Ok(pts)
    } else {
        Err(EmbedError::Failed(what.into()))
    }
}

/// Any instance: components are drawn separately and stacked upwards.
/// A cycle component must leave exactly one vertex without a prescribed
/// x-coordinate; it becomes the top vertex of the cycle drawing.
fn instance(g: &Graph, px: &[Option<ExactCoord>], ctx: &mut Ctx) -> Result<Vec<Point>, EmbedError> {
    let comps = g.components();
    if comps.len() == 1 {
        return connected(g, px, ctx);
    }
    let mut parts = Vec::with_capacity(comps.len());
    for comp in comps {
        let piece = Piece::induced(g, &comp);
        let pts = connected(&piece.g, &piece.px(px), ctx)?;
        parts.push((piece, pts));
    }
    let mut canvas = Canvas::new(g.n());
    stack(&mut canvas, parts);
    Ok(canvas.finish())
}

/// Places each part above the previous one, far enough that no point of
/// one part is North, Northeast or Northwest of a point of another.
/// Returns the largest y-coordinate used.
fn stack(canvas: &mut Canvas, mut parts: Vec<(Piece, Vec<Point>)>) -> ExactCoord {
    let gap = geom::span(parts.iter().flat_map(|(_, p)| p.iter().map(|q| &q.x))) + 1;
    let mut top: Option<ExactCoord> = None;
    for (piece, pts) in parts.iter_mut() {
        if let Some(t) = &top {
            let dy = &(t - &geom::min_y(pts)) + &geom::int(gap);
            geom::translate(pts, &ExactCoord::zero(), &dy);
        }
        top = Some(geom::max_y(pts));
        canvas.put_piece(piece, pts);
    }
    top.unwrap_or_else(ExactCoord::zero)
}

/// Prescribed coordinates for a piece of `g`: vertices of degree at most two
/// in `g` keep theirs, vertices whose degree dropped get fresh auxiliary
/// ones, vertices of degree three in the piece get none.
fn sub_px(g: &Graph, piece: &Piece, px: &[Option<ExactCoord>], ctx: &mut Ctx) -> Vec<Option<ExactCoord>> {
    let mut out = Vec::with_capacity(piece.map.len());
    for (l, &v) in piece.map.iter().enumerate() {
        out.push(if piece.g.degree(l) == 3 {
            None
        } else if g.degree(v) <= 2 {
            px[v].clone()
        } else {
            Some(ctx.fresh())
        });
    }
    out
}

fn connected(g: &Graph, px: &[Option<ExactCoord>], ctx: &mut Ctx) -> Result<Vec<Point>, EmbedError> {
    ctx.tick()?;
    let zero = ExactCoord::zero;
    match g.n() {
        1 => return Ok(vec![Point::new(req(px, 0)?, zero())]),
        2 => return verified(g, vec![Point::new(req(px, 0)?, zero()), Point::new(req(px, 1)?, zero())], px, "edge"),
        _ => {}
    }
    if g.is_cycle() {
        return cycles::cycle_with_exception(g, px);
    }
    if let Some(pts) = cycles::two_cycles(g, px)? {
        return Ok(pts);
    }
    match cases::dispatch(g, px, ctx) {
        Ok(pts) => Ok(pts),
        Err(e) => search::small_graph(g, px, ctx).ok_or(e),
    }
}

/// Rational approximation of `√p` with `bits` fractional bits.
fn sqrt_approx(p: u64, bits: u32) -> Rat {
    let scaled = BigInt::from(p) << (2 * bits);
    Rat::new(scaled.sqrt(), BigInt::from(1) << bits)
}

fn substitute(pts: &[Point], values: &BTreeMap<u32, Rat>) -> Vec<Point> {
    let sub = |c: &ExactCoord| {
        let mut unit = Rat::from_integer(0.into());
        let mut kept = Vec::new();
        for (i, q) in c.terms() {
            match values.get(i) {
                Some(v) => unit += q * v,
                None => kept.push((*i, q.clone())),
            }
        }
        kept.push((0, unit));
        ExactCoord::from_terms(kept)
    };
    pts.iter().map(|p| Point::new(sub(&p.x), sub(&p.y))).collect()
}

/// Replaces auxiliary basis elements by rationals and re-certifies.
fn finalize(
    g: &Graph,
    px: &[Option<ExactCoord>],
    pts: Vec<Point>,
    aux: &[u32],
    allowed: &BTreeSet<u32>,
) -> Result<Vec<Point>, EmbedError> {
    let certify = |pts: &[Point]| {
        check_low_degree_conditions(g, pts, px).is_ok() && check_support(pts, allowed).is_ok()
    };
    let used: BTreeSet<u32> =
        pts.iter().flat_map(|p| p.x.support().chain(p.y.support())).filter(|i| aux.contains(i)).collect();
    if used.is_empty() {
        return if certify(&pts) { Ok(pts) } else { Err(EmbedError::Failed("final certification".into())) };
    }
    for bits in [64, 96, 128, 192, 256] {
        let values = used.iter().map(|&i| (i, sqrt_approx(basis_square(i), bits))).collect();
        let out = substitute(&pts, &values);
        if certify(&out) {
            return Ok(out);
        }
    }
    Err(EmbedError::Failed("no rational substitution for auxiliary coordinates certified".into()))
}

#[cfg(test)]
mod tests;
