//! The main case: a shortest cycle `v u₁ … u_k` through a vertex `v` of
//! degree two. The rest of the graph is drawn first; then `u₁ … u_k` climb
//! a system of vertical and Northwest rays placed above it, and `v` closes
//! the cycle straight above `u₁`.

use std::collections::{BTreeSet, VecDeque};

use crate::coords::{ExactCoord, Point};
use crate::drawing::ceil_int;
use crate::graph::{Graph, VertexId};

use super::cases::LIFT_TRIES;
use super::geom::{height, int, max_of, ne_or_w, ne_or_w_to_antidiagonal};
use super::{check, instance, req, sub_px, Canvas, Ctx, EmbedError, Piece};

fn failed(msg: &str) -> EmbedError {
    EmbedError::Failed(msg.into())
}

pub(super) fn embedding_procedure(
    g: &Graph,
    px: &[Option<ExactCoord>],
    ctx: &mut Ctx,
) -> Result<Vec<Point>, EmbedError> {
    let mut last = failed("no cycle through a vertex of degree two");
    for (v, cycle) in candidates(g) {
        if ctx.exhausted() {
            break;
        }
        match attempt(g, px, v, &cycle, ctx) {
            Ok(pts) => return Ok(pts),
            Err(e) => last = e,
        }
    }
    Err(last)
}

/// Shortest cycles through each vertex of degree two, in both directions,
/// shortest first. Each is returned as `(v, [u₁, …, u_k])`.
fn candidates(g: &Graph) -> Vec<(VertexId, Vec<VertexId>)> {
    let mut out = Vec::new();
    for v in (0..g.n()).filter(|&v| g.degree(v) == 2) {
        let nb = g.neighbors(v);
        for (s, t) in [(nb[0], nb[1]), (nb[1], nb[0])] {
            if g.degree(s) != 3 {
                continue;
            }
            if let Some(path) = shortest_path_avoiding(g, s, t, v) {
                out.push((v, path));
            }
        }
    }
    out.sort_by_key(|(_, p)| p.len());
    out
}

fn shortest_path_avoiding(g: &Graph, s: VertexId, t: VertexId, avoid: VertexId) -> Option<Vec<VertexId>> {
    let mut prev = vec![usize::MAX; g.n()];
    prev[s] = s;
    let mut queue = VecDeque::from([s]);
    while let Some(a) = queue.pop_front() {
        if a == t {
            let mut path = vec![t];
            let mut cur = t;
            while cur != s {
                cur = prev[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for &b in g.neighbors(a) {
            if b != avoid && prev[b] == usize::MAX {
                prev[b] = a;
                queue.push_back(b);
            }
        }
    }
    None
}

/// Where a cycle vertex goes: onto a vertical line or onto the line
/// `x + y = K` of a Northwest ray.
enum Ray {
    Vertical(ExactCoord),
    Northwest(ExactCoord),
}

fn attempt(
    g: &Graph,
    px: &[Option<ExactCoord>],
    v: VertexId,
    cycle: &[VertexId],
    ctx: &mut Ctx,
) -> Result<Vec<Point>, EmbedError> {
    let on_cycle: BTreeSet<VertexId> = cycle.iter().copied().chain([v]).collect();
    let outside = |u: VertexId| -> Vec<VertexId> {
        g.neighbors(u).iter().copied().filter(|w| !on_cycle.contains(w)).collect()
    };
    let u1 = cycle[0];
    let x1 = req(px, v)?;
    let u1p = *outside(u1).first().ok_or_else(|| failed("chord at the first cycle vertex"))?;
    // With `u₁′` of degree two it moves to the cycle side and its other
    // neighbour anchors the ray of `u₁′`.
    let (removed, anchor, anchor_x, bridge) = if g.degree(u1p) == 3 {
        (cycle.to_vec(), u1p, x1.clone(), None)
    } else {
        let u1pp = g.neighbors(u1p).iter().copied().find(|&w| w != u1).expect("degree two");
        if on_cycle.contains(&u1pp) || g.degree(u1pp) != 3 {
            return Err(failed("neighbour of the first cycle vertex closes a short cycle"));
        }
        let mut r = cycle.to_vec();
        r.push(u1p);
        (r, u1pp, req(px, u1p)?, Some(u1p))
    };
    let mut drop = removed.clone();
    drop.push(v);
    let keep: Vec<VertexId> = (0..g.n()).filter(|w| !drop.contains(w)).collect();
    let piece = Piece::induced(g, &keep);
    let mut lpx = sub_px(g, &piece, px, ctx);
    lpx[piece.local(anchor)] = Some(anchor_x.clone());
    for comp in piece.g.components() {
        let sub = piece.g.induced(&comp);
        if !sub.is_cycle() {
            continue;
        }
        let exceptional = comp
            .iter()
            .copied()
            .find(|&l| piece.map[l] != anchor && g.degree(piece.map[l]) == 3)
            .ok_or_else(|| failed("cycle component without an exceptional vertex"))?;
        lpx[exceptional] = None;
    }
    let rest = instance(&piece.g, &lpx, ctx)?;
    let at = |u: VertexId| &rest[piece.local(u)];

    let mut north_used: BTreeSet<VertexId> = BTreeSet::from([anchor]);
    let mut nw_used: BTreeSet<VertexId> = BTreeSet::new();
    let mut rays = Vec::with_capacity(cycle.len());
    for &u in &cycle[1..] {
        if g.degree(u) == 2 {
            rays.push(Ray::Vertical(req(px, u)?));
            continue;
        }
        let z = *outside(u).first().ok_or_else(|| failed("chord in the shortest cycle"))?;
        if bridge == Some(z) {
            return Err(failed("cycle vertex adjacent to the moved vertex"));
        }
        let zp = at(z);
        let lz = piece.local(z);
        if g.degree(z) == 3 && north_used.insert(z) {
            rays.push(Ray::Vertical(zp.x.clone()));
        } else if piece.g.degree(lz) <= 1 && nw_used.insert(z) {
            rays.push(Ray::Northwest(&zp.x + &zp.y));
        } else {
            return Err(failed("no free ray at a neighbour of the cycle"));
        }
    }

    let mut verticals = vec![x1.clone(), anchor_x.clone()];
    let mut diagonals = Vec::new();
    for r in &rays {
        match r {
            Ray::Vertical(x) => verticals.push(x.clone()),
            Ray::Northwest(k) => diagonals.push(k.clone()),
        }
    }
    let mut heights: Vec<ExactCoord> = rest.iter().map(|p| p.y.clone()).collect();
    for x in &verticals {
        for k in &diagonals {
            heights.push(k - x);
        }
    }
    let floor = int(ceil_int(&max_of(heights.iter()).unwrap_or_else(ExactCoord::zero)) + 1);

    let mut lift = height(&rest) + 1;
    for _ in 0..LIFT_TRIES {
        let base = Point::new(anchor_x.clone(), &floor + &int(lift));
        let mut canvas = Canvas::new(g.n());
        canvas.put_piece(&piece, &rest);
        let mut cur = match bridge {
            None => base,
            Some(b) => {
                canvas.put(b, base.clone());
                ne_or_w(&base, &x1)
            }
        };
        canvas.put(u1, cur.clone());
        for (&u, ray) in cycle[1..].iter().zip(&rays) {
            cur = match ray {
                Ray::Vertical(x) => ne_or_w(&cur, x),
                Ray::Northwest(k) => ne_or_w_to_antidiagonal(&cur, k),
            };
            canvas.put(u, cur.clone());
        }
        canvas.put(v, ne_or_w(&cur, &x1));
        let pts = canvas.finish();
        if check(g, &pts, px) {
            return Ok(pts);
        }
        lift *= 2;
    }
    Err(failed("embedding procedure"))
}
