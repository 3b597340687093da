use std::collections::BTreeSet;

use crate::coords::{compare, rat, rat_int, ExactCoord, Point, Rat};
use crate::drawing::transform::{rotate_cw135, rotate_cw45, rotate_pi, scale};
use crate::graph::{bridges, Graph, VertexId};
use crate::slope::SlopeSet;
use crate::verify::verify_drawing;

use super::cycles::{cycle_with_exception, embed_cycle};
use super::geom::{direction, height, int, max_y, min_y, ne_or_w, offset, reflect_x_axis, span, translate, up_diag};
use super::{check, connected, procedure, req, stack, sub_px, verified, Canvas, Ctx, EmbedError, Piece};

/// Doublings of a vertical offset before giving up.
pub(super) const LIFT_TRIES: usize = 12;
/// Halvings of a scale factor before giving up.
const SHRINK_TRIES: usize = 40;

fn failed(msg: &str) -> EmbedError {
    EmbedError::Failed(msg.into())
}

pub(super) fn dispatch(g: &Graph, px: &[Option<ExactCoord>], ctx: &mut Ctx) -> Result<Vec<Point>, EmbedError> {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 1) {
        return pendant(g, px, v, ctx);
    }
    if let Some(theta) = find_theta(g) {
        return theta_case(g, px, theta, ctx);
    }
    if no_cycle_through_degree_two(g) {
        return glue_at_cut_vertex(g, px, ctx);
    }
    if let Some((run, u, w)) = longest_run(g) {
        return if u != w { path_case(g, px, &run, u, w, ctx) } else { loop_case(g, px, &run, u, ctx) };
    }
    procedure::embedding_procedure(g, px, ctx)
}

fn others(g: &Graph, v: VertexId, not: &[VertexId]) -> Vec<VertexId> {
    g.neighbors(v).iter().copied().filter(|w| !not.contains(w)).collect()
}

/// Vertices of `g` outside `drop`, in id order.
fn keep_without(g: &Graph, drop: &[VertexId]) -> Vec<VertexId> {
    (0..g.n()).filter(|v| !drop.contains(v)).collect()
}

/// Drawing extent used as the starting vertical offset.
fn lift_base(pts: &[Point]) -> i64 {
    height(pts) + span(pts.iter().map(|p| &p.x)) + 1
}

fn diameter(pts: &[Point]) -> i64 {
    span(pts.iter().map(|p| &p.x)).max(height(pts)).max(1)
}

/// Places the chain `path[1..]` going up from `first` with NE and NW edges.
fn chain_up(first: Point, path: &[VertexId], px: &[Option<ExactCoord>]) -> Result<Vec<Point>, EmbedError> {
    let mut out = vec![first];
    for &v in &path[1..] {
        let next = up_diag(out.last().unwrap(), &req(px, v)?);
        out.push(next);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// A vertex of degree one.

fn pendant(g: &Graph, px: &[Option<ExactCoord>], v1: VertexId, ctx: &mut Ctx) -> Result<Vec<Point>, EmbedError> {
    let mut path = vec![v1];
    let mut prev = v1;
    let mut cur = g.neighbors(v1)[0];
    while g.degree(cur) == 2 {
        path.push(cur);
        let next = others(g, cur, &[prev])[0];
        prev = cur;
        cur = next;
    }
    if g.degree(cur) == 1 {
        path.push(cur);
        return simple_path(g, px, &path);
    }
    let w = cur;
    let k = path.len();
    let xk = req(px, path[k - 1])?;
    let piece = Piece::induced(g, &keep_without(g, &path));
    let mut lpx = sub_px(g, &piece, px, ctx);
    let lw = piece.local(w);
    let is_cycle = piece.g.is_cycle();
    lpx[lw] = if is_cycle { None } else { Some(xk.clone()) };
    let rest = connected(&piece.g, &lpx, ctx)?;
    let wp = &rest[lw];
    let mut lift = lift_base(&rest);
    for _ in 0..LIFT_TRIES {
        let top = if is_cycle { up_diag(wp, &xk) } else { Point::new(xk.clone(), &wp.y + &int(lift)) };
        let mut canvas = Canvas::new(g.n());
        canvas.put_piece(&piece, &rest);
        let mut p = top;
        for i in (0..k).rev() {
            if i + 1 < k {
                p = ne_or_w(&p, &req(px, path[i])?);
            }
            canvas.put(path[i], p.clone());
        }
        let pts = canvas.finish();
        if check(g, &pts, px) {
            return Ok(pts);
        }
        if is_cycle {
            break;
        }
        lift *= 2;
    }
    Err(failed("path hanging from a vertex of degree three"))
}

/// A path `v₁ … vₘ` drawn backwards from `vₘ` on the x-axis.
fn simple_path(g: &Graph, px: &[Option<ExactCoord>], path: &[VertexId]) -> Result<Vec<Point>, EmbedError> {
    let m = path.len();
    let mut canvas = Canvas::new(g.n());
    let mut p = Point::new(req(px, path[m - 1])?, ExactCoord::zero());
    canvas.put(path[m - 1], p.clone());
    for i in (0..m - 1).rev() {
        p = ne_or_w(&p, &req(px, path[i])?);
        canvas.put(path[i], p.clone());
    }
    verified(g, canvas.finish(), px, "path")
}

// ---------------------------------------------------------------------------
// Four vertices spanning five edges.

/// `(a, b, c, d)` with edges `ab, ac, ad, bc, bd`.
fn find_theta(g: &Graph) -> Option<[VertexId; 4]> {
    for &(a, b) in g.edges() {
        let common: Vec<VertexId> =
            g.neighbors(a).iter().copied().filter(|&c| g.has_edge(b, c)).collect();
        if common.len() >= 2 {
            return Some([a, b, common[0], common[1]]);
        }
    }
    None
}

fn theta_case(
    g: &Graph,
    px: &[Option<ExactCoord>],
    [a, b, c, d]: [VertexId; 4],
    ctx: &mut Ctx,
) -> Result<Vec<Point>, EmbedError> {
    if g.has_edge(c, d) {
        return Err(EmbedError::Precondition("complete graph on four vertices".into()));
    }
    let ec = others(g, c, &[a, b]);
    let ed = others(g, d, &[a, b]);
    match (ec.first(), ed.first()) {
        (None, None) => {
            let (mut c, mut d) = (c, d);
            if compare(&req(px, d)?, &req(px, c)?).is_lt() {
                std::mem::swap(&mut c, &mut d);
            }
            let (xc, xd) = (req(px, c)?, req(px, d)?);
            let half = (&xd - &xc).scale(&rat(1, 2));
            let mid = &xc + &half;
            let mut canvas = Canvas::new(g.n());
            canvas.put(c, Point::new(xc, ExactCoord::zero()));
            canvas.put(d, Point::new(xd, ExactCoord::zero()));
            canvas.put(a, Point::new(mid.clone(), half.clone()));
            canvas.put(b, Point::new(mid, -&half));
            verified(g, canvas.finish(), px, "theta graph")
        }
        (Some(&e), Some(&e2)) if e == e2 => theta_with_apex(g, px, [a, b, c, d], e, ctx),
        (Some(&cp), Some(&dp)) => theta_replace(g, px, [a, b, c, d], cp, dp, ctx),
        (Some(_), None) => theta_square(g, px, [a, b, c, d], ctx),
        (None, Some(_)) => theta_square(g, px, [a, b, d, c], ctx),
    }
}

/// The five vertices `a, b, c, d, e` relative to `e`, with `e` on top.
fn apex_layout() -> [(i64, i64); 5] {
    [(0, -4), (0, -2), (2, -2), (-2, -2), (0, 0)]
}

fn theta_with_apex(
    g: &Graph,
    px: &[Option<ExactCoord>],
    [a, b, c, d]: [VertexId; 4],
    e: VertexId,
    ctx: &mut Ctx,
) -> Result<Vec<Point>, EmbedError> {
    let five = [a, b, c, d, e];
    if g.degree(e) == 2 {
        let xe = req(px, e)?;
        let mut canvas = Canvas::new(g.n());
        for (&v, (dx, dy)) in five.iter().zip(apex_layout()) {
            canvas.put(v, Point::new(&xe + &int(dx), int(dy)));
        }
        return verified(g, canvas.finish(), px, "theta with a common neighbour");
    }
    let f = others(g, e, &[c, d])[0];
    let piece = Piece::induced(g, &keep_without(g, &five));
    let mut lpx = sub_px(g, &piece, px, ctx);
    let lf = piece.local(f);
    if piece.g.is_cycle() {
        lpx[lf] = None;
    }
    let rest = connected(&piece.g, &lpx, ctx)?;
    let fp = rest[lf].clone();
    let pendant = piece.g.degree(lf) <= 1;
    let origin = Point::ints(0, 0);
    let shape: Vec<Point> = apex_layout()
        .iter()
        .map(|&(dx, dy)| {
            let p = Point::ints(dx, dy);
            if pendant {
                rotate_cw135(&p, &origin)
            } else {
                rotate_pi(&p, &origin)
            }
        })
        .collect();
    let (ux, uy) = if pendant { (rat_int(-1), rat_int(1)) } else { (rat_int(0), rat_int(1)) };
    let mut t = Rat::new(1.into(), (4 * diameter(&rest)).into());
    for _ in 0..SHRINK_TRIES {
        let ep = offset(&fp, &t, &ux, &uy);
        let s = &t / rat_int(8);
        let mut canvas = Canvas::new(g.n());
        canvas.put_piece(&piece, &rest);
        for (&v, q) in five.iter().zip(&shape) {
            canvas.put(v, Point::new(&ep.x + &q.x.scale(&s), &ep.y + &q.y.scale(&s)));
        }
        let pts = canvas.finish();
        if check(g, &pts, px) {
            return Ok(pts);
        }
        t /= rat_int(2);
    }
    Err(failed("theta with a common neighbour of degree three"))
}

/// `c` has a neighbour outside the theta, `d` has degree two.
fn theta_square(
    g: &Graph,
    px: &[Option<ExactCoord>],
    [a, b, c, d]: [VertexId; 4],
    ctx: &mut Ctx,
) -> Result<Vec<Point>, EmbedError> {
    let piece = Piece::induced(g, &keep_without(g, &[a, b, d]));
    let mut lpx = sub_px(g, &piece, px, ctx);
    let lc = piece.local(c);
    lpx[lc] = Some(req(px, d)?);
    let rest = connected(&piece.g, &lpx, ctx)?;
    let cp = rest[lc].clone();
    // Only the rays North and Northwest of `c` are guaranteed free, so the
    // gadget uses those: b and d above c, a to the West of b.
    let mut s = Rat::new(1.into(), (4 * diameter(&rest)).into());
    let (zero, one, two, neg) = (rat_int(0), rat_int(1), rat_int(2), rat_int(-1));
    for _ in 0..SHRINK_TRIES {
        let mut canvas = Canvas::new(g.n());
        canvas.put_piece(&piece, &rest);
        canvas.put(b, offset(&cp, &s, &zero, &one));
        canvas.put(d, offset(&cp, &s, &zero, &two));
        canvas.put(a, offset(&cp, &s, &neg, &one));
        let pts = canvas.finish();
        if check(g, &pts, px) {
            return Ok(pts);
        }
        s /= rat_int(2);
    }
    Err(failed("theta hanging from one vertex"))
}

/// Integer step multipliers `(α, β)` for `c` and `d` along the directions
/// towards their outer neighbours, with the square vertices `a` and `b`
/// relative to the contracted vertex.
type SquareShape = [(Rat, Rat); 4];

fn square_shapes(d1: (i64, i64), d2: (i64, i64)) -> Vec<SquareShape> {
    let mut cands = Vec::new();
    for al in -2i64..=2 {
        for be in -2i64..=2 {
            let c = (al * d1.0, al * d1.1);
            let d = (be * d2.0, be * d2.1);
            let w = (d.0 - c.0, d.1 - c.1);
            if w == (0, 0) || !(w.0 == 0 || w.1 == 0 || w.0.abs() == w.1.abs()) {
                continue;
            }
            let neg = (al < 0) as u8 + (be < 0) as u8;
            cands.push((neg, al.abs() + be.abs(), c, d, w));
        }
    }
    cands.sort_by_key(|&(neg, size, ..)| (neg, size));
    let half = rat(1, 2);
    cands
        .into_iter()
        .map(|(_, _, c, d, w)| {
            let mx = rat_int(c.0) + rat_int(w.0) * &half;
            let my = rat_int(c.1) + rat_int(w.1) * &half;
            let (hx, hy) = (rat_int(w.0) * &half, rat_int(w.1) * &half);
            [
                (&mx - &hy, &my + &hx),
                (&mx + &hy, &my - &hx),
                (rat_int(c.0), rat_int(c.1)),
                (rat_int(d.0), rat_int(d.1)),
            ]
        })
        .collect()
}

/// Checks a shape on a tiny model: the contracted vertex at the origin and
/// the outer neighbours far away in their directions.
fn shape_is_plausible(shape: &SquareShape, d1: (i64, i64), d2: (i64, i64)) -> bool {
    let model = Graph::new(6, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 5)]).expect("model graph");
    let mut pts: Vec<Point> = shape
        .iter()
        .map(|(x, y)| Point::new(ExactCoord::from_rat(x.clone()), ExactCoord::from_rat(y.clone())))
        .collect();
    pts.push(Point::ints(100 * d1.0, 100 * d1.1));
    pts.push(Point::ints(100 * d2.0, 100 * d2.1));
    verify_drawing(&model, &pts, &SlopeSet::basic()).is_ok()
}

/// `c` and `d` have distinct outer neighbours: the theta is contracted to a
/// single new vertex, the rest drawn, and a small square reinserted.
fn theta_replace(
    g: &Graph,
    px: &[Option<ExactCoord>],
    [a, b, c, d]: [VertexId; 4],
    cp: VertexId,
    dp: VertexId,
    ctx: &mut Ctx,
) -> Result<Vec<Point>, EmbedError> {
    let keep = keep_without(g, &[a, b, c, d]);
    let base = Piece::induced(g, &keep);
    let v = keep.len();
    let (lcp, ldp) = (base.local(cp), base.local(dp));
    let mut edges = base.g.edges().to_vec();
    edges.push((lcp, v));
    edges.push((ldp, v));
    let gp = Graph::new(v + 1, &edges).map_err(|e| failed(&e.to_string()))?;
    let mut lpx: Vec<Option<ExactCoord>> = keep
        .iter()
        .enumerate()
        .map(|(l, &u)| if gp.degree(l) == 3 { None } else { px[u].clone() })
        .collect();
    lpx.push(if gp.is_cycle() { None } else { Some(ctx.fresh()) });
    let rest = connected(&gp, &lpx, ctx)?;
    let vp = rest[v].clone();
    let d1 = direction(&vp, &rest[lcp]);
    let d2 = direction(&vp, &rest[ldp]);
    let diam = diameter(&rest);
    let shapes: Vec<SquareShape> =
        square_shapes(d1, d2).into_iter().filter(|s| shape_is_plausible(s, d1, d2)).collect();
    for shape in &shapes {
        let mut s = Rat::new(1.into(), (4 * diam).into());
        for _ in 0..SHRINK_TRIES {
            let mut canvas = Canvas::new(g.n());
            canvas.put_piece(&base, &rest[..v]);
            for (&u, (dx, dy)) in [a, b, c, d].iter().zip(shape) {
                canvas.put(u, offset(&vp, &s, dx, dy));
            }
            let pts = canvas.finish();
            if check(g, &pts, px) {
                return Ok(pts);
            }
            s /= rat_int(2);
        }
    }
    Err(failed("theta with distinct outer neighbours"))
}

// ---------------------------------------------------------------------------
// Every vertex of degree two is a cut vertex between two bridges.

fn no_cycle_through_degree_two(g: &Graph) -> bool {
    let br: BTreeSet<(VertexId, VertexId)> = bridges(g).into_iter().map(|e| g.edge(e)).collect();
    (0..g.n()).filter(|&v| g.degree(v) == 2).all(|v| {
        g.neighbors(v).iter().all(|&w| br.contains(&(v.min(w), v.max(w))))
    })
}

const STRETCH: [i64; 15] = [1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233, 377, 610, 987];

fn glue_at_cut_vertex(g: &Graph, px: &[Option<ExactCoord>], ctx: &mut Ctx) -> Result<Vec<Point>, EmbedError> {
    for w in (0..g.n()).filter(|&v| g.degree(v) == 2) {
        let comps = g.induced(&keep_without(g, &[w])).components();
        let keep = keep_without(g, &[w]);
        let parent = |comp: &Vec<VertexId>| -> Vec<VertexId> { comp.iter().map(|&l| keep[l]).collect() };
        let sides: Vec<Vec<VertexId>> = comps.iter().map(parent).collect();
        let Some(pure) = sides.iter().position(|s| s.iter().all(|&v| g.degree(v) == 3)) else {
            continue;
        };
        if sides.len() != 2 {
            return Err(failed("cut vertex of degree two with more than two sides"));
        }
        let mut s1 = sides[pure].clone();
        let mut s2 = sides[1 - pure].clone();
        s1.push(w);
        s2.push(w);
        s1.sort_unstable();
        s2.sort_unstable();
        let p1 = Piece::induced(g, &s1);
        let p2 = Piece::induced(g, &s2);
        let mut px1 = sub_px(g, &p1, px, ctx);
        let mut px2 = sub_px(g, &p2, px, ctx);
        let (l1, l2) = (p1.local(w), p2.local(w));
        px1[l1] = px[w].clone();
        px2[l2] = px[w].clone();
        let mut d1 = connected(&p1.g, &px1, ctx)?;
        let d2 = connected(&p2.g, &px2, ctx)?;
        let wp = d2[l2].clone();
        let dy = &wp.y - &d1[l1].y;
        translate(&mut d1, &ExactCoord::zero(), &dy);
        for rot in [false, true] {
            for lam in STRETCH {
                let mut canvas = Canvas::new(g.n());
                canvas.put_piece(&p2, &d2);
                let moved: Vec<Point> = d1
                    .iter()
                    .map(|p| {
                        let q = scale(p, &wp, &rat_int(lam));
                        if rot {
                            rotate_cw45(&q, &wp)
                        } else {
                            q
                        }
                    })
                    .collect();
                canvas.put_piece(&p1, &moved);
                let pts = canvas.finish();
                if check(g, &pts, px) {
                    return Ok(pts);
                }
            }
        }
        return Err(failed("gluing two sides at a vertex of degree two"));
    }
    Err(failed("no vertex of degree two separates a side without low-degree vertices"))
}

// ---------------------------------------------------------------------------
// Two adjacent vertices of degree two.

/// The maximal run of degree-two vertices through `v`, with its end
/// neighbours.
fn maximal_run(g: &Graph, v: VertexId) -> (Vec<VertexId>, VertexId, VertexId) {
    let walk = |first: VertexId| {
        let mut out = Vec::new();
        let mut prev = v;
        let mut cur = first;
        while g.degree(cur) == 2 && cur != v {
            out.push(cur);
            let next = others(g, cur, &[prev])[0];
            prev = cur;
            cur = next;
        }
        (out, cur)
    };
    let nb = g.neighbors(v);
    let (left, u) = walk(nb[0]);
    let (right, w) = walk(nb[1]);
    let mut run: Vec<VertexId> = left.into_iter().rev().collect();
    run.push(v);
    run.extend(right);
    (run, u, w)
}

fn longest_run(g: &Graph) -> Option<(Vec<VertexId>, VertexId, VertexId)> {
    let mut best: Option<(Vec<VertexId>, VertexId, VertexId)> = None;
    let mut seen = BTreeSet::new();
    for v in 0..g.n() {
        if g.degree(v) != 2 || seen.contains(&v) || !g.neighbors(v).iter().any(|&w| g.degree(w) == 2) {
            continue;
        }
        let (run, u, w) = maximal_run(g, v);
        seen.extend(run.iter().copied());
        if best.as_ref().map_or(true, |b| run.len() > b.0.len()) {
            best = Some(if run[0] <= run[run.len() - 1] { (run, u, w) } else { (run.into_iter().rev().collect(), w, u) });
        }
    }
    best
}

/// Path `v₁ … v_k` of degree-two vertices between distinct vertices `u`
/// and `w` of degree three.
fn path_case(
    g: &Graph,
    px: &[Option<ExactCoord>],
    path: &[VertexId],
    u: VertexId,
    w: VertexId,
    ctx: &mut Ctx,
) -> Result<Vec<Point>, EmbedError> {
    let k = path.len();
    let keep = keep_without(g, path);
    let all = Piece::induced(g, &keep);
    let comps = all.g.components();
    let x1 = req(px, path[0])?;
    let xk = req(px, path[k - 1])?;
    match comps.len() {
        1 => {
            let mut lpx = sub_px(g, &all, px, ctx);
            let (lu, lw) = (all.local(u), all.local(w));
            lpx[lw] = Some(xk);
            if all.g.is_cycle() {
                lpx[lu] = None;
                let rest = cycle_with_exception(&all.g, &lpx)?;
                let first = up_diag(&rest[lu], &x1);
                let mut canvas = Canvas::new(g.n());
                canvas.put_piece(&all, &rest);
                for (&v, p) in path.iter().zip(chain_up(first, path, px)?) {
                    canvas.put(v, p);
                }
                return verified(g, canvas.finish(), px, "path over a cycle");
            }
            if k < 2 {
                return Err(failed("single vertex between two vertices of degree three"));
            }
            lpx[lu] = Some(x1.clone());
            let rest = connected(&all.g, &lpx, ctx)?;
            lift_path(g, px, path, &x1, |canvas| {
                canvas.put_piece(&all, &rest);
                max_y(&rest)
            }, lift_base(&rest))
        }
        2 => {
            let side = |v: VertexId| -> Piece {
                let lv = all.local(v);
                let comp = comps.iter().find(|c| c.contains(&lv)).expect("component");
                Piece::induced(g, &comp.iter().map(|&l| keep[l]).collect::<Vec<_>>())
            };
            let (pu, pw) = (side(u), side(w));
            if pw.g.is_cycle() {
                return far_cycle(g, px, path, (u, pu), (w, pw), ctx);
            }
            if pu.g.is_cycle() {
                let rev: Vec<VertexId> = path.iter().rev().copied().collect();
                return far_cycle(g, px, &rev, (w, pw), (u, pu), ctx);
            }
            if k < 2 {
                return Err(failed("single vertex between two vertices of degree three"));
            }
            let mut pxu = sub_px(g, &pu, px, ctx);
            pxu[pu.local(u)] = Some(x1.clone());
            let mut pxw = sub_px(g, &pw, px, ctx);
            pxw[pw.local(w)] = Some(xk);
            let du = connected(&pu.g, &pxu, ctx)?;
            let dw = connected(&pw.g, &pxw, ctx)?;
            let lift = lift_base(&du) + lift_base(&dw);
            let parts = vec![(pu, du), (pw, dw)];
            lift_path(g, px, path, &x1, |canvas| stack(canvas, clone_parts(&parts)), lift)
        }
        _ => Err(failed("removing a path left more than two components")),
    }
}

fn clone_parts(parts: &[(Piece, Vec<Point>)]) -> Vec<(Piece, Vec<Point>)> {
    parts.iter().map(|(p, d)| (Piece { g: p.g.clone(), map: p.map.clone() }, d.clone())).collect()
}

/// Draws the rest with `place`, then the path high above it starting on the
/// vertical line at `x1`.
fn lift_path(
    g: &Graph,
    px: &[Option<ExactCoord>],
    path: &[VertexId],
    x1: &ExactCoord,
    mut place: impl FnMut(&mut Canvas) -> ExactCoord,
    base: i64,
) -> Result<Vec<Point>, EmbedError> {
    let mut lift = base;
    for _ in 0..LIFT_TRIES {
        let mut canvas = Canvas::new(g.n());
        let top = place(&mut canvas);
        let first = Point::new(x1.clone(), &top + &int(lift));
        for (&v, p) in path.iter().zip(chain_up(first, path, px)?) {
            canvas.put(v, p);
        }
        let pts = canvas.finish();
        if check(g, &pts, px) {
            return Ok(pts);
        }
        lift *= 2;
    }
    Err(failed("path above the rest"))
}

/// The component of `w` is a cycle: the near side is drawn first, then the
/// path, then the cycle upside down on top.
fn far_cycle(
    g: &Graph,
    px: &[Option<ExactCoord>],
    path: &[VertexId],
    (u, pu): (VertexId, Piece),
    (w, pw): (VertexId, Piece),
    ctx: &mut Ctx,
) -> Result<Vec<Point>, EmbedError> {
    let x1 = req(px, path[0])?;
    let lu = pu.local(u);
    let mut pxu = sub_px(g, &pu, px, ctx);
    let near_cycle = pu.g.is_cycle();
    pxu[lu] = if near_cycle { None } else { Some(x1.clone()) };
    let near = connected(&pu.g, &pxu, ctx)?;

    let lw = pw.local(w);
    let mut pxw = sub_px(g, &pw, px, ctx);
    pxw[lw] = None;
    let order = cycle_order_from(&pw.g, lw);
    let xs = order[1..].iter().map(|&l| req(&pxw, l)).collect::<Result<Vec<_>, _>>()?;
    let mut far = embed_cycle(&xs);
    reflect_x_axis(&mut far);

    let mut lift = lift_base(&near);
    for _ in 0..LIFT_TRIES {
        let first = if near_cycle {
            up_diag(&near[lu], &x1)
        } else {
            Point::new(x1.clone(), &max_y(&near) + &int(lift))
        };
        let chain = chain_up(first, path, px)?;
        let target = up_diag(chain.last().unwrap(), &far[0].x);
        let mut top = far.clone();
        translate(&mut top, &ExactCoord::zero(), &(&target.y - &far[0].y));
        let mut canvas = Canvas::new(g.n());
        canvas.put_piece(&pu, &near);
        for (&v, p) in path.iter().zip(chain) {
            canvas.put(v, p);
        }
        for (&l, p) in order.iter().zip(top) {
            canvas.put(pw.map[l], p);
        }
        let pts = canvas.finish();
        if check(g, &pts, px) {
            return Ok(pts);
        }
        if near_cycle {
            break;
        }
        lift *= 2;
    }
    Err(failed("path between a subgraph and a cycle"))
}

fn cycle_order_from(g: &Graph, start: VertexId) -> Vec<VertexId> {
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = g.neighbors(start)[0];
    while cur != start {
        order.push(cur);
        let next = others(g, cur, &[prev])[0];
        prev = cur;
        cur = next;
    }
    order
}

/// The run closes a cycle through its single neighbour `u`.
fn loop_case(
    g: &Graph,
    px: &[Option<ExactCoord>],
    run: &[VertexId],
    u: VertexId,
    ctx: &mut Ctx,
) -> Result<Vec<Point>, EmbedError> {
    let t = others(g, u, &[run[0], run[run.len() - 1]])[0];
    if g.degree(t) == 2 {
        let (r2, a, b) = maximal_run(g, t);
        let (r2, far) = if a == u { (r2, b) } else { (r2.into_iter().rev().collect(), a) };
        return path_case(g, px, &r2, u, far, ctx);
    }
    let xs = run.iter().map(|&v| req(px, v)).collect::<Result<Vec<_>, _>>()?;
    let mut cyc = embed_cycle(&xs);
    let x0 = cyc[0].x.clone();
    let mut members = vec![u];
    members.extend_from_slice(run);
    let piece = Piece::induced(g, &keep_without(g, &members));
    if piece.g.is_cycle() {
        return Err(failed("two cycles joined by an edge reached the loop case"));
    }
    let mut lpx = sub_px(g, &piece, px, ctx);
    let lt = piece.local(t);
    lpx[lt] = Some(x0);
    let rest = connected(&piece.g, &lpx, ctx)?;
    let shift = &(&max_y(&rest) - &min_y(&cyc)) + &int(lift_base(&rest));
    translate(&mut cyc, &ExactCoord::zero(), &shift);
    let mut step = int(lift_base(&rest));
    for _ in 0..LIFT_TRIES {
        let mut canvas = Canvas::new(g.n());
        canvas.put_piece(&piece, &rest);
        for (&v, p) in members.iter().zip(&cyc) {
            canvas.put(v, p.clone());
        }
        let pts = canvas.finish();
        if check(g, &pts, px) {
            return Ok(pts);
        }
        translate(&mut cyc, &ExactCoord::zero(), &step);
        step = &step + &step;
    }
    Err(failed("cycle hanging above the rest"))
}
