use num_traits::{One, Signed, Zero};

use crate::coords::{ExactCoord, Point, Rat};
use crate::drawing::Drawing;
use crate::graph::{Graph, TriangleContraction};
use crate::slope::{slope_of, Slope};
use crate::verify::verify_drawing;

use super::CubicError;

/// Halvings of the neighbourhood radius before giving up on a placement.
pub(crate) const SHRINK_TRIES: usize = 20;

/// Undoes a triangle contraction in a drawing of the contracted graph `h`.
/// One triangle vertex takes the place of the contracted vertex `v`, the
/// other two move a short way along the edges towards their outside
/// neighbours, and the edge between them gets a slope of the drawing's set,
/// one unused at `v` when possible. All other vertices keep their positions.
pub fn expand_triangle(h: &Graph, d: &Drawing, rec: &TriangleContraction) -> Result<Drawing, CubicError> {
    expand_counted(h, d, rec).map(|(d, _)| d)
}

/// As [`expand_triangle`], also returning how many times the radius was
/// halved.
pub(crate) fn expand_counted(
    h: &Graph,
    d: &Drawing,
    rec: &TriangleContraction,
) -> Result<(Drawing, usize), CubicError> {
    let t = rec.contracted_vertex;
    if d.points.len() != h.n() || t >= h.n() {
        return Err(CubicError::Precondition("drawing does not match the contracted graph".into()));
    }
    let n = h.n() + 2;
    let g = Graph::new(n, &rec.expand_edges(h)).map_err(|e| CubicError::Precondition(e.to_string()))?;
    let mut base = vec![Point::ints(0, 0); n];
    for (u, p) in d.points.iter().enumerate() {
        if u != t {
            base[rec.new_to_old[u]] = p.clone();
        }
    }
    let v = d.points[t].clone();
    let mut dirs = Vec::with_capacity(3);
    let mut used = Vec::with_capacity(3);
    for &o in &rec.outside {
        let s = slope_of(&v, &base[o]).ok_or(CubicError::NoFreeSlope)?;
        dirs.push(toward(&s, &v, &base[o]));
        used.push(s);
    }

    // For each vertex j left at v and each slope σ, write σ's direction as
    // α·u_k + β·u_l; opposite signs give positive steps a, b along the two
    // boundary edges with t_l − t_k parallel to σ.
    let mut options = Vec::new();
    for j in 0..3 {
        let (k, l) = ((j + 1) % 3, (j + 2) % 3);
        for s in d.slopes.iter() {
            if *s == used[k] || *s == used[l] {
                continue;
            }
            let (sx, sy) = s.direction();
            let Some((alpha, beta)) = solve2(&dirs[k], &dirs[l], &(sx, sy)) else { continue };
            let (a, b) = if alpha.is_negative() && beta.is_positive() {
                (-alpha, beta)
            } else if alpha.is_positive() && beta.is_negative() {
                (alpha, -beta)
            } else {
                continue;
            };
            let m = if a > b { a.clone() } else { b.clone() };
            options.push((used.contains(s), j, a / &m, b / &m));
        }
    }
    if options.is_empty() {
        return Err(CubicError::NoFreeSlope);
    }
    options.sort_by(|x, y| (x.0, x.1).cmp(&(y.0, y.1)));

    let reach = dirs.iter().map(|(x, y)| x.abs() + y.abs()).fold(Rat::one(), |m, r| if r > m { r } else { m });
    let mut eps = initial_radius(&g, &base, &v, rec) / reach;
    let step = |dir: &(Rat, Rat), len: &Rat| {
        Point::new(&v.x + &ExactCoord::from_rat(len * &dir.0), &v.y + &ExactCoord::from_rat(len * &dir.1))
    };
    for tries in 0..=SHRINK_TRIES {
        for (_, j, a, b) in &options {
            let (k, l) = ((j + 1) % 3, (j + 2) % 3);
            let mut pts = base.clone();
            pts[rec.original_triangle[*j]] = v.clone();
            pts[rec.original_triangle[k]] = step(&dirs[k], &(&eps * a));
            pts[rec.original_triangle[l]] = step(&dirs[l], &(&eps * b));
            if verify_drawing(&g, &pts, &d.slopes).is_ok() {
                return Ok((Drawing::new(pts, d.slopes.clone()), tries));
            }
        }
        eps /= Rat::from_integer(2.into());
    }
    Err(CubicError::Failed("triangle expansion did not verify".into()))
}

/// Direction vector of `s` pointing from `p` towards `q`.
fn toward(s: &Slope, p: &Point, q: &Point) -> (Rat, Rat) {
    let (dx, dy) = s.direction();
    let ahead = match s {
        Slope::Vertical => (&q.y - &p.y).signum().is_gt(),
        Slope::Tangent(_) => (&q.x - &p.x).signum().is_gt(),
    };
    if ahead {
        (dx, dy)
    } else {
        (-dx, -dy)
    }
}

/// `(α, β)` with `α·u + β·w = s`, if `u` and `w` are independent.
fn solve2(u: &(Rat, Rat), w: &(Rat, Rat), s: &(Rat, Rat)) -> Option<(Rat, Rat)> {
    let det = &u.0 * &w.1 - &u.1 * &w.0;
    if det.is_zero() {
        return None;
    }
    let alpha = (&s.0 * &w.1 - &s.1 * &w.0) / &det;
    let beta = (&u.0 * &s.1 - &u.1 * &s.0) / &det;
    Some((alpha, beta))
}

/// A power of two below a quarter of the approximate clearance around `v`:
/// the distance to the nearest other vertex and to the nearest edge not at
/// the triangle.
fn initial_radius(g: &Graph, pts: &[Point], v: &Point, rec: &TriangleContraction) -> Rat {
    let tri = rec.original_triangle;
    let (vx, vy) = v.approx();
    let mut clear = f64::INFINITY;
    for (w, p) in pts.iter().enumerate() {
        if !tri.contains(&w) {
            let (x, y) = p.approx();
            clear = clear.min((x - vx).hypot(y - vy));
        }
    }
    for &(a, b) in g.edges() {
        if tri.contains(&a) || tri.contains(&b) {
            continue;
        }
        let ((ax, ay), (bx, by)) = (pts[a].approx(), pts[b].approx());
        let (ex, ey) = (bx - ax, by - ay);
        let len2 = ex * ex + ey * ey;
        let s = if len2 > 0.0 { (((vx - ax) * ex + (vy - ay) * ey) / len2).clamp(0.0, 1.0) } else { 0.0 };
        clear = clear.min((ax + s * ex - vx).hypot(ay + s * ey - vy));
    }
    let mut r = Rat::one();
    if clear.is_finite() {
        while crate::coords::rat_to_f64(&r) > clear / 4.0 {
            r /= Rat::from_integer(2.into());
        }
    }
    r
}
