use crate::coords::{compare, ExactCoord, Point, Rat};
use crate::drawing::ceil_int;

pub(super) fn int(k: i64) -> ExactCoord {
    ExactCoord::int(k)
}

pub(super) fn ne_at(p: &Point, x: &ExactCoord) -> Point {
    Point::new(x.clone(), &p.y + &(x - &p.x))
}

pub(super) fn nw_at(p: &Point, x: &ExactCoord) -> Point {
    Point::new(x.clone(), &p.y + &(&p.x - x))
}

pub(super) fn se_at(p: &Point, x: &ExactCoord) -> Point {
    Point::new(x.clone(), &p.y - &(x - &p.x))
}

pub(super) fn w_at(p: &Point, x: &ExactCoord) -> Point {
    Point::new(x.clone(), p.y.clone())
}

/// The point Northeast or Northwest of `p` on the vertical line at `x`.
pub(super) fn up_diag(p: &Point, x: &ExactCoord) -> Point {
    if compare(x, &p.x).is_gt() {
        ne_at(p, x)
    } else {
        nw_at(p, x)
    }
}

/// Northeast of `p` if `x` lies to the East, otherwise West.
pub(super) fn ne_or_w(p: &Point, x: &ExactCoord) -> Point {
    if compare(x, &p.x).is_gt() {
        ne_at(p, x)
    } else {
        w_at(p, x)
    }
}

/// Northeast of `p` or West of it, landing on the line `x + y = k`.
pub(super) fn ne_or_w_to_antidiagonal(p: &Point, k: &ExactCoord) -> Point {
    let s = &p.x + &p.y;
    if compare(&s, k).is_lt() {
        let t = (k - &s).scale(&Rat::new(1.into(), 2.into()));
        Point::new(&p.x + &t, &p.y + &t)
    } else {
        Point::new(k - &p.y, p.y.clone())
    }
}

pub(super) fn max_of<'a, I: IntoIterator<Item = &'a ExactCoord>>(it: I) -> Option<ExactCoord> {
    it.into_iter().fold(None, |acc: Option<&ExactCoord>, c| match acc {
        Some(a) if compare(a, c).is_ge() => Some(a),
        _ => Some(c),
    })
    .cloned()
}

pub(super) fn min_of<'a, I: IntoIterator<Item = &'a ExactCoord>>(it: I) -> Option<ExactCoord> {
    it.into_iter().fold(None, |acc: Option<&ExactCoord>, c| match acc {
        Some(a) if compare(a, c).is_le() => Some(a),
        _ => Some(c),
    })
    .cloned()
}

pub(super) fn max_y(pts: &[Point]) -> ExactCoord {
    max_of(pts.iter().map(|p| &p.y)).unwrap_or_else(ExactCoord::zero)
}

pub(super) fn min_y(pts: &[Point]) -> ExactCoord {
    min_of(pts.iter().map(|p| &p.y)).unwrap_or_else(ExactCoord::zero)
}

/// Smallest non-negative integer at least `max − min` of the values.
pub(super) fn span<'a, I: IntoIterator<Item = &'a ExactCoord> + Clone>(it: I) -> i64 {
    match (max_of(it.clone()), min_of(it)) {
        (Some(hi), Some(lo)) => ceil_int(&(&hi - &lo)).max(0),
        _ => 0,
    }
}

pub(super) fn height(pts: &[Point]) -> i64 {
    span(pts.iter().map(|p| &p.y))
}

pub(super) fn translate(pts: &mut [Point], dx: &ExactCoord, dy: &ExactCoord) {
    for p in pts {
        *p = p.translate(dx, dy);
    }
}

/// `y ↦ −y`.
pub(super) fn reflect_x_axis(pts: &mut [Point]) {
    for p in pts {
        p.y = -&p.y;
    }
}

/// Unit step `(sign dx, sign dy)` from `p` towards `q`.
pub(super) fn direction(p: &Point, q: &Point) -> (i64, i64) {
    let s = |c: ExactCoord| match c.signum() {
        std::cmp::Ordering::Less => -1,
        std::cmp::Ordering::Equal => 0,
        std::cmp::Ordering::Greater => 1,
    };
    (s(&q.x - &p.x), s(&q.y - &p.y))
}

/// `p + t·(dx, dy)` for a rational `t`.
pub(super) fn offset(p: &Point, t: &Rat, dx: &Rat, dy: &Rat) -> Point {
    Point::new(&p.x + &ExactCoord::from_rat(t * dx), &p.y + &ExactCoord::from_rat(t * dy))
}
