//! A drawing: one exact point per vertex plus the declared slope set.

use crate::coords::{compare, ExactCoord, Point, Rat};
use crate::slope::SlopeSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Drawing {
    pub points: Vec<Point>,
    pub slopes: SlopeSet,
}

impl Drawing {
    pub fn new(points: Vec<Point>, slopes: SlopeSet) -> Drawing {
        Drawing { points, slopes }
    }

    pub fn bbox(&self) -> Option<BBox> {
        BBox::of(self.points.iter())
    }
}

/// Exact axis-aligned bounding box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BBox {
    pub min_x: ExactCoord,
    pub max_x: ExactCoord,
    pub min_y: ExactCoord,
    pub max_y: ExactCoord,
}

impl BBox {
    pub fn of<'a, I: IntoIterator<Item = &'a Point>>(it: I) -> Option<BBox> {
        let mut it = it.into_iter();
        let first = it.next()?;
        let mut b = BBox {
            min_x: first.x.clone(),
            max_x: first.x.clone(),
            min_y: first.y.clone(),
            max_y: first.y.clone(),
        };
        for p in it {
            if compare(&p.x, &b.min_x).is_lt() {
                b.min_x = p.x.clone();
            }
            if compare(&p.x, &b.max_x).is_gt() {
                b.max_x = p.x.clone();
            }
            if compare(&p.y, &b.min_y).is_lt() {
                b.min_y = p.y.clone();
            }
            if compare(&p.y, &b.max_y).is_gt() {
                b.max_y = p.y.clone();
            }
        }
        Some(b)
    }

    pub fn width(&self) -> ExactCoord {
        &self.max_x - &self.min_x
    }

    pub fn height(&self) -> ExactCoord {
        &self.max_y - &self.min_y
    }

    /// An integer at least as large as both the width and the height.
    pub fn extent_ceil(&self) -> i64 {
        ceil_int(&self.width()).max(ceil_int(&self.height())).max(1)
    }
}

/// Smallest integer `k` with `k ≥ c`, certified by exact comparison.
pub fn ceil_int(c: &ExactCoord) -> i64 {
    if let Some(r) = c.as_rat() {
        let f = r.ceil();
        return num_traits::ToPrimitive::to_i64(f.numer()).expect("coordinate fits in i64");
    }
    let mut k = c.approx().ceil() as i64;
    while compare(&ExactCoord::int(k), c).is_lt() {
        k += 1;
    }
    while compare(&ExactCoord::int(k - 1), c).is_ge() {
        k -= 1;
    }
    k
}

/// Point maps used when composing partial drawings.
pub mod transform {
    use super::*;

    pub fn translate(p: &Point, dx: &ExactCoord, dy: &ExactCoord) -> Point {
        Point::new(&p.x + dx, &p.y + dy)
    }

    /// Rotation by π about `c`.
    pub fn rotate_pi(p: &Point, c: &Point) -> Point {
        Point::new(&(&c.x + &c.x) - &p.x, &(&c.y + &c.y) - &p.y)
    }

    /// Reflection in the horizontal line through `c`.
    pub fn reflect_y(p: &Point, c: &Point) -> Point {
        Point::new(p.x.clone(), &(&c.y + &c.y) - &p.y)
    }

    /// Scaling by `k` about `c`.
    pub fn scale(p: &Point, c: &Point, k: &Rat) -> Point {
        Point::new(&c.x + &(&p.x - &c.x).scale(k), &c.y + &(&p.y - &c.y).scale(k))
    }

    /// Clockwise rotation by π/4 about `c`, scaled by √2 so that basic
    /// directions go to basic directions: `(dx, dy) ↦ (dx + dy, dy − dx)`.
    pub fn rotate_cw45(p: &Point, c: &Point) -> Point {
        let dx = &p.x - &c.x;
        let dy = &p.y - &c.y;
        Point::new(&c.x + &(&dx + &dy), &c.y + &(&dy - &dx))
    }

    /// Clockwise rotation by 3π/4 about `c`, scaled by √2:
    /// `(dx, dy) ↦ (dy − dx, −dx − dy)`.
    pub fn rotate_cw135(p: &Point, c: &Point) -> Point {
        let dx = &p.x - &c.x;
        let dy = &p.y - &c.y;
        Point::new(&c.x + &(&dy - &dx), &c.y - &(&dx + &dy))
    }
}
