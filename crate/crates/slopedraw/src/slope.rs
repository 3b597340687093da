//! Edge slopes: rational tangents plus a vertical symbol.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::coords::{rat_int, ExactCoord, Point, Rat};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slope {
    Tangent(Rat),
    Vertical,
}

impl Slope {
    pub fn horizontal() -> Slope {
        Slope::Tangent(Rat::zero())
    }

    pub fn diagonal() -> Slope {
        Slope::Tangent(Rat::one())
    }

    pub fn antidiagonal() -> Slope {
        Slope::Tangent(-Rat::one())
    }

    /// Homogeneous direction vector `(dx, dy)`.
    pub fn direction(&self) -> (Rat, Rat) {
        match self {
            Slope::Tangent(t) => (Rat::one(), t.clone()),
            Slope::Vertical => (Rat::zero(), Rat::one()),
        }
    }

    pub fn from_direction(dx: &Rat, dy: &Rat) -> Slope {
        if dx.is_zero() {
            Slope::Vertical
        } else {
            Slope::Tangent(dy / dx)
        }
    }

    /// Whether the exact displacement `(dx, dy)` has this slope.
    pub fn matches(&self, dx: &ExactCoord, dy: &ExactCoord) -> bool {
        match self {
            Slope::Vertical => dx.is_zero() && !dy.is_zero(),
            Slope::Tangent(t) => !dx.is_zero() && *dy == dx.scale(t),
        }
    }

    /// Key of the line through `p` with this slope: two points share a
    /// key exactly when the segment between them has this slope.
    pub fn line_key(&self, p: &Point) -> ExactCoord {
        match self {
            Slope::Vertical => p.x.clone(),
            Slope::Tangent(t) => &p.y - &p.x.scale(t),
        }
    }
}

/// The rational slope of `pq`, if it has one.
pub fn slope_of(p: &Point, q: &Point) -> Option<Slope> {
    let dx = &q.x - &p.x;
    let dy = &q.y - &p.y;
    if dx.is_zero() {
        return if dy.is_zero() { None } else { Some(Slope::Vertical) };
    }
    let (k, c) = dx.terms()[0].clone();
    let t = dy.coeff(k) / c;
    if dy == dx.scale(&t) {
        Some(Slope::Tangent(t))
    } else {
        None
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slope::Vertical => write!(f, "vertical"),
            Slope::Tangent(t) => write!(f, "{t}"),
        }
    }
}

impl FromStr for Slope {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "vertical" {
            return Ok(Slope::Vertical);
        }
        parse_rat(s).map(Slope::Tangent)
    }
}

pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: num_bigint::BigInt = n.trim().parse().map_err(|_| format!("bad rational {s:?}"))?;
            let d: num_bigint::BigInt = d.trim().parse().map_err(|_| format!("bad rational {s:?}"))?;
            if d.is_zero() {
                return Err(format!("zero denominator in {s:?}"));
            }
            Ok(Rat::new(n, d))
        }
        None => {
            let n: num_bigint::BigInt = s.parse().map_err(|_| format!("bad rational {s:?}"))?;
            Ok(Rat::from_integer(n))
        }
    }
}

/// A finite set of slopes, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SlopeSet(Vec<Slope>);

impl SlopeSet {
    pub fn new<I: IntoIterator<Item = Slope>>(it: I) -> SlopeSet {
        let mut v: Vec<Slope> = it.into_iter().collect();
        v.sort();
        v.dedup();
        SlopeSet(v)
    }

    /// `{0, π/4, π/2, −π/4}`.
    pub fn basic() -> SlopeSet {
        SlopeSet::new([Slope::horizontal(), Slope::diagonal(), Slope::antidiagonal(), Slope::Vertical])
    }

    /// `{π/2, ±π/4, arctan c}`.
    pub fn matching(c: &Rat) -> SlopeSet {
        SlopeSet::new([Slope::Vertical, Slope::diagonal(), Slope::antidiagonal(), Slope::Tangent(c.clone())])
    }

    pub fn contains(&self, s: &Slope) -> bool {
        self.0.binary_search(s).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Slope> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn union(&self, other: &SlopeSet) -> SlopeSet {
        SlopeSet::new(self.0.iter().chain(other.0.iter()).cloned())
    }

    pub fn as_slice(&self) -> &[Slope] {
        &self.0
    }
}

/// Convenience for tests and fixtures.
pub fn tangent(n: i64, d: i64) -> Slope {
    Slope::Tangent(rat_int(n) / rat_int(d))
}
