//! Exact coordinates over the formal basis `{1, ξ₁, ξ₂, …}`.
//!
//! Basis index 0 is the rational unit; index `i ≥ 1` stands for `√pᵢ`, the
//! square root of the i-th prime. Square roots of distinct primes are
//! linearly independent over ℚ, so equality is decided symbolically and
//! order is decided by refining interval bounds until they separate.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

pub type Rat = BigRational;

const PRIME_TABLE_LEN: usize = 20_000;
const START_BITS: u64 = 64;
const MAX_BITS: u64 = 4096;

fn primes() -> &'static [u64] {
    static TABLE: OnceLock<Vec<u64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let limit = 240_000usize;
        let mut sieve = vec![true; limit];
        sieve[0] = false;
        sieve[1] = false;
        let mut i = 2;
        while i * i < limit {
            if sieve[i] {
                let mut j = i * i;
                while j < limit {
                    sieve[j] = false;
                    j += i;
                }
            }
            i += 1;
        }
        let out: Vec<u64> = (0..limit).filter(|&k| sieve[k]).map(|k| k as u64).collect();
        debug_assert!(out.len() >= PRIME_TABLE_LEN);
        out
    })
}

/// The prime whose square root realizes basis index `idx` (`idx ≥ 1`).
/// Index 0 maps to 1 so that `√basis_square(0)` is the unit.
pub fn basis_square(idx: u32) -> u64 {
    if idx == 0 {
        return 1;
    }
    let table = primes();
    let i = idx as usize - 1;
    assert!(i < table.len(), "basis index {idx} exceeds the prime table");
    table[i]
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Exact linear combination `Σ cᵢ·ξᵢ` kept in canonical form: sorted by
/// index, no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ExactCoord {
    terms: Vec<(u32, Rat)>,
}

impl ExactCoord {
    pub fn zero() -> Self {
        ExactCoord { terms: Vec::new() }
    }

    pub fn from_rat(r: Rat) -> Self {
        Self::term(0, r)
    }

    pub fn int(n: i64) -> Self {
        Self::from_rat(rat_int(n))
    }

    /// The basis element `ξ_idx` (`idx = 0` gives 1).
    pub fn xi(idx: u32) -> Self {
        Self::term(idx, Rat::one())
    }

    pub fn term(idx: u32, coeff: Rat) -> Self {
        if coeff.is_zero() {
            Self::zero()
        } else {
            ExactCoord { terms: vec![(idx, coeff)] }
        }
    }

    /// Builds from arbitrary (index, coefficient) pairs, merging duplicates.
    pub fn from_terms<I: IntoIterator<Item = (u32, Rat)>>(it: I) -> Self {
        let mut map: BTreeMap<u32, Rat> = BTreeMap::new();
        for (i, c) in it {
            *map.entry(i).or_insert_with(Rat::zero) += c;
        }
        ExactCoord { terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn terms(&self) -> &[(u32, Rat)] {
        &self.terms
    }

    pub fn coeff(&self, idx: u32) -> Rat {
        match self.terms.binary_search_by_key(&idx, |t| t.0) {
            Ok(k) => self.terms[k].1.clone(),
            Err(_) => Rat::zero(),
        }
    }

    pub fn support(&self) -> impl Iterator<Item = u32> + '_ {
        self.terms.iter().map(|t| t.0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some(r)` when the value is the rational `r`.
    pub fn as_rat(&self) -> Option<Rat> {
        match self.terms.as_slice() {
            [] => Some(Rat::zero()),
            [(0, c)] => Some(c.clone()),
            _ => None,
        }
    }

    pub fn scale(&self, k: &Rat) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        ExactCoord { terms: self.terms.iter().map(|(i, c)| (*i, c * k)).collect() }
    }

    fn combine(&self, other: &Self, sign: i32) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut a, mut b) = (0, 0);
        while a < self.terms.len() || b < other.terms.len() {
            let ia = self.terms.get(a).map(|t| t.0).unwrap_or(u32::MAX);
            let ib = other.terms.get(b).map(|t| t.0).unwrap_or(u32::MAX);
            if ia < ib {
                out.push(self.terms[a].clone());
                a += 1;
            } else if ib < ia {
                let c = &other.terms[b].1;
                out.push((ib, if sign > 0 { c.clone() } else { -c }));
                b += 1;
            } else {
                let c = if sign > 0 {
                    &self.terms[a].1 + &other.terms[b].1
                } else {
                    &self.terms[a].1 - &other.terms[b].1
                };
                if !c.is_zero() {
                    out.push((ia, c));
                }
                a += 1;
                b += 1;
            }
        }
        ExactCoord { terms: out }
    }

    /// Floating-point evaluation, for display and fast paths only.
    pub fn approx(&self) -> f64 {
        self.terms
            .iter()
            .map(|(i, c)| rat_to_f64(c) * (basis_square(*i) as f64).sqrt())
            .sum()
    }

    /// Sign of the realized value.
    pub fn signum(&self) -> Ordering {
        if self.terms.is_empty() {
            return Ordering::Equal;
        }
        if let [(0, c)] = self.terms.as_slice() {
            return c.cmp(&Rat::zero());
        }
        if let Some(s) = self.fast_sign() {
            return s;
        }
        self.exact_sign()
    }

    fn fast_sign(&self) -> Option<Ordering> {
        let mut sum = 0.0f64;
        let mut mag = 0.0f64;
        for (i, c) in &self.terms {
            let cf = rat_to_f64(c);
            if !cf.is_finite() || (cf == 0.0) {
                return None;
            }
            let t = cf * (basis_square(*i) as f64).sqrt();
            sum += t;
            mag += t.abs();
        }
        let bound = mag * 1e-12;
        if sum > bound {
            Some(Ordering::Greater)
        } else if sum < -bound {
            Some(Ordering::Less)
        } else {
            None
        }
    }

    fn exact_sign(&self) -> Ordering {
        let denom = self
            .terms
            .iter()
            .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let ints: Vec<(u64, BigInt)> = self
            .terms
            .iter()
            .map(|(i, c)| (basis_square(*i), c.numer() * (&denom / c.denom())))
            .collect();
        let mut bits = START_BITS;
        while bits <= MAX_BITS {
            let scale = BigInt::one() << (2 * bits);
            let (mut lo, mut hi) = (BigInt::zero(), BigInt::zero());
            for (p, a) in &ints {
                if *p == 1 {
                    let v = a * (BigInt::one() << bits);
                    lo += &v;
                    hi += v;
                    continue;
                }
                let s = (BigInt::from(*p) * &scale).sqrt();
                let s1 = &s + 1u32;
                if a.sign() == Sign::Plus {
                    lo += a * &s;
                    hi += a * &s1;
                } else {
                    lo += a * &s1;
                    hi += a * &s;
                }
            }
            if lo.sign() == Sign::Plus {
                return Ordering::Greater;
            }
            if hi.sign() == Sign::Minus {
                return Ordering::Less;
            }
            bits *= 2;
        }
        panic!("interval refinement exceeded {MAX_BITS} bits on a nonzero combination");
    }
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    match (r.numer().to_f64(), r.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => {
            // Shift both parts down to a representable range.
            let nb = r.numer().bits() as i64;
            let db = r.denom().bits() as i64;
            let shift_n = (nb - 900).max(0) as usize;
            let shift_d = (db - 900).max(0) as usize;
            let n = (r.numer() >> shift_n).to_f64().unwrap_or(0.0);
            let d = (r.denom() >> shift_d).to_f64().unwrap_or(1.0);
            n / d * 2f64.powi((shift_n as i32) - (shift_d as i32))
        }
    }
}

/// Total order on coordinates under the √prime realization.
pub fn compare(a: &ExactCoord, b: &ExactCoord) -> Ordering {
    if a == b {
        return Ordering::Equal;
    }
    (a - b).signum()
}

impl PartialOrd for ExactCoord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExactCoord {
    fn cmp(&self, other: &Self) -> Ordering {
        compare(self, other)
    }
}

impl<'a> Add<&'a ExactCoord> for &'a ExactCoord {
    type Output = ExactCoord;
    fn add(self, rhs: &ExactCoord) -> ExactCoord {
        self.combine(rhs, 1)
    }
}

impl<'a> Sub<&'a ExactCoord> for &'a ExactCoord {
    type Output = ExactCoord;
    fn sub(self, rhs: &ExactCoord) -> ExactCoord {
        self.combine(rhs, -1)
    }
}

impl Add for ExactCoord {
    type Output = ExactCoord;
    fn add(self, rhs: ExactCoord) -> ExactCoord {
        self.combine(&rhs, 1)
    }
}

impl Sub for ExactCoord {
    type Output = ExactCoord;
    fn sub(self, rhs: ExactCoord) -> ExactCoord {
        self.combine(&rhs, -1)
    }
}

impl Neg for &ExactCoord {
    type Output = ExactCoord;
    fn neg(self) -> ExactCoord {
        ExactCoord { terms: self.terms.iter().map(|(i, c)| (*i, -c)).collect() }
    }
}

impl Neg for ExactCoord {
    type Output = ExactCoord;
    fn neg(self) -> ExactCoord {
        -&self
    }
}

impl Mul<&Rat> for &ExactCoord {
    type Output = ExactCoord;
    fn mul(self, k: &Rat) -> ExactCoord {
        self.scale(k)
    }
}

impl fmt::Debug for ExactCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ExactCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (i, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k > 0 {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            } else if neg {
                write!(f, "-")?;
            }
            if *i == 0 {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "ξ{i}")?;
            } else {
                write!(f, "{abs}·ξ{i}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Point {
    pub x: ExactCoord,
    pub y: ExactCoord,
}

impl Point {
    pub fn new(x: ExactCoord, y: ExactCoord) -> Self {
        Point { x, y }
    }

    pub fn ints(x: i64, y: i64) -> Self {
        Point::new(ExactCoord::int(x), ExactCoord::int(y))
    }

    pub fn approx(&self) -> (f64, f64) {
        (self.x.approx(), self.y.approx())
    }

    pub fn translate(&self, dx: &ExactCoord, dy: &ExactCoord) -> Point {
        Point::new(&self.x + dx, &self.y + dy)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoordError {
    #[error("degenerate segment: both endpoints coincide")]
    DegenerateSegment,
}

/// Direction class of a segment, up to orientation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SlopeClass {
    E,
    N,
    NE,
    NW,
    Other { dx: ExactCoord, dy: ExactCoord },
}

pub fn segment_slope_class(p: &Point, q: &Point) -> Result<SlopeClass, CoordError> {
    let dx = &q.x - &p.x;
    let dy = &q.y - &p.y;
    if dx.is_zero() && dy.is_zero() {
        return Err(CoordError::DegenerateSegment);
    }
    Ok(if dy.is_zero() {
        SlopeClass::E
    } else if dx.is_zero() {
        SlopeClass::N
    } else if dx == dy {
        SlopeClass::NE
    } else if dx == -&dy {
        SlopeClass::NW
    } else {
        SlopeClass::Other { dx, dy }
    })
}

/// Product of two coordinates in the extended basis `{ξᵢ·ξⱼ : i ≤ j}`,
/// with `ξᵢ² = pᵢ` folded into the unit.
fn product(a: &ExactCoord, b: &ExactCoord) -> BTreeMap<(u32, u32), Rat> {
    let mut out: BTreeMap<(u32, u32), Rat> = BTreeMap::new();
    for (i, ci) in a.terms() {
        for (j, cj) in b.terms() {
            let c = ci * cj;
            let key = if i == j {
                (0, 0)
            } else {
                (*i.min(j), *i.max(j))
            };
            let c = if i == j && *i != 0 { c * rat_int(basis_square(*i) as i64) } else { c };
            *out.entry(key).or_insert_with(Rat::zero) += c;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Whether the vectors `(ax, ay)` and `(bx, by)` are parallel.
pub fn parallel(ax: &ExactCoord, ay: &ExactCoord, bx: &ExactCoord, by: &ExactCoord) -> bool {
    let mut lhs = product(ax, by);
    for (k, c) in product(ay, bx) {
        *lhs.entry(k).or_insert_with(Rat::zero) -= c;
    }
    lhs.values().all(|c| c.is_zero())
}

/// Whether `r` lies strictly between `p` and `q` on the segment `pq`.
pub fn point_on_open_segment(r: &Point, p: &Point, q: &Point) -> bool {
    assert!(p != q, "point_on_open_segment needs distinct endpoints");
    if r == p || r == q {
        return false;
    }
    let (dx, dy) = (&q.x - &p.x, &q.y - &p.y);
    let (ex, ey) = (&r.x - &p.x, &r.y - &p.y);
    if !parallel(&dx, &dy, &ex, &ey) {
        return false;
    }
    strictly_between(r, p, q)
}

/// Betweenness for a point already known to be on the line `pq`.
pub(crate) fn strictly_between(r: &Point, p: &Point, q: &Point) -> bool {
    let (a, b, c) = if p.x != q.x { (&p.x, &r.x, &q.x) } else { (&p.y, &r.y, &q.y) };
    let lo_hi = compare(a, c);
    match lo_hi {
        Ordering::Less => compare(a, b) == Ordering::Less && compare(b, c) == Ordering::Less,
        Ordering::Greater => compare(c, b) == Ordering::Less && compare(b, a) == Ordering::Less,
        Ordering::Equal => false,
    }
}
