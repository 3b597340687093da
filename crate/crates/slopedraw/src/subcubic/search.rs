//! Exhaustive fallback for very small instances: every assignment of a basic
//! slope to each edge is tried, the coordinates are solved exactly, and the
//! first certified drawing is kept.

use crate::coords::{ExactCoord, Point, Rat};
use crate::graph::Graph;

use super::{check, Ctx};

/// Largest edge count searched; the loop visits `4^m` assignments.
const MAX_EDGES: usize = 7;

/// One linear equation `Σ coeffs·vars = rhs` over the unknowns
/// `x₀ … x_{n−1}, y₀ … y_{n−1}`.
struct Row {
    coeffs: Vec<Rat>,
    rhs: ExactCoord,
}

pub(super) fn small_graph(g: &Graph, px: &[Option<ExactCoord>], ctx: &mut Ctx) -> Option<Vec<Point>> {
    let (n, m) = (g.n(), g.m());
    if m > MAX_EDGES {
        return None;
    }
    let free: Vec<ExactCoord> = (0..2 * n).map(|_| ctx.fresh()).collect();
    let unit = |i: usize, s: i64| (i, Rat::from_integer(s.into()));
    for code in 0..4usize.pow(m as u32) {
        let mut rows = Vec::new();
        let mut push = |terms: &[(usize, Rat)], rhs: ExactCoord| {
            let mut coeffs = vec![Rat::from_integer(0.into()); 2 * n];
            for (i, c) in terms {
                coeffs[*i] += c;
            }
            rows.push(Row { coeffs, rhs });
        };
        push(&[unit(n, 1)], ExactCoord::zero());
        for (v, x) in px.iter().enumerate() {
            if let Some(x) = x {
                push(&[unit(v, 1)], x.clone());
            }
        }
        for (e, &(a, b)) in g.edges().iter().enumerate() {
            let (xa, xb, ya, yb) = (a, b, n + a, n + b);
            let terms = match (code >> (2 * e)) & 3 {
                0 => vec![unit(ya, 1), unit(yb, -1)],
                1 => vec![unit(xa, 1), unit(xb, -1)],
                2 => vec![unit(xb, 1), unit(xa, -1), unit(yb, -1), unit(ya, 1)],
                _ => vec![unit(xb, 1), unit(xa, -1), unit(yb, 1), unit(ya, -1)],
            };
            push(&terms, ExactCoord::zero());
        }
        let Some(sol) = solve(rows, 2 * n, &free) else { continue };
        let pts: Vec<Point> = (0..n).map(|v| Point::new(sol[v].clone(), sol[n + v].clone())).collect();
        if check(g, &pts, px) {
            return Some(pts);
        }
    }
    None
}

/// Gauss–Jordan elimination; free unknowns take the values in `free`.
fn solve(mut rows: Vec<Row>, vars: usize, free: &[ExactCoord]) -> Option<Vec<ExactCoord>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..vars {
        let Some(p) = (r..rows.len()).find(|&i| rows[i].coeffs[col] != Rat::from_integer(0.into())) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Rat::from_integer(1.into()) / &rows[r].coeffs[col];
        rows[r].coeffs.iter_mut().for_each(|c| *c *= &inv);
        rows[r].rhs = rows[r].rhs.scale(&inv);
        for i in 0..rows.len() {
            if i == r || rows[i].coeffs[col] == Rat::from_integer(0.into()) {
                continue;
            }
            let f = rows[i].coeffs[col].clone();
            let (pivot_coeffs, pivot_rhs) = (rows[r].coeffs.clone(), rows[r].rhs.clone());
            for (c, pc) in rows[i].coeffs.iter_mut().zip(&pivot_coeffs) {
                *c -= &f * pc;
            }
            rows[i].rhs = &rows[i].rhs - &pivot_rhs.scale(&f);
        }
        pivots.push(col);
        r += 1;
    }
    if rows[r..].iter().any(|row| !row.rhs.is_zero()) {
        return None;
    }
    let mut sol: Vec<Option<ExactCoord>> = vec![None; vars];
    for col in 0..vars {
        if !pivots.contains(&col) {
            sol[col] = Some(free[col].clone());
        }
    }
    for (i, &col) in pivots.iter().enumerate().rev() {
        let mut val = rows[i].rhs.clone();
        for (j, c) in rows[i].coeffs.iter().enumerate() {
            if j != col && *c != Rat::from_integer(0.into()) {
                val = &val - &sol[j].clone().expect("free or solved").scale(c);
            }
        }
        sol[col] = Some(val);
    }
    sol.into_iter().collect()
}
