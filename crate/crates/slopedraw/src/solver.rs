//! Positive solutions of `L₁(x)/x₁ = … = Lₙ(x)/xₙ` for linear forms with
//! non-negative coefficients.
//!
//! For a fixed common value `c` the system is linear: `(cI − A)x = a₀`.
//! When `c` exceeds the spectral radius of `A` the inverse is the
//! non-negative Neumann series `Σ Aᵏ/cᵏ⁺¹`, so `xᵢ > 0` exactly when node
//! `i` of the dependency digraph is reachable from node 0. The fixed-point
//! iteration from the existence proof is kept as an independent floating
//! point cross-check.

use std::collections::VecDeque;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::coords::{rat_to_f64, Rat};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("form {0} is not reachable from the constant node")]
    UnreachableNode(usize),
    #[error("coefficient matrix is not {n}×{n}")]
    Shape { n: usize },
    #[error("coefficient a[{0}][{1}] is negative")]
    NegativeCoefficient(usize, usize),
    #[error("common value {0} gives a singular system")]
    Singular(String),
    #[error("common value {c} gives a non-positive x[{index}]")]
    NotPositive { c: String, index: usize },
    #[error("iteration did not converge after {0} steps")]
    NonConvergence(usize),
}

/// Forms `Lᵢ(x) = a₀[i] + Σⱼ a[i][j]·xⱼ`, indexed from 0 here; node 0 of
/// the dependency digraph is the constant term and form `i` is node `i+1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearFormSystem {
    a0: Vec<Rat>,
    a: Vec<Vec<Rat>>,
}

impl LinearFormSystem {
    pub fn new(a0: Vec<Rat>, a: Vec<Vec<Rat>>) -> Result<Self, SolverError> {
        let n = a0.len();
        if a.len() != n || a.iter().any(|row| row.len() != n) {
            return Err(SolverError::Shape { n });
        }
        for (i, c) in a0.iter().enumerate() {
            if c.is_negative() {
                return Err(SolverError::NegativeCoefficient(i, 0));
            }
        }
        for (i, row) in a.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if c.is_negative() {
                    return Err(SolverError::NegativeCoefficient(i, j + 1));
                }
            }
        }
        Ok(LinearFormSystem { a0, a })
    }

    pub fn n(&self) -> usize {
        self.a0.len()
    }

    pub fn constants(&self) -> &[Rat] {
        &self.a0
    }

    pub fn matrix(&self) -> &[Vec<Rat>] {
        &self.a
    }

    /// Edges `(j, i)` of the dependency digraph, node 0 being the constant.
    pub fn gamma_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n() {
            if !self.a0[i].is_zero() {
                out.push((0, i + 1));
            }
            for j in 0..self.n() {
                if !self.a[i][j].is_zero() {
                    out.push((j + 1, i + 1));
                }
            }
        }
        out
    }

    /// Distance from node 0 to each form; `None` if unreachable.
    pub fn r_levels(&self) -> Vec<Option<usize>> {
        let n = self.n();
        let mut dist = vec![None; n];
        let mut queue = VecDeque::new();
        for i in 0..n {
            if !self.a0[i].is_zero() {
                dist[i] = Some(1);
                queue.push_back(i);
            }
        }
        while let Some(j) = queue.pop_front() {
            let d = dist[j].unwrap();
            for i in 0..n {
                if dist[i].is_none() && !self.a[i][j].is_zero() {
                    dist[i] = Some(d + 1);
                    queue.push_back(i);
                }
            }
        }
        dist
    }

    pub fn max_row_sum(&self) -> Rat {
        self.a.iter().map(|row| row.iter().sum::<Rat>()).max().unwrap_or_else(Rat::zero)
    }

    /// `Lᵢ(x)`.
    pub fn eval(&self, i: usize, x: &[Rat]) -> Rat {
        self.a[i].iter().zip(x).fold(self.a0[i].clone(), |acc, (c, xj)| acc + c * xj)
    }

    pub fn scaled(&self, t: &Rat) -> LinearFormSystem {
        LinearFormSystem {
            a0: self.a0.iter().map(|c| c * t).collect(),
            a: self.a.iter().map(|row| row.iter().map(|c| c * t).collect()).collect(),
        }
    }

    fn check_reachable(&self) -> Result<Vec<usize>, SolverError> {
        self.r_levels()
            .into_iter()
            .enumerate()
            .map(|(i, r)| r.ok_or(SolverError::UnreachableNode(i)))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverSolution {
    pub x: Vec<Rat>,
    pub common_value: Rat,
    /// `c·xᵢ − Lᵢ(x)`, recomputed after solving.
    pub residuals: Vec<Rat>,
}

impl SolverSolution {
    pub fn is_exact(&self) -> bool {
        self.residuals.iter().all(Zero::is_zero)
    }
}

/// `max(2, 1 + max row sum)`: strictly diagonally dominant and above 1.
pub fn default_common_value(sys: &LinearFormSystem) -> Rat {
    let two = Rat::from_integer(2.into());
    let c = Rat::one() + sys.max_row_sum();
    if c > two {
        c
    } else {
        two
    }
}

pub fn solve_equal_ratios(sys: &LinearFormSystem, c: Option<Rat>) -> Result<SolverSolution, SolverError> {
    sys.check_reachable()?;
    let c = c.unwrap_or_else(|| default_common_value(sys));
    let n = sys.n();
    let mut m: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rat> = sys.a[i].iter().map(|v| -v).collect();
            row[i] += &c;
            row.push(sys.a0[i].clone());
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero()).ok_or_else(|| SolverError::Singular(c.to_string()))?;
        m.swap(col, pivot);
        let inv = m[col][col].recip();
        for v in m[col].iter_mut().skip(col) {
            *v *= &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for k in col..=n {
                    let sub = &f * &m[col][k];
                    m[r][k] -= sub;
                }
            }
        }
    }
    let x: Vec<Rat> = m.into_iter().map(|row| row[n].clone()).collect();
    if let Some(index) = x.iter().position(|v| !v.is_positive()) {
        return Err(SolverError::NotPositive { c: c.to_string(), index });
    }
    let residuals = (0..n).map(|i| &c * &x[i] - sys.eval(i, &x)).collect();
    Ok(SolverSolution { x, common_value: c, residuals })
}

#[derive(Debug, Clone, PartialEq)]
pub struct IterativeSolution {
    pub epsilon: f64,
    pub alpha: Vec<f64>,
    pub x: Vec<f64>,
    /// `1.5/ε`.
    pub common_value: f64,
    pub iterations: usize,
}

pub const MAX_ITERATIONS: usize = 10_000;

/// The fixed-point map `α ↦ 1.5·αᵢ/(ε·gᵢ(x(α)))` on `[1,2]ⁿ`, where
/// `xᵢ = ε^{r(i)}·x′ᵢ` and `x′` solves the leading-order layered system
/// `x′ᵢ = βᵢ(x′)/αᵢ`. When every constant is positive this is exactly
/// `αᵢ ↦ 1.5/(1 + ε·Bᵢ⁻¹·Lᵢ(x′))` with `ε = 1/(10K)`; otherwise `ε` starts
/// there and is halved until the iteration settles.
pub fn solve_by_iteration(sys: &LinearFormSystem) -> Result<IterativeSolution, SolverError> {
    let r = sys.check_reachable()?;
    let n = sys.n();
    let a0: Vec<f64> = sys.a0.iter().map(rat_to_f64).collect();
    let a: Vec<Vec<f64>> = sys.a.iter().map(|row| row.iter().map(rat_to_f64).collect()).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| r[i]);

    let layered = |alpha: &[f64]| -> Vec<f64> {
        let mut xp = vec![0.0; n];
        for &i in &order {
            let beta = if r[i] == 1 {
                a0[i]
            } else {
                (0..n).filter(|&j| r[j] + 1 == r[i]).map(|j| a[i][j] * xp[j]).sum()
            };
            xp[i] = beta / alpha[i];
        }
        xp
    };

    // K = max over the cube of Bᵢ⁻¹·Lᵢ(x′), attained at α = 1.
    let xp1 = layered(&vec![1.0; n]);
    let k = (0..n)
        .filter(|&i| r[i] == 1)
        .map(|i| (0..n).map(|j| a[i][j] * xp1[j]).sum::<f64>() / a0[i])
        .fold(0.0f64, f64::max);
    let mut eps = if k > 0.0 { 1.0 / (10.0 * k) } else { 0.1 };
    let mut total = 0;
    let max_r = r.iter().copied().max().unwrap_or(1);

    while total < MAX_ITERATIONS {
        let mut alpha = vec![1.5; n];
        let mut settled = false;
        let mut diverged = false;
        for _ in 0..200 {
            total += 1;
            let xp = layered(&alpha);
            let x: Vec<f64> = (0..n).map(|i| eps.powi(r[i] as i32) * xp[i]).collect();
            let mut delta = 0.0f64;
            for i in 0..n {
                let li = a0[i] + (0..n).map(|j| a[i][j] * x[j]).sum::<f64>();
                let eg = eps * li / x[i];
                let next = 1.5 * alpha[i] / eg;
                if !next.is_finite() || !(1.0..=2.0).contains(&next) {
                    diverged = true;
                }
                delta = delta.max((next - alpha[i]).abs() / next.abs());
                alpha[i] = next;
            }
            if diverged {
                break;
            }
            if delta <= 1e-12 {
                settled = true;
                break;
            }
        }
        if settled {
            let xp = layered(&alpha);
            let x = (0..n).map(|i| eps.powi(r[i] as i32) * xp[i]).collect();
            return Ok(IterativeSolution { epsilon: eps, alpha, x, common_value: 1.5 / eps, iterations: total });
        }
        eps /= 2.0;
        if eps.powi(max_r as i32) < 1e-250 {
            break;
        }
    }
    Err(SolverError::NonConvergence(total))
}

/// Largest relative deviation between the iterative solution and the exact
/// solution at the same common value.
pub fn cross_check(sys: &LinearFormSystem, it: &IterativeSolution) -> Result<f64, SolverError> {
    let c = Rat::from_float(it.common_value).expect("finite common value");
    let exact = solve_equal_ratios(sys, Some(c))?;
    Ok(exact
        .x
        .iter()
        .zip(&it.x)
        .map(|(e, a)| {
            let e = rat_to_f64(e);
            (e - a).abs() / e.abs()
        })
        .fold(0.0, f64::max))
}
