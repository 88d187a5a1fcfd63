//! Dense two-phase simplex over exact rationals.
//!
//! Solves `minimize c·w subject to A w >= b, w >= 0`. Rows with a positive
//! bound get a surplus and an artificial variable; the others are negated so
//! their slack starts basic. Both phases use Bland's least-index rule, so
//! the method terminates on degenerate problems and is fully deterministic.
//! The returned point is basic, hence a vertex of the feasible polyhedron.

use num_traits::{Signed, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// One row `coefficients · w >= lower_bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub coefficients: Vec<Rational>,
    pub lower_bound: Rational,
}

impl Constraint {
    pub fn new(coefficients: Vec<Rational>, lower_bound: Rational) -> Self {
        Constraint {
            coefficients,
            lower_bound,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpSolution {
    pub value: Rational,
    /// A basic optimal point.
    pub point: Vec<Rational>,
    pub pivots: usize,
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    pivots: usize,
}

impl Tableau {
    fn pivot(&mut self, row: usize, col: usize) {
        let p = self.rows[row][col].clone();
        for x in self.rows[row].iter_mut() {
            *x /= &p;
        }
        self.rhs[row] /= &p;
        let pivot_row = self.rows[row].clone();
        let pivot_rhs = self.rhs[row].clone();
        for i in 0..self.rows.len() {
            if i == row || self.rows[i][col].is_zero() {
                continue;
            }
            let f = self.rows[i][col].clone();
            for (x, y) in self.rows[i].iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
            self.rhs[i] -= &f * &pivot_rhs;
        }
        self.basis[row] = col;
        self.pivots += 1;
    }

    /// Minimizes `cost` entering only through columns `< eligible`.
    fn optimize(&mut self, cost: &[Rational], eligible: usize) -> Result<()> {
        loop {
            let mut entering = None;
            for j in 0..eligible {
                if self.basis.contains(&j) {
                    continue;
                }
                let mut reduced = cost[j].clone();
                for (i, &b) in self.basis.iter().enumerate() {
                    if !cost[b].is_zero() && !self.rows[i][j].is_zero() {
                        reduced -= &cost[b] * &self.rows[i][j];
                    }
                }
                if reduced.is_negative() {
                    entering = Some(j);
                    break;
                }
            }
            let Some(col) = entering else {
                return Ok(());
            };

            let mut leaving: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][col];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / a;
                let better = match &leaving {
                    None => true,
                    Some((k, best)) => ratio < *best || (ratio == *best && self.basis[i] < self.basis[*k]),
                };
                if better {
                    leaving = Some((i, ratio));
                }
            }
            let Some((row, _)) = leaving else {
                return Err(Error::Unbounded);
            };
            self.pivot(row, col);
        }
    }

    fn objective(&self, cost: &[Rational]) -> Rational {
        self.basis
            .iter()
            .zip(&self.rhs)
            .fold(Rational::zero(), |acc, (&b, x)| acc + &cost[b] * x)
    }
}

/// Exact minimum of `objective · w` over `{w >= 0 : rows}`.
pub fn lp_min(rows: &[Constraint], objective: &[Rational]) -> Result<LpSolution> {
    let n = objective.len();
    let m = rows.len();
    if let Some(bad) = rows.iter().position(|r| r.coefficients.len() != n) {
        return Err(Error::Domain(format!(
            "row {bad} has {} coefficients for {n} variables",
            rows[bad].coefficients.len()
        )));
    }

    let needs_artificial: Vec<bool> = rows.iter().map(|r| r.lower_bound.is_positive()).collect();
    let artificials = needs_artificial.iter().filter(|&&b| b).count();
    let width = n + m + artificials;

    let mut tab = Tableau {
        rows: Vec::with_capacity(m),
        rhs: Vec::with_capacity(m),
        basis: Vec::with_capacity(m),
        pivots: 0,
    };
    let mut next_art = n + m;
    for (i, row) in rows.iter().enumerate() {
        let mut t = vec![Rational::zero(); width];
        if needs_artificial[i] {
            for (x, a) in t.iter_mut().zip(&row.coefficients) {
                *x = a.clone();
            }
            t[n + i] = -Rational::from_integer(1.into());
            t[next_art] = Rational::from_integer(1.into());
            tab.basis.push(next_art);
            tab.rhs.push(row.lower_bound.clone());
            next_art += 1;
        } else {
            for (x, a) in t.iter_mut().zip(&row.coefficients) {
                *x = -a.clone();
            }
            t[n + i] = Rational::from_integer(1.into());
            tab.basis.push(n + i);
            tab.rhs.push(-row.lower_bound.clone());
        }
        tab.rows.push(t);
    }

    if artificials > 0 {
        let mut phase_one = vec![Rational::zero(); width];
        for c in phase_one.iter_mut().skip(n + m) {
            *c = Rational::from_integer(1.into());
        }
        tab.optimize(&phase_one, width)?;
        if tab.objective(&phase_one).is_positive() {
            return Err(Error::Infeasible);
        }
        // Pivot remaining zero-valued artificials out; drop rows that are
        // combinations of the others.
        let mut i = 0;
        while i < tab.rows.len() {
            if tab.basis[i] >= n + m {
                match (0..n + m).find(|&j| !tab.rows[i][j].is_zero()) {
                    Some(j) => tab.pivot(i, j),
                    None => {
                        tab.rows.remove(i);
                        tab.rhs.remove(i);
                        tab.basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
    }

    let mut cost = vec![Rational::zero(); width];
    cost[..n].clone_from_slice(objective);
    tab.optimize(&cost, n + m)?;

    let mut point = vec![Rational::zero(); n];
    for (&b, x) in tab.basis.iter().zip(&tab.rhs) {
        if b < n {
            point[b] = x.clone();
        }
    }
    let value = point
        .iter()
        .zip(objective)
        .fold(Rational::zero(), |acc, (x, c)| acc + x * c);
    Ok(LpSolution {
        value,
        point,
        pivots: tab.pivots,
    })
}
