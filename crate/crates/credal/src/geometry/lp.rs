//! Exact rational linear programming: a dense two-phase simplex with
//! Bland's anti-cycling pivot rule, so termination is guaranteed. Built for
//! desk-scale systems (tens of variables), not for performance.

use num_traits::{One, Zero};

use crate::error::{CredalError, Result};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Eq,
    Le,
    Ge,
}

/// One exact linear constraint `coeffs . x  <rel>  rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

impl Constraint {
    pub fn eq(coeffs: Vec<Rational>, rhs: Rational) -> Self {
        Constraint {
            coeffs,
            relation: Relation::Eq,
            rhs,
        }
    }

    pub fn le(coeffs: Vec<Rational>, rhs: Rational) -> Self {
        Constraint {
            coeffs,
            relation: Relation::Le,
            rhs,
        }
    }

    pub fn ge(coeffs: Vec<Rational>, rhs: Rational) -> Self {
        Constraint {
            coeffs,
            relation: Relation::Ge,
            rhs,
        }
    }

    /// Whether `point` satisfies the constraint exactly.
    pub fn satisfied_by(&self, point: &[Rational]) -> bool {
        let lhs: Rational = self
            .coeffs
            .iter()
            .zip(point)
            .map(|(c, x)| c * x)
            .sum();
        match self.relation {
            Relation::Eq => lhs == self.rhs,
            Relation::Le => lhs <= self.rhs,
            Relation::Ge => lhs >= self.rhs,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Feasibility {
    Feasible(Vec<Rational>),
    Infeasible,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Optimum {
    Optimal { value: Rational, point: Vec<Rational> },
    Infeasible,
    Unbounded,
}

fn check_dimensions(num_vars: usize, constraints: &[Constraint]) -> Result<()> {
    for c in constraints {
        if c.coeffs.len() != num_vars {
            return Err(CredalError::DimensionMismatch {
                expected: num_vars,
                got: c.coeffs.len(),
            });
        }
    }
    Ok(())
}

/// Feasibility over free (sign-unrestricted) variables; each variable is
/// split into a difference of two nonnegative ones internally.
pub fn feasible(num_vars: usize, constraints: &[Constraint]) -> Result<Feasibility> {
    check_dimensions(num_vars, constraints)?;
    let split = split_free(num_vars, constraints);
    Ok(match feasible_nonneg(2 * num_vars, &split)? {
        Feasibility::Feasible(xs) => Feasibility::Feasible(unsplit(num_vars, &xs)),
        Feasibility::Infeasible => Feasibility::Infeasible,
    })
}

/// Feasibility with every variable constrained to be `>= 0` implicitly.
pub fn feasible_nonneg(num_vars: usize, constraints: &[Constraint]) -> Result<Feasibility> {
    check_dimensions(num_vars, constraints)?;
    let mut tab = Tableau::standard_form(num_vars, constraints);
    if tab.phase_one() {
        Ok(Feasibility::Feasible(tab.extract(num_vars)))
    } else {
        Ok(Feasibility::Infeasible)
    }
}

/// Exact maximum of `objective . x` over free variables.
pub fn maximize(
    objective: &[Rational],
    num_vars: usize,
    constraints: &[Constraint],
) -> Result<Optimum> {
    check_dimensions(num_vars, constraints)?;
    if objective.len() != num_vars {
        return Err(CredalError::DimensionMismatch {
            expected: num_vars,
            got: objective.len(),
        });
    }
    let split = split_free(num_vars, constraints);
    let mut obj = Vec::with_capacity(2 * num_vars);
    for c in objective {
        obj.push(c.clone());
        obj.push(-c.clone());
    }
    Ok(match maximize_nonneg(&obj, 2 * num_vars, &split)? {
        Optimum::Optimal { value, point } => Optimum::Optimal {
            value,
            point: unsplit(num_vars, &point),
        },
        other => other,
    })
}

/// Exact maximum of `objective . x` with `x >= 0` implicit.
pub fn maximize_nonneg(
    objective: &[Rational],
    num_vars: usize,
    constraints: &[Constraint],
) -> Result<Optimum> {
    check_dimensions(num_vars, constraints)?;
    let mut tab = Tableau::standard_form(num_vars, constraints);
    if !tab.phase_one() {
        return Ok(Optimum::Infeasible);
    }
    tab.drop_artificials();
    // Simplex minimizes, so negate.
    let cost: Vec<Rational> = (0..tab.num_cols)
        .map(|j| {
            if j < num_vars {
                -objective[j].clone()
            } else {
                Rational::zero()
            }
        })
        .collect();
    match tab.phase_two(&cost) {
        Some(neg_value) => Ok(Optimum::Optimal {
            value: -neg_value,
            point: tab.extract(num_vars),
        }),
        None => Ok(Optimum::Unbounded),
    }
}

fn split_free(num_vars: usize, constraints: &[Constraint]) -> Vec<Constraint> {
    constraints
        .iter()
        .map(|c| {
            let mut coeffs = Vec::with_capacity(2 * num_vars);
            for a in &c.coeffs {
                coeffs.push(a.clone());
                coeffs.push(-a.clone());
            }
            Constraint {
                coeffs,
                relation: c.relation,
                rhs: c.rhs.clone(),
            }
        })
        .collect()
}

fn unsplit(num_vars: usize, xs: &[Rational]) -> Vec<Rational> {
    (0..num_vars).map(|i| &xs[2 * i] - &xs[2 * i + 1]).collect()
}

/// Dense simplex tableau in standard form `A x = b, x >= 0, b >= 0`, with
/// slack columns for inequalities and one artificial column per row.
struct Tableau {
    // rows[i] has num_cols + num_rows artificial columns + 1 rhs entry.
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    num_cols: usize, // structural + slack columns (artificials live past this)
    artificials_dropped: bool,
}

impl Tableau {
    fn standard_form(num_vars: usize, constraints: &[Constraint]) -> Self {
        let num_rows = constraints.len();
        let num_slacks = constraints
            .iter()
            .filter(|c| c.relation != Relation::Eq)
            .count();
        let num_cols = num_vars + num_slacks;
        let width = num_cols + num_rows + 1;
        let mut rows = Vec::with_capacity(num_rows);
        let mut slack_at = num_vars;
        for (i, c) in constraints.iter().enumerate() {
            let mut row = vec![Rational::zero(); width];
            row[..num_vars].clone_from_slice(&c.coeffs);
            match c.relation {
                Relation::Eq => {}
                Relation::Le => {
                    row[slack_at] = Rational::one();
                    slack_at += 1;
                }
                Relation::Ge => {
                    row[slack_at] = -Rational::one();
                    slack_at += 1;
                }
            }
            row[width - 1] = c.rhs.clone();
            if row[width - 1] < Rational::zero() {
                for v in row.iter_mut() {
                    *v = -std::mem::take(v);
                }
            }
            row[num_cols + i] = Rational::one();
            rows.push(row);
        }
        Tableau {
            rows,
            basis: (0..num_rows).map(|i| num_cols + i).collect(),
            num_cols,
            artificials_dropped: false,
        }
    }

    fn width(&self) -> usize {
        self.num_cols
            + if self.artificials_dropped {
                0
            } else {
                self.rows.len()
            }
    }

    fn rhs(&self, i: usize) -> &Rational {
        let w = self.rows[i].len();
        &self.rows[i][w - 1]
    }

    /// Minimizes the phase-one objective (sum of artificials). Returns true
    /// iff the system is feasible.
    fn phase_one(&mut self) -> bool {
        let width = self.width();
        // Reduced costs for cost = 1 on artificial columns, basis = artificials.
        let mut cost = vec![Rational::zero(); width + 1];
        for j in self.num_cols..width {
            cost[j] = Rational::one();
        }
        for row in &self.rows {
            for (j, slot) in cost.iter_mut().enumerate().take(width) {
                *slot -= &row[j];
            }
            let w = row.len();
            cost[width] -= &row[w - 1];
        }
        self.pivot_until_optimal(&mut cost, width);
        // -cost[width] is the attained minimum of the artificial sum.
        cost[width].is_zero()
    }

    /// Removes artificial columns: pivots basic artificials out of the basis
    /// (dropping redundant rows) and truncates the tableau.
    fn drop_artificials(&mut self) {
        let mut i = 0;
        while i < self.rows.len() {
            if self.basis[i] >= self.num_cols {
                // At this point the artificial is necessarily at value zero.
                if let Some(j) = (0..self.num_cols)
                    .find(|&j| !self.rows[i][j].is_zero())
                {
                    self.pivot(i, j);
                } else {
                    self.rows.remove(i);
                    self.basis.remove(i);
                    continue;
                }
            }
            i += 1;
        }
        let keep = self.num_cols;
        for row in self.rows.iter_mut() {
            let rhs = row.pop().expect("rhs column");
            row.truncate(keep);
            row.push(rhs);
        }
        self.artificials_dropped = true;
    }

    /// Minimizes `given_cost . x` from the current feasible basis. Returns
    /// the optimal objective value, or None when unbounded below.
    fn phase_two(&mut self, given_cost: &[Rational]) -> Option<Rational> {
        let width = self.width();
        let mut cost = given_cost.to_vec();
        cost.push(Rational::zero());
        // Express the cost row in terms of the current basis.
        for (i, &b) in self.basis.iter().enumerate() {
            if cost[b].is_zero() {
                continue;
            }
            let factor = cost[b].clone();
            for j in 0..width {
                let delta = &factor * &self.rows[i][j];
                cost[j] -= delta;
            }
            let w = self.rows[i].len();
            let delta = &factor * &self.rows[i][w - 1];
            cost[width] -= delta;
        }
        if self.pivot_until_optimal(&mut cost, width) {
            Some(-cost[width].clone())
        } else {
            None
        }
    }

    /// Bland's rule: entering column is the lowest-index negative reduced
    /// cost; the leaving row breaks ratio ties by lowest basis index.
    /// Returns false when an entering column proves the program unbounded.
    fn pivot_until_optimal(&mut self, cost: &mut Vec<Rational>, width: usize) -> bool {
        loop {
            let entering = match (0..width).find(|&j| cost[j] < Rational::zero()) {
                Some(j) => j,
                None => return true,
            };
            let mut leaving: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][entering];
                if *a <= Rational::zero() {
                    continue;
                }
                let ratio = self.rhs(i) / a;
                leaving = match leaving {
                    None => Some((i, ratio)),
                    Some((bi, best)) => {
                        if ratio < best
                            || (ratio == best && self.basis[i] < self.basis[bi])
                        {
                            Some((i, ratio))
                        } else {
                            Some((bi, best))
                        }
                    }
                };
            }
            let (row, _) = match leaving {
                Some(x) => x,
                None => return false,
            };
            self.pivot(row, entering);
            // Update the cost row.
            let factor = cost[entering].clone();
            if !factor.is_zero() {
                let w = self.rows[row].len();
                for j in 0..width {
                    let delta = &factor * &self.rows[row][j];
                    cost[j] -= delta;
                }
                let delta = &factor * &self.rows[row][w - 1];
                cost[width] -= delta;
            }
        }
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let w = self.rows[row].len();
        let pivot = self.rows[row][col].clone();
        debug_assert!(!pivot.is_zero());
        for v in self.rows[row].iter_mut() {
            *v = std::mem::take(v) / &pivot;
        }
        for i in 0..self.rows.len() {
            if i == row {
                continue;
            }
            let factor = self.rows[i][col].clone();
            if factor.is_zero() {
                continue;
            }
            for j in 0..w {
                let delta = &factor * &self.rows[row][j];
                self.rows[i][j] -= delta;
            }
        }
        self.basis[row] = col;
    }

    fn extract(&self, num_vars: usize) -> Vec<Rational> {
        let mut x = vec![Rational::zero(); num_vars];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < num_vars {
                x[b] = self.rhs(i).clone();
            }
        }
        x
    }
}
