//! Two-phase dense simplex over the rationals, with Bland's rule.
//!
//! Exact arithmetic together with lowest-index pivoting guarantees
//! termination, so there is no iteration cap.

use num::{Signed, Zero};

use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearConstraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

/// Minimize `objective . x` subject to the constraints; variables are
/// nonnegative unless marked free.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearProgram {
    num_vars: usize,
    free: Vec<bool>,
    constraints: Vec<LinearConstraint>,
    objective: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { point: Vec<Rational>, value: Rational },
    Infeasible,
    Unbounded,
}

impl LpOutcome {
    pub fn point(&self) -> Option<&[Rational]> {
        match self {
            LpOutcome::Optimal { point, .. } => Some(point),
            _ => None,
        }
    }

    pub fn is_feasible(&self) -> bool {
        !matches!(self, LpOutcome::Infeasible)
    }
}

impl LinearProgram {
    pub fn new(num_vars: usize) -> Self {
        Self {
            num_vars,
            free: vec![false; num_vars],
            constraints: Vec::new(),
            objective: vec![Rational::zero(); num_vars],
        }
    }

    pub fn set_free(&mut self, var: usize) -> &mut Self {
        self.free[var] = true;
        self
    }

    pub fn all_free(mut self) -> Self {
        self.free = vec![true; self.num_vars];
        self
    }

    pub fn minimize(&mut self, objective: Vec<Rational>) -> &mut Self {
        assert_eq!(objective.len(), self.num_vars);
        self.objective = objective;
        self
    }

    pub fn constrain(&mut self, coeffs: Vec<Rational>, relation: Relation, rhs: Rational) -> &mut Self {
        assert_eq!(coeffs.len(), self.num_vars);
        self.constraints.push(LinearConstraint { coeffs, relation, rhs });
        self
    }

    pub fn solve(&self) -> LpOutcome {
        // Column layout: one or two structural columns per variable, then
        // slack/surplus columns, then artificial columns.
        let mut column_of: Vec<(usize, Option<usize>)> = Vec::with_capacity(self.num_vars);
        let mut structural = 0;
        for &f in &self.free {
            if f {
                column_of.push((structural, Some(structural + 1)));
                structural += 2;
            } else {
                column_of.push((structural, None));
                structural += 1;
            }
        }

        let mut rows: Vec<(Vec<Rational>, Relation, Rational)> = self
            .constraints
            .iter()
            .map(|c| {
                let mut line = vec![Rational::zero(); structural];
                for (v, coef) in c.coeffs.iter().enumerate() {
                    let (p, n) = column_of[v];
                    line[p] = coef.clone();
                    if let Some(n) = n {
                        line[n] = -coef.clone();
                    }
                }
                if c.rhs.is_negative() {
                    let flipped = match c.relation {
                        Relation::Le => Relation::Ge,
                        Relation::Ge => Relation::Le,
                        Relation::Eq => Relation::Eq,
                    };
                    (line.into_iter().map(|x| -x).collect(), flipped, -c.rhs.clone())
                } else {
                    (line, c.relation, c.rhs.clone())
                }
            })
            .collect();

        let m = rows.len();
        let slack_count = rows.iter().filter(|r| r.1 != Relation::Eq).count();
        let art_count = rows.iter().filter(|r| r.1 != Relation::Le).count();
        let first_slack = structural;
        let first_art = structural + slack_count;
        let width = first_art + art_count;

        let mut tableau = Tableau::new(m, width);
        let mut slack = first_slack;
        let mut art = first_art;
        for (i, (line, relation, rhs)) in rows.drain(..).enumerate() {
            for (j, x) in line.into_iter().enumerate() {
                tableau.a[i][j] = x;
            }
            tableau.rhs[i] = rhs;
            match relation {
                Relation::Le => {
                    tableau.a[i][slack] = Rational::from_integer(1.into());
                    tableau.basis[i] = slack;
                    slack += 1;
                }
                Relation::Ge => {
                    tableau.a[i][slack] = Rational::from_integer((-1).into());
                    slack += 1;
                    tableau.a[i][art] = Rational::from_integer(1.into());
                    tableau.basis[i] = art;
                    art += 1;
                }
                Relation::Eq => {
                    tableau.a[i][art] = Rational::from_integer(1.into());
                    tableau.basis[i] = art;
                    art += 1;
                }
            }
        }

        // Phase 1: minimize the sum of artificials.
        if art_count > 0 {
            let mut cost = vec![Rational::zero(); width];
            for c in cost.iter_mut().skip(first_art) {
                *c = Rational::from_integer(1.into());
            }
            tableau.set_cost(&cost);
            if tableau.run(width) == Pivoting::Unbounded {
                unreachable!("phase one objective is bounded below by zero");
            }
            if tableau.objective_value().is_positive() {
                return LpOutcome::Infeasible;
            }
            tableau.drive_out_artificials(first_art);
        }

        // Phase 2 on structural and slack columns only.
        let mut cost = vec![Rational::zero(); width];
        for (v, coef) in self.objective.iter().enumerate() {
            let (p, n) = column_of[v];
            cost[p] = coef.clone();
            if let Some(n) = n {
                cost[n] = -coef.clone();
            }
        }
        tableau.set_cost(&cost);
        if tableau.run(first_art) == Pivoting::Unbounded {
            return LpOutcome::Unbounded;
        }

        let mut values = vec![Rational::zero(); width];
        for (i, &b) in tableau.basis.iter().enumerate() {
            values[b] = tableau.rhs[i].clone();
        }
        let point: Vec<Rational> = column_of
            .iter()
            .map(|&(p, n)| match n {
                Some(n) => &values[p] - &values[n],
                None => values[p].clone(),
            })
            .collect();
        let value = crate::rational::dot(&self.objective, &point);
        LpOutcome::Optimal { point, value }
    }
}

#[derive(Debug, PartialEq, Eq)]
enum Pivoting {
    Optimal,
    Unbounded,
}

struct Tableau {
    a: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    /// Reduced costs; `cost_rhs` holds minus the current objective value.
    cost: Vec<Rational>,
    cost_rhs: Rational,
}

impl Tableau {
    fn new(m: usize, width: usize) -> Self {
        Self {
            a: vec![vec![Rational::zero(); width]; m],
            rhs: vec![Rational::zero(); m],
            basis: vec![usize::MAX; m],
            cost: vec![Rational::zero(); width],
            cost_rhs: Rational::zero(),
        }
    }

    fn set_cost(&mut self, cost: &[Rational]) {
        self.cost = cost.to_vec();
        self.cost_rhs = Rational::zero();
        for i in 0..self.a.len() {
            let cb = cost[self.basis[i]].clone();
            if cb.is_zero() {
                continue;
            }
            for (c, x) in self.cost.iter_mut().zip(&self.a[i]) {
                *c -= &cb * x;
            }
            self.cost_rhs -= &cb * &self.rhs[i];
        }
    }

    fn objective_value(&self) -> Rational {
        -self.cost_rhs.clone()
    }

    /// Simplex iterations restricted to columns `< allowed`.
    fn run(&mut self, allowed: usize) -> Pivoting {
        loop {
            let Some(enter) = (0..allowed).find(|&j| self.cost[j].is_negative()) else {
                return Pivoting::Optimal;
            };
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.a.len() {
                if !self.a[i][enter].is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / &self.a[i][enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => {
                        ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            let Some((row, _)) = leave else {
                return Pivoting::Unbounded;
            };
            self.pivot(row, enter);
        }
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let inv = self.a[row][col].recip();
        for x in self.a[row].iter_mut() {
            *x *= &inv;
        }
        self.rhs[row] *= &inv;
        let pivot_row = self.a[row].clone();
        let pivot_rhs = self.rhs[row].clone();
        for i in 0..self.a.len() {
            if i == row || self.a[i][col].is_zero() {
                continue;
            }
            let f = self.a[i][col].clone();
            for (x, p) in self.a[i].iter_mut().zip(&pivot_row) {
                *x -= &f * p;
            }
            self.rhs[i] -= &f * &pivot_rhs;
        }
        if !self.cost[col].is_zero() {
            let f = self.cost[col].clone();
            for (x, p) in self.cost.iter_mut().zip(&pivot_row) {
                *x -= &f * p;
            }
            self.cost_rhs -= &f * &pivot_rhs;
        }
        self.basis[row] = col;
    }

    /// After a successful phase one, pivot artificial columns out of the basis
    /// and drop rows that turned out to be redundant.
    fn drive_out_artificials(&mut self, first_art: usize) {
        let mut i = 0;
        while i < self.a.len() {
            if self.basis[i] < first_art {
                i += 1;
                continue;
            }
            match (0..first_art).find(|&j| !self.a[i][j].is_zero()) {
                Some(j) => {
                    self.pivot(i, j);
                    i += 1;
                }
                None => {
                    self.a.remove(i);
                    self.rhs.remove(i);
                    self.basis.remove(i);
                }
            }
        }
    }
}
