//! Dense two-phase simplex over exact rationals.
//!
//! All variables are nonnegative. Pivoting follows Bland's rule, so the
//! method terminates on degenerate problems, which are the norm here
//! (membership and face tests produce highly degenerate tableaus).

use num_traits::{Signed, Zero};

use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Debug, Clone)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal { value: Rational, solution: Vec<Rational> },
}

impl LpOutcome {
    pub fn is_feasible(&self) -> bool {
        !matches!(self, LpOutcome::Infeasible)
    }
}

/// A linear program `maximize c.x  s.t.  constraints, x >= 0`.
#[derive(Debug, Clone)]
pub struct LinearProgram {
    num_vars: usize,
    constraints: Vec<Constraint>,
}

impl LinearProgram {
    pub fn new(num_vars: usize) -> Self {
        LinearProgram { num_vars, constraints: Vec::new() }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn add(&mut self, coeffs: Vec<Rational>, relation: Relation, rhs: Rational) {
        assert_eq!(coeffs.len(), self.num_vars, "constraint width");
        self.constraints.push(Constraint { coeffs, relation, rhs });
    }

    /// Sparse convenience form of [`LinearProgram::add`].
    pub fn add_sparse(&mut self, terms: &[(usize, Rational)], relation: Relation, rhs: Rational) {
        let mut coeffs = vec![Rational::zero(); self.num_vars];
        for (j, c) in terms {
            coeffs[*j] += c;
        }
        self.add(coeffs, relation, rhs);
    }

    pub fn is_feasible(&self) -> bool {
        self.maximize(&vec![Rational::zero(); self.num_vars]).is_feasible()
    }

    pub fn maximize(&self, objective: &[Rational]) -> LpOutcome {
        assert_eq!(objective.len(), self.num_vars, "objective width");
        Tableau::build(self).solve(objective)
    }
}

struct Tableau {
    rows: Vec<Vec<Rational>>, // last column is the right-hand side
    basis: Vec<usize>,
    num_structural: usize,
    first_artificial: usize,
    num_cols: usize,
}

impl Tableau {
    fn build(lp: &LinearProgram) -> Tableau {
        let n = lp.num_vars;
        // Normalize to nonnegative right-hand sides.
        let normalized: Vec<(Vec<Rational>, Relation, Rational)> = lp
            .constraints
            .iter()
            .map(|c| {
                if c.rhs.is_negative() {
                    let flipped = match c.relation {
                        Relation::Le => Relation::Ge,
                        Relation::Ge => Relation::Le,
                        Relation::Eq => Relation::Eq,
                    };
                    (c.coeffs.iter().map(|x| -x).collect(), flipped, -&c.rhs)
                } else {
                    (c.coeffs.clone(), c.relation, c.rhs.clone())
                }
            })
            .collect();
        let num_slack = normalized.iter().filter(|c| c.1 != Relation::Eq).count();
        let num_art = normalized.iter().filter(|c| c.1 != Relation::Le).count();
        let first_artificial = n + num_slack;
        let num_cols = first_artificial + num_art;

        let mut rows = Vec::with_capacity(normalized.len());
        let mut basis = Vec::with_capacity(normalized.len());
        let (mut slack, mut art) = (n, first_artificial);
        for (coeffs, relation, rhs) in normalized {
            let mut row = coeffs;
            row.resize(num_cols + 1, Rational::zero());
            match relation {
                Relation::Le => {
                    row[slack] = Rational::from_integer(1.into());
                    basis.push(slack);
                    slack += 1;
                }
                Relation::Ge => {
                    row[slack] = Rational::from_integer((-1).into());
                    row[art] = Rational::from_integer(1.into());
                    basis.push(art);
                    slack += 1;
                    art += 1;
                }
                Relation::Eq => {
                    row[art] = Rational::from_integer(1.into());
                    basis.push(art);
                    art += 1;
                }
            }
            row[num_cols] = rhs;
            rows.push(row);
        }
        Tableau { rows, basis, num_structural: n, first_artificial, num_cols }
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        for x in self.rows[r].iter_mut() {
            *x /= &p;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Runs simplex iterations maximizing `cost` over columns `< allowed`.
    /// Returns false if unbounded.
    fn optimize(&mut self, cost: &[Rational], allowed: usize) -> bool {
        loop {
            let mut entering = None;
            for j in 0..allowed {
                if self.basis.contains(&j) {
                    continue;
                }
                let mut reduced = cost[j].clone();
                for (i, row) in self.rows.iter().enumerate() {
                    if !row[j].is_zero() {
                        reduced -= &cost[self.basis[i]] * &row[j];
                    }
                }
                if reduced.is_positive() {
                    entering = Some(j);
                    break;
                }
            }
            let Some(col) = entering else { return true };
            let mut best: Option<(usize, Rational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if row[col].is_positive() {
                    let ratio = &row[self.num_cols] / &row[col];
                    let better = match &best {
                        None => true,
                        Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                    };
                    if better {
                        best = Some((i, ratio));
                    }
                }
            }
            let Some((row, _)) = best else { return false };
            self.pivot(row, col);
        }
    }

    fn solve(mut self, objective: &[Rational]) -> LpOutcome {
        let zero = Rational::zero();
        if self.num_cols > self.first_artificial {
            let mut phase1 = vec![zero.clone(); self.num_cols];
            for c in phase1.iter_mut().skip(self.first_artificial) {
                *c = Rational::from_integer((-1).into());
            }
            self.optimize(&phase1, self.num_cols);
            let infeasibility: Rational = self
                .rows
                .iter()
                .zip(&self.basis)
                .filter(|(_, &b)| b >= self.first_artificial)
                .map(|(row, _)| row[self.num_cols].clone())
                .sum();
            if infeasibility.is_positive() {
                return LpOutcome::Infeasible;
            }
            // Drive zero-valued artificials out of the basis, dropping redundant rows.
            let mut r = 0;
            while r < self.rows.len() {
                if self.basis[r] >= self.first_artificial {
                    match (0..self.first_artificial).find(|&j| !self.rows[r][j].is_zero()) {
                        Some(j) => self.pivot(r, j),
                        None => {
                            self.rows.remove(r);
                            self.basis.remove(r);
                            continue;
                        }
                    }
                }
                r += 1;
            }
        }
        let mut cost = vec![zero.clone(); self.num_cols];
        cost[..self.num_structural].clone_from_slice(objective);
        if !self.optimize(&cost, self.first_artificial) {
            return LpOutcome::Unbounded;
        }
        let mut solution = vec![zero; self.num_structural];
        for (row, &b) in self.rows.iter().zip(&self.basis) {
            if b < self.num_structural {
                solution[b] = row[self.num_cols].clone();
            }
        }
        let value = crate::rational::dot(objective, &solution);
        LpOutcome::Optimal { value, solution }
    }
}
