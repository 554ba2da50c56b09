//! Exact two-phase simplex over arbitrary-precision rationals.
//!
//! Small dense tableau implementation with Bland's rule, sufficient for the
//! realizability programs in [`crate::chambers`] (a few dozen rows and
//! columns). All variables are nonnegative; constraints may be `≤`, `≥` or
//! `=` with arbitrary rational data.

use num_traits::{One, Signed, Zero};

use crate::rat::Rat;

/// Constraint sense.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Le,
    Ge,
    Eq,
}

/// `coeffs · x (sense) rhs`.
#[derive(Clone, Debug)]
pub struct Constraint {
    pub coeffs: Vec<Rat>,
    pub sense: Sense,
    pub rhs: Rat,
}

/// Linear program: maximize `objective · x` subject to constraints, `x ≥ 0`.
#[derive(Clone, Debug, Default)]
pub struct Program {
    pub objective: Vec<Rat>,
    pub constraints: Vec<Constraint>,
}

/// Solver outcome.
#[derive(Clone, Debug, PartialEq)]
pub enum Outcome {
    Infeasible,
    Unbounded,
    Optimal { value: Rat, point: Vec<Rat> },
}

impl Program {
    pub fn new(num_vars: usize) -> Self {
        Program {
            objective: vec![Rat::zero(); num_vars],
            constraints: Vec::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn constrain(&mut self, coeffs: Vec<Rat>, sense: Sense, rhs: Rat) {
        debug_assert_eq!(coeffs.len(), self.num_vars());
        self.constraints.push(Constraint { coeffs, sense, rhs });
    }

    /// Maximizes the objective with a deterministic two-phase simplex.
    pub fn maximize(&self) -> Outcome {
        let mut t = Tableau::build(self);

        if t.artificial_start < t.n_total {
            // Phase 1: maximize −Σ(artificials); feasible iff optimum is 0.
            let mut phase1 = vec![Rat::zero(); t.n_total];
            for c in phase1.iter_mut().skip(t.artificial_start) {
                *c = -Rat::one();
            }
            let bounded = t.run(&phase1, t.n_total);
            debug_assert!(bounded, "phase 1 is bounded by construction");
            let mut infeasibility = Rat::zero();
            for (r, &b) in t.basis.iter().enumerate() {
                if b >= t.artificial_start {
                    infeasibility += &t.rows[r][t.n_total];
                }
            }
            if !infeasibility.is_zero() {
                return Outcome::Infeasible;
            }
            // Degenerate artificials may still sit in the basis at value 0;
            // pivot them out on any nonzero structural/slack column.
            for r in 0..t.basis.len() {
                if t.basis[r] >= t.artificial_start {
                    if let Some(j) =
                        (0..t.artificial_start).find(|&j| !t.rows[r][j].is_zero())
                    {
                        t.pivot(r, j);
                    }
                    // Otherwise the row is redundant and stays inert.
                }
            }
        }

        // Phase 2 over non-artificial columns only.
        let mut cost = vec![Rat::zero(); t.n_total];
        for (j, v) in self.objective.iter().enumerate() {
            cost[j] = v.clone();
        }
        if !t.run(&cost, t.artificial_start) {
            return Outcome::Unbounded;
        }

        let mut point = vec![Rat::zero(); self.num_vars()];
        for (r, &b) in t.basis.iter().enumerate() {
            if b < point.len() {
                point[b] = t.rows[r][t.n_total].clone();
            }
        }
        let value = self
            .objective
            .iter()
            .zip(point.iter())
            .map(|(c, x)| c * x)
            .sum();
        Outcome::Optimal { value, point }
    }
}

struct Tableau {
    /// `m × (n_total + 1)`; the last column is the right-hand side.
    rows: Vec<Vec<Rat>>,
    basis: Vec<usize>,
    n_total: usize,
    artificial_start: usize,
}

impl Tableau {
    fn build(p: &Program) -> Tableau {
        let n = p.num_vars();
        let m = p.constraints.len();

        // Normalize right-hand sides to be nonnegative.
        let data: Vec<(Vec<Rat>, Sense, Rat)> = p
            .constraints
            .iter()
            .map(|c| {
                if c.rhs.is_negative() {
                    let coeffs = c.coeffs.iter().map(|v| -v.clone()).collect();
                    let sense = match c.sense {
                        Sense::Le => Sense::Ge,
                        Sense::Ge => Sense::Le,
                        Sense::Eq => Sense::Eq,
                    };
                    (coeffs, sense, -c.rhs.clone())
                } else {
                    (c.coeffs.clone(), c.sense, c.rhs.clone())
                }
            })
            .collect();

        let n_slack = data.iter().filter(|(_, s, _)| *s != Sense::Eq).count();
        let n_art = data.iter().filter(|(_, s, _)| *s != Sense::Le).count();
        let n_total = n + n_slack + n_art;
        let artificial_start = n + n_slack;

        let mut rows = vec![vec![Rat::zero(); n_total + 1]; m];
        let mut basis = vec![0usize; m];
        let mut slack_idx = n;
        let mut art_idx = artificial_start;
        for (r, (coeffs, sense, rhs)) in data.into_iter().enumerate() {
            for (j, v) in coeffs.into_iter().enumerate() {
                rows[r][j] = v;
            }
            rows[r][n_total] = rhs;
            match sense {
                Sense::Le => {
                    rows[r][slack_idx] = Rat::one();
                    basis[r] = slack_idx;
                    slack_idx += 1;
                }
                Sense::Ge => {
                    rows[r][slack_idx] = -Rat::one();
                    slack_idx += 1;
                    rows[r][art_idx] = Rat::one();
                    basis[r] = art_idx;
                    art_idx += 1;
                }
                Sense::Eq => {
                    rows[r][art_idx] = Rat::one();
                    basis[r] = art_idx;
                    art_idx += 1;
                }
            }
        }

        Tableau {
            rows,
            basis,
            n_total,
            artificial_start,
        }
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let pivot = self.rows[r][c].clone();
        debug_assert!(!pivot.is_zero());
        for v in self.rows[r].iter_mut() {
            *v /= &pivot;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (v, pv) in row.iter_mut().zip(pivot_row.iter()) {
                *v -= &factor * pv;
            }
        }
        self.basis[r] = c;
    }

    /// Simplex iterations maximizing `cost · x` using columns `< allowed`.
    /// Bland's rule throughout; returns false iff unbounded.
    fn run(&mut self, cost: &[Rat], allowed: usize) -> bool {
        loop {
            // Entering column: smallest j with positive reduced cost
            // c_j − z_j.
            let mut entering = None;
            for j in 0..allowed {
                if self.basis.contains(&j) {
                    continue;
                }
                let mut reduced = cost[j].clone();
                for (r, &b) in self.basis.iter().enumerate() {
                    if !cost[b].is_zero() && !self.rows[r][j].is_zero() {
                        reduced -= &cost[b] * &self.rows[r][j];
                    }
                }
                if reduced.is_positive() {
                    entering = Some(j);
                    break;
                }
            }
            let Some(j) = entering else {
                return true;
            };
            // Ratio test, ties broken on the smallest basis index.
            let mut leaving: Option<(usize, Rat)> = None;
            for r in 0..self.rows.len() {
                if self.rows[r][j].is_positive() {
                    let ratio = &self.rows[r][self.n_total] / &self.rows[r][j];
                    let better = match &leaving {
                        None => true,
                        Some((lr, lratio)) => {
                            ratio < *lratio
                                || (ratio == *lratio && self.basis[r] < self.basis[*lr])
                        }
                    };
                    if better {
                        leaving = Some((r, ratio));
                    }
                }
            }
            let Some((r, _)) = leaving else {
                return false;
            };
            self.pivot(r, j);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, ratio};

    fn r(v: i64) -> Rat {
        rat(v)
    }

    #[test]
    fn simple_maximum() {
        // max x + y st x + 2y ≤ 4, 3x + y ≤ 6 → (8/5, 6/5), value 14/5.
        let mut p = Program::new(2);
        p.objective = vec![r(1), r(1)];
        p.constrain(vec![r(1), r(2)], Sense::Le, r(4));
        p.constrain(vec![r(3), r(1)], Sense::Le, r(6));
        match p.maximize() {
            Outcome::Optimal { value, point } => {
                assert_eq!(value, ratio(14, 5));
                assert_eq!(point, vec![ratio(8, 5), ratio(6, 5)]);
            }
            other => panic!("unexpected outcome {other:?}"),
        }
    }

    #[test]
    fn equality_and_ge_constraints() {
        // max x st x + y = 1, x ≥ 1/3 → x = 1.
        let mut p = Program::new(2);
        p.objective = vec![r(1), r(0)];
        p.constrain(vec![r(1), r(1)], Sense::Eq, r(1));
        p.constrain(vec![r(1), r(0)], Sense::Ge, ratio(1, 3));
        match p.maximize() {
            Outcome::Optimal { value, .. } => assert_eq!(value, r(1)),
            other => panic!("unexpected outcome {other:?}"),
        }
    }

    #[test]
    fn detects_infeasible() {
        let mut p = Program::new(1);
        p.objective = vec![r(1)];
        p.constrain(vec![r(1)], Sense::Le, r(1));
        p.constrain(vec![r(1)], Sense::Ge, r(2));
        assert_eq!(p.maximize(), Outcome::Infeasible);
    }

    #[test]
    fn detects_unbounded() {
        let mut p = Program::new(2);
        p.objective = vec![r(1), r(0)];
        p.constrain(vec![r(0), r(1)], Sense::Le, r(1));
        assert_eq!(p.maximize(), Outcome::Unbounded);
    }

    #[test]
    fn negative_rhs_is_normalized() {
        // max x st −x ≥ −3  ⇔  x ≤ 3.
        let mut p = Program::new(1);
        p.objective = vec![r(1)];
        p.constrain(vec![r(-1)], Sense::Ge, r(-3));
        match p.maximize() {
            Outcome::Optimal { value, .. } => assert_eq!(value, r(3)),
            other => panic!("unexpected outcome {other:?}"),
        }
    }

    #[test]
    fn degenerate_equalities() {
        // A redundant equality should not trip phase 1.
        let mut p = Program::new(2);
        p.objective = vec![r(0), r(1)];
        p.constrain(vec![r(1), r(1)], Sense::Eq, r(2));
        p.constrain(vec![r(2), r(2)], Sense::Eq, r(4));
        p.constrain(vec![r(0), r(1)], Sense::Le, ratio(3, 2));
        match p.maximize() {
            Outcome::Optimal { value, .. } => assert_eq!(value, ratio(3, 2)),
            other => panic!("unexpected outcome {other:?}"),
        }
    }

    #[test]
    fn rational_data_stays_exact() {
        // max y st y ≤ x/3 + 1/7, x ≤ 2/5.
        let mut p = Program::new(2);
        p.objective = vec![r(0), r(1)];
        p.constrain(vec![ratio(-1, 3), r(1)], Sense::Le, ratio(1, 7));
        p.constrain(vec![r(1), r(0)], Sense::Le, ratio(2, 5));
        match p.maximize() {
            Outcome::Optimal { value, .. } => assert_eq!(value, ratio(2, 15) + ratio(1, 7)),
            other => panic!("unexpected outcome {other:?}"),
        }
    }
}
