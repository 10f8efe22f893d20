//! Exact rational linear programming: a dense two-phase primal simplex with
//! Bland's anti-cycling rule.
//!
//! There are no tolerances anywhere; every pivot, every feasibility test and
//! every certificate is exact. On each optimal solve the outcome is replayed
//! against the original data: primal feasibility, dual feasibility,
//! complementary slackness, and strong duality are asserted before the
//! result is returned.
//!
//! Variables are nonnegative by default; a variable may be declared free, in
//! which case it is split internally. Identical inputs produce identical
//! pivot sequences and outputs.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Eq,
    Le,
    Ge,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Goal {
    Minimize,
    Maximize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

/// Outcome of a solve. `value`, `primal`, and `dual` are meaningful only
/// when `status` is `Optimal`.
///
/// Dual sign convention, per original row: for a minimization, `Ge` rows
/// have `y ≥ 0`, `Le` rows `y ≤ 0`, equalities free; for a maximization the
/// inequality signs swap. In both cases the optimal value equals `rhs · y`.
#[derive(Debug, Clone)]
pub struct LpOutcome {
    pub status: LpStatus,
    pub value: Rational,
    pub primal: Vec<Rational>,
    pub dual: Vec<Rational>,
}

impl LpOutcome {
    fn of_status(status: LpStatus) -> Self {
        LpOutcome { status, value: Rational::zero(), primal: Vec::new(), dual: Vec::new() }
    }
}

/// A dense linear program over nonnegative (or explicitly free) variables.
#[derive(Debug, Clone)]
pub struct LinearProgram {
    goal: Goal,
    objective: Vec<Rational>,
    rows: Vec<Vec<Rational>>,
    senses: Vec<Sense>,
    rhs: Vec<Rational>,
    free: Vec<bool>,
}

impl LinearProgram {
    pub fn minimize(objective: Vec<Rational>) -> Self {
        let n = objective.len();
        LinearProgram {
            goal: Goal::Minimize,
            objective,
            rows: Vec::new(),
            senses: Vec::new(),
            rhs: Vec::new(),
            free: vec![false; n],
        }
    }

    pub fn maximize(objective: Vec<Rational>) -> Self {
        let mut lp = Self::minimize(objective);
        lp.goal = Goal::Maximize;
        lp
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn add_row(&mut self, coeffs: Vec<Rational>, sense: Sense, rhs: Rational) {
        self.rows.push(coeffs);
        self.senses.push(sense);
        self.rhs.push(rhs);
    }

    /// Declares a variable unrestricted in sign.
    pub fn set_free(&mut self, var: usize) {
        self.free[var] = true;
    }

    fn check_dims(&self) -> Result<()> {
        for row in &self.rows {
            if row.len() != self.objective.len() {
                return Err(Error::DimensionMismatch("row length must match objective length"));
            }
        }
        Ok(())
    }

    /// Solves to optimality or returns an infeasible/unbounded status.
    pub fn solve(&self) -> Result<LpOutcome> {
        self.check_dims()?;
        let mut tableau = match Tableau::new(self)? {
            Ok(t) => t,
            Err(status) => return Ok(LpOutcome::of_status(status)),
        };
        if !tableau.phase_one() {
            return Ok(LpOutcome::of_status(LpStatus::Infeasible));
        }
        if !tableau.phase_two() {
            return Ok(LpOutcome::of_status(LpStatus::Unbounded));
        }
        let outcome = tableau.extract(self);
        self.verify(&outcome);
        Ok(outcome)
    }

    /// Phase-one feasibility test; returns an exact feasible point if one
    /// exists.
    pub fn feasible(&self) -> Result<Option<Vec<Rational>>> {
        self.check_dims()?;
        let mut tableau = match Tableau::new(self)? {
            Ok(t) => t,
            Err(LpStatus::Infeasible) => return Ok(None),
            Err(_) => unreachable!("phase one cannot be unbounded"),
        };
        if !tableau.phase_one() {
            return Ok(None);
        }
        let point = tableau.primal_point(self);
        for (i, row) in self.rows.iter().enumerate() {
            let lhs: Rational = row.iter().zip(&point).map(|(a, x)| a * x).sum();
            let ok = match self.senses[i] {
                Sense::Eq => lhs == self.rhs[i],
                Sense::Le => lhs <= self.rhs[i],
                Sense::Ge => lhs >= self.rhs[i],
            };
            assert!(ok, "feasibility witness must replay exactly");
        }
        Ok(Some(point))
    }

    /// Exact optimality certificate: primal and dual feasibility,
    /// complementary slackness, and equality of objective values.
    fn verify(&self, out: &LpOutcome) {
        let x = &out.primal;
        let y = &out.dual;
        for (i, row) in self.rows.iter().enumerate() {
            let lhs: Rational = row.iter().zip(x).map(|(a, v)| a * v).sum();
            let slack_ok = match self.senses[i] {
                Sense::Eq => lhs == self.rhs[i],
                Sense::Le => lhs <= self.rhs[i],
                Sense::Ge => lhs >= self.rhs[i],
            };
            assert!(slack_ok, "primal feasibility fails on row {i}");
            let y_sign_ok = match (self.goal, self.senses[i]) {
                (_, Sense::Eq) => true,
                (Goal::Minimize, Sense::Ge) | (Goal::Maximize, Sense::Le) => !y[i].is_negative(),
                (Goal::Minimize, Sense::Le) | (Goal::Maximize, Sense::Ge) => !y[i].is_positive(),
            };
            assert!(y_sign_ok, "dual sign fails on row {i}");
            assert!(
                (y[i].clone() * (lhs - &self.rhs[i])).is_zero(),
                "complementary slackness fails on row {i}"
            );
        }
        for j in 0..self.num_vars() {
            let reduced: Rational = self.objective[j].clone()
                - self
                    .rows
                    .iter()
                    .enumerate()
                    .map(|(i, row)| &y[i] * &row[j])
                    .sum::<Rational>();
            if self.free[j] {
                assert!(reduced.is_zero(), "dual feasibility fails on free var {j}");
            } else {
                let ok = match self.goal {
                    Goal::Minimize => !reduced.is_negative(),
                    Goal::Maximize => !reduced.is_positive(),
                };
                assert!(ok, "dual feasibility fails on var {j}");
                assert!((reduced * &x[j]).is_zero(), "complementary slackness fails on var {j}");
            }
        }
        let primal_value: Rational =
            self.objective.iter().zip(x).map(|(c, v)| c * v).sum();
        assert_eq!(primal_value, out.value, "objective must replay");
        let dual_value: Rational = self.rhs.iter().zip(y).map(|(b, v)| b * v).sum();
        assert_eq!(dual_value, out.value, "strong duality must hold exactly");
    }
}

/// Column bookkeeping for one original variable.
#[derive(Debug, Clone, Copy)]
struct VarCols {
    pos: usize,
    neg: Option<usize>,
}

struct Tableau {
    /// m rows of length `cols`; the rhs sits in the last position.
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    cols: usize,
    var_cols: Vec<VarCols>,
    /// Internal minimization costs for structural columns.
    costs: Vec<Rational>,
    /// Identity column of each original row (`None` for dropped zero rows).
    /// The dual multiplier of row `i` is read off this column: it carries
    /// B⁻¹eᵢ throughout, and deleted redundant tableau rows contribute
    /// nothing because their basic artificials have zero phase-two cost.
    identity_col: Vec<Option<usize>>,
    /// Whether the original row was negated to make its rhs nonnegative.
    flipped: Vec<bool>,
    artificial_from: usize,
    maximize: bool,
}

impl Tableau {
    /// Builds the phase-one tableau. The outer `Result` is for hard errors;
    /// the inner one signals early infeasibility from degenerate rows.
    fn new(lp: &LinearProgram) -> Result<std::result::Result<Tableau, LpStatus>> {
        let n = lp.num_vars();
        let mut var_cols = Vec::with_capacity(n);
        let mut next = 0usize;
        for j in 0..n {
            let pos = next;
            next += 1;
            let neg = if lp.free[j] {
                next += 1;
                Some(next - 1)
            } else {
                None
            };
            var_cols.push(VarCols { pos, neg });
        }
        let structural = next;

        // Internal costs (minimization).
        let mut costs = vec![Rational::zero(); structural];
        for j in 0..n {
            let c = if lp.goal == Goal::Maximize { -lp.objective[j].clone() } else { lp.objective[j].clone() };
            costs[var_cols[j].pos] = c.clone();
            if let Some(neg) = var_cols[j].neg {
                costs[neg] = -c;
            }
        }

        let m = lp.rows.len();
        let mut kept: Vec<usize> = Vec::new();
        let mut flipped = vec![false; m];
        for i in 0..m {
            if lp.rows[i].iter().all(|a| a.is_zero()) {
                let consistent = match lp.senses[i] {
                    Sense::Eq => lp.rhs[i].is_zero(),
                    Sense::Le => !lp.rhs[i].is_negative(),
                    Sense::Ge => !lp.rhs[i].is_positive(),
                };
                if !consistent {
                    return Ok(Err(LpStatus::Infeasible));
                }
            } else {
                kept.push(i);
            }
        }

        // Column layout: structural, then one slack/surplus/artificial block
        // per kept row. Every row receives an identity column (slack for Le,
        // artificial otherwise).
        let mut cols = structural;
        let mut slack_col = vec![None; m];
        let mut art_col = vec![None; m];
        let mut identity_col = vec![None; m];
        for &i in &kept {
            let mut sense = lp.senses[i];
            if lp.rhs[i].is_negative() {
                flipped[i] = true;
                sense = match sense {
                    Sense::Le => Sense::Ge,
                    Sense::Ge => Sense::Le,
                    Sense::Eq => Sense::Eq,
                };
            }
            match sense {
                Sense::Le => {
                    slack_col[i] = Some(cols);
                    identity_col[i] = Some(cols);
                    cols += 1;
                }
                Sense::Ge => {
                    slack_col[i] = Some(cols);
                    cols += 1;
                }
                Sense::Eq => {}
            }
        }
        let artificial_from = cols;
        for &i in &kept {
            let sense = effective_sense(lp.senses[i], flipped[i]);
            if sense != Sense::Le {
                art_col[i] = Some(cols);
                identity_col[i] = Some(cols);
                cols += 1;
            }
        }

        let mut rows = Vec::with_capacity(kept.len());
        let mut basis = Vec::with_capacity(kept.len());
        for &i in &kept {
            let mut row = vec![Rational::zero(); cols + 1];
            let sign: i32 = if flipped[i] { -1 } else { 1 };
            for j in 0..n {
                let a = if sign < 0 { -lp.rows[i][j].clone() } else { lp.rows[i][j].clone() };
                if let Some(neg) = var_cols[j].neg {
                    row[neg] = -a.clone();
                }
                row[var_cols[j].pos] = a;
            }
            row[cols] = if sign < 0 { -lp.rhs[i].clone() } else { lp.rhs[i].clone() };
            let sense = effective_sense(lp.senses[i], flipped[i]);
            match sense {
                Sense::Le => {
                    row[slack_col[i].unwrap()] = Rational::from_integer(1.into());
                    basis.push(slack_col[i].unwrap());
                }
                Sense::Ge => {
                    row[slack_col[i].unwrap()] = Rational::from_integer((-1).into());
                    row[art_col[i].unwrap()] = Rational::from_integer(1.into());
                    basis.push(art_col[i].unwrap());
                }
                Sense::Eq => {
                    row[art_col[i].unwrap()] = Rational::from_integer(1.into());
                    basis.push(art_col[i].unwrap());
                }
            }
            rows.push(row);
        }

        Ok(Ok(Tableau {
            rows,
            basis,
            cols,
            var_cols,
            costs,
            identity_col,
            flipped,
            artificial_from,
            maximize: lp.goal == Goal::Maximize,
        }))
    }

    fn full_costs(&self, phase_one: bool) -> Vec<Rational> {
        let mut c = vec![Rational::zero(); self.cols];
        if phase_one {
            for cost in c[self.artificial_from..].iter_mut() {
                *cost = Rational::from_integer(1.into());
            }
        } else {
            c[..self.costs.len()].clone_from_slice(&self.costs);
        }
        c
    }

    fn reduced_costs(&self, costs: &[Rational]) -> Vec<Rational> {
        let mut rc = costs.to_vec();
        for (r, &b) in self.basis.iter().enumerate() {
            if costs[b].is_zero() {
                continue;
            }
            let cb = costs[b].clone();
            for (entry, coeff) in rc.iter_mut().zip(&self.rows[r]) {
                if !coeff.is_zero() {
                    *entry -= &cb * coeff;
                }
            }
        }
        rc
    }

    /// Simplex loop. Enters on the most negative reduced cost for speed;
    /// after a run of degenerate (zero-step) pivots it switches permanently
    /// to Bland's rule, which cannot cycle, so termination is guaranteed.
    /// `allow` bounds the entering columns (artificials are banned in phase
    /// two). Returns false on unbounded descent.
    fn run_simplex(&mut self, costs: &[Rational], allow: usize) -> bool {
        const STALL_LIMIT: u32 = 30;
        let mut rc = self.reduced_costs(costs);
        let mut stalled = 0u32;
        let mut bland = false;
        loop {
            let e = if bland {
                match (0..allow).find(|&j| rc[j].is_negative()) {
                    Some(e) => e,
                    None => return true,
                }
            } else {
                let mut best: Option<usize> = None;
                for j in 0..allow {
                    if rc[j].is_negative() && best.is_none_or(|b| rc[j] < rc[b]) {
                        best = Some(j);
                    }
                }
                match best {
                    Some(e) => e,
                    None => return true,
                }
            };
            let mut leave: Option<usize> = None;
            let mut best: Option<Rational> = None;
            for r in 0..self.rows.len() {
                if self.rows[r][e].is_positive() {
                    let ratio = &self.rows[r][self.cols] / &self.rows[r][e];
                    let better = match &best {
                        None => true,
                        Some(b) => {
                            ratio < *b
                                || (ratio == *b && self.basis[r] < self.basis[leave.unwrap()])
                        }
                    };
                    if better {
                        best = Some(ratio);
                        leave = Some(r);
                    }
                }
            }
            let r = match leave {
                Some(r) => r,
                None => return false,
            };
            if !bland {
                if best.is_some_and(|b| b.is_zero()) {
                    stalled += 1;
                    if stalled >= STALL_LIMIT {
                        bland = true;
                    }
                } else {
                    stalled = 0;
                }
            }
            self.pivot(r, e);
            let factor = rc[e].clone();
            if !factor.is_zero() {
                for (entry, coeff) in rc.iter_mut().zip(&self.rows[r]) {
                    if !coeff.is_zero() {
                        *entry -= &factor * coeff;
                    }
                }
            }
        }
    }

    fn pivot(&mut self, r: usize, e: usize) {
        let p = self.rows[r][e].clone();
        for v in self.rows[r].iter_mut() {
            if !v.is_zero() {
                *v /= &p;
            }
        }
        let pivot_row = self.rows[r].clone();
        for (rr, row) in self.rows.iter_mut().enumerate() {
            if rr == r || row[e].is_zero() {
                continue;
            }
            let factor = row[e].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &factor * pv;
                }
            }
        }
        self.basis[r] = e;
    }

    /// Minimizes the artificial mass; true iff it reaches zero. Surviving
    /// basic artificials are pivoted out, and rows that cannot release one
    /// are redundant and dropped.
    fn phase_one(&mut self) -> bool {
        if self.artificial_from == self.cols {
            return true;
        }
        let costs = self.full_costs(true);
        let ok = self.run_simplex(&costs, self.cols);
        assert!(ok, "phase one is bounded below by zero");
        let total: Rational = self
            .basis
            .iter()
            .enumerate()
            .filter(|(_, &b)| b >= self.artificial_from)
            .map(|(r, _)| self.rows[r][self.cols].clone())
            .sum();
        if !total.is_zero() {
            return false;
        }
        // Drive artificials out of the basis.
        let mut r = 0;
        while r < self.rows.len() {
            if self.basis[r] >= self.artificial_from {
                debug_assert!(self.rows[r][self.cols].is_zero());
                let pivot_col = (0..self.artificial_from).find(|&j| !self.rows[r][j].is_zero());
                match pivot_col {
                    Some(j) => {
                        self.pivot(r, j);
                        r += 1;
                    }
                    None => {
                        // Dependent combination of rows: delete it. Its basic
                        // artificial is zero and never re-enters.
                        self.rows.remove(r);
                        self.basis.remove(r);
                    }
                }
            } else {
                r += 1;
            }
        }
        true
    }

    fn phase_two(&mut self) -> bool {
        let costs = self.full_costs(false);
        self.run_simplex(&costs, self.artificial_from)
    }

    fn primal_point(&self, lp: &LinearProgram) -> Vec<Rational> {
        let mut x_int = vec![Rational::zero(); self.cols];
        for (r, &b) in self.basis.iter().enumerate() {
            x_int[b] = self.rows[r][self.cols].clone();
        }
        (0..lp.num_vars())
            .map(|j| {
                let vc = self.var_cols[j];
                match vc.neg {
                    Some(neg) => &x_int[vc.pos] - &x_int[neg],
                    None => x_int[vc.pos].clone(),
                }
            })
            .collect()
    }

    fn extract(&self, lp: &LinearProgram) -> LpOutcome {
        let primal = self.primal_point(lp);
        let value: Rational = lp.objective.iter().zip(&primal).map(|(c, x)| c * x).sum();

        let costs = self.full_costs(false);
        let dual: Vec<Rational> = (0..lp.rows.len())
            .map(|i| {
                let col = match self.identity_col[i] {
                    Some(c) => c,
                    None => return Rational::zero(),
                };
                let mut y: Rational = self
                    .basis
                    .iter()
                    .enumerate()
                    .filter(|(_, &b)| !costs[b].is_zero())
                    .map(|(r, &b)| &costs[b] * &self.rows[r][col])
                    .sum();
                if self.flipped[i] {
                    y = -y;
                }
                if self.maximize {
                    y = -y;
                }
                y
            })
            .collect();
        LpOutcome { status: LpStatus::Optimal, value, primal, dual }
    }
}

fn effective_sense(sense: Sense, flipped: bool) -> Sense {
    if !flipped {
        return sense;
    }
    match sense {
        Sense::Le => Sense::Ge,
        Sense::Ge => Sense::Le,
        Sense::Eq => Sense::Eq,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn trivial_equality() {
        // min x s.t. x = 1.
        let mut lp = LinearProgram::minimize(vec![rat(1, 1)]);
        lp.add_row(vec![rat(1, 1)], Sense::Eq, rat(1, 1));
        let out = lp.solve().unwrap();
        assert_eq!(out.status, LpStatus::Optimal);
        assert_eq!(out.value, rat(1, 1));
        assert_eq!(out.primal, vec![rat(1, 1)]);
        assert_eq!(out.dual, vec![rat(1, 1)]);
    }

    #[test]
    fn infeasible_sign() {
        let mut lp = LinearProgram::minimize(vec![rat(0, 1)]);
        lp.add_row(vec![rat(1, 1)], Sense::Eq, rat(-1, 1));
        let out = lp.solve().unwrap();
        assert_eq!(out.status, LpStatus::Infeasible);
        assert_eq!(lp.feasible().unwrap(), None);
    }

    #[test]
    fn unbounded_descent() {
        let mut lp = LinearProgram::minimize(vec![rat(-1, 1)]);
        lp.add_row(vec![rat(0, 1)], Sense::Eq, rat(0, 1));
        let out = lp.solve().unwrap();
        assert_eq!(out.status, LpStatus::Unbounded);
    }

    #[test]
    fn small_max_with_mixed_rows() {
        // max 3x + 2y s.t. x + y ≤ 4, x + 3y ≤ 6, x ≥ 0, y ≥ 0 → 12 at (4, 0).
        let mut lp = LinearProgram::maximize(vec![rat(3, 1), rat(2, 1)]);
        lp.add_row(vec![rat(1, 1), rat(1, 1)], Sense::Le, rat(4, 1));
        lp.add_row(vec![rat(1, 1), rat(3, 1)], Sense::Le, rat(6, 1));
        let out = lp.solve().unwrap();
        assert_eq!(out.status, LpStatus::Optimal);
        assert_eq!(out.value, rat(12, 1));
        assert_eq!(out.primal, vec![rat(4, 1), rat(0, 1)]);
    }

    #[test]
    fn free_variables_split_cleanly() {
        // min |structure| with r free: max r s.t. r ≤ 1/3 → r = 1/3.
        let mut lp = LinearProgram::maximize(vec![rat(1, 1)]);
        lp.set_free(0);
        lp.add_row(vec![rat(1, 1)], Sense::Le, rat(1, 3));
        let out = lp.solve().unwrap();
        assert_eq!(out.value, rat(1, 3));
        assert_eq!(out.primal, vec![rat(1, 3)]);

        // Free variable pushed negative.
        let mut lp = LinearProgram::minimize(vec![rat(1, 1)]);
        lp.set_free(0);
        lp.add_row(vec![rat(1, 1)], Sense::Ge, rat(-5, 1));
        let out = lp.solve().unwrap();
        assert_eq!(out.value, rat(-5, 1));
        assert_eq!(out.primal, vec![rat(-5, 1)]);
    }

    #[test]
    fn redundant_rows_are_dropped() {
        // x + y = 2 repeated, plus its double.
        let mut lp = LinearProgram::minimize(vec![rat(1, 1), rat(1, 1)]);
        lp.add_row(vec![rat(1, 1), rat(1, 1)], Sense::Eq, rat(2, 1));
        lp.add_row(vec![rat(1, 1), rat(1, 1)], Sense::Eq, rat(2, 1));
        lp.add_row(vec![rat(2, 1), rat(2, 1)], Sense::Eq, rat(4, 1));
        let out = lp.solve().unwrap();
        assert_eq!(out.status, LpStatus::Optimal);
        assert_eq!(out.value, rat(2, 1));
    }

    #[test]
    fn zero_rows_checked_for_consistency() {
        let mut lp = LinearProgram::minimize(vec![rat(1, 1)]);
        lp.add_row(vec![rat(0, 1)], Sense::Eq, rat(1, 1));
        assert_eq!(lp.solve().unwrap().status, LpStatus::Infeasible);

        let mut lp = LinearProgram::minimize(vec![rat(1, 1)]);
        lp.add_row(vec![rat(0, 1)], Sense::Le, rat(3, 1));
        lp.add_row(vec![rat(1, 1)], Sense::Ge, rat(2, 1));
        let out = lp.solve().unwrap();
        assert_eq!(out.value, rat(2, 1));
    }

    #[test]
    fn dimension_mismatch() {
        let mut lp = LinearProgram::minimize(vec![rat(1, 1)]);
        lp.add_row(vec![rat(1, 1), rat(2, 1)], Sense::Eq, rat(1, 1));
        assert!(matches!(lp.solve(), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn determinism() {
        let build = || {
            let mut lp = LinearProgram::maximize(vec![rat(1, 1), rat(1, 1), rat(1, 1)]);
            lp.add_row(vec![rat(1, 1), rat(2, 1), rat(1, 1)], Sense::Le, rat(10, 1));
            lp.add_row(vec![rat(3, 1), rat(1, 1), rat(2, 1)], Sense::Le, rat(12, 1));
            lp.add_row(vec![rat(1, 1), rat(1, 1), rat(3, 1)], Sense::Ge, rat(1, 1));
            lp
        };
        let a = build().solve().unwrap();
        let b = build().solve().unwrap();
        assert_eq!(a.primal, b.primal);
        assert_eq!(a.dual, b.dual);
        assert_eq!(a.value, b.value);
    }

    #[test]
    fn feasibility_witness_replays() {
        let mut lp = LinearProgram::minimize(vec![rat(0, 1), rat(0, 1)]);
        lp.add_row(vec![rat(1, 1), rat(1, 1)], Sense::Eq, rat(1, 1));
        lp.add_row(vec![rat(1, 1), rat(-1, 1)], Sense::Ge, rat(0, 1));
        let witness = lp.feasible().unwrap().unwrap();
        let s: Rational = witness.iter().sum();
        assert_eq!(s, rat(1, 1));
    }
}
