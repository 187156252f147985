//! Exact two-phase simplex over arbitrary-precision rationals.
//!
//! Problems are `min cᵀx` subject to linear rows and `x ≥ 0`. Pivoting uses
//! Bland's least-index rule, so the method terminates on degenerate problems
//! and every run on the same input follows the same pivot sequence.

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::Serialize;

use crate::decomposition::VariablePrime;
use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rational(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn integer(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// `p/q`, or just `p` when the denominator is one.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::domain(format!("bad rational `{text}`"));
    let (n, d) = match text.trim().split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Ge,
    Le,
    Eq,
}

#[derive(Clone, Debug)]
pub struct Constraint {
    pub coefficients: Vec<Rational>,
    pub sense: Sense,
    pub rhs: Rational,
}

/// `min objectiveᵀx` over `x ≥ 0` and the given rows.
#[derive(Clone, Debug)]
pub struct LinearProgram {
    pub objective: Vec<Rational>,
    pub constraints: Vec<Constraint>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpSolution {
    pub optimum: Rational,
    pub point: Vec<Rational>,
    /// Basic columns at termination, ascending. Columns past the structural
    /// variables are slack, surplus or artificial columns.
    pub basis_certificate: Vec<usize>,
    /// One multiplier per constraint row.
    pub duals: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal(LpSolution),
    Infeasible,
    Unbounded,
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    ncols: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        for v in self.rows[r].iter_mut() {
            *v = &*v / &p;
        }
        self.rhs[r] = &self.rhs[r] / &p;
        let prow = self.rows[r].clone();
        let prhs = self.rhs[r].clone();
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][c].is_zero() {
                continue;
            }
            let f = self.rows[i][c].clone();
            for (v, pv) in self.rows[i].iter_mut().zip(&prow) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
            self.rhs[i] = &self.rhs[i] - &f * &prhs;
        }
        self.basis[r] = c;
    }

    fn reduced_costs(&self, cost: &[Rational]) -> Vec<Rational> {
        let mut d = cost.to_vec();
        for (r, &b) in self.basis.iter().enumerate() {
            if cost[b].is_zero() {
                continue;
            }
            for (dj, t) in d.iter_mut().zip(&self.rows[r]) {
                if !t.is_zero() {
                    *dj -= &cost[b] * t;
                }
            }
        }
        d
    }

    /// Runs Bland's rule to optimality. Returns false when unbounded.
    fn optimize(&mut self, cost: &[Rational], allowed: &[bool]) -> bool {
        loop {
            let d = self.reduced_costs(cost);
            let entering = (0..self.ncols)
                .find(|&j| allowed[j] && d[j].is_negative() && !self.basis.contains(&j));
            let Some(c) = entering else {
                return true;
            };
            let mut best: Option<(usize, Rational)> = None;
            for r in 0..self.rows.len() {
                let a = &self.rows[r][c];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.rhs[r] / a;
                let better = match &best {
                    None => true,
                    Some((br, bratio)) => {
                        ratio < *bratio || (ratio == *bratio && self.basis[r] < self.basis[*br])
                    }
                };
                if better {
                    best = Some((r, ratio));
                }
            }
            match best {
                Some((r, _)) => self.pivot(r, c),
                None => return false,
            }
        }
    }
}

impl LinearProgram {
    pub fn num_variables(&self) -> usize {
        self.objective.len()
    }

    pub fn solve(&self) -> LpOutcome {
        let n = self.num_variables();
        let m = self.constraints.len();

        // Normalize to non-negative right-hand sides, remembering the sign.
        let mut signs = Vec::with_capacity(m);
        let mut senses = Vec::with_capacity(m);
        let mut rows = Vec::with_capacity(m);
        let mut rhs = Vec::with_capacity(m);
        for c in &self.constraints {
            debug_assert_eq!(c.coefficients.len(), n);
            if c.rhs.is_negative() {
                signs.push(-1i32);
                senses.push(match c.sense {
                    Sense::Ge => Sense::Le,
                    Sense::Le => Sense::Ge,
                    Sense::Eq => Sense::Eq,
                });
                rows.push(c.coefficients.iter().map(|a| -a).collect::<Vec<_>>());
                rhs.push(-&c.rhs);
            } else {
                signs.push(1);
                senses.push(c.sense);
                rows.push(c.coefficients.clone());
                rhs.push(c.rhs.clone());
            }
        }

        // Column layout: structural, then one slack/surplus per inequality,
        // then one artificial per >= or = row.
        let mut ncols = n;
        let mut slack = vec![None; m];
        for r in 0..m {
            if senses[r] != Sense::Eq {
                slack[r] = Some(ncols);
                ncols += 1;
            }
        }
        let mut artificial = vec![None; m];
        for r in 0..m {
            if senses[r] != Sense::Le {
                artificial[r] = Some(ncols);
                ncols += 1;
            }
        }
        let mut identity_col = vec![0; m];
        let mut basis = vec![0; m];
        let mut table = Vec::with_capacity(m);
        for r in 0..m {
            let mut row = rows[r].clone();
            row.resize(ncols, Rational::zero());
            if let Some(s) = slack[r] {
                row[s] = if senses[r] == Sense::Le {
                    Rational::one()
                } else {
                    -Rational::one()
                };
            }
            if let Some(a) = artificial[r] {
                row[a] = Rational::one();
            }
            let id = artificial[r]
                .or(slack[r])
                .expect("every row has a basic column");
            identity_col[r] = id;
            basis[r] = id;
            table.push(row);
        }
        let mut t = Tableau {
            rows: table,
            rhs,
            basis,
            ncols,
        };
        let is_artificial: Vec<bool> = (0..ncols).map(|j| artificial.contains(&Some(j))).collect();

        // Phase one: drive artificials to zero.
        if is_artificial.iter().any(|&a| a) {
            let cost: Vec<Rational> = is_artificial
                .iter()
                .map(|&a| if a { Rational::one() } else { Rational::zero() })
                .collect();
            let all = vec![true; ncols];
            t.optimize(&cost, &all);
            let infeas: Rational = t
                .basis
                .iter()
                .zip(&t.rhs)
                .filter(|(&b, _)| is_artificial[b])
                .map(|(_, v)| v.clone())
                .sum();
            if infeas.is_positive() {
                return LpOutcome::Infeasible;
            }
            // Pivot zero-level artificials out where possible; rows where
            // that is impossible are redundant and never change again.
            for r in 0..m {
                if is_artificial[t.basis[r]] {
                    if let Some(c) =
                        (0..ncols).find(|&j| !is_artificial[j] && !t.rows[r][j].is_zero())
                    {
                        t.pivot(r, c);
                    }
                }
            }
        }

        let mut cost = self.objective.clone();
        cost.resize(ncols, Rational::zero());
        let allowed: Vec<bool> = is_artificial.iter().map(|a| !a).collect();
        if !t.optimize(&cost, &allowed) {
            return LpOutcome::Unbounded;
        }

        let mut point = vec![Rational::zero(); n];
        for (r, &b) in t.basis.iter().enumerate() {
            if b < n {
                point[b] = t.rhs[r].clone();
            }
        }
        let optimum: Rational = self.objective.iter().zip(&point).map(|(c, x)| c * x).sum();
        let d = t.reduced_costs(&cost);
        let duals = (0..m)
            .map(|r| {
                let y = -d[identity_col[r]].clone();
                if signs[r] < 0 {
                    -y
                } else {
                    y
                }
            })
            .collect();
        let mut basis_certificate = t.basis.clone();
        basis_certificate.sort_unstable();
        LpOutcome::Optimal(LpSolution {
            optimum,
            point,
            basis_certificate,
            duals,
        })
    }
}

/// Covering LP `min 1ᵀy` s.t. `Σ_{i ∈ row} y_i ≥ 1`, `y ≥ 0`; one row per
/// associated prime.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverLp {
    pub num_variables: usize,
    pub rows: Vec<Vec<usize>>,
}

impl CoverLp {
    pub fn new(num_variables: usize, rows: Vec<Vec<usize>>) -> Result<Self> {
        let mut canon: Vec<Vec<usize>> = Vec::with_capacity(rows.len());
        for mut row in rows {
            row.sort_unstable();
            row.dedup();
            if row.is_empty() {
                return Err(Error::domain("cover LP row without variables"));
            }
            if let Some(&v) = row.last().filter(|&&v| v >= num_variables) {
                return Err(Error::domain(format!(
                    "cover LP row uses column {v} of {num_variables}"
                )));
            }
            if !canon.contains(&row) {
                canon.push(row);
            }
        }
        Ok(CoverLp {
            num_variables,
            rows: canon,
        })
    }

    pub fn from_primes(num_variables: usize, primes: &[VariablePrime]) -> Result<Self> {
        Self::new(
            num_variables,
            primes.iter().map(|p| p.support().to_vec()).collect(),
        )
    }

    /// The same rows with right-hand side `rhs` instead of one.
    pub fn program_with_rhs(&self, rhs: Rational) -> LinearProgram {
        LinearProgram {
            objective: vec![Rational::one(); self.num_variables],
            constraints: self
                .rows
                .iter()
                .map(|row| {
                    let mut coefficients = vec![Rational::zero(); self.num_variables];
                    for &i in row {
                        coefficients[i] = Rational::one();
                    }
                    Constraint {
                        coefficients,
                        sense: Sense::Ge,
                        rhs: rhs.clone(),
                    }
                })
                .collect(),
        }
    }

    pub fn program(&self) -> LinearProgram {
        self.program_with_rhs(Rational::one())
    }

    /// Checks primal feasibility, dual feasibility (`z ≥ 0`, `Aᵀz ≤ 1`) and
    /// equality of the two objective values, all exactly.
    pub fn verify(&self, sol: &LpSolution) -> Result<()> {
        let fail = |what: &str| {
            Err(Error::domain(format!(
                "LP certificate check failed: {what}"
            )))
        };
        if sol.point.len() != self.num_variables || sol.duals.len() != self.rows.len() {
            return fail("dimension mismatch");
        }
        if sol.point.iter().any(Signed::is_negative) {
            return fail("negative primal entry");
        }
        for row in &self.rows {
            let s: Rational = row.iter().map(|&i| sol.point[i].clone()).sum();
            if s < Rational::one() {
                return fail("uncovered row");
            }
        }
        let primal: Rational = sol.point.iter().cloned().sum();
        if primal != sol.optimum {
            return fail("objective does not match point");
        }
        if sol.duals.iter().any(Signed::is_negative) {
            return fail("negative dual entry");
        }
        for j in 0..self.num_variables {
            let s: Rational = self
                .rows
                .iter()
                .zip(&sol.duals)
                .filter(|(row, _)| row.contains(&j))
                .map(|(_, z)| z.clone())
                .sum();
            if s > Rational::one() {
                return fail("dual constraint violated");
            }
        }
        let dual: Rational = sol.duals.iter().cloned().sum();
        if dual != sol.optimum {
            return fail("duality gap");
        }
        Ok(())
    }
}

/// Exact optimum of a cover LP together with its dual certificate.
pub fn solve_lp(p: &CoverLp) -> Result<LpSolution> {
    match p.program().solve() {
        LpOutcome::Optimal(sol) => {
            p.verify(&sol)?;
            Ok(sol)
        }
        // y = 1 is feasible and the objective is bounded below by zero
        other => Err(Error::domain(format!("cover LP solver returned {other:?}"))),
    }
}
