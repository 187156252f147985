//! Branch-and-bound for small covering integer programs.
//!
//! Every problem here has the form `min wᵀa` over integer `a ≥ 0` with rows
//! `Σ_{i ∈ S} a_i ≥ k`, an optional cap on `Σ a_i` and per-variable bounds.

use num::{Integer, One, Signed, ToPrimitive, Zero};

use crate::lp::{integer, Constraint, LinearProgram, LpOutcome, Rational, Sense};

#[derive(Clone, Debug)]
pub(crate) struct CoverIp {
    pub num_vars: usize,
    pub rows: Vec<Vec<usize>>,
    pub rhs: i64,
    pub weights: Vec<i64>,
    pub total_cap: Option<i64>,
    pub lower: Vec<i64>,
    pub upper: Vec<Option<i64>>,
}

impl CoverIp {
    pub fn new(num_vars: usize, rows: Vec<Vec<usize>>, rhs: i64) -> Self {
        CoverIp {
            num_vars,
            rows,
            rhs,
            weights: vec![1; num_vars],
            total_cap: None,
            lower: vec![0; num_vars],
            upper: vec![None; num_vars],
        }
    }

    fn relaxation(&self, lower: &[i64], upper: &[Option<i64>]) -> LinearProgram {
        let n = self.num_vars;
        let unit = |i: usize| {
            let mut v = vec![Rational::zero(); n];
            v[i] = Rational::one();
            v
        };
        let mut constraints: Vec<Constraint> = self
            .rows
            .iter()
            .map(|row| {
                let mut coefficients = vec![Rational::zero(); n];
                for &i in row {
                    coefficients[i] = Rational::one();
                }
                Constraint {
                    coefficients,
                    sense: Sense::Ge,
                    rhs: integer(self.rhs),
                }
            })
            .collect();
        if let Some(cap) = self.total_cap {
            constraints.push(Constraint {
                coefficients: vec![Rational::one(); n],
                sense: Sense::Le,
                rhs: integer(cap),
            });
        }
        for i in 0..n {
            if lower[i] > 0 {
                constraints.push(Constraint {
                    coefficients: unit(i),
                    sense: Sense::Ge,
                    rhs: integer(lower[i]),
                });
            }
            if let Some(u) = upper[i] {
                constraints.push(Constraint {
                    coefficients: unit(i),
                    sense: Sense::Le,
                    rhs: integer(u),
                });
            }
        }
        LinearProgram {
            objective: self.weights.iter().map(|&w| integer(w)).collect(),
            constraints,
        }
    }

    fn feasible(&self, a: &[i64]) -> bool {
        let within = (0..self.num_vars)
            .all(|i| a[i] >= self.lower[i] && self.upper[i].is_none_or(|u| a[i] <= u));
        let rows_ok = self
            .rows
            .iter()
            .all(|row| row.iter().map(|&i| a[i]).sum::<i64>() >= self.rhs);
        let cap_ok = self.total_cap.is_none_or(|c| a.iter().sum::<i64>() <= c);
        within && rows_ok && cap_ok
    }

    fn value(&self, a: &[i64]) -> i64 {
        self.weights.iter().zip(a).map(|(w, x)| w * x).sum()
    }

    /// Optimal value and one optimal point, `None` when infeasible.
    pub fn solve(&self) -> Option<(i64, Vec<i64>)> {
        let mut best: Option<(i64, Vec<i64>)> = None;
        let mut stack = vec![(self.lower.clone(), self.upper.clone())];
        while let Some((lower, upper)) = stack.pop() {
            if (0..self.num_vars).any(|i| upper[i].is_some_and(|u| u < lower[i])) {
                continue;
            }
            let sol = match self.relaxation(&lower, &upper).solve() {
                LpOutcome::Optimal(sol) => sol,
                _ => continue,
            };
            // integer weights: the node can do no better than ceil(LP)
            let bound = ceil_i64(&sol.optimum);
            if best.as_ref().is_some_and(|(v, _)| bound >= *v) {
                continue;
            }
            if best.is_none() {
                let rounded: Vec<i64> = sol.point.iter().map(ceil_i64).collect();
                if self.feasible(&rounded) {
                    best = Some((self.value(&rounded), rounded));
                    if best.as_ref().is_some_and(|(v, _)| bound >= *v) {
                        continue;
                    }
                }
            }
            match sol.point.iter().position(|x| !x.is_integer()) {
                None => {
                    let a: Vec<i64> = sol.point.iter().map(ceil_i64).collect();
                    let v = self.value(&a);
                    if best.as_ref().is_none_or(|(b, _)| v < *b) {
                        best = Some((v, a));
                    }
                }
                Some(i) => {
                    let x = &sol.point[i];
                    let mut up_lower = lower.clone();
                    up_lower[i] = ceil_i64(x);
                    let mut down_upper = upper.clone();
                    down_upper[i] = Some(floor_i64(x));
                    // explored first: the rounded-down branch
                    stack.push((up_lower, upper));
                    stack.push((lower, down_upper));
                }
            }
        }
        best
    }
}

pub(crate) fn ceil_i64(q: &Rational) -> i64 {
    let (d, r) = q.numer().div_rem(q.denom());
    let d = d.to_i64().expect("LP values fit in i64");
    if r.is_positive() {
        d + 1
    } else {
        d
    }
}

pub(crate) fn floor_i64(q: &Rational) -> i64 {
    q.floor()
        .to_integer()
        .to_i64()
        .expect("LP values fit in i64")
}
