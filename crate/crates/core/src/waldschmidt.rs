//! Waldschmidt constants of squarefree monomial ideals.
//!
//! `α(I^(m))` is the optimum of the covering integer program with
//! right-hand side `m` (see [`crate::symbolic::alpha_symbolic`]). Scaling the
//! LP relaxation shows `α(I^(m)) / m` is bounded below by the covering LP
//! with right-hand side one, and the limit `α̂(I)` equals that LP optimum.
//! [`waldschmidt`] returns it exactly; [`waldschmidt_sequence`] gives the
//! finite ratios for comparison.

use num::BigInt;

use crate::decomposition::primary_decomposition;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::lp::{solve_lp, CoverLp, LpSolution, Rational};
use crate::symbolic::alpha_symbolic;

/// The covering LP of the minimal primes of `ideal`.
pub fn cover_lp(ideal: &MonomialIdeal) -> Result<CoverLp> {
    if ideal.is_zero() || ideal.is_unit() {
        return Err(Error::domain(
            "Waldschmidt constant needs a proper non-zero ideal",
        ));
    }
    let primes = primary_decomposition(ideal)?;
    CoverLp::from_primes(ideal.num_variables(), &primes)
}

/// Exact `α̂(I)` with the LP solution that certifies it.
pub fn waldschmidt_with_certificate(ideal: &MonomialIdeal) -> Result<(Rational, LpSolution)> {
    let lp = cover_lp(ideal)?;
    let sol = solve_lp(&lp)?;
    Ok((sol.optimum.clone(), sol))
}

pub fn waldschmidt(ideal: &MonomialIdeal) -> Result<Rational> {
    Ok(waldschmidt_with_certificate(ideal)?.0)
}

/// `[α(I^(m)) / m for m = 1..=max_m]`.
pub fn waldschmidt_sequence(ideal: &MonomialIdeal, max_m: u32) -> Result<Vec<Rational>> {
    if max_m == 0 {
        return Err(Error::domain("sequence length must be at least 1"));
    }
    (1..=max_m)
        .map(|m| {
            let a = alpha_symbolic(ideal, m)?.value;
            Ok(Rational::new(BigInt::from(a), BigInt::from(m)))
        })
        .collect()
}

/// Closed form for the bipyramid boundary complex: `2` for a triangle base,
/// `n / (n - 2)` otherwise.
pub fn closed_form_bipyramid(n: usize) -> Result<Rational> {
    if n < 3 {
        return Err(Error::domain("bipyramid requires n ≥ 3"));
    }
    if n == 3 {
        return Ok(Rational::from_integer(BigInt::from(2)));
    }
    Ok(Rational::new(BigInt::from(n), BigInt::from(n - 2)))
}

/// Closed form for the bipyramidal graph: `(n + 2) / n`.
pub fn closed_form_bipyramidal_graph(n: usize) -> Result<Rational> {
    if n < 3 {
        return Err(Error::domain("bipyramidal graph requires n ≥ 3"));
    }
    Ok(Rational::new(BigInt::from(n + 2), BigInt::from(n)))
}
