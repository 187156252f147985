//! Symbolic powers of squarefree monomial ideals, their initial degrees and
//! the containment `I^(m) ⊆ I^r`.
//!
//! For a squarefree monomial ideal with minimal primes `P_1, …, P_s` the
//! symbolic power is `I^(m) = P_1^m ∩ … ∩ P_s^m`, and a monomial lies in
//! `P^m` iff its degree in the variables of `P` is at least `m`. Initial
//! degrees are therefore optima of small covering integer programs, which
//! is how [`alpha_symbolic`] computes them without expanding `I^(m)`.

use serde::Serialize;

use crate::decomposition::{fill_degree, primary_decomposition, VariablePrime};
use crate::error::{Error, Result};
use crate::ideal::{minimal_antichain, MonomialIdeal};
use crate::ilp::CoverIp;
use crate::lp::{solve_lp, CoverLp, Rational};
use crate::monomial::Monomial;
use crate::serial;

/// Default ceiling on generators produced while expanding a symbolic power.
pub const DEFAULT_MAX_GENERATORS: usize = 200_000;

/// A validated `(ideal, m)` pair.
#[derive(Clone, Debug)]
pub struct SymbolicPowerRequest {
    ideal: MonomialIdeal,
    order: u32,
}

impl SymbolicPowerRequest {
    pub fn new(ideal: MonomialIdeal, order: u32) -> Result<Self> {
        require_squarefree(&ideal)?;
        require_order(order)?;
        Ok(SymbolicPowerRequest { ideal, order })
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn order(&self) -> u32 {
        self.order
    }
}

/// Least degree of `I^(m)` with a monomial attaining it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlphaCertificate {
    pub value: u64,
    #[serde(serialize_with = "serial::display")]
    pub witness: Monomial,
    /// Optimum of the covering LP with right-hand side one, a lower bound
    /// on `α(I^(m)) / m` for every `m`.
    #[serde(serialize_with = "serial::rational")]
    pub dual_bound: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContainmentResult {
    pub m: u32,
    pub r: u32,
    pub contained: bool,
}

fn require_squarefree(ideal: &MonomialIdeal) -> Result<()> {
    if !ideal.is_squarefree() {
        return Err(Error::domain(
            "symbolic powers implemented for squarefree ideals only",
        ));
    }
    Ok(())
}

fn require_order(m: u32) -> Result<()> {
    if m == 0 {
        return Err(Error::domain("symbolic power order must be at least 1"));
    }
    Ok(())
}

/// Initial degree: least generator degree of a non-zero ideal.
pub fn alpha(ideal: &MonomialIdeal) -> Result<u64> {
    ideal
        .min_degree()
        .ok_or_else(|| Error::domain("initial degree of the zero ideal is undefined"))
}

pub fn symbolic_power(ideal: &MonomialIdeal, m: u32) -> Result<MonomialIdeal> {
    symbolic_power_within(ideal, m, DEFAULT_MAX_GENERATORS)
}

/// `I^(m)` as an explicit ideal, folding in one prime at a time.
///
/// `⟨g⟩ ∩ P^m` is generated by `g` times the monomials of degree
/// `m - deg_P(g)` in the variables of `P`, which avoids listing `P^m`.
pub fn symbolic_power_within(
    ideal: &MonomialIdeal,
    m: u32,
    max_generators: usize,
) -> Result<MonomialIdeal> {
    require_squarefree(ideal)?;
    require_order(m)?;
    if m == 1 {
        return Ok(ideal.clone());
    }
    let n = ideal.num_variables();
    let primes = primary_decomposition(ideal)?;
    let mut acc: Vec<Monomial> = vec![Monomial::one(n)];
    for p in &primes {
        let vars = p.support();
        let missing: Vec<u32> = acc
            .iter()
            .map(|g| (m as u64).saturating_sub(g.degree_in(vars)) as u32)
            .collect();
        let planned = missing
            .iter()
            .try_fold(0usize, |sum, &d| {
                sum.checked_add(count_monomials(vars.len(), d)?)
            })
            .filter(|&c| c <= max_generators);
        if planned.is_none() {
            return Err(Error::resource(format!(
                "symbolic power of order {m} exceeds {max_generators} intermediate generators; \
                 use alpha_symbolic for the initial degree"
            )));
        }
        let mut next = Vec::with_capacity(planned.unwrap_or(0));
        for (g, &d) in acc.iter().zip(&missing) {
            let mut exps = g.exponents().to_vec();
            fill_degree(vars, 0, d, &mut exps, &mut next);
        }
        acc = minimal_antichain(next);
    }
    MonomialIdeal::minimalize(n, acc)
}

/// `C(k + d - 1, d)`, the number of degree-`d` monomials in `k` variables.
fn count_monomials(k: usize, d: u32) -> Option<usize> {
    if d == 0 {
        return Some(1);
    }
    if k == 0 {
        return Some(0);
    }
    let mut c: u128 = 1;
    for i in 1..=d as u128 {
        c = c * (k as u128 - 1 + i) / i;
        if c > usize::MAX as u128 {
            return None;
        }
    }
    Some(c as usize)
}

/// `α(I^(m))` by branch-and-bound on the covering integer program
/// `min Σ a_i` s.t. `Σ_{i ∈ P} a_i ≥ m` for every minimal prime `P`.
///
/// Among optimal exponent vectors the witness minimizes the largest
/// exponent first, then is lexicographically smallest.
pub fn alpha_symbolic(ideal: &MonomialIdeal, m: u32) -> Result<AlphaCertificate> {
    require_squarefree(ideal)?;
    require_order(m)?;
    let n = ideal.num_variables();
    let primes = primary_decomposition(ideal)?;
    let rows: Vec<Vec<usize>> = primes.iter().map(|p| p.support().to_vec()).collect();
    let dual_bound = if rows.is_empty() {
        Rational::from_integer(0.into())
    } else {
        solve_lp(&CoverLp::new(n, rows.clone())?)?.optimum
    };

    let base = CoverIp::new(n, rows, m as i64);
    let (value, first) = base
        .solve()
        .ok_or_else(|| Error::domain("covering program unexpectedly infeasible"))?;

    let capped = |cap: i64| {
        let mut ip = base.clone();
        ip.total_cap = Some(value);
        ip.upper = vec![Some(cap); n];
        ip
    };
    // smallest exponent ceiling that still admits an optimal point
    let (mut lo, mut hi) = (0i64, first.iter().copied().max().unwrap_or(0));
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if capped(mid).solve().is_some() {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    let mut ip = capped(hi);
    for i in 0..n {
        let mut weights = vec![0; n];
        weights[i] = 1;
        ip.weights = weights;
        let (ai, _) = ip
            .solve()
            .ok_or_else(|| Error::domain("witness refinement lost feasibility"))?;
        ip.lower[i] = ai;
        ip.upper[i] = Some(ai);
    }
    let witness = Monomial::new(ip.lower.iter().map(|&a| a as u32).collect());
    debug_assert_eq!(witness.degree(), value as u64);
    debug_assert!(primes
        .iter()
        .all(|p| p.contains_in_power(&witness, m as u64)));

    Ok(AlphaCertificate {
        value: value as u64,
        witness,
        dual_bound,
    })
}

/// Whether `I^(m) ⊆ I^r`, checked generator by generator.
pub fn containment_check(ideal: &MonomialIdeal, m: u32, r: u32) -> Result<bool> {
    containment_check_within(ideal, m, r, DEFAULT_MAX_GENERATORS)
}

pub fn containment_check_within(
    ideal: &MonomialIdeal,
    m: u32,
    r: u32,
    max_generators: usize,
) -> Result<bool> {
    require_squarefree(ideal)?;
    require_order(m)?;
    if r == 0 {
        return Err(Error::domain("ordinary power exponent must be at least 1"));
    }
    let a = alpha(ideal)?;
    if ideal.is_unit() {
        return Ok(true);
    }
    // every element of I^r has degree at least r·α(I)
    if alpha_symbolic(ideal, m)?.value < r as u64 * a {
        return Ok(false);
    }
    let sym = symbolic_power_within(ideal, m, max_generators)?;
    for g in sym.generators() {
        if !ideal.monomial_in_power(g, r)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Largest height of an associated prime.
pub fn big_height(ideal: &MonomialIdeal) -> Result<usize> {
    if ideal.is_zero() || ideal.is_unit() {
        return Err(Error::domain("big height needs a proper non-zero ideal"));
    }
    require_squarefree(ideal)?;
    Ok(primary_decomposition(ideal)?
        .iter()
        .map(VariablePrime::height)
        .max()
        .unwrap_or(0))
}

/// Checks `I^(h·r) ⊆ I^r` with `h` the big height. This containment is a
/// theorem, so `false` means the computation itself is wrong.
pub fn verify_els_hh(ideal: &MonomialIdeal, r: u32) -> Result<bool> {
    verify_els_hh_within(ideal, r, DEFAULT_MAX_GENERATORS)
}

pub fn verify_els_hh_within(ideal: &MonomialIdeal, r: u32, max_generators: usize) -> Result<bool> {
    let h = big_height(ideal)? as u32;
    containment_check_within(ideal, h * r, r, max_generators)
}
