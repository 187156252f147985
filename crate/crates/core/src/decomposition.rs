//! Minimal primes of squarefree monomial ideals.
//!
//! The minimal primes of a squarefree monomial ideal are generated by
//! variables, and their supports are exactly the minimal transversals of the
//! hypergraph whose edges are the generator supports.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// A prime ideal generated by a non-empty set of variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct VariablePrime {
    support: Vec<usize>,
}

impl VariablePrime {
    pub fn new(support: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut support: Vec<usize> = support.into_iter().collect();
        support.sort_unstable();
        support.dedup();
        if support.is_empty() {
            return Err(Error::domain(
                "a variable prime needs at least one variable",
            ));
        }
        Ok(VariablePrime { support })
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn height(&self) -> usize {
        self.support.len()
    }

    /// Whether the support of `m` meets the variables of this prime.
    pub fn hits(&self, m: &Monomial) -> bool {
        m.degree_in(&self.support) > 0
    }

    pub fn to_ideal(&self, num_variables: usize) -> Result<MonomialIdeal> {
        self.check_ring(num_variables)?;
        MonomialIdeal::minimalize(
            num_variables,
            self.support
                .iter()
                .map(|&i| Monomial::variable(num_variables, i))
                .collect(),
        )
    }

    /// `P^m`: all degree-`m` monomials in the variables of `P`.
    pub fn power(&self, num_variables: usize, m: u32) -> Result<MonomialIdeal> {
        self.check_ring(num_variables)?;
        let mut gens = Vec::new();
        let mut exps = vec![0u32; num_variables];
        fill_degree(&self.support, 0, m, &mut exps, &mut gens);
        MonomialIdeal::minimalize(num_variables, gens)
    }

    /// `m ∈ P^k` iff the degree of `m` in the variables of `P` is at least `k`.
    pub fn contains_in_power(&self, m: &Monomial, k: u64) -> bool {
        m.degree_in(&self.support) >= k
    }

    fn check_ring(&self, num_variables: usize) -> Result<()> {
        match self.support.last() {
            Some(&v) if v >= num_variables => Err(Error::domain(format!(
                "prime uses x{v} outside ring with {num_variables} variables"
            ))),
            _ => Ok(()),
        }
    }
}

/// Appends to `out` every monomial of degree `left` supported on `vars[k..]`,
/// on top of the exponents already set in `exps`.
pub(crate) fn fill_degree(
    vars: &[usize],
    k: usize,
    left: u32,
    exps: &mut Vec<u32>,
    out: &mut Vec<Monomial>,
) {
    if left == 0 {
        out.push(Monomial::new(exps.clone()));
        return;
    }
    if k == vars.len() {
        return;
    }
    if k + 1 == vars.len() {
        exps[vars[k]] += left;
        out.push(Monomial::new(exps.clone()));
        exps[vars[k]] -= left;
        return;
    }
    for e in (0..=left).rev() {
        exps[vars[k]] += e;
        fill_degree(vars, k + 1, left - e, exps, out);
        exps[vars[k]] -= e;
    }
}

impl Ord for VariablePrime {
    fn cmp(&self, other: &Self) -> Ordering {
        self.support
            .len()
            .cmp(&other.support.len())
            .then_with(|| self.support.cmp(&other.support))
    }
}

impl PartialOrd for VariablePrime {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VariablePrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (k, i) in self.support.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "x{i}")?;
        }
        write!(f, ">")
    }
}

/// Minimal primes of a squarefree monomial ideal, canonically ordered.
pub fn primary_decomposition(ideal: &MonomialIdeal) -> Result<Vec<VariablePrime>> {
    if !ideal.is_squarefree() {
        return Err(Error::domain(
            "primary decomposition implemented for squarefree ideals only",
        ));
    }
    if ideal.is_zero() {
        return Err(Error::domain(
            "the zero ideal has no variable-prime decomposition",
        ));
    }
    if ideal.num_variables() > 64 {
        return Err(Error::resource("decomposition limited to 64 variables"));
    }
    let edges: Vec<u64> = ideal
        .generators()
        .iter()
        .map(|g| g.support().iter().fold(0u64, |m, &i| m | (1u64 << i)))
        .collect();
    if edges.contains(&0) {
        // unit ideal: empty intersection
        return Ok(Vec::new());
    }
    let mut primes: Vec<VariablePrime> = minimal_transversals(&edges)
        .into_iter()
        .map(|t| VariablePrime {
            support: crate::complex::mask_members(t).collect(),
        })
        .collect();
    primes.sort();
    Ok(primes)
}

/// Minimal hitting sets of a hypergraph with non-empty edges.
///
/// Branches on the first edge not yet hit, adding one of its vertices, then
/// discards every transversal that strictly contains another one.
pub(crate) fn minimal_transversals(edges: &[u64]) -> Vec<u64> {
    fn grow(edges: &[u64], current: u64, found: &mut Vec<u64>) {
        if found.iter().any(|&t| t & !current == 0) {
            return;
        }
        match edges.iter().find(|&&e| e & current == 0) {
            None => found.push(current),
            Some(&edge) => {
                for v in crate::complex::mask_members(edge) {
                    grow(edges, current | (1u64 << v), found);
                }
            }
        }
    }

    let mut found = Vec::new();
    grow(edges, 0, &mut found);
    found.sort_unstable();
    found.dedup();
    let minimal: Vec<u64> = found
        .iter()
        .copied()
        .filter(|&t| !found.iter().any(|&o| o != t && o & t == o))
        .collect();
    minimal
}

/// Intersects the primes in order, returning the ideal they cut out.
pub fn intersect_primes(primes: &[VariablePrime], num_variables: usize) -> Result<MonomialIdeal> {
    let mut acc = MonomialIdeal::unit(num_variables);
    for p in primes {
        acc = acc.intersect(&p.to_ideal(num_variables)?)?;
    }
    Ok(acc)
}
