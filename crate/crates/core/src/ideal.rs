use std::collections::HashSet;
use std::fmt;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// A monomial ideal held as its canonical minimal generating set.
///
/// No generator divides another and generators are sorted by the canonical
/// monomial order. An empty list is the zero ideal; the single generator `1`
/// is the unit ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    num_variables: usize,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn zero(num_variables: usize) -> Self {
        MonomialIdeal {
            num_variables,
            generators: Vec::new(),
        }
    }

    pub fn unit(num_variables: usize) -> Self {
        MonomialIdeal {
            num_variables,
            generators: vec![Monomial::one(num_variables)],
        }
    }

    /// The ideal generated by `gens`, reduced to its minimal generators.
    pub fn minimalize(num_variables: usize, gens: Vec<Monomial>) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.num_variables() != num_variables) {
            return Err(Error::domain(format!(
                "generator {g} has {} variables, ring has {num_variables}",
                g.num_variables()
            )));
        }
        Ok(MonomialIdeal {
            num_variables,
            generators: minimal_antichain(gens),
        })
    }

    /// Generators are exactly `x_τ` for the minimal non-faces `τ`.
    pub fn stanley_reisner(complex: &SimplicialComplex) -> Result<Self> {
        Self::stanley_reisner_within(complex, crate::complex::DEFAULT_MAX_VERTICES)
    }

    pub fn stanley_reisner_within(
        complex: &SimplicialComplex,
        max_vertices: usize,
    ) -> Result<Self> {
        let n = complex.num_vertices();
        let gens = complex
            .minimal_nonfaces_within(max_vertices)?
            .iter()
            .map(|s| Monomial::squarefree(n, s.members()))
            .collect();
        Self::minimalize(n, gens)
    }

    /// Parses a comma-separated generator list such as `x0*x5, x1*x3`.
    /// `0` (or an empty list) is the zero ideal.
    pub fn parse(text: &str, num_variables: usize) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() || text == "0" {
            return Ok(Self::zero(num_variables));
        }
        let gens = text
            .split(',')
            .map(|g| Monomial::parse(g, num_variables))
            .collect::<Result<Vec<_>>>()?;
        Self::minimalize(num_variables, gens)
    }

    pub fn num_variables(&self) -> usize {
        self.num_variables
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.first().is_some_and(Monomial::is_one)
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(Monomial::is_squarefree)
    }

    /// Least generator degree, `None` for the zero ideal.
    pub fn min_degree(&self) -> Option<u64> {
        self.generators.first().map(Monomial::degree)
    }

    fn check_ring(&self, other: &MonomialIdeal) -> Result<()> {
        if self.num_variables != other.num_variables {
            return Err(Error::domain(format!(
                "ideals over different rings: {} vs {} variables",
                self.num_variables, other.num_variables
            )));
        }
        Ok(())
    }

    fn check_monomial(&self, m: &Monomial) -> Result<()> {
        if m.num_variables() != self.num_variables {
            return Err(Error::domain(format!(
                "monomial has {} variables, ring has {}",
                m.num_variables(),
                self.num_variables
            )));
        }
        Ok(())
    }

    /// Intersection: minimal generators among pairwise lcms.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ring(other)?;
        let mut lcms = HashSet::with_capacity(self.generators.len() * other.generators.len());
        for g in &self.generators {
            for h in &other.generators {
                lcms.insert(g.lcm_unchecked(h));
            }
        }
        Ok(MonomialIdeal {
            num_variables: self.num_variables,
            generators: minimal_antichain(lcms.into_iter().collect()),
        })
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ring(other)?;
        let mut prods = HashSet::with_capacity(self.generators.len() * other.generators.len());
        for g in &self.generators {
            for h in &other.generators {
                prods.insert(g.mul_unchecked(h)?);
            }
        }
        Ok(MonomialIdeal {
            num_variables: self.num_variables,
            generators: minimal_antichain(prods.into_iter().collect()),
        })
    }

    /// Ordinary power `I^r` by repeated multiplication, minimalizing each step.
    pub fn power(&self, r: u32) -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::unit(self.num_variables);
        for _ in 0..r {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    pub fn contains_monomial(&self, m: &Monomial) -> Result<bool> {
        self.check_monomial(m)?;
        Ok(self.generators.iter().any(|g| g.divides_unchecked(m)))
    }

    /// Generator-wise inclusion `self ⊆ other`.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_ring(other)?;
        Ok(self
            .generators
            .iter()
            .all(|g| other.generators.iter().any(|h| h.divides_unchecked(g))))
    }

    /// Whether `m ∈ I^r`, without expanding the power.
    ///
    /// Searches generator multiplicities `c_j` with `Σ c_j = r` whose product
    /// divides `m`, pruning on the remaining exponent and degree budget.
    pub fn monomial_in_power(&self, m: &Monomial, r: u32) -> Result<bool> {
        self.check_monomial(m)?;
        if r == 0 {
            return Ok(true);
        }
        // only generators dividing m can take part
        let gens: Vec<&Monomial> = self
            .generators
            .iter()
            .filter(|g| g.divides_unchecked(m))
            .collect();
        if gens.is_empty() {
            return Ok(false);
        }
        let min_deg = gens.iter().map(|g| g.degree()).min().unwrap_or(0);
        let mut budget: Vec<i64> = m.exponents().iter().map(|&e| e as i64).collect();
        Ok(search_power(
            &gens,
            0,
            r as u64,
            m.degree() as i64,
            min_deg,
            &mut budget,
        ))
    }
}

fn search_power(
    gens: &[&Monomial],
    start: usize,
    remaining: u64,
    degree_budget: i64,
    min_deg: u64,
    budget: &mut [i64],
) -> bool {
    if remaining == 0 {
        return true;
    }
    if degree_budget < (remaining * min_deg) as i64 {
        return false;
    }
    for j in start..gens.len() {
        let g = gens[j];
        if !g
            .exponents()
            .iter()
            .zip(budget.iter())
            .all(|(&e, &b)| e as i64 <= b)
        {
            continue;
        }
        for (b, &e) in budget.iter_mut().zip(g.exponents()) {
            *b -= e as i64;
        }
        // allow g again: multisets are visited in non-decreasing index order
        let found = search_power(
            gens,
            j,
            remaining - 1,
            degree_budget - g.degree() as i64,
            min_deg,
            budget,
        );
        for (b, &e) in budget.iter_mut().zip(g.exponents()) {
            *b += e as i64;
        }
        if found {
            return true;
        }
    }
    false
}

/// Sorts canonically, deduplicates and drops every monomial divisible by
/// another one in the list.
pub(crate) fn minimal_antichain(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    let Some(nv) = gens.first().map(Monomial::num_variables) else {
        return gens;
    };
    // Sorted by degree, so a divisor of g is always inserted before g.
    let mut trie = DivisorTrie::new(nv);
    let mut kept = Vec::with_capacity(gens.len());
    for g in gens {
        if !trie.has_divisor(g.exponents()) {
            trie.insert(g.exponents());
            kept.push(g);
        }
    }
    kept
}

/// Exponent vectors stored one variable per level, answering "does some
/// stored vector divide this one" without scanning every entry.
struct DivisorTrie {
    depth: usize,
    // per node: (exponent, child) sorted by exponent
    nodes: Vec<Vec<(u32, usize)>>,
}

impl DivisorTrie {
    fn new(depth: usize) -> Self {
        DivisorTrie {
            depth,
            nodes: vec![Vec::new()],
        }
    }

    fn insert(&mut self, exps: &[u32]) {
        let mut node = 0;
        for &e in exps {
            node = match self.nodes[node].binary_search_by_key(&e, |&(x, _)| x) {
                Ok(k) => self.nodes[node][k].1,
                Err(k) => {
                    let child = self.nodes.len();
                    self.nodes.push(Vec::new());
                    self.nodes[node].insert(k, (e, child));
                    child
                }
            };
        }
    }

    fn has_divisor(&self, exps: &[u32]) -> bool {
        if self.nodes[0].is_empty() && self.depth > 0 {
            return false;
        }
        let mut stack = vec![(0usize, 0usize)];
        while let Some((node, level)) = stack.pop() {
            if level == self.depth {
                return true;
            }
            for &(e, child) in &self.nodes[node] {
                if e > exps[level] {
                    break;
                }
                stack.push((child, level + 1));
            }
        }
        false
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, g) in self.generators.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}
