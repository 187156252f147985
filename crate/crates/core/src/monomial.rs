use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A monomial `x_0^{a_0} ··· x_{N}^{a_N}` stored as its dense exponent vector.
///
/// The canonical order compares total degree first; within one degree the
/// lexicographically larger exponent vector (variable 0 most significant)
/// comes first, so `x0*x5 < x1*x3 < x2*x4`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial { exponents }
    }

    pub fn one(num_variables: usize) -> Self {
        Monomial {
            exponents: vec![0; num_variables],
        }
    }

    pub fn variable(num_variables: usize, index: usize) -> Self {
        let mut m = Self::one(num_variables);
        m.exponents[index] = 1;
        m
    }

    /// The squarefree monomial `∏_{i ∈ support} x_i`.
    pub fn squarefree(num_variables: usize, support: &[usize]) -> Self {
        let mut m = Self::one(num_variables);
        for &i in support {
            m.exponents[i] = 1;
        }
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn num_variables(&self) -> usize {
        self.exponents.len()
    }

    pub fn degree(&self) -> u64 {
        self.exponents.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exponents.iter().all(|&e| e <= 1)
    }

    pub fn support(&self) -> Vec<usize> {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// Degree of the part supported on the given variables.
    pub fn degree_in(&self, variables: &[usize]) -> u64 {
        variables.iter().map(|&i| self.exponents[i] as u64).sum()
    }

    fn check_len(&self, other: &Monomial) -> Result<()> {
        if self.exponents.len() != other.exponents.len() {
            return Err(Error::domain(format!(
                "monomials over different rings: {} vs {} variables",
                self.exponents.len(),
                other.exponents.len()
            )));
        }
        Ok(())
    }

    /// `self | other`, componentwise `≤` on exponents.
    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        self.check_len(other)?;
        Ok(self.divides_unchecked(other))
    }

    pub(crate) fn divides_unchecked(&self, other: &Monomial) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.check_len(other)?;
        Ok(self.lcm_unchecked(other))
    }

    pub(crate) fn lcm_unchecked(&self, other: &Monomial) -> Monomial {
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check_len(other)?;
        self.mul_unchecked(other)
    }

    pub(crate) fn mul_unchecked(&self, other: &Monomial) -> Result<Monomial> {
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(&a, &b)| a.checked_add(b))
            .collect::<Option<Vec<u32>>>()
            .ok_or_else(|| Error::resource("exponent overflow"))?;
        Ok(Monomial { exponents })
    }

    /// Parses `x0^2*x3` style text; `1` is the unit monomial.
    pub fn parse(text: &str, num_variables: usize) -> Result<Monomial> {
        let text = text.trim();
        let mut m = Monomial::one(num_variables);
        if text == "1" {
            return Ok(m);
        }
        if text.is_empty() {
            return Err(Error::domain("empty monomial"));
        }
        for factor in text.split('*') {
            let factor = factor.trim();
            let body = factor
                .strip_prefix('x')
                .ok_or_else(|| Error::domain(format!("bad factor `{factor}`")))?;
            let (var, exp) = match body.split_once('^') {
                Some((v, e)) => (v, e),
                None => (body, "1"),
            };
            let var: usize = var
                .parse()
                .map_err(|_| Error::domain(format!("bad variable in `{factor}`")))?;
            let exp: u32 = exp
                .parse()
                .map_err(|_| Error::domain(format!("bad exponent in `{factor}`")))?;
            if var >= num_variables {
                return Err(Error::domain(format!(
                    "variable x{var} outside ring with {num_variables} variables"
                )));
            }
            m.exponents[var] = m.exponents[var]
                .checked_add(exp)
                .ok_or_else(|| Error::resource("exponent overflow"))?;
        }
        Ok(m)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exponents.cmp(&self.exponents))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        Ok(())
    }
}
