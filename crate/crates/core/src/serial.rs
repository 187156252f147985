//! Serde helpers: monomials as `x0^2*x3` text and rationals as `p/q`.

use std::fmt::Display;

use serde::Serializer;

use crate::lp::{format_rational, Rational};

pub fn display<T: Display, S: Serializer>(value: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(value)
}

pub fn rational<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(q))
}
