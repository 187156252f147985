//! Stanley-Reisner ideals of simplicial complexes, symbolic powers of
//! squarefree monomial ideals and exact Waldschmidt constants.
//!
//! ```
//! use srw_core::{MonomialIdeal, SimplicialComplex, waldschmidt};
//!
//! let graph = SimplicialComplex::bipyramidal_graph(4).unwrap();
//! let ideal = MonomialIdeal::stanley_reisner(&graph).unwrap();
//! assert_eq!(srw_core::lp::format_rational(&waldschmidt(&ideal).unwrap()), "3/2");
//! ```

pub mod cli;
pub mod complex;
pub mod decomposition;
pub mod error;
pub mod ideal;
mod ilp;
pub mod lp;
pub mod monomial;
mod serial;
pub mod symbolic;
pub mod waldschmidt;

pub use complex::{SimplicialComplex, VertexSubset};
pub use decomposition::{primary_decomposition, VariablePrime};
pub use error::{Error, Result};
pub use ideal::MonomialIdeal;
pub use lp::{solve_lp, CoverLp, LpSolution, Rational};
pub use monomial::Monomial;
pub use symbolic::{
    alpha, alpha_symbolic, big_height, containment_check, symbolic_power, verify_els_hh,
    AlphaCertificate, ContainmentResult, SymbolicPowerRequest,
};
pub use waldschmidt::{
    closed_form_bipyramid, closed_form_bipyramidal_graph, waldschmidt, waldschmidt_sequence,
};
