use std::collections::BTreeSet;

use num::{BigInt, Zero};
use proptest::prelude::*;
use srw_core::lp::{integer, Constraint, LinearProgram, LpOutcome, Sense};
use srw_core::{
    alpha_symbolic, primary_decomposition, solve_lp, symbolic_power, CoverLp, Monomial,
    MonomialIdeal, Rational, SimplicialComplex, VariablePrime, VertexSubset,
};

const NV: usize = 4;

fn monomial(nv: usize, max_exp: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, nv).prop_map(Monomial::new)
}

fn ideal(nv: usize, max_exp: u32, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(monomial(nv, max_exp), 1..=max_gens)
        .prop_map(move |g| MonomialIdeal::minimalize(nv, g).unwrap())
}

/// Proper non-zero squarefree ideal on `nv` variables.
fn squarefree_ideal(nv: usize, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(1u64..(1 << nv), 1..=max_gens).prop_map(move |masks| {
        let gens = masks
            .into_iter()
            .map(|mask| {
                let support: Vec<usize> = (0..nv).filter(|i| mask >> i & 1 == 1).collect();
                Monomial::squarefree(nv, &support)
            })
            .collect();
        MonomialIdeal::minimalize(nv, gens).unwrap()
    })
}

fn complex(nv: usize) -> impl Strategy<Value = SimplicialComplex> {
    prop::collection::vec(1u64..(1 << nv), 0..6).prop_map(move |masks| {
        let mut faces: Vec<Vec<usize>> = (0..nv).map(|v| vec![v]).collect();
        for mask in masks {
            faces.push((0..nv).filter(|i| mask >> i & 1 == 1).collect());
        }
        SimplicialComplex::new(nv, faces).unwrap()
    })
}

fn cover_rows(nv: usize) -> impl Strategy<Value = Vec<Vec<usize>>> {
    prop::collection::vec(1u64..(1 << nv), 1..8).prop_map(move |masks| {
        masks
            .into_iter()
            .map(|mask| (0..nv).filter(|i| mask >> i & 1 == 1).collect())
            .collect()
    })
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn intersection_laws(a in ideal(NV, 3, 4), b in ideal(NV, 3, 4), c in ideal(NV, 3, 4)) {
        prop_assert_eq!(a.intersect(&b).unwrap(), b.intersect(&a).unwrap());
        prop_assert_eq!(
            a.intersect(&b).unwrap().intersect(&c).unwrap(),
            a.intersect(&b.intersect(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(a.intersect(&a).unwrap(), a.clone());
        let ab = a.intersect(&b).unwrap();
        prop_assert!(ab.is_subset_of(&a).unwrap() && ab.is_subset_of(&b).unwrap());
    }

    #[test]
    fn power_is_multiplicative(a in ideal(NV, 2, 3), r in 0u32..3, s in 0u32..3) {
        prop_assert_eq!(
            a.power(r + s).unwrap(),
            a.power(r).unwrap().product(&a.power(s).unwrap()).unwrap()
        );
    }

    #[test]
    fn power_membership_matches_expansion(
        a in ideal(NV, 2, 4),
        m in monomial(NV, 3),
        r in 0u32..4,
    ) {
        prop_assume!(m.degree() <= 8);
        let expanded = a.power(r).unwrap();
        prop_assert_eq!(a.monomial_in_power(&m, r).unwrap(), expanded.contains_monomial(&m).unwrap());
    }

    #[test]
    fn generators_form_sorted_antichain(a in ideal(NV, 3, 6)) {
        let g = a.generators();
        prop_assert!(g.windows(2).all(|w| w[0] < w[1]));
        for (i, x) in g.iter().enumerate() {
            for (j, y) in g.iter().enumerate() {
                prop_assert!(i == j || !x.divides(y).unwrap());
            }
        }
        prop_assert_eq!(MonomialIdeal::parse(&a.to_string(), NV).unwrap(), a.clone());
    }

    #[test]
    fn decomposition_reassembles(i in squarefree_ideal(6, 6)) {
        prop_assume!(!i.is_unit());
        let primes = primary_decomposition(&i).unwrap();
        prop_assert!(!primes.is_empty());
        let mut acc = MonomialIdeal::unit(6);
        for p in &primes {
            prop_assert!(i.generators().iter().all(|g| p.hits(g)));
            acc = acc.intersect(&p.to_ideal(6).unwrap()).unwrap();
        }
        prop_assert_eq!(acc, i.clone());
        for p in &primes {
            for q in &primes {
                let ps: BTreeSet<_> = p.support().iter().collect();
                let qs: BTreeSet<_> = q.support().iter().collect();
                prop_assert!(p == q || !ps.is_subset(&qs));
            }
        }
        prop_assert!(primes.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn minimal_nonfaces_are_minimal(c in complex(6)) {
        let nonfaces = c.minimal_nonfaces().unwrap();
        for s in &nonfaces {
            prop_assert!(!c.is_face(s).unwrap());
            for &drop in s.members() {
                let sub = VertexSubset::new(s.members().iter().copied().filter(|&v| v != drop));
                prop_assert!(c.is_face(&sub).unwrap());
            }
        }
        // every non-face contains a minimal one
        for mask in 1u64..(1 << 6) {
            let s = VertexSubset::new((0..6).filter(|i| mask >> i & 1 == 1));
            if !c.is_face(&s).unwrap() {
                prop_assert!(nonfaces.iter().any(|t| t.members().iter().all(|v| s.members().contains(v))));
            }
        }
    }

    #[test]
    fn primes_are_facet_complements(c in complex(6)) {
        let i = MonomialIdeal::stanley_reisner(&c).unwrap();
        prop_assume!(!i.is_zero());
        let primes: BTreeSet<VariablePrime> = primary_decomposition(&i).unwrap().into_iter().collect();
        let expected: BTreeSet<VariablePrime> = c
            .facets()
            .iter()
            .map(|f| VariablePrime::new((0..6).filter(|v| !f.members().contains(v))).unwrap())
            .collect();
        prop_assert_eq!(primes, expected);
    }

    #[test]
    fn symbolic_power_invariants(i in squarefree_ideal(5, 5), m in 1u32..4) {
        prop_assume!(!i.is_unit());
        let cert = alpha_symbolic(&i, m).unwrap();
        let primes = primary_decomposition(&i).unwrap();
        prop_assert!(cert.value >= m as u64);
        prop_assert_eq!(cert.witness.degree(), cert.value);
        prop_assert!(primes.iter().all(|p| p.contains_in_power(&cert.witness, m as u64)));
        let bound = cert.dual_bound.clone() * BigInt::from(m);
        prop_assert!(Rational::from_integer(BigInt::from(cert.value)) >= bound.ceil());
        let expanded = symbolic_power(&i, m).unwrap();
        prop_assert_eq!(expanded.min_degree(), Some(cert.value));
        prop_assert!(expanded.contains_monomial(&cert.witness).unwrap());
        prop_assert!(i.power(m).unwrap().is_subset_of(&expanded).unwrap());
    }

    #[test]
    fn cover_lp_strong_duality(rows in cover_rows(5)) {
        let lp = CoverLp::new(5, rows).unwrap();
        let sol = solve_lp(&lp).unwrap();
        lp.verify(&sol).unwrap();
        let one = integer(1);
        for row in &lp.rows {
            let covered: Rational = row.iter().map(|&v| sol.point[v].clone()).sum();
            prop_assert!(covered >= one);
        }
        prop_assert!(sol.point.iter().all(|x| *x >= Rational::zero()));
        prop_assert!(sol.duals.iter().all(|y| *y >= Rational::zero()));
        for v in 0..5 {
            let load: Rational = lp
                .rows
                .iter()
                .zip(&sol.duals)
                .filter(|(row, _)| row.contains(&v))
                .map(|(_, y)| y.clone())
                .sum();
            prop_assert!(load <= one);
        }
        let dual_value: Rational = sol.duals.iter().cloned().sum();
        prop_assert_eq!(&dual_value, &sol.optimum);
        prop_assert_eq!(solve_lp(&lp).unwrap(), sol);
    }

    #[test]
    fn general_lp_strong_duality(
        a in prop::collection::vec(prop::collection::vec(0i64..4, 3), 1..5),
        b in prop::collection::vec(-2i64..5, 5),
        c in prop::collection::vec(1i64..6, 3),
    ) {
        let rows: Vec<Vec<Rational>> = a.iter().map(|r| r.iter().map(|&x| integer(x)).collect()).collect();
        let rhs: Vec<Rational> = b[..rows.len()].iter().map(|&x| integer(x)).collect();
        // a row of zeros with positive rhs is infeasible; skip it
        prop_assume!(rows.iter().zip(&rhs).all(|(r, b)| r.iter().any(|x| !x.is_zero()) || *b <= Rational::zero()));
        let objective: Vec<Rational> = c.iter().map(|&x| integer(x)).collect();
        let program = LinearProgram {
            objective: objective.clone(),
            constraints: rows
                .iter()
                .zip(&rhs)
                .map(|(r, b)| Constraint { coefficients: r.clone(), sense: Sense::Ge, rhs: b.clone() })
                .collect(),
        };
        let LpOutcome::Optimal(sol) = program.solve() else {
            return Err(TestCaseError::fail("expected an optimum"));
        };
        prop_assert_eq!(dot(&objective, &sol.point), sol.optimum.clone());
        for (r, b) in rows.iter().zip(&rhs) {
            prop_assert!(dot(r, &sol.point) >= *b);
        }
        prop_assert!(sol.duals.iter().all(|y| *y >= Rational::zero()));
        for j in 0..3 {
            let col: Vec<Rational> = rows.iter().map(|r| r[j].clone()).collect();
            prop_assert!(dot(&col, &sol.duals) <= objective[j]);
        }
        prop_assert_eq!(dot(&rhs, &sol.duals), sol.optimum.clone());
        prop_assert_eq!(program.solve(), LpOutcome::Optimal(sol));
    }
}
