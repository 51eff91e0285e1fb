//! Invariants of `Q_{R,n}`, `Φ` and the splitting solvers.

use num_bigint::BigInt;
use proptest::prelude::*;
use qfp_core::arith::linsys::{check_certificate, Solution};
use qfp_core::arith::{CoeffRing, Domain, Monomial, SparsePoly};
use qfp_core::ring_model::{FiniteAlgebra, GradedQuotient, DEFAULT_DIM_CAP};
use qfp_core::solver::{
    fedder_check, finite_system, split_finite, split_graded_system, verify_finite_splitting, witt_at, FiniteSplit,
    GradedSplit, GradedSystem, QKind, QModel, SolverError, DEFAULT_ENUM_CAP,
};

fn univariate(p: u64, lower: &[u64]) -> FiniteAlgebra {
    let d = lower.len() as u16;
    let mut terms = vec![(Monomial::from_exps(vec![d]), BigInt::from(1))];
    terms.extend(
        lower
            .iter()
            .enumerate()
            .map(|(e, &c)| (Monomial::from_exps(vec![e as u16]), BigInt::from(c))),
    );
    let f = SparsePoly::from_terms(Domain::Gfp(p), 1, terms);
    FiniteAlgebra::new(p, vec!["x".into()], vec![f], DEFAULT_DIM_CAP).unwrap()
}

fn arb_algebra() -> impl Strategy<Value = FiniteAlgebra> {
    prop_oneof![
        prop::collection::vec(0u64..2, 1..=4).prop_map(|c| univariate(2, &c)),
        prop::collection::vec(0u64..3, 1..=2).prop_map(|c| univariate(3, &c)),
    ]
}

fn arb_kind() -> impl Strategy<Value = QKind> {
    prop_oneof![Just(QKind::Wbar), Just(QKind::Pushout)]
}

fn add_coords(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| (x + y) % p).collect()
}

/// A ternary cubic over GF(2) from the coefficients of its ten monomials.
fn cubic(coeffs: &[bool]) -> SparsePoly {
    let mut terms: Vec<(Monomial, BigInt)> = Monomial::all_of_degree(3, 3)
        .into_iter()
        .zip(coeffs)
        .filter(|(_, &c)| c)
        .map(|(m, _)| (m, BigInt::from(1)))
        .collect();
    if terms.is_empty() {
        terms.push((Monomial::from_exps(vec![3, 0, 0]), BigInt::from(1)));
    }
    SparsePoly::from_terms(Domain::Gfp(2), 3, terms)
}

fn xyz() -> Vec<String> {
    vec!["x".into(), "y".into(), "z".into()]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn action_and_phi_are_compatible(
        alg in arb_algebra(),
        n in 1usize..=2,
        kind in arb_kind(),
        seeds in prop::array::uniform4(any::<u64>()),
    ) {
        let q = QModel::build(&alg, n, kind, DEFAULT_ENUM_CAP).unwrap();
        let w = q.witt();
        let p = alg.p();
        let size = alg.size();
        let wsize = size.pow(n as u32);
        let (r, s) = (alg.elem_at(seeds[0] % size), alg.elem_at(seeds[1] % size));
        let (a, b) = (witt_at(&alg, n, seeds[2] % wsize), witt_at(&alg, n, seeds[3] % wsize));

        // The class of a sum is the sum of classes.
        let sum = w.add(&a, &b).unwrap();
        prop_assert_eq!(q.coords(&sum).unwrap(), add_coords(p, &q.coords(&a).unwrap(), &q.coords(&b).unwrap()));
        // r(a + b) = ra + rb and (rs)a = r(sa) on classes.
        let lhs = q.coords(&q.act(&r, &sum).unwrap()).unwrap();
        let rhs = add_coords(p, &q.coords(&q.act(&r, &a).unwrap()).unwrap(), &q.coords(&q.act(&r, &b).unwrap()).unwrap());
        prop_assert_eq!(lhs, rhs);
        let rs_a = q.coords(&q.act(&alg.mul(&r, &s), &a).unwrap()).unwrap();
        let r_sa = q.coords(&q.act(&r, &q.act(&s, &a).unwrap()).unwrap()).unwrap();
        prop_assert_eq!(rs_a, r_sa);
        // Φ is additive.
        let phi_sum = q.phi(&alg.add(&r, &s)).unwrap();
        prop_assert_eq!(phi_sum, add_coords(p, &q.phi(&r).unwrap(), &q.phi(&s).unwrap()));
        // Φ(r) = r·Φ(1).
        let one = w.one();
        prop_assert_eq!(q.phi(&r).unwrap(), q.coords(&q.act(&r, &one).unwrap()).unwrap());
    }

    #[test]
    fn finite_search_is_certified(alg in arb_algebra(), n in 1usize..=2, seed in any::<u64>()) {
        let q = QModel::build(&alg, n, QKind::Wbar, DEFAULT_ENUM_CAP).unwrap();
        match split_finite(&q).unwrap() {
            FiniteSplit::Split { sigma } => {
                prop_assert!(verify_finite_splitting(&q, &sigma, seed, 8).unwrap().ok());
            }
            FiniteSplit::NotSplit { certificate, .. } => {
                let sys = finite_system(&q).unwrap();
                prop_assert!(check_certificate(sys.p(), sys.ncols(), sys.equations(), &certificate));
                prop_assert!(matches!(sys.solve(), Solution::Infeasible(_)));
            }
        }
    }

    #[test]
    fn finite_splitting_needs_reducedness(alg in arb_algebra(), n in 1usize..=2) {
        let q = QModel::build(&alg, n, QKind::Wbar, DEFAULT_ENUM_CAP).unwrap();
        if split_finite(&q).unwrap().is_split() {
            prop_assert!(alg.is_reduced().is_reduced());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn graded_level_one_agrees_with_fedder(coeffs in prop::collection::vec(any::<bool>(), 10)) {
        let f = cubic(&coeffs);
        let ring = GradedQuotient::new(2, xyz(), vec![f.clone()]).unwrap();
        let system = match GradedSystem::assemble(&ring, 1, 3) {
            Ok(s) => s,
            Err(SolverError::NotReduced(_) | SolverError::Unsupported(_)) => return Ok(()),
            Err(e) => panic!("{e}"),
        };
        let fedder = fedder_check(&f, &xyz()).unwrap().is_split();
        match system.solve() {
            GradedSplit::FeasibleUpTo { .. } => prop_assert!(fedder),
            GradedSplit::NotSplit { certificate, .. } => {
                prop_assert!(!fedder);
                let sys = system.system();
                prop_assert!(check_certificate(sys.p(), sys.ncols(), sys.equations(), &certificate));
            }
        }
    }

    #[test]
    fn graded_levels_are_monotone(coeffs in prop::collection::vec(any::<bool>(), 10)) {
        let f = cubic(&coeffs);
        let ring = GradedQuotient::new(2, xyz(), vec![f]).unwrap();
        let level = |n| match split_graded_system(&ring, n, 3) {
            Ok(s) => Some(s.is_feasible()),
            Err(SolverError::NotReduced(_) | SolverError::Unsupported(_)) => None,
            Err(e) => panic!("{e}"),
        };
        if let (Some(true), Some(two)) = (level(1), level(2)) {
            prop_assert!(two);
        }
    }
}
