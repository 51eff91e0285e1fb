//! Finite and graded ring models against brute force.

use num_bigint::BigInt;
use proptest::prelude::*;
use qfp_core::arith::ring::CoeffRing;
use qfp_core::arith::{Domain, Monomial, SparsePoly};
use qfp_core::ring_model::{FiniteAlgebra, GradedQuotient, DEFAULT_DIM_CAP};

/// `GF(p)[x]/(x^d + lower terms)` from the lower coefficients.
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
        prop::collection::vec(0u64..2, 1..=5).prop_map(|c| univariate(2, &c)),
        prop::collection::vec(0u64..3, 1..=3).prop_map(|c| univariate(3, &c)),
    ]
}

fn binom2(k: i64) -> i64 {
    if k < 0 {
        0
    } else {
        (k + 2) * (k + 1) / 2
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn frobenius_is_a_ring_endomorphism(alg in arb_algebra(), i in 0u64..1000, j in 0u64..1000) {
        let (a, b) = (alg.elem_at(i % alg.size()), alg.elem_at(j % alg.size()));
        prop_assert_eq!(alg.frobenius(&alg.add(&a, &b)), alg.add(&alg.frobenius(&a), &alg.frobenius(&b)));
        prop_assert_eq!(alg.frobenius(&alg.mul(&a, &b)), alg.mul(&alg.frobenius(&a), &alg.frobenius(&b)));
        prop_assert_eq!(alg.elem_at(alg.index_of(&a)), a);
    }

    #[test]
    fn reducedness_matches_brute_force(alg in arb_algebra()) {
        let brute = (1..alg.size()).any(|i| {
            let t = alg.elem_at(i);
            alg.is_zero(&alg.frobenius(&t))
        });
        prop_assert_eq!(alg.is_reduced().is_reduced(), !brute);
    }

    #[test]
    fn hypersurface_hilbert_series(
        d in 1u32..=4,
        coeffs in prop::collection::vec(0u64..2, 15),
        e in 0u32..=7,
    ) {
        let mons = Monomial::all_of_degree(3, d);
        let mut terms: Vec<(Monomial, BigInt)> = mons
            .iter()
            .zip(&coeffs)
            .filter(|(_, &c)| c != 0)
            .map(|(m, _)| (m.clone(), BigInt::from(1)))
            .collect();
        if terms.is_empty() {
            terms.push((mons[0].clone(), BigInt::from(1)));
        }
        let f = SparsePoly::from_terms(Domain::Gfp(2), 3, terms);
        let r = GradedQuotient::new(2, vec!["x".into(), "y".into(), "z".into()], vec![f]).unwrap();
        let expected = binom2(e as i64) - binom2(e as i64 - d as i64);
        prop_assert_eq!(r.graded_piece_basis(e).len() as i64, expected);
    }
}
