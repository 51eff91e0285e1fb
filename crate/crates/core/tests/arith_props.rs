//! Algebraic laws of the polynomial layer.

use num_bigint::BigInt;
use proptest::prelude::*;
use qfp_core::arith::squarefree::{gcd, squarefree_test};
use qfp_core::arith::{Domain, IdealBasis, Monomial, MonomialOrder, SparsePoly};

fn arb_poly(p: u64, nvars: usize, max_terms: usize, max_exp: u16) -> impl Strategy<Value = SparsePoly> {
    prop::collection::vec(
        (1..p as i64, prop::collection::vec(0..=max_exp, nvars)),
        0..=max_terms,
    )
    .prop_map(move |terms| {
        SparsePoly::from_terms(
            Domain::Gfp(p),
            nvars,
            terms.into_iter().map(|(c, e)| (Monomial::from_exps(e), BigInt::from(c))),
        )
    })
}

fn nonconstant(p: u64, nvars: usize) -> impl Strategy<Value = SparsePoly> {
    arb_poly(p, nvars, 3, 2).prop_filter("nonconstant", |f| !f.is_constant())
}

fn divides(d: &SparsePoly, f: &SparsePoly) -> bool {
    let ideal = IdealBasis::groebner(vec![d.clone()], MonomialOrder::grevlex(f.nvars())).unwrap();
    ideal.normal_form(f).unwrap().is_zero()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws_over_gf3(a in arb_poly(3, 2, 4, 3), b in arb_poly(3, 2, 4, 3), c in arb_poly(3, 2, 4, 3)) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&(&a - &b) + &b == a));
        prop_assert!((&a + &(-&a)).is_zero());
    }

    #[test]
    fn frobenius_is_additive(a in arb_poly(2, 3, 4, 2), b in arb_poly(2, 3, 4, 2), c in arb_poly(3, 2, 3, 2), d in arb_poly(3, 2, 3, 2)) {
        prop_assert_eq!((&a + &b).checked_pow(2).unwrap(), &a.checked_pow(2).unwrap() + &b.checked_pow(2).unwrap());
        prop_assert_eq!((&c + &d).checked_pow(3).unwrap(), &c.checked_pow(3).unwrap() + &d.checked_pow(3).unwrap());
    }

    #[test]
    fn squares_are_detected(g in nonconstant(2, 3), h in nonconstant(2, 3)) {
        let f = &(&g * &g) * &h;
        let r = squarefree_test(&f).unwrap();
        prop_assert!(!r.squarefree);
        let w = r.witness.expect("repeated factor");
        prop_assert!(!w.is_constant());
        prop_assert!(divides(&(&w * &w), &f));
    }

    #[test]
    fn gcd_divides_both(a in nonconstant(3, 2), b in nonconstant(3, 2), c in nonconstant(3, 2)) {
        let (x, y) = (&a * &b, &a * &c);
        let g = gcd(&x, &y).unwrap();
        prop_assert!(divides(&g, &x) && divides(&g, &y));
        prop_assert!(divides(&g, &a) || divides(&a, &g));
    }

    #[test]
    fn normal_forms(gens in prop::collection::vec(nonconstant(2, 3), 1..3), f in arb_poly(2, 3, 5, 3), h in arb_poly(2, 3, 3, 2)) {
        let ideal = IdealBasis::groebner(gens.clone(), MonomialOrder::grevlex(3)).unwrap();
        prop_assert!(ideal.is_groebner());
        let nf = ideal.normal_form(&f).unwrap();
        prop_assert_eq!(ideal.normal_form(&nf).unwrap(), nf.clone());
        prop_assert!(ideal.contains(&(&f - &nf)).unwrap());
        for g in &gens {
            prop_assert!(ideal.normal_form(&(g * &h)).unwrap().is_zero());
        }
    }
}
