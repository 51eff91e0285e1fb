//! Witt-vector identities on random inputs.

use num_bigint::BigInt;
use proptest::prelude::*;
use qfp_core::arith::ring::{CoeffRing, Integers};
use qfp_core::ring_model::{Elem, FiniteAlgebra};
use qfp_core::witt::Witt;

fn ints(n: usize) -> impl Strategy<Value = Vec<BigInt>> {
    prop::collection::vec((-50i64..=50).prop_map(BigInt::from), n)
}

fn gf(q: u64) -> FiniteAlgebra {
    FiniteAlgebra::galois_field(q).unwrap()
}

fn vector(alg: &FiniteAlgebra, n: usize) -> impl Strategy<Value = Vec<Elem>> {
    let size = alg.size();
    let elems: Vec<Elem> = (0..size).map(|i| alg.elem_at(i)).collect();
    prop::collection::vec(prop::sample::select(elems), n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn ghost_map_is_a_ring_map(p in prop::sample::select(vec![2u64, 3, 5]), a in ints(3), b in ints(3)) {
        let z = Integers;
        let w = Witt::new(&z, p, 3).unwrap();
        let (ga, gb) = (w.ghost_map(&a).unwrap(), w.ghost_map(&b).unwrap());
        let gs = w.ghost_map(&w.add(&a, &b).unwrap()).unwrap();
        let gp = w.ghost_map(&w.mul(&a, &b).unwrap()).unwrap();
        let gn = w.ghost_map(&w.neg(&a).unwrap()).unwrap();
        for m in 0..3 {
            prop_assert_eq!(&gs[m], &(&ga[m] + &gb[m]));
            prop_assert_eq!(&gp[m], &(&ga[m] * &gb[m]));
            prop_assert_eq!(&gn[m], &(-&ga[m]));
        }
    }

    #[test]
    fn operators_on_w3_gf4((a, b) in {
        let f = gf(4);
        (vector(&f, 3), vector(&f, 3))
    }) {
        let f = gf(4);
        let w = Witt::new(&f, 2, 3).unwrap();
        let short = Witt::new(&f, 2, 2).unwrap();
        let (s, m) = (w.add(&a, &b).unwrap(), w.mul(&a, &b).unwrap());
        // F and restriction are ring maps, V is additive.
        prop_assert_eq!(w.frobenius(&s).unwrap(), w.add(&w.frobenius(&a).unwrap(), &w.frobenius(&b).unwrap()).unwrap());
        prop_assert_eq!(w.frobenius(&m).unwrap(), w.mul(&w.frobenius(&a).unwrap(), &w.frobenius(&b).unwrap()).unwrap());
        let (ra, rb) = (w.restriction(&a).unwrap(), w.restriction(&b).unwrap());
        prop_assert_eq!(w.restriction(&m).unwrap(), short.mul(&ra, &rb).unwrap());
        prop_assert_eq!(w.verschiebung(&s).unwrap(), w.add(&w.verschiebung(&a).unwrap(), &w.verschiebung(&b).unwrap()).unwrap());
        // FV = VF = p, and V(F(a) b) = a V(b).
        let pa = w.scale(2, &a).unwrap();
        prop_assert_eq!(w.frobenius(&w.verschiebung(&a).unwrap()).unwrap(), pa.clone());
        prop_assert_eq!(w.verschiebung(&w.frobenius(&a).unwrap()).unwrap(), pa);
        prop_assert_eq!(
            w.verschiebung(&w.mul(&w.frobenius(&a).unwrap(), &b).unwrap()).unwrap(),
            w.mul(&a, &w.verschiebung(&b).unwrap()).unwrap()
        );
        prop_assert_eq!(w.teichmuller_decomposition_sum(&a).unwrap(), a.clone());
        // Teichmüller lifts are multiplicative.
        let (x, y) = (&a[0], &b[0]);
        prop_assert_eq!(w.teichmuller(&f.mul(x, y)), w.mul(&w.teichmuller(x), &w.teichmuller(y)).unwrap());
    }

    #[test]
    fn ring_axioms_in_w2_gf9((a, b, c) in {
        let f = gf(9);
        (vector(&f, 2), vector(&f, 2), vector(&f, 2))
    }) {
        let f = gf(9);
        let w = Witt::new(&f, 3, 2).unwrap();
        prop_assert_eq!(w.add(&w.add(&a, &b).unwrap(), &c).unwrap(), w.add(&a, &w.add(&b, &c).unwrap()).unwrap());
        prop_assert_eq!(w.mul(&w.mul(&a, &b).unwrap(), &c).unwrap(), w.mul(&a, &w.mul(&b, &c).unwrap()).unwrap());
        prop_assert_eq!(
            w.mul(&a, &w.add(&b, &c).unwrap()).unwrap(),
            w.add(&w.mul(&a, &b).unwrap(), &w.mul(&a, &c).unwrap()).unwrap()
        );
        prop_assert_eq!(w.sub(&w.add(&a, &b).unwrap(), &b).unwrap(), a.clone());
        // 9 = 0 in W_2 over a field of characteristic 3.
        prop_assert_eq!(w.scale(9, &a).unwrap(), w.zero());
    }
}

#[test]
fn integer_images_have_the_right_order() {
    for (p, n) in [(2u64, 3usize), (3, 2), (5, 2)] {
        let f = gf(p);
        let w = Witt::new(&f, p, n).unwrap();
        let order = p.pow(n as u32);
        assert_eq!(w.integer(order as i64), w.zero());
        assert_ne!(w.integer((order / p) as i64), w.zero());
        assert!(f.is_zero(&w.integer(p as i64)[0]));
    }
}
