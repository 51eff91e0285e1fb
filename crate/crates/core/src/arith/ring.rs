//! Commutative coefficient rings the Witt engine can evaluate over.

use std::collections::HashMap;
use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::modp;
use super::poly::{Domain, SparsePoly};

pub trait CoeffRing {
    type Elem: Clone + Eq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn embed_int(&self, c: &BigInt) -> Self::Elem;
    /// 0 for characteristic zero.
    fn characteristic(&self) -> u64;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }
}

/// Evaluates an integer polynomial at ring elements. Powers of each argument
/// are cached per call.
pub fn eval_poly<R: CoeffRing>(ring: &R, f: &SparsePoly, args: &[R::Elem]) -> R::Elem {
    assert_eq!(f.nvars(), args.len(), "argument count");
    let mut cache: HashMap<(usize, u16), R::Elem> = HashMap::new();
    let mut acc = ring.zero();
    for (m, c) in f.terms() {
        let mut t = ring.embed_int(c);
        if ring.is_zero(&t) {
            continue;
        }
        for (i, &e) in m.exps().iter().enumerate() {
            if e == 0 {
                continue;
            }
            let pw = cache
                .entry((i, e))
                .or_insert_with(|| ring.pow(&args[i], e as u64));
            t = ring.mul(&t, pw);
            if ring.is_zero(&t) {
                break;
            }
        }
        acc = ring.add(&acc, &t);
    }
    acc
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Integers;

impl CoeffRing for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn embed_int(&self, c: &BigInt) -> BigInt {
        c.clone()
    }
    fn characteristic(&self) -> u64 {
        0
    }
}

/// `Z/m` with elements in `0..m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZMod(pub u64);

impl CoeffRing for ZMod {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.0 as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.0 - a % self.0) % self.0
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        modp::mul(*a, *b, self.0)
    }
    fn embed_int(&self, c: &BigInt) -> u64 {
        c.mod_floor(&BigInt::from(self.0)).to_u64().expect("reduced")
    }
    fn characteristic(&self) -> u64 {
        self.0
    }
}

/// Polynomial ring over the integers or GF(p), elements as `SparsePoly`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PolyRing {
    pub domain: Domain,
    pub nvars: usize,
}

impl PolyRing {
    pub fn new(domain: Domain, nvars: usize) -> Self {
        PolyRing { domain, nvars }
    }

    pub fn var(&self, i: usize) -> SparsePoly {
        SparsePoly::var(self.domain, self.nvars, i)
    }
}

impl CoeffRing for PolyRing {
    type Elem = SparsePoly;

    fn zero(&self) -> SparsePoly {
        SparsePoly::zero(self.domain, self.nvars)
    }
    fn one(&self) -> SparsePoly {
        SparsePoly::one(self.domain, self.nvars)
    }
    fn add(&self, a: &SparsePoly, b: &SparsePoly) -> SparsePoly {
        a + b
    }
    fn neg(&self, a: &SparsePoly) -> SparsePoly {
        -a
    }
    fn mul(&self, a: &SparsePoly, b: &SparsePoly) -> SparsePoly {
        a * b
    }
    fn embed_int(&self, c: &BigInt) -> SparsePoly {
        SparsePoly::constant(self.domain, self.nvars, c.clone())
    }
    fn characteristic(&self) -> u64 {
        self.domain.characteristic()
    }
    fn is_zero(&self, a: &SparsePoly) -> bool {
        a.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eval_matches_direct() {
        let r = PolyRing::new(Domain::Integers, 2);
        let (x, y) = (r.var(0), r.var(1));
        let f = &(&x * &y) + &x.checked_pow(3).unwrap();
        let v = eval_poly(&Integers, &f, &[BigInt::from(2), BigInt::from(5)]);
        assert_eq!(v, BigInt::from(18));
        let v = eval_poly(&ZMod(4), &f, &[3, 1]);
        assert_eq!(v, (3 + 27) % 4);
    }

    #[test]
    fn zmod_negation() {
        let z = ZMod(8);
        assert_eq!(z.neg(&3), 5);
        assert_eq!(z.neg(&0), 0);
        assert_eq!(z.embed_int(&BigInt::from(-1)), 7);
    }
}
