//! Truncated p-typical Witt vectors over a coefficient ring.

mod tables;
mod wbar;

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use thiserror::Error;

use crate::arith::ring::CoeffRing;
use crate::arith::PolyError;
use crate::ring_model::{Elem, FiniteAlgebra};

pub use tables::{gen_witt_polys, ghost_poly, WittTables, WittCaps};
pub use wbar::{PthPowerSplit, WbarCoords};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WittError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("Witt vectors of length zero are not supported")]
    ZeroLength,
    #[error("W_{n} at p = {p} exceeds the configured caps")]
    CapExceeded { p: u64, n: usize },
    #[error("expected length {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("coefficient ring has characteristic {ring}, not 0 or {p}")]
    Characteristic { ring: u64, p: u64 },
    #[error("operation needs a ring of characteristic p")]
    NeedsCharP,
    #[error("ghost components need a torsion-free coefficient ring")]
    NeedsTorsionFree,
    #[error("restriction needs length at least 2")]
    RestrictionOfLengthOne,
    #[error("ring has no designated maximal ideal")]
    NoMaximalIdeal,
}

/// A Witt vector is its coordinate list `(a_0, ..., a_{n-1})`.
pub type WittVector<E> = Vec<E>;

/// `W_n(R)` for a fixed coefficient ring.
pub struct Witt<'a, R: CoeffRing> {
    ring: &'a R,
    p: u64,
    n: usize,
    tables: Arc<WittTables>,
    char_p: bool,
}

impl<'a, R: CoeffRing> Clone for Witt<'a, R> {
    fn clone(&self) -> Self {
        Witt {
            ring: self.ring,
            p: self.p,
            n: self.n,
            tables: self.tables.clone(),
            char_p: self.char_p,
        }
    }
}

/// Evaluates several integer polynomials at the same arguments, sharing
/// the power cache.
fn eval_all<R: CoeffRing>(ring: &R, polys: &[crate::arith::SparsePoly], args: &[R::Elem]) -> Vec<R::Elem> {
    let mut cache: HashMap<(usize, u16), R::Elem> = HashMap::new();
    polys
        .iter()
        .map(|f| {
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
                    if ring.is_zero(&args[i]) {
                        t = ring.zero();
                        break;
                    }
                    let pw = cache
                        .entry((i, e))
                        .or_insert_with(|| ring.pow(&args[i], e as u64));
                    t = ring.mul(&t, pw);
                    if ring.is_zero(&t) {
                        break;
                    }
                }
                if !ring.is_zero(&t) {
                    acc = ring.add(&acc, &t);
                }
            }
            acc
        })
        .collect()
}

impl<'a, R: CoeffRing> Witt<'a, R> {
    /// `W_n(R)` at prime `p`; `R` must have characteristic 0 or `p`.
    pub fn new(ring: &'a R, p: u64, n: usize) -> Result<Self, WittError> {
        Self::with_caps(ring, p, n, WittCaps::default())
    }

    pub fn with_caps(ring: &'a R, p: u64, n: usize, caps: WittCaps) -> Result<Self, WittError> {
        let c = ring.characteristic();
        if c != 0 && c != p {
            return Err(WittError::Characteristic { ring: c, p });
        }
        let tables = gen_witt_polys(p, n, caps)?;
        Ok(Witt {
            ring,
            p,
            n,
            tables,
            char_p: c == p,
        })
    }

    pub fn ring(&self) -> &'a R {
        self.ring
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn tables(&self) -> &WittTables {
        &self.tables
    }

    fn check(&self, a: &[R::Elem]) -> Result<(), WittError> {
        if a.len() != self.n {
            return Err(WittError::LengthMismatch {
                expected: self.n,
                got: a.len(),
            });
        }
        Ok(())
    }

    fn pair(&self, a: &[R::Elem], b: &[R::Elem]) -> Result<Vec<R::Elem>, WittError> {
        self.check(a)?;
        self.check(b)?;
        Ok(a.iter().chain(b).cloned().collect())
    }

    pub fn zero(&self) -> WittVector<R::Elem> {
        vec![self.ring.zero(); self.n]
    }

    pub fn one(&self) -> WittVector<R::Elem> {
        self.teichmuller(&self.ring.one())
    }

    /// `[r] = (r, 0, ..., 0)`.
    pub fn teichmuller(&self, r: &R::Elem) -> WittVector<R::Elem> {
        let mut v = self.zero();
        v[0] = r.clone();
        v
    }

    pub fn add(&self, a: &[R::Elem], b: &[R::Elem]) -> Result<WittVector<R::Elem>, WittError> {
        let args = self.pair(a, b)?;
        let polys = if self.char_p { self.tables.sum_mod_p() } else { self.tables.sum() };
        Ok(eval_all(self.ring, polys, &args))
    }

    pub fn mul(&self, a: &[R::Elem], b: &[R::Elem]) -> Result<WittVector<R::Elem>, WittError> {
        let args = self.pair(a, b)?;
        let polys = if self.char_p { self.tables.prod_mod_p() } else { self.tables.prod() };
        Ok(eval_all(self.ring, polys, &args))
    }

    pub fn neg(&self, a: &[R::Elem]) -> Result<WittVector<R::Elem>, WittError> {
        self.check(a)?;
        let polys = if self.char_p { self.tables.neg_mod_p() } else { self.tables.neg() };
        Ok(eval_all(self.ring, polys, a))
    }

    pub fn sub(&self, a: &[R::Elem], b: &[R::Elem]) -> Result<WittVector<R::Elem>, WittError> {
        self.add(a, &self.neg(b)?)
    }

    /// `k · 1` by double-and-add.
    pub fn integer(&self, k: i64) -> WittVector<R::Elem> {
        let mut acc = self.zero();
        let mut base = self.one();
        let mut e = k.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.add(&acc, &base).expect("lengths");
            }
            e >>= 1;
            if e > 0 {
                base = self.add(&base, &base).expect("lengths");
            }
        }
        if k < 0 {
            acc = self.neg(&acc).expect("lengths");
        }
        acc
    }

    /// `k · a` for a nonnegative integer `k`.
    pub fn scale(&self, k: u64, a: &[R::Elem]) -> Result<WittVector<R::Elem>, WittError> {
        self.check(a)?;
        let mut acc = self.zero();
        let mut base = a.to_vec();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.add(&acc, &base)?;
            }
            e >>= 1;
            if e > 0 {
                base = self.add(&base, &base)?;
            }
        }
        Ok(acc)
    }

    /// Witt Frobenius: coordinatewise `p`-th powers (characteristic p only).
    pub fn frobenius(&self, a: &[R::Elem]) -> Result<WittVector<R::Elem>, WittError> {
        self.check(a)?;
        if !self.char_p {
            return Err(WittError::NeedsCharP);
        }
        Ok(a.iter().map(|x| self.ring.pow(x, self.p)).collect())
    }

    /// Truncated Verschiebung `W_n → W_n`: shift right, drop the last coordinate.
    pub fn verschiebung(&self, a: &[R::Elem]) -> Result<WittVector<R::Elem>, WittError> {
        self.check(a)?;
        let mut v = vec![self.ring.zero()];
        v.extend(a[..self.n - 1].iter().cloned());
        Ok(v)
    }

    /// Verschiebung `W_n → W_{n+1}`.
    pub fn verschiebung_extend(&self, a: &[R::Elem]) -> Result<WittVector<R::Elem>, WittError> {
        self.check(a)?;
        let mut v = vec![self.ring.zero()];
        v.extend(a.iter().cloned());
        Ok(v)
    }

    /// `V^k` truncated.
    pub fn verschiebung_pow(&self, a: &[R::Elem], k: usize) -> Result<WittVector<R::Elem>, WittError> {
        (0..k).try_fold(a.to_vec(), |acc, _| self.verschiebung(&acc))
    }

    /// Restriction `W_n → W_{n-1}`: drop the last coordinate.
    pub fn restriction(&self, a: &[R::Elem]) -> Result<WittVector<R::Elem>, WittError> {
        self.check(a)?;
        if self.n < 2 {
            return Err(WittError::RestrictionOfLengthOne);
        }
        Ok(a[..self.n - 1].to_vec())
    }

    /// `p · a = (0, a_0^p, ..., a_{n-2}^p)` in characteristic p.
    pub fn p_multiple(&self, a: &[R::Elem]) -> Result<WittVector<R::Elem>, WittError> {
        self.verschiebung(&self.frobenius(a)?)
    }

    /// Ghost components, for characteristic-zero coefficients.
    pub fn ghost_map(&self, a: &[R::Elem]) -> Result<Vec<R::Elem>, WittError> {
        self.check(a)?;
        if self.char_p {
            return Err(WittError::NeedsTorsionFree);
        }
        let r = self.ring;
        Ok((0..self.n)
            .map(|m| {
                let mut acc = r.zero();
                for (i, ai) in a.iter().enumerate().take(m + 1) {
                    let pw = r.pow(ai, self.p.pow((m - i) as u32));
                    let coeff = r.embed_int(&BigInt::from(self.p).pow(i as u32));
                    acc = r.add(&acc, &r.mul(&coeff, &pw));
                }
                acc
            })
            .collect())
    }

    /// `α · V^{n-1}([r])`, asserted to lie in `ker 𝔯`.
    pub fn ker_restriction_action(&self, alpha: &[R::Elem], r: &R::Elem) -> Result<WittVector<R::Elem>, WittError> {
        let v = self.verschiebung_pow(&self.teichmuller(r), self.n - 1)?;
        let out = self.mul(alpha, &v)?;
        debug_assert!(out[..self.n - 1].iter().all(|c| self.ring.is_zero(c)));
        Ok(out)
    }

    /// `Σ_i V^i([a_i])`, which recovers `a`.
    pub fn teichmuller_decomposition_sum(&self, a: &[R::Elem]) -> Result<WittVector<R::Elem>, WittError> {
        self.check(a)?;
        let mut acc = self.zero();
        for (i, ai) in a.iter().enumerate() {
            acc = self.add(&acc, &self.verschiebung_pow(&self.teichmuller(ai), i)?)?;
        }
        Ok(acc)
    }
}

/// `a ∈ W_n(m^k)`: every coordinate lies in `m^k`.
pub fn in_witt_power(alg: &FiniteAlgebra, a: &[Elem], k: usize) -> Result<bool, WittError> {
    let m = alg.maximal_ideal().ok_or(WittError::NoMaximalIdeal)?;
    Ok(a.iter().all(|c| m.contains_power(c, k)))
}

/// `a ∈ J`: the first coordinate lies in `m`.
pub fn in_j(alg: &FiniteAlgebra, a: &[Elem]) -> Result<bool, WittError> {
    let m = alg.maximal_ideal().ok_or(WittError::NoMaximalIdeal)?;
    Ok(a.first().map(|c| m.contains_power(c, 1)).unwrap_or(true))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ring::{Integers, ZMod};

    fn z(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn integer_addition_by_ghosts() {
        let w = Witt::new(&Integers, 2, 3).unwrap();
        assert_eq!(w.add(&z(&[1, 2, 3]), &z(&[4, 5, 6])).unwrap(), z(&[5, 3, -73]));
        assert_eq!(w.ghost_map(&z(&[1, 2, 3])).unwrap(), z(&[1, 5, 21]));
    }

    #[test]
    fn small_prime_field() {
        let f2 = FiniteAlgebra::galois_field(2).unwrap();
        let w = Witt::new(&f2, 2, 2).unwrap();
        let one = w.one();
        assert_eq!(w.add(&one, &one).unwrap(), vec![vec![0], vec![1]]);
        let a = vec![vec![1], vec![1]];
        assert_eq!(w.mul(&a, &a).unwrap(), one);
        assert_eq!(w.p_multiple(&one).unwrap(), vec![vec![0], vec![1]]);
    }

    #[test]
    fn four_is_zero_zero_one() {
        let f2 = FiniteAlgebra::galois_field(2).unwrap();
        let w = Witt::new(&f2, 2, 3).unwrap();
        assert_eq!(w.integer(4), vec![vec![0], vec![0], vec![1]]);
        assert_eq!(w.integer(8), w.zero());
        assert_eq!(w.integer(-1), vec![vec![1], vec![1], vec![1]]);
    }

    #[test]
    fn characteristic_checked() {
        assert!(matches!(Witt::new(&ZMod(4), 2, 2), Err(WittError::Characteristic { .. })));
        let f2 = FiniteAlgebra::galois_field(2).unwrap();
        assert!(matches!(Witt::new(&f2, 3, 2), Err(WittError::Characteristic { .. })));
        let w = Witt::new(&f2, 2, 1).unwrap();
        assert_eq!(w.restriction(&w.one()), Err(WittError::RestrictionOfLengthOne));
    }
}
