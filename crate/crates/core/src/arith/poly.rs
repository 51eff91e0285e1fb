//! Sparse multivariate polynomials over the integers or a prime field.
//!
//! Terms live in a `BTreeMap` keyed by exponent vector, so two equal
//! polynomials always have identical storage. Monomial orders used by the
//! Gröbner machinery are applied on demand and never affect storage.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::modp;

/// Exponent storage width. Products check for overflow.
pub type Exp = u16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("arity mismatch: {0} vs {1} variables")]
    ArityMismatch(usize, usize),
    #[error("coefficient domain mismatch: {0} vs {1}")]
    DomainMismatch(Domain, Domain),
    #[error("exponent overflow (limit {})", Exp::MAX)]
    ExponentOverflow,
    #[error("coefficient {coeff} is not divisible by {divisor}")]
    Indivisible { coeff: BigInt, divisor: BigInt },
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial division left a nonzero remainder")]
    InexactDivision,
    #[error("operation requires a nonzero polynomial")]
    ZeroInput,
    #[error("operation requires coefficients in GF(p)")]
    NeedsPrimeField,
    #[error("monomial order covers {0} variables, polynomial has {1}")]
    OrderMismatch(usize, usize),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("ideal basis is not a Gröbner basis")]
    NotGroebner,
}

/// Coefficient domain of a [`SparsePoly`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Domain {
    Integers,
    Gfp(u64),
}

impl Domain {
    pub fn gfp(p: u64) -> Result<Self, PolyError> {
        if modp::is_prime(p) {
            Ok(Domain::Gfp(p))
        } else {
            Err(PolyError::NotPrime(p))
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Domain::Integers => 0,
            Domain::Gfp(p) => p,
        }
    }

    /// Canonical representative of `c` in this domain.
    pub fn normalize(self, c: BigInt) -> BigInt {
        match self {
            Domain::Integers => c,
            Domain::Gfp(p) => c.mod_floor(&BigInt::from(p)),
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Integers => write!(f, "ZZ"),
            Domain::Gfp(p) => write!(f, "GF({p})"),
        }
    }
}

/// Exponent vector. The derived `Ord` is lexicographic with variable 0
/// most significant; it is the storage order, not a Gröbner order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Monomial(Vec<Exp>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize, e: Exp) -> Self {
        let mut v = vec![0; nvars];
        v[i] = e;
        Monomial(v)
    }

    pub fn from_exps(exps: Vec<Exp>) -> Self {
        Monomial(exps)
    }

    pub fn exps(&self) -> &[Exp] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial, PolyError> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(PolyError::ExponentOverflow))
            .collect::<Result<Vec<_>, _>>()
            .map(Monomial)
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn checked_pow(&self, k: u32) -> Result<Monomial, PolyError> {
        self.0
            .iter()
            .map(|&e| {
                (e as u64)
                    .checked_mul(k as u64)
                    .filter(|&v| v <= Exp::MAX as u64)
                    .map(|v| v as Exp)
                    .ok_or(PolyError::ExponentOverflow)
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Monomial)
    }

    /// Exponent vector extended by `k` zero exponents at the front.
    pub fn prepend_vars(&self, k: usize) -> Monomial {
        let mut v = vec![0; k];
        v.extend_from_slice(&self.0);
        Monomial(v)
    }

    /// All monomials in `nvars` variables of total degree `d`, in storage order.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        fn rec(prefix: &mut Vec<Exp>, left: usize, d: u32, out: &mut Vec<Monomial>) {
            if left == 1 {
                prefix.push(d as Exp);
                out.push(Monomial(prefix.clone()));
                prefix.pop();
                return;
            }
            for e in 0..=d {
                prefix.push(e as Exp);
                rec(prefix, left - 1, d - e, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if nvars == 0 {
            if d == 0 {
                out.push(Monomial(Vec::new()));
            }
            return out;
        }
        rec(&mut Vec::with_capacity(nvars), nvars, d, &mut out);
        out.sort();
        out
    }
}

/// Exact multivariate polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SparsePoly {
    domain: Domain,
    nvars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl SparsePoly {
    pub fn zero(domain: Domain, nvars: usize) -> Self {
        SparsePoly {
            domain,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(domain: Domain, nvars: usize, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(domain, nvars);
        p.add_term(Monomial::one(nvars), c.into());
        p
    }

    pub fn one(domain: Domain, nvars: usize) -> Self {
        Self::constant(domain, nvars, 1)
    }

    pub fn var(domain: Domain, nvars: usize, i: usize) -> Self {
        Self::monomial(domain, Monomial::var(nvars, i, 1), 1)
    }

    pub fn monomial(domain: Domain, m: Monomial, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(domain, m.nvars());
        p.add_term(m, c.into());
        p
    }

    pub fn from_terms(
        domain: Domain,
        nvars: usize,
        terms: impl IntoIterator<Item = (Monomial, BigInt)>,
    ) -> Self {
        let mut p = Self::zero(domain, nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial arity");
            p.add_term(m, c);
        }
        p
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(&Monomial::one(self.nvars))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<Exp> {
        self.terms.keys().map(|m| m.exps()[var]).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Adds `c·m` in place, keeping the no-zero-coefficient invariant.
    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        debug_assert_eq!(m.nvars(), self.nvars);
        let c = self.domain.normalize(c);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = self.domain.normalize(o.get() + c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// `self += c · shift · g`, in place.
    pub fn add_scaled_shifted(
        &mut self,
        c: &BigInt,
        shift: &Monomial,
        g: &SparsePoly,
    ) -> Result<(), PolyError> {
        for (m, a) in &g.terms {
            self.add_term(m.checked_mul(shift)?, c * a);
        }
        Ok(())
    }

    pub fn remove_term(&mut self, m: &Monomial) -> Option<BigInt> {
        self.terms.remove(m)
    }

    fn check_compatible(&self, other: &SparsePoly) -> Result<(), PolyError> {
        if self.nvars != other.nvars {
            return Err(PolyError::ArityMismatch(self.nvars, other.nvars));
        }
        if self.domain != other.domain {
            return Err(PolyError::DomainMismatch(self.domain, other.domain));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &SparsePoly) -> Result<SparsePoly, PolyError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &SparsePoly) -> Result<SparsePoly, PolyError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &SparsePoly) -> Result<SparsePoly, PolyError> {
        self.check_compatible(other)?;
        let mut acc: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.checked_mul(mb)?;
                *acc.entry(m).or_default() += ca * cb;
            }
        }
        Ok(SparsePoly::from_terms(self.domain, self.nvars, acc))
    }

    pub fn checked_pow(&self, mut k: u64) -> Result<SparsePoly, PolyError> {
        let mut base = self.clone();
        let mut acc = SparsePoly::one(self.domain, self.nvars);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn scale(&self, c: &BigInt) -> SparsePoly {
        SparsePoly::from_terms(
            self.domain,
            self.nvars,
            self.terms.iter().map(|(m, a)| (m.clone(), a * c)),
        )
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &BigInt) -> Result<SparsePoly, PolyError> {
        let mut out = SparsePoly::zero(self.domain, self.nvars);
        for (mm, a) in &self.terms {
            out.add_term(mm.checked_mul(m)?, a * c);
        }
        Ok(out)
    }

    /// Divides every coefficient by `m`; fails if any coefficient is not a
    /// multiple. Never rounds.
    pub fn exact_div_by_int(&self, m: &BigInt) -> Result<SparsePoly, PolyError> {
        if m.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        if self.domain != Domain::Integers {
            return Err(PolyError::DomainMismatch(self.domain, Domain::Integers));
        }
        let mut out = SparsePoly::zero(self.domain, self.nvars);
        for (mono, c) in &self.terms {
            let (q, r) = c.div_rem(m);
            if !r.is_zero() {
                return Err(PolyError::Indivisible {
                    coeff: c.clone(),
                    divisor: m.clone(),
                });
            }
            out.terms.insert(mono.clone(), q);
        }
        Ok(out)
    }

    /// Image under `Z → GF(p)` (or identity when already over `GF(p)`).
    pub fn reduce_mod(&self, p: u64) -> SparsePoly {
        let dom = Domain::Gfp(p);
        SparsePoly::from_terms(dom, self.nvars, self.terms.clone())
    }

    /// Lift from `GF(p)` to integer coefficients in `[0, p)`.
    pub fn lift_to_integers(&self) -> SparsePoly {
        SparsePoly {
            domain: Domain::Integers,
            nvars: self.nvars,
            terms: self.terms.clone(),
        }
    }

    pub fn derivative(&self, var: usize) -> SparsePoly {
        let mut out = SparsePoly::zero(self.domain, self.nvars);
        for (m, c) in &self.terms {
            let e = m.exps()[var];
            if e == 0 {
                continue;
            }
            let mut exps = m.exps().to_vec();
            exps[var] -= 1;
            out.add_term(Monomial(exps), c * BigInt::from(e));
        }
        out
    }

    /// Substitutes polynomial values (same domain and arity as the result)
    /// for every variable.
    pub fn compose(&self, values: &[SparsePoly]) -> Result<SparsePoly, PolyError> {
        assert_eq!(values.len(), self.nvars, "one value per variable");
        let (dom, nv) = match values.first() {
            Some(v) => (v.domain, v.nvars),
            None => (self.domain, 0),
        };
        let mut cache: Vec<BTreeMap<Exp, SparsePoly>> = vec![BTreeMap::new(); self.nvars];
        let mut out = SparsePoly::zero(dom, nv);
        for (m, c) in &self.terms {
            let mut t = SparsePoly::constant(dom, nv, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !cache[i].contains_key(&e) {
                    let v = values[i].checked_pow(e as u64)?;
                    cache[i].insert(e, v);
                }
                t = t.checked_mul(&cache[i][&e])?;
            }
            out = out.checked_add(&t)?;
        }
        Ok(out)
    }

    /// Embeds into a ring with `k` new variables placed before the old ones.
    pub fn prepend_vars(&self, k: usize) -> SparsePoly {
        SparsePoly::from_terms(
            self.domain,
            self.nvars + k,
            self.terms
                .iter()
                .map(|(m, c)| (m.prepend_vars(k), c.clone())),
        )
    }

    /// Drops the first `k` variables, which must not occur.
    pub fn drop_leading_vars(&self, k: usize) -> Option<SparsePoly> {
        let mut out = SparsePoly::zero(self.domain, self.nvars - k);
        for (m, c) in &self.terms {
            if m.exps()[..k].iter().any(|&e| e != 0) {
                return None;
            }
            out.add_term(Monomial(m.exps()[k..].to_vec()), c.clone());
        }
        Some(out)
    }

    /// Exact `p`-th root over `GF(p)`: `Some(g)` with `g^p = self` when every
    /// exponent is divisible by `p` (coefficients are fixed by Frobenius on
    /// the prime field).
    pub fn pth_root(&self) -> Result<Option<SparsePoly>, PolyError> {
        let Domain::Gfp(p) = self.domain else {
            return Err(PolyError::NeedsPrimeField);
        };
        let mut out = SparsePoly::zero(self.domain, self.nvars);
        for (m, c) in &self.terms {
            if m.exps().iter().any(|&e| !(e as u64).is_multiple_of(p)) {
                return Ok(None);
            }
            let exps = m.exps().iter().map(|&e| (e as u64 / p) as Exp).collect();
            out.add_term(Monomial(exps), c.clone());
        }
        Ok(Some(out))
    }

    /// Multiplies so the coefficient of `lead` becomes 1 (prime field only).
    pub fn make_monic_at(&self, lead: &Monomial) -> SparsePoly {
        let Domain::Gfp(p) = self.domain else {
            return self.clone();
        };
        let c = self.coeff(lead).to_u64().expect("reduced coefficient");
        let inv = modp::inv(c, p);
        self.scale(&BigInt::from(inv))
    }

    /// Evaluates at integer points (integer domain only is meaningful).
    pub fn eval_integers(&self, point: &[BigInt]) -> BigInt {
        assert_eq!(point.len(), self.nvars);
        let mut acc = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exps()) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += t;
        }
        self.domain.normalize(acc)
    }

    /// Formats with the given variable names.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, names }
    }
}

/// Formatter produced by [`SparsePoly::display_with`]. Terms are printed in
/// descending graded-reverse-lexicographic order.
pub struct PolyDisplay<'a> {
    poly: &'a SparsePoly,
    names: &'a [String],
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let order = super::order::MonomialOrder::grevlex(self.poly.nvars);
        let mut terms: Vec<_> = self.poly.terms().collect();
        terms.sort_by(|a, b| order.cmp(b.0, a.0));
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let factors: Vec<String> = m
                .exps()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    let name = self
                        .names
                        .get(i)
                        .cloned()
                        .unwrap_or_else(|| format!("x{i}"));
                    if e == 1 {
                        name
                    } else {
                        format!("{name}^{e}")
                    }
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{mag}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| format!("x{i}")).collect();
        write!(f, "{}", self.display_with(&names))
    }
}

// Operator sugar for code that already guarantees matching rings. These
// panic on mismatch; use the `checked_*` methods at API boundaries.
impl Add for &SparsePoly {
    type Output = SparsePoly;
    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        self.checked_add(rhs).expect("polynomial add")
    }
}

impl Sub for &SparsePoly {
    type Output = SparsePoly;
    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        self.checked_sub(rhs).expect("polynomial sub")
    }
}

impl Mul for &SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        self.checked_mul(rhs).expect("polynomial mul")
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        self.scale(&BigInt::from(-1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars(dom: Domain, n: usize) -> Vec<SparsePoly> {
        (0..n).map(|i| SparsePoly::var(dom, n, i)).collect()
    }

    #[test]
    fn frobenius_additivity_in_char_two() {
        let d = Domain::Gfp(2);
        let v = vars(d, 2);
        let s = &v[0] + &v[1];
        let sq = s.checked_pow(2).unwrap();
        assert_eq!(sq, &(&v[0] * &v[0]) + &(&v[1] * &v[1]));
    }

    #[test]
    fn binomial_over_integers() {
        let d = Domain::Integers;
        let v = vars(d, 2);
        let s = &v[0] + &v[1];
        let sq = &s * &s;
        let expect = &(&(&v[0] * &v[0]) + &(&v[0] * &v[1]).scale(&BigInt::from(2))) + &(&v[1] * &v[1]);
        assert_eq!(sq, expect);
    }

    #[test]
    fn square_of_linear_form_with_adjoined_roots() {
        // (s' x + t' y + z)^2 over GF(2) in variables s', t', x, y, z.
        let d = Domain::Gfp(2);
        let v = vars(d, 5);
        let g = &(&(&v[0] * &v[2]) + &(&v[1] * &v[3])) + &v[4];
        let sq = g.checked_pow(2).unwrap();
        let expect = &(&(&(&v[0] * &v[0]) * &(&v[2] * &v[2])) + &(&(&v[1] * &v[1]) * &(&v[3] * &v[3])))
            + &(&v[4] * &v[4]);
        assert_eq!(sq, expect);
    }

    #[test]
    fn exact_division_by_integers() {
        let d = Domain::Integers;
        let v = vars(d, 2);
        let two = BigInt::from(2);
        let a = &(&v[0] * &v[0]).scale(&two) + &v[1].scale(&BigInt::from(4));
        assert_eq!(
            a.exact_div_by_int(&two).unwrap(),
            &(&v[0] * &v[0]) + &v[1].scale(&two)
        );

        // ((x+y)^3 - x^3 - y^3) / 3 = x^2 y + x y^2
        let s = (&v[0] + &v[1]).checked_pow(3).unwrap();
        let c = &(&s - &v[0].checked_pow(3).unwrap()) - &v[1].checked_pow(3).unwrap();
        let q = c.exact_div_by_int(&BigInt::from(3)).unwrap();
        assert_eq!(q, &(&(&v[0] * &v[0]) * &v[1]) + &(&v[0] * &(&v[1] * &v[1])));

        let bad = v[0].scale(&BigInt::from(3));
        assert!(matches!(
            bad.exact_div_by_int(&two),
            Err(PolyError::Indivisible { .. })
        ));
    }

    #[test]
    fn mismatches_are_errors() {
        let a = SparsePoly::var(Domain::Gfp(2), 2, 0);
        let b = SparsePoly::var(Domain::Gfp(3), 2, 0);
        let c = SparsePoly::var(Domain::Gfp(2), 3, 0);
        assert!(matches!(a.checked_add(&b), Err(PolyError::DomainMismatch(..))));
        assert!(matches!(a.checked_mul(&c), Err(PolyError::ArityMismatch(2, 3))));
    }

    #[test]
    fn exponent_overflow_is_detected() {
        let x = SparsePoly::monomial(Domain::Integers, Monomial::var(1, 0, 40000), 1);
        assert_eq!(x.checked_mul(&x), Err(PolyError::ExponentOverflow));
    }

    #[test]
    fn derivative_and_pth_root() {
        let d = Domain::Gfp(3);
        let v = vars(d, 2);
        let f = &v[0].checked_pow(3).unwrap() + &v[1].checked_pow(6).unwrap();
        assert!(f.derivative(0).is_zero());
        assert!(f.derivative(1).is_zero());
        let r = f.pth_root().unwrap().unwrap();
        assert_eq!(r.checked_pow(3).unwrap(), f);
        assert_eq!(v[0].pth_root().unwrap(), None);
    }

    #[test]
    fn monomials_of_degree() {
        assert_eq!(Monomial::all_of_degree(3, 3).len(), 10);
        assert_eq!(Monomial::all_of_degree(3, 0).len(), 1);
        assert_eq!(Monomial::all_of_degree(0, 0).len(), 1);
    }

    #[test]
    fn display_orders_terms() {
        let d = Domain::Gfp(2);
        let v = vars(d, 3);
        let f = &(&v[0].checked_pow(3).unwrap() + &(&(&v[1] * &v[1]) * &v[2])) + &(&v[1] * &(&v[2] * &v[2]));
        let names = vec!["x".to_string(), "y".to_string(), "z".to_string()];
        assert_eq!(f.display_with(&names).to_string(), "x^3 + y^2*z + y*z^2");
    }
}
