use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::arith::modp;
use crate::arith::ring::CoeffRing;
use crate::arith::squarefree::squarefree_test;
use crate::arith::{Domain, IdealBasis, Monomial, MonomialOrder, SparsePoly};

use super::finite::Reducedness;
use super::RingError;

/// Standard monomials of one degree, with a reverse index.
#[derive(Debug)]
pub struct Piece {
    pub degree: u32,
    pub monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl Piece {
    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }
}

/// `GF(p)[x_0..x_d]/I` with `I` homogeneous and every variable of degree 1.
/// Elements are normal forms modulo a grevlex Gröbner basis of `I`.
#[derive(Debug)]
pub struct GradedQuotient {
    p: u64,
    var_names: Vec<String>,
    relations: Vec<SparsePoly>,
    ideal: IdealBasis,
    pieces: RwLock<BTreeMap<u32, Arc<Piece>>>,
    nf_cache: RwLock<HashMap<Monomial, SparsePoly>>,
}

impl GradedQuotient {
    pub fn new(p: u64, var_names: Vec<String>, relations: Vec<SparsePoly>) -> Result<Self, RingError> {
        if !modp::is_prime(p) {
            return Err(RingError::NotPrime(p));
        }
        let n = var_names.len();
        for r in &relations {
            if r.nvars() != n {
                return Err(RingError::Arity(r.nvars(), n));
            }
            if !r.is_homogeneous() {
                return Err(RingError::NotHomogeneous(r.display_with(&var_names).to_string()));
            }
        }
        let relations: Vec<SparsePoly> = relations.into_iter().map(|r| r.reduce_mod(p)).collect();
        let ideal = IdealBasis::groebner(relations.clone(), MonomialOrder::grevlex(n))?;
        if ideal.gens().iter().any(SparsePoly::is_constant) {
            return Err(RingError::ZeroRing);
        }
        Ok(GradedQuotient {
            p,
            var_names,
            relations,
            ideal,
            pieces: RwLock::new(BTreeMap::new()),
            nf_cache: RwLock::new(HashMap::new()),
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn nvars(&self) -> usize {
        self.var_names.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.var_names
    }

    pub fn relations(&self) -> &[SparsePoly] {
        &self.relations
    }

    pub fn ideal(&self) -> &IdealBasis {
        &self.ideal
    }

    /// The defining polynomial when the ideal is principal.
    pub fn hypersurface(&self) -> Option<&SparsePoly> {
        match self.relations.as_slice() {
            [f] => Some(f),
            _ => None,
        }
    }

    pub fn var(&self, i: usize) -> SparsePoly {
        SparsePoly::var(Domain::Gfp(self.p), self.nvars(), i)
    }

    /// Standard monomials of degree `e`, in descending grevlex order.
    pub fn graded_piece_basis(&self, e: u32) -> Arc<Piece> {
        if let Some(piece) = self.pieces.read().expect("lock").get(&e) {
            return piece.clone();
        }
        let monomials = self.ideal.standard_monomials_of_degree(e);
        let index = monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        let piece = Arc::new(Piece {
            degree: e,
            monomials,
            index,
        });
        self.pieces
            .write()
            .expect("lock")
            .entry(e)
            .or_insert(piece)
            .clone()
    }

    pub fn normal_form(&self, f: &SparsePoly) -> Result<SparsePoly, RingError> {
        Ok(self.ideal.normal_form(&f.reduce_mod(self.p))?)
    }

    /// Normal form of a single monomial, cached.
    pub fn nf_monomial(&self, m: &Monomial) -> SparsePoly {
        if let Some(f) = self.nf_cache.read().expect("lock").get(m) {
            return f.clone();
        }
        let nf = self
            .ideal
            .normal_form(&SparsePoly::monomial(Domain::Gfp(self.p), m.clone(), 1))
            .expect("arity checked");
        self.nf_cache
            .write()
            .expect("lock")
            .entry(m.clone())
            .or_insert(nf)
            .clone()
    }

    /// Coordinates of a homogeneous normal form of degree `e`.
    pub fn coords(&self, f: &SparsePoly, e: u32) -> Vec<u64> {
        let piece = self.graded_piece_basis(e);
        let mut v = vec![0; piece.len()];
        for (m, c) in f.terms() {
            let k = piece.index_of(m).expect("standard monomial of the requested degree");
            v[k] = c.to_u64().expect("reduced");
        }
        v
    }

    pub fn from_coords(&self, v: &[u64], e: u32) -> SparsePoly {
        let piece = self.graded_piece_basis(e);
        SparsePoly::from_terms(
            Domain::Gfp(self.p),
            self.nvars(),
            v.iter()
                .zip(&piece.monomials)
                .filter(|(&c, _)| c != 0)
                .map(|(&c, m)| (m.clone(), BigInt::from(c))),
        )
    }

    pub fn frobenius_power(&self, f: &SparsePoly, e: u32) -> SparsePoly {
        let mut acc = f.clone();
        for _ in 0..e {
            acc = self.pow(&acc, self.p);
        }
        acc
    }

    /// Reducedness; supported only for a single defining polynomial.
    pub fn is_reduced(&self) -> Result<Reducedness, RingError> {
        match self.hypersurface() {
            Some(f) => hypersurface_reducedness(f, &self.var_names),
            None if self.relations.is_empty() => Ok(Reducedness::Reduced),
            None => Err(RingError::NotPrincipal),
        }
    }

    pub fn describe(&self) -> String {
        let rels: Vec<String> = self
            .relations
            .iter()
            .map(|r| r.display_with(&self.var_names).to_string())
            .collect();
        format!("GF({})[{}]/({})", self.p, self.var_names.join(","), rels.join(", "))
    }
}

/// Reducedness of `GF(p)[vars]/(f)`: reduced iff `f` is squarefree. A
/// repeated factor `g` is nilpotent in the quotient, with `g^p = 0`.
pub fn hypersurface_reducedness(f: &SparsePoly, names: &[String]) -> Result<Reducedness, RingError> {
    let r = squarefree_test(f)?;
    Ok(match r.witness {
        None => Reducedness::Reduced,
        Some(g) => Reducedness::Nilpotent {
            witness: g.display_with(names).to_string(),
            exponent: 1,
        },
    })
}

impl CoeffRing for GradedQuotient {
    type Elem = SparsePoly;

    fn zero(&self) -> SparsePoly {
        SparsePoly::zero(Domain::Gfp(self.p), self.nvars())
    }
    fn one(&self) -> SparsePoly {
        SparsePoly::one(Domain::Gfp(self.p), self.nvars())
    }
    fn add(&self, a: &SparsePoly, b: &SparsePoly) -> SparsePoly {
        a + b
    }
    fn neg(&self, a: &SparsePoly) -> SparsePoly {
        -a
    }
    fn mul(&self, a: &SparsePoly, b: &SparsePoly) -> SparsePoly {
        let mut out = self.zero();
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                let m = ma.checked_mul(mb).expect("exponent overflow");
                let nf = self.nf_monomial(&m);
                out.add_scaled_shifted(&(ca * cb), &Monomial::one(self.nvars()), &nf)
                    .expect("same ring");
            }
        }
        out
    }
    fn embed_int(&self, c: &BigInt) -> SparsePoly {
        SparsePoly::constant(
            Domain::Gfp(self.p),
            self.nvars(),
            c.mod_floor(&BigInt::from(self.p)),
        )
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn is_zero(&self, a: &SparsePoly) -> bool {
        a.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(s: &[&str]) -> Vec<String> {
        s.iter().map(|x| x.to_string()).collect()
    }

    fn cubic() -> GradedQuotient {
        let v: Vec<SparsePoly> = (0..3).map(|i| SparsePoly::var(Domain::Gfp(2), 3, i)).collect();
        let f = &(&v[0].checked_pow(3).unwrap() + &(&(&v[1] * &v[1]) * &v[2])) + &(&v[1] * &(&v[2] * &v[2]));
        GradedQuotient::new(2, names(&["x", "y", "z"]), vec![f]).unwrap()
    }

    #[test]
    fn piece_sizes_follow_hilbert_series() {
        let r = cubic();
        let sizes: Vec<usize> = (0..8).map(|e| r.graded_piece_basis(e).len()).collect();
        // (1 - t^3)/(1 - t)^3
        let expected: Vec<usize> = (0..8u32)
            .map(|e| {
                let full = ((e + 1) * (e + 2) / 2) as usize;
                let killed = if e >= 3 { ((e - 2) * (e - 1) / 2) as usize } else { 0 };
                full - killed
            })
            .collect();
        assert_eq!(sizes, expected);
        assert_eq!(sizes[1], 3);
        assert_eq!(sizes[3], 9);
        assert_eq!(r.graded_piece_basis(0).monomials, vec![Monomial::one(3)]);
    }

    #[test]
    fn frobenius_on_linear_forms() {
        let r = cubic();
        let s = &r.var(0) + &r.var(1);
        assert_eq!(r.frobenius_power(&s, 1), &(&r.var(0) * &r.var(0)) + &(&r.var(1) * &r.var(1)));
    }

    #[test]
    fn multiplication_reduces() {
        let r = cubic();
        let x2 = r.mul(&r.var(0), &r.var(0));
        let x3 = r.mul(&x2, &r.var(0));
        assert_eq!(x3, r.normal_form(&x3).unwrap());
        assert!(r.normal_form(&(&x3 - &r.relations()[0].clone())).unwrap() == x3);
        assert!(r.is_reduced().unwrap().is_reduced());
    }

    #[test]
    fn inhomogeneous_rejected() {
        let x = SparsePoly::var(Domain::Gfp(2), 1, 0);
        let f = &(&x * &x) + &x;
        assert!(matches!(
            GradedQuotient::new(2, names(&["x"]), vec![f]),
            Err(RingError::NotHomogeneous(_))
        ));
    }
}
