use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::arith::linsys::{nullspace, Subspace};
use crate::arith::modp;
use crate::arith::ring::CoeffRing;
use crate::arith::{Domain, IdealBasis, Monomial, MonomialOrder, SparsePoly};

use super::RingError;

/// Name of the generator variable used when presenting GF(p^k).
pub const FIELD_GENERATOR: &str = "gen";

/// Default bound on the GF(p)-dimension of a finite algebra.
pub const DEFAULT_DIM_CAP: usize = 12;

/// A finite-dimensional commutative GF(p)-algebra `GF(p)[x]/I`, held as a
/// basis of standard monomials and a multiplication table.
#[derive(Debug, Clone)]
pub struct FiniteAlgebra {
    p: u64,
    var_names: Vec<String>,
    relations: Vec<SparsePoly>,
    ideal: IdealBasis,
    basis: Vec<Monomial>,
    /// `table[(i * d + j) * d + k]` is the coefficient of basis `k` in `b_i b_j`.
    table: Vec<u64>,
    maximal: Option<MaximalIdeal>,
    pth_span: OnceLock<Subspace>,
}

/// A designated maximal ideal together with the spans of its powers.
#[derive(Debug, Clone)]
pub struct MaximalIdeal {
    gens: Vec<SparsePoly>,
    /// `powers[k]` spans `m^k`; the last entry is zero.
    powers: Vec<Subspace>,
}

pub type Elem = Vec<u64>;

impl FiniteAlgebra {
    /// `GF(p)[vars]/(relations)`, which must be finite-dimensional.
    pub fn new(
        p: u64,
        var_names: Vec<String>,
        relations: Vec<SparsePoly>,
        cap: usize,
    ) -> Result<Self, RingError> {
        if !modp::is_prime(p) {
            return Err(RingError::NotPrime(p));
        }
        let n = var_names.len();
        for r in &relations {
            if r.nvars() != n {
                return Err(RingError::Arity(r.nvars(), n));
            }
            if r.domain() != Domain::Gfp(p) {
                return Err(RingError::Poly(crate::arith::PolyError::DomainMismatch(
                    r.domain(),
                    Domain::Gfp(p),
                )));
            }
        }
        let order = MonomialOrder::grevlex(n);
        let ideal = IdealBasis::groebner(relations.clone(), order.clone())?;
        if ideal.gens().iter().any(SparsePoly::is_constant) {
            return Err(RingError::ZeroRing);
        }
        if !ideal.is_zero_dimensional() {
            return Err(RingError::InfiniteDimensional);
        }
        let basis = standard_monomials(&ideal, cap)?;
        let d = basis.len();
        let mut alg = FiniteAlgebra {
            p,
            var_names,
            relations,
            ideal,
            basis,
            table: vec![0; d * d * d],
            maximal: None,
            pth_span: OnceLock::new(),
        };
        for i in 0..d {
            for j in i..d {
                let prod = alg.basis[i].checked_mul(&alg.basis[j])?;
                let nf = alg
                    .ideal
                    .normal_form(&SparsePoly::monomial(Domain::Gfp(p), prod, 1))?;
                let v = alg.coords_of_normal_form(&nf);
                alg.table[(i * d + j) * d..][..d].copy_from_slice(&v);
                alg.table[(j * d + i) * d..][..d].copy_from_slice(&v);
            }
        }
        Ok(alg)
    }

    /// `GF(q)[vars]/(relations)` as an algebra over the prime field. For
    /// `q = p^k` with `k > 1` a generator variable named [`FIELD_GENERATOR`]
    /// is prepended and bound by the smallest irreducible polynomial;
    /// `relations` must already use that variable layout.
    pub fn over_field(
        q: u64,
        var_names: Vec<String>,
        relations: Vec<SparsePoly>,
        cap: usize,
    ) -> Result<Self, RingError> {
        let (p, k) = modp::prime_power(q).ok_or(RingError::NotPrimePower(q))?;
        if k == 1 {
            return Self::new(p, var_names, relations, cap);
        }
        let mut names = vec![FIELD_GENERATOR.to_string()];
        names.extend(var_names);
        let irr = irreducible_poly(p, k);
        let gen_rel = SparsePoly::from_terms(
            Domain::Gfp(p),
            names.len(),
            irr.iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(e, &c)| (Monomial::var(names.len(), 0, e as u16), BigInt::from(c))),
        );
        let mut rels = vec![gen_rel];
        rels.extend(relations);
        Self::new(p, names, rels, cap)
    }

    /// The field GF(q).
    pub fn galois_field(q: u64) -> Result<Self, RingError> {
        Self::over_field(q, Vec::new(), Vec::new(), DEFAULT_DIM_CAP)
    }

    /// Designates the ideal generated by `gens` as the maximal ideal; it
    /// must be nilpotent.
    pub fn with_maximal_ideal(mut self, gens: Vec<SparsePoly>) -> Result<Self, RingError> {
        let d = self.dim();
        let gen_elems: Vec<Elem> = gens
            .iter()
            .map(|g| self.elem_from_poly(g))
            .collect::<Result<_, _>>()?;
        let mut first = Subspace::new(self.p, d);
        for g in &gen_elems {
            for i in 0..d {
                first.insert(&self.mul(g, &self.basis_elem(i)));
            }
        }
        let mut powers = vec![Subspace::spanned_by(self.p, d, &self.all_basis_elems()), first.clone()];
        loop {
            let last = powers.last().expect("nonempty");
            if last.rank() == 0 {
                break;
            }
            let mut next = Subspace::new(self.p, d);
            for a in last.basis() {
                for b in first.basis() {
                    next.insert(&self.mul(&a, &b));
                }
            }
            if next.rank() == last.rank() {
                return Err(RingError::NotNilpotent);
            }
            powers.push(next);
        }
        self.maximal = Some(MaximalIdeal { gens, powers });
        Ok(self)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
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

    pub fn basis_monomials(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn maximal_ideal(&self) -> Option<&MaximalIdeal> {
        self.maximal.as_ref()
    }

    /// Number of elements, `p^dim`.
    pub fn size(&self) -> u64 {
        self.p.pow(self.dim() as u32)
    }

    pub fn basis_elem(&self, i: usize) -> Elem {
        let mut v = vec![0; self.dim()];
        v[i] = 1;
        v
    }

    pub fn all_basis_elems(&self) -> Vec<Elem> {
        (0..self.dim()).map(|i| self.basis_elem(i)).collect()
    }

    pub fn scalar(&self, c: u64) -> Elem {
        let mut v = vec![0; self.dim()];
        v[0] = c % self.p;
        v
    }

    pub fn scale(&self, c: u64, a: &Elem) -> Elem {
        a.iter().map(|&x| modp::mul(x, c % self.p, self.p)).collect()
    }

    fn coords_of_normal_form(&self, nf: &SparsePoly) -> Elem {
        let mut v = vec![0; self.dim()];
        for (m, c) in nf.terms() {
            let k = self
                .basis
                .binary_search_by(|b| self.ideal.order().cmp(b, m))
                .expect("normal form is supported on standard monomials");
            v[k] = c.to_u64().expect("reduced coefficient");
        }
        v
    }

    /// Image of a polynomial in the presentation's variables.
    pub fn elem_from_poly(&self, f: &SparsePoly) -> Result<Elem, RingError> {
        if f.nvars() != self.var_names.len() {
            return Err(RingError::Arity(f.nvars(), self.var_names.len()));
        }
        let nf = self.ideal.normal_form(&f.reduce_mod(self.p))?;
        Ok(self.coords_of_normal_form(&nf))
    }

    pub fn var_elem(&self, i: usize) -> Elem {
        self.elem_from_poly(&SparsePoly::var(Domain::Gfp(self.p), self.var_names.len(), i))
            .expect("variable")
    }

    pub fn to_poly(&self, a: &Elem) -> SparsePoly {
        SparsePoly::from_terms(
            Domain::Gfp(self.p),
            self.var_names.len(),
            a.iter()
                .zip(&self.basis)
                .filter(|(&c, _)| c != 0)
                .map(|(&c, m)| (m.clone(), BigInt::from(c))),
        )
    }

    pub fn display_elem(&self, a: &Elem) -> String {
        self.to_poly(a).display_with(&self.var_names).to_string()
    }

    /// Enumeration index of an element (base-p digits, basis 0 lowest).
    pub fn index_of(&self, a: &Elem) -> u64 {
        a.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    pub fn elem_at(&self, mut idx: u64) -> Elem {
        let mut v = vec![0; self.dim()];
        for c in v.iter_mut() {
            *c = idx % self.p;
            idx /= self.p;
        }
        v
    }

    /// All elements in index order; refuses when `dim > cap`.
    pub fn elements(&self, cap: usize) -> Result<Vec<Elem>, RingError> {
        if self.dim() > cap {
            return Err(RingError::DimensionCap {
                dim: self.dim(),
                cap,
            });
        }
        Ok((0..self.size()).map(|i| self.elem_at(i)).collect())
    }

    pub fn frobenius(&self, a: &Elem) -> Elem {
        self.pow(a, self.p)
    }

    /// `r^(p^e)`.
    pub fn frobenius_power(&self, a: &Elem, e: u32) -> Elem {
        (0..e).fold(a.clone(), |acc, _| self.frobenius(&acc))
    }

    /// `R^p` as a GF(p)-subspace: the span of `b^p` over the basis (the
    /// Frobenius is GF(p)-linear).
    pub fn pth_power_span(&self) -> &Subspace {
        self.pth_span.get_or_init(|| {
            let imgs: Vec<Elem> = (0..self.dim()).map(|i| self.frobenius(&self.basis_elem(i))).collect();
            Subspace::spanned_by(self.p, self.dim(), &imgs)
        })
    }

    /// Basis of `{t : t^p = 0}`.
    pub fn frobenius_kernel(&self) -> Vec<Elem> {
        let d = self.dim();
        let imgs: Vec<Elem> = (0..d).map(|i| self.frobenius(&self.basis_elem(i))).collect();
        // Rows of the matrix whose columns are the images.
        let rows: Vec<Vec<u64>> = (0..d).map(|k| imgs.iter().map(|v| v[k]).collect()).collect();
        nullspace(self.p, d, &rows)
    }

    /// Reducedness, with a witness `t != 0`, `t^p = 0` otherwise.
    pub fn is_reduced(&self) -> Reducedness {
        match self.frobenius_kernel().into_iter().next() {
            None => Reducedness::Reduced,
            Some(t) => Reducedness::Nilpotent {
                witness: self.display_elem(&t),
                exponent: 1,
            },
        }
    }

    pub fn describe(&self) -> String {
        let mut s = format!("GF({})[{}]", self.p, self.var_names.join(","));
        if !self.relations.is_empty() {
            let rels: Vec<String> = self
                .relations
                .iter()
                .map(|r| r.display_with(&self.var_names).to_string())
                .collect();
            s.push_str(&format!("/({})", rels.join(", ")));
        }
        s
    }
}

impl MaximalIdeal {
    pub fn gens(&self) -> &[SparsePoly] {
        &self.gens
    }

    /// Smallest `k` with `m^k = 0`.
    pub fn nilpotency_index(&self) -> usize {
        self.powers.len() - 1
    }

    pub fn contains_power(&self, a: &Elem, k: usize) -> bool {
        match self.powers.get(k) {
            Some(s) => s.contains(a),
            None => a.iter().all(|&c| c == 0),
        }
    }

    /// Largest `k` with `a ∈ m^k` (`usize::MAX` for zero).
    pub fn order(&self, a: &Elem) -> usize {
        if a.iter().all(|&c| c == 0) {
            return usize::MAX;
        }
        (0..self.powers.len())
            .rev()
            .find(|&k| self.powers[k].contains(a))
            .unwrap_or(0)
    }
}

/// Outcome of a reducedness check.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Reducedness {
    Reduced,
    /// `witness^(p^exponent) = 0` with `witness != 0`.
    Nilpotent { witness: String, exponent: u32 },
}

impl Reducedness {
    pub fn is_reduced(&self) -> bool {
        matches!(self, Reducedness::Reduced)
    }
}

impl CoeffRing for FiniteAlgebra {
    type Elem = Elem;

    fn zero(&self) -> Elem {
        vec![0; self.dim()]
    }
    fn one(&self) -> Elem {
        self.scalar(1)
    }
    fn add(&self, a: &Elem, b: &Elem) -> Elem {
        a.iter().zip(b).map(|(&x, &y)| (x + y) % self.p).collect()
    }
    fn neg(&self, a: &Elem) -> Elem {
        a.iter().map(|&x| modp::neg(x, self.p)).collect()
    }
    fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| (x + modp::neg(y, self.p)) % self.p)
            .collect()
    }
    fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        let d = self.dim();
        let p = self.p;
        let mut out = vec![0u64; d];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                let c = modp::mul(ai, bj, p);
                let row = &self.table[(i * d + j) * d..(i * d + j + 1) * d];
                for (o, &t) in out.iter_mut().zip(row) {
                    if t != 0 {
                        *o = (*o + modp::mul(c, t, p)) % p;
                    }
                }
            }
        }
        out
    }
    fn embed_int(&self, c: &BigInt) -> Elem {
        self.scalar(c.mod_floor(&BigInt::from(self.p)).to_u64().expect("reduced"))
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn is_zero(&self, a: &Elem) -> bool {
        a.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for FiniteAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

/// Standard monomials of a zero-dimensional ideal in ascending order.
fn standard_monomials(ideal: &IdealBasis, cap: usize) -> Result<Vec<Monomial>, RingError> {
    let n = ideal.nvars();
    let mut seen: BTreeSet<Monomial> = BTreeSet::new();
    let mut frontier = vec![Monomial::one(n)];
    while let Some(m) = frontier.pop() {
        if !ideal.is_standard(&m) || !seen.insert(m.clone()) {
            continue;
        }
        if seen.len() > cap {
            return Err(RingError::DimensionCap {
                dim: seen.len(),
                cap,
            });
        }
        for v in 0..n {
            frontier.push(m.checked_mul(&Monomial::var(n, v, 1))?);
        }
    }
    let mut out: Vec<Monomial> = seen.into_iter().collect();
    out.sort_by(|a, b| ideal.order().cmp(a, b));
    Ok(out)
}

/// Coefficients (constant first) of the smallest monic irreducible
/// polynomial of degree `k` over GF(p), ordered by the base-p value of the
/// lower coefficients.
pub fn irreducible_poly(p: u64, k: u32) -> Vec<u64> {
    let count = p.pow(k);
    for code in 0..count {
        let mut f: Vec<u64> = (0..k).map(|i| (code / p.pow(i)) % p).collect();
        f.push(1);
        if is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

fn is_irreducible(f: &[u64], p: u64) -> bool {
    let deg = f.len() - 1;
    if deg <= 1 {
        return true;
    }
    for d in 1..=deg / 2 {
        for code in 0..p.pow(d as u32) {
            let mut g: Vec<u64> = (0..d).map(|i| (code / p.pow(i as u32)) % p).collect();
            g.push(1);
            if poly_rem(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Remainder of univariate `f` by monic `g`.
fn poly_rem(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    while r.len() > dg {
        let lead = *r.last().expect("nonempty");
        let shift = r.len() - 1 - dg;
        if lead != 0 {
            for (i, &c) in g.iter().enumerate() {
                r[shift + i] = (r[shift + i] + modp::mul(modp::neg(lead, p), c, p)) % p;
            }
        }
        r.pop();
    }
    r
}
