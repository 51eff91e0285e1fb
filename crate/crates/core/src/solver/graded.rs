//! Degree-truncated splitting systems for graded hypersurfaces.
//!
//! A splitting may be taken homogeneous of degree 0, so it is determined
//! block by block.
//!
//! * `n = 1`: unknowns `σ̃(m) ∈ R_e` for standard monomials `m ∈ R_{pe}`,
//!   with `σ̃(x_j^p m) = x_j σ̃(m)`.
//! * `n = 2`, `p = 2`: a class `(a_0, a_1) = [a_0] + V[a_1]` carries
//!   `σ̃(a_0) + λ(a_1)`. Here `λ(b) ∈ R_e` for `b ∈ R_{4e}` is additive and
//!   kills squares, so it has unknowns on a complement of the square span.
//!   Teichmüller lifts add with carry `[a] + [b] = [a + b] + V[ab]`, so
//!   `σ̃(Σ m_k) = Σ σ̃(m_k) + λ(Σ_{k<l} m_k m_l)`. The action of `x_j` is
//!   `[x_j^2]·[a] = [x_j^2 a]` and `[x_j^2]·V[b] = V[x_j^4 b]`.
//!
//! Both cases add the section constraints `σ(Φ(u)) = u` on monomials. A
//! constraint is kept only when every unknown it mentions has degree at most
//! `D`. Dropping constraints can only enlarge the solution set, so an
//! infeasible truncation certifies that no splitting exists.

use std::collections::BTreeMap;

use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::arith::linsys::{check_certificate, check_solution, Certificate, LinearSystem, Solution, Subspace};
use crate::arith::ring::CoeffRing;
use crate::arith::{Monomial, SparsePoly};
use crate::ring_model::GradedQuotient;
use crate::witt::Witt;

use super::SolverError;

/// A vector in `R_e` whose coordinates are affine forms in the unknowns.
#[derive(Debug, Clone)]
struct FormVec {
    forms: Vec<BTreeMap<usize, u64>>,
    constants: Vec<u64>,
}

impl FormVec {
    fn zero(len: usize) -> Self {
        FormVec {
            forms: vec![BTreeMap::new(); len],
            constants: vec![0; len],
        }
    }

    fn add_var(&mut self, t: usize, var: usize, c: u64, p: u64) {
        let e = self.forms[t].entry(var).or_insert(0);
        *e = (*e + c) % p;
        if *e == 0 {
            self.forms[t].remove(&var);
        }
    }

    fn add_scaled(&mut self, other: &FormVec, c: u64, p: u64) {
        for (t, f) in other.forms.iter().enumerate() {
            for (&v, &k) in f {
                self.add_var(t, v, k * c % p, p);
            }
            self.constants[t] = (self.constants[t] + other.constants[t] * c) % p;
        }
    }
}

/// Layout of the unknowns.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct Layout {
    /// `dim R_d` for `d = 0..=p^n D`.
    dims: Vec<usize>,
    sigma_offset: Vec<usize>,
    /// Coordinates of `R_{4e}` outside the square span (n = 2).
    complement: Vec<Vec<usize>>,
    lambda_offset: Vec<usize>,
    total: usize,
}

/// The assembled system for one `(n, D)`.
pub struct GradedSystem<'a> {
    ring: &'a GradedQuotient,
    n: usize,
    degree_cap: u32,
    layout: Layout,
    squares: Vec<Subspace>,
    sys: LinearSystem,
}

impl<'a> GradedSystem<'a> {
    pub fn assemble(ring: &'a GradedQuotient, n: usize, degree_cap: u32) -> Result<Self, SolverError> {
        let p = ring.p();
        match n {
            1 => {}
            2 if p == 2 => {}
            2 => return Err(SolverError::Unsupported(format!("graded systems at n = 2 need p = 2, got p = {p}"))),
            _ => return Err(SolverError::Unsupported(format!("graded systems support n ≤ 2, got n = {n}"))),
        }
        if degree_cap < 2 {
            return Err(SolverError::DegreeTooSmall(degree_cap));
        }
        let reduced = ring.is_reduced()?;
        if let crate::ring_model::Reducedness::Nilpotent { witness, .. } = reduced {
            return Err(SolverError::NotReduced(witness));
        }
        let big = p.pow(n as u32) as usize;
        let top = big * degree_cap as usize;
        let dims: Vec<usize> = (0..=top).map(|d| ring.graded_piece_basis(d as u32).len()).collect();
        let mut total = 0;
        let mut sigma_offset = Vec::new();
        for e in 0..=degree_cap as usize {
            sigma_offset.push(total);
            total += dims[p as usize * e] * dims[e];
        }
        let mut squares = Vec::new();
        let mut complement = Vec::new();
        let mut lambda_offset = Vec::new();
        if n == 2 {
            for e in 0..=degree_cap {
                let piece = ring.graded_piece_basis(2 * e);
                let sq: Vec<Vec<u64>> = piece
                    .monomials
                    .iter()
                    .map(|m| ring.coords(&ring.nf_monomial(&m.checked_pow(2).expect("degree")), 4 * e))
                    .collect();
                let span = Subspace::spanned_by(2, dims[4 * e as usize], &sq);
                complement.push(span.complement_coords());
                squares.push(span);
                lambda_offset.push(total);
                total += complement[e as usize].len() * dims[e as usize];
            }
        }
        let layout = Layout {
            dims,
            sigma_offset,
            complement,
            lambda_offset,
            total,
        };
        let mut me = GradedSystem {
            ring,
            n,
            degree_cap,
            sys: LinearSystem::new(p, total),
            layout,
            squares,
        };
        me.build()?;
        Ok(me)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree_cap(&self) -> u32 {
        self.degree_cap
    }

    pub fn unknowns(&self) -> usize {
        self.layout.total
    }

    pub fn equations(&self) -> usize {
        self.sys.equations().len()
    }

    pub fn system(&self) -> &LinearSystem {
        &self.sys
    }

    fn p(&self) -> u64 {
        self.ring.p()
    }

    fn sigma_var(&self, e: usize, i: usize, t: usize) -> usize {
        self.layout.sigma_offset[e] + i * self.layout.dims[e] + t
    }

    fn lambda_var(&self, e: usize, c: usize, t: usize) -> usize {
        self.layout.lambda_offset[e] + c * self.layout.dims[e] + t
    }

    fn coeff(c: &num_bigint::BigInt) -> u64 {
        c.to_u64().expect("reduced coefficient")
    }

    /// `σ̃(m)` for a standard monomial `m ∈ R_{pe}`.
    fn sigma_unknown(&self, e: usize, m: &Monomial) -> FormVec {
        let p = self.p();
        let piece = self.ring.graded_piece_basis((p as usize * e) as u32);
        let i = piece.index_of(m).expect("standard monomial");
        let mut out = FormVec::zero(self.layout.dims[e]);
        for t in 0..self.layout.dims[e] {
            out.add_var(t, self.sigma_var(e, i, t), 1, p);
        }
        out
    }

    /// `λ(b)` for a normal form `b ∈ R_{4e}`.
    fn lambda_of(&self, e: usize, b: &SparsePoly) -> FormVec {
        let residue = self.squares[e].reduce(&self.ring.coords(b, 4 * e as u32));
        let mut out = FormVec::zero(self.layout.dims[e]);
        for (ci, &k) in self.layout.complement[e].iter().enumerate() {
            if residue[k] != 0 {
                for t in 0..self.layout.dims[e] {
                    out.add_var(t, self.lambda_var(e, ci, t), residue[k], 2);
                }
            }
        }
        out
    }

    /// `σ([a])` for a normal form `a ∈ R_{pe}`, carries included.
    fn sigma_of(&self, e: usize, a: &SparsePoly) -> FormVec {
        let p = self.p();
        let mut out = FormVec::zero(self.layout.dims[e]);
        let terms: Vec<(&Monomial, u64)> = a.terms().map(|(m, c)| (m, Self::coeff(c))).collect();
        for &(m, c) in &terms {
            out.add_scaled(&self.sigma_unknown(e, m), c, p);
        }
        if self.n == 2 && terms.len() > 1 {
            let mut carry = SparsePoly::zero(a.domain(), a.nvars());
            for (k, &(mk, _)) in terms.iter().enumerate() {
                for &(ml, _) in &terms[k + 1..] {
                    carry = &carry + &self.ring.nf_monomial(&mk.checked_mul(ml).expect("degree"));
                }
            }
            out.add_scaled(&self.lambda_of(e, &carry), 1, p);
        }
        out
    }

    /// `x_j · v` for `v ∈ R_e`.
    fn times_var(&self, j: usize, e: usize, v: &FormVec) -> FormVec {
        let p = self.p();
        let src = self.ring.graded_piece_basis(e as u32);
        let dst = self.ring.graded_piece_basis(e as u32 + 1);
        let mut out = FormVec::zero(dst.len());
        let xj = Monomial::var(self.ring.nvars(), j, 1);
        for (s, u) in src.monomials.iter().enumerate() {
            let img = self.ring.nf_monomial(&u.checked_mul(&xj).expect("degree"));
            for (m, c) in img.terms() {
                let t = dst.index_of(m).expect("homogeneous");
                let c = Self::coeff(c);
                for (&var, &k) in &v.forms[s] {
                    out.add_var(t, var, k * c % p, p);
                }
                out.constants[t] = (out.constants[t] + v.constants[s] * c) % p;
            }
        }
        out
    }

    /// Pushes `lhs - rhs = 0` coordinatewise.
    fn push_equal(&mut self, lhs: &FormVec, rhs: &FormVec) {
        let p = self.p();
        let mut diff = lhs.clone();
        diff.add_scaled(rhs, p - 1, p);
        for (f, c) in diff.forms.into_iter().zip(diff.constants) {
            if f.is_empty() && c == 0 {
                continue;
            }
            self.sys.push(f.into_iter().collect(), (p - c) % p);
        }
    }

    fn build(&mut self) -> Result<(), SolverError> {
        let p = self.p();
        let nv = self.ring.nvars();
        let dcap = self.degree_cap as usize;
        // Section constraints σ(Φ(u)) = u.
        for e in 0..=dcap {
            let piece = self.ring.graded_piece_basis(e as u32);
            for (s, u) in piece.monomials.iter().enumerate() {
                let img = self.ring.nf_monomial(&u.checked_pow(p as u32)?);
                let lhs = self.sigma_of(e, &img);
                let mut rhs = FormVec::zero(piece.len());
                rhs.constants[s] = 1;
                self.push_equal(&lhs, &rhs);
            }
        }
        for e in 0..dcap {
            // (i) σ([x_j^p]·[m]) = x_j σ̃(m)
            let piece = self.ring.graded_piece_basis((p as usize * e) as u32);
            for m in piece.monomials.iter() {
                let base = self.sigma_unknown(e, m);
                for j in 0..nv {
                    let shifted = self.ring.nf_monomial(&m.checked_mul(&Monomial::var(nv, j, p as u16))?);
                    let lhs = self.sigma_of(e + 1, &shifted);
                    let rhs = self.times_var(j, e, &base);
                    self.push_equal(&lhs, &rhs);
                }
            }
            // (ii) λ(x_j^4 b) = x_j λ(b)
            if self.n == 2 {
                let quad = self.ring.graded_piece_basis(4 * e as u32);
                for &k in &self.layout.complement[e].clone() {
                    let b = &quad.monomials[k];
                    let base = self.lambda_of(e, &self.ring.nf_monomial(b));
                    for j in 0..nv {
                        let shifted = self.ring.nf_monomial(&b.checked_mul(&Monomial::var(nv, j, 4))?);
                        let lhs = self.lambda_of(e + 1, &shifted);
                        let rhs = self.times_var(j, e, &base);
                        self.push_equal(&lhs, &rhs);
                    }
                }
            }
        }
        Ok(())
    }

    pub fn solve(&self) -> GradedSplit {
        match self.sys.solve() {
            Solution::Infeasible(certificate) => {
                debug_assert!(check_certificate(self.p(), self.unknowns(), self.sys.equations(), &certificate));
                GradedSplit::NotSplit {
                    degree_cap: self.degree_cap,
                    unknowns: self.unknowns(),
                    equations: self.equations(),
                    certificate,
                }
            }
            Solution::Feasible(x) => {
                debug_assert!(check_solution(self.p(), self.sys.equations(), &x));
                GradedSplit::FeasibleUpTo {
                    degree_cap: self.degree_cap,
                    unknowns: self.unknowns(),
                    equations: self.equations(),
                    rank: self.sys.rank(),
                    sigma: self.extract(&x),
                }
            }
        }
    }

    fn extract(&self, x: &[u64]) -> GradedSigma {
        let p = self.p();
        let dims = &self.layout.dims;
        let mut sigma = Vec::new();
        let mut lambda = Vec::new();
        for e in 0..=self.degree_cap as usize {
            let rows = dims[p as usize * e];
            sigma.push(
                (0..rows)
                    .map(|i| (0..dims[e]).map(|t| x[self.sigma_var(e, i, t)]).collect())
                    .collect(),
            );
            if self.n == 2 {
                lambda.push(
                    (0..self.layout.complement[e].len())
                        .map(|c| (0..dims[e]).map(|t| x[self.lambda_var(e, c, t)]).collect())
                        .collect(),
                );
            }
        }
        GradedSigma {
            p,
            n: self.n,
            degree_cap: self.degree_cap,
            sigma,
            lambda,
            complement: self.layout.complement.clone(),
        }
    }
}

/// Values of a degree-truncated splitting.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedSigma {
    pub p: u64,
    pub n: usize,
    pub degree_cap: u32,
    /// `sigma[e][i]`: coordinates in `R_e` of `σ̃` on the i-th monomial of `R_{pe}`.
    pub sigma: Vec<Vec<Vec<u64>>>,
    /// `lambda[e][c]`: coordinates in `R_e` of `λ` on the c-th complement
    /// monomial of `R_{4e}`.
    pub lambda: Vec<Vec<Vec<u64>>>,
    pub complement: Vec<Vec<usize>>,
}

/// One nonzero value of a graded splitting, printed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaEntry {
    pub map: String,
    pub degree: u32,
    pub argument: String,
    pub value: String,
}

impl GradedSigma {
    pub fn entries(&self, ring: &GradedQuotient) -> Vec<SigmaEntry> {
        let names = ring.var_names();
        let mut out = Vec::new();
        let mut push = |map: &str, e: usize, m: &Monomial, v: &[u64]| {
            if v.iter().any(|&c| c != 0) {
                out.push(SigmaEntry {
                    map: map.into(),
                    degree: e as u32,
                    argument: SparsePoly::monomial(crate::arith::Domain::Gfp(self.p), m.clone(), 1)
                        .display_with(names)
                        .to_string(),
                    value: ring.from_coords(v, e as u32).display_with(names).to_string(),
                });
            }
        };
        for (e, rows) in self.sigma.iter().enumerate() {
            let piece = ring.graded_piece_basis((self.p as usize * e) as u32);
            for (i, v) in rows.iter().enumerate() {
                push("sigma", e, &piece.monomials[i], v);
            }
        }
        for (e, rows) in self.lambda.iter().enumerate() {
            let piece = ring.graded_piece_basis(4 * e as u32);
            for (c, v) in rows.iter().enumerate() {
                push("lambda", e, &piece.monomials[self.complement[e][c]], v);
            }
        }
        out
    }

    fn lambda_eval(&self, ring: &GradedQuotient, e: usize, b: &SparsePoly) -> SparsePoly {
        let piece = ring.graded_piece_basis(2 * e as u32);
        let sq: Vec<Vec<u64>> = piece
            .monomials
            .iter()
            .map(|m| ring.coords(&ring.nf_monomial(&m.checked_pow(2).expect("degree")), 4 * e as u32))
            .collect();
        let span = Subspace::spanned_by(2, ring.graded_piece_basis(4 * e as u32).len(), &sq);
        let residue = span.reduce(&ring.coords(b, 4 * e as u32));
        let mut acc = vec![0u64; ring.graded_piece_basis(e as u32).len()];
        for (ci, &k) in self.complement[e].iter().enumerate() {
            if residue[k] != 0 {
                for (a, v) in acc.iter_mut().zip(&self.lambda[e][ci]) {
                    *a ^= v;
                }
            }
        }
        ring.from_coords(&acc, e as u32)
    }

    /// `σ̃` extended additively over `R_{pe}`, ignoring carries.
    fn sigma_linear(&self, ring: &GradedQuotient, e: usize, a: &SparsePoly) -> SparsePoly {
        let p = self.p;
        let piece = ring.graded_piece_basis((p as usize * e) as u32);
        let mut acc = vec![0u64; ring.graded_piece_basis(e as u32).len()];
        for (m, c) in a.terms() {
            let c = c.to_u64().expect("reduced");
            let i = piece.index_of(m).expect("standard monomial");
            for (x, v) in acc.iter_mut().zip(&self.sigma[e][i]) {
                *x = (*x + c * v) % p;
            }
        }
        ring.from_coords(&acc, e as u32)
    }

    /// `σ` of a homogeneous Witt vector of Q-degree `e`: `a_0 ∈ R_{pe}` and,
    /// at `n = 2`, `a_1 ∈ R_{4e}`. The carry is taken from the Witt sum of the
    /// Teichmüller lifts of the terms of `a_0`.
    pub fn eval(&self, ring: &GradedQuotient, e: usize, a: &[SparsePoly]) -> Result<SparsePoly, SolverError> {
        if self.n == 1 {
            return Ok(self.sigma_linear(ring, e, &a[0]));
        }
        let w = Witt::new(ring, 2, 2)?;
        let mut lifts = w.zero();
        for (m, _) in a[0].terms() {
            let t = SparsePoly::monomial(a[0].domain(), m.clone(), 1);
            lifts = w.add(&lifts, &w.teichmuller(&t))?;
        }
        // a - Σ [m_k] = V[b] with b ∈ R_{4e}
        let rest = w.sub(a, &lifts)?;
        debug_assert!(rest[0].is_zero());
        let b = ring.normal_form(&rest[1])?;
        let s = &self.sigma_linear(ring, e, &a[0]) + &self.lambda_eval(ring, e, &b);
        Ok(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum GradedSplit {
    NotSplit {
        degree_cap: u32,
        unknowns: usize,
        equations: usize,
        certificate: Certificate,
    },
    FeasibleUpTo {
        degree_cap: u32,
        unknowns: usize,
        equations: usize,
        rank: usize,
        sigma: GradedSigma,
    },
}

impl GradedSplit {
    pub fn is_feasible(&self) -> bool {
        matches!(self, GradedSplit::FeasibleUpTo { .. })
    }
}

/// Assembles and solves the system for `(n, D)`.
pub fn split_graded_system(ring: &GradedQuotient, n: usize, degree_cap: u32) -> Result<GradedSplit, SolverError> {
    Ok(GradedSystem::assemble(ring, n, degree_cap)?.solve())
}

fn random_piece(ring: &GradedQuotient, d: u32, rng: &mut ChaCha8Rng) -> SparsePoly {
    let len = ring.graded_piece_basis(d).len();
    let v: Vec<u64> = (0..len).map(|_| rng.gen_range(0..ring.p())).collect();
    ring.from_coords(&v, d)
}

/// Re-checks a feasible truncated splitting with Witt arithmetic over the
/// graded ring, on seeded random homogeneous inputs:
/// `σ([r^p]) = r`, `σ([x_j^p]·α) = x_j σ(α)`, `σ([r^p]·α) = r σ(α)` and
/// additivity, all within the degree cap.
pub fn verify_graded_splitting(ring: &GradedQuotient, sigma: &GradedSigma, seed: u64, samples: usize) -> Result<bool, SolverError> {
    let p = ring.p();
    let n = sigma.n;
    let dcap = sigma.degree_cap as usize;
    let w = Witt::new(ring, p, n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let nf = |v: Vec<SparsePoly>| -> Result<Vec<SparsePoly>, SolverError> {
        v.iter().map(|c| ring.normal_form(c).map_err(SolverError::from)).collect()
    };
    let random_class = |e: usize, rng: &mut ChaCha8Rng| -> Vec<SparsePoly> {
        (0..n)
            .map(|i| random_piece(ring, (p.pow(i as u32 + 1) as usize * e) as u32, rng))
            .collect()
    };
    for _ in 0..samples {
        let e = rng.gen_range(0..=dcap);
        let r = random_piece(ring, e as u32, &mut rng);
        let lift = nf(w.teichmuller(&ring.pow(&r, p)))?;
        if sigma.eval(ring, e, &lift)? != r {
            return Ok(false);
        }
        let a = random_class(e, &mut rng);
        let b = random_class(e, &mut rng);
        let sum = nf(w.add(&a, &b)?)?;
        if sigma.eval(ring, e, &sum)? != &sigma.eval(ring, e, &a)? + &sigma.eval(ring, e, &b)? {
            return Ok(false);
        }
        if e < dcap {
            let j = rng.gen_range(0..ring.nvars());
            let xj = ring.var(j);
            let moved = nf(w.mul(&w.teichmuller(&ring.pow(&xj, p)), &a)?)?;
            if sigma.eval(ring, e + 1, &moved)? != ring.mul(&xj, &sigma.eval(ring, e, &a)?) {
                return Ok(false);
            }
            let k = rng.gen_range(0..=dcap - e);
            let s = random_piece(ring, k as u32, &mut rng);
            let moved = nf(w.mul(&w.teichmuller(&ring.pow(&s, p)), &a)?)?;
            if sigma.eval(ring, e + k, &moved)? != ring.mul(&s, &sigma.eval(ring, e, &a)?) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Domain;

    fn cone(p: u64, terms: &[[u16; 3]]) -> GradedQuotient {
        let f = SparsePoly::from_terms(
            Domain::Gfp(p),
            3,
            terms.iter().map(|e| (Monomial::from_exps(e.to_vec()), 1.into())),
        );
        GradedQuotient::new(p, vec!["x".into(), "y".into(), "z".into()], vec![f]).unwrap()
    }

    fn supersingular() -> GradedQuotient {
        cone(2, &[[3, 0, 0], [0, 2, 1], [0, 1, 2]])
    }

    fn ordinary() -> GradedQuotient {
        cone(2, &[[3, 0, 0], [0, 0, 3], [0, 2, 1], [1, 1, 1]])
    }

    #[test]
    fn supersingular_is_not_f_split() {
        let r = supersingular();
        let sys = GradedSystem::assemble(&r, 1, 3).unwrap();
        match sys.solve() {
            GradedSplit::NotSplit { certificate, .. } => {
                assert!(check_certificate(2, sys.unknowns(), sys.system().equations(), &certificate));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn ordinary_is_f_split() {
        let r = ordinary();
        let v = split_graded_system(&r, 1, 4).unwrap();
        let GradedSplit::FeasibleUpTo { sigma, .. } = v else {
            panic!("{v:?}")
        };
        assert!(verify_graded_splitting(&r, &sigma, 3, 40).unwrap());
    }

    #[test]
    fn supersingular_height_two_evidence() {
        let r = supersingular();
        let v = split_graded_system(&r, 2, 3).unwrap();
        let GradedSplit::FeasibleUpTo { sigma, .. } = v else {
            panic!("{v:?}")
        };
        assert!(verify_graded_splitting(&r, &sigma, 5, 40).unwrap());
    }

    #[test]
    fn quartic_cone_fails_at_level_two() {
        let r = cone(2, &[[3, 1, 0], [0, 3, 1], [1, 0, 3]]);
        let sys = GradedSystem::assemble(&r, 2, 3).unwrap();
        let GradedSplit::NotSplit { certificate, .. } = sys.solve() else {
            panic!("expected a certificate")
        };
        assert!(check_certificate(2, sys.unknowns(), sys.system().equations(), &certificate));
    }

    #[test]
    fn infeasibility_persists_as_the_cap_grows() {
        let r = supersingular();
        for d in 2..=5 {
            assert!(!split_graded_system(&r, 1, d).unwrap().is_feasible(), "D={d}");
        }
    }

    #[test]
    fn gates_and_limits() {
        let r = cone(2, &[[2, 0, 0]]);
        assert!(matches!(split_graded_system(&r, 1, 3), Err(SolverError::NotReduced(_))));
        let r = cone(3, &[[2, 0, 0], [0, 2, 0], [0, 0, 2]]);
        assert!(matches!(split_graded_system(&r, 2, 3), Err(SolverError::Unsupported(_))));
        assert!(matches!(split_graded_system(&r, 1, 1), Err(SolverError::DegreeTooSmall(1))));
    }
}
