//! Affine linear systems over GF(p) with infeasibility certificates, and
//! small subspace utilities.
//!
//! Rows are eliminated incrementally into echelon form as they arrive. Each
//! stored row remembers which input equations it combines, so a row that
//! collapses to `0 = c` with `c != 0` yields a Farkas-style certificate:
//! weights `y` with `y·A = 0` and `y·b = 1`.

use serde::{Deserialize, Serialize};

use super::modp;

/// Sparse equation `Σ coeffs = rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Equation {
    pub coeffs: Vec<(usize, u64)>,
    pub rhs: u64,
}

/// Weights on input equations whose combination reads `0 = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub weights: Vec<(usize, u64)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solution {
    Feasible(Vec<u64>),
    Infeasible(Certificate),
}

trait Row: Clone {
    fn new(ncols: usize) -> Self;
    fn set(&mut self, col: usize, v: u64, p: u64);
    fn get(&self, col: usize) -> u64;
    /// `self -= c * other` on both coefficients and certificate.
    fn sub_scaled(&mut self, c: u64, other: &Self, p: u64);
    fn scale(&mut self, c: u64, p: u64);
    /// Lowest column `>= from` holding a nonzero coefficient.
    fn next_nonzero(&self, from: usize, ncols: usize) -> Option<usize>;
    fn set_cert(&mut self, eq: usize, v: u64);
    fn cert(&self) -> Vec<(usize, u64)>;
}

/// GF(2) row: coefficients and rhs packed in one bitset; certificate as a
/// growable bitset over equations.
#[derive(Clone)]
struct BitRow {
    bits: Vec<u64>,
    cert: Vec<u64>,
}

impl Row for BitRow {
    fn new(ncols: usize) -> Self {
        BitRow {
            bits: vec![0; (ncols + 1).div_ceil(64)],
            cert: Vec::new(),
        }
    }
    fn set(&mut self, col: usize, v: u64, _p: u64) {
        let (w, b) = (col / 64, col % 64);
        if v & 1 == 1 {
            self.bits[w] |= 1 << b;
        } else {
            self.bits[w] &= !(1 << b);
        }
    }
    fn get(&self, col: usize) -> u64 {
        (self.bits[col / 64] >> (col % 64)) & 1
    }
    fn sub_scaled(&mut self, c: u64, other: &Self, _p: u64) {
        if c & 1 == 0 {
            return;
        }
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a ^= b;
        }
        if self.cert.len() < other.cert.len() {
            self.cert.resize(other.cert.len(), 0);
        }
        for (a, b) in self.cert.iter_mut().zip(&other.cert) {
            *a ^= b;
        }
    }
    fn scale(&mut self, _c: u64, _p: u64) {}
    fn next_nonzero(&self, from: usize, ncols: usize) -> Option<usize> {
        let mut w = from / 64;
        let mut word = self.bits.get(w)? & (!0u64 << (from % 64));
        loop {
            if word != 0 {
                let c = w * 64 + word.trailing_zeros() as usize;
                return (c < ncols).then_some(c);
            }
            w += 1;
            word = *self.bits.get(w)?;
        }
    }
    fn set_cert(&mut self, eq: usize, v: u64) {
        let w = eq / 64;
        if self.cert.len() <= w {
            self.cert.resize(w + 1, 0);
        }
        if v & 1 == 1 {
            self.cert[w] |= 1 << (eq % 64);
        }
    }
    fn cert(&self) -> Vec<(usize, u64)> {
        let mut out = Vec::new();
        for (w, &word) in self.cert.iter().enumerate() {
            let mut x = word;
            while x != 0 {
                out.push((w * 64 + x.trailing_zeros() as usize, 1));
                x &= x - 1;
            }
        }
        out
    }
}

/// Dense row for odd p; the certificate is kept sparse.
#[derive(Clone)]
struct DenseRow {
    vals: Vec<u64>,
    cert: Vec<(usize, u64)>,
}

impl Row for DenseRow {
    fn new(ncols: usize) -> Self {
        DenseRow {
            vals: vec![0; ncols + 1],
            cert: Vec::new(),
        }
    }
    fn set(&mut self, col: usize, v: u64, p: u64) {
        self.vals[col] = v % p;
    }
    fn get(&self, col: usize) -> u64 {
        self.vals[col]
    }
    fn sub_scaled(&mut self, c: u64, other: &Self, p: u64) {
        if c == 0 {
            return;
        }
        let nc = modp::neg(c, p);
        for (a, &b) in self.vals.iter_mut().zip(&other.vals) {
            if b != 0 {
                *a = (*a + modp::mul(nc, b, p)) % p;
            }
        }
        let mut merged: Vec<(usize, u64)> = Vec::with_capacity(self.cert.len() + other.cert.len());
        let (mut i, mut j) = (0, 0);
        while i < self.cert.len() || j < other.cert.len() {
            let take_self = j >= other.cert.len() || (i < self.cert.len() && self.cert[i].0 < other.cert[j].0);
            let take_other = i >= self.cert.len() || (j < other.cert.len() && other.cert[j].0 < self.cert[i].0);
            if take_self {
                merged.push(self.cert[i]);
                i += 1;
            } else if take_other {
                merged.push((other.cert[j].0, modp::mul(nc, other.cert[j].1, p)));
                j += 1;
            } else {
                let v = (self.cert[i].1 + modp::mul(nc, other.cert[j].1, p)) % p;
                if v != 0 {
                    merged.push((self.cert[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
        self.cert = merged;
    }
    fn scale(&mut self, c: u64, p: u64) {
        for a in self.vals.iter_mut() {
            *a = modp::mul(*a, c, p);
        }
        for e in self.cert.iter_mut() {
            e.1 = modp::mul(e.1, c, p);
        }
    }
    fn next_nonzero(&self, from: usize, ncols: usize) -> Option<usize> {
        (from..ncols).find(|&c| self.vals[c] != 0)
    }
    fn set_cert(&mut self, eq: usize, v: u64) {
        self.cert = vec![(eq, v)];
    }
    fn cert(&self) -> Vec<(usize, u64)> {
        self.cert.clone()
    }
}

struct Echelon<R: Row> {
    p: u64,
    ncols: usize,
    /// `pivot_of[c]` indexes the stored row whose leading column is `c`.
    pivot_of: Vec<Option<usize>>,
    rows: Vec<R>,
    conflict: Option<Certificate>,
}

impl<R: Row> Echelon<R> {
    fn new(p: u64, ncols: usize) -> Self {
        Echelon {
            p,
            ncols,
            pivot_of: vec![None; ncols],
            rows: Vec::new(),
            conflict: None,
        }
    }

    fn insert(&mut self, eq_index: usize, eq: &Equation) {
        let p = self.p;
        let mut row = R::new(self.ncols);
        for &(c, v) in &eq.coeffs {
            let cur = row.get(c);
            row.set(c, (cur + v % p) % p, p);
        }
        row.set(self.ncols, eq.rhs % p, p);
        row.set_cert(eq_index, 1);
        let mut col = 0;
        while let Some(c) = row.next_nonzero(col, self.ncols) {
            match self.pivot_of[c] {
                Some(k) => {
                    let f = row.get(c);
                    row.sub_scaled(f, &self.rows[k], p);
                    col = c + 1;
                }
                None => {
                    let inv = modp::inv(row.get(c), p);
                    row.scale(inv, p);
                    self.pivot_of[c] = Some(self.rows.len());
                    self.rows.push(row);
                    return;
                }
            }
        }
        let rhs = row.get(self.ncols);
        if rhs != 0 && self.conflict.is_none() {
            let inv = modp::inv(rhs, p);
            row.scale(inv, p);
            self.conflict = Some(Certificate { weights: row.cert() });
        }
    }

    fn solve(&self) -> Solution {
        if let Some(c) = &self.conflict {
            return Solution::Infeasible(c.clone());
        }
        let p = self.p;
        let mut x = vec![0u64; self.ncols];
        for c in (0..self.ncols).rev() {
            let Some(k) = self.pivot_of[c] else { continue };
            let row = &self.rows[k];
            let mut v = row.get(self.ncols);
            let mut col = c + 1;
            while let Some(d) = row.next_nonzero(col, self.ncols) {
                v = (v + modp::neg(modp::mul(row.get(d), x[d], p), p)) % p;
                col = d + 1;
            }
            x[c] = v;
        }
        Solution::Feasible(x)
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }
}

enum Engine {
    Binary(Echelon<BitRow>),
    Dense(Echelon<DenseRow>),
}

/// An affine system over GF(p) built row by row. Free variables are set to
/// zero in the returned solution, and pivots are chosen by lowest column,
/// so results are deterministic.
pub struct LinearSystem {
    p: u64,
    ncols: usize,
    equations: Vec<Equation>,
    engine: Engine,
}

impl LinearSystem {
    pub fn new(p: u64, ncols: usize) -> Self {
        let engine = if p == 2 {
            Engine::Binary(Echelon::new(p, ncols))
        } else {
            Engine::Dense(Echelon::new(p, ncols))
        };
        LinearSystem {
            p,
            ncols,
            equations: Vec::new(),
            engine,
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn equations(&self) -> &[Equation] {
        &self.equations
    }

    /// Adds `Σ coeffs = rhs` and returns its index.
    pub fn push(&mut self, coeffs: Vec<(usize, u64)>, rhs: u64) -> usize {
        let eq = Equation { coeffs, rhs: rhs % self.p };
        let idx = self.equations.len();
        match &mut self.engine {
            Engine::Binary(e) => e.insert(idx, &eq),
            Engine::Dense(e) => e.insert(idx, &eq),
        }
        self.equations.push(eq);
        idx
    }

    pub fn is_inconsistent(&self) -> bool {
        match &self.engine {
            Engine::Binary(e) => e.conflict.is_some(),
            Engine::Dense(e) => e.conflict.is_some(),
        }
    }

    pub fn rank(&self) -> usize {
        match &self.engine {
            Engine::Binary(e) => e.rank(),
            Engine::Dense(e) => e.rank(),
        }
    }

    pub fn solve(&self) -> Solution {
        match &self.engine {
            Engine::Binary(e) => e.solve(),
            Engine::Dense(e) => e.solve(),
        }
    }
}

/// Checks `A x = b` directly against the stored equations.
pub fn check_solution(p: u64, equations: &[Equation], x: &[u64]) -> bool {
    equations.iter().all(|eq| {
        let lhs = eq
            .coeffs
            .iter()
            .fold(0u64, |acc, &(c, v)| (acc + modp::mul(v % p, x[c], p)) % p);
        lhs == eq.rhs % p
    })
}

/// Checks that the weighted combination of equations reads `0 = 1`.
pub fn check_certificate(p: u64, ncols: usize, equations: &[Equation], cert: &Certificate) -> bool {
    let mut lhs = vec![0u64; ncols];
    let mut rhs = 0u64;
    for &(i, w) in &cert.weights {
        let Some(eq) = equations.get(i) else {
            return false;
        };
        for &(c, v) in &eq.coeffs {
            lhs[c] = (lhs[c] + modp::mul(w, v % p, p)) % p;
        }
        rhs = (rhs + modp::mul(w, eq.rhs, p)) % p;
    }
    lhs.iter().all(|&v| v == 0) && rhs == 1
}

/// A subspace of GF(p)^d held in reduced row echelon form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    p: u64,
    dim: usize,
    /// Rows sorted by pivot column; each pivot entry is 1 and the pivot
    /// column is zero in every other row.
    rows: Vec<(usize, Vec<u64>)>,
}

impl Subspace {
    pub fn new(p: u64, dim: usize) -> Self {
        Subspace {
            p,
            dim,
            rows: Vec::new(),
        }
    }

    pub fn spanned_by<'a>(p: u64, dim: usize, vecs: impl IntoIterator<Item = &'a Vec<u64>>) -> Self {
        let mut s = Self::new(p, dim);
        for v in vecs {
            s.insert(v);
        }
        s
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    /// Reduces `v` to its canonical residue, supported off the pivot columns.
    pub fn reduce(&self, v: &[u64]) -> Vec<u64> {
        let p = self.p;
        let mut r: Vec<u64> = v.iter().map(|&a| a % p).collect();
        for (c, row) in &self.rows {
            let f = r[*c];
            if f != 0 {
                let nf = modp::neg(f, p);
                for (a, &b) in r.iter_mut().zip(row) {
                    if b != 0 {
                        *a = (*a + modp::mul(nf, b, p)) % p;
                    }
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.reduce(v).iter().all(|&a| a == 0)
    }

    /// Adds `v`; returns whether the rank grew.
    pub fn insert(&mut self, v: &[u64]) -> bool {
        let p = self.p;
        let mut r = self.reduce(v);
        let Some(c) = r.iter().position(|&a| a != 0) else {
            return false;
        };
        let inv = modp::inv(r[c], p);
        for a in r.iter_mut() {
            *a = modp::mul(*a, inv, p);
        }
        for (_, row) in self.rows.iter_mut() {
            let f = row[c];
            if f != 0 {
                let nf = modp::neg(f, p);
                for (a, &b) in row.iter_mut().zip(&r) {
                    if b != 0 {
                        *a = (*a + modp::mul(nf, b, p)) % p;
                    }
                }
            }
        }
        let pos = self.rows.partition_point(|(d, _)| *d < c);
        self.rows.insert(pos, (c, r));
        true
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|(c, _)| *c).collect()
    }

    /// Coordinates outside the pivot set: unit vectors there span a complement.
    pub fn complement_coords(&self) -> Vec<usize> {
        let piv = self.pivots();
        (0..self.dim).filter(|c| !piv.contains(c)).collect()
    }

    /// Coefficients of `v` (which must lie in the subspace) on the echelon rows.
    pub fn coordinates(&self, v: &[u64]) -> Option<Vec<u64>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.rows.iter().map(|(c, _)| v[*c] % self.p).collect())
    }

    pub fn basis(&self) -> Vec<Vec<u64>> {
        self.rows.iter().map(|(_, r)| r.clone()).collect()
    }
}

/// Basis of `{x : M x = 0}` for a dense `rows × ncols` matrix.
pub fn nullspace(p: u64, ncols: usize, matrix: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let s = Subspace::spanned_by(p, ncols, matrix);
    let mut out = Vec::new();
    for free in s.complement_coords() {
        let mut x = vec![0u64; ncols];
        x[free] = 1;
        for (c, row) in &s.rows {
            x[*c] = modp::neg(row[free], p);
        }
        out.push(x);
    }
    out
}
