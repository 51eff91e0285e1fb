//! `W̄_n(R) = W_n(R)/p·W_n(R)` over a finite algebra.
//!
//! `p·W_n(R) = {(0, c_1, ..., c_{n-1}) : c_i ∈ R^p}`. Subtracting an element
//! that vanishes below coordinate `i` changes coordinate `i` additively, so a
//! class is reduced one coordinate at a time: coordinate `i ≥ 1` is split
//! into its residue modulo the GF(p)-span `R^p` and a `p`-th power `y`, and
//! `V^i([y]) ∈ p·W_n(R)` is removed. The classes `[b]` (b in the basis of R)
//! and `V^i([b])` (b in a complement of `R^p`, i ≥ 1) form a GF(p)-basis.

use crate::arith::ring::CoeffRing;
use crate::ring_model::{Elem, FiniteAlgebra};

use super::{Witt, WittError, WittVector};

/// Splits ring elements into a canonical residue modulo `R^p` and a part
/// in `R^p`.
pub trait PthPowerSplit: CoeffRing {
    fn split_pth(&self, a: &Self::Elem) -> (Self::Elem, Self::Elem);
}

impl PthPowerSplit for FiniteAlgebra {
    fn split_pth(&self, a: &Elem) -> (Elem, Elem) {
        let residue = self.pth_power_span().reduce(a);
        let y = self.sub(a, &residue);
        (residue, y)
    }
}

/// GF(p)-coordinates on `W̄_n(R)` for a finite algebra `R`.
pub struct WbarCoords<'a> {
    witt: Witt<'a, FiniteAlgebra>,
    complement: Vec<usize>,
}

impl<'a> WbarCoords<'a> {
    pub fn new(witt: Witt<'a, FiniteAlgebra>) -> Self {
        let complement = witt.ring().pth_power_span().complement_coords();
        WbarCoords { witt, complement }
    }

    pub fn witt(&self) -> &Witt<'a, FiniteAlgebra> {
        &self.witt
    }

    /// `dim R + (n-1)(dim R - dim R^p)`.
    pub fn dim(&self) -> usize {
        let d = self.witt.ring().dim();
        d + (self.witt.n() - 1) * self.complement.len()
    }

    /// Labels `(level, basis index)` of the coordinate axes.
    pub fn layout(&self) -> Vec<(usize, usize)> {
        let d = self.witt.ring().dim();
        let mut out: Vec<(usize, usize)> = (0..d).map(|k| (0, k)).collect();
        for i in 1..self.witt.n() {
            out.extend(self.complement.iter().map(|&k| (i, k)));
        }
        out
    }

    /// Witt vector representing basis axis `(level, k)`: `V^level([b_k])`.
    pub fn basis_vector(&self, level: usize, k: usize) -> WittVector<Elem> {
        let r = self.witt.ring();
        self.witt
            .verschiebung_pow(&self.witt.teichmuller(&r.basis_elem(k)), level)
            .expect("length")
    }

    pub fn basis_vectors(&self) -> Vec<WittVector<Elem>> {
        self.layout().into_iter().map(|(i, k)| self.basis_vector(i, k)).collect()
    }

    /// Canonical representative of the class of `a`.
    pub fn canonical(&self, a: &[Elem]) -> Result<WittVector<Elem>, WittError> {
        let w = &self.witt;
        let r = w.ring();
        let mut cur = a.to_vec();
        for i in 1..w.n() {
            let (_, y) = r.split_pth(&cur[i]);
            if r.is_zero(&y) {
                continue;
            }
            let h = w.verschiebung_pow(&w.teichmuller(&y), i)?;
            cur = w.sub(&cur, &h)?;
        }
        Ok(cur)
    }

    pub fn is_in_im_p(&self, a: &[Elem]) -> Result<bool, WittError> {
        let c = self.canonical(a)?;
        Ok(c.iter().all(|x| self.witt.ring().is_zero(x)))
    }

    pub fn is_in_im_v(&self, a: &[Elem]) -> bool {
        a.first().map(|x| self.witt.ring().is_zero(x)).unwrap_or(true)
    }

    /// Coordinates of the class of `a` on [`Self::layout`].
    pub fn coords(&self, a: &[Elem]) -> Result<Vec<u64>, WittError> {
        let w = &self.witt;
        let r = w.ring();
        let mut cur = a.to_vec();
        let mut out = Vec::with_capacity(self.dim());
        for i in 0..w.n() {
            let (residue, y) = if i == 0 {
                (cur[0].clone(), r.zero())
            } else {
                r.split_pth(&cur[i])
            };
            let axes: Vec<usize> = if i == 0 {
                (0..r.dim()).collect()
            } else {
                self.complement.clone()
            };
            let mut gamma = w.verschiebung_pow(&w.teichmuller(&y), i)?;
            for &k in &axes {
                let c = residue[k];
                out.push(c);
                if c != 0 {
                    let t = w.scale(c, &self.basis_vector(i, k))?;
                    gamma = w.add(&gamma, &t)?;
                }
            }
            cur = w.sub(&cur, &gamma)?;
            debug_assert!(r.is_zero(&cur[i]));
        }
        Ok(out)
    }

    /// Witt vector with the given coordinates: `Σ c_axis · basis_axis`.
    pub fn from_coords(&self, c: &[u64]) -> Result<WittVector<Elem>, WittError> {
        let w = &self.witt;
        let mut acc = w.zero();
        for ((i, k), &ck) in self.layout().into_iter().zip(c) {
            if ck != 0 {
                acc = w.add(&acc, &w.scale(ck, &self.basis_vector(i, k))?)?;
            }
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{Domain, SparsePoly};

    fn dual() -> FiniteAlgebra {
        let x = SparsePoly::var(Domain::Gfp(2), 1, 0);
        FiniteAlgebra::new(2, vec!["x".into()], vec![&x * &x], 12).unwrap()
    }

    #[test]
    fn dual_numbers_classes() {
        let r = dual();
        let w = Witt::new(&r, 2, 2).unwrap();
        let q = WbarCoords::new(w.clone());
        assert_eq!(q.dim(), 3);
        let x = r.var_elem(0);
        let vx = w.verschiebung(&w.teichmuller(&x)).unwrap();
        assert!(!q.is_in_im_p(&vx).unwrap());
        let v1 = w.verschiebung(&w.one()).unwrap();
        assert!(q.is_in_im_p(&v1).unwrap());
    }

    #[test]
    fn coordinates_are_additive_and_faithful() {
        let r = dual();
        for n in 1..=3 {
            let w = Witt::new(&r, 2, n).unwrap();
            let q = WbarCoords::new(w.clone());
            let elems = r.elements(12).unwrap();
            let mut all: Vec<WittVector<Elem>> = vec![vec![]];
            for _ in 0..n {
                all = all
                    .into_iter()
                    .flat_map(|v| elems.iter().map(move |e| {
                        let mut u = v.clone();
                        u.push(e.clone());
                        u
                    }))
                    .collect();
            }
            for a in &all {
                let ca = q.coords(a).unwrap();
                let back = q.from_coords(&ca).unwrap();
                assert!(q.is_in_im_p(&w.sub(a, &back).unwrap()).unwrap());
                assert_eq!(q.canonical(a).unwrap(), q.canonical(&back).unwrap());
                for b in all.iter().step_by(3) {
                    let cb = q.coords(b).unwrap();
                    let cs = q.coords(&w.add(a, b).unwrap()).unwrap();
                    let expect: Vec<u64> = ca.iter().zip(&cb).map(|(x, y)| (x + y) % 2).collect();
                    assert_eq!(cs, expect);
                }
            }
        }
    }
}
