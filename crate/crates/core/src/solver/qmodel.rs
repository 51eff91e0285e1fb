//! `Q_{R,n}` for finite algebras, in two independent presentations.
//!
//! Both start from `F_*W_n(R)`, where `β ∈ W_n(R)` acts by `F(β)·`.
//! * `Wbar`: classes modulo `p·W_n(R)`, coordinatized by [`WbarCoords`].
//! * `Pushout`: the quotient by the submodule generated by
//!   `F(ker 𝔯^{n-1})`, found by enumerating that submodule and its cosets.

use std::collections::{HashMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::ring_model::{Elem, FiniteAlgebra};
use crate::witt::{WbarCoords, Witt, WittVector};

use super::SolverError;

/// Default bound on `|W_n(R)|` for enumeration.
pub const DEFAULT_ENUM_CAP: u64 = 1 << 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QKind {
    Pushout,
    Wbar,
}

struct Pushout {
    /// Class id of every element of `W_n(R)`, by enumeration index.
    class_of: Vec<u32>,
    killed: usize,
    basis: Vec<WittVector<Elem>>,
    /// Coordinates of every class on `basis`.
    coords: Vec<Vec<u64>>,
}

enum Inner<'a> {
    Wbar(WbarCoords<'a>),
    Pushout(Pushout),
}

/// `Q_{R,n}` as a GF(p)-vector space with its `R`-action `r·q = [r^p]·q`.
pub struct QModel<'a> {
    kind: QKind,
    witt: Witt<'a, FiniteAlgebra>,
    inner: Inner<'a>,
}

/// Enumeration index of a Witt vector: coordinate 0 is the lowest digit.
pub fn witt_index(alg: &FiniteAlgebra, a: &[Elem]) -> u64 {
    let size = alg.size();
    a.iter().rev().fold(0, |acc, c| acc * size + alg.index_of(c))
}

pub fn witt_at(alg: &FiniteAlgebra, n: usize, mut idx: u64) -> WittVector<Elem> {
    let size = alg.size();
    (0..n)
        .map(|_| {
            let c = alg.elem_at(idx % size);
            idx /= size;
            c
        })
        .collect()
}

fn witt_size(alg: &FiniteAlgebra, n: usize) -> Option<u64> {
    alg.size().checked_pow(n as u32)
}

impl<'a> QModel<'a> {
    pub fn build(alg: &'a FiniteAlgebra, n: usize, kind: QKind, enum_cap: u64) -> Result<Self, SolverError> {
        let witt = Witt::new(alg, alg.p(), n)?;
        let inner = match kind {
            QKind::Wbar => Inner::Wbar(WbarCoords::new(witt.clone())),
            QKind::Pushout => Inner::Pushout(build_pushout(&witt, enum_cap)?),
        };
        Ok(QModel { kind, witt, inner })
    }

    pub fn kind(&self) -> QKind {
        self.kind
    }

    pub fn witt(&self) -> &Witt<'a, FiniteAlgebra> {
        &self.witt
    }

    pub fn ring(&self) -> &'a FiniteAlgebra {
        self.witt.ring()
    }

    pub fn n(&self) -> usize {
        self.witt.n()
    }

    /// GF(p)-dimension.
    pub fn dim(&self) -> usize {
        match &self.inner {
            Inner::Wbar(w) => w.dim(),
            Inner::Pushout(po) => po.basis.len(),
        }
    }

    pub fn num_classes(&self) -> u64 {
        self.ring().p().pow(self.dim() as u32)
    }

    /// Witt vectors representing the coordinate axes.
    pub fn basis(&self) -> Vec<WittVector<Elem>> {
        match &self.inner {
            Inner::Wbar(w) => w.basis_vectors(),
            Inner::Pushout(po) => po.basis.clone(),
        }
    }

    /// Size of the subgroup of `W_n(R)` that is quotiented out.
    pub fn killed_size(&self) -> u64 {
        match &self.inner {
            Inner::Wbar(_) => {
                let alg = self.ring();
                let r = alg.pth_power_span().rank();
                alg.p().pow((r * (self.n() - 1)) as u32)
            }
            Inner::Pushout(po) => po.killed as u64,
        }
    }

    /// Coordinates of the class of `a`.
    pub fn coords(&self, a: &[Elem]) -> Result<Vec<u64>, SolverError> {
        match &self.inner {
            Inner::Wbar(w) => Ok(w.coords(a)?),
            Inner::Pushout(po) => {
                let idx = witt_index(self.ring(), a) as usize;
                Ok(po.coords[po.class_of[idx] as usize].clone())
            }
        }
    }

    /// A Witt vector in the class with the given coordinates.
    pub fn representative(&self, c: &[u64]) -> Result<WittVector<Elem>, SolverError> {
        let w = &self.witt;
        let mut acc = w.zero();
        for (b, &k) in self.basis().iter().zip(c) {
            if k != 0 {
                acc = w.add(&acc, &w.scale(k, b)?)?;
            }
        }
        Ok(acc)
    }

    /// `r·a = [r^p]·a`.
    pub fn act(&self, r: &Elem, a: &[Elem]) -> Result<WittVector<Elem>, SolverError> {
        let alg = self.ring();
        let t = self.witt.teichmuller(&alg.frobenius(r));
        Ok(self.witt.mul(&t, a)?)
    }

    /// `Φ(r) = class of [r^p]`.
    pub fn phi(&self, r: &Elem) -> Result<Vec<u64>, SolverError> {
        let t = self.witt.teichmuller(&self.ring().frobenius(r));
        self.coords(&t)
    }

    pub fn is_zero_class(&self, a: &[Elem]) -> Result<bool, SolverError> {
        Ok(self.coords(a)?.iter().all(|&c| c == 0))
    }
}

fn build_pushout(witt: &Witt<'_, FiniteAlgebra>, cap: u64) -> Result<Pushout, SolverError> {
    let alg = witt.ring();
    let n = witt.n();
    let total = witt_size(alg, n).filter(|&s| s <= cap).ok_or(SolverError::EnumerationCap {
        what: "W_n(R)",
        cap,
    })?;
    let elems = alg.elements(usize::MAX)?;
    // Additive generators V^i([r]) of W_n(R), and of ker 𝔯^{n-1} (i ≥ 1).
    let mut gens_w: Vec<WittVector<Elem>> = Vec::new();
    for i in 0..n {
        for r in &elems {
            gens_w.push(witt.verschiebung_pow(&witt.teichmuller(r), i)?);
        }
    }
    let gens_k: Vec<&WittVector<Elem>> = gens_w.iter().skip(elems.len()).collect();
    let mut module_gens: Vec<u64> = Vec::new();
    let mut seen_gen: HashSet<u64> = HashSet::new();
    for beta in &gens_w {
        let fb = witt.frobenius(beta)?;
        for k in &gens_k {
            let prod = witt.mul(&fb, &witt.frobenius(k)?)?;
            let idx = witt_index(alg, &prod);
            if seen_gen.insert(idx) {
                module_gens.push(idx);
            }
        }
    }
    // Additive closure.
    let mut killed: HashSet<u64> = HashSet::from([0]);
    let mut queue: VecDeque<u64> = VecDeque::from([0]);
    while let Some(s) = queue.pop_front() {
        let sv = witt_at(alg, n, s);
        for &g in &module_gens {
            let t = witt_index(alg, &witt.add(&sv, &witt_at(alg, n, g))?);
            if killed.insert(t) {
                queue.push_back(t);
            }
        }
    }
    let mut killed_list: Vec<u64> = killed.into_iter().collect();
    killed_list.sort_unstable();
    let killed_vecs: Vec<WittVector<Elem>> = killed_list.iter().map(|&k| witt_at(alg, n, k)).collect();

    const UNSET: u32 = u32::MAX;
    let mut class_of = vec![UNSET; total as usize];
    let mut reps: Vec<u64> = Vec::new();
    for idx in 0..total {
        if class_of[idx as usize] != UNSET {
            continue;
        }
        let id = reps.len() as u32;
        reps.push(idx);
        let w = witt_at(alg, n, idx);
        for k in &killed_vecs {
            let t = witt_index(alg, &witt.add(&w, k)?);
            class_of[t as usize] = id;
        }
    }

    // Greedy basis over the additive generators of W_n(R).
    let p = alg.p();
    let mut span: HashMap<u32, Vec<u64>> = HashMap::from([(class_of[0], Vec::new())]);
    let mut basis: Vec<WittVector<Elem>> = Vec::new();
    for g in &gens_w {
        if span.len() == reps.len() {
            break;
        }
        let cls = class_of[witt_index(alg, g) as usize];
        if span.contains_key(&cls) {
            continue;
        }
        let mut next: HashMap<u32, Vec<u64>> = HashMap::new();
        for (&c, coords) in &span {
            let base = witt_at(alg, n, reps[c as usize]);
            for k in 0..p {
                let v = witt.add(&base, &witt.scale(k, g)?)?;
                let id = class_of[witt_index(alg, &v) as usize];
                let mut cc = coords.clone();
                cc.push(k);
                next.insert(id, cc);
            }
        }
        span = next;
        basis.push(g.clone());
    }
    let dim = basis.len();
    let mut coords = vec![Vec::new(); reps.len()];
    for (id, mut c) in span {
        c.resize(dim, 0);
        coords[id as usize] = c;
    }
    Ok(Pushout {
        class_of,
        killed: killed_list.len(),
        basis,
        coords,
    })
}

/// Result of comparing the two presentations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QComparison {
    pub n: usize,
    pub witt_size: u64,
    pub pushout_classes: u64,
    pub wbar_classes: u64,
    pub pushout_killed: u64,
    pub wbar_killed: u64,
    /// Pushout class determines the W̄ class.
    pub well_defined: bool,
    pub bijective: bool,
    pub equivariant: bool,
}

impl QComparison {
    pub fn isomorphic(&self) -> bool {
        self.well_defined && self.bijective && self.equivariant
    }
}

/// Checks the canonical map from the pushout to `W̄_n` by enumerating `W_n(R)`.
pub fn compare_q_models(alg: &FiniteAlgebra, n: usize, enum_cap: u64) -> Result<QComparison, SolverError> {
    let push = QModel::build(alg, n, QKind::Pushout, enum_cap)?;
    let wbar = QModel::build(alg, n, QKind::Wbar, enum_cap)?;
    let total = witt_size(alg, n).expect("within cap");
    let mut image: HashMap<Vec<u64>, Vec<u64>> = HashMap::new();
    let mut well_defined = true;
    for idx in 0..total {
        let a = witt_at(alg, n, idx);
        let pc = push.coords(&a)?;
        let wc = wbar.coords(&a)?;
        match image.get(&pc) {
            Some(prev) if *prev != wc => well_defined = false,
            Some(_) => {}
            None => {
                image.insert(pc, wc);
            }
        }
    }
    let distinct: HashSet<&Vec<u64>> = image.values().collect();
    let bijective = well_defined
        && image.len() as u64 == push.num_classes()
        && distinct.len() == image.len()
        && distinct.len() as u64 == wbar.num_classes();
    let mut equivariant = true;
    'outer: for b in push.basis() {
        for r in alg.elements(usize::MAX)? {
            let lhs = wbar.coords(&push.act(&r, &b)?)?;
            let rhs = wbar.coords(&wbar.act(&r, &b)?)?;
            if lhs != rhs {
                equivariant = false;
                break 'outer;
            }
        }
    }
    Ok(QComparison {
        n,
        witt_size: total,
        pushout_classes: push.num_classes(),
        wbar_classes: wbar.num_classes(),
        pushout_killed: push.killed_size(),
        wbar_killed: wbar.killed_size(),
        well_defined,
        bijective,
        equivariant,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ring::CoeffRing;
    use crate::arith::{Domain, SparsePoly};

    fn dual() -> FiniteAlgebra {
        let x = SparsePoly::var(Domain::Gfp(2), 1, 0);
        FiniteAlgebra::new(2, vec!["x".into()], vec![&x * &x], 12).unwrap()
    }

    #[test]
    fn class_counts_for_dual_numbers() {
        let r = dual();
        let q = QModel::build(&r, 2, QKind::Wbar, DEFAULT_ENUM_CAP).unwrap();
        // |W_2(R)| = 16, |p W_2(R)| = 2.
        assert_eq!(q.num_classes(), 8);
        assert_eq!(q.killed_size(), 2);
        let po = QModel::build(&r, 2, QKind::Pushout, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(po.num_classes(), 8);
        assert_eq!(po.killed_size(), 2);
    }

    #[test]
    fn perfect_field_collapses() {
        let f = FiniteAlgebra::galois_field(4).unwrap();
        for kind in [QKind::Wbar, QKind::Pushout] {
            let q = QModel::build(&f, 2, kind, DEFAULT_ENUM_CAP).unwrap();
            assert_eq!(q.num_classes(), 4);
            for r in f.elements(12).unwrap() {
                let c = q.phi(&r).unwrap();
                assert_eq!(c.iter().all(|&x| x == 0), f.is_zero(&r));
            }
        }
    }

    #[test]
    fn models_agree_for_dual_numbers() {
        let r = dual();
        for n in 1..=3 {
            let c = compare_q_models(&r, n, DEFAULT_ENUM_CAP).unwrap();
            assert!(c.isomorphic(), "{c:?}");
        }
    }
}
