//! Exact splitting search over finite algebras.
//!
//! A splitting is an additive `σ: Q_{R,n} → R` with `σ(r·q) = r·σ(q)` and
//! `σ(Φ(1)) = 1`. Writing `σ` by its values on a GF(p)-basis of `Q` turns
//! this into a linear system over GF(p) with unknowns the coordinates of
//! `σ(q_k)` in `R`. Elements of `W_n(R)` in the image of `V` act on `Q`
//! through `F(V β) = p·β`, hence trivially; [`verify_finite_splitting`]
//! re-checks that on every basis pair.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::arith::linsys::{check_certificate, Certificate, LinearSystem, Solution};
use crate::arith::ring::CoeffRing;
use crate::ring_model::{Elem, FiniteAlgebra};

use super::qmodel::{QKind, QModel};
use super::SolverError;

/// Basis of `ker Φ_{R,n}` as a GF(p)-space. `Φ` is additive, so its kernel
/// is the nullspace of the matrix of `Φ` on the basis of `R`.
pub fn phi_kernel(q: &QModel<'_>) -> Result<Vec<Elem>, SolverError> {
    let alg = q.ring();
    let d = alg.dim();
    let cols: Vec<Vec<u64>> = (0..d).map(|k| q.phi(&alg.basis_elem(k))).collect::<Result<_, _>>()?;
    let rows: Vec<Vec<u64>> = (0..q.dim()).map(|j| cols.iter().map(|c| c[j]).collect()).collect();
    Ok(crate::arith::linsys::nullspace(alg.p(), d, &rows))
}

/// A splitting as its values on the basis of `Q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Splitting {
    pub n: usize,
    pub kind: QKind,
    pub q_dim: usize,
    /// `σ(q_k)` as coordinates on the basis of `R`.
    pub values: Vec<Elem>,
    /// `σ(q_k)` printed as polynomials.
    pub display: Vec<String>,
}

impl Splitting {
    /// `σ` of a class given by its coordinates.
    pub fn eval(&self, alg: &FiniteAlgebra, c: &[u64]) -> Elem {
        c.iter()
            .zip(&self.values)
            .fold(alg.zero(), |acc, (&k, v)| alg.add(&acc, &alg.scale(k, v)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum FiniteSplit {
    Split { sigma: Splitting },
    NotSplit { certificate: Certificate, equations: usize },
}

impl FiniteSplit {
    pub fn is_split(&self) -> bool {
        matches!(self, FiniteSplit::Split { .. })
    }
}

/// The GF(p)-linear system whose solutions are splittings of `Φ_{R,n}`.
/// Unknown `k·dim R + t` is coordinate `t` of `σ(q_k)`.
pub fn finite_system(q: &QModel<'_>) -> Result<LinearSystem, SolverError> {
    let alg = q.ring();
    let p = alg.p();
    let d = alg.dim();
    let qd = q.dim();
    let var = |k: usize, t: usize| k * d + t;
    let mut sys = LinearSystem::new(p, qd * d);
    let basis = q.basis();
    // mult[j][s] = b_j * b_s
    let mult: Vec<Vec<Elem>> = (0..d)
        .map(|j| (0..d).map(|s| alg.mul(&alg.basis_elem(j), &alg.basis_elem(s))).collect())
        .collect();
    for (j, mult_j) in mult.iter().enumerate() {
        let bj = alg.basis_elem(j);
        for (k, qk) in basis.iter().enumerate() {
            let c = q.coords(&q.act(&bj, qk)?)?;
            for t in 0..d {
                let mut row: Vec<(usize, u64)> = Vec::new();
                for (l, &cl) in c.iter().enumerate() {
                    if cl != 0 {
                        row.push((var(l, t), cl));
                    }
                }
                for (s, prod) in mult_j.iter().enumerate() {
                    if prod[t] != 0 {
                        row.push((var(k, s), (p - prod[t]) % p));
                    }
                }
                sys.push(row, 0);
            }
        }
    }
    let unit = q.phi(&alg.one())?;
    let one = alg.one();
    for (t, &rhs) in one.iter().enumerate() {
        let row = unit
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(l, &c)| (var(l, t), c))
            .collect();
        sys.push(row, rhs);
    }
    Ok(sys)
}

/// Searches for a splitting of `Φ_{R,n}` in the given model of `Q`.
pub fn split_finite(q: &QModel<'_>) -> Result<FiniteSplit, SolverError> {
    let alg = q.ring();
    let (p, d, qd) = (alg.p(), alg.dim(), q.dim());
    let sys = finite_system(q)?;
    Ok(match sys.solve() {
        Solution::Feasible(x) => {
            let values: Vec<Elem> = (0..qd).map(|k| x[k * d..(k + 1) * d].to_vec()).collect();
            let display = values.iter().map(|v| alg.display_elem(v)).collect();
            FiniteSplit::Split {
                sigma: Splitting {
                    n: q.n(),
                    kind: q.kind(),
                    q_dim: qd,
                    values,
                    display,
                },
            }
        }
        Solution::Infeasible(certificate) => {
            debug_assert!(check_certificate(p, sys.ncols(), sys.equations(), &certificate));
            FiniteSplit::NotSplit {
                certificate,
                equations: sys.equations().len(),
            }
        }
    })
}

/// Outcome of re-checking a splitting by direct Witt arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteSplitCheck {
    /// `σ(Φ(r)) = r` for every `r` tested.
    pub section: bool,
    /// `σ(r·q) = r·σ(q)` for every `r` tested and every basis class.
    pub r_linear: bool,
    /// `σ(a + b) = σ(a) + σ(b)` on sampled `a, b ∈ W_n(R)`.
    pub additive: bool,
    /// `F(V^i[b])·q` is the zero class for `i ≥ 1`.
    pub v_part_acts_trivially: bool,
    pub ring_elements_tested: usize,
    pub additive_samples: usize,
}

impl FiniteSplitCheck {
    pub fn ok(&self) -> bool {
        self.section && self.r_linear && self.additive && self.v_part_acts_trivially
    }
}

const EXHAUSTIVE_DIM: usize = 10;

/// Independent re-verification of `sigma`. Every `r ∈ R` is tested when
/// `dim R ≤ 10`, otherwise the basis plus seeded random elements.
pub fn verify_finite_splitting(q: &QModel<'_>, sigma: &Splitting, seed: u64, samples: usize) -> Result<FiniteSplitCheck, SolverError> {
    let alg = q.ring();
    let w = q.witt();
    let n = q.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ring_elems: Vec<Elem> = if alg.dim() <= EXHAUSTIVE_DIM {
        alg.elements(EXHAUSTIVE_DIM)?
    } else {
        let mut v = alg.all_basis_elems();
        v.extend((0..samples).map(|_| random_elem_of(alg, &mut rng)));
        v
    };
    let basis = q.basis();
    let mut section = true;
    let mut r_linear = true;
    for r in &ring_elems {
        if sigma.eval(alg, &q.phi(r)?) != *r {
            section = false;
        }
        for (k, qk) in basis.iter().enumerate() {
            let lhs = sigma.eval(alg, &q.coords(&q.act(r, qk)?)?);
            if lhs != alg.mul(r, &sigma.values[k]) {
                r_linear = false;
            }
        }
    }
    let mut additive = true;
    let random_witt = |rng: &mut ChaCha8Rng| -> Vec<Elem> { (0..n).map(|_| random_elem_of(alg, rng)).collect() };
    for _ in 0..samples {
        let a = random_witt(&mut rng);
        let b = random_witt(&mut rng);
        let s = sigma.eval(alg, &q.coords(&w.add(&a, &b)?)?);
        let t = alg.add(&sigma.eval(alg, &q.coords(&a)?), &sigma.eval(alg, &q.coords(&b)?));
        if s != t {
            additive = false;
        }
    }
    let mut v_part_acts_trivially = true;
    for i in 1..n {
        for b in alg.all_basis_elems() {
            let fv = w.frobenius(&w.verschiebung_pow(&w.teichmuller(&b), i)?)?;
            for qk in &basis {
                if !q.is_zero_class(&w.mul(&fv, qk)?)? {
                    v_part_acts_trivially = false;
                }
            }
        }
    }
    Ok(FiniteSplitCheck {
        section,
        r_linear,
        additive,
        v_part_acts_trivially,
        ring_elements_tested: ring_elems.len(),
        additive_samples: samples,
    })
}

fn random_elem_of(alg: &FiniteAlgebra, rng: &mut ChaCha8Rng) -> Elem {
    (0..alg.dim()).map(|_| rng.gen_range(0..alg.p())).collect()
}

/// Convenience: build the model, search, and verify any splitting found.
pub(crate) fn split_and_verify(
    alg: &FiniteAlgebra,
    n: usize,
    kind: QKind,
    enum_cap: u64,
    seed: u64,
) -> Result<(FiniteSplit, Option<FiniteSplitCheck>), SolverError> {
    let q = QModel::build(alg, n, kind, enum_cap)?;
    let verdict = split_finite(&q)?;
    let check = match &verdict {
        FiniteSplit::Split { sigma } => Some(verify_finite_splitting(&q, sigma, seed, 64)?),
        FiniteSplit::NotSplit { .. } => None,
    };
    Ok((verdict, check))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{Domain, SparsePoly};
    use crate::solver::qmodel::DEFAULT_ENUM_CAP;

    fn quotient(p: u64, rel: impl Fn(&SparsePoly) -> SparsePoly) -> FiniteAlgebra {
        let x = SparsePoly::var(Domain::Gfp(p), 1, 0);
        FiniteAlgebra::new(p, vec!["x".into()], vec![rel(&x)], 12).unwrap()
    }

    #[test]
    fn dual_numbers_never_split() {
        let r = quotient(2, |x| x * x);
        for n in 1..=3 {
            for kind in [QKind::Wbar, QKind::Pushout] {
                let q = QModel::build(&r, n, kind, DEFAULT_ENUM_CAP).unwrap();
                match split_finite(&q).unwrap() {
                    FiniteSplit::NotSplit { .. } => {}
                    other => panic!("n={n}: {other:?}"),
                }
            }
        }
    }

    #[test]
    fn fields_and_products_split() {
        let gf4 = FiniteAlgebra::galois_field(4).unwrap();
        let prod = quotient(2, |x| &(x * x) + x);
        for r in [&gf4, &prod] {
            for n in 1..=2 {
                let (v, check) = split_and_verify(r, n, QKind::Wbar, DEFAULT_ENUM_CAP, 7).unwrap();
                assert!(v.is_split(), "{} n={n}", r.describe());
                assert!(check.unwrap().ok());
            }
        }
    }

    #[test]
    fn kernel_of_phi_is_frobenius_kernel() {
        let r = quotient(2, |x| x * x);
        let q = QModel::build(&r, 2, QKind::Wbar, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(phi_kernel(&q).unwrap(), vec![r.var_elem(0)]);
        let q = QModel::build(&r, 1, QKind::Wbar, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(phi_kernel(&q).unwrap(), r.frobenius_kernel());
    }

    #[test]
    fn phi_is_r_linear_on_gf4() {
        let f = FiniteAlgebra::galois_field(4).unwrap();
        let q = QModel::build(&f, 2, QKind::Wbar, DEFAULT_ENUM_CAP).unwrap();
        for r in f.elements(4).unwrap() {
            for s in f.elements(4).unwrap() {
                let lhs = q.phi(&f.mul(&r, &s)).unwrap();
                let t = q.witt().teichmuller(&f.frobenius(&s));
                let rhs = q.coords(&q.act(&r, &t).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}
