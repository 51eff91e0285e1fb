//! Buchberger completion over GF(p) with the sugar selection strategy, and
//! normal forms modulo a Gröbner basis.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::modp;
use super::order::MonomialOrder;
use super::poly::{Domain, Monomial, PolyError, SparsePoly};

/// Leading monomial and coefficient of `f` under `order`.
pub fn leading_term<'a>(f: &'a SparsePoly, order: &MonomialOrder) -> Option<(&'a Monomial, &'a BigInt)> {
    f.terms().max_by(|a, b| order.cmp(a.0, b.0))
}

pub fn leading_monomial(f: &SparsePoly, order: &MonomialOrder) -> Option<Monomial> {
    leading_term(f, order).map(|(m, _)| m.clone())
}

fn prime_of(f: &SparsePoly) -> Result<u64, PolyError> {
    match f.domain() {
        Domain::Gfp(p) => Ok(p),
        Domain::Integers => Err(PolyError::NeedsPrimeField),
    }
}

fn check_order(f: &SparsePoly, order: &MonomialOrder) -> Result<(), PolyError> {
    if order.nvars() != f.nvars() {
        return Err(PolyError::OrderMismatch(order.nvars(), f.nvars()));
    }
    Ok(())
}

/// Multivariate division of `f` by `divisors` (GF(p) coefficients).
/// Returns quotients and the fully reduced remainder.
pub fn divide(
    f: &SparsePoly,
    divisors: &[SparsePoly],
    order: &MonomialOrder,
) -> Result<(Vec<SparsePoly>, SparsePoly), PolyError> {
    check_order(f, order)?;
    let p = prime_of(f)?;
    let lead: Vec<(Monomial, BigInt)> = divisors
        .iter()
        .map(|g| {
            let (m, c) = leading_term(g, order).ok_or(PolyError::DivisionByZero)?;
            let c = c.to_u64().expect("reduced coefficient");
            Ok((m.clone(), BigInt::from(modp::inv(c, p))))
        })
        .collect::<Result<_, PolyError>>()?;
    let mut quotients: Vec<SparsePoly> = divisors
        .iter()
        .map(|g| SparsePoly::zero(g.domain(), g.nvars()))
        .collect();
    let mut rest = f.clone();
    let mut rem = SparsePoly::zero(f.domain(), f.nvars());
    while let Some((m, c)) = leading_term(&rest, order).map(|(m, c)| (m.clone(), c.clone())) {
        match lead.iter().position(|(lm, _)| lm.divides(&m)) {
            Some(k) => {
                let shift = m.div(&lead[k].0);
                let factor = &c * &lead[k].1;
                quotients[k].add_term(shift.clone(), factor.clone());
                rest.add_scaled_shifted(&-factor, &shift, &divisors[k])?;
            }
            None => {
                rest.remove_term(&m);
                rem.add_term(m, c);
            }
        }
    }
    Ok((quotients, rem))
}

/// `a / b` when `b` divides `a` exactly in GF(p)[x].
pub fn div_exact(a: &SparsePoly, b: &SparsePoly) -> Result<SparsePoly, PolyError> {
    let order = MonomialOrder::grevlex(a.nvars());
    let (mut q, r) = divide(a, std::slice::from_ref(b), &order)?;
    if !r.is_zero() {
        return Err(PolyError::InexactDivision);
    }
    Ok(q.pop().expect("one quotient"))
}

/// Generators of an ideal in GF(p)[x_0..x_{n-1}] together with the order
/// they are taken under.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealBasis {
    gens: Vec<SparsePoly>,
    is_groebner: bool,
    order: MonomialOrder,
}

struct Entry {
    poly: SparsePoly,
    lm: Monomial,
    sugar: u32,
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

impl IdealBasis {
    /// Wraps generators without completing them.
    pub fn new(gens: Vec<SparsePoly>, order: MonomialOrder) -> Result<Self, PolyError> {
        for g in &gens {
            check_order(g, &order)?;
            prime_of(g)?;
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(IdealBasis {
            gens,
            is_groebner: false,
            order,
        })
    }

    /// Reduced Gröbner basis of the ideal generated by `gens`.
    pub fn groebner(gens: Vec<SparsePoly>, order: MonomialOrder) -> Result<Self, PolyError> {
        Self::new(gens, order)?.complete()
    }

    pub fn gens(&self) -> &[SparsePoly] {
        &self.gens
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn is_groebner(&self) -> bool {
        self.is_groebner
    }

    pub fn nvars(&self) -> usize {
        self.order.nvars()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.gens
            .iter()
            .map(|g| leading_monomial(g, &self.order).expect("nonzero generator"))
            .collect()
    }

    /// Whether `m` is a standard monomial (not in the leading ideal).
    pub fn is_standard(&self, m: &Monomial) -> bool {
        !self.gens.iter().any(|g| {
            leading_term(g, &self.order)
                .map(|(lm, _)| lm.divides(m))
                .unwrap_or(false)
        })
    }

    /// Runs Buchberger's algorithm (sugar strategy, product criterion) and
    /// inter-reduces the result into the unique reduced basis.
    pub fn complete(self) -> Result<Self, PolyError> {
        if self.is_groebner {
            return Ok(self);
        }
        let order = self.order.clone();
        let mut basis: Vec<Entry> = Vec::new();
        let mut pairs: Vec<Pair> = Vec::new();

        let push = |basis: &mut Vec<Entry>, pairs: &mut Vec<Pair>, poly: SparsePoly, sugar: u32| {
            let lm = leading_monomial(&poly, &order).expect("nonzero");
            let poly = poly.make_monic_at(&lm);
            let j = basis.len();
            for (i, e) in basis.iter().enumerate() {
                let lcm = e.lm.lcm(&lm);
                let s = (e.sugar + lcm.degree() - e.lm.degree()).max(sugar + lcm.degree() - lm.degree());
                pairs.push(Pair { i, j, lcm, sugar: s });
            }
            basis.push(Entry { poly, lm, sugar });
        };

        for g in self.gens {
            let s = g.total_degree().unwrap_or(0);
            push(&mut basis, &mut pairs, g, s);
        }

        while !pairs.is_empty() {
            let best = (0..pairs.len())
                .min_by(|&a, &b| {
                    let (pa, pb) = (&pairs[a], &pairs[b]);
                    pa.sugar
                        .cmp(&pb.sugar)
                        .then_with(|| order.cmp(&pa.lcm, &pb.lcm))
                        .then_with(|| (pa.i, pa.j).cmp(&(pb.i, pb.j)))
                })
                .expect("nonempty");
            let pair = pairs.swap_remove(best);
            let (a, b) = (&basis[pair.i], &basis[pair.j]);
            if a.lm.coprime(&b.lm) {
                continue;
            }
            let one = BigInt::from(1);
            let mut s = SparsePoly::zero(a.poly.domain(), a.poly.nvars());
            s.add_scaled_shifted(&one, &pair.lcm.div(&a.lm), &a.poly)?;
            s.add_scaled_shifted(&-one, &pair.lcm.div(&b.lm), &b.poly)?;
            let divisors: Vec<SparsePoly> = basis.iter().map(|e| e.poly.clone()).collect();
            let (_, r) = divide(&s, &divisors, &order)?;
            if !r.is_zero() {
                push(&mut basis, &mut pairs, r, pair.sugar);
            }
        }

        // Minimalize, then inter-reduce.
        let mut minimal: Vec<SparsePoly> = Vec::new();
        for (k, e) in basis.iter().enumerate() {
            let redundant = basis.iter().enumerate().any(|(l, o)| {
                l != k && o.lm.divides(&e.lm) && (o.lm != e.lm || l < k)
            });
            if !redundant {
                minimal.push(e.poly.clone());
            }
        }
        let mut reduced = Vec::with_capacity(minimal.len());
        for k in 0..minimal.len() {
            let others: Vec<SparsePoly> = minimal
                .iter()
                .enumerate()
                .filter(|(l, _)| *l != k)
                .map(|(_, g)| g.clone())
                .collect();
            let lm = leading_monomial(&minimal[k], &order).expect("nonzero");
            let mut tail = minimal[k].clone();
            let lc = tail.remove_term(&lm).expect("lead");
            let (_, r) = divide(&tail, &others, &order)?;
            let mut g = r;
            g.add_term(lm, lc);
            reduced.push(g);
        }
        reduced.sort_by(|a, b| {
            let la = leading_monomial(a, &order).expect("nonzero");
            let lb = leading_monomial(b, &order).expect("nonzero");
            order.cmp(&la, &lb)
        });
        Ok(IdealBasis {
            gens: reduced,
            is_groebner: true,
            order,
        })
    }

    /// Unique normal form of `f`; zero iff `f` lies in the ideal.
    pub fn normal_form(&self, f: &SparsePoly) -> Result<SparsePoly, PolyError> {
        if !self.is_groebner {
            return Err(PolyError::NotGroebner);
        }
        check_order(f, &self.order)?;
        if f.is_zero() {
            return Ok(f.clone());
        }
        if let Some(g) = self.gens.first() {
            if g.domain() != f.domain() {
                return Err(PolyError::DomainMismatch(f.domain(), g.domain()));
            }
        }
        Ok(divide(f, &self.gens, &self.order)?.1)
    }

    pub fn contains(&self, f: &SparsePoly) -> Result<bool, PolyError> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// True when every S-polynomial of basis pairs reduces to zero.
    pub fn check_s_pairs(&self) -> Result<bool, PolyError> {
        let lms = self.leading_monomials();
        for i in 0..self.gens.len() {
            for j in i + 1..self.gens.len() {
                let lcm = lms[i].lcm(&lms[j]);
                let ci = leading_term(&self.gens[i], &self.order).expect("nonzero").1.clone();
                let cj = leading_term(&self.gens[j], &self.order).expect("nonzero").1.clone();
                let mut s = SparsePoly::zero(self.gens[i].domain(), self.nvars());
                s.add_scaled_shifted(&cj, &lcm.div(&lms[i]), &self.gens[i])?;
                s.add_scaled_shifted(&-ci, &lcm.div(&lms[j]), &self.gens[j])?;
                if !divide(&s, &self.gens, &self.order)?.1.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Whether the quotient ring is finite-dimensional: every variable has
    /// a pure power among the leading monomials.
    pub fn is_zero_dimensional(&self) -> bool {
        let lms = self.leading_monomials();
        (0..self.nvars()).all(|v| {
            lms.iter().any(|m| {
                m.exps()
                    .iter()
                    .enumerate()
                    .all(|(i, &e)| if i == v { e > 0 } else { e == 0 })
            })
        })
    }

    /// Standard monomials of total degree `d`, in descending order.
    pub fn standard_monomials_of_degree(&self, d: u32) -> Vec<Monomial> {
        let lms = self.leading_monomials();
        let mut out: Vec<Monomial> = Monomial::all_of_degree(self.nvars(), d)
            .into_iter()
            .filter(|m| !lms.iter().any(|l| l.divides(m)))
            .collect();
        out.sort_by(|a, b| self.order.cmp(b, a));
        out
    }
}

/// Compares two polynomials by leading monomial; used for deterministic sorting.
pub fn cmp_by_leading(a: &SparsePoly, b: &SparsePoly, order: &MonomialOrder) -> Ordering {
    match (leading_monomial(a, order), leading_monomial(b, order)) {
        (Some(x), Some(y)) => order.cmp(&x, &y),
        (None, None) => Ordering::Equal,
        (None, Some(_)) => Ordering::Less,
        (Some(_), None) => Ordering::Greater,
    }
}
