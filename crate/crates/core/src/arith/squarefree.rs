//! Multivariate gcd and squarefreeness over GF(p).

use super::groebner::{div_exact, leading_monomial, IdealBasis};
use super::order::MonomialOrder;
use super::poly::{Domain, PolyError, SparsePoly};

fn monic(f: &SparsePoly) -> SparsePoly {
    match leading_monomial(f, &MonomialOrder::grevlex(f.nvars())) {
        Some(lm) => f.make_monic_at(&lm),
        None => f.clone(),
    }
}

/// Monic generator of `(a) ∩ (b)`, found by eliminating `t` from
/// `(t·a, (1−t)·b)`.
pub fn lcm(a: &SparsePoly, b: &SparsePoly) -> Result<SparsePoly, PolyError> {
    if a.is_zero() || b.is_zero() {
        return Ok(SparsePoly::zero(a.domain(), a.nvars()));
    }
    let n = a.nvars();
    let t = SparsePoly::var(a.domain(), n + 1, 0);
    let one_minus_t = &SparsePoly::one(a.domain(), n + 1) - &t;
    let gens = vec![
        t.checked_mul(&a.prepend_vars(1))?,
        one_minus_t.checked_mul(&b.prepend_vars(1))?,
    ];
    let gb = IdealBasis::groebner(gens, MonomialOrder::elimination(n + 1, 1))?;
    let mut free: Vec<SparsePoly> = gb
        .gens()
        .iter()
        .filter_map(|g| g.drop_leading_vars(1))
        .collect();
    // The intersection is principal, so its reduced basis is one element.
    let reduced = IdealBasis::groebner(std::mem::take(&mut free), MonomialOrder::grevlex(n))?;
    match reduced.gens() {
        [g] => Ok(monic(g)),
        _ => Err(PolyError::NotGroebner),
    }
}

/// Monic gcd; `gcd(0, 0) = 0`.
pub fn gcd(a: &SparsePoly, b: &SparsePoly) -> Result<SparsePoly, PolyError> {
    if a.is_zero() {
        return Ok(monic(b));
    }
    if b.is_zero() {
        return Ok(monic(a));
    }
    if a.is_constant() || b.is_constant() {
        return Ok(SparsePoly::one(a.domain(), a.nvars()));
    }
    let l = lcm(a, b)?;
    Ok(monic(&div_exact(&a.checked_mul(b)?, &l)?))
}

pub fn gcd_all(polys: &[SparsePoly]) -> Result<SparsePoly, PolyError> {
    let mut it = polys.iter();
    let Some(first) = it.next() else {
        return Err(PolyError::ZeroInput);
    };
    let mut g = monic(first);
    for f in it {
        if g.is_constant() && !g.is_zero() {
            break;
        }
        g = gcd(&g, f)?;
    }
    Ok(g)
}

fn partials(f: &SparsePoly) -> Vec<SparsePoly> {
    (0..f.nvars()).map(|i| f.derivative(i)).collect()
}

/// Result of a squarefree test. A negative answer carries a nonconstant
/// `witness` with `witness^2` dividing the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Squarefree {
    pub squarefree: bool,
    pub witness: Option<SparsePoly>,
}

/// `gcd(h, ∂h)`, or `None` when every partial of `h` vanishes.
fn gcd_with_partials(h: &SparsePoly) -> Result<Option<SparsePoly>, PolyError> {
    let ds = partials(h);
    if ds.iter().all(SparsePoly::is_zero) {
        return Ok(None);
    }
    let mut all = vec![h.clone()];
    all.extend(ds.into_iter().filter(|d| !d.is_zero()));
    gcd_all(&all).map(Some)
}

/// Finds a nonconstant `g` with `g^2 | h`, given that `h` is not squarefree.
fn square_divisor(h: &SparsePoly) -> Result<SparsePoly, PolyError> {
    let Some(g) = gcd_with_partials(h)? else {
        // Every partial vanishes, so h is a p-th power.
        return h.pth_root()?.ok_or(PolyError::InexactDivision);
    };
    // Every irreducible factor of g divides h to order at least two, so g^2 | h
    // when g is squarefree.
    match gcd_with_partials(&g)? {
        Some(inner) if inner.is_constant() => Ok(g),
        _ => square_divisor(&g),
    }
}

/// Squarefree test for a nonzero polynomial over GF(p), with a checked
/// witness when the answer is negative.
pub fn squarefree_test(f: &SparsePoly) -> Result<Squarefree, PolyError> {
    let Domain::Gfp(_) = f.domain() else {
        return Err(PolyError::NeedsPrimeField);
    };
    if f.is_zero() {
        return Err(PolyError::ZeroInput);
    }
    if f.is_constant() {
        return Ok(Squarefree {
            squarefree: true,
            witness: None,
        });
    }
    let squarefree = match gcd_with_partials(f)? {
        Some(g) => g.is_constant(),
        None => false,
    };
    if squarefree {
        return Ok(Squarefree {
            squarefree: true,
            witness: None,
        });
    }
    let w = square_divisor(f)?;
    div_exact(f, &w.checked_mul(&w)?)?;
    Ok(Squarefree {
        squarefree: false,
        witness: Some(w),
    })
}
