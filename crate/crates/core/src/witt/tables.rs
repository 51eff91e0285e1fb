//! Universal Witt polynomials by ghost-component inversion.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;

use crate::arith::{Domain, PolyError, SparsePoly};

use super::WittError;

/// Limits on table generation. The defaults allow n ≤ 4 for p ∈ {2, 3} and
/// n ≤ 3 for p = 5.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WittCaps {
    pub max_len: usize,
    /// Bound on `p^(n-1)`, the top degree of a ghost component.
    pub max_power: u64,
}

impl Default for WittCaps {
    fn default() -> Self {
        WittCaps {
            max_len: 4,
            max_power: 27,
        }
    }
}

/// Sum, product and negation polynomials for `W_n` at a fixed prime.
///
/// `sum` and `prod` live in `2n` variables `X_0..X_{n-1}, Y_0..Y_{n-1}`;
/// `neg` in the `n` variables `X_i`. All coefficients are integers.
#[derive(Debug)]
pub struct WittTables {
    p: u64,
    n: usize,
    sum: Vec<SparsePoly>,
    prod: Vec<SparsePoly>,
    neg: Vec<SparsePoly>,
    reduced: OnceLock<Reduced>,
}

#[derive(Debug)]
struct Reduced {
    sum: Vec<SparsePoly>,
    prod: Vec<SparsePoly>,
    neg: Vec<SparsePoly>,
}

/// Ghost polynomial `w_m = Σ_{i≤m} p^i Z_i^(p^(m-i))` in variables
/// `offset..offset+m` of an `nvars`-variable ring.
pub fn ghost_poly(p: u64, m: usize, nvars: usize, offset: usize) -> Result<SparsePoly, PolyError> {
    let mut w = SparsePoly::zero(Domain::Integers, nvars);
    for i in 0..=m {
        let z = SparsePoly::var(Domain::Integers, nvars, offset + i);
        let term = z
            .checked_pow(p.pow((m - i) as u32))?
            .scale(&BigInt::from(p).pow(i as u32));
        w = w.checked_add(&term)?;
    }
    Ok(w)
}

/// Solves `w_m(Z) = targets[m]` for `Z_0..Z_{n-1}` with exact division.
fn invert_ghost(p: u64, targets: &[SparsePoly]) -> Result<Vec<SparsePoly>, PolyError> {
    let mut out: Vec<SparsePoly> = Vec::with_capacity(targets.len());
    for (m, t) in targets.iter().enumerate() {
        let mut acc = t.clone();
        for (i, z) in out.iter().enumerate() {
            let term = z
                .checked_pow(p.pow((m - i) as u32))?
                .scale(&BigInt::from(p).pow(i as u32));
            acc = acc.checked_sub(&term)?;
        }
        out.push(acc.exact_div_by_int(&BigInt::from(p).pow(m as u32))?);
    }
    Ok(out)
}

impl WittTables {
    fn generate(p: u64, n: usize) -> Result<Self, PolyError> {
        let two = 2 * n;
        let mut sum_t = Vec::with_capacity(n);
        let mut prod_t = Vec::with_capacity(n);
        let mut neg_t = Vec::with_capacity(n);
        for m in 0..n {
            let wx = ghost_poly(p, m, two, 0)?;
            let wy = ghost_poly(p, m, two, n)?;
            sum_t.push(wx.checked_add(&wy)?);
            prod_t.push(wx.checked_mul(&wy)?);
            neg_t.push(-&ghost_poly(p, m, n, 0)?);
        }
        Ok(WittTables {
            p,
            n,
            sum: invert_ghost(p, &sum_t)?,
            prod: invert_ghost(p, &prod_t)?,
            neg: invert_ghost(p, &neg_t)?,
            reduced: OnceLock::new(),
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sum(&self) -> &[SparsePoly] {
        &self.sum
    }

    pub fn prod(&self) -> &[SparsePoly] {
        &self.prod
    }

    pub fn neg(&self) -> &[SparsePoly] {
        &self.neg
    }

    fn reduced(&self) -> &Reduced {
        self.reduced.get_or_init(|| {
            let red = |v: &[SparsePoly]| v.iter().map(|f| f.reduce_mod(self.p).lift_to_integers()).collect();
            Reduced {
                sum: red(&self.sum),
                prod: red(&self.prod),
                neg: red(&self.neg),
            }
        })
    }

    /// Tables with coefficients reduced into `0..p`, for characteristic-p use.
    pub fn sum_mod_p(&self) -> &[SparsePoly] {
        &self.reduced().sum
    }

    pub fn prod_mod_p(&self) -> &[SparsePoly] {
        &self.reduced().prod
    }

    pub fn neg_mod_p(&self) -> &[SparsePoly] {
        &self.reduced().neg
    }
}

type Cache = RwLock<HashMap<(u64, usize), Arc<WittTables>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Memoized tables for `(p, n)` within `caps`.
pub fn gen_witt_polys(p: u64, n: usize, caps: WittCaps) -> Result<Arc<WittTables>, WittError> {
    if !crate::arith::modp::is_prime(p) {
        return Err(WittError::NotPrime(p));
    }
    if n == 0 {
        return Err(WittError::ZeroLength);
    }
    let reach = (p as u128).checked_pow(n as u32 - 1).unwrap_or(u128::MAX);
    if n > caps.max_len || reach > caps.max_power as u128 {
        return Err(WittError::CapExceeded { p, n });
    }
    if let Some(t) = cache().read().expect("lock").get(&(p, n)) {
        return Ok(t.clone());
    }
    let t = Arc::new(WittTables::generate(p, n)?);
    Ok(cache()
        .write()
        .expect("lock")
        .entry((p, n))
        .or_insert(t)
        .clone())
}
