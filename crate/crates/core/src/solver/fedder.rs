//! Fedder's criterion for hypersurfaces, used as an independent oracle at
//! height one: `S/(f)` is F-split at the origin iff `f^{p-1} ∉ (x_0^p, ..., x_d^p)`.

use serde::{Deserialize, Serialize};

use crate::arith::{Domain, IdealBasis, Monomial, MonomialOrder, SparsePoly};

use super::SolverError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum FedderVerdict {
    /// `witness` is a surviving monomial of the normal form of `f^{p-1}`.
    FSplit { witness: String },
    NotFSplit,
}

impl FedderVerdict {
    pub fn is_split(&self) -> bool {
        matches!(self, FedderVerdict::FSplit { .. })
    }
}

pub fn fedder_check(f: &SparsePoly, names: &[String]) -> Result<FedderVerdict, SolverError> {
    let Domain::Gfp(p) = f.domain() else {
        return Err(SolverError::Unsupported("Fedder's criterion needs a prime field".into()));
    };
    if f.is_zero() {
        return Err(SolverError::Unsupported("zero polynomial".into()));
    }
    let nv = f.nvars();
    let frob_max: Vec<SparsePoly> = (0..nv)
        .map(|i| SparsePoly::monomial(Domain::Gfp(p), Monomial::var(nv, i, p as u16), 1))
        .collect();
    let ideal = IdealBasis::groebner(frob_max, MonomialOrder::grevlex(nv))?;
    let nf = ideal.normal_form(&f.checked_pow(p - 1)?)?;
    let witness = nf.terms().next().map(|(m, _)| m.clone());
    Ok(match witness {
        None => FedderVerdict::NotFSplit,
        Some(m) => FedderVerdict::FSplit {
            witness: SparsePoly::monomial(Domain::Gfp(p), m, 1).display_with(names).to_string(),
        },
    })
}
