//! Exact arithmetic: GF(p) scalars, sparse polynomials, monomial orders,
//! Gröbner bases, gcd and squarefree analysis, and GF(p) linear algebra.

pub mod groebner;
pub mod linsys;
pub mod modp;
pub mod order;
pub mod poly;
pub mod ring;
pub mod squarefree;

pub use groebner::IdealBasis;
pub use order::{MonomialOrder, OrderKind};
pub use poly::{Domain, Monomial, PolyError, SparsePoly};
pub use ring::CoeffRing;
