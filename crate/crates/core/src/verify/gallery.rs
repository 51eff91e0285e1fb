//! Named rings used by the suite, the CLI and the acceptance tests.

use num_bigint::BigInt;

use crate::arith::{Domain, Monomial, SparsePoly};
use crate::ring_model::{FiniteAlgebra, GradedQuotient, RingError, DEFAULT_DIM_CAP};

/// Polynomial from `(coefficient, exponents)` pairs over GF(p).
pub fn poly(p: u64, nvars: usize, terms: &[(i64, &[u16])]) -> SparsePoly {
    SparsePoly::from_terms(
        Domain::Gfp(p),
        nvars,
        terms
            .iter()
            .map(|(c, e)| (Monomial::from_exps(e.to_vec()), BigInt::from(*c))),
    )
}

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

/// A finite gallery ring with a printable name.
pub struct FiniteEntry {
    pub name: &'static str,
    pub ring: FiniteAlgebra,
}

fn one_var(p: u64, rel: &[(i64, &[u16])]) -> Result<FiniteAlgebra, RingError> {
    FiniteAlgebra::new(p, names(&["x"]), vec![poly(p, 1, rel)], DEFAULT_DIM_CAP)
}

/// `GF(2) × GF(2) = GF(2)[x]/(x^2 + x)`.
pub fn gf2_squared() -> Result<FiniteAlgebra, RingError> {
    one_var(2, &[(1, &[2]), (1, &[1])])
}

/// `GF(2) × GF(4) = GF(2)[x]/(x^3 + x^2 + x)`.
pub fn gf2_times_gf4() -> Result<FiniteAlgebra, RingError> {
    one_var(2, &[(1, &[3]), (1, &[2]), (1, &[1])])
}

/// `GF(2)[x]/(x^2)`.
pub fn dual_numbers() -> Result<FiniteAlgebra, RingError> {
    one_var(2, &[(1, &[2])])
}

/// `GF(4)[x]/(x^2)`, with the field generator as an extra variable.
pub fn gf4_dual_numbers() -> Result<FiniteAlgebra, RingError> {
    FiniteAlgebra::over_field(4, names(&["x"]), vec![poly(2, 2, &[(1, &[0, 2])])], DEFAULT_DIM_CAP)
}

/// `GF(2)[x,y]/(x^2, xy, y^3)`: the plane ring `(x^2, xy)` with `y^3` added
/// to make it finite.
pub fn fat_point() -> Result<FiniteAlgebra, RingError> {
    FiniteAlgebra::new(
        2,
        names(&["x", "y"]),
        vec![
            poly(2, 2, &[(1, &[2, 0])]),
            poly(2, 2, &[(1, &[1, 1])]),
            poly(2, 2, &[(1, &[0, 3])]),
        ],
        DEFAULT_DIM_CAP,
    )
}

/// `GF(2)[x]/(x^N)` with maximal ideal `(x)`.
pub fn truncated_line(n: u16) -> Result<FiniteAlgebra, RingError> {
    one_var(2, &[(1, &[n])])?.with_maximal_ideal(vec![poly(2, 1, &[(1, &[1])])])
}

/// Every finite ring in the gallery.
pub fn finite_gallery() -> Result<Vec<FiniteEntry>, RingError> {
    Ok(vec![
        FiniteEntry { name: "GF(2)", ring: FiniteAlgebra::galois_field(2)? },
        FiniteEntry { name: "GF(4)", ring: FiniteAlgebra::galois_field(4)? },
        FiniteEntry { name: "GF(8)", ring: FiniteAlgebra::galois_field(8)? },
        FiniteEntry { name: "GF(2)xGF(2)", ring: gf2_squared()? },
        FiniteEntry { name: "GF(2)xGF(4)", ring: gf2_times_gf4()? },
        FiniteEntry { name: "GF(2)[x]/(x^2)", ring: dual_numbers()? },
        FiniteEntry { name: "GF(4)[x]/(x^2)", ring: gf4_dual_numbers()? },
        FiniteEntry { name: "GF(2)[x,y]/(x^2,xy,y^3)", ring: fat_point()? },
    ])
}

/// A hypersurface `GF(p)[x,y,z]/(f)` with a label.
pub struct Hypersurface {
    pub name: &'static str,
    pub p: u64,
    pub f: SparsePoly,
}

impl Hypersurface {
    pub fn ring(&self) -> Result<GradedQuotient, RingError> {
        GradedQuotient::new(self.p, xyz(), vec![self.f.clone()])
    }
}

pub fn xyz() -> Vec<String> {
    names(&["x", "y", "z"])
}

pub fn supersingular_cubic() -> Hypersurface {
    Hypersurface {
        name: "x^3+y^2*z+y*z^2",
        p: 2,
        f: poly(2, 3, &[(1, &[3, 0, 0]), (1, &[0, 2, 1]), (1, &[0, 1, 2])]),
    }
}

pub fn ordinary_cubic() -> Hypersurface {
    Hypersurface {
        name: "x^3+z^3+y^2*z+x*y*z",
        p: 2,
        f: poly(2, 3, &[(1, &[3, 0, 0]), (1, &[0, 0, 3]), (1, &[0, 2, 1]), (1, &[1, 1, 1])]),
    }
}

/// Homogeneous hypersurfaces in three variables, across both supported primes.
pub fn hypersurfaces() -> Vec<Hypersurface> {
    vec![
        Hypersurface { name: "x", p: 2, f: poly(2, 3, &[(1, &[1, 0, 0])]) },
        Hypersurface { name: "x^2+y*z", p: 2, f: poly(2, 3, &[(1, &[2, 0, 0]), (1, &[0, 1, 1])]) },
        supersingular_cubic(),
        ordinary_cubic(),
        Hypersurface {
            name: "x^3+y^3+z^3",
            p: 2,
            f: poly(2, 3, &[(1, &[3, 0, 0]), (1, &[0, 3, 0]), (1, &[0, 0, 3])]),
        },
        Hypersurface {
            name: "x^2+y^2+z^2",
            p: 3,
            f: poly(3, 3, &[(1, &[2, 0, 0]), (1, &[0, 2, 0]), (1, &[0, 0, 2])]),
        },
        Hypersurface {
            name: "y^2*z-x^3+x*z^2",
            p: 3,
            f: poly(3, 3, &[(1, &[0, 2, 1]), (-1, &[3, 0, 0]), (1, &[1, 0, 2])]),
        },
    ]
}
