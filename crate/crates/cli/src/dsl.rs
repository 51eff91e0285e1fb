//! The `.qfp` ring declaration language.
//!
//! ```text
//! decl  := "ring" IDENT "=" "GF(" INT ")" "[" [identlist] "]" [ "/" "(" polylist ")" ] mode
//! mode  := "finite" | "graded" | "affine"
//! poly  := ["-"] term { ("+" | "-") term }
//! term  := factor { ["*"] factor }
//! factor:= IDENT ["^" INT] | INT
//! ```
//!
//! Whitespace is free and `#` starts a comment. Over `GF(p^k)` with `k > 1`
//! the identifier `gen` names the field generator in finite mode.

use std::fmt;

use num_bigint::BigInt;
use qfp_core::arith::modp;
use qfp_core::arith::{Domain, Monomial, SparsePoly};
use qfp_core::ring_model::{FiniteAlgebra, GradedQuotient, RingError, FIELD_GENERATOR};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// 1-based source position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DslError {
    #[error("{pos}: expected {}, found {found}", expected.join(" or "))]
    Syntax {
        pos: Pos,
        expected: Vec<String>,
        found: String,
    },
    #[error("{pos}: undeclared variable `{name}`")]
    Undeclared { pos: Pos, name: String },
    #[error("{pos}: variable `{name}` declared twice")]
    Duplicate { pos: Pos, name: String },
    #[error("{pos}: {q} is not a prime power")]
    NotPrimePower { pos: Pos, q: u64 },
    #[error("{pos}: relation `{relation}` is not homogeneous")]
    Inhomogeneous { pos: Pos, relation: String },
    #[error("{pos}: {message}")]
    Invalid { pos: Pos, message: String },
    #[error("no ring named `{0}`")]
    UnknownName(String),
    #[error(transparent)]
    Ring(#[from] RingError),
}

impl DslError {
    pub fn pos(&self) -> Option<Pos> {
        match self {
            DslError::Syntax { pos, .. }
            | DslError::Undeclared { pos, .. }
            | DslError::Duplicate { pos, .. }
            | DslError::NotPrimePower { pos, .. }
            | DslError::Inhomogeneous { pos, .. }
            | DslError::Invalid { pos, .. } => Some(*pos),
            DslError::UnknownName(_) | DslError::Ring(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Tok {
    Ident(String),
    Int(u64),
    Sym(char),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::Sym(c) => write!(f, "`{c}`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

const SYMBOLS: &str = "=()[]/,+-*^";

pub(crate) fn lex(text: &str) -> Result<Vec<(Tok, Pos)>, DslError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut col) = (1, 1);
    while let Some(&c) = chars.peek() {
        let pos = Pos { line, col };
        if c == '\n' {
            chars.next();
            line += 1;
            col = 1;
        } else if c.is_whitespace() {
            chars.next();
            col += 1;
        } else if c == '#' {
            while chars.peek().is_some_and(|&c| c != '\n') {
                chars.next();
            }
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                s.push(d);
                chars.next();
                col += 1;
            }
            let n = s.parse().map_err(|_| DslError::Invalid {
                pos,
                message: format!("integer {s} is too large"),
            })?;
            out.push((Tok::Int(n), pos));
        } else if c.is_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_alphanumeric() || **d == '_' || **d == '\'') {
                s.push(d);
                chars.next();
                col += 1;
            }
            out.push((Tok::Ident(s), pos));
        } else if SYMBOLS.contains(c) {
            chars.next();
            col += 1;
            out.push((Tok::Sym(c), pos));
        } else {
            return Err(DslError::Syntax {
                pos,
                expected: vec!["a token".into()],
                found: format!("`{c}`"),
            });
        }
    }
    out.push((Tok::Eof, Pos { line, col }));
    Ok(out)
}

/// A factor of a surface-syntax monomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Factor {
    Int(u64),
    Var { name: String, exp: u32, pos: Pos },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub negative: bool,
    pub factors: Vec<Factor>,
}

/// A polynomial exactly as written, up to spacing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyExpr {
    pub terms: Vec<Term>,
    pub pos: Pos,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Finite-dimensional quotient, enumerated exactly.
    Finite,
    /// Quotient by homogeneous relations, handled degree by degree.
    Graded,
    /// Arbitrary relations; only reducedness is available.
    Affine,
}

impl Mode {
    pub fn keyword(self) -> &'static str {
        match self {
            Mode::Finite => "finite",
            Mode::Graded => "graded",
            Mode::Affine => "affine",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingDecl {
    pub name: String,
    /// Size of the coefficient field.
    pub q: u64,
    pub vars: Vec<String>,
    pub relations: Vec<PolyExpr>,
    pub mode: Mode,
}

pub(crate) struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

impl Parser {
    pub(crate) fn new(toks: Vec<(Tok, Pos)>) -> Self {
        Parser { toks, at: 0 }
    }

    pub(crate) fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    pub(crate) fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.at + k).min(self.toks.len() - 1)].0
    }

    pub(crate) fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    pub(crate) fn bump(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    pub(crate) fn error(&self, expected: &[&str]) -> DslError {
        DslError::Syntax {
            pos: self.pos(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: self.peek().to_string(),
        }
    }

    pub(crate) fn eat_sym(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    pub(crate) fn expect_sym(&mut self, c: char) -> Result<Pos, DslError> {
        let pos = self.pos();
        if self.eat_sym(c) {
            Ok(pos)
        } else {
            Err(self.error(&[&format!("`{c}`")]))
        }
    }

    fn expect_keyword(&mut self, kw: &str) -> Result<Pos, DslError> {
        match self.peek() {
            Tok::Ident(s) if s == kw => Ok(self.bump().1),
            _ => Err(self.error(&[&format!("`{kw}`")])),
        }
    }

    pub(crate) fn expect_ident(&mut self) -> Result<(String, Pos), DslError> {
        match self.peek().clone() {
            Tok::Ident(s) => Ok((s, self.bump().1)),
            _ => Err(self.error(&["identifier"])),
        }
    }

    pub(crate) fn expect_int(&mut self) -> Result<(u64, Pos), DslError> {
        match self.peek().clone() {
            Tok::Int(n) => Ok((n, self.bump().1)),
            _ => Err(self.error(&["integer"])),
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Tok::Ident(_) | Tok::Int(_))
    }

    fn factor(&mut self) -> Result<Factor, DslError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(Factor::Int(n))
            }
            Tok::Ident(name) => {
                let pos = self.bump().1;
                let exp = if self.eat_sym('^') {
                    let (e, epos) = self.expect_int()?;
                    u32::try_from(e).ok().filter(|&e| e <= u16::MAX as u32).ok_or(DslError::Invalid {
                        pos: epos,
                        message: format!("exponent {e} is too large"),
                    })?
                } else {
                    1
                };
                Ok(Factor::Var { name, exp, pos })
            }
            _ => Err(self.error(&["identifier", "integer"])),
        }
    }

    fn term(&mut self, negative: bool) -> Result<Term, DslError> {
        let mut factors = vec![self.factor()?];
        loop {
            // `*` is optional between factors.
            if self.eat_sym('*') || self.starts_factor() {
                factors.push(self.factor()?);
            } else {
                return Ok(Term { negative, factors });
            }
        }
    }

    pub(crate) fn poly(&mut self) -> Result<PolyExpr, DslError> {
        let pos = self.pos();
        let first_negative = self.eat_sym('-');
        let mut terms = vec![self.term(first_negative)?];
        loop {
            if self.eat_sym('+') {
                terms.push(self.term(false)?);
            } else if self.eat_sym('-') {
                terms.push(self.term(true)?);
            } else {
                return Ok(PolyExpr { terms, pos });
            }
        }
    }

    fn decl(&mut self) -> Result<(RingDecl, Pos), DslError> {
        self.expect_keyword("ring")?;
        let (name, _) = self.expect_ident()?;
        self.expect_sym('=')?;
        self.expect_keyword("GF")?;
        self.expect_sym('(')?;
        let (q, qpos) = self.expect_int()?;
        self.expect_sym(')')?;
        self.expect_sym('[')?;
        let mut vars = Vec::new();
        let mut var_pos = Vec::new();
        if !self.eat_sym(']') {
            loop {
                let (v, pos) = self.expect_ident()?;
                vars.push(v);
                var_pos.push(pos);
                if self.eat_sym(']') {
                    break;
                }
                if !self.eat_sym(',') {
                    return Err(self.error(&["`,`", "`]`"]));
                }
            }
        }
        let mut relations = Vec::new();
        if self.eat_sym('/') {
            self.expect_sym('(')?;
            loop {
                relations.push(self.poly()?);
                if self.eat_sym(')') {
                    break;
                }
                if !self.eat_sym(',') {
                    return Err(self.error(&["`,`", "`)`", "`+`", "`-`", "`*`"]));
                }
            }
        }
        let mode = match self.peek() {
            Tok::Ident(s) if s == "finite" => Mode::Finite,
            Tok::Ident(s) if s == "graded" => Mode::Graded,
            Tok::Ident(s) if s == "affine" => Mode::Affine,
            _ => {
                let mut expected = vec!["`finite`", "`graded`", "`affine`"];
                if relations.is_empty() {
                    expected.insert(0, "`/`");
                }
                return Err(self.error(&expected));
            }
        };
        self.bump();
        let decl = RingDecl { name, q, vars, relations, mode };
        decl.validate(qpos, &var_pos)?;
        Ok((decl, qpos))
    }
}

/// Parses a file holding one or more declarations.
pub fn parse_file(text: &str) -> Result<Vec<RingDecl>, DslError> {
    let mut p = Parser::new(lex(text)?);
    let mut decls = Vec::new();
    while *p.peek() != Tok::Eof {
        let (d, _) = p.decl()?;
        if decls.iter().any(|o: &RingDecl| o.name == d.name) {
            return Err(DslError::Invalid {
                pos: p.pos(),
                message: format!("ring `{}` declared twice", d.name),
            });
        }
        decls.push(d);
    }
    if decls.is_empty() {
        return Err(p.error(&["`ring`"]));
    }
    Ok(decls)
}

/// Parses exactly one declaration.
pub fn parse_ring_dsl(text: &str) -> Result<RingDecl, DslError> {
    let mut p = Parser::new(lex(text)?);
    let (d, _) = p.decl()?;
    if *p.peek() != Tok::Eof {
        return Err(p.error(&["end of input"]));
    }
    Ok(d)
}

impl RingDecl {
    /// The same declaration with every source position cleared, so that
    /// declarations compare by content.
    pub fn normalized(&self) -> RingDecl {
        let mut d = self.clone();
        for r in &mut d.relations {
            r.pos = Pos::default();
            for t in &mut r.terms {
                for f in &mut t.factors {
                    if let Factor::Var { pos, .. } = f {
                        *pos = Pos::default();
                    }
                }
            }
        }
        d
    }

    /// `(p, k)` with `q = p^k`.
    pub fn prime_power(&self) -> (u64, u32) {
        modp::prime_power(self.q).expect("validated")
    }

    pub fn p(&self) -> u64 {
        self.prime_power().0
    }

    /// Variable names in the layout of the built ring, with the field
    /// generator first when it is needed.
    pub fn layout(&self) -> Vec<String> {
        let mut names = Vec::new();
        if self.prime_power().1 > 1 && self.mode == Mode::Finite {
            names.push(FIELD_GENERATOR.to_string());
        }
        names.extend(self.vars.iter().cloned());
        names
    }

    fn validate(&self, qpos: Pos, var_pos: &[Pos]) -> Result<(), DslError> {
        let Some((_, k)) = modp::prime_power(self.q) else {
            return Err(DslError::NotPrimePower { pos: qpos, q: self.q });
        };
        if k > 1 && self.mode != Mode::Finite {
            return Err(DslError::Invalid {
                pos: qpos,
                message: format!("{} mode needs a prime field, got GF({})", self.mode.keyword(), self.q),
            });
        }
        for (i, v) in self.vars.iter().enumerate() {
            if self.vars[..i].contains(v) || (k > 1 && v == FIELD_GENERATOR) {
                return Err(DslError::Duplicate {
                    pos: var_pos[i],
                    name: v.clone(),
                });
            }
        }
        for r in &self.relations {
            let f = self.to_poly(r)?;
            if self.mode == Mode::Graded && !f.is_homogeneous() {
                return Err(DslError::Inhomogeneous {
                    pos: r.pos,
                    relation: r.to_string(),
                });
            }
        }
        Ok(())
    }

    /// A relation as a polynomial over GF(p) in [`RingDecl::layout`].
    pub fn to_poly(&self, r: &PolyExpr) -> Result<SparsePoly, DslError> {
        poly_in(r, self.p(), &self.layout())
    }

    pub fn relation_polys(&self) -> Result<Vec<SparsePoly>, DslError> {
        self.relations.iter().map(|r| self.to_poly(r)).collect()
    }
}

/// Evaluates surface syntax over GF(p) in the given variables.
pub fn poly_in(r: &PolyExpr, p: u64, names: &[String]) -> Result<SparsePoly, DslError> {
    let nv = names.len();
    let d = Domain::Gfp(p);
    let mut f = SparsePoly::zero(d, nv);
    for t in &r.terms {
        let mut coeff = BigInt::from(if t.negative { -1 } else { 1 });
        let mut exps = vec![0u32; nv];
        for fac in &t.factors {
            match fac {
                Factor::Int(n) => coeff *= *n,
                Factor::Var { name, exp, pos } => {
                    let i = names.iter().position(|v| v == name).ok_or_else(|| DslError::Undeclared {
                        pos: *pos,
                        name: name.clone(),
                    })?;
                    exps[i] += exp;
                }
            }
        }
        let exps: Vec<u16> = exps
            .into_iter()
            .map(u16::try_from)
            .collect::<Result<_, _>>()
            .map_err(|_| DslError::Invalid {
                pos: r.pos,
                message: "exponent overflow".into(),
            })?;
        f.add_term(Monomial::from_exps(exps), coeff);
    }
    Ok(f)
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Int(n) => write!(f, "{n}"),
            Factor::Var { name, exp: 1, .. } => f.write_str(name),
            Factor::Var { name, exp, .. } => write!(f, "{name}^{exp}"),
        }
    }
}

impl fmt::Display for PolyExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            match (i, t.negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let parts: Vec<String> = t.factors.iter().map(Factor::to_string).collect();
            f.write_str(&parts.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Display for RingDecl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ring {} = GF({})[{}]", self.name, self.q, self.vars.join(", "))?;
        if !self.relations.is_empty() {
            let rels: Vec<String> = self.relations.iter().map(PolyExpr::to_string).collect();
            write!(f, " / ({})", rels.join(", "))?;
        }
        write!(f, " {}", self.mode.keyword())
    }
}

/// A declaration instantiated as a ring.
pub enum BuiltRing {
    Finite(FiniteAlgebra),
    Graded(GradedQuotient),
    /// `GF(p)[vars]/(relations)` with no further structure.
    Affine { p: u64, names: Vec<String>, relations: Vec<SparsePoly> },
}

impl RingDecl {
    pub fn build(&self, dim_cap: usize) -> Result<BuiltRing, DslError> {
        let rels = self.relation_polys()?;
        Ok(match self.mode {
            Mode::Finite => {
                let (p, k) = self.prime_power();
                if k == 1 {
                    BuiltRing::Finite(FiniteAlgebra::new(p, self.vars.clone(), rels, dim_cap)?)
                } else {
                    BuiltRing::Finite(FiniteAlgebra::over_field(self.q, self.vars.clone(), rels, dim_cap)?)
                }
            }
            Mode::Graded => BuiltRing::Graded(GradedQuotient::new(self.p(), self.vars.clone(), rels)?),
            Mode::Affine => BuiltRing::Affine {
                p: self.p(),
                names: self.vars.clone(),
                relations: rels,
            },
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_cubic() {
        let d = parse_ring_dsl("ring E = GF(2)[x,y,z] / (x^3 + y^2*z + y*z^2) graded").unwrap();
        assert_eq!(d.mode, Mode::Graded);
        assert_eq!(d.relations.len(), 1);
        assert_eq!(d.to_string(), "ring E = GF(2)[x, y, z] / (x^3 + y^2*z + y*z^2) graded");
    }

    #[test]
    fn finite_and_bad_field() {
        assert_eq!(parse_ring_dsl("ring A = GF(2)[x] / (x^2) finite").unwrap().mode, Mode::Finite);
        let e = parse_ring_dsl("ring B = GF(6)[x] finite").unwrap_err();
        assert!(matches!(e, DslError::NotPrimePower { q: 6, pos } if pos.line == 1 && pos.col == 13), "{e}");
    }

    #[test]
    fn errors_carry_positions_and_expectations() {
        let e = parse_ring_dsl("ring A = GF(2)[x]\n  / (x^2 +) finite").unwrap_err();
        match e {
            DslError::Syntax { pos, expected, found } => {
                assert_eq!((pos.line, pos.col), (2, 11));
                assert_eq!(expected, vec!["identifier", "integer"]);
                assert_eq!(found, "`)`");
            }
            other => panic!("{other}"),
        }
        let e = parse_ring_dsl("ring A = GF(2)[x] / (y) finite").unwrap_err();
        assert!(matches!(e, DslError::Undeclared { ref name, .. } if name == "y"));
        let e = parse_ring_dsl("ring A = GF(2)[x,y] / (x^2 + y) graded").unwrap_err();
        assert!(matches!(e, DslError::Inhomogeneous { .. }));
        let e = parse_ring_dsl("ring A = GF(2)[x] / (x^2) projective").unwrap_err();
        assert!(matches!(e, DslError::Syntax { ref expected, .. } if expected.len() == 3));
    }

    #[test]
    fn implicit_products_and_generator() {
        let d = parse_ring_dsl("ring K = GF(4)[x] / (x^2 + gen x + 1) finite").unwrap();
        assert_eq!(d.relations[0].to_string(), "x^2 + gen*x + 1");
        match d.build(16).unwrap() {
            BuiltRing::Finite(a) => assert_eq!(a.dim(), 4),
            _ => panic!("finite"),
        }
        assert!(parse_ring_dsl("ring K = GF(4)[x] / (x^2) graded").is_err());
    }

    #[test]
    fn primes_in_names_and_comments() {
        let d = parse_file("# two rings\nring A = GF(2)[s',x] / (s'^2*x^2) affine\nring B = GF(3)[] finite").unwrap();
        assert_eq!(d.len(), 2);
        assert_eq!(d[0].vars, vec!["s'", "x"]);
        assert_eq!(d[1].to_string(), "ring B = GF(3)[] finite");
    }
}
