//! Witt-vector expressions for `qfp witt eval`.
//!
//! ```text
//! expr  := ["-"] prod { ("+" | "-") prod }
//! prod  := power { "*" power }
//! power := atom ["^" INT]
//! atom  := INT | "[" poly "]" | "(" poly "," poly { "," poly } ")"
//!        | "(" expr ")" | "F" "(" expr ")" | "V" "(" expr ")"
//! ```
//!
//! `[r]` is the Teichmüller lift of a ring element, a parenthesised list with
//! commas is a vector given by coordinates, and an integer is its image in
//! `W_n`.

use std::fmt;

use qfp_core::ring_model::{Elem, FiniteAlgebra, RingError};
use qfp_core::witt::{Witt, WittError, WittVector};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dsl::{lex, poly_in, DslError, Parser, PolyExpr, Pos, Tok};

#[derive(Debug, Error)]
pub enum ExprError {
    #[error(transparent)]
    Dsl(#[from] DslError),
    #[error(transparent)]
    Witt(#[from] WittError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("{pos}: vector has {got} coordinates, expected {expected}")]
    Length { pos: Pos, expected: usize, got: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Int(u64),
    Teichmuller(PolyExpr),
    Vector(Vec<PolyExpr>, Pos),
    Neg(Box<Expr>),
    Bin(BinOp, Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Frobenius(Box<Expr>),
    Verschiebung(Box<Expr>),
}

impl Expr {
    /// Binding strength, for printing with minimal parentheses.
    fn level(&self) -> u8 {
        match self {
            Expr::Bin(BinOp::Add | BinOp::Sub, ..) | Expr::Neg(_) => 0,
            Expr::Bin(BinOp::Mul, ..) => 1,
            Expr::Pow(..) => 2,
            _ => 3,
        }
    }

    fn fmt_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.level() < min {
            write!(f, "(")?;
            self.fmt_at(f, 0)?;
            return write!(f, ")");
        }
        match self {
            Expr::Int(k) => write!(f, "{k}"),
            Expr::Teichmuller(r) => write!(f, "[{r}]"),
            Expr::Vector(cs, _) => {
                let parts: Vec<String> = cs.iter().map(PolyExpr::to_string).collect();
                write!(f, "({})", parts.join(", "))
            }
            Expr::Neg(a) => {
                write!(f, "-")?;
                a.fmt_at(f, 1)
            }
            Expr::Bin(op, a, b) => {
                a.fmt_at(f, self.level())?;
                let (sym, rhs_min) = match op {
                    BinOp::Add => (" + ", 1),
                    BinOp::Sub => (" - ", 1),
                    BinOp::Mul => ("*", 2),
                };
                f.write_str(sym)?;
                b.fmt_at(f, rhs_min)
            }
            Expr::Pow(a, e) => {
                a.fmt_at(f, 3)?;
                write!(f, "^{e}")
            }
            Expr::Frobenius(a) => {
                write!(f, "F(")?;
                a.fmt_at(f, 0)?;
                write!(f, ")")
            }
            Expr::Verschiebung(a) => {
                write!(f, "V(")?;
                a.fmt_at(f, 0)?;
                write!(f, ")")
            }
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_at(f, 0)
    }
}

impl Parser {
    fn expr(&mut self) -> Result<Expr, DslError> {
        let mut acc = if self.eat_sym('-') {
            Expr::Neg(Box::new(self.prod()?))
        } else {
            self.prod()?
        };
        loop {
            let op = if self.eat_sym('+') {
                BinOp::Add
            } else if self.eat_sym('-') {
                BinOp::Sub
            } else {
                return Ok(acc);
            };
            acc = Expr::Bin(op, Box::new(acc), Box::new(self.prod()?));
        }
    }

    fn prod(&mut self) -> Result<Expr, DslError> {
        let mut acc = self.power()?;
        while self.eat_sym('*') {
            acc = Expr::Bin(BinOp::Mul, Box::new(acc), Box::new(self.power()?));
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Expr, DslError> {
        let a = self.atom()?;
        if self.eat_sym('^') {
            let (e, pos) = self.expect_int()?;
            let e = u32::try_from(e).map_err(|_| DslError::Invalid {
                pos,
                message: format!("exponent {e} is too large"),
            })?;
            return Ok(Expr::Pow(Box::new(a), e));
        }
        Ok(a)
    }

    /// Whether the group opened just before the cursor holds a comma at depth zero.
    fn group_has_comma(&self) -> bool {
        let mut depth = 0usize;
        let mut k = 0;
        loop {
            match self.peek_at(k) {
                Tok::Eof => return false,
                Tok::Sym('(' | '[') => depth += 1,
                Tok::Sym(')' | ']') if depth == 0 => return false,
                Tok::Sym(')' | ']') => depth -= 1,
                Tok::Sym(',') if depth == 0 => return true,
                _ => {}
            }
            k += 1;
        }
    }

    fn atom(&mut self) -> Result<Expr, DslError> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Int(k) => {
                self.bump();
                Ok(Expr::Int(k))
            }
            Tok::Sym('[') => {
                self.bump();
                let r = self.poly()?;
                self.expect_sym(']')?;
                Ok(Expr::Teichmuller(r))
            }
            Tok::Sym('(') => {
                self.bump();
                if self.group_has_comma() {
                    let mut coords = vec![self.poly()?];
                    while self.eat_sym(',') {
                        coords.push(self.poly()?);
                    }
                    self.expect_sym(')')?;
                    Ok(Expr::Vector(coords, pos))
                } else {
                    let e = self.expr()?;
                    self.expect_sym(')')?;
                    Ok(e)
                }
            }
            Tok::Ident(s) if (s == "F" || s == "V") && *self.peek_at(1) == Tok::Sym('(') => {
                self.bump();
                self.bump();
                let e = Box::new(self.expr()?);
                self.expect_sym(')')?;
                Ok(if s == "F" { Expr::Frobenius(e) } else { Expr::Verschiebung(e) })
            }
            _ => Err(self.error(&["integer", "`[`", "`(`", "`F(`", "`V(`"])),
        }
    }
}

pub fn parse_expr(text: &str) -> Result<Expr, DslError> {
    let mut p = Parser::new(lex(text)?);
    let e = p.expr()?;
    if *p.peek() != Tok::Eof {
        return Err(p.error(&["`+`", "`-`", "`*`", "`^`", "end of input"]));
    }
    Ok(e)
}

/// One evaluated subexpression.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub expr: String,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Evaluation {
    pub expr: String,
    /// Coordinates printed in the ring's variables.
    pub value: Vec<String>,
    pub trace: Vec<TraceStep>,
}

pub fn format_vector(alg: &FiniteAlgebra, a: &[Elem]) -> String {
    let parts: Vec<String> = a.iter().map(|c| alg.display_elem(c)).collect();
    format!("({})", parts.join(","))
}

struct Evaluator<'a> {
    w: &'a Witt<'a, FiniteAlgebra>,
    alg: &'a FiniteAlgebra,
    trace: Vec<TraceStep>,
}

impl Evaluator<'_> {
    fn elem(&self, r: &PolyExpr) -> Result<Elem, ExprError> {
        let f = poly_in(r, self.alg.p(), self.alg.var_names())?;
        Ok(self.alg.elem_from_poly(&f)?)
    }

    fn eval(&mut self, e: &Expr) -> Result<WittVector<Elem>, ExprError> {
        let w = self.w;
        let v = match e {
            Expr::Int(k) => w.scale(*k, &w.one())?,
            Expr::Teichmuller(r) => w.teichmuller(&self.elem(r)?),
            Expr::Vector(cs, pos) => {
                if cs.len() != w.n() {
                    return Err(ExprError::Length {
                        pos: *pos,
                        expected: w.n(),
                        got: cs.len(),
                    });
                }
                cs.iter().map(|c| self.elem(c)).collect::<Result<_, _>>()?
            }
            Expr::Neg(a) => {
                let a = self.eval(a)?;
                w.neg(&a)?
            }
            Expr::Bin(op, a, b) => {
                let (a, b) = (self.eval(a)?, self.eval(b)?);
                match op {
                    BinOp::Add => w.add(&a, &b)?,
                    BinOp::Sub => w.sub(&a, &b)?,
                    BinOp::Mul => w.mul(&a, &b)?,
                }
            }
            Expr::Pow(a, k) => {
                let base = self.eval(a)?;
                let mut acc = w.one();
                for bit in (0..u32::BITS - k.leading_zeros()).rev() {
                    acc = w.mul(&acc, &acc)?;
                    if k >> bit & 1 == 1 {
                        acc = w.mul(&acc, &base)?;
                    }
                }
                acc
            }
            Expr::Frobenius(a) => {
                let a = self.eval(a)?;
                w.frobenius(&a)?
            }
            Expr::Verschiebung(a) => {
                let a = self.eval(a)?;
                w.verschiebung(&a)?
            }
        };
        let step = TraceStep {
            expr: e.to_string(),
            value: format_vector(self.alg, &v),
        };
        if !self.trace.contains(&step) {
            self.trace.push(step);
        }
        Ok(v)
    }
}

/// Evaluates `e` in `W_n(alg)`, recording every distinct subexpression.
pub fn evaluate(alg: &FiniteAlgebra, n: usize, e: &Expr) -> Result<Evaluation, ExprError> {
    let w = Witt::new(alg, alg.p(), n)?;
    let mut ev = Evaluator { w: &w, alg, trace: Vec::new() };
    let v = ev.eval(e)?;
    Ok(Evaluation {
        expr: e.to_string(),
        value: v.iter().map(|c| alg.display_elem(c)).collect(),
        trace: ev.trace,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eval(q: u64, n: usize, s: &str) -> Evaluation {
        let f = FiniteAlgebra::galois_field(q).unwrap();
        evaluate(&f, n, &parse_expr(s).unwrap()).unwrap()
    }

    #[test]
    fn four_in_w3() {
        let e = eval(2, 3, "[1]+[1]+[1]+[1]");
        assert_eq!(e.value, vec!["0", "0", "1"]);
        let shown: Vec<(&str, &str)> = e.trace.iter().map(|t| (t.expr.as_str(), t.value.as_str())).collect();
        assert_eq!(
            shown,
            vec![
                ("[1]", "(1,0,0)"),
                ("[1] + [1]", "(0,1,0)"),
                ("[1] + [1] + [1]", "(1,1,0)"),
                ("[1] + [1] + [1] + [1]", "(0,0,1)"),
            ]
        );
    }

    #[test]
    fn operators_and_literals() {
        assert_eq!(eval(2, 3, "V([1])^2").value, vec!["0", "0", "1"]);
        assert_eq!(eval(2, 3, "F(V(1)) - 2").value, vec!["0", "0", "0"]);
        assert_eq!(eval(2, 2, "(1, 1) * 3").value, eval(2, 2, "-(1, 1)").value);
        assert_eq!(eval(4, 2, "[gen]^3").value, vec!["1", "0"]);
    }

    #[test]
    fn printing_round_trips() {
        for s in ["[1] + [1]*(2 - V([x]))", "-(1, x + 1)^2", "F(3*[gen] - 1)"] {
            let e = parse_expr(s).unwrap();
            assert_eq!(parse_expr(&e.to_string()).unwrap().to_string(), e.to_string());
        }
    }

    #[test]
    fn length_and_syntax_errors() {
        let f = FiniteAlgebra::galois_field(2).unwrap();
        let err = evaluate(&f, 3, &parse_expr("(1, 0)").unwrap()).unwrap_err();
        assert!(matches!(err, ExprError::Length { expected: 3, got: 2, .. }));
        assert!(matches!(parse_expr("[1] +"), Err(DslError::Syntax { .. })));
    }
}
