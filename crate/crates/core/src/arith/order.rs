use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::poly::Monomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrderKind {
    /// Graded reverse lexicographic.
    Grevlex,
    /// Graded lexicographic.
    Grlex,
    Lex,
    /// Block order: total degree in the first `block` ranked variables
    /// decides first, ties broken by grevlex on all variables. Eliminates
    /// that block.
    Elimination { block: usize },
}

/// A monomial order over a fixed number of variables.
///
/// `priority[k]` is the variable ranked k-th (rank 0 is the largest
/// variable). The default priority is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialOrder {
    kind: OrderKind,
    priority: Vec<usize>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, priority: Vec<usize>) -> Self {
        let mut check = priority.clone();
        check.sort_unstable();
        assert!(
            check.iter().enumerate().all(|(i, &v)| i == v),
            "priority must be a permutation"
        );
        MonomialOrder { kind, priority }
    }

    pub fn grevlex(nvars: usize) -> Self {
        Self::new(OrderKind::Grevlex, (0..nvars).collect())
    }

    pub fn lex(nvars: usize) -> Self {
        Self::new(OrderKind::Lex, (0..nvars).collect())
    }

    pub fn elimination(nvars: usize, block: usize) -> Self {
        Self::new(OrderKind::Elimination { block }, (0..nvars).collect())
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn nvars(&self) -> usize {
        self.priority.len()
    }

    fn ranked<'a>(&'a self, m: &'a Monomial) -> impl DoubleEndedIterator<Item = u16> + 'a {
        self.priority.iter().map(move |&i| m.exps()[i])
    }

    fn cmp_lex(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.ranked(a).cmp(self.ranked(b))
    }

    fn cmp_grevlex(&self, a: &Monomial, b: &Monomial) -> Ordering {
        a.degree().cmp(&b.degree()).then_with(|| {
            // Smaller exponent in the last differing (lowest-ranked) variable wins.
            for (x, y) in self.ranked(a).rev().zip(self.ranked(b).rev()) {
                if x != y {
                    return y.cmp(&x);
                }
            }
            Ordering::Equal
        })
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self.kind {
            OrderKind::Lex => self.cmp_lex(a, b),
            OrderKind::Grlex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| self.cmp_lex(a, b)),
            OrderKind::Grevlex => self.cmp_grevlex(a, b),
            OrderKind::Elimination { block } => {
                let da: u32 = self.ranked(a).take(block).map(u32::from).sum();
                let db: u32 = self.ranked(b).take(block).map(u32::from).sum();
                da.cmp(&db).then_with(|| self.cmp_grevlex(a, b))
            }
        }
    }
}
