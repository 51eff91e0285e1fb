//! The machine-readable report shared by every subcommand.

use qfp_core::verify::Ledger;
use serde::{Deserialize, Serialize};

use crate::dsl::RingDecl;

pub const SCHEMA_VERSION: &str = "1.0";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    pub command: String,
    /// `null` for commands that do not take a ring.
    pub ring: Option<RingEcho>,
    pub params: Params,
    pub result: serde_json::Value,
    pub certificates: Vec<CertificateEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ledger: Option<Ledger>,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingEcho {
    pub name: String,
    /// The declaration as printed by the formatter.
    pub declaration: String,
    pub mode: String,
    pub q: u64,
    pub p: u64,
    pub variables: Vec<String>,
}

impl From<&RingDecl> for RingEcho {
    fn from(d: &RingDecl) -> Self {
        RingEcho {
            name: d.name.clone(),
            declaration: d.to_string(),
            mode: d.mode.keyword().into(),
            q: d.q,
            p: d.p(),
            variables: d.layout(),
        }
    }
}

/// Parameters that influenced the result.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Params {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_max: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree_cap: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub model: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub filter: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expr: Option<String>,
    pub caps: Caps,
}

/// Resource guards. Every flag is checked against these before work starts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Largest Witt length.
    pub n: usize,
    /// Largest degree cap for graded systems.
    pub degree: u32,
    /// Largest GF(p)-dimension of a finite algebra.
    pub dim: usize,
    /// Largest number of Witt vectors enumerated for a model of `Q`.
    pub enumeration: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            n: 3,
            degree: 8,
            dim: qfp_core::ring_model::DEFAULT_DIM_CAP,
            enumeration: 1 << 16,
        }
    }
}

impl Caps {
    /// Values no `--caps` setting may exceed.
    pub const HARD: Caps = Caps {
        n: 4,
        degree: 16,
        dim: 24,
        enumeration: 1 << 22,
    };
}

/// Evidence attached to a level of a computation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateEntry {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    /// `farkas`, `splitting`, `feasible_truncation`, `nilpotent` or `repeated_factor`.
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree_cap: Option<u32>,
    /// The evidence was re-checked independently of the solver.
    pub checked: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    /// For `farkas`: the cited equations with their weights. Summing
    /// `weight * equation` gives `0 = 1` over GF(p).
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub combination: Vec<WeightedEquation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightedEquation {
    pub index: usize,
    pub weight: u64,
    /// `(unknown, coefficient)` pairs.
    pub coeffs: Vec<(usize, u64)>,
    pub rhs: u64,
}

/// Replays a Farkas combination without the original system.
pub fn combination_is_contradiction(p: u64, combo: &[WeightedEquation]) -> bool {
    let mut sums: std::collections::BTreeMap<usize, u64> = std::collections::BTreeMap::new();
    let mut rhs = 0u64;
    for e in combo {
        for &(j, c) in &e.coeffs {
            let s = sums.entry(j).or_insert(0);
            *s = (*s + e.weight % p * (c % p)) % p;
        }
        rhs = (rhs + e.weight % p * (e.rhs % p)) % p;
    }
    !combo.is_empty() && sums.values().all(|&v| v == 0) && rhs != 0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn contradiction_replay() {
        let eq = |index, weight, coeffs: Vec<(usize, u64)>, rhs| WeightedEquation { index, weight, coeffs, rhs };
        // x + y = 0, x + y = 1 over GF(2)
        let combo = vec![eq(0, 1, vec![(0, 1), (1, 1)], 0), eq(1, 1, vec![(0, 1), (1, 1)], 1)];
        assert!(combination_is_contradiction(2, &combo));
        assert!(!combination_is_contradiction(2, &combo[..1]));
        // 2x = 1 and x = 1 over GF(3): 1*(2x - 1) + 1*(x - 1) has x-coefficient 0 and rhs 2.
        let combo = vec![eq(0, 1, vec![(0, 2)], 1), eq(1, 1, vec![(0, 1)], 1)];
        assert!(combination_is_contradiction(3, &combo));
    }
}
