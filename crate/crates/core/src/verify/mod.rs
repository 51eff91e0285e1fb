//! A reproducible ledger of checks on Witt arithmetic, `Q_{R,n}` and heights.
//!
//! Each case produces one or more rows `(case, anchor, check, verdict)`.
//! Sampled cases draw from a ChaCha stream seeded by the suite seed, so two
//! runs with the same seed produce identical ledgers regardless of filters.

pub mod gallery;
mod solver_cases;
mod witt_cases;

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RowVerdict {
    Pass,
    Fail,
    /// The computation is consistent; a printed formula it was compared
    /// against is not.
    Discrepancy,
}

impl RowVerdict {
    pub fn label(self) -> &'static str {
        match self {
            RowVerdict::Pass => "PASS",
            RowVerdict::Fail => "FAIL",
            RowVerdict::Discrepancy => "DISCREPANCY",
        }
    }

    fn from_bool(ok: bool) -> Self {
        if ok {
            RowVerdict::Pass
        } else {
            RowVerdict::Fail
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LedgerRow {
    pub case: String,
    pub anchor: String,
    pub check: String,
    pub verdict: RowVerdict,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ledger {
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub filter: Option<String>,
    pub rows: Vec<LedgerRow>,
}

impl Ledger {
    /// No row failed.
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.verdict != RowVerdict::Fail)
    }

    pub fn rows_for<'a>(&'a self, case: &'a str) -> impl Iterator<Item = &'a LedgerRow> + 'a {
        self.rows.iter().filter(move |r| r.case == case)
    }

    pub fn count(&self, verdict: RowVerdict) -> usize {
        self.rows.iter().filter(|r| r.verdict == verdict).count()
    }

    /// Fixed-width text rendering.
    pub fn to_table(&self) -> String {
        let wc = self.rows.iter().map(|r| r.case.len()).max().unwrap_or(4).max(4);
        let wa = self.rows.iter().map(|r| r.anchor.len()).max().unwrap_or(6).max(6);
        let wk = self.rows.iter().map(|r| r.check.len()).max().unwrap_or(5).max(5);
        let mut s = String::new();
        let _ = writeln!(s, "seed: {}", self.seed);
        let _ = writeln!(s, "{:wc$}  {:wa$}  {:wk$}  {:11}  DETAIL", "CASE", "ANCHOR", "CHECK", "VERDICT");
        for r in &self.rows {
            let _ = writeln!(
                s,
                "{:wc$}  {:wa$}  {:wk$}  {:11}  {}",
                r.case,
                r.anchor,
                r.check,
                r.verdict.label(),
                r.detail
            );
        }
        let _ = writeln!(
            s,
            "{} rows: {} pass, {} fail, {} discrepancy",
            self.rows.len(),
            self.count(RowVerdict::Pass),
            self.count(RowVerdict::Fail),
            self.count(RowVerdict::Discrepancy)
        );
        s
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Random pairs per `(p, n)` for the ghost oracle.
    pub ghost_samples: usize,
    /// Random products per `(n, k)` for cofinality.
    pub cofinality_samples: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: DEFAULT_SEED,
            ghost_samples: 500,
            cofinality_samples: 200,
        }
    }
}

pub const DEFAULT_SEED: u64 = 20240611;

/// Case ids with their anchors, in ledger order.
pub const CASES: &[(&str, &str)] = &[
    ("WITT-AXIOMS", "witt.ghost-compatibility"),
    ("WITT-FORMULAS", "witt.second-coordinate-polynomials"),
    ("WITT-OPERATORS", "witt.p-equals-fv-equals-vf"),
    ("WITT-STRUCTURE", "witt.small-witt-rings"),
    ("WITT-GALOIS", "witt.galois-ring"),
    ("PERFECT-COLLAPSE", "wbar.perfect-collapse"),
    ("KER-R-ACTION", "witt.ker-restriction-action"),
    ("COFINALITY", "witt.cofinality-bound"),
    ("PHI-KERNEL", "phi.reduced-iff-injective"),
    ("EXAMPLE-4", "example.inseparable-base-change"),
    ("Q-COMPARE", "q.pushout-vs-wbar"),
    ("MONOTONE", "height.monotone-in-n"),
    ("FEDDER-AGREEMENT", "height.f-pure-iff-1-quasi-f-pure"),
    ("ETALE-SMOKE", "height.finite-etale-invariance"),
    ("HEIGHT-GALLERY", "height.gallery"),
];

pub fn anchor_of(case: &str) -> &'static str {
    CASES
        .iter()
        .find(|(c, _)| *c == case)
        .map(|(_, a)| *a)
        .unwrap_or("unanchored")
}

/// Collects rows for one case.
pub(crate) struct CaseRows {
    case: &'static str,
    rows: Vec<LedgerRow>,
}

impl CaseRows {
    fn new(case: &'static str) -> Self {
        CaseRows { case, rows: Vec::new() }
    }

    pub(crate) fn push(&mut self, check: impl Into<String>, verdict: RowVerdict, detail: impl Into<String>) {
        self.rows.push(LedgerRow {
            case: self.case.into(),
            anchor: anchor_of(self.case).into(),
            check: check.into(),
            verdict,
            detail: detail.into(),
        });
    }

    pub(crate) fn check(&mut self, check: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.push(check, RowVerdict::from_bool(ok), detail);
    }

    /// Records an operational error as a failed row.
    pub(crate) fn error(&mut self, check: impl Into<String>, err: impl std::fmt::Display) {
        self.push(check, RowVerdict::Fail, format!("error: {err}"));
    }
}

fn matches(filter: Option<&str>, case: &str) -> bool {
    match filter {
        None => true,
        Some(f) => f
            .split(',')
            .map(str::trim)
            .any(|f| !f.is_empty() && case.to_ascii_uppercase().starts_with(&f.to_ascii_uppercase())),
    }
}

/// Runs every case whose id starts with one of the comma-separated filters.
pub fn run_suite(filter: Option<&str>, config: &SuiteConfig) -> Ledger {
    let mut rows = Vec::new();
    for (case, _) in CASES {
        if !matches(filter, case) {
            continue;
        }
        let mut out = CaseRows::new(case);
        match *case {
            "WITT-AXIOMS" => witt_cases::axioms(&mut out, config),
            "WITT-FORMULAS" => witt_cases::formulas(&mut out),
            "WITT-OPERATORS" => witt_cases::operators(&mut out),
            "WITT-STRUCTURE" => witt_cases::structure(&mut out),
            "WITT-GALOIS" => witt_cases::galois(&mut out),
            "PERFECT-COLLAPSE" => witt_cases::perfect_collapse(&mut out),
            "KER-R-ACTION" => witt_cases::ker_action(&mut out),
            "COFINALITY" => witt_cases::cofinality(&mut out, config),
            "PHI-KERNEL" => solver_cases::phi_kernel(&mut out),
            "EXAMPLE-4" => solver_cases::example_four(&mut out),
            "Q-COMPARE" => solver_cases::q_compare(&mut out),
            "MONOTONE" => solver_cases::monotone(&mut out, config),
            "FEDDER-AGREEMENT" => solver_cases::fedder_agreement(&mut out),
            "ETALE-SMOKE" => solver_cases::etale_smoke(&mut out, config),
            "HEIGHT-GALLERY" => solver_cases::height_gallery(&mut out, config),
            _ => unreachable!("case list"),
        }
        rows.extend(out.rows);
    }
    Ledger {
        seed: config.seed,
        filter: filter.map(str::to_string),
        rows,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn filters_select_by_prefix() {
        assert!(matches(Some("example"), "EXAMPLE-4"));
        assert!(matches(Some("KER, PHI"), "PHI-KERNEL"));
        assert!(!matches(Some("WITT-A"), "WITT-GALOIS"));
        assert!(matches(None, "ANY"));
    }

    #[test]
    fn every_case_has_an_anchor() {
        for (c, a) in CASES {
            assert_eq!(anchor_of(c), *a);
        }
    }

    #[test]
    fn example_four_has_three_rows() {
        let l = run_suite(Some("EXAMPLE-4"), &SuiteConfig::default());
        assert_eq!(l.rows.len(), 3);
        assert!(l.passed(), "{}", l.to_table());
    }

    #[test]
    fn full_suite_has_no_failures() {
        let l = run_suite(None, &SuiteConfig::default());
        assert!(l.passed(), "{}", l.to_table());
        assert_eq!(l.count(RowVerdict::Discrepancy), 3, "{}", l.to_table());
    }
}
