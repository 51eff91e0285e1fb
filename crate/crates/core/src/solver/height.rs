//! Height search over `n = 1..=n_max`.

use serde::{Deserialize, Serialize};

use crate::arith::linsys::Certificate;
use crate::ring_model::{FiniteAlgebra, GradedQuotient, Reducedness};

use super::fedder::{fedder_check, FedderVerdict};
use super::finite::{split_and_verify, FiniteSplit, FiniteSplitCheck, Splitting};
use super::graded::{split_graded_system, verify_graded_splitting, GradedSplit, SigmaEntry};
use super::qmodel::{QKind, DEFAULT_ENUM_CAP};
use super::SolverError;

#[derive(Debug, Clone, Copy)]
pub enum RingInput<'a> {
    Finite(&'a FiniteAlgebra),
    Graded(&'a GradedQuotient),
}

impl RingInput<'_> {
    pub fn describe(&self) -> String {
        match self {
            RingInput::Finite(r) => r.describe(),
            RingInput::Graded(r) => r.describe(),
        }
    }

    pub fn p(&self) -> u64 {
        match self {
            RingInput::Finite(r) => r.p(),
            RingInput::Graded(r) => r.p(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchLimits {
    pub n_max: usize,
    /// Degree cap `D` for graded systems.
    pub degree_cap: u32,
    pub enum_cap: u64,
    pub seed: u64,
    pub kind: QKind,
    /// Random samples used when re-verifying splittings.
    pub samples: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            n_max: 2,
            degree_cap: 4,
            enum_cap: DEFAULT_ENUM_CAP,
            seed: 0x5eed,
            kind: QKind::Wbar,
            samples: 48,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Split {
        sigma: Splitting,
        check: FiniteSplitCheck,
    },
    NotSplit {
        certificate: Certificate,
        equations: usize,
        #[serde(skip_serializing_if = "Option::is_none")]
        degree_cap: Option<u32>,
    },
    FeasibleUpTo {
        degree_cap: u32,
        unknowns: usize,
        equations: usize,
        verified: bool,
        sigma: Vec<SigmaEntry>,
    },
    GatedNonreduced {
        witness: String,
    },
    Unsupported {
        reason: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelVerdict {
    pub n: usize,
    #[serde(flatten)]
    pub verdict: Verdict,
}

impl LevelVerdict {
    /// Split, or feasible within the degree cap.
    pub fn positive(&self) -> bool {
        matches!(self.verdict, Verdict::Split { .. } | Verdict::FeasibleUpTo { .. })
    }

    pub fn negative(&self) -> bool {
        matches!(self.verdict, Verdict::NotSplit { .. } | Verdict::GatedNonreduced { .. })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HeightKind {
    Exact,
    LowerBound,
    Infinity,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Height {
    pub kind: HeightKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<u32>,
    /// Degree cap of the feasibility evidence behind `value`, in graded mode.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub evidence_degree: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeightReport {
    pub ring: String,
    pub mode: String,
    pub p: u64,
    pub reducedness: Reducedness,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fedder: Option<FedderVerdict>,
    pub verdicts: Vec<LevelVerdict>,
    pub height: Height,
}

impl HeightReport {
    /// No negative verdict follows a positive one.
    pub fn is_monotone(&self) -> bool {
        let mut seen = false;
        for v in &self.verdicts {
            if seen && v.negative() {
                return false;
            }
            seen |= v.positive();
        }
        true
    }
}

/// Gates on reducedness, then runs the splitting search at every `n ≤ n_max`.
pub fn height_search(ring: RingInput<'_>, limits: &SearchLimits) -> Result<HeightReport, SolverError> {
    let (mode, reducedness) = match ring {
        RingInput::Finite(r) => ("finite", r.is_reduced()),
        RingInput::Graded(r) => ("graded", r.is_reduced()?),
    };
    let ns = 1..=limits.n_max;
    let mut fedder = None;
    let mut verdicts = Vec::new();
    if let Reducedness::Nilpotent { witness, .. } = &reducedness {
        verdicts = ns
            .map(|n| LevelVerdict {
                n,
                verdict: Verdict::GatedNonreduced { witness: witness.clone() },
            })
            .collect();
        return Ok(HeightReport {
            ring: ring.describe(),
            mode: mode.into(),
            p: ring.p(),
            reducedness,
            fedder,
            verdicts,
            height: Height {
                kind: HeightKind::Infinity,
                value: None,
                evidence_degree: None,
            },
        });
    }
    match ring {
        RingInput::Finite(r) => {
            for n in ns {
                let (v, check) = split_and_verify(r, n, limits.kind, limits.enum_cap, limits.seed)?;
                let verdict = match v {
                    FiniteSplit::Split { sigma } => Verdict::Split {
                        sigma,
                        check: check.expect("split verdicts are checked"),
                    },
                    FiniteSplit::NotSplit { certificate, equations } => Verdict::NotSplit {
                        certificate,
                        equations,
                        degree_cap: None,
                    },
                };
                verdicts.push(LevelVerdict { n, verdict });
            }
        }
        RingInput::Graded(r) => {
            if let Some(f) = r.hypersurface() {
                fedder = Some(fedder_check(f, r.var_names())?);
            }
            for n in ns {
                let verdict = match split_graded_system(r, n, limits.degree_cap) {
                    Ok(GradedSplit::NotSplit {
                        certificate,
                        equations,
                        degree_cap,
                        ..
                    }) => Verdict::NotSplit {
                        certificate,
                        equations,
                        degree_cap: Some(degree_cap),
                    },
                    Ok(GradedSplit::FeasibleUpTo {
                        degree_cap,
                        unknowns,
                        equations,
                        sigma,
                        ..
                    }) => Verdict::FeasibleUpTo {
                        degree_cap,
                        unknowns,
                        equations,
                        verified: verify_graded_splitting(r, &sigma, limits.seed, limits.samples)?,
                        sigma: sigma.entries(r),
                    },
                    Err(SolverError::Unsupported(reason)) => Verdict::Unsupported { reason },
                    Err(e) => return Err(e),
                };
                verdicts.push(LevelVerdict { n, verdict });
            }
        }
    }
    let height = declare_height(&verdicts, fedder.as_ref());
    Ok(HeightReport {
        ring: ring.describe(),
        mode: mode.into(),
        p: ring.p(),
        reducedness,
        fedder,
        verdicts,
        height,
    })
}

fn declare_height(verdicts: &[LevelVerdict], fedder: Option<&FedderVerdict>) -> Height {
    let mut certified = 0u32;
    for v in verdicts {
        match &v.verdict {
            Verdict::Split { .. } => {
                return Height {
                    kind: HeightKind::Exact,
                    value: Some(v.n as u32),
                    evidence_degree: None,
                }
            }
            Verdict::FeasibleUpTo { degree_cap, .. } => {
                // At n = 1 Fedder's criterion settles the question.
                let exact = v.n == 1 && fedder.is_some_and(FedderVerdict::is_split);
                return Height {
                    kind: if exact { HeightKind::Exact } else { HeightKind::LowerBound },
                    value: Some(v.n as u32),
                    evidence_degree: Some(*degree_cap),
                };
            }
            Verdict::NotSplit { .. } => certified = v.n as u32,
            Verdict::GatedNonreduced { .. } | Verdict::Unsupported { .. } => break,
        }
    }
    Height {
        kind: HeightKind::LowerBound,
        value: Some(certified + 1),
        evidence_degree: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{Domain, SparsePoly};

    #[test]
    fn fields_have_height_one() {
        for q in [2, 4, 8] {
            let f = FiniteAlgebra::galois_field(q).unwrap();
            let rep = height_search(RingInput::Finite(&f), &SearchLimits::default()).unwrap();
            assert_eq!(rep.height.kind, HeightKind::Exact);
            assert_eq!(rep.height.value, Some(1));
            assert!(rep.is_monotone());
        }
    }

    #[test]
    fn dual_numbers_have_infinite_height() {
        let x = SparsePoly::var(Domain::Gfp(2), 1, 0);
        let r = FiniteAlgebra::new(2, vec!["x".into()], vec![&x * &x], 12).unwrap();
        let rep = height_search(RingInput::Finite(&r), &SearchLimits::default()).unwrap();
        assert_eq!(rep.height.kind, HeightKind::Infinity);
        assert!(rep
            .verdicts
            .iter()
            .all(|v| v.verdict == Verdict::GatedNonreduced { witness: "x".into() }));
    }
}
