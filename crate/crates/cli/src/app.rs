//! Argument parsing and command dispatch.

use std::fmt::Write as _;
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qfp_core::arith::linsys::{check_certificate, Certificate, LinearSystem};
use qfp_core::arith::squarefree::squarefree_test;
use qfp_core::arith::{IdealBasis, MonomialOrder, SparsePoly};
use qfp_core::ring_model::{hypersurface_reducedness, FiniteAlgebra, Reducedness};
use qfp_core::solver::{
    compare_q_models, finite_system, height_search, GradedSystem, HeightKind, HeightReport, QKind, QModel,
    RingInput, SearchLimits, SolverError, Verdict,
};
use qfp_core::verify::{run_suite, SuiteConfig, DEFAULT_SEED};
use thiserror::Error;

use crate::dsl::{parse_file, BuiltRing, DslError, Mode, RingDecl};
use crate::expr::{evaluate, parse_expr, ExprError};
use crate::report::{
    combination_is_contradiction, Caps, CertificateEntry, Params, Report, RingEcho, WeightedEquation,
    SCHEMA_VERSION,
};

#[derive(Debug, Parser)]
#[command(name = "qfp", version, about = "Quasi-F-split heights and truncated Witt vectors over finite fields")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Search for splittings level by level and report the height.
    Height(HeightArgs),
    /// Decide reducedness, with a nilpotent or repeated-factor witness.
    Reduced(ReducedArgs),
    /// Witt-vector arithmetic.
    #[command(subcommand)]
    Witt(WittCommand),
    /// Run the verification ledger.
    Verify(VerifyArgs),
    /// Models of the quotient Q.
    #[command(name = "q", subcommand)]
    Q(QCommand),
}

#[derive(Debug, Subcommand)]
pub enum WittCommand {
    /// Evaluate an expression in W_n and print every intermediate value.
    Eval(EvalArgs),
}

#[derive(Debug, Subcommand)]
pub enum QCommand {
    /// Compare the pushout and quotient presentations by enumeration.
    Compare(QCompareArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Model {
    Wbar,
    Pushout,
}

impl From<Model> for QKind {
    fn from(m: Model) -> Self {
        match m {
            Model::Wbar => QKind::Wbar,
            Model::Pushout => QKind::Pushout,
        }
    }
}

#[derive(Debug, Args)]
pub struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Emit::Text)]
    pub emit: Emit,
    /// Resource guards, e.g. `n=3,degree=8,dim=12,enum=65536`.
    #[arg(long, value_parser = parse_caps, default_value = "")]
    pub caps: Caps,
}

#[derive(Debug, Args)]
pub struct RingArgs {
    /// A `.qfp` file, or a declaration given inline.
    #[arg(long)]
    pub ring: String,
    /// Which declaration of a multi-ring file to use; defaults to the first.
    #[arg(long)]
    pub name: Option<String>,
}

#[derive(Debug, Args)]
pub struct HeightArgs {
    #[command(flatten)]
    pub ring: RingArgs,
    #[arg(long, default_value_t = 2)]
    pub max_n: usize,
    /// Degree cap D for graded systems.
    #[arg(long, default_value_t = 4)]
    pub max_degree: u32,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Presentation of Q used for finite rings.
    #[arg(long, value_enum, default_value_t = Model::Wbar)]
    pub model: Model,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct ReducedArgs {
    #[command(flatten)]
    pub ring: RingArgs,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    /// Evaluate over GF(p).
    #[arg(long, conflicts_with_all = ["q", "ring"])]
    pub p: Option<u64>,
    /// Evaluate over GF(q).
    #[arg(long, conflicts_with = "ring")]
    pub q: Option<u64>,
    /// Evaluate over a finite ring from a declaration.
    #[arg(long)]
    pub ring: Option<String>,
    #[arg(long, requires = "ring")]
    pub name: Option<String>,
    /// Witt length.
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub expr: String,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Comma-separated case-id prefixes.
    #[arg(long)]
    pub filter: Option<String>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct QCompareArgs {
    #[command(flatten)]
    pub ring: RingArgs,
    #[arg(long, default_value_t = 2)]
    pub n: usize,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{origin}:{source}")]
    Parse { origin: String, source: DslError },
    #[error(transparent)]
    Dsl(#[from] DslError),
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error("{what} = {value} exceeds the cap {cap}; raise it with --caps")]
    Cap { what: &'static str, value: u64, cap: u64 },
    #[error("{0}")]
    Usage(String),
}

fn parse_caps(s: &str) -> Result<Caps, String> {
    let mut caps = Caps::default();
    for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let (k, v) = item.split_once('=').ok_or_else(|| format!("expected key=value, got `{item}`"))?;
        let v: u64 = v.trim().parse().map_err(|_| format!("`{v}` is not a number"))?;
        let hard = match k.trim() {
            "n" => Caps::HARD.n as u64,
            "degree" => Caps::HARD.degree as u64,
            "dim" => Caps::HARD.dim as u64,
            "enum" => Caps::HARD.enumeration,
            other => return Err(format!("unknown cap `{other}`; known caps are n, degree, dim, enum")),
        };
        if v > hard {
            return Err(format!("{k} = {v} is above the hard limit {hard}"));
        }
        match k.trim() {
            "n" => caps.n = v as usize,
            "degree" => caps.degree = v as u32,
            "dim" => caps.dim = v as usize,
            _ => caps.enumeration = v,
        }
    }
    Ok(caps)
}

fn guard(what: &'static str, value: u64, cap: u64) -> Result<(), CliError> {
    if value > cap {
        Err(CliError::Cap { what, value, cap })
    } else {
        Ok(())
    }
}

/// A declaration from a file path or inline text.
pub fn load_ring(spec: &str, name: Option<&str>) -> Result<RingDecl, CliError> {
    let (origin, text) = if Path::new(spec).is_file() {
        let text = std::fs::read_to_string(spec).map_err(|source| CliError::Io {
            path: spec.into(),
            source,
        })?;
        (spec.to_string(), text)
    } else if spec.trim_start().starts_with("ring") {
        ("<inline>".to_string(), spec.to_string())
    } else {
        return Err(CliError::Io {
            path: spec.into(),
            source: std::io::Error::new(std::io::ErrorKind::NotFound, "no such file"),
        });
    };
    let decls = parse_file(&text).map_err(|source| CliError::Parse { origin, source })?;
    match name {
        None => Ok(decls.into_iter().next().expect("parse_file returns at least one")),
        Some(n) => decls
            .into_iter()
            .find(|d| d.name == n)
            .ok_or_else(|| DslError::UnknownName(n.into()).into()),
    }
}

/// What a command produced, in both renderings.
pub struct Outcome {
    pub report: Report,
    pub text: String,
}

impl Outcome {
    pub fn render(&self, emit: Emit) -> String {
        match emit {
            Emit::Text => self.text.clone(),
            Emit::Json => self.report.to_json(),
        }
    }
}

pub fn run(cli: &Cli) -> Result<(Outcome, Emit), CliError> {
    Ok(match &cli.command {
        Command::Height(a) => (height(a)?, a.common.emit),
        Command::Reduced(a) => (reduced(a)?, a.common.emit),
        Command::Witt(WittCommand::Eval(a)) => (witt_eval(a)?, a.common.emit),
        Command::Verify(a) => (verify(a), a.common.emit),
        Command::Q(QCommand::Compare(a)) => (q_compare(a)?, a.common.emit),
    })
}

fn report(command: &str, ring: Option<&RingDecl>, params: Params, result: serde_json::Value) -> Report {
    Report {
        version: SCHEMA_VERSION.into(),
        command: command.into(),
        ring: ring.map(RingEcho::from),
        params,
        result,
        certificates: Vec::new(),
        ledger: None,
    }
}

fn to_value<T: serde::Serialize>(v: &T) -> serde_json::Value {
    serde_json::to_value(v).expect("results serialize")
}

fn build(decl: &RingDecl, caps: &Caps) -> Result<BuiltRing, CliError> {
    decl.build(caps.dim).map_err(|e| match e {
        DslError::Ring(qfp_core::ring_model::RingError::DimensionCap { dim, cap }) => CliError::Cap {
            what: "dimension",
            value: dim as u64,
            cap: cap as u64,
        },
        other => other.into(),
    })
}

fn farkas_entry(n: usize, degree_cap: Option<u32>, sys: &LinearSystem, cert: &Certificate) -> CertificateEntry {
    let combination: Vec<WeightedEquation> = cert
        .weights
        .iter()
        .map(|&(index, weight)| {
            let e = &sys.equations()[index];
            WeightedEquation {
                index,
                weight,
                coeffs: e.coeffs.clone(),
                rhs: e.rhs,
            }
        })
        .collect();
    let checked = check_certificate(sys.p(), sys.ncols(), sys.equations(), cert)
        && combination_is_contradiction(sys.p(), &combination);
    CertificateEntry {
        n: Some(n),
        kind: "farkas".into(),
        degree_cap,
        checked,
        witness: None,
        combination,
    }
}

/// Nonzero `t` with `t^p = 0`, by enumeration when the ring is small.
fn finite_nilpotent_exists(alg: &FiniteAlgebra) -> bool {
    match alg.elements(16) {
        Ok(all) => all
            .iter()
            .any(|t| t.iter().any(|&c| c != 0) && alg.frobenius(t).iter().all(|&c| c == 0)),
        Err(_) => !alg.frobenius_kernel().is_empty(),
    }
}

/// `g^2` divides `f`.
fn repeated_factor_checks(f: &SparsePoly, g: &SparsePoly) -> bool {
    let Ok(sq) = g.checked_mul(g) else { return false };
    let Ok(ideal) = IdealBasis::groebner(vec![sq], MonomialOrder::grevlex(f.nvars())) else {
        return false;
    };
    !g.is_constant() && ideal.normal_form(f).is_ok_and(|r| r.is_zero())
}

fn nilpotent_entry(built: &BuiltRing, witness: &str) -> CertificateEntry {
    let checked = match built {
        BuiltRing::Finite(alg) => finite_nilpotent_exists(alg),
        BuiltRing::Graded(r) => r.hypersurface().is_some_and(|f| {
            squarefree_test(f)
                .ok()
                .and_then(|s| s.witness)
                .is_some_and(|g| repeated_factor_checks(f, &g))
        }),
        BuiltRing::Affine { relations, .. } => relations.first().is_some_and(|f| {
            squarefree_test(f)
                .ok()
                .and_then(|s| s.witness)
                .is_some_and(|g| repeated_factor_checks(f, &g))
        }),
    };
    let kind = match built {
        BuiltRing::Finite(_) => "nilpotent",
        _ => "repeated_factor",
    };
    CertificateEntry {
        n: None,
        kind: kind.into(),
        degree_cap: None,
        checked,
        witness: Some(witness.into()),
        combination: Vec::new(),
    }
}

fn height_certificates(
    built: &BuiltRing,
    r: &HeightReport,
    limits: &SearchLimits,
) -> Result<Vec<CertificateEntry>, CliError> {
    let mut out = Vec::new();
    for v in &r.verdicts {
        match &v.verdict {
            Verdict::NotSplit { certificate, degree_cap, .. } => {
                let entry = match built {
                    BuiltRing::Finite(alg) => {
                        let sys = finite_system(&QModel::build(alg, v.n, limits.kind, limits.enum_cap)?)?;
                        farkas_entry(v.n, *degree_cap, &sys, certificate)
                    }
                    BuiltRing::Graded(g) => {
                        let sys = GradedSystem::assemble(g, v.n, degree_cap.unwrap_or(limits.degree_cap))?;
                        farkas_entry(v.n, *degree_cap, sys.system(), certificate)
                    }
                    BuiltRing::Affine { .. } => unreachable!("height rejects affine rings"),
                };
                out.push(entry);
            }
            Verdict::Split { check, .. } => out.push(CertificateEntry {
                n: Some(v.n),
                kind: "splitting".into(),
                degree_cap: None,
                checked: check.ok(),
                witness: None,
                combination: Vec::new(),
            }),
            Verdict::FeasibleUpTo { degree_cap, verified, .. } => out.push(CertificateEntry {
                n: Some(v.n),
                kind: "feasible_truncation".into(),
                degree_cap: Some(*degree_cap),
                checked: *verified,
                witness: None,
                combination: Vec::new(),
            }),
            Verdict::GatedNonreduced { witness } => {
                if out.is_empty() {
                    out.push(nilpotent_entry(built, witness));
                }
            }
            Verdict::Unsupported { .. } => {}
        }
    }
    Ok(out)
}

pub fn height_label(r: &HeightReport) -> String {
    let h = &r.height;
    let mut s = match (h.kind, h.value) {
        (HeightKind::Exact, Some(v)) => format!("{v}"),
        (HeightKind::LowerBound, Some(v)) => format!("at least {v}"),
        (HeightKind::Infinity, _) => "infinite".into(),
        (_, None) => "unknown".into(),
    };
    if let Some(d) = h.evidence_degree {
        let _ = write!(s, " (evidence up to degree {d})");
    }
    s
}

fn height(a: &HeightArgs) -> Result<Outcome, CliError> {
    let caps = a.common.caps;
    guard("max-n", a.max_n as u64, caps.n as u64)?;
    guard("max-degree", a.max_degree as u64, caps.degree as u64)?;
    if a.max_n == 0 {
        return Err(CliError::Usage("--max-n must be at least 1".into()));
    }
    let decl = load_ring(&a.ring.ring, a.ring.name.as_deref())?;
    let built = build(&decl, &caps)?;
    let input = match &built {
        BuiltRing::Finite(alg) => RingInput::Finite(alg),
        BuiltRing::Graded(g) => RingInput::Graded(g),
        BuiltRing::Affine { .. } => {
            return Err(CliError::Usage(format!(
                "ring {} is affine; heights need a finite or graded declaration",
                decl.name
            )))
        }
    };
    let limits = SearchLimits {
        n_max: a.max_n,
        degree_cap: a.max_degree,
        enum_cap: caps.enumeration,
        seed: a.seed,
        kind: a.model.into(),
        ..SearchLimits::default()
    };
    let hr = height_search(input, &limits)?;
    let certificates = height_certificates(&built, &hr, &limits)?;

    let mut text = String::new();
    let _ = writeln!(text, "{decl}");
    let _ = writeln!(text, "p = {}, {} mode, {}", hr.p, hr.mode, reducedness_label(&hr.reducedness));
    if let Some(f) = &hr.fedder {
        let _ = writeln!(
            text,
            "Fedder: {}",
            match f {
                qfp_core::solver::FedderVerdict::FSplit { witness } => format!("F-split (f^(p-1) keeps {witness})"),
                qfp_core::solver::FedderVerdict::NotFSplit => "not F-split".into(),
            }
        );
    }
    for v in &hr.verdicts {
        let line = match &v.verdict {
            Verdict::Split { sigma, check } => format!(
                "split; sigma on a basis of Q of dimension {}: [{}]; re-check {}",
                sigma.q_dim,
                sigma.display.join(", "),
                pass_word(check.ok())
            ),
            Verdict::NotSplit { certificate, equations, degree_cap } => format!(
                "not split{}; {} equations, contradiction from {} of them",
                degree_cap.map(|d| format!(" up to degree {d}")).unwrap_or_default(),
                equations,
                certificate.weights.len()
            ),
            Verdict::FeasibleUpTo { degree_cap, unknowns, equations, verified, .. } => format!(
                "feasible up to degree {degree_cap} ({unknowns} unknowns, {equations} equations); re-check {}",
                pass_word(*verified)
            ),
            Verdict::GatedNonreduced { witness } => format!("skipped: nilpotent {witness}"),
            Verdict::Unsupported { reason } => format!("unsupported: {reason}"),
        };
        let _ = writeln!(text, "n={}: {line}", v.n);
    }
    let _ = writeln!(text, "height: {}", height_label(&hr));

    let params = Params {
        n_max: Some(a.max_n),
        degree_cap: matches!(built, BuiltRing::Graded(_)).then_some(a.max_degree),
        model: matches!(built, BuiltRing::Finite(_)).then(|| format!("{:?}", a.model).to_lowercase()),
        seed: Some(a.seed),
        caps,
        ..Params::default()
    };
    let mut rep = report("height", Some(&decl), params, to_value(&hr));
    rep.certificates = certificates;
    Ok(Outcome { report: rep, text })
}

fn pass_word(ok: bool) -> &'static str {
    if ok {
        "passed"
    } else {
        "FAILED"
    }
}

fn reducedness_label(r: &Reducedness) -> String {
    match r {
        Reducedness::Reduced => "reduced".into(),
        Reducedness::Nilpotent { witness, .. } => format!("not reduced (nilpotent {witness})"),
    }
}

fn reduced(a: &ReducedArgs) -> Result<Outcome, CliError> {
    let caps = a.common.caps;
    let decl = load_ring(&a.ring.ring, a.ring.name.as_deref())?;
    let built = build(&decl, &caps)?;
    let red = match &built {
        BuiltRing::Finite(alg) => alg.is_reduced(),
        BuiltRing::Graded(g) => g.is_reduced().map_err(SolverError::from)?,
        BuiltRing::Affine { names, relations, .. } => match relations.as_slice() {
            [f] => hypersurface_reducedness(f, names).map_err(SolverError::from)?,
            _ => {
                return Err(CliError::Usage(
                    "reducedness of affine rings needs exactly one relation".into(),
                ))
            }
        },
    };
    let mut rep = report(
        "reduced",
        Some(&decl),
        Params { caps, ..Params::default() },
        to_value(&red),
    );
    if let Reducedness::Nilpotent { witness, .. } = &red {
        rep.certificates.push(nilpotent_entry(&built, witness));
    }
    let mut text = format!("{decl}\n{}\n", reducedness_label(&red));
    if let Some(c) = rep.certificates.first() {
        let _ = writeln!(text, "{} witness re-check {}", c.kind.replace('_', " "), pass_word(c.checked));
    }
    Ok(Outcome { report: rep, text })
}

fn witt_eval(a: &EvalArgs) -> Result<Outcome, CliError> {
    let caps = a.common.caps;
    guard("n", a.n as u64, caps.n as u64)?;
    if a.n == 0 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    let decl = match (&a.ring, a.p.or(a.q)) {
        (Some(r), _) => load_ring(r, a.name.as_deref())?,
        (None, Some(q)) => crate::dsl::parse_ring_dsl(&format!("ring GF{q} = GF({q})[] finite"))?,
        (None, None) => return Err(CliError::Usage("one of --p, --q or --ring is required".into())),
    };
    if a.p.is_some_and(|p| !qfp_core::arith::modp::is_prime(p)) {
        return Err(CliError::Usage(format!("--p {} is not prime", a.p.unwrap_or(0))));
    }
    let BuiltRing::Finite(alg) = build(&decl, &caps)? else {
        return Err(CliError::Usage(format!("ring {} must be declared finite", decl.name)));
    };
    let e = parse_expr(&a.expr).map_err(|source| CliError::Parse {
        origin: "<expr>".into(),
        source,
    })?;
    let ev = evaluate(&alg, a.n, &e)?;
    let mut text = String::new();
    for step in &ev.trace {
        let _ = writeln!(text, "{} = {}", step.expr, step.value);
    }
    let _ = writeln!(text, "value in W_{} over {}: ({})", a.n, decl.name, ev.value.join(","));
    let params = Params {
        n: Some(a.n),
        expr: Some(a.expr.clone()),
        caps,
        ..Params::default()
    };
    Ok(Outcome {
        report: report("witt eval", Some(&decl), params, to_value(&ev)),
        text,
    })
}

fn verify(a: &VerifyArgs) -> Outcome {
    let config = SuiteConfig {
        seed: a.seed,
        ..SuiteConfig::default()
    };
    let ledger = run_suite(a.filter.as_deref(), &config);
    let summary = serde_json::json!({
        "rows": ledger.rows.len(),
        "pass": ledger.count(qfp_core::verify::RowVerdict::Pass),
        "fail": ledger.count(qfp_core::verify::RowVerdict::Fail),
        "discrepancy": ledger.count(qfp_core::verify::RowVerdict::Discrepancy),
    });
    let params = Params {
        seed: Some(a.seed),
        filter: a.filter.clone(),
        caps: a.common.caps,
        ..Params::default()
    };
    let text = ledger.to_table();
    let mut rep = report("verify", None, params, summary);
    rep.ledger = Some(ledger);
    Outcome { report: rep, text }
}

fn q_compare(a: &QCompareArgs) -> Result<Outcome, CliError> {
    let caps = a.common.caps;
    guard("n", a.n as u64, caps.n as u64)?;
    let decl = load_ring(&a.ring.ring, a.ring.name.as_deref())?;
    if decl.mode != Mode::Finite {
        return Err(CliError::Usage(format!("ring {} must be declared finite", decl.name)));
    }
    let BuiltRing::Finite(alg) = build(&decl, &caps)? else {
        unreachable!("finite mode builds a finite algebra")
    };
    let c = compare_q_models(&alg, a.n, caps.enumeration)?;
    let text = format!(
        "{decl}\nn = {}: {} Witt vectors\npushout: {} classes ({} killed)\nWbar:    {} classes ({} killed)\nwell defined: {}, bijective: {}, equivariant: {}\nisomorphic: {}\n",
        c.n,
        c.witt_size,
        c.pushout_classes,
        c.pushout_killed,
        c.wbar_classes,
        c.wbar_killed,
        c.well_defined,
        c.bijective,
        c.equivariant,
        c.isomorphic()
    );
    let params = Params {
        n: Some(a.n),
        caps,
        ..Params::default()
    };
    Ok(Outcome {
        report: report("q compare", Some(&decl), params, to_value(&c)),
        text,
    })
}
