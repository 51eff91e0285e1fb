//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
//!
//! Built without the libtest harness so the lines are printed on every
//! `cargo test`, not only on failure.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use qfp::dsl::parse_ring_dsl;
use qfp::report::Report;
use qfp_core::verify::{run_suite, Ledger, LedgerRow, RowVerdict, SuiteConfig};

struct Outcome {
    ok: bool,
    detail: String,
}

impl Outcome {
    fn new(ok: bool, detail: impl Into<String>) -> Self {
        Outcome { ok, detail: detail.into() }
    }
}

struct Suite {
    config: SuiteConfig,
}

impl Suite {
    fn run(&self, filter: &str) -> (Ledger, Duration) {
        let t = Instant::now();
        let ledger = run_suite(Some(filter), &self.config);
        (ledger, t.elapsed())
    }
}

fn rows<'a>(l: &'a Ledger, case: &'a str) -> Vec<&'a LedgerRow> {
    l.rows_for(case).collect()
}

fn all_pass(rows: &[&LedgerRow]) -> bool {
    !rows.is_empty() && rows.iter().all(|r| r.verdict == RowVerdict::Pass)
}

fn find<'a>(rows: &[&'a LedgerRow], check: &str) -> Option<&'a LedgerRow> {
    rows.iter().copied().find(|r| r.check == check)
}

fn passes(rows: &[&LedgerRow], check: &str) -> bool {
    find(rows, check).is_some_and(|r| r.verdict == RowVerdict::Pass)
}

fn failures(rows: &[&LedgerRow]) -> String {
    let bad: Vec<String> = rows
        .iter()
        .filter(|r| r.verdict == RowVerdict::Fail)
        .map(|r| format!("{}: {}", r.check, r.detail))
        .collect();
    if bad.is_empty() {
        String::new()
    } else {
        format!("; failing: {}", bad.join(" | "))
    }
}

fn qfp(args: &[&str]) -> Result<Vec<u8>, String> {
    let o = Command::new(env!("CARGO_BIN_EXE_qfp"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    if o.status.success() {
        Ok(o.stdout)
    } else {
        Err(String::from_utf8_lossy(&o.stderr).into_owned())
    }
}

fn manifest(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(rel)
}

fn ghost_oracle(s: &Suite) -> Outcome {
    let (l, t) = s.run("WITT-AXIOMS");
    let r = rows(&l, "WITT-AXIOMS");
    let oracle = r.iter().filter(|r| r.check.starts_with("ghost oracle")).count();
    let ok = all_pass(&r) && oracle == 8 && t < Duration::from_secs(60);
    Outcome::new(ok, format!("{oracle} (p, n) blocks of 500 pairs, {:.1} s{}", t.as_secs_f64(), failures(&r)))
}

fn formulas(s: &Suite) -> Outcome {
    let (l, _) = s.run("WITT-FORMULAS");
    let r = rows(&l, "WITT-FORMULAS");
    let s1 = find(&r, "S_1 at p=2").is_some_and(|r| r.verdict == RowVerdict::Pass && r.detail.ends_with("-X0*Y0 + X1 + Y1"));
    let p1 = find(&r, "P_1 at p=2")
        .is_some_and(|r| r.verdict == RowVerdict::Pass && r.detail.ends_with("X1*Y0^2 + X0^2*Y1 + 2*X1*Y1"));
    let s1_3 = find(&r, "S_1 at p=3")
        .is_some_and(|r| r.verdict == RowVerdict::Discrepancy && r.detail.contains("-X0^2*Y0 - X0*Y0^2 + X1 + Y1"));
    Outcome::new(s1 && p1 && s1_3, format!("S_1, P_1 at p=2 exact; S_1 at p=3 flagged = {s1_3}"))
}

fn operators(s: &Suite) -> Outcome {
    let (l, _) = s.run("WITT-OPERATORS");
    let r = rows(&l, "WITT-OPERATORS");
    let ok = all_pass(&r)
        && ["W_3(GF(2))", "W_2(GF(4))"].iter().all(|w| {
            ["FV = VF = p on ", "p = (0,1,0,...) on ", "restriction is a ring map on ", "F is a ring map on ", "V is additive on "]
                .iter()
                .all(|c| passes(&r, &format!("{c}{w}")))
        })
        && passes(&r, "V non-multiplicative in W_3(GF(2))");
    Outcome::new(ok, format!("{} rows{}", r.len(), failures(&r)))
}

fn structures(s: &Suite) -> Outcome {
    let (l, _) = s.run("WITT-STRUCTURE,WITT-GALOIS,PERFECT-COLLAPSE");
    let st = rows(&l, "WITT-STRUCTURE");
    let ga = rows(&l, "WITT-GALOIS");
    let pc = rows(&l, "PERFECT-COLLAPSE");
    let ok = passes(&st, "W_2(GF(2)) = Z/4")
        && passes(&st, "W_3(GF(2)) = Z/8")
        && passes(&ga, "W_2(GF(4)) = Z/4[u]/(u^2+u+1)")
        && [(2, 2), (2, 3), (4, 2), (8, 2)]
            .iter()
            .all(|(q, n)| passes(&pc, &format!("Wbar_{n}(GF({q})) = GF({q})")));
    Outcome::new(ok, format!("{} isomorphisms checked", st.len() + ga.len() + pc.len()))
}

fn ker_action(s: &Suite) -> Outcome {
    let (l, _) = s.run("KER-R-ACTION");
    let r = rows(&l, "KER-R-ACTION");
    let ok = r.len() == 2
        && r.iter().all(|r| {
            r.verdict == RowVerdict::Discrepancy && r.detail.contains("law holds") && r.detail.contains("index fails: a=")
        });
    Outcome::new(ok, "alpha_0 law exhaustive on W_2(GF(4)), W_3(GF(2)); last-index witnesses recorded")
}

fn phi_kernel(s: &Suite) -> Outcome {
    let (l, _) = s.run("PHI-KERNEL");
    let r = rows(&l, "PHI-KERNEL");
    let rings = ["GF(4)", "GF(8)", "GF(2)xGF(2)", "GF(2)[x]/(x^2)", "GF(4)[x]/(x^2)", "GF(2)[x,y]/(x^2,xy,y^3)"];
    let ok = all_pass(&r)
        && rings
            .iter()
            .all(|g| [1, 2].iter().all(|n| passes(&r, &format!("ker Phi = {{t^p = 0}} on {g} n={n}"))));
    Outcome::new(ok, format!("{} rows{}", r.len(), failures(&r)))
}

fn example_four(s: &Suite) -> Outcome {
    let (l, _) = s.run("EXAMPLE-4");
    let r = rows(&l, "EXAMPLE-4");
    let witness = r.get(2).is_some_and(|r| r.detail.contains("repeated factor s'*x + t'*y + z"));
    Outcome::new(r.len() == 3 && all_pass(&r) && witness, format!("{} rows, witness s'*x + t'*y + z = {witness}", r.len()))
}

fn cofinality(s: &Suite) -> Outcome {
    let (l, _) = s.run("COFINALITY");
    let r = rows(&l, "COFINALITY");
    let sampled: Vec<_> = r.iter().filter(|r| !r.check.starts_with("adversarial")).collect();
    let full = sampled
        .iter()
        .all(|r| r.detail.starts_with("200/200 products contained") && r.detail.ends_with("on 200/200"));
    let adversarial = r.iter().any(|r| r.check.starts_with("adversarial") && r.detail.contains("counterexample"));
    let ok = all_pass(&r) && sampled.len() == 6 && full && adversarial;
    Outcome::new(ok, format!("{} sampled (n, k), adversarial witness = {adversarial}", sampled.len()))
}

fn heights(s: &Suite) -> Outcome {
    let (l, t) = s.run("HEIGHT-GALLERY");
    let r = rows(&l, "HEIGHT-GALLERY");
    let ok = all_pass(&r) && r.len() >= 10 && t < Duration::from_secs(120);
    Outcome::new(ok, format!("{} rows in {:.1} s{}", r.len(), t.as_secs_f64(), failures(&r)))
}

fn q_compare(s: &Suite) -> Outcome {
    let (l, _) = s.run("Q-COMPARE");
    let r = rows(&l, "Q-COMPARE");
    let n2: Vec<_> = r.iter().filter(|r| r.check.ends_with("n=2")).collect();
    let n3: Vec<_> = r.iter().filter(|r| r.check.ends_with("n=3")).collect();
    let ok = n2.len() == 8
        && n2.iter().all(|r| r.verdict == RowVerdict::Pass)
        && n3.len() == 8
        && n3.iter().all(|r| r.verdict != RowVerdict::Fail);
    let iso3 = n3.iter().filter(|r| r.verdict == RowVerdict::Pass).count();
    Outcome::new(ok, format!("n=2 isomorphic on {}; n=3 recorded, isomorphic on {iso3}/{}", n2.len(), n3.len()))
}

fn monotone(s: &Suite) -> Outcome {
    let (l, _) = s.run("MONOTONE,FEDDER-AGREEMENT");
    let m = rows(&l, "MONOTONE");
    let f = rows(&l, "FEDDER-AGREEMENT");
    let ok = all_pass(&m) && all_pass(&f) && f.len() >= 6;
    Outcome::new(ok, format!("{} monotonicity rows, {} Fedder comparisons{}{}", m.len(), f.len(), failures(&m), failures(&f)))
}

fn etale(s: &Suite) -> Result<Outcome, String> {
    let (l, _) = s.run("ETALE-SMOKE");
    let r = rows(&l, "ETALE-SMOKE");
    let gallery = manifest("rings/gallery.qfp").display().to_string();
    let mut cli = true;
    for name in ["F2", "F4", "F8"] {
        let out = qfp(&["height", "--ring", &gallery, "--name", name, "--emit", "json"])?;
        let report: Report = serde_json::from_slice(&out).map_err(|e| e.to_string())?;
        cli &= report.result["height"] == serde_json::json!({"kind": "exact", "value": 1});
    }
    Ok(Outcome::new(all_pass(&r) && cli, format!("ledger and `qfp height` agree on height 1 = {cli}")))
}

fn cli_front(started: Instant) -> Result<Outcome, String> {
    let dir = manifest("tests/data/corpus");
    let mut files: Vec<_> = fs::read_dir(&dir).map_err(|e| e.to_string())?.map(|e| e.unwrap().path()).collect();
    files.sort();
    let mut fixpoint = 0;
    for f in &files {
        let text = fs::read_to_string(f).map_err(|e| e.to_string())?;
        let a = parse_ring_dsl(&text).map_err(|e| format!("{}: {e}", f.display()))?;
        let printed = a.to_string();
        let b = parse_ring_dsl(&printed).map_err(|e| e.to_string())?;
        if a.normalized() == b.normalized() && b.to_string() == printed {
            fixpoint += 1;
        }
    }
    let gallery = manifest("rings/gallery.qfp").display().to_string();
    let runs: [&[&str]; 3] = [
        &["height", "--ring", &gallery, "--name", "Supersingular", "--max-degree", "4", "--seed", "11", "--emit", "json"],
        &["height", "--ring", &gallery, "--name", "FatPoint", "--emit", "json"],
        &["verify", "--seed", "5", "--emit", "json"],
    ];
    let mut identical = 0;
    for args in runs {
        if qfp(args)? == qfp(args)? {
            identical += 1;
        }
    }
    let elapsed = started.elapsed();
    let ok = files.len() == 20 && fixpoint == 20 && identical == runs.len() && elapsed < Duration::from_secs(300);
    Ok(Outcome::new(
        ok,
        format!("fixpoint {fixpoint}/{}, identical reports {identical}/{}, acceptance run {:.1} s", files.len(), runs.len(), elapsed.as_secs_f64()),
    ))
}

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn main() -> ExitCode {
    let started = Instant::now();
    let suite = Suite { config: SuiteConfig::default() };
    let lift = |r: Result<Outcome, String>| r.unwrap_or_else(|e| Outcome::new(false, format!("error: {e}")));
    let criteria: Vec<Criterion<'_>> = vec![
        ("ghost-oracle equivalence", Box::new(|| ghost_oracle(&suite))),
        ("second-coordinate formulas", Box::new(|| formulas(&suite))),
        ("operator identities", Box::new(|| operators(&suite))),
        ("structure isomorphisms", Box::new(|| structures(&suite))),
        ("kernel-of-restriction action", Box::new(|| ker_action(&suite))),
        ("reducedness via Phi", Box::new(|| phi_kernel(&suite))),
        ("inseparable base change trio", Box::new(|| example_four(&suite))),
        ("cofinality bound", Box::new(|| cofinality(&suite))),
        ("height gallery", Box::new(|| heights(&suite))),
        ("Q-model comparison", Box::new(|| q_compare(&suite))),
        ("monotonicity and Fedder agreement", Box::new(|| monotone(&suite))),
        ("etale smoke", Box::new(|| lift(etale(&suite)))),
        ("CLI fixpoint, determinism, runtime", Box::new(|| lift(cli_front(started)))),
    ];
    let mut failed = 0;
    for (i, (title, check)) in criteria.iter().enumerate() {
        let o = check();
        failed += usize::from(!o.ok);
        println!("criterion {:>2} {}: {title} ({})", i + 1, if o.ok { "PASS" } else { "FAIL" }, o.detail);
    }
    println!("acceptance: {}/{} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
