//! Printer and parser agree: on the corpus and on random declarations.

use std::fs;
use std::path::PathBuf;

use proptest::prelude::*;
use qfp::dsl::{parse_file, parse_ring_dsl, Factor, Mode, PolyExpr, Pos, RingDecl, Term};

fn corpus() -> Vec<(String, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data/corpus");
    let mut files: Vec<_> = fs::read_dir(&dir).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    files
        .into_iter()
        .map(|p| (p.file_name().unwrap().to_string_lossy().into_owned(), fs::read_to_string(&p).unwrap()))
        .collect()
}

#[test]
fn corpus_is_a_fixpoint() {
    let corpus = corpus();
    assert_eq!(corpus.len(), 20);
    for (file, text) in &corpus {
        let first = parse_ring_dsl(text).unwrap_or_else(|e| panic!("{file}: {e}"));
        let printed = first.to_string();
        let second = parse_ring_dsl(&printed).unwrap_or_else(|e| panic!("{file} reprinted: {e}"));
        assert_eq!(first.normalized(), second.normalized(), "{file}");
        assert_eq!(second.to_string(), printed, "{file}");
    }
}

#[test]
fn corpus_covers_the_gallery() {
    let gallery = fs::read_to_string(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("rings/gallery.qfp")).unwrap();
    let corpus: Vec<RingDecl> = corpus().iter().map(|(_, t)| parse_ring_dsl(t).unwrap()).collect();
    for g in parse_file(&gallery).unwrap() {
        let c = corpus.iter().find(|c| c.name == g.name).unwrap_or_else(|| panic!("{} missing", g.name));
        assert_eq!((c.q, &c.vars, c.mode), (g.q, &g.vars, g.mode), "{}", g.name);
        assert_eq!(c.relation_polys().unwrap(), g.relation_polys().unwrap(), "{}", g.name);
    }
}

#[test]
fn whole_file_reprints() {
    let text: String = corpus().into_iter().map(|(_, t)| t).collect();
    let decls = parse_file(&text).unwrap();
    let printed: String = decls.iter().map(|d| format!("{d}\n")).collect();
    let again = parse_file(&printed).unwrap();
    let strip = |v: &[RingDecl]| v.iter().map(RingDecl::normalized).collect::<Vec<_>>();
    assert_eq!(strip(&decls), strip(&again));
}

const NAMES: &[&str] = &["x", "y", "z", "s'", "t'", "u1", "w_2", "gamma"];

fn arb_decl() -> impl Strategy<Value = RingDecl> {
    let q = prop::sample::select(vec![2u64, 3, 4, 5, 7, 8, 9, 25]);
    (q, prop::sample::subsequence(NAMES.to_vec(), 1..=4), any::<bool>())
        .prop_flat_map(|(q, vars, finite)| {
            let prime = [2, 3, 5, 7].contains(&q);
            let mode = if finite || !prime { Mode::Finite } else { Mode::Affine };
            let vars: Vec<String> = vars.into_iter().map(String::from).collect();
            let factor = prop_oneof![
                (1u64..10).prop_map(Factor::Int),
                (prop::sample::select(vars.clone()), 1u32..5)
                    .prop_map(|(name, exp)| Factor::Var { name, exp, pos: Pos::default() }),
            ];
            let term = (any::<bool>(), prop::collection::vec(factor, 1..4))
                .prop_map(|(negative, factors)| Term { negative, factors });
            let poly = prop::collection::vec(term, 1..4).prop_map(|terms| PolyExpr { terms, pos: Pos::default() });
            (Just(q), Just(vars), prop::collection::vec(poly, 0..3), Just(mode))
        })
        .prop_map(|(q, vars, relations, mode)| RingDecl { name: "R".into(), q, vars, relations, mode })
}

proptest! {
    #[test]
    fn print_then_parse_is_identity(decl in arb_decl()) {
        let printed = decl.to_string();
        let parsed = parse_ring_dsl(&printed).map_err(|e| TestCaseError::fail(format!("{printed}: {e}")))?;
        prop_assert_eq!(parsed.normalized(), decl);
        prop_assert_eq!(parsed.to_string(), printed);
    }
}
