use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use gl2_cli::commands::{convert, generate, Direction, Example, Params};
use gl2_cli::format::parse_document;
use proptest::prelude::*;

fn fixtures(sub: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(sub)
}

fn gl2(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gl2")).args(args).output().expect("binary runs")
}

fn json_files(dir: &Path) -> Vec<PathBuf> {
    let mut v: Vec<PathBuf> = fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "json"))
        .collect();
    v.sort();
    v
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn valid_fixtures_verify() {
    let files = json_files(&fixtures("valid"));
    assert!(files.len() >= 15);
    for f in files {
        let out = gl2(&["verify", s(&f)]);
        assert_eq!(out.status.code(), Some(0), "{}: {}", f.display(), String::from_utf8_lossy(&out.stdout));
    }
}

#[test]
fn perturbed_fixtures_name_the_broken_law() {
    let dir = fixtures("invalid");
    let expected = fs::read_to_string(dir.join("EXPECTED")).unwrap();
    let mut seen = 0;
    for line in expected.lines() {
        let (file, law) = line.split_once('\t').unwrap();
        let out = gl2(&["verify", s(&dir.join(file))]);
        let text = String::from_utf8_lossy(&out.stdout);
        assert_eq!(out.status.code(), Some(1), "{file}: {text}");
        assert!(text.lines().any(|l| l.starts_with(&format!("{law} fails at "))), "{file}: {text}");
        seen += 1;
    }
    assert_eq!(seen, json_files(&dir).len());
}

#[test]
fn perturbed_gamma_reports_triples() {
    let out = gl2(&["verify", s(&fixtures("invalid/ruth_perturbed_gamma.json"))]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.lines().all(|l| l.starts_with("cocycle equation fails at triple (")), "{text}");
    // The same triples fail coherence once the representation is read as a
    // pseudo-functor.
    let out2 = gl2(&["verify", s(&fixtures("invalid/functor_perturbed_cell.json"))]);
    let text2 = String::from_utf8_lossy(&out2.stdout);
    let triples = |t: &str| t.lines().map(|l| l.split_once(" fails at ").unwrap().1.to_string()).collect::<Vec<_>>();
    assert_eq!(triples(&text), triples(&text2));
}

#[test]
fn malformed_fixtures_exit_2() {
    for f in json_files(&fixtures("malformed")) {
        let out = gl2(&["verify", s(&f)]);
        assert_eq!(out.status.code(), Some(2), "{}", f.display());
    }
    assert_eq!(gl2(&["verify", "/nonexistent/file.json"]).status.code(), Some(2));
    assert_eq!(gl2(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn wrong_kind_flag_is_a_parse_error() {
    let out = gl2(&["verify", s(&fixtures("valid/doubling.json")), "--kind", "functor"]);
    assert_eq!(out.status.code(), Some(2));
}

fn round_trip(file: &str, there: &str, back: &str) {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    let src = fixtures("valid").join(file);
    assert_eq!(gl2(&["convert", s(&src), there, "--out", s(&a)]).status.code(), Some(0));
    assert_eq!(gl2(&["verify", s(&a)]).status.code(), Some(0));
    assert_eq!(gl2(&["convert", s(&a), back, "--out", s(&b)]).status.code(), Some(0));
    assert_eq!(fs::read(&src).unwrap(), fs::read(&b).unwrap(), "{file}");
}

#[test]
fn conversions_round_trip_byte_for_byte() {
    round_trip("doubling.json", "ruth-to-functor", "functor-to-ruth");
    round_trip("random_ruth.json", "ruth-to-functor", "functor-to-ruth");
    round_trip("translation_ruth.json", "ruth-to-functor", "functor-to-ruth");
    round_trip("translation_functor.json", "functor-to-ruth", "ruth-to-functor");
    round_trip("gauge_morphism.json", "morphism-to-lax", "lax-to-morphism");
    round_trip("gauge_transformation.json", "lax-to-morphism", "morphism-to-lax");
}

#[test]
fn converting_a_perturbed_document_fails_semantically() {
    let out = gl2(&["convert", s(&fixtures("invalid/ruth_perturbed_gamma.json")), "ruth-to-functor"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("cocycle equation"));
}

fn fill_to(horn: &str, handle: &str) -> (i32, String) {
    let out = gl2(&["fill", s(&fixtures("valid").join(horn)), "--handle", handle]);
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn fillers_reproduce_the_simplex() {
    let simplex = fs::read_to_string(fixtures("valid/simplex_table_4.json")).unwrap();
    for k in [0, 2, 4] {
        let (code, text) = fill_to(&format!("horn_table_4_{k}.json"), "table");
        assert_eq!(code, 0);
        assert_eq!(text, simplex, "k = {k}");
    }
    let (code, text) = fill_to("horn_gl_3_1.json", "gl");
    assert_eq!(code, 0);
    assert_eq!(text, fs::read_to_string(fixtures("valid/simplex_gl_3.json")).unwrap());
}

#[test]
fn filled_horns_verify() {
    let dir = tempfile::tempdir().unwrap();
    for (horn, handle) in [("horn_table_2_1.json", "table"), ("horn_gl_2_0.json", "gl")] {
        let (code, text) = fill_to(horn, handle);
        assert_eq!(code, 0);
        let p = dir.path().join(horn);
        fs::write(&p, text).unwrap();
        assert_eq!(gl2(&["verify", s(&p), "--kind", "simplex"]).status.code(), Some(0), "{horn}");
    }
    assert_eq!(fill_to("horn_table_2_1.json", "gl").0, 2);
}

#[test]
fn generated_documents_verify() {
    let dir = tempfile::tempdir().unwrap();
    let cases: &[&[&str]] = &[
        &["pair", "--n", "4"],
        &["action", "--group", "symmetric", "--n", "3"],
        &["delooping", "--n", "2"],
        &["delooping", "--group", "cyclic", "--n", "6"],
        &["lines-projection", "--lines", "1,0;1,1;2,1"],
        &["doubling", "--lines", "1,0,0;1,1,0;1,1,1;2,1,3"],
        &["random-ruth", "--n", "3", "--seed", "5"],
    ];
    for (i, args) in cases.iter().enumerate() {
        let p = dir.path().join(format!("{i}.json"));
        let mut full = vec!["generate"];
        full.extend_from_slice(args);
        full.extend_from_slice(&["--out", s(&p)]);
        assert_eq!(gl2(&full).status.code(), Some(0), "{args:?}");
        assert_eq!(gl2(&["verify", s(&p)]).status.code(), Some(0), "{args:?}");
    }
}

#[test]
fn invalid_generator_parameters_exit_1() {
    assert_eq!(gl2(&["generate", "delooping", "--group", "symmetric", "--n", "3"]).status.code(), Some(1));
    assert_eq!(gl2(&["generate", "lines-projection", "--lines", "1,0;0,1"]).status.code(), Some(1));
    assert_eq!(gl2(&["generate", "doubling", "--lines", "1,0;1,1;0,1"]).status.code(), Some(1));
    assert_eq!(gl2(&["generate", "delooping", "--group", "octonion"]).status.code(), Some(2));
}

#[test]
fn nerve_counts_agree() {
    let out = gl2(&["nerve", s(&fixtures("valid/delooping_z2.json")), "--level", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    // In the delooping of ℤ/2 an n-simplex is fixed by its free triangles
    // u_{k,j,0}, so there are 2^(n choose 2) of them.
    assert!(text.contains("level 3: brute 8, coskeletal 8, filtration 8"), "{text}");
    assert!(text.contains("level 4: brute 64, coskeletal 64, filtration 64"), "{text}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn random_ruth_round_trip(seed in any::<u64>(), n in 1usize..4) {
        let text = generate(Example::RandomRuth, &Params { n, seed, ..Params::default() }).unwrap();
        let f = convert(&parse_document(&text).unwrap(), Direction::RuthToFunctor).unwrap();
        let back = convert(&parse_document(&f).unwrap(), Direction::FunctorToRuth).unwrap();
        prop_assert_eq!(text, back);
    }
}
