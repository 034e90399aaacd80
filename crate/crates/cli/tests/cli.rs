use std::path::{Path, PathBuf};
use std::process::Command;
use std::sync::Arc;

use gcr_cli::{exit, run, scenarios};
use gcr_core::ffalg::{sl2_generators, write_rep, FqField, MatRep, Matrix};
use serde_json::Value;
use tempfile::TempDir;

fn gcr(args: &[&str]) -> (i32, String) {
    let out = run(std::iter::once("gcr").chain(args.iter().copied()));
    (out.code, out.text)
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn rep_file(dir: &TempDir, name: &str, r: &MatRep) -> String {
    write(dir, name, &write_rep(r)).display().to_string()
}

fn gf(p: u64, k: usize) -> Arc<FqField> {
    Arc::new(FqField::new(p, k).unwrap())
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut v = vec!["--json"];
    v.extend_from_slice(args);
    let (code, text) = gcr(&v);
    (code, serde_json::from_str(&text).expect("single JSON block"))
}

fn verdict(v: &Value, check: &str) -> Value {
    v["verdicts"]
        .as_array()
        .unwrap()
        .iter()
        .find(|x| x["check"] == check)
        .unwrap_or_else(|| panic!("no verdict {check}"))["value"]
        .clone()
}

#[test]
fn bounds_e6() {
    let args = ["bounds", "--family", "E", "--rank", "6", "--weight", "1,0,0,0,0,0", "--p", "17"];
    let (code, text) = gcr(&args);
    assert_eq!(code, exit::OK);
    assert!(text.contains("n(V) = 16"));
    assert!(text.contains("dim V = 27"));
    assert!(text.contains("p > n(V): yes"));
    let (_, j) = json(&args);
    assert_eq!(j["command"], "bounds");
    assert_eq!(verdict(&j, "n(V)"), "16");
    assert_eq!(verdict(&j, "p > n(V)"), true);
    for key in ["inputs", "verdicts", "witnesses", "provenance"] {
        assert!(j.get(key).is_some());
    }
}

#[test]
fn bounds_a1_digits_and_usage_errors() {
    let (code, text) = gcr(&["bounds", "--family", "A", "--rank", "1", "--weight", "91", "--p", "3"]);
    assert_eq!(code, exit::OK);
    assert!(text.contains("dim V = 8 (exact)"));
    let (code, text) = gcr(&["bounds", "--family", "A", "--rank", "1", "--weight", "91"]);
    assert_eq!(code, exit::USAGE);
    assert!(text.contains("--p"));
    let (code, text) = gcr(&["bounds", "--family", "Q", "--rank", "1", "--weight", "1", "--p", "3"]);
    assert_eq!(code, exit::USAGE);
    assert!(text.contains("--family"));
    let (code, text) = gcr(&["bounds", "--family", "A", "--rank", "2", "--weight", "1", "--p", "3"]);
    assert_eq!(code, exit::USAGE);
    assert!(text.contains("--weight"));
    let (code, text) = gcr(&["bounds", "--family", "A", "--rank", "1", "--weight", "1", "--p", "9"]);
    assert_eq!(code, exit::USAGE);
    assert!(text.contains("--p"));
}

#[test]
fn infer_listing() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "a.facts", "fact PrimeIs 17\nfact ModuleN 16\nfact HisGcr\n");
    let (code, text) = gcr(&["infer", "--facts", f.to_str().unwrap()]);
    assert_eq!(code, exit::OK);
    assert!(text.starts_with("[1] VSemisimpleOverH via R1"), "{text}");
    assert_eq!(text.matches(" via R1 ").count(), 1);

    let empty = write(&dir, "empty.facts", "");
    let (code, text) = gcr(&["infer", "--facts", empty.to_str().unwrap()]);
    assert_eq!(code, exit::OK);
    assert_eq!(text, "no derivations\n");

    let chain = write(
        &dir,
        "chain.facts",
        "fact PrimeIs 53\nfact ModuleDim 27\nfact NonDegenerate\nfact Faithful\nfact IndexPrimeToP\nfact HIdentityReductive\n",
    );
    let (code, text) = gcr(&["infer", "--facts", chain.to_str().unwrap()]);
    assert_eq!(code, exit::OK);
    assert!(text.lines().any(|l| l.contains("HisGcr via R13a") && l.ends_with("4 steps")), "{text}");

    let bad = write(&dir, "bad.facts", "fact PrimeIs 5\nfact Nonsense\n");
    let (code, text) = gcr(&["infer", "--facts", bad.to_str().unwrap()]);
    assert_eq!(code, exit::USAGE);
    assert!(text.contains("line 2"), "{text}");
}

#[test]
fn meataxe_commands() {
    let dir = TempDir::new().unwrap();
    let v = scenarios::sl2_f9_module();
    let vf = rep_file(&dir, "v.rep", &v);
    let (code, j) = json(&["meataxe", "--rep", &vf, "--test", "semisimple", "--seed", "2024"]);
    assert_eq!(code, exit::NEGATIVE);
    assert_eq!(verdict(&j, "semisimple"), "not-semisimple");
    let dims: Vec<u64> = j["witnesses"]
        .as_array()
        .unwrap()
        .iter()
        .map(|w| w["witness"]["dim"].as_u64().unwrap())
        .collect();
    assert!(dims.contains(&4), "{dims:?}");
    let (code, text) = gcr(&["meataxe", "--rep", &vf, "--test", "semisimple", "--seed", "2024"]);
    assert_eq!(code, exit::NEGATIVE);
    assert!(text.starts_with("verdict: not-semisimple"));
    assert!(text.contains("indecomposable extension: dimension 4"));

    let nat = rep_file(&dir, "nat.rep", &sl2_generators(&gf(3, 2)));
    let (code, text) = gcr(&["meataxe", "--rep", &nat, "--test", "irreducible"]);
    assert_eq!((code, text.lines().next().unwrap()), (exit::OK, "verdict: irreducible"));

    let f2 = rep_file(&dir, "f2.rep", &sl2_generators(&gf(2, 1)));
    let (code, text) = gcr(&["meataxe", "--rep", &f2, "--test", "summand", "--adjoint"]);
    assert_eq!(code, exit::NEGATIVE);
    assert!(text.starts_with("verdict: does-not-split"));
    let (code, _) = gcr(&["meataxe", "--rep", &f2, "--test", "summand"]);
    assert_eq!(code, exit::USAGE);

    let f3 = gf(3, 1);
    let triv = rep_file(&dir, "t.rep", &MatRep::trivial(&f3, 2, 1));
    let sub = write(&dir, "t.sub", "1 1\n");
    let (code, text) = gcr(&["meataxe", "--rep", &triv, "--test", "summand", "--sub", sub.to_str().unwrap()]);
    assert_eq!(code, exit::OK);
    assert!(text.contains("complement: dimension 1"));

    let j2 = MatRep::new(&gf(2, 1), 2, vec![Matrix::from_ints(&gf(2, 1), &[&[1, 1], &[0, 1]])]).unwrap();
    let jf = rep_file(&dir, "j.rep", &j2);
    let not_inv = write(&dir, "j.sub", "0 1\n");
    let (code, _) = gcr(&["meataxe", "--rep", &jf, "--test", "summand", "--sub", not_inv.to_str().unwrap()]);
    assert_eq!(code, exit::USAGE);

    let (code, _) = gcr(&["meataxe", "--rep", "/nonexistent/x.rep", "--test", "irreducible"]);
    assert_eq!(code, exit::USAGE);
}

#[test]
fn meataxe_inconclusive_is_distinct() {
    let dir = TempDir::new().unwrap();
    let v = rep_file(&dir, "v.rep", &scenarios::sl2_f9_module());
    let (code, text) = gcr(&["meataxe", "--rep", &v, "--test", "semisimple", "--budget", "0"]);
    assert_eq!(code, exit::INCONCLUSIVE, "{text}");
}

#[test]
fn saturate_commands() {
    let dir = TempDir::new().unwrap();
    let f9 = gf(3, 2);
    let u = MatRep::new(&f9, 2, vec![Matrix::from_ints(&f9, &[&[1, 1], &[0, 1]])]).unwrap();
    let uf = rep_file(&dir, "u.rep", &u);
    let (code, j) = json(&["saturate", "--rep", &uf]);
    assert_eq!(code, exit::OK);
    assert_eq!(verdict(&j, "closure size"), 9);
    assert_eq!(verdict(&j, "saturated"), true);

    let f5 = gf(5, 1);
    let torus = MatRep::new(&f5, 2, vec![Matrix::from_ints(&f5, &[&[2, 0], &[0, 3]])]).unwrap();
    let tf = rep_file(&dir, "torus.rep", &torus);
    let (code, text) = gcr(&["saturate", "--rep", &tf]);
    assert_eq!(code, exit::OK);
    assert!(text.contains("closure size: 4"));
    assert!(text.contains("adjoined one-parameter subgroups: 0"));

    let small = rep_file(&dir, "small.rep", &MatRep::trivial(&gf(2, 1), 3, 1));
    let (code, text) = gcr(&["saturate", "--rep", &small]);
    assert_eq!(code, exit::USAGE);
    assert!(text.contains("p >= dim V"));

    let (code, text) = gcr(&["saturate", "--rep", &uf, "--cap", "2"]);
    assert_eq!(code, exit::INCONCLUSIVE, "{text}");
}

#[test]
fn example_unknown_name() {
    let (code, text) = gcr(&["example", "--name", "nope"]);
    assert_eq!(code, exit::USAGE);
    for n in scenarios::NAMES {
        assert!(text.contains(n));
    }
}

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// Set `UPDATE_GOLDEN=1` to regenerate.
#[test]
fn examples_match_golden_files() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    for s in scenarios::all() {
        let (code, text) = gcr(&["example", "--name", s.name]);
        assert_eq!(code, exit::OK, "{}: {text}", s.name);
        let (_, j) = json(&["example", "--name", s.name]);
        assert!(j["verdicts"].as_array().unwrap().iter().all(|v| v["pass"] == true));
        assert_eq!(
            j["verdicts"].as_array().unwrap().len(),
            j["provenance"].as_array().unwrap().len()
        );
        let path = golden_dir().join(format!("{}.txt", s.name));
        if update {
            std::fs::create_dir_all(golden_dir()).unwrap();
            std::fs::write(&path, &text).unwrap();
        }
        let want = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
        assert_eq!(text, want, "{}", s.name);
    }
}

#[test]
fn binary_is_deterministic_and_uses_exit_protocol() {
    let bin = env!("CARGO_BIN_EXE_gcr");
    let runs: Vec<_> = (0..2)
        .map(|_| Command::new(bin).args(["--json", "example", "--name", "sl2-f9"]).output().unwrap())
        .collect();
    assert_eq!(runs[0].status.code(), Some(0));
    assert_eq!(runs[0].stdout, runs[1].stdout);
    let bad = Command::new(bin).args(["example", "--name", "nope"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("sl2-f9"));
    let missing = Command::new(bin).args(["bounds", "--family", "A"]).output().unwrap();
    assert_eq!(missing.status.code(), Some(2));
}
