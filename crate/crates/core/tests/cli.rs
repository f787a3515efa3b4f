use std::process::{Command, Output};

use serde_json::Value;

const QUINTIC: &str = "x^5 + x^4 - 4*x^3 - 3*x^2 + 3*x + 1";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kronecker")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn certify_text_and_exit_codes() {
    let o = run(&["certify", "x^5 - 4*x - 2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("UNSOLVABLE"));
    assert_eq!(run(&["certify", "x^5 - 4*y"]).status.code(), Some(1));
    assert_eq!(run(&["certify"]).status.code(), Some(1));
    assert_eq!(run(&["nonsense"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn verify_round_trip_and_mutations() {
    let o = run(&["certify", "x^5 - 4*x - 2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let json: Value = serde_json::from_slice(&o.stdout).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, v: &Value| {
        let path = dir.path().join(name);
        std::fs::write(&path, serde_json::to_string_pretty(v).unwrap()).unwrap();
        path
    };
    let good = write("good.json", &json);
    assert_eq!(run(&["verify", good.to_str().unwrap()]).status.code(), Some(0));

    let mut flipped = json.clone();
    flipped["verdict"] = "INCONCLUSIVE_ONE_REAL".into();
    let mut prime = json.clone();
    prime["irreducible"]["witness"]["prime"] = 3.into();
    let mut shrunk = json.clone();
    shrunk["intervals"].as_array_mut().unwrap().pop();
    for (name, v) in [("flipped.json", flipped), ("prime.json", prime), ("shrunk.json", shrunk)] {
        let path = write(name, &v);
        let o = run(&["verify", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(1), "{name} accepted");
    }
    assert_eq!(run(&["verify", "/nonexistent/cert.json"]).status.code(), Some(1));
}

#[test]
fn every_subcommand_runs() {
    for args in [
        &["factorq", "x^6 - 1"][..],
        &["realroots", "(x-1)^2*(x^2-2)"],
        &["cyclotomic", "12"],
        &["resolvent", "5"],
        &["decompose", "--f", QUINTIC, "--g", QUINTIC],
        &["dorrie", "--a", "4", "--b", "2", "--p", "2"],
        &["dorrie", "--gen", "5"],
        &["example71"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
    assert_eq!(run(&["cyclotomic", "0"]).status.code(), Some(1));
    assert_eq!(run(&["resolvent", "13"]).status.code(), Some(1));
    assert_eq!(run(&["dorrie", "--a", "4", "--b", "2", "--p", "3"]).status.code(), Some(1));
    assert_eq!(run(&["dorrie", "--gen", "5", "--a", "4"]).status.code(), Some(1));
}

#[test]
fn tower_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("naive.txt");
    std::fs::write(&path, "base: Q\nzeta(5)\nzeta(11)*root(11, 2)\nconj(zeta(11)*root(11, 2))\n").unwrap();
    let o = run(&["tower", "validate", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("conjugate-closed: no"));
    let o = run(&["tower", "double", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let doubled = dir.path().join("doubled.txt");
    std::fs::write(&doubled, &o.stdout).unwrap();
    let o = run(&["tower", "validate", doubled.to_str().unwrap()]);
    assert!(stdout(&o).contains("conjugate-closed: yes"), "{}", stdout(&o));
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "base: Q\nroot(2, \n").unwrap();
    assert_eq!(run(&["tower", "validate", bad.to_str().unwrap()]).status.code(), Some(1));
}
