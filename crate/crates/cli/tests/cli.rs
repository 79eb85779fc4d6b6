use std::path::PathBuf;
use std::process::{Command, Output};

fn qtilt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qtilt")).args(args).output().expect("run qtilt")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("qtilt-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

const A3: &str = "algebra A3 field 101\nvertices 1,2,3\narrow a : 1 -> 2\narrow b : 2 -> 3\nrel a*b\n";

#[test]
fn audit_ex1_reports_witness() {
    let o = qtilt(&["audit", "EX1", "--m", "1", "--n", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("(1,1,0)"));
}

#[test]
fn audit_json_schema() {
    let o = qtilt(&["--json", "audit", "EX2(1,1)", "--m", "1", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["algebra"]["dim"], 7);
    assert_eq!(v["params"]["n"], 2);
    assert_eq!(v["indecomposables"].as_array().unwrap().len(), 7);
    for key in ["id", "dimvec", "pd", "injdim", "inL", "inR"] {
        assert!(v["indecomposables"][0].get(key).is_some(), "{key}");
    }
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["verdict"] != "fail"));
}

#[test]
fn indec_ex3_has_thirty_rows() {
    let o = qtilt(&["indec", "EX3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 30);
}

#[test]
fn dot_output_is_stable() {
    let a = qtilt(&["--seed", "7", "--dot", "indec", "EX7(1,2)"]);
    let b = qtilt(&["--seed", "7", "--dot", "indec", "EX7(1,2)"]);
    assert!(stdout(&a).starts_with("digraph"));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn corpus_passes() {
    let o = qtilt(&["corpus"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn corpus_filter_runs_both_parameters() {
    let o = qtilt(&["corpus", "--filter", "EX6"]);
    let out = stdout(&o);
    assert!(out.contains("EX6(1)/") && out.contains("EX6(2)/"));
    assert!(!out.contains("EX5/"));
}

#[test]
fn corrupted_fact_is_named() {
    let dump = qtilt(&["corpus", "--filter", "EX1", "--dump"]);
    let mut entries: serde_json::Value = serde_json::from_slice(&dump.stdout).unwrap();
    let fact = &mut entries[0]["facts"][0];
    let id = fact["id"].as_str().unwrap().to_string();
    fact["expected"] = serde_json::json!(99);
    let path = temp("corrupt.json", &entries.to_string());
    let o = qtilt(&["corpus", "--file", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains(&format!("EX1/{id}")), "{err}");
}

#[test]
fn exit_codes_for_errors() {
    assert_eq!(qtilt(&["build", "no-such-algebra"]).status.code(), Some(2));
    let bad = temp("bad.qa", "algebra X field 4\nvertices 1\n");
    assert_eq!(qtilt(&["build", bad.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(qtilt(&["--max-modules", "3", "indec", "EX3"]).status.code(), Some(3));
}

#[test]
fn build_over_other_field() {
    let o = qtilt(&["--field", "3", "--json", "build", "EX3"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["field"], 3);
    assert_eq!(v["dim"], 30);
}

#[test]
fn homdim_of_named_module() {
    let o = qtilt(&["homdim", "EX3", "--module", "(0,0,1,1,1,1,0,0)"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("pd 2 id 2"));
}

#[test]
fn tilt_ex3() {
    let t = "P4+(0,0,0,1,1,1,1,0)+(0,0,0,1,1,1,0,0)+(0,0,0,1,1,0,0,0)+S4+P3+P2+P1";
    let o = qtilt(&["tilt", "EX3", "--module", t]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("splitting: false"));
    assert!(out.contains("gl.dim 3 -> 2"));
    assert_eq!(qtilt(&["tilt", "EX3", "--module", "S4+P1"]).status.code(), Some(1));
}

#[test]
fn chain_verdicts() {
    let alg = temp("a3.qa", A3);
    let empty = temp("empty.json", &format!("{{\"base\":\"{}\",\"steps\":[]}}", alg.display()));
    let o = qtilt(&["chain", empty.to_str().unwrap(), "--m", "1", "--n", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("certified: true"));

    let identity = temp(
        "identity.json",
        &format!("{{\"base\":\"{}\",\"steps\":[{{\"kind\":\"tilt\",\"module\":\"P1+P2+P3\"}}]}}", alg.display()),
    );
    let o = qtilt(&["chain", identity.to_str().unwrap(), "--m", "1", "--n", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).lines().any(|l| l.starts_with("stair") && l.contains("fail")));
}

#[test]
fn opext_checks_and_emission() {
    let o = qtilt(&["opext", "EX5B", "--module", "S5", "--m", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("gl.dim 3"));

    let o = qtilt(&["opext", "EX5B", "--module", "S5", "--emit"]);
    let dsl = stdout(&o);
    assert!(dsl.contains("arrow x6 : 6 -> 5") && dsl.contains("rel x6*a5"));
    let path = temp("ex5a.qa", &dsl);
    let built = qtilt(&["--json", "build", path.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_slice(&built.stdout).unwrap();
    assert_eq!(v["dim"], 12);
}

#[test]
fn module_file_argument() {
    let alg = temp("a3m.qa", A3);
    let m = temp("s2.qa", "algebra A3\nmodule M\ndim 2 = 1\n");
    let o = qtilt(&["homdim", alg.to_str().unwrap(), "--module", m.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("pd 1 id 1"));
}
