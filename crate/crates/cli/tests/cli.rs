use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn algebra(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join(format!("../../algebras/{name}.alg"))
}

fn lsac(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lsac")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write_temp(dir: &tempfile::TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn ms7_order_four() {
    let path = algebra("ms7");
    let o = lsac(&["compute", "--file", path.to_str().unwrap(), "--order", "4"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("k=4: dim C=35 dim Z=30 dim B=25 dim H=5\n"));
    assert_eq!(out.lines().filter(|l| l.starts_with("  H[")).count(), 5);
    assert!(out.contains("l2*^t1*^t2*^t3*⊗l1"));
}

#[test]
fn ms7_all_degrees() {
    let path = algebra("ms7");
    let o = lsac(&["compute", "--file", path.to_str().unwrap(), "--all"]);
    assert!(o.status.success());
    let out = stdout(&o);
    for line in [
        "k=2: dim C=70 dim Z=33 dim B=25 dim H=8",
        "k=3: dim C=70 dim Z=45 dim B=37 dim H=8",
        "k=4: dim C=35 dim Z=30 dim B=25 dim H=5",
        "k=5: dim C=7 dim Z=7 dim B=5 dim H=2",
    ] {
        assert!(out.contains(line), "missing {line}");
    }
}

#[test]
fn ams8_graded_table() {
    let path = algebra("ams8");
    let p = path.to_str().unwrap();
    let graded = stdout(&lsac(&["compute", "--file", p, "--order", "2", "--graded"]));
    let plain = stdout(&lsac(&["compute", "--file", p, "--order", "2"]));
    let summary = "k=2: dim C=24 dim Z=17 dim B=15 dim H=2";
    assert!(graded.contains(summary) && plain.contains(summary));
    assert!(graded.contains("homogeneity"));
    let rows: Vec<Vec<usize>> = graded
        .lines()
        .skip_while(|l| !l.contains("homogeneity"))
        .skip(1)
        .take_while(|l| !l.trim_start().starts_with("H["))
        .map(|l| l.split_whitespace().map(|t| t.parse().unwrap()).collect())
        .collect();
    let c: Vec<usize> = rows.iter().map(|r| r[1]).collect();
    let h: Vec<usize> = rows.iter().map(|r| r[4]).collect();
    assert_eq!(c, [1, 4, 6, 6, 5, 2]);
    assert_eq!(h, [0, 0, 0, 0, 2, 0]);

    let one = stdout(&lsac(&["compute", "--file", p, "--order", "2", "--graded", "--homogeneity", "4"]));
    assert!(one.contains("k=2: dim C=5 dim Z=3 dim B=1 dim H=2"));
}

#[test]
fn report_is_json_with_provenance() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("r.json");
    let path = algebra("ams8");
    let o = lsac(&[
        "compute", "--file", path.to_str().unwrap(), "--order", "2", "--graded",
        "--report", report.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["algebra"], "ams8");
    assert_eq!(v["provenance"]["input_sha256"].as_str().unwrap().len(), 64);
    assert_eq!(v["provenance"]["flags"][0], "--order 2");
    let d = &v["degrees"][0];
    assert_eq!(d["dims"]["h"], 2);
    assert_eq!(d["homogeneity"].as_array().unwrap().len(), 6);
    let term = &d["basis_h"][0]["terms"][0];
    assert!(term["coefficient"].is_string());
    assert!(term["even"].is_array());
}

#[test]
fn skew_symmetry_violation_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_temp(
        &dir,
        "bad.alg",
        "name bad\nbasis e1 even\nbasis e2 even\nbracket e1 e2 = e1\nbracket e2 e1 = e1\n",
    );
    let o = lsac(&["validate", "--file", p.to_str().unwrap()]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("skew"), "{}", stderr(&o));
    let o = lsac(&["compute", "--file", p.to_str().unwrap(), "--order", "1"]);
    assert!(!o.status.success());
}

#[test]
fn parse_errors_carry_position() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_temp(&dir, "bad.alg", "name bad\nbasis a even\nbracket a b = a\n");
    let o = lsac(&["validate", "--file", p.to_str().unwrap()]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
}

#[test]
fn jacobi_violation_needs_skip_validate() {
    let dir = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(algebra("ms7")).unwrap().replace("bracket t1 d = -2 t1", "bracket t1 d = 2 t1");
    let p = write_temp(&dir, "typo.alg", &text);
    let p = p.to_str().unwrap();
    assert!(!lsac(&["compute", "--file", p, "--order", "2"]).status.success());
    assert!(lsac(&["compute", "--file", p, "--order", "1", "--skip-validate"]).status.success());
    let o = lsac(&["compute", "--file", p, "--order", "2", "--skip-validate"]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("validation was skipped"), "{}", stderr(&o));
}

#[test]
fn bad_flags_fail() {
    let path = algebra("ms7");
    let p = path.to_str().unwrap();
    assert!(!lsac(&["compute", "--file", p, "--order", "0"]).status.success());
    assert!(!lsac(&["compute", "--file", p, "--order", "9"]).status.success());
    assert!(!lsac(&["compute", "--file", p]).status.success());
    assert!(!lsac(&["compute", "--file", p, "--order", "2", "--all"]).status.success());
    assert!(!lsac(&["compute", "--file", "/nonexistent.alg", "--order", "1"]).status.success());
    let gl3 = algebra("gl3_sl3");
    assert!(!lsac(&["compute", "--file", gl3.to_str().unwrap(), "--order", "1", "--graded"]).status.success());
}

#[test]
fn examples_suite_and_listing() {
    let o = lsac(&["examples"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.lines().all(|l| l.starts_with("PASS ")));
    let list = stdout(&lsac(&["examples", "--list"]));
    assert_eq!(list.lines().collect::<Vec<_>>(), ["ms7", "ams8", "gl3_sl3", "gl11", "gl21"]);
    let shown = stdout(&lsac(&["examples", "--show", "ms7"]));
    assert_eq!(shown, std::fs::read_to_string(algebra("ms7")).unwrap());
    assert!(!lsac(&["examples", "--show", "nope"]).status.success());
}

#[test]
fn odd_convention_override() {
    let path = algebra("gl11");
    let p = path.to_str().unwrap();
    let strict = stdout(&lsac(&["compute", "--file", p, "--order", "2"]));
    let sym = stdout(&lsac(&["compute", "--file", p, "--order", "2", "--odd-convention", "symmetric"]));
    assert!(strict.contains("k=2: dim C=24 "), "{strict}");
    assert!(sym.contains("k=2: dim C=32 "), "{sym}");
}
