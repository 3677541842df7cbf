use std::process::Command;

fn forge(args: &[&str]) -> (i32, String, String) {
    forge_env(args, &[])
}

fn forge_env(args: &[&str], env: &[(&str, &str)]) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_operad-forge"));
    cmd.args(args).env_remove("OPERAD_FORGE_JOBS");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn dims_of_prelie() {
    let (code, out, _) = forge(&["dims", "--operad", "prelie", "--max", "6"]);
    assert_eq!(code, 0);
    assert_eq!(out, "1 2 9 64 625 7776\n");
    let (_, out, _) = forge(&["dims", "--operad", "zinbiel", "--degree", "5"]);
    assert_eq!(out, "1 2 6 24 120\n");
}

#[test]
fn nap_law_passes_at_six() {
    let (code, out, _) = forge(&["check-law", "--law", "nap", "--bound", "6"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.starts_with("PASS nap (nap/nap) bound 6"));
}

#[test]
fn solomon_tits_demo() {
    let (code, out, _) = forge(&["st-demo", "--target", "(1,1,2)"]);
    assert_eq!(code, 0);
    assert!(out.ends_with("(1,1,2): NOT-GENERATED\n"), "{out}");
    let (code, out, _) = forge(&["st-demo", "--target", "(1,1,2)", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema"], "operad-forge/report/v1");
    assert_eq!(v["verdict"], "NOT-GENERATED");
    assert_eq!(v["certificate"]["component_dimension"], 13);
    assert_eq!(v["certificate"]["product_span_rank"], 11);
    let (_, out, _) = forge(&["st-demo", "--target", "(1,1)"]);
    assert!(out.ends_with("(1,1): GENERATED\n"));
}

#[test]
fn injected_fault_exits_one() {
    let (code, out, _) = forge(&["check-law", "--law", "nap-dropped-term"]);
    assert_eq!(code, 1);
    assert!(out.contains("counterexample: nap(nap(1, 2))"), "{out}");
    assert!(out.contains("lhs - rhs = 1 ⊗ 2"));
    let (code, out, _) = forge(&["check-law", "--law", "perm-literal", "--format", "json"]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["passed"], false);
    assert_eq!(v["laws"][0]["counterexample"]["args"], serde_json::json!(["{*1,2}", "{*3,4,5}"]));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["eval", "--operad", "prelie", "1(2", "3"],
        vec!["eval", "--operad", "prelie", "--op", "nap", "1", "2"],
        vec!["eval", "--operad", "nosuch", "1"],
        vec!["coprod", "--operad", "as", "{*1,2}"],
        vec!["check-law", "--law", "nosuch"],
        vec!["check-law", "--law", "nap", "--bound", "0"],
        vec!["dims", "--operad", "as", "--max", "0"],
        vec!["st-demo", "--target", "(1,3)"],
        vec!["idem", "--operad", "prelie", "--series"],
        vec!["idem", "--operad", "hypertree-prelie", "ht(root=1)"],
        vec!["roundtrip", "--operad", "as", "--generators", "a,a"],
        vec!["dims", "--operad", "as", "--max", "3", "--format", "yaml"],
        vec!["frobnicate"],
    ] {
        let (code, out, err) = forge(&args);
        assert_eq!(code, 2, "{args:?}: {out}");
        assert!(out.is_empty() && !err.is_empty(), "{args:?}");
    }
    let (code, _, _) = forge_env(&["dims", "--operad", "as", "--max", "3"], &[("OPERAD_FORGE_JOBS", "many")]);
    assert_eq!(code, 2);
}

#[test]
fn products_coproducts_and_idempotents() {
    let (code, out, _) = forge(&["eval", "--operad", "prelie", "1(2)", "3"]);
    assert_eq!((code, out.as_str()), (0, "1(2(3)) + 1(2,3)\n"));
    let (_, out, _) = forge(&["eval", "--operad", "twoas", "--op", "dot", "1", "2"]);
    assert_eq!(out, "dot(1,2)\n");
    let (_, out, _) = forge(&["coprod", "--operad", "as", "[1,2,3]"]);
    assert_eq!(out, "[1,2] ⊗ [3] + [1] ⊗ [2,3]\n");
    let (code, out, _) = forge(&["idem", "--operad", "prelie", "a", "a(b)"]);
    assert_eq!((code, out.as_str()), (0, "e(a) = a\ne(a(b)) = 0\n"));
    let (code, out, _) = forge(&["idem", "--operad", "nap", "--series", "--degree", "4"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("PASS nap/nap on 2 generators to degree 4"));
    assert!(out.contains("series: agrees"));
    let (code, out, _) = forge(&["roundtrip", "--operad", "prelie", "--degree", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("degree 3: dim 14 primitives 0 generated 14"));
    let (_, out, _) = forge(&["primitives", "--operad", "as", "--degree", "2", "--generators", "2"]);
    assert_eq!(out, "degree 1: 2\n  [a]\n  [b]\ndegree 2: 0\n");
}

#[test]
fn output_is_deterministic() {
    let args = ["check-law", "--format", "json"];
    let (c1, a, _) = forge_env(&args, &[("OPERAD_FORGE_JOBS", "1")]);
    let (c2, b, _) = forge_env(&args, &[("OPERAD_FORGE_JOBS", "4")]);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(a, b);
    let sampled = ["check-law", "--law", "maginf", "--sample", "50", "--seed", "11", "--format", "json"];
    let (_, x, _) = forge(&sampled);
    let (_, y, _) = forge(&sampled);
    assert_eq!(x, y);
    let v: serde_json::Value = serde_json::from_str(&x).unwrap();
    assert_eq!(v["laws"][0]["cases"], 50);
    let (_, x, _) = forge(&["check-basis", "--format", "json"]);
    let (_, y, _) = forge(&["check-basis", "--format", "json", "--jobs", "2"]);
    assert_eq!(x, y);
}
