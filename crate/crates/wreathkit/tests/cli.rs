//! Black-box tests of the command-line binary: exit codes, report output
//! and JSON payloads, run against the committed corpus bundles.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::sync::Arc;
use wreathkit::bundle::{mor_doc, Bundle};
use wreathkit::mixed::{kleisli_compose, KleisliMor};
use wreathkit::mor::Mor;
use wreathkit::structures::FinMonoid;
use wreathkit::wreath::check_wreath;

fn corpus(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../corpus")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wreathkit"))
        .args(args)
        .output()
        .expect("binary should spawn")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("terminated by signal")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is UTF-8")
}

fn check(kind: &str, bundle: &str, structure: &str) -> Output {
    run(&[
        "check",
        kind,
        "--bundle",
        corpus(bundle).to_str().unwrap(),
        "--structure",
        structure,
    ])
}

// ---------------------------------------------------------------- plumbing

#[test]
fn help_and_version_exit_cleanly() {
    let help = run(&["--help"]);
    assert_eq!(code(&help), 0);
    assert!(stdout(&help).contains("check"));
    assert_eq!(code(&run(&["check", "--help"])), 0);
    assert_eq!(code(&run(&["--version"])), 0);
}

#[test]
fn bad_usage_exits_with_two() {
    assert_eq!(code(&run(&["frobnicate"])), 2);
    assert_eq!(code(&run(&["check", "wreath"])), 2); // missing --bundle
}

#[test]
fn unreadable_and_malformed_bundles_exit_with_two() {
    let missing = check("wreath", "no-such-file.json", "w1");
    assert_eq!(code(&missing), 2);
    assert!(stderr(&missing).contains("error:"));

    let malformed = check("wreath", "malformed.json", "w1");
    assert_eq!(code(&malformed), 2);
    assert!(stderr(&malformed).contains("malformed bundle document"));

    let badshape = check("monoid", "badshape.json", "anything");
    assert_eq!(code(&badshape), 2);
}

#[test]
fn unknown_structure_name_exits_with_two() {
    let out = check("wreath", "z4-extension.json", "no-such-wreath");
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("no-such-wreath"));
}

#[test]
fn wrong_structure_type_exits_with_two() {
    let out = check("wreath", "z4-extension.json", "amon");
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("error:"));
}

// ------------------------------------------------------------------ checks

#[test]
fn every_corpus_structure_passes_its_check() {
    let table = [
        ("monoid", "z4-extension.json", "amon"),
        ("monoid", "coactions.json", "amon"),
        ("bimonoid", "heisenberg-z2.json", "kb"),
        ("bimonoid", "heisenberg-z3.json", "kb"),
        // a bimonoid serves for either one-sided check
        ("monoid", "heisenberg-z2.json", "kb"),
        ("comonoid", "heisenberg-z2.json", "kb"),
        ("wreath", "z4-extension.json", "w1"),
        ("opwreath", "heisenberg-z2.json", "hw"),
        ("opwreath", "heisenberg-z3.json", "hw"),
        ("opwreath", "coactions.json", "ow-trivial"),
        ("opwreath", "coactions.json", "ow-graded"),
        ("coaction", "coactions.json", "coact-trivial"),
        ("coaction", "coactions.json", "coact-graded"),
        ("coaction", "monoidal-trivial-b.json", "coact0"),
        ("monoidal-coaction", "monoidal-trivial-b.json", "mc1"),
        ("opmonoidal", "monoidal-trivial-b.json", "mc1"),
    ];
    for (kind, bundle, structure) in table {
        let out = check(kind, bundle, structure);
        assert_eq!(
            code(&out),
            0,
            "{kind} {structure} in {bundle}:\n{}{}",
            stdout(&out),
            stderr(&out),
        );
        assert!(stdout(&out).contains("overall: PASS"));
    }
}

#[test]
fn failing_check_prints_report_and_exits_with_one() {
    let out = check("wreath", "z4-extension.json", "w1-broken");
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("[FAIL]"));
    assert!(text.contains("overall: FAIL"));
}

#[test]
fn json_report_is_structured() {
    let out = run(&[
        "check",
        "wreath",
        "--bundle",
        corpus("z4-extension.json").to_str().unwrap(),
        "--structure",
        "w1",
        "--report",
        "json",
    ]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 7);
    assert!(entries.iter().all(|e| e["pass"] == true));
    assert_eq!(entries[0]["id"], "lambda-mu");
}

// ------------------------------------------------------------ computations

#[test]
fn product_wreath_emits_a_monoid_bundle() {
    let z4 = corpus("z4-extension.json");
    let out = run(&[
        "compute",
        "product-wreath",
        "--bundle",
        z4.to_str().unwrap(),
        "--structure",
        "w1",
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let product = Bundle::from_json(&stdout(&out)).unwrap();
    let m = product.monoid("product").unwrap();
    assert_eq!(m.mul.rows(), 4);
    assert_eq!(m.mul.cols(), 16);

    // invalid data is rejected unless explicitly told to skip the laws
    let rejected = run(&[
        "compute",
        "product-wreath",
        "--bundle",
        z4.to_str().unwrap(),
        "--structure",
        "w1-broken",
    ]);
    assert_eq!(code(&rejected), 1);
    assert!(stderr(&rejected).contains("validation failed"));
    let forced = run(&[
        "compute",
        "product-wreath",
        "--bundle",
        z4.to_str().unwrap(),
        "--structure",
        "w1-broken",
        "--skip-validate",
    ]);
    assert_eq!(code(&forced), 0);
    Bundle::from_json(&stdout(&forced)).unwrap();
}

#[test]
fn reconstruct_writes_the_multiplication_table() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("total.json");
    let out = run(&[
        "compute",
        "reconstruct",
        "--bundle",
        corpus("z4-extension.json").to_str().unwrap(),
        "--structure",
        "ext-z4",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(stdout(&out).is_empty());
    let fm: FinMonoid = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(fm.size(), 4);
    assert!(fm.is_isomorphic_under(&FinMonoid::cyclic(4), &[0, 2, 1, 3]));
}

#[test]
fn cocycle_enumeration_reports_count_and_respects_the_bound() {
    let z4 = corpus("z4-extension.json");
    let out = run(&[
        "compute",
        "enumerate-cocycles",
        "--bundle",
        z4.to_str().unwrap(),
        "--structure",
        "ext-z2z2",
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["count"], 2);
    assert_eq!(v["factor_sets"][1], serde_json::json!([[0, 0], [0, 1]]));

    let capped = run(&[
        "compute",
        "enumerate-cocycles",
        "--bundle",
        z4.to_str().unwrap(),
        "--structure",
        "ext-z2z2",
        "--max-candidates",
        "1",
    ]);
    assert_eq!(code(&capped), 2);
    assert!(stderr(&capped).contains("search space"));
}

#[test]
fn convolution_commands_agree_on_the_same_data() {
    for bundle in ["heisenberg-z2.json", "heisenberg-z3.json"] {
        let path = corpus(bundle);
        let via_opwreath = run(&[
            "compute",
            "convolve",
            "--bundle",
            path.to_str().unwrap(),
            "--structure",
            "hw",
            "-u",
            "f1",
            "-v",
            "g1",
        ]);
        assert_eq!(code(&via_opwreath), 0, "{}", stderr(&via_opwreath));
        let via_bimonoid = run(&[
            "compute",
            "heisenberg",
            "--bundle",
            path.to_str().unwrap(),
            "--structure",
            "kb",
            "-u",
            "f1",
            "-v",
            "g1",
        ]);
        assert_eq!(code(&via_bimonoid), 0, "{}", stderr(&via_bimonoid));
        assert_eq!(stdout(&via_opwreath), stdout(&via_bimonoid), "{bundle}");
        // sanity: the payload really is a morphism document
        let v: serde_json::Value = serde_json::from_str(&stdout(&via_opwreath)).unwrap();
        assert_eq!(v["dom"], serde_json::json!(["b"]));
        assert_eq!(v["cod"], serde_json::json!(["b"]));
    }
}

#[test]
fn kleisli_composition_matches_the_library() {
    let path = corpus("heisenberg-z2.json");
    let out = run(&[
        "compute",
        "kleisli-compose",
        "--bundle",
        path.to_str().unwrap(),
        "--structure",
        "hw",
        "-f",
        "f1",
        "-g",
        "g1",
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));

    let bundle = Bundle::from_path(&path).unwrap();
    let ctx = Arc::new(bundle.opwreath("hw").unwrap());
    let lift = |m: &Mor| {
        let x = m.dom().strip_prefix(&ctx.c).unwrap();
        let y = m.cod().strip_prefix(&ctx.monoid.carrier).unwrap();
        KleisliMor::new(ctx.clone(), x, y, m.clone()).unwrap()
    };
    let composed = kleisli_compose(
        &lift(bundle.morphism("f1").unwrap()),
        &lift(bundle.morphism("g1").unwrap()),
    )
    .unwrap();
    let mut want = serde_json::to_string_pretty(&mor_doc(composed.mat())).unwrap();
    want.push('\n');
    assert_eq!(stdout(&out), want);
}

#[test]
fn eckmann_hilton_check_passes_on_the_trivial_coaction() {
    let out = run(&[
        "compute",
        "eckmann-hilton",
        "--bundle",
        corpus("monoidal-trivial-b.json").to_str().unwrap(),
        "--structure",
        "mc1",
    ]);
    assert_eq!(code(&out), 0, "{}{}", stdout(&out), stderr(&out));
    assert!(stdout(&out).contains("overall: PASS"));
}

// -------------------------------------------------------------- extensions

#[test]
fn analyze_extracts_fiber_action_and_factor_set() {
    let out = run(&[
        "extension",
        "analyze",
        "--bundle",
        corpus("z4-extension.json").to_str().unwrap(),
        "--structure",
        "fib-z4",
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["a"]["elements"], serde_json::json!(["0", "2"]));
    assert_eq!(v["alpha"], serde_json::json!([[0, 0], [1, 1]]));
    assert_eq!(v["rho"], serde_json::json!([[0, 0], [0, 1]]));
}

#[test]
fn verify_passes_and_reports_in_json() {
    let z4 = corpus("z4-extension.json");
    let out = run(&[
        "extension",
        "verify",
        "--bundle",
        z4.to_str().unwrap(),
        "--structure",
        "ext-z4",
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(stdout(&out).contains("overall: PASS"));

    let json = run(&[
        "extension",
        "verify",
        "--bundle",
        z4.to_str().unwrap(),
        "--structure",
        "ext-z4",
        "--report",
        "json",
    ]);
    assert_eq!(code(&json), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(v["entries"].as_array().unwrap().len(), 5);
}

#[test]
fn enumerate_finds_only_the_trivial_factor_set_for_the_inverting_action() {
    let out = run(&[
        "extension",
        "enumerate",
        "--bundle",
        corpus("z4-extension.json").to_str().unwrap(),
        "--structure",
        "ext-z2z3-inv",
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["count"], 1);
    assert_eq!(v["factor_sets"][0], serde_json::json!([[0, 0], [0, 0]]));
}

#[test]
fn to_wreath_emits_a_bundle_that_passes_its_own_check() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("induced.json");
    let out = run(&[
        "extension",
        "to-wreath",
        "--bundle",
        corpus("z4-extension.json").to_str().unwrap(),
        "--structure",
        "ext-z4",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let induced = Bundle::from_path(&path).unwrap();
    let w = induced.wreath("wreath").unwrap();
    assert!(check_wreath(&w).unwrap().passed());

    // and the emitted document is also checkable through the binary itself
    let recheck = run(&[
        "check",
        "wreath",
        "--bundle",
        path.to_str().unwrap(),
        "--structure",
        "wreath",
    ]);
    assert_eq!(code(&recheck), 0);
}
