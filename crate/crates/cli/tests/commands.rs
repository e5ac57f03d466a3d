use std::process::Command;

use metacyclic::report::{BatteryReport, DecompositionReport, ErrorReport, IdempotentReport};

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_metacyclic")).args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn dihedral_eight_decomposes_into_five_components() {
    let (code, stdout, _) = run(&["decompose", "--q", "3", "--group", "split:n=4,s=3", "--format", "json"]);
    assert_eq!(code, 0);
    let r: DecompositionReport = serde_json::from_str(&stdout).unwrap();
    assert_eq!(r.totals.components, 5);
    assert_eq!(r.totals.dimension_sum, 8);
    assert_eq!(r.components.iter().filter(|c| c.dimension == 1).count(), 4);
}

#[test]
fn quaternion_verifies() {
    let (code, stdout, _) = run(&["verify", "--q", "3", "--group", "nonsplit:n=2,s=3"]);
    assert_eq!(code, 0, "{stdout}");
    assert!(stdout.trim_end().ends_with("PASS"));
}

#[test]
fn even_characteristic_is_rejected() {
    let (code, _, stderr) = run(&["decompose", "--q", "4", "--group", "split:n=4,s=3"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("EvenCharacteristic"), "{stderr}");

    let (code, stdout, _) = run(&["decompose", "--q", "4", "--group", "split:n=4,s=3", "--format", "json"]);
    assert_eq!(code, 1);
    let e: ErrorReport = serde_json::from_str(&stdout).unwrap();
    assert_eq!(e.code, "EvenCharacteristic");
}

#[test]
fn bad_arguments_exit_one() {
    assert_eq!(run(&["decompose", "--q", "9", "--group", "split:n=4"]).0, 1);
    assert_eq!(run(&["decompose", "--q", "6", "--group", "split:n=4,s=3"]).0, 1);
    assert_eq!(run(&["battery", "--q-mod", "1:0"]).0, 1);
    assert_eq!(run(&["frobnicate"]).0, 1);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn output_is_deterministic() {
    let args = ["idempotents", "--q", "7", "--group", "nonsplit:n=4,s=7", "--include-noncentral", "--format", "json"];
    let first = run(&args);
    assert_eq!(first.0, 0);
    assert_eq!(first, run(&args));
    let battery = ["battery", "--n-max", "6", "--q", "3,5", "--seed", "9"];
    assert_eq!(run(&battery), run(&battery));
}

#[test]
fn json_round_trips() {
    let (code, stdout, _) =
        run(&["idempotents", "--q", "3", "--group", "split:n=8,s=3", "--include-noncentral", "--format", "json"]);
    assert_eq!(code, 0);
    let r: IdempotentReport = serde_json::from_str(&stdout).unwrap();
    let again = serde_json::to_string_pretty(&r).unwrap() + "\n";
    assert_eq!(again, stdout);
    assert!(r.noncentral.iter().all(|p| p.case == "split"));
    assert!(r.idempotents.iter().any(|e| e.parent.is_some()));
}

#[test]
fn empty_battery_passes() {
    let (code, stdout, _) = run(&["battery", "--q", "3", "--q-mod", "1:4", "--format", "json"]);
    assert_eq!(code, 0);
    let r: BatteryReport = serde_json::from_str(&stdout).unwrap();
    assert_eq!(r.instances, 0);
    assert!(r.passed);
}

#[test]
fn small_battery_passes() {
    let (code, stdout, _) = run(&["battery", "--n-max", "8", "--q", "3,5,7", "--kind", "nonsplit", "--format", "json"]);
    assert_eq!(code, 0, "{stdout}");
    let r: BatteryReport = serde_json::from_str(&stdout).unwrap();
    assert!(r.instances > 0);
    assert!(r.failures.is_empty());
}

#[test]
fn factor_lists_cosets() {
    let (code, stdout, _) = run(&["factor", "--q", "3", "--n", "8"]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("x^8 - 1 over F_3: 5 factors"), "{stdout}");
    let (code, stdout, _) = run(&["factor", "--q", "3", "--n", "6"]);
    assert_eq!(code, 1, "{stdout}");
}
