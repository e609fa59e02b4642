//! End-to-end tests of the binary: exit-code contract, report-shape
//! contracts, and byte-identical output across runs and thread counts.

use std::path::PathBuf;
use std::process::{Command, Output};

fn szk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_szk"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn tmp(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("szk-test-{}-{name}", std::process::id()));
    p
}

/// Assert that the serialized JSON text contains exactly these top-level
/// keys, in this order.  (Parsing into `serde_json::Value` sorts map keys,
/// so the pinned field order must be checked against the raw bytes.)
fn assert_key_order(raw: &[u8], keys: &[&str]) {
    let text = std::str::from_utf8(raw).unwrap();
    let doc: serde_json::Value = serde_json::from_str(text).unwrap();
    let obj = doc.as_object().unwrap();
    assert_eq!(obj.len(), keys.len(), "unexpected top-level key count");
    let mut last = 0usize;
    for key in keys {
        let needle = format!("\"{key}\"");
        let pos = text[last..]
            .find(&needle)
            .unwrap_or_else(|| panic!("key {key} missing or out of order"));
        last += pos + needle.len();
    }
}

#[test]
fn exit_codes_follow_the_contract() {
    // 0: all claims pass.
    let out = szk(&["verify", "higman", "--group", "A(m=3,l=1)"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));

    // 1: a claim fails (the twisted order-64 triple group is intransitive).
    let out = szk(&["verify", "suzuki-property", "--group", "B(m=2,l=1,eps=auto)"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("[FAIL] transitive-involution-action"));

    // 2: parse/validation errors.
    let out = szk(&["verify", "higman", "--group", "gf(m=3,poly=0x9)"]);
    assert_eq!(out.status.code(), Some(2), "reducible polynomial must be rejected");
    let out = szk(&["verify", "higman", "--group", "A(m=3;l=1)"]);
    assert_eq!(out.status.code(), Some(2), "malformed spec must be rejected");
    let out = szk(&["verify", "nope", "--group", "A(m=3,l=1)"]);
    assert_eq!(out.status.code(), Some(2), "unknown suite must be rejected");
    let out = szk(&["construct", "--group", "gf(m=3,poly=0xb)"]);
    assert_eq!(out.status.code(), Some(2), "a field spec is not a group");
    let out = szk(&["ti", "--group", "A(m=3,l=1)"]);
    assert_eq!(out.status.code(), Some(2), "ti needs an ambient group");
    let out = szk(&["construct", "--group", "sz(32)"]);
    assert_eq!(out.status.code(), Some(2), "oversized instances are guarded");
    let out = szk(&["construct", "--group", "sz(8)", "--poly", "0xd"]);
    assert_eq!(out.status.code(), Some(2), "ambient groups pin their field");
}

#[test]
fn verify_report_is_byte_identical_across_runs_and_threads() {
    // The order-512 twisted triple group genuinely violates the
    // center-equality law (63 nonabelian normal subgroups of order 64 have
    // |Z(Q)| = 16 > |Z(P)| = 8), so this report's verdict is an honest
    // "fail" and the exit code is 1.  The point of the test is that the
    // bytes are identical across runs and thread counts either way.
    let f1 = tmp("r1.json");
    let f2 = tmp("r2.json");
    let out = szk(&[
        "verify", "lemma22", "--group", "B(m=3,l=1,eps=auto)",
        "--json", f1.to_str().unwrap(), "--threads", "1",
    ]);
    assert_eq!(out.status.code(), Some(1), "{}", String::from_utf8_lossy(&out.stderr));
    let out = szk(&[
        "verify", "lemma22", "--group", "B(m=3,l=1,eps=auto)",
        "--json", f2.to_str().unwrap(), "--threads", "3",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let b1 = std::fs::read(&f1).unwrap();
    let b2 = std::fs::read(&f2).unwrap();
    assert!(!b1.is_empty() && b1 == b2, "reports must not depend on thread count");
    let doc: serde_json::Value = serde_json::from_slice(&b1).unwrap();
    assert_eq!(doc["schema"], "szk-report-v1");
    assert_eq!(doc["verdict"], "fail");
    let failed: Vec<&str> = doc["claims"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["verdict"] == "fail")
        .map(|c| c["id"].as_str().unwrap())
        .collect();
    assert_eq!(failed, ["clause-center-containment-and-equality"]);
    std::fs::remove_file(f1).ok();
    std::fs::remove_file(f2).ok();
}

#[test]
fn chartable_json_has_the_pinned_shape_and_is_thread_independent() {
    let f1 = tmp("c1.json");
    let f2 = tmp("c2.json");
    for (path, threads) in [(&f1, "1"), (&f2, "2")] {
        let out = szk(&[
            "chartable", "--group", "B(m=3,l=1,eps=auto)",
            "--json", path.to_str().unwrap(), "--threads", threads,
        ]);
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    }
    let b1 = std::fs::read(&f1).unwrap();
    assert_eq!(b1, std::fs::read(&f2).unwrap());
    assert_key_order(&b1, &["group", "prime", "degrees", "heights", "prediction", "verdict"]);
    let doc: serde_json::Value = serde_json::from_slice(&b1).unwrap();
    assert_eq!(doc["group"], "B(m=3,l=1,eps=0x2)");
    assert_eq!(doc["prime"], 53);
    assert_eq!(doc["degrees"], serde_json::json!([[1, 64], [8, 7]]));
    assert_eq!(doc["heights"], serde_json::json!({"0": 64, "3": 7}));
    assert_eq!(doc["prediction"], serde_json::json!([0, 3]));
    assert_eq!(doc["verdict"], "pass");
    std::fs::remove_file(f1).ok();
    std::fs::remove_file(f2).ok();
}

#[test]
fn ti_json_is_exactly_the_four_key_shape() {
    let f = tmp("ti.json");
    let out = szk(&["ti", "--group", "sz(8)", "--json", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let raw = std::fs::read(&f).unwrap();
    assert_key_order(&raw, &["group", "sylow_order", "conjugates", "ti"]);
    let doc: serde_json::Value = serde_json::from_slice(&raw).unwrap();
    assert_eq!(doc["group"], "sz(8)");
    assert_eq!(doc["sylow_order"], 64);
    assert_eq!(doc["conjugates"], 65);
    assert_eq!(doc["ti"], true);
    std::fs::remove_file(f).ok();
}

#[test]
fn catalog_lists_are_stable_across_runs() {
    let a = szk(&["catalog"]);
    let b = szk(&["catalog"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8_lossy(&a.stdout);
    assert!(text.contains("A(m=3,l=1)"));
    assert!(text.contains("sz(8)"));
    assert!(text.contains("higman"));
}

#[test]
fn poly_override_is_reflected_in_the_report() {
    let f = tmp("poly.json");
    let out = szk(&[
        "construct", "--group", "A(m=3,l=1)",
        "--poly", "0xd", "--json", f.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let doc: serde_json::Value =
        serde_json::from_slice(&std::fs::read(&f).unwrap()).unwrap();
    assert_eq!(doc["field"], "gf(m=3,poly=0xd)");
    std::fs::remove_file(f).ok();
}

#[test]
fn strict_flag_controls_only_inconclusive_verdicts() {
    // A(m=2,l=1) has an even-order twist: the height prediction does not
    // apply, so the verdict is inconclusive rather than pass/fail.
    let out = szk(&["heights", "--group", "A(m=2,l=1)"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let out = szk(&["heights", "--group", "A(m=2,l=1)", "--strict"]);
    assert_eq!(out.status.code(), Some(1));
}
