use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gradeforge"))
        .args(args)
        .current_dir(fixtures())
        .env_remove("GRADEFORGE_BUDGET")
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn census_two_lists_ten_classes() {
    let v = json(&["census", "2", "--json"]);
    assert_eq!(v["items"].as_array().unwrap().len(), 10);
}

#[test]
fn hom_of_aaab_has_three_maps() {
    let out = run(&["hom", "magmas/aaab.mag", "magmas/aaab.mag"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("3 "));
}

#[test]
fn roundtrip_on_aaaa_holds() {
    let out = run(&["roundtrip", "magmas/aaaa.mag", "magmas/aaaa.mag"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}

#[test]
fn census_beyond_budget_exits_two() {
    let out = run(&["census", "4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
}

#[test]
fn small_node_budget_from_environment_exits_two() {
    let out = Command::new(env!("CARGO_BIN_EXE_gradeforge"))
        .args(["submagmas", "magmas/z4.mag", "magmas/klein.mag"])
        .current_dir(fixtures())
        .env("GRADEFORGE_BUDGET", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_input_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.mag");
    std::fs::write(&bad, "magma 2\n0 1\n1 x\n").unwrap();
    let out = run(&["hom", bad.to_str().unwrap(), "magmas/aaaa.mag"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(out.stdout.is_empty());
}

#[test]
fn ragged_table_is_a_validation_failure() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("ragged.mag");
    std::fs::write(&bad, "magma 2\n0 1\n1\n").unwrap();
    assert_eq!(
        run(&["hom", bad.to_str().unwrap(), "magmas/aaaa.mag"]).status.code(),
        Some(1)
    );
}

#[test]
fn unknown_subcommand_exits_three() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(3));
}

#[test]
fn failing_family_exits_one() {
    let out = run(&[
        "verify",
        "categories/gamma.cat",
        "categories/idempotent_monoid.cat",
        "families/gamma_idem_grading_4.fam",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("filter no"));
}

#[test]
fn every_produced_grading_verifies() {
    let cases: [(&str, &str, &[&str]); 4] = [
        ("magmas/aabb.mag", "magmas/aabb.mag", &[]),
        ("magmas/abaa.mag", "magmas/aaab.mag", &[]),
        ("categories/gamma.cat", "categories/z2.cat", &["--functors"]),
        ("categories/gamma.cat", "categories/idempotent_monoid.cat", &[]),
    ];
    let dir = tempfile::tempdir().unwrap();
    for (g, h, flags) in cases {
        let mut args = vec!["gradings", g, h, "--json"];
        args.extend_from_slice(flags);
        let v = json(&args);
        let items = v["items"].as_array().unwrap();
        assert!(!items.is_empty());
        for (i, item) in items.iter().enumerate() {
            let parts: Vec<&Value> = item.as_object().unwrap().values().collect();
            // a grading partitions the basis
            let basis: usize = parts.iter().map(|p| p.as_array().unwrap().len()).sum();
            let mut text = format!("family {basis} {}\n", parts.len());
            for (h, part) in parts.iter().enumerate() {
                text.push_str(&format!("w {h}"));
                for g in part.as_array().unwrap() {
                    text.push_str(&format!(" {g}"));
                }
                text.push('\n');
            }
            let path = dir.path().join(format!("w{i}.fam"));
            std::fs::write(&path, text).unwrap();
            let out = run(&["verify", g, h, path.to_str().unwrap()]);
            assert_eq!(out.status.code(), Some(0), "{g} {h} #{i}: {}", stdout(&out));
        }
    }
}

#[test]
fn groupoid_count_reports_divergence() {
    let v = json(&[
        "count",
        "groupoid",
        "categories/thin2.cat",
        "categories/thin2.cat",
        "--json",
    ]);
    assert_eq!(v["brute_force_value"], "4");
    assert_eq!(v["closed_form_value"], "4");
    assert_eq!(v["alternatives"]["printed"], "1");
}

#[test]
fn zero_homs_of_remark_include_the_collapsing_map() {
    let zero = stdout(&run(&[
        "hom",
        "--zero",
        "magmas/orthogonal_idempotents.mag",
        "magmas/idempotent_with_zero.mag",
    ]));
    let plain = stdout(&run(&[
        "hom",
        "magmas/orthogonal_idempotents.mag",
        "magmas/idempotent_with_zero.mag",
    ]));
    assert!(zero.lines().any(|l| l.trim() == "0 0 1"), "{zero}");
    assert!(!plain.lines().any(|l| l.trim() == "0 0 1"), "{plain}");
}

#[test]
fn output_is_byte_identical_across_runs() {
    let args = ["filters", "magmas/abaa.mag", "magmas/aabb.mag", "--json"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}
