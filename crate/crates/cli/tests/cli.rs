//! End-to-end tests of the binary: output shapes, exit codes, and the
//! stability of the tsv/json record formats.

use std::process::{Command, Output};

fn splitkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_splitkit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 output")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn split_in_each_coordinate_form() {
    let out = splitkit(&["split", "--policy", "natural", "--n", "6"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "natural: left [0, 3), right [3, 6)\n");

    let out = splitkit(&["split", "--policy", "rightplus", "--b", "10", "--n", "5"]);
    assert_eq!(stdout(&out), "rightplus: left [10, 12), right [12, 15)\n");

    let out = splitkit(&["split", "--policy", "natural", "--b", "0", "--e", "4"]);
    assert_eq!(stdout(&out), "natural: left [0, 2), excluded 2, right [3, 5)\n");
}

#[test]
fn split_rejects_bad_coordinates_with_exit_2() {
    // Conflicting forms.
    let out = splitkit(&["split", "--policy", "natural", "--n", "5", "--e", "4"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("coordinate form"));

    // No form at all.
    let out = splitkit(&["split", "--policy", "natural"]);
    assert_eq!(exit_code(&out), 2);

    // Negative size is a domain error.
    let out = splitkit(&["split", "--policy", "natural", "--n", "-3"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("must be >= 0"));

    // Unknown policy.
    let out = splitkit(&["split", "--policy", "middling", "--n", "4"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn split_json_record_shape_is_stable() {
    let out = splitkit(&["split", "--policy", "natural", "--n", "5", "--format", "json"]);
    let record: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(record["policy"], "natural");
    assert_eq!(record["left"], serde_json::json!([0, 2]));
    assert_eq!(record["excluded"], 2);
    assert_eq!(record["right"], serde_json::json!([3, 5]));

    let out = splitkit(&["split", "--policy", "leftplus", "--n", "6", "--format", "json"]);
    let record: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(record["excluded"], serde_json::Value::Null);
}

#[test]
fn split_tsv_has_header_and_one_row() {
    let out = splitkit(&["split", "--policy", "cutright", "--n", "5", "--format", "tsv"]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "policy\tleft_lo\tleft_hi\texcluded\tright_lo\tright_hi"
    );
    assert_eq!(lines.next().unwrap(), "cutright\t0\t2\t2\t3\t5");
}

#[test]
fn tabulate_renders_every_table_id() {
    for id in ["t1", "t2", "t3", "t4", "final", "loops"] {
        let out = splitkit(&["tabulate", id]);
        assert_eq!(exit_code(&out), 0, "{id}");
        assert!(stdout(&out).contains(&format!("table {id}")));
    }
    let out = splitkit(&["tabulate", "t9"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("unknown table"));
}

#[test]
fn tabulate_tsv_lists_positions() {
    let out = splitkit(&["tabulate", "t3", "--format", "tsv"]);
    let text = stdout(&out);
    assert!(text.starts_with("label\tposition\n"));
    assert!(text.contains("n/2-1\t1"));
    assert!(text.contains("n/2+1\t3"));
    assert!(text.contains("el\t1"));
}

#[test]
fn tabulate_json_records_parse_line_by_line() {
    let out = splitkit(&["tabulate", "final", "--format", "json"]);
    let text = stdout(&out);
    let mut right_plus_seen = false;
    for line in text.lines() {
        let record: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(record["table"], "final");
        if record["policy"] == "rightplus" {
            assert_eq!(record["right"], "n/2 <= i < n");
            right_plus_seen = true;
        }
    }
    assert!(right_plus_seen);
}

#[test]
fn expr_eval_reports_both_modes_by_default() {
    let out = splitkit(&["expr", "eval", "--expr", "(n-1)/2+1", "--n", "0"]);
    assert_eq!(stdout(&out), "floor: 0\ntrunc: 1\n");

    let out = splitkit(&["expr", "eval", "--expr", "(n+1)/2", "--n", "5", "--div-mode", "floor"]);
    assert_eq!(stdout(&out), "floor: 3\n");

    let out = splitkit(&["expr", "eval", "--expr", "0 <= i < n/2", "--n", "4", "--div-mode", "floor"]);
    assert_eq!(stdout(&out), "floor: [0, 2) length 2\n");
}

#[test]
fn expr_eval_rejects_syntax_errors_with_exit_2() {
    let out = splitkit(&["expr", "eval", "--expr", "n//2", "--n", "4"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("parse error"));

    let out = splitkit(&["expr", "eval", "--expr", "0 <= j < n", "--n", "4"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn expr_equiv_exit_codes_follow_the_verdict() {
    let out = splitkit(&["expr", "equiv", "--lhs", "(n-2)/2", "--rhs", "n/2-1"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).starts_with("holds"));

    let out = splitkit(&[
        "expr", "equiv", "--lhs", "(n-2)/2", "--rhs", "n/2-1", "--div-mode", "trunc",
    ]);
    assert_eq!(exit_code(&out), 1);
    assert!(stdout(&out).contains("n=1"));
}

#[test]
fn expr_equiv_handles_range_expressions() {
    let out = splitkit(&[
        "expr", "equiv",
        "--lhs", "0 <= i < n-n/2",
        "--rhs", "0 <= i < (n+1)/2",
        "--n-hi", "1000",
    ]);
    assert_eq!(exit_code(&out), 0);
}

#[test]
fn expr_equiv_json_records_expose_counterexamples() {
    let out = splitkit(&[
        "expr", "equiv", "--lhs", "(n-1)/2+1", "--rhs", "(n+1)/2",
        "--div-mode", "trunc", "--format", "json",
    ]);
    assert_eq!(exit_code(&out), 1);
    let text = stdout(&out);
    let lines: Vec<serde_json::Value> = text
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines[0]["record"], "counterexample");
    assert_eq!(lines[0]["n"], 0);
    let summary = lines.last().unwrap();
    assert_eq!(summary["record"], "summary");
    assert_eq!(summary["holds"], false);
    assert_eq!(summary["failures"], 1);
}

#[test]
fn expr_identity_sweeps_pass() {
    let out = splitkit(&["expr", "identity", "--name", "halves", "--n-hi", "100000"]);
    assert_eq!(exit_code(&out), 0);
    let out = splitkit(&["expr", "identity", "--name", "kway", "--n-hi", "500", "--k-hi", "16"]);
    assert_eq!(exit_code(&out), 0);
    let out = splitkit(&["expr", "identity", "--name", "nonsense"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn search_prints_the_sentinel_for_absent_targets() {
    let out = splitkit(&["search", "--array", "1,3,5", "--target", "3", "--variant", "rightplus"]);
    assert_eq!(stdout(&out), "found at 1\n");

    let out = splitkit(&["search", "--array", "1,3,5", "--target", "4"]);
    assert_eq!(stdout(&out), "-1\n");

    let out = splitkit(&["search", "--array", "1,3,5", "--target", "4", "--format", "json"]);
    let record: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(record["index"], serde_json::Value::Null);

    let out = splitkit(&["search", "--array", "1,3,5", "--target", "4", "--format", "tsv"]);
    assert_eq!(stdout(&out), "index\n-1\n");
}

#[test]
fn search_accepts_every_variant_and_rejects_others() {
    for variant in ["rightplus", "cutout", "compact"] {
        let out = splitkit(&["search", "--array", "2,4,6,8", "--target", "6", "--variant", variant]);
        assert_eq!(stdout(&out), "found at 2\n", "{variant}");
    }
    let out = splitkit(&["search", "--array", "1", "--target", "1", "--variant", "bogus"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn search_handles_negative_targets_and_empty_arrays() {
    let out = splitkit(&["search", "--array", "-5,-1,3", "--target=-1", "--variant", "compact"]);
    assert_eq!(stdout(&out), "found at 1\n");
    let out = splitkit(&["search", "--array", "", "--target", "7"]);
    assert_eq!(stdout(&out), "-1\n");
}

#[test]
fn chop_lists_indices_and_values() {
    let out = splitkit(&["chop", "--array", "1,4,3,6,13,11,15,18"]);
    assert_eq!(stdout(&out), "0,3,6,7\n");

    let out = splitkit(&["chop", "--array", "1,4,3,6,13,11,15,18", "--format", "json"]);
    let record: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(record["indices"], serde_json::json!([0, 3, 6, 7]));
    assert_eq!(record["values"], serde_json::json!([1, 6, 15, 18]));

    let out = splitkit(&["chop", "--array", "1,4,3,6,13,11,15,18", "--format", "tsv"]);
    let text = stdout(&out);
    assert!(text.starts_with("index\tvalue\n"));
    assert!(text.contains("3\t6"));

    let out = splitkit(&["chop", "--array", "bogus"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn cross_answers_the_worked_examples() {
    let out = splitkit(&["cross", "--text", "Two cats above"]);
    assert_eq!(stdout(&out), "true\n");
    let out = splitkit(&["cross", "--text", "One cat above"]);
    assert_eq!(stdout(&out), "false\n");
    let out = splitkit(&["cross", "--text", "ab", "--format", "json"]);
    let record: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(record["crosses"], true);
}

#[test]
fn verify_small_sweep_passes_and_reports_stages() {
    let out = splitkit(&["verify", "--max-n", "200", "--random-cases", "100"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    for stage in ["partitions", "identity halves", "equivalence fixtures", "searches", "sorts"] {
        assert!(text.contains(stage), "missing stage {stage}");
    }
    assert!(text.contains("overall: PASS"));
    assert!(stderr(&out).contains("seed: 0"));
}

#[test]
fn verify_respects_policy_subset_and_trunc_fixtures() {
    let out = splitkit(&[
        "verify", "--max-n", "50", "--policies", "natural,cutleft",
        "--div-mode", "trunc", "--random-cases", "50",
    ]);
    assert_eq!(exit_code(&out), 0, "{}", stdout(&out));
    assert!(stdout(&out).contains("equivalence fixtures (trunc)"));

    let out = splitkit(&["verify", "--max-n", "50", "--policies", "natural,bogus"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn verify_json_stage_records_parse() {
    let out = splitkit(&["verify", "--max-n", "100", "--random-cases", "50", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    let mut stage_count = 0;
    for line in text.lines() {
        let record: serde_json::Value = serde_json::from_str(line).unwrap();
        if record["record"] == "stage" {
            stage_count += 1;
            assert_eq!(record["pass"], true);
        }
    }
    assert_eq!(stage_count, 8);
}

#[test]
fn verify_tsv_rows_are_one_per_stage() {
    let out = splitkit(&["verify", "--max-n", "100", "--random-cases", "50", "--format", "tsv"]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "stage\tchecked\tfailures\telapsed_ms\tresult");
    assert_eq!(lines.count(), 8);
}
