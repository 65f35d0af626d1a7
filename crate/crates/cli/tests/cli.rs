use std::process::{Command, Output};

fn umbral(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_umbral"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn verify_t2_emits_a_passing_json_report() {
    let out = umbral(&[
        "verify", "t2", "--n-max", "6", "--m-max", "3", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["identity"], "T2");
    assert_eq!(report["all_equal"], true);
    assert_eq!(report["cases"].as_array().unwrap().len(), 63);
}

#[test]
fn lah_table_as_csv() {
    let out = umbral(&[
        "table", "--family", "lah", "--n-max", "3", "--format", "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("n,k,value\n"));
    let lines: Vec<_> = text.lines().collect();
    assert!(lines.contains(&"3,1,6"));
    assert!(lines.contains(&"3,2,6"));
}

#[test]
fn series_revert() {
    let out = umbral(&[
        "series",
        "revert",
        "--coeffs",
        "0,1,-1/2,1/6,-1/24",
        "--trunc",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "0,1,1/2,1/3,1/4\n");
}

#[test]
fn series_literal_is_padded_to_trunc() {
    let out = umbral(&[
        "series", "pow", "--coeffs", "1,1", "--alpha", "-1", "--trunc", "5",
    ]);
    assert_eq!(stdout(&out), "1,-1,1,-1,1\n");
}

#[test]
fn failing_identity_exits_one_and_still_reports() {
    let out = umbral(&[
        "verify",
        "remark",
        "--n-max",
        "3",
        "--m-max",
        "1",
        "--interpretation",
        "literal",
        "--format",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).starts_with("identity,n,m,k,lhs,rhs,equal\nREMARK/literal,1,1,1,"));
}

#[test]
fn remark_without_interpretation_emits_both_readings() {
    let out = umbral(&[
        "verify", "remark", "--n-max", "3", "--m-max", "1", "--format", "json",
    ]);
    let reports: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(reports.as_array().unwrap().len(), 2);
}

#[test]
fn parameter_errors_exit_two_with_one_line() {
    let cases: &[&[&str]] = &[
        &["table", "--family", "abel", "--a", "0", "--n-max", "3"],
        &["table", "--family", "abel", "--a", "1/0", "--n-max", "3"],
        &["table", "--family", "abel", "--a", "x", "--n-max", "3"],
        &["table", "--family", "bogus", "--n-max", "3"],
        &[
            "verify", "xcheck", "--n-max", "3", "--m-max", "2", "--family", "bogus",
        ],
        &[
            "verify", "xcheck", "--n-max", "3", "--m-max", "2", "--family", "abel", "--a", "0",
        ],
        &[
            "verify",
            "remark",
            "--n-max",
            "3",
            "--m-max",
            "2",
            "--interpretation",
            "iii",
        ],
        &["series", "revert", "--coeffs", "1,1"],
        &["series", "revert", "--coeffs", "0,1/-2"],
        &["table"],
    ];
    for args in cases {
        let out = umbral(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        let err = String::from_utf8(out.stderr).unwrap();
        assert_eq!(err.trim_end().lines().count(), 1, "{args:?}: {err}");
    }
}

#[test]
fn output_is_byte_deterministic() {
    let runs: &[&[&str]] = &[
        &[
            "verify", "xcheck", "--n-max", "6", "--m-max", "3", "--format", "json",
        ],
        &[
            "verify", "t3", "--n-max", "6", "--m-max", "2", "--a", "-1/2", "--format", "csv",
        ],
        &["table", "--family", "mittag-leffler", "--n-max", "8"],
    ];
    for args in runs {
        let first = umbral(args);
        let second = umbral(args);
        assert_eq!(first.stdout, second.stdout, "{args:?}");
        assert!(!first.stdout.is_empty());
    }
}

#[test]
fn output_flag_writes_the_file() {
    let path = std::env::temp_dir().join(format!("umbral-cli-{}.csv", std::process::id()));
    let out = umbral(&[
        "table",
        "--family",
        "stirling1u",
        "--n-max",
        "3",
        "--format",
        "csv",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert!(text.contains("3,1,2\n3,2,3\n3,3,1\n"));
}

#[test]
fn negative_rationals_are_accepted() {
    let out = umbral(&[
        "table", "--family", "abel", "--a", "-1", "--n-max", "2", "--format", "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("2,1,2\n"));
    let out = umbral(&["series", "compose", "--coeffs", "-1,1", "--inner", "0,-1/2"]);
    assert_eq!(stdout(&out), "-1,-1/2\n");
}
