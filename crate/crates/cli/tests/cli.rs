use std::process::Command;

fn qcoh(args: &[&str]) -> (i32, String, String) {
    let o = Command::new(env!("CARGO_BIN_EXE_qcoh")).args(args).output().unwrap();
    (
        o.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&o.stdout).into_owned(),
        String::from_utf8_lossy(&o.stderr).into_owned(),
    )
}

#[test]
fn compute_matching_point_exits_zero() {
    let (code, out, _) = qcoh(&[
        "compute", "--p", "7", "--chi", "nilpotent", "--lambda", "3,4", "--module", "simple",
        "--what", "h1",
    ]);
    assert_eq!(code, 0, "{out}");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let rec = &v["records"][0];
    assert_eq!(rec["h1"], serde_json::json!([0, 0]));
    assert_eq!(rec["match"], serde_json::json!(true));
}

#[test]
fn compute_disputed_point_exits_two() {
    let (code, out, _) = qcoh(&[
        "compute", "--p", "3", "--chi", "zero", "--lambda", "0,0", "--module", "verma", "--what",
        "both",
    ]);
    assert_eq!(code, 2, "{out}");
}

#[test]
fn weight_outside_lambda_chi_exits_one() {
    let (code, _, err) = qcoh(&["compute", "--p", "3", "--chi", "mixed:1", "--lambda", "0,0"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error:"), "{err}");
}

#[test]
fn unknown_method_exits_one() {
    let (code, out, _) = qcoh(&[
        "compute", "--p", "3", "--chi", "zero", "--lambda", "1,2", "--method", "sideways",
    ]);
    assert_ne!(code, 0, "{out}");
}

#[test]
fn scan_csv_has_one_line_per_point_and_module() {
    let (code, out, _) = qcoh(&[
        "scan", "--p", "3", "--chi-types", "zero,nilpotent", "--module", "both", "--what", "h1",
    ]);
    assert_eq!(code, 2);
    let mut r = csv::Reader::from_reader(out.as_bytes());
    let rows: Vec<csv::StringRecord> = r.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 2 * 9 * 2);
    assert_eq!(r.headers().unwrap().get(0), Some("p"));
}

#[test]
fn scan_extension_characters() {
    let (code, out, _) = qcoh(&[
        "scan", "--p", "3", "--chi-types", "semisimple:1,1,mixed:1", "--module", "verma",
        "--what", "both", "--format", "json",
    ]);
    assert_eq!(code, 0, "{out}");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let recs = v["records"].as_array().unwrap();
    assert!(!recs.is_empty());
    for r in recs {
        assert_eq!(r["h1"], serde_json::json!([0, 0]));
        assert!(r["field_degree"].as_u64().unwrap() > 1);
    }
}
