mod common;

use common::run;

#[test]
fn success_is_zero() {
    for args in [
        &["wrd", "--g", "10", "--nu", "3", "--d", "7", "--r", "1"][..],
        &["b3", "--g", "20", "--nu", "3", "--d", "40"],
        &["b3", "--g", "20", "--nu", "3", "--d", "75"],
        &["fixdet", "--g", "20", "--nu", "3", "--d", "50"],
        &["atlas", "--g", "20", "--nu", "3", "--format", "ascii"],
        &["rho", "--g", "20", "--d", "38", "--r", "1", "--i", "3"],
        &["--help"],
        &["--version"],
    ] {
        let r = run(args);
        assert_eq!(r.code, 0, "{args:?}: {}", r.stderr);
    }
}

#[test]
fn usage_errors_are_one() {
    for args in [
        &[][..],
        &["wrd", "--g", "10", "--nu", "3", "--d", "7"],
        &["wrd", "--g", "ten", "--nu", "3", "--d", "7", "--r", "1"],
        &["wrd", "-g", "10", "--nu", "3", "--d", "7", "--r", "1"],
        &["wrd", "10", "3", "7", "1"],
        &[
            "wrd", "--g", "10", "--nu", "3", "--d", "7", "--r", "1", "--format", "svg",
        ],
        &[
            "b3", "--g", "20", "--nu", "3", "--d", "40", "--format", "ascii",
        ],
        &[
            "b3", "--g", "20", "--nu", "3", "--d", "40", "--format", "yaml",
        ],
        &["verify", "--gmax", "3"],
        &["verify", "--gmax", "6", "--format", "csv"],
        &["rho", "--g", "20", "--d", "38", "--i", "-1"],
        &["frobnicate"],
    ] {
        let r = run(args);
        assert_eq!(r.code, 1, "{args:?}: {}", r.stderr);
        assert!(r.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn hypothesis_violations_are_two() {
    let r = run(&["wrd", "--g", "10", "--nu", "9", "--d", "7", "--r", "1"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("2nu < g + 3"), "{}", r.stderr);

    for args in [
        &["wrd", "--g", "3", "--nu", "3", "--d", "7", "--r", "1"][..],
        &["wrd", "--g", "10", "--nu", "3", "--d", "-1", "--r", "1"],
        &["atlas", "--g", "10", "--nu", "2"],
        &["fixdet", "--g", "20", "--nu", "3", "--d", "77"],
    ] {
        assert_eq!(run(args).code, 2, "{args:?}");
    }
}

#[test]
fn not_applicable_report_is_printed_with_code_two() {
    let r = run(&[
        "b3", "--g", "20", "--nu", "3", "--d", "10", "--format", "json",
    ]);
    assert_eq!(r.code, 2);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["status"], "NotApplicable");
    assert!(v["reason"].as_str().unwrap().contains("2g-2 <= d <= 4g-4"));
}

#[test]
fn rho_accepts_negative_degree() {
    let r = run(&["rho", "--g", "5", "--d", "-3", "--format", "json"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("gonal-bn-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("b3.json");
    let p = path.to_str().unwrap();
    let r = run(&[
        "b3", "--g", "20", "--nu", "3", "--d", "40", "--format", "json", "--out", p,
    ]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.is_empty());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["components"].as_array().unwrap().len(), 3);
    std::fs::remove_dir_all(&dir).unwrap();
}

fn verify_report(gmax: &str, numax: &str) -> (i32, serde_json::Value, String) {
    let dir = std::env::temp_dir().join(format!("gonal-bn-verify-{}-{gmax}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let r = run(&[
        "verify",
        "--gmax",
        gmax,
        "--numax",
        numax,
        "--out",
        path.to_str().unwrap(),
    ]);
    let v = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_dir_all(&dir).unwrap();
    (r.code, v, r.stderr)
}

/// The printed trigonal net rows list `w_{2,0}` where the closed form
/// cannot produce it; verify must surface exactly those cells.
fn assert_only_trigonal_net_rows(v: &serde_json::Value) {
    let failures = v["failures"].as_array().unwrap();
    assert!(!failures.is_empty());
    for f in failures {
        assert_eq!(f["check"], "table_r2", "{f}");
        assert_eq!(f["nu"], 3, "{f}");
        assert_eq!(f["r"], 2, "{f}");
    }
    assert!(v["set_differences"].as_array().unwrap().is_empty());
    assert!(v["inconclusive"].as_array().unwrap().is_empty());
    assert!(v["invariant_failures"].as_array().unwrap().is_empty());
    assert!(v["invariant_checks"].as_u64().unwrap() > 0);
}

#[test]
fn verify_small_grid_writes_valid_json() {
    let (code, v, stderr) = verify_report("12", "4");
    assert_eq!(v["g_max"], 12);
    assert_eq!(v["nu_max"], 4);
    assert_eq!(code, 3);
    assert!(stderr.contains("FAIL"));
    assert_only_trigonal_net_rows(&v);
}

#[test]
fn verify_default_grid() {
    let (code, v, _) = verify_report("20", "6");
    assert_eq!(v["passed"], false);
    assert_eq!(code, 3);
    assert_only_trigonal_net_rows(&v);
}
