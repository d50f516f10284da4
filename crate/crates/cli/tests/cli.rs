mod common;

use common::{qx, qx_with_env, repo_root};

#[test]
fn threshold_prints_value_first() {
    let r = qx(&["threshold", "--classical", "n^3", "--quantum", "n", "--C", "1e6"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(r.stdout.lines().next(), Some("1000"));
}

#[test]
fn threshold_without_advantage() {
    let r = qx(&["threshold", "--classical", "n", "--quantum", "n^2"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout.lines().next(), Some("no-advantage"));
}

#[test]
fn grover_threshold_by_scenario() {
    let r = qx(&["threshold", "--classical", "n", "--quantum", "sqrt(n)", "--scenario", "base"]);
    assert_eq!(r.stdout.lines().next(), Some("10^12"));
}

#[test]
fn syntax_error_exits_nonzero_with_offset() {
    let r = qx(&["threshold", "--classical", "n^(", "--quantum", "n"]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.is_empty());
    assert!(r.stderr.starts_with("error:"));
    assert!(r.stderr.contains("offset 3"));
    assert_eq!(r.stderr.lines().count(), 1);
}

#[test]
fn unknown_id_exits_nonzero() {
    let r = qx(&["analyze", "--id", "nope"]);
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("nope"));
}

#[test]
fn bad_constant_is_rejected() {
    for c in ["0.5", "abc", "10^400"] {
        let r = qx(&["grid", "--C", c]);
        assert_eq!(r.code, 1, "{c}");
    }
}

#[test]
fn analyze_grover_text() {
    let r = qx(&["analyze", "--id", "grover"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("40 logical, 40000 physical"), "{}", r.stdout);
    assert!(r.stdout.contains("2026-2027"));
}

#[test]
fn every_format_renders() {
    for f in ["text", "json", "csv", "markdown"] {
        let r = qx(&["grid", "--format", f]);
        assert_eq!(r.code, 0, "{f}: {}", r.stderr);
        assert!(!r.stdout.is_empty());
    }
    let r = qx(&["plot", "wedge", "--id", "grover"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("\"kind\": \"wedge\""));
}

#[test]
fn roadmap_year_for() {
    let r = qx(&["roadmap", "year-for", "--provider", "ibm", "--qubits", "40000"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("2026.9"), "{}", r.stdout);
}

#[test]
fn catalog_classify_markdown() {
    let r = qx(&["catalog", "classify", "--scenario", "base"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("grover"));
    assert!(r.stdout.contains("yellow"));
}

fn data_copy() -> tempfile::TempDir {
    let dir = tempfile::tempdir().unwrap();
    let src = repo_root().join("data");
    std::fs::copy(src.join("scenarios.json"), dir.path().join("scenarios.json")).unwrap();
    std::fs::copy(src.join("catalog.json"), dir.path().join("catalog.json")).unwrap();
    std::fs::create_dir(dir.path().join("roadmaps")).unwrap();
    for p in ["ibm.csv", "ionq.csv"] {
        std::fs::copy(src.join("roadmaps").join(p), dir.path().join("roadmaps").join(p)).unwrap();
    }
    dir
}

#[test]
fn data_dir_overrides_builtin_roadmap() {
    let dir = data_copy();
    std::fs::write(
        dir.path().join("roadmaps/acme.csv"),
        "provider,year,physical_qubits,status\nacme,2020,10,realized\nacme,2021,100,realized\n",
    )
    .unwrap();
    let path = dir.path().to_str().unwrap();
    let args = ["roadmap", "year-for", "--provider", "acme", "--qubits", "1000"];
    assert_eq!(qx(&args).code, 1);

    let by_env = qx_with_env(&args, &[("QX_DATA_DIR", path)]);
    assert_eq!(by_env.code, 0, "{}", by_env.stderr);
    assert!(by_env.stdout.contains("2022"), "{}", by_env.stdout);

    let mut with_flag = vec!["--data-dir", path];
    with_flag.extend(args);
    assert_eq!(qx(&with_flag).stdout, by_env.stdout);
}

#[test]
fn invalid_data_file_is_an_error() {
    let dir = data_copy();
    std::fs::write(dir.path().join("scenarios.json"), "[{\"name\": 1}]").unwrap();
    let r = qx(&["--data-dir", dir.path().to_str().unwrap(), "grid"]);
    assert_eq!(r.code, 1);
}
