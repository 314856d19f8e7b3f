use std::path::PathBuf;

use mdisc::cli::{main_with_args, parse_config, run, to_json, Format, JobSpec, Method, StratumAction};
use mdisc::PointConfig;
use serde_json::Value;
use tempfile::TempDir;

fn write(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, body).unwrap();
    path
}

fn write_configs(dir: &TempDir, name: &str, configs: &[PointConfig]) -> PathBuf {
    write(dir, name, &to_json(configs).to_string())
}

fn square_triangle() -> Vec<PointConfig> {
    vec![
        PointConfig::unit_square(),
        PointConfig::from_pairs(&[(0, 0), (1, 3), (-1, 2), (0, 1), (0, 2)]),
    ]
}

fn degree(file: PathBuf, method: Method, format: Format) -> JobSpec {
    JobSpec::Degree {
        method,
        seed: 0,
        force: false,
        format,
        file,
    }
}

#[test]
fn both_methods_agree_on_square_triangle() {
    let dir = TempDir::new().unwrap();
    let file = write_configs(&dir, "a.json", &square_triangle());
    let out = run(&degree(file, Method::Both, Format::Text));
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.contains("planar cycle degree: (12,8)"));
    assert!(out.stdout.contains("tropical cycle degree: (12,8)"));
    assert!(out.stdout.contains("AGREE"));
}

#[test]
fn json_output_round_trips() {
    let dir = TempDir::new().unwrap();
    let file = write_configs(&dir, "neg.json", &[PointConfig::simplex_vertices(2, 2), PointConfig::simplex_vertices(2, -2)]);
    let job = degree(file, Method::Auto, Format::Json);
    let out = run(&job);
    assert_eq!(out.code, 0);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["method"], "auto");
    assert_eq!(v["seed"], 0);
    assert_eq!(v["latticeIndex"], 4);
    assert_eq!(v["cycle"], serde_json::json!([8, 8]));
    assert_eq!(v["reduced"], serde_json::json!([2, 2]));
    assert_eq!(v["defective"], false);
    assert_eq!(run(&job), out);
}

#[test]
fn tropical_for_three_variables() {
    let dir = TempDir::new().unwrap();
    let configs: Vec<_> = [1, 2, 3].iter().map(|&d| PointConfig::simplex_vertices(3, d)).collect();
    let file = write_configs(&dir, "pp.json", &configs);
    let out = run(&degree(file.clone(), Method::Auto, Format::Json));
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["cycle"], serde_json::json!([18, 12, 10]));
    let planar = run(&degree(file, Method::Planar, Format::Text));
    assert_eq!(planar.code, 2);
}

#[test]
fn input_errors_exit_with_two() {
    let dir = TempDir::new().unwrap();
    let dup = write(&dir, "dup.json", r#"{"n":2,"configs":[[[0,0],[1,0],[0,1]],[[0,0],[1,0],[1,0]]]}"#);
    let out = run(&degree(dup, Method::Auto, Format::Text));
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("duplicate point in block 2"));

    let bad = write(&dir, "bad.json", r#"{"n":2,"configs":[[[0,0]],[[0,0]],[[0,0]]]}"#);
    assert_eq!(run(&degree(bad, Method::Auto, Format::Text)).code, 2);
    let missing = dir.path().join("missing.json");
    assert_eq!(run(&degree(missing, Method::Auto, Format::Text)).code, 2);
    assert_eq!(main_with_args(["mdisc", "degree", "--method", "magic", "x.json"]), 2);
}

#[test]
fn size_gate_and_force_hint() {
    let dir = TempDir::new().unwrap();
    let file = write_configs(&dir, "tact.json", &[PointConfig::dense_triangle(2), PointConfig::dense_triangle(3)]);
    let out = run(&degree(file.clone(), Method::Tropical, Format::Text));
    assert_eq!(out.code, 4);
    assert!(out.stderr.contains("--force"));
    let out = run(&degree(file, Method::Auto, Format::Text));
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("(12,10)"));
}

#[test]
fn stratum_compare() {
    let dir = TempDir::new().unwrap();
    let sparse = |a, b| vec![PointConfig::simplex_vertices(2, a), PointConfig::simplex_vertices(2, b)];
    let a = write_configs(&dir, "a.json", &sparse(3, 2));
    let b = write_configs(&dir, "b.json", &sparse(5, 2));
    let c = write_configs(&dir, "c.json", &sparse(3, -2));
    let cmp = |a: &PathBuf, b: &PathBuf| {
        run(&JobSpec::Stratum {
            action: StratumAction::Compare { a: a.clone(), b: b.clone() },
        })
        .stdout
    };
    assert_eq!(cmp(&a, &b), "SAME-STRATUM\n");
    assert_eq!(cmp(&a, &c), "DIFFERENT-STRATUM\n");
}

#[test]
fn defect_verdicts() {
    let dir = TempDir::new().unwrap();
    let t = PointConfig::simplex_vertices(2, 2);
    let shifted = t.translate(&mdisc::LatticePoint::from_i64(&[1, 1]));
    let file = write_configs(&dir, "t.json", &[t, shifted]);
    let out = run(&JobSpec::Defect { seed: 0, trials: 5, file });
    assert_eq!(out.code, 0);
    assert!(out.stdout.starts_with("defective (planar, exact)"));
}

#[test]
fn fit_with_given_degrees() {
    let dir = TempDir::new().unwrap();
    let mut samples = Vec::new();
    for (d1, d2) in [(3, 2), (5, 2), (4, 1), (5, 3)] {
        let m = d1.min(d2);
        let mut v = to_json(&[PointConfig::simplex_vertices(2, d1), PointConfig::simplex_vertices(2, d2)]);
        v["degree"] = serde_json::json!([d2 * d2 + 2 * d1 * d2 - 3 * d2 * m, d1 * d1 + 2 * d1 * d2 - 3 * d1 * m]);
        samples.push(write(&dir, &format!("s{d1}{d2}.json"), &v.to_string()));
    }
    let holdout = write_configs(&dir, "h.json", &[PointConfig::simplex_vertices(2, 7), PointConfig::simplex_vertices(2, 4)]);
    let out = run(&JobSpec::Fit {
        block: 1,
        holdout: Some(holdout),
        seed: 0,
        samples: samples.clone(),
    });
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.starts_with("block 1 degree = "));
    assert!(out.stdout.contains("held-out degree 24 reproduced"));

    let mixed = write_configs(&dir, "m.json", &[PointConfig::simplex_vertices(2, 3), PointConfig::simplex_vertices(2, -2)]);
    samples.push(mixed);
    let out = run(&JobSpec::Fit {
        block: 1,
        holdout: None,
        seed: 0,
        samples,
    });
    assert_eq!(out.code, 2);
}

#[test]
fn corpus_listing_and_runs() {
    let list = run(&JobSpec::Examples { list: true, run: None });
    assert_eq!(list.code, 0);
    for name in ["hyperdet-2x2x2", "two-univariate-quadrics", "trinomial-2-3-4", "pure-power-1-2-3"] {
        assert!(list.stdout.contains(name));
    }
    let out = run(&JobSpec::Examples {
        list: false,
        run: Some("hyperdet-2x2x2".into()),
    });
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "PASS hyperdet-2x2x2: cycle (2,2) i(A) = 1, methods agree\n");
    let out = run(&JobSpec::Examples {
        list: false,
        run: Some("trinomial-2-2-2".into()),
    });
    assert_eq!(out.code, 1);
    assert!(out.stdout.starts_with("FAIL trinomial-2-2-2: cycle (12,12,12)"));
    let out = run(&JobSpec::Examples {
        list: false,
        run: Some("nope".into()),
    });
    assert_eq!(out.code, 2);
}

#[test]
fn parse_config_reads_files() {
    let dir = TempDir::new().unwrap();
    let file = write(
        &dir,
        "h.json",
        r#"{"n":2,"configs":[[[0,0],[1,0],[0,1],[1,1]],[[0,0],[1,0],[0,1],[1,1]]],"labels":["f","g"]}"#,
    );
    let configs = parse_config(&file).unwrap();
    assert_eq!(configs.len(), 2);
    assert_eq!(configs[0].label(), "f");
    assert!(configs.iter().all(|c| c.len() == 4));
}
