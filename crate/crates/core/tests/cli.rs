use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use zigzag::mesh::MeshFile;
use zigzag::oracle::audit_trace;
use zigzag::walk::{WalkResult, WalkTrace};

fn zigzag(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zigzag")).args(args).output().expect("spawn zigzag")
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn gen_output_validates_and_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for out in [&a, &b] {
        let o = zigzag(&["gen", "--kind", "delaunay", "--n", "50", "--seed", "9", "--out", s(out)]);
        assert!(o.status.success(), "{o:?}");
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let v = zigzag(&["validate", s(&a)]);
    assert_eq!(v.status.code(), Some(0));
    assert!(stdout(&v).starts_with("OK vertices=50 "));

    let g = dir.path().join("g.json");
    assert!(zigzag(&["gen", "--kind", "grid", "--n", "4", "--out", s(&g)]).status.success());
    assert_eq!(zigzag(&["validate", s(&g)]).status.code(), Some(0));
}

#[test]
fn usage_and_domain_errors() {
    assert_eq!(zigzag(&["gen", "--kind", "bogus"]).status.code(), Some(2));
    assert_eq!(zigzag(&["gen", "--kind", "fan", "--angle", "4"]).status.code(), Some(1));
    assert_eq!(zigzag(&["locate", "/nonexistent.json", "--point", "0,0"]).status.code(), Some(1));
    assert_eq!(zigzag(&["locate", s(&fixture("grid4.json"))]).status.code(), Some(2));
    assert_eq!(
        zigzag(&["locate", s(&fixture("grid4.json")), "--start", "9999", "--point", "1,1"]).status.code(),
        Some(1)
    );
}

#[test]
fn single_triangle_and_outside_point() {
    let dir = tempfile::tempdir().unwrap();
    let tri = dir.path().join("tri.json");
    std::fs::write(&tri, r#"{"vertices": [[0,0],[4,0],[0,4]], "triangles": [[0,1,2]]}"#).unwrap();
    let o = zigzag(&["locate", s(&tri), "--point", "1,1"]);
    assert_eq!(stdout(&o), "FOUND face=0 steps=0\n");
    let o = zigzag(&["locate", s(&fixture("grid4.json")), "--point", "-1.5,2.5", "--start", "20"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("BOUNDARY edge="), "{}", stdout(&o));
}

#[test]
fn off_input_is_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let off = dir.path().join("sq.off");
    std::fs::write(&off, "OFF\n4 2 0\n0 0 0\n1 0 0\n1 1 0\n0 1 0\n3 0 1 2\n3 0 2 3\n").unwrap();
    assert_eq!(zigzag(&["validate", s(&off)]).status.code(), Some(0));
    assert_eq!(stdout(&zigzag(&["locate", s(&off), "--point", "0.2,0.7"])), "FOUND face=1 steps=1\n");
}

#[test]
fn golden_grid_walk() {
    let dir = tempfile::tempdir().unwrap();
    let trace_path = dir.path().join("trace.json");
    let o = zigzag(&[
        "locate",
        s(&fixture("grid4.json")),
        "--start",
        "0",
        "--point",
        "3.3,2.6",
        "--policy",
        "random",
        "--seed",
        "42",
        "--check",
        "--trace",
        s(&trace_path),
    ]);
    assert_eq!(stdout(&o), std::fs::read_to_string(fixture("grid4_locate.txt")).unwrap());

    let golden = WalkTrace::from_json(&std::fs::read_to_string(fixture("grid4_trace.json")).unwrap()).unwrap();
    let fresh = WalkTrace::from_json(&std::fs::read_to_string(&trace_path).unwrap()).unwrap();
    assert_eq!(fresh.result, golden.result);
    assert_eq!(fresh.edges().collect::<Vec<_>>(), golden.edges().collect::<Vec<_>>());
    for (a, b) in fresh.steps.iter().zip(&golden.steps) {
        assert_eq!(a.choice, b.choice);
        assert!((a.d - b.d).abs() < 1e-12 && (a.alpha - b.alpha).abs() < 1e-12);
    }
    assert!(matches!(golden.result, WalkResult::Found { steps: 5, .. }));

    let mesh = MeshFile::from_json(&std::fs::read_to_string(fixture("grid4.json")).unwrap()).unwrap().build().unwrap();
    assert_eq!(audit_trace(&mesh, &golden), vec![]);
}

#[test]
fn svg_rendering() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("walk.svg");
    let args = |o: &Path| {
        vec![
            "svg".to_string(),
            s(&fixture("grid4.json")).to_string(),
            s(&fixture("grid4_trace.json")).to_string(),
            "--out".into(),
            s(o).to_string(),
        ]
    };
    let run = |o: &Path| Command::new(env!("CARGO_BIN_EXE_zigzag")).args(args(o)).output().unwrap();
    assert!(run(&out).status.success());
    let svg = std::fs::read_to_string(&out).unwrap();
    assert_eq!(svg, std::fs::read_to_string(fixture("grid4_walk.svg")).unwrap());
    // six visited faces, 56 undirected edges
    assert_eq!(svg.matches("<polygon").count(), 6);
    assert_eq!(svg.matches("<line").count(), 56);

    let mut trace = WalkTrace::from_json(&std::fs::read_to_string(fixture("grid4_trace.json")).unwrap()).unwrap();
    trace.steps[2].edge = 5000;
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, trace.to_json()).unwrap();
    let o = zigzag(&["svg", s(&fixture("grid4.json")), s(&bad)]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn bench_gate_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for out in [&a, &b] {
        let o = zigzag(&[
            "bench",
            "--kind",
            "grid",
            "--n",
            "10",
            "--queries",
            "100",
            "--seed",
            "3",
            "--baseline",
            "visibility",
            "--out",
            s(out),
        ]);
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    }
    let csv = std::fs::read_to_string(&a).unwrap();
    assert_eq!(csv, std::fs::read_to_string(&b).unwrap());
    let mut lines = csv.lines();
    assert_eq!(
        lines.next(),
        Some("policy,queries,mean_steps,median_steps,max_steps,mean_atomic_ops,mean_bound_utilization,max_bound_utilization,oracle_agreement")
    );
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.iter().map(|r| r[0]).collect::<Vec<_>>(), ["right", "left", "random", "visibility"]);
    for r in &rows {
        assert_eq!(r[8], "100");
    }
    for r in &rows[..3] {
        assert!(r[7].parse::<f64>().unwrap() <= 1.0);
    }
}
