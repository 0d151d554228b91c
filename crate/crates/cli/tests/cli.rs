use std::io::Write;
use std::process::{Command, Output, Stdio};

use factorlab::extremal::CriticalSharpness;
use factorlab::io::{parse_graph_file, write_graph_file};
use factorlab::report::{CommandReport, WitnessReport, SCHEMA};
use factorlab::{recompute_slack, Graph, VertexFuncs};

const C4: &str = "p fgf 4 4\ne 1 2\ne 2 3\ne 3 4\ne 1 4\n";

fn factorlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_factorlab")).args(args).output().unwrap()
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_factorlab"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> CommandReport {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn sharp_file(dir: &tempfile::TempDir) -> String {
    let c = CriticalSharpness::build(2, 1, 1, 1, 2).unwrap();
    let path = dir.path().join("sharp.fgf");
    std::fs::write(&path, write_graph_file(&c.graph, None)).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn factor_on_c4() {
    let out = with_stdin(&["factor", "--g", "1", "--f", "1", "-"], C4);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("holds\n"));
    assert_eq!(text.lines().filter(|l| l.starts_with("h(")).count(), 4);

    let report = json(&with_stdin(&["factor", "--g", "1", "--f", "1", "--json", "-"], C4));
    let assignment = report.assignment.unwrap();
    let g = parse_graph_file(C4).unwrap().0;
    let mut doubled = [0u32; 4];
    for e in &assignment {
        let twice = match e.value.as_str() {
            "0" => 0,
            "1/2" => 1,
            "1" => 2,
            other => panic!("value {other}"),
        };
        doubled[e.edge[0] - 1] += twice;
        doubled[e.edge[1] - 1] += twice;
    }
    assert_eq!(assignment.len(), g.size());
    assert_eq!(doubled, [2; 4]);
}

#[test]
fn infeasible_factor_prints_witness() {
    let star = "p fgf 4 3\ne 1 2\ne 1 3\ne 1 4\n";
    let out = with_stdin(&["factor", "--a", "1", "--b", "1", "--json", "-"], star);
    assert_eq!(out.status.code(), Some(1));
    let w = json(&out).witness.unwrap();
    assert_eq!((w.s.clone(), w.t.clone(), w.slack), (vec![1], vec![2, 3, 4], -2));
}

#[test]
fn critical_deleted_sharpness_example() {
    let dir = tempfile::tempdir().unwrap();
    let file = sharp_file(&dir);
    let args = ["critical-deleted", "--a", "2", "--b", "3", "--delta", "1", "--np", "1", "--m", "1"];
    for method in [None, Some("brute"), Some("criterion"), Some("both")] {
        let mut full: Vec<&str> = args.to_vec();
        if let Some(m) = method {
            full.extend(["--method", m]);
        }
        full.extend(["--json", &file]);
        let out = factorlab(&full);
        assert_eq!(out.status.code(), Some(1), "{method:?}");
        let report = json(&out);
        let w = report.witness.unwrap();
        assert_eq!(w.slack, -2);
        let g = parse_graph_file(&std::fs::read_to_string(&file).unwrap()).unwrap().0;
        let vf = VertexFuncs::constant(12, 2, 3).unwrap();
        assert_eq!(recompute_slack(&g, &vf, &w.to_witness()).unwrap(), -2);
    }
}

#[test]
fn extremal_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.fgf");
    let out = factorlab(&[
        "extremal",
        "critical",
        "--a",
        "2",
        "--delta",
        "1",
        "--np",
        "1",
        "--m",
        "1",
        "--t",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let (g, funcs) = parse_graph_file(&text).unwrap();
    assert_eq!(g.order(), 12);
    assert!(funcs.is_none());
    assert_eq!(g, CriticalSharpness::build(2, 1, 1, 1, 2).unwrap().graph);
    assert_eq!(write_graph_file(&g, None), text);

    let out = factorlab(&["extremal", "critical", "--a", "2", "--delta", "1", "--np", "1", "--m", "1", "--t", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("n = 7"));
}

#[test]
fn extremal_with_funcs_conflicts_with_flags() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("id.fgf");
    let p = path.to_str().unwrap();
    let out = factorlab(&["extremal", "id", "--a", "2", "--delta", "1", "--with-funcs", "--out", p]);
    assert_eq!(out.status.code(), Some(0));
    let out = factorlab(&["id-deleted", p]);
    assert_eq!(out.status.code(), Some(1));
    let out = factorlab(&["id-deleted", "--a", "2", "--b", "3", p]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("both"));
}

#[test]
fn usage_and_input_errors_exit_2() {
    assert_eq!(with_stdin(&["factor", "--a", "1", "--b", "1", "-"], "p fgf 2 1\ne 1 1\n").status.code(), Some(2));
    assert_eq!(with_stdin(&["factor", "-"], C4).status.code(), Some(2));
    assert_eq!(factorlab(&["factor", "--a", "1", "--b", "1", "/nonexistent/file"]).status.code(), Some(2));
    assert_eq!(factorlab(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(factorlab(&["theorem", "--which", "T9", "-"]).status.code(), Some(2));
    let out = with_stdin(&["factor", "--a", "1", "--b", "1", "--threads", "0", "-"], C4);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn size_cap_comes_from_the_environment() {
    let k6 = write_graph_file(&Graph::complete(6).unwrap(), None);
    let run = |cap: &str| {
        let mut child = Command::new(env!("CARGO_BIN_EXE_factorlab"))
            .args(["criterion", "--a", "2", "--b", "3", "-"])
            .env("FACTORLAB_SIZE_CAP", cap)
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .stderr(Stdio::piped())
            .spawn()
            .unwrap();
        child.stdin.take().unwrap().write_all(k6.as_bytes()).unwrap();
        child.wait_with_output().unwrap().status.code()
    };
    assert_eq!(run("5"), Some(2));
    assert_eq!(run("6"), Some(0));
    assert_eq!(run("many"), Some(2));
}

#[test]
fn theorem_reports_clauses() {
    let dir = tempfile::tempdir().unwrap();
    let file = sharp_file(&dir);
    let args = ["theorem", "--which", "T1", "--a", "2", "--b", "3", "--delta", "1", "--np", "1", "--m", "1"];
    let out = factorlab(&[&args[..], &["--json", &file]].concat());
    assert_eq!(out.status.code(), Some(1));
    let report = json(&out);
    let clauses = report.details["clauses"].as_array().unwrap();
    let degree = clauses.iter().find(|c| c["name"] == "min-degree").unwrap();
    assert_eq!(degree["detail"], "5 >= 27/5");
    assert_eq!(degree["holds"], false);
    assert!(report.details["conclusion_checked"].is_null());

    let k12 = dir.path().join("k12.fgf");
    std::fs::write(&k12, write_graph_file(&Graph::complete(12).unwrap(), None)).unwrap();
    let out = factorlab(&[&args[..], &["--verify", "--json", k12.to_str().unwrap()]].concat());
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report.details["consistent"], true);
}

/// Structural check of reports against the published schema: required keys,
/// no extra keys, enums and fraction strings.
#[test]
fn reports_follow_the_schema() {
    let schema: serde_json::Value = serde_json::from_str(SCHEMA).unwrap();
    let required: Vec<&str> = schema["required"].as_array().unwrap().iter().map(|v| v.as_str().unwrap()).collect();
    let commands: Vec<&str> =
        schema["properties"]["command"]["enum"].as_array().unwrap().iter().map(|v| v.as_str().unwrap()).collect();
    let dir = tempfile::tempdir().unwrap();
    let file = sharp_file(&dir);
    let runs = [
        with_stdin(&["factor", "--a", "1", "--b", "1", "--json", "-"], C4),
        with_stdin(&["deleted", "--a", "1", "--b", "2", "--m", "1", "--json", "-"], C4),
        factorlab(&["criterion", "--a", "2", "--b", "3", "--np", "1", "--m", "1", "--json", &file]),
        factorlab(&["extremal", "id", "--a", "2", "--delta", "0", "--json"]),
        factorlab(&["experiment", "--trials", "3", "--theorem", "T1", "--json"]),
    ];
    for out in &runs {
        let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        let obj = value.as_object().unwrap();
        let mut keys: Vec<&str> = obj.keys().map(String::as_str).collect();
        keys.sort_unstable();
        let mut want = required.clone();
        want.sort_unstable();
        assert_eq!(keys, want);
        assert!(commands.contains(&obj["command"].as_str().unwrap()));
        assert!(["holds", "fails"].contains(&obj["verdict"].as_str().unwrap()));
        if let Some(entries) = obj["assignment"].as_array() {
            assert!(entries.iter().all(|e| ["0", "1/2", "1"].contains(&e["value"].as_str().unwrap())));
        }
        if !obj["witness"].is_null() {
            let w: WitnessReport = serde_json::from_value(obj["witness"].clone()).unwrap();
            assert!(w.s.iter().chain(&w.t).all(|&x| x >= 1));
        }
        assert!(obj["timing"]["elapsed_ms"].as_f64().unwrap() >= 0.0);
    }
}
