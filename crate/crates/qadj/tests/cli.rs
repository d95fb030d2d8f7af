use std::path::Path;
use std::process::{Command, Output};

use qadj::graph_doc::GraphDoc;
use qadj::{run, InputSource, RunConfiguration, Task};
use serde_json::Value;

const QUINTIC_PAIR: &str = "(x^2+y^5)*(y^2+x^5)";

fn qadj(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qadj")).args(args).output().unwrap()
}

fn doc(args: &[&str]) -> Value {
    let out = qadj(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .display()
        .to_string()
}

fn config(task: Task, input: InputSource) -> RunConfiguration {
    RunConfiguration {
        task,
        input,
        qbound: 60,
        r_limit: 4,
        depth_limit: 64,
        format: qadj::Format::Doc,
        out: None,
    }
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|s| s.as_str().unwrap().to_string())
        .collect()
}

#[test]
fn faces_report_has_the_half_segment() {
    let d = doc(&["faces", "--poly", QUINTIC_PAIR, "--format", "doc"]);
    assert_eq!(d["schema"], "qadj.report");
    assert_eq!(d["tool"]["version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(d["input"]["poly"][0], QUINTIC_PAIR);
    assert_eq!(d["config"]["rlimit"], 4);
    let faces = d["result"]["faces"].as_array().unwrap();
    let on7: Vec<&Value> = faces
        .iter()
        .filter(|f| {
            f["supporting"]
                .as_array()
                .unwrap()
                .iter()
                .any(|s| s["equation"] == "10*x1 + 4*x2 = 7")
        })
        .collect();
    let segment: Vec<&&Value> = on7.iter().filter(|f| f["dimension"] == 1).collect();
    assert_eq!(segment.len(), 1);
    assert_eq!(
        segment[0]["vertices"],
        serde_json::json!([["3/10", "1"], ["1/2", "1/2"]])
    );
}

#[test]
fn charvar_report() {
    let d = doc(&[
        "charvar",
        "--poly",
        QUINTIC_PAIR,
        "--depth",
        "2",
        "--qbound",
        "42",
        "--format",
        "doc",
    ]);
    let mut eqs: Vec<String> = d["result"]["components"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["essential"] == true)
        .flat_map(|c| strings(&c["equations"]))
        .collect();
    eqs.sort();
    assert_eq!(eqs, ["t1^2*t2^5 = -1", "t1^5*t2^2 = -1"]);
    assert_eq!(d["result"]["depth"]["count"], 20);
    let first = &d["result"]["depth"]["characters"][0];
    assert!(first["values"][0].as_str().unwrap().starts_with("exp(2*pi*i * "));
}

#[test]
fn reports_are_byte_identical() {
    let args = ["faces", "--poly", QUINTIC_PAIR, "--format", "doc"];
    assert_eq!(qadj(&args).stdout, qadj(&args).stdout);
    let c = config(Task::Alexander, InputSource::Inline(vec!["x^3+y^4".into()]));
    assert_eq!(run(&c).unwrap(), run(&c).unwrap());
}

#[test]
fn graph_document_round_trip() {
    let d = doc(&["resolve", "--poly", QUINTIC_PAIR, "--format", "doc"]);
    let parsed: GraphDoc = serde_json::from_value(d["result"]["graph"].clone()).unwrap();
    let g = parsed.to_graph().unwrap();
    assert_eq!(GraphDoc::from_graph(&g, true), parsed);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("graph.json");
    std::fs::write(&path, serde_json::to_string(&parsed).unwrap()).unwrap();
    let from_file = run(&config(Task::Faces, InputSource::File(path))).unwrap();
    let from_germ = run(&config(Task::Faces, InputSource::Inline(vec![QUINTIC_PAIR.into()]))).unwrap();
    let result = |s: &str| serde_json::from_str::<Value>(s).unwrap()["result"].clone();
    assert_eq!(result(&from_file), result(&from_germ));
}

#[test]
fn hand_entered_graph() {
    let path = data("quintic_pair_graph.json");
    let d = doc(&["faces", "--input", &path, "--format", "doc"]);
    let germ = doc(&["faces", "--poly", QUINTIC_PAIR, "--format", "doc"]);
    assert_eq!(d["result"], germ["result"]);
    let lct = doc(&["lct", "--input", &path, "--format", "doc"]);
    assert_eq!(lct["result"]["ray"]["standard"], "1/2");

    // Without charts only the numerical data is available.
    let mut bare: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    for c in bare["curves"].as_array_mut().unwrap() {
        c.as_object_mut().unwrap().remove("chart");
    }
    let dir = tempfile::tempdir().unwrap();
    let bare_path = dir.path().join("bare.json");
    std::fs::write(&bare_path, bare.to_string()).unwrap();
    let p = bare_path.display().to_string();
    assert_eq!(doc(&["lct", "--input", &p, "--format", "doc"])["result"], lct["result"]);
    let out = qadj(&["faces", "--input", &p]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("charts-unavailable"));
}

#[test]
fn dot_labels() {
    let out = qadj(&["resolve", "--poly", QUINTIC_PAIR, "--format", "dot"]);
    let dot = String::from_utf8(out.stdout).unwrap();
    assert!(dot.starts_with("graph resolution {"));
    assert!(dot.contains("E7 [label=\"E_7 : a=(10,4), c=6\"];"));
    assert!(dot.contains("E4 -- f2"));
}

#[test]
fn plot_needs_two_branches() {
    let out = qadj(&["plot", "--poly", "x", "y", "x+y", "--format", "doc"]);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["code"], "diagram-requires-r2");
    assert_eq!(err["error"]["message"], "diagram requires r = 2");

    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("faces.svg");
    let out = qadj(&["plot", "--poly", QUINTIC_PAIR, "--out", svg.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&svg).unwrap();
    assert!(text.starts_with("<svg") && text.contains("<line") && text.contains("stroke-dasharray"));
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| qadj(args).status.code();
    assert_eq!(code(&["resolve", "--poly", "x^2+"]), Some(2));
    assert_eq!(code(&["resolve", "--poly", "x^2+y^2"]), Some(3));
    assert_eq!(
        code(&["resolve", "--poly", QUINTIC_PAIR, "--depth-limit", "2"]),
        Some(4)
    );
    assert_eq!(
        code(&["charvar", "--poly", "x*y*(x+y)", "--depth", "1", "--qbound", "100"]),
        Some(4)
    );
    assert_eq!(code(&["faces", "--poly", "x", "y", "x+y", "x-y", "x+2*y"]), Some(4));
    assert_eq!(code(&["faces"]), Some(2));
    assert_eq!(code(&["faces", "--poly", "x*y", "--qbound", "0"]), Some(2));
    assert_eq!(code(&["faces", "--poly", "x*y", "--format", "svg"]), Some(2));
    assert_eq!(code(&["alexander", "--poly", "x*y"]), Some(2));
    assert_eq!(code(&["resolve", "--input", "/nonexistent/germ.json"]), Some(2));
}

#[test]
fn germ_document_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("germ.json");
    std::fs::write(&path, r#"{ "branches": ["x^2+y^5", "y^2+x^5"] }"#).unwrap();
    let from_file = run(&config(Task::Resolve, InputSource::File(path))).unwrap();
    let d: Value = serde_json::from_str(&from_file).unwrap();
    assert_eq!(d["input"]["document"]["branches"][1], "y^2+x^5");
    assert_eq!(d["result"]["graph"]["curves"].as_array().unwrap().len(), 7);
}

#[test]
fn alexander_and_multiplier_reports() {
    let d = doc(&["alexander", "--poly", "x^2+y^3", "--format", "doc"]);
    assert_eq!(d["result"]["deltas"][0]["polynomial"], "t^2 - t + 1");
    assert_eq!(d["result"]["zeta_check"]["agrees"], true);
    assert_eq!(d["result"]["constants"][0]["kappa"], "1/6");
    let m = doc(&["multiplier", "--poly", "x^2+y^3", "--gamma", "5/6", "--format", "doc"]);
    assert_eq!(strings(&m["result"]["generators"]), ["x", "y"]);
    let s = doc(&["semicont", "--poly", "x*y", "--special", "y*(y-x^2)", "--format", "doc"]);
    assert_eq!(s["result"]["passes"], true);
    let s = doc(&["semicont", "--poly", "y*(y-x^2)", "--special", "x*y", "--format", "doc"]);
    assert_eq!(s["result"]["passes"], false);
}
