use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use farey_shear::io::read_shear;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_farey-shear")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn tessellate_edge_counts() {
    for (depth, edges) in [("0", 3), ("1", 9), ("2", 21)] {
        let text = stdout(&["tessellate", "--depth", depth]);
        assert_eq!(text.lines().filter(|l| l.starts_with("edge,")).count(), edges);
    }
}

#[test]
fn shear_from_builtin_maps() {
    let zeros = |family: &str, params: &str| {
        let s = read_shear(&stdout(&["shear-from-map", "--family", family, "--params", params, "--depth", "4"])).unwrap();
        let ok = s.iter().all(|(_, v)| v.abs() < 1e-12);
        ok
    };
    assert!(zeros("moebius", "2,1,1,3"));
    assert!(zeros("power", "1"));
    let s = read_shear(&stdout(&["shear-from-map", "--family", "piecewise_linear", "--params", "2", "--depth", "4"]))
        .unwrap();
    for (e, v) in s.iter() {
        if e.key() == "0/1|1/0" {
            assert!((v + 2f64.ln()).abs() < 1e-12);
        } else {
            assert!(v.abs() < 1e-12, "{e}: {v}");
        }
    }
    let csv = stdout(&["shear-from-map", "--family", "power", "--params", "1", "--depth", "1", "--format", "csv"]);
    assert!(csv.starts_with("key,generation,s\n"));
}

#[test]
fn shear_file_round_trips_through_the_cli() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let a = a.to_str().unwrap();
    stdout(&["shear-from-map", "--family", "power", "--params", "1.7", "--depth", "5", "--out", a]);
    let text = fs::read_to_string(a).unwrap();
    let s = read_shear(&text).unwrap();
    assert_eq!(farey_shear::io::write_shear(&s).unwrap(), text);
}

#[test]
fn input_errors_exit_1_with_positions() {
    let dir = tempfile::tempdir().unwrap();
    let dup = write(
        dir.path(),
        "dup.json",
        "{\"depth\": 2,\n\"edges\": [\n{\"key\": \"0/1|1/0\", \"s\": 1},\n{\"key\": \"0/1|1/0\", \"s\": 2}]}",
    );
    let out = run(&["qs-check", &dup]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("duplicate") && stderr(&out).contains("line 4"), "{}", stderr(&out));

    let bad = write(dir.path(), "bad.json", "{\"depth\": 2, \"edges\": [{\"key\": \"1/2|3/4\", \"s\": 1}]}");
    let out = run(&["char-map", &bad]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("1/2") && stderr(&out).contains("column"), "{}", stderr(&out));

    let trunc = write(dir.path(), "trunc.json", "{\"depth\": 2, \"edges\": [");
    assert_eq!(run(&["sym-check", &trunc]).status.code(), Some(1));

    let out = run(&["shear-from-map", "--family", "power", "--params", "-1"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(1));
}

#[test]
fn degenerate_development_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let l = write(dir.path(), "l.json", "{\"depth\": 3, \"edges\": [{\"key\": \"1/2|1/1\", \"lambda\": 1e-30}]}");
    let out = run(&["lambda", "develop", &l]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("triangle address"), "{}", stderr(&out));
}

#[test]
fn window_beyond_depth_is_clamped_with_a_warning() {
    let dir = tempfile::tempdir().unwrap();
    let pl = dir.path().join("pl.json");
    let pl = pl.to_str().unwrap();
    stdout(&["shear-from-map", "--family", "piecewise_linear", "--params", "2", "--depth", "4", "--out", pl]);
    let out = run(&["qs-check", pl, "--window-m=-20:20", "--window-k", "10", "--tips", "1/0"]);
    assert!(out.status.success());
    let err = stderr(&out);
    assert!(err.contains("warning") && err.contains("clamped"), "{err}");
    assert!(err.contains("M_hat = 2.0000000000000000e0") || err.contains("M_hat = 1.99999"), "{err}");
    let table = String::from_utf8(out.stdout).unwrap();
    assert!(table.starts_with("tip,m,k,ratio\n"));
}

#[test]
fn chain_series_verdicts() {
    let dir = tempfile::tempdir().unwrap();
    let zero = write(dir.path(), "zero.json", "{\"depth\": 6, \"edges\": []}");
    let out = run(&["homeo-check", &zero, "--fan", "1/0", "--start", "0", "--step", "1", "--terms", "6"]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stderr(&out).contains("diverging-evidence"));
    let rows = String::from_utf8(out.stdout).unwrap();
    assert_eq!(rows.lines().count(), 7);
    assert!(rows.lines().nth(6).unwrap().ends_with(",6.0000000000000000e0"));

    let json = stdout(&["homeo-check", &zero, "--chain", "0/1|1/0,0/1|1/1,1/2|1/1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["terms"].as_array().unwrap().len(), 2);
    assert_eq!(v["verdict"], "diverging-evidence");
}

#[test]
fn lambda_commands() {
    let dir = tempfile::tempdir().unwrap();
    let ford = write(dir.path(), "ford.json", "{\"default\": 1.0, \"depth\": 4, \"edges\": []}");
    let s = read_shear(&stdout(&["lambda", "to-shear", &ford])).unwrap();
    assert!(s.iter().all(|(_, v)| v.abs() < 1e-12));
    let out = run(&["lambda", "check-e", &ford, "--pinched", "2"]);
    assert!(out.status.success());
    assert!(stderr(&out).contains("K_hat = 1.0000000000000000e0"), "{}", stderr(&out));
    assert!(stderr(&out).contains("pinched with K = 2: true"));
    let table = stdout(&["lambda", "develop", &ford]);
    assert!(table.starts_with("vertex,position,size\n"));
    assert!(table.contains("\n1/2,5.0000000000000000e-1,2.5000000000000000e-1\n"), "{table}");
    let series = stdout(&["lambda", "series-d", &ford, "--chain", "0/1|1/0,0/1|1/1,1/2|1/1,1/2|2/3"]);
    assert_eq!(series.lines().count(), 4);
}

#[test]
fn render_and_distance() {
    let dir = tempfile::tempdir().unwrap();
    let zero = write(dir.path(), "zero.json", "{\"depth\": 3, \"edges\": []}");
    let svg = stdout(&["render", &zero, "--highlight", "0/1|1/0"]);
    assert!(svg.starts_with("<?xml") && svg.trim_end().ends_with("</svg>"));
    assert_eq!(svg.matches("<path").count(), 3 * 15);
    assert!(svg.contains("crimson"));
    let d = stdout(&["distance", &zero, &zero]);
    assert_eq!(d, "proximity,depth\n1.0000000000000000e0,3\n");
}
