use std::fs;
use std::process::{Command, Output};

use revlib::baseline::R3_LISTINGS;
use revlib::netlist;
use revlib::Permutation;

fn revlib(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_revlib"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = revlib(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
    stdout(&o)
}

fn code(args: &[&str]) -> i32 {
    revlib(args).status.code().unwrap()
}

#[test]
fn gates_listing() {
    let out = ok(&["gates", "--kind", "T3", "--n", "3"]);
    let ends: Vec<&str> = out.lines().map(|l| l.rsplit(' ').next().unwrap()).collect();
    assert_eq!(ends, ["(7,8)", "(6,8)", "(4,8)"]);

    let out = ok(&["gates", "--kind", "R3"]);
    assert_eq!(out.lines().count(), 6);
    for l in R3_LISTINGS {
        assert!(out.lines().any(|line| line.starts_with(l.gate) && line.ends_with(l.cycles)), "{}", l.gate);
    }

    assert_eq!(ok(&["gates", "--kind", "N", "--n", "1"]).trim(), "N 1  (1,2)");
    let json: serde_json::Value =
        serde_json::from_str(&ok(&["gates", "--kind", "C", "--format", "json"])).unwrap();
    assert_eq!(json[0]["gate"], "C 1 2");
    assert_eq!(json[0]["cycles"], "(5,7)(6,8)");
}

#[test]
fn check_universal() {
    let out = ok(&["check-universal", "--lib", "R3"]);
    assert!(out.contains(": universal") && out.contains("40320"), "{out}");
    let six_c = "C 1 2; C 1 3; C 2 1; C 2 3; C 3 1; C 3 2";
    let out = ok(&["check-universal", "--gates", six_c, "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["universal"], false);
    assert_eq!(v["closure_size"], 168);
    assert_eq!(code(&["check-universal", "--gates", ""]), 1);
    assert_eq!(code(&["check-universal", "--gates", "C 1 1"]), 1);
    assert_eq!(code(&["check-universal"]), 1);
}

#[test]
fn sublibs() {
    let out = ok(&["sublibs", "--lib", "NCT", "--format", "csv"]);
    assert!(out.lines().nth(1).unwrap().starts_with("NCT,12,4096,1960,47.852,4,495,21,4.242"));
    let out = ok(&["sublibs", "--lib", "R3", "--list-minimal"]);
    let pairs: Vec<&str> = out.lines().filter(|l| l.starts_with('{')).collect();
    assert_eq!(pairs.len(), 12);
    assert!(pairs.contains(&"{R3 1 3 2, R3 2 1 3}"));
    assert!(pairs.contains(&"{R3 1 3 2, R3 3 1 2}"));
    assert_eq!(code(&["sublibs", "--lib", "XYZ"]), 1);
}

#[test]
fn synth_outputs_reparse_to_target() {
    assert_eq!(ok(&["synth", "--target", "(7,8)", "--lib", "NCT"]), ".n 3\nT3 1 2 3\n");
    assert_eq!(ok(&["synth", "--target", "()", "--lib", "NCT"]), ".n 3\n");
    for (target, lib, metric) in [
        ("(1,2)", "NCT", "length"),
        ("(1,2)", "NCT", "cost"),
        ("(1,8,3)(2,5)", "NR3", "cost"),
        ("(1,7,6,5,4,2,8,3)", "R3", "length"),
        ("(3,4)", "NT", "length"),
    ] {
        let text = ok(&["synth", "--target", target, "--lib", lib, "--metric", metric]);
        let c = netlist::parse_circuit(&text).unwrap();
        assert_eq!(c.permutation().unwrap(), Permutation::from_cycles(target, 3).unwrap(), "{target} {lib}");
    }
    let six_c = "C 1 2; C 1 3; C 2 1; C 2 3; C 3 1; C 3 2";
    let o = revlib(&["synth", "--target", "(7,8)", "--gates", six_c]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not reachable"));
    assert_eq!(code(&["synth", "--target", "(7,9)", "--lib", "NCT"]), 1);
}

#[test]
fn simulate() {
    let dir = tempfile::tempdir().unwrap();
    let t = dir.path().join("t.txt");
    fs::write(&t, ".n 3\nT3 1 2 3\n").unwrap();
    let t = t.to_str().unwrap();
    assert_eq!(ok(&["simulate", t, "--bits", "110"]).trim(), "111");
    assert_eq!(ok(&["simulate", t, "--bits", "000"]).trim(), "000");
    assert_eq!(code(&["simulate", t, "--bits", "11"]), 1);
    assert_eq!(code(&["simulate", t, "--bits", "1x0"]), 1);

    let v = dir.path().join("v.txt");
    fs::write(&v, ".n 2\nV 1 2\nV 1 2\n").unwrap();
    let v = v.to_str().unwrap();
    let o = revlib(&["simulate", v, "--bits", "10"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("non-classical gate"));
    assert!(stderr(&o).contains("use unitary mode"));
    assert_eq!(ok(&["simulate", v, "--bits", "10", "--unitary"]), "11 1\n");
    assert_eq!(code(&["simulate", "/no/such/file", "--bits", "1"]), 1);
}

#[test]
fn optimize() {
    let dir = tempfile::tempdir().unwrap();
    let r = dir.path().join("r.txt");
    fs::write(&r, ".n 3\nR3 1 2 3\n").unwrap();
    let rep = dir.path().join("rep.json");
    let out = ok(&["optimize", r.to_str().unwrap(), "--report", rep.to_str().unwrap()]);
    let ec = netlist::parse_elementary(&out).unwrap();
    assert_eq!((ec.len(), ec.cost()), (5, 4));
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&rep).unwrap()).unwrap();
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["before", "after", "passes"]);
    assert_eq!((v["before"].as_u64(), v["after"].as_u64()), (Some(4), Some(4)));

    let e = dir.path().join("e.txt");
    fs::write(&e, ".n 3\n").unwrap();
    let o = revlib(&["optimize", e.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), ".n 3\n");
    assert!(stderr(&o).contains("\"after\": 0"));

    let f = dir.path().join("f.txt");
    fs::write(&f, ".n 3\nF 1 2 3\n").unwrap();
    assert_eq!(code(&["optimize", f.to_str().unwrap()]), 2);

    let bad = dir.path().join("bad.txt");
    fs::write(&bad, ".n 3\nQ 1\n").unwrap();
    let o = revlib(&["optimize", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("line 2"));
}

#[test]
fn tables_csv_and_json_agree() {
    let csv = ok(&["tables", "--which", "3", "--format", "csv"]);
    let json: serde_json::Value =
        serde_json::from_str(&ok(&["tables", "--which", "3", "--format", "json"])).unwrap();
    let mut lines = csv.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(header[0], "length");
    let rows = json["rows"].as_array().unwrap();
    for (line, row) in lines.zip(rows) {
        for (key, cell) in header.iter().zip(line.split(',')) {
            let j = &row[*key];
            let j = j.as_str().map(str::to_string).unwrap_or_else(|| match j.as_f64() {
                Some(f) if j.is_f64() => format!("{f:.3}"),
                _ => j.to_string(),
            });
            assert_eq!(j, cell, "{key}");
        }
    }
    assert!(csv.contains("\n6,2262,21360,17049,17970,6100,17261,4373,2106,13819,14611,17556\n"));
}

#[test]
fn table4_diff_flags_misprint() {
    let out = ok(&["tables", "--which", "4", "--lib", "R3", "--format", "csv", "--emit-diff"]);
    assert!(out.contains("4,24,R3 bfr,4059,14611,\"misprint"), "{out}");
    assert!(out.contains("4,Total,R3 bfr,29768,40320,"));
}

#[test]
fn tables_to_directory_and_errata() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    ok(&["tables", "--which", "2,errata", "--format", "csv", "--emit-diff", "--out", d]);
    let t2 = fs::read_to_string(dir.path().join("table2.csv")).unwrap();
    assert!(t2.starts_with("library,size,subsets,universal,utilization\nNT,5,6,3,50.000\n"));
    let diff = fs::read_to_string(dir.path().join("table2_diff.csv")).unwrap();
    assert!(diff.contains("2,R3,universal,13,12,"));
    let errata = fs::read_to_string(dir.path().join("errata.csv")).unwrap();
    assert!(errata.contains("1,R4 1 2 3 4,position,11,2,12,"));
    assert_eq!(code(&["tables", "--which", "9"]), 1);
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(code(&["bogus"]), 1);
    assert_eq!(code(&["gates"]), 1);
    assert_eq!(code(&["gates", "--kind", "X"]), 1);
    assert_eq!(code(&["--jobs", "0", "gates", "--kind", "N"]), 1);
    assert_eq!(code(&["--help"]), 0);
}
