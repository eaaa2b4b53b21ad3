use std::io::Write;
use std::process::{Command, Output, Stdio};

use digraph_spectra::families::{build, FamilySpec};
use digraph_spectra::spectral;

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_dspectra"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn field<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines()
        .find_map(|l| l.strip_prefix(&format!("{key}: ")))
        .unwrap_or_else(|| panic!("no `{key}` in\n{text}"))
}

#[test]
fn compute_cycle() {
    let o = run(&["compute", "--family", "cycle", "--n", "8"], "");
    assert!(o.status.success());
    let s = stdout(&o);
    assert_eq!(field(&s, "q"), "2");
    assert_eq!(field(&s, "rho"), "1");
    assert_eq!(field(&s, "girth"), "8");
    assert_eq!(field(&s, "vertex connectivity"), "1");
}

#[test]
fn compute_join_prints_twelve_significant_digits() {
    let o = run(&["compute", "--family", "K3", "--n", "5", "--k", "1", "--m", "1"], "");
    assert!(o.status.success());
    // 5 + √3
    assert_eq!(field(&stdout(&o), "q"), "6.73205080757");
}

#[test]
fn exit_codes() {
    let o = run(&["compute", "-"], "3 2\n0 1\nnot an arc\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
    let multi = "2 3\n0 1\n0 1\n1 0\n";
    assert_eq!(run(&["compute", "-"], multi).status.code(), Some(3));
    let o = run(&["compute", "--allow-multi", "-"], multi);
    assert!(o.status.success());
    // Q = [[2, 2], [1, 1]] has spectral radius 3.
    assert_eq!(field(&stdout(&o), "q"), "3");
    assert_eq!(run(&["verify", "--theorem", "T9.9"], "").status.code(), Some(2));
    assert_eq!(run(&["family", "K3", "--n", "5", "--k", "4", "--m", "1"], "").status.code(), Some(2));
    assert_eq!(run(&["compute", "--family", "nope", "--n", "3"], "").status.code(), Some(2));
}

#[test]
fn family_output_round_trips_through_compute() {
    for (args, spec) in [
        (vec!["--n", "7", "--g", "3"], ("C", FamilySpec::CycleWithPath { n: 7, g: 3 })),
        (vec!["--n", "6", "--k", "2", "--m", "1"], ("K3", FamilySpec::CutJoin { n: 6, k: 2, m: 1 })),
        (vec!["--a", "1", "--b", "2", "--c", "0"], ("theta", FamilySpec::Theta { a: 1, b: 2, c: 0 })),
    ] {
        let mut fam = vec!["family", spec.0];
        fam.extend(&args);
        let edges = stdout(&run(&fam, ""));
        let o = run(&["compute", "--format", "json", "-"], &edges);
        assert!(o.status.success());
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        let expected = spectral::q(&build(&spec.1).unwrap()).unwrap().radius;
        assert_eq!(v["q"].as_f64().unwrap().to_bits(), expected.to_bits(), "{}", spec.1);
    }
}

#[test]
fn table_rows() {
    let o = run(&["bounds", "--table1", "--n", "6", "--d", "4", "--g", "3", "--format", "csv"], "");
    assert!(o.status.success());
    let s = stdout(&o);
    // Names such as `B(6,4)` are quoted; the numeric fields follow the last quote.
    let rows: Vec<Vec<&str>> = s
        .lines()
        .map(|l| match l.rsplit_once("\",") {
            Some((name, rest)) => std::iter::once(&name[1..]).chain(rest.split(',')).collect(),
            None => l.split(',').collect(),
        })
        .collect();
    assert_eq!(rows[3][0], "B(6,4)");
    assert_eq!(rows.len(), 5);
    let header = &rows[0];
    let col = |name: &str| header.iter().position(|h| *h == name).unwrap();
    // (12 + √56) / 2
    assert_eq!(rows[1][col("min_sequence_bound")], "9.74165738677");
    for c in ["avg_two_out_upper", "arc_avg_upper", "min_sequence_bound"] {
        assert_eq!(rows[4][col(c)], "3");
    }
    assert_eq!(rows[2][col("tight")], "threshold-2");

    let cyc = run(&["bounds", "--family", "cycle", "--n", "5", "--format", "csv"], "");
    let line = stdout(&cyc).lines().nth(1).unwrap().to_string();
    for v in line.split(',').skip(2).take(8) {
        assert_eq!(v, "2");
    }
}

#[test]
fn transform_pipeline() {
    let c5 = stdout(&run(&["family", "cycle", "--n", "5"], ""));
    let c4 = stdout(&run(&["transform", "contract", "-", "--u", "0", "--v", "1"], &c5));
    assert_eq!(c4.lines().next(), Some("4 4"));
    let back = stdout(&run(&["transform", "insert", "-", "--u", "0", "--v", "1"], &c4));
    assert_eq!(back.lines().next(), Some("5 5"));
    let redirected = run(&["transform", "redirect", "-", "--u", "0", "--v", "1", "--w", "3"], &c5);
    assert!(redirected.status.success());
    assert!(stdout(&redirected).contains("0 3"));
    assert_eq!(run(&["transform", "redirect", "-", "--u", "0", "--v", "1"], &c5).status.code(), Some(2));
}

#[test]
fn enumerate_is_deterministic() {
    let args = ["enumerate", "--n", "4", "--metric", "q", "--min", "--top", "4"];
    let a = run(&args, "");
    assert!(a.status.success());
    let mut with_workers = args.to_vec();
    with_workers.extend(["--workers", "3"]);
    assert_eq!(a.stdout, run(&with_workers, "").stdout);
    let s = stdout(&a);
    let values: Vec<&str> = s.lines().skip(1).map(|l| l.split_whitespace().nth(1).unwrap()).collect();
    assert_eq!(values, ["2", "2.61803398875", "2.69562076956", "2.75487766625"]);

    let max = stdout(&run(&["enumerate", "--n", "4", "--metric", "rho", "--max", "--top", "2", "--format", "csv"], ""));
    let second: Vec<&str> = max.lines().nth(2).unwrap().split(',').collect();
    // 1 + √3
    assert_eq!(second[..2], ["2", "2.73205080757"]);
}

#[test]
fn verify_verdicts_and_exit_codes() {
    let o = run(&["verify", "--theorem", "T6.3", "--n", "4..10"], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(field(&stdout(&o), "verdict"), "verified");
    assert!(!stdout(&o).contains("elapsed"));

    let o = run(&["verify", "--theorem", "C6.7", "--n", "4..5"], "");
    assert_eq!(o.status.code(), Some(0));
    assert!(field(&stdout(&o), "evidence").starts_with("violated"));

    let o = run(&["verify", "--theorem", "T3.6", "--n", "3..4"], "");
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("counterexample:"));

    let o = run(&["verify", "--theorem", "T5.3", "--format", "json"], "");
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verdict"], "verified");
    assert!(v.get("elapsed_seconds").is_none());
    let o = run(&["verify", "--theorem", "T5.3", "--format", "json", "--timing"], "");
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["elapsed_seconds"].is_number());

    assert_eq!(run(&["verify", "--theorem", "T6.3", "--n", "4..x"], "").status.code(), Some(2));
}
