use std::process::{Command, Output};

use young_lattice::series::{qk_direct, MultiSeries};
use young_lattice::YPoly;

fn yl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_yl"))
        .args(args)
        .output()
        .expect("yl runs")
}

fn stdout(args: &[&str]) -> String {
    let out = yl(args);
    assert!(
        out.status.success(),
        "yl {args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn rankpoly_examples() {
    assert_eq!(
        stdout(&["rankpoly", "--lambda", "2,1"]),
        "1 + y + 2*y^2 + y^3\n"
    );
    assert_eq!(
        stdout(&["rankpoly", "--lambda", "2,2", "--mu", "2,2"]),
        "y^4\n"
    );
    let p: YPoly = serde_json::from_str(&stdout(&[
        "rankpoly", "--lambda", "3,1", "--format", "json",
    ]))
    .unwrap();
    assert_eq!(p, YPoly::from_i64s(&[1, 1, 2, 2, 1]));
    assert_eq!(stdout(&["poincare", "--lambda", "1"]), "1 + y^2\n");
    assert_eq!(
        stdout(&["gaussian", "--n", "2", "--k", "2"]),
        "1 + y + 2*y^2 + y^3 + y^4\n"
    );
}

#[test]
fn gk_table_forms() {
    let text = stdout(&["gk", "--max-k", "7"]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 7);
    assert!(lines[0].starts_with("1, 1,"));
    assert!(lines[1].starts_with("2, 1/8,"));
    assert!(lines[6].contains("/5538476941949952000000,"));

    let csv = stdout(&["gk", "--max-k", "1", "--format", "csv"]);
    assert_eq!(csv.lines().collect::<Vec<_>>()[0], "k,G,decimal");
    assert_eq!(csv.lines().count(), 2);

    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["gk", "--max-k", "3", "--format", "json"])).unwrap();
    assert_eq!(json[2]["G"], "49/6480");
}

#[test]
fn series_json_round_trips() {
    let text = stdout(&["series", "--k", "2", "--trunc", "6", "--format", "json"]);
    let back = MultiSeries::from_json(&text, 2, 6).unwrap();
    assert_eq!(back, qk_direct(2, 6));
    let xm: Vec<String> = serde_json::from_str(&stdout(&[
        "series", "--k", "1", "--m", "1", "--trunc", "6", "--format", "json",
    ]))
    .unwrap();
    assert_eq!(xm, ["0", "0", "2", "0", "3", "0", "4"]);
}

#[test]
fn asymptotics_outputs() {
    let text = stdout(&[
        "asymptotics",
        "--k",
        "1",
        "--n-start",
        "10",
        "--n-end",
        "30",
        "--step",
        "10",
    ]);
    let ratios: Vec<&str> = text
        .lines()
        .map(|l| l.split(", ").nth(1).unwrap())
        .collect();
    assert_eq!(ratios, ["11/10", "21/20", "31/30"]);

    let csv = stdout(&[
        "asymptotics",
        "--k",
        "2",
        "--n-start",
        "100",
        "--n-end",
        "300",
        "--step",
        "100",
        "--format",
        "csv",
    ]);
    let rows: Vec<Vec<&str>> = csv.lines().map(|l| l.split(',').collect()).collect();
    assert_eq!(rows[0], ["n", "c", "C", "A_num", "A_den", "ratio_decimal"]);
    let ratios: Vec<f64> = rows[1..].iter().map(|r| r[5].parse().unwrap()).collect();
    assert!(ratios.windows(2).all(|w| w[1] < w[0] && w[1] > 1.0));

    let json: serde_json::Value = serde_json::from_str(&stdout(&[
        "asymptotics",
        "--k",
        "3",
        "--n-start",
        "60",
        "--n-end",
        "180",
        "--step",
        "60",
        "--format",
        "json",
    ]))
    .unwrap();
    assert_eq!(json.as_array().unwrap().len(), 3);
    assert!(json[0]["C"].is_string());
}

#[test]
fn count_forms() {
    assert_eq!(
        stdout(&["count", "--k", "1", "--n", "5"]),
        "c = 1\nC = 6\nA = 6\n"
    );
    let json: serde_json::Value = serde_json::from_str(&stdout(&[
        "count", "--k", "2", "--n", "4", "--format", "json",
    ]))
    .unwrap();
    assert_eq!(json["c"], "2");
}

#[test]
fn verify_exit_codes() {
    for args in [
        &["verify", "recursion", "--k", "2", "--trunc", "8"][..],
        &["verify", "bkm", "--max-sum", "8"],
        &["verify", "gaussian", "--max-n", "6", "--max-k", "6"],
        &["verify", "lemmas", "--max-rank", "7"],
        &["verify", "xm", "--trunc", "20"],
        &["verify", "denominator", "--k", "3", "--trunc", "20"],
        &["verify", "decomposition"],
    ] {
        assert_eq!(yl(args).status.code(), Some(0), "{args:?}");
    }
    let short = yl(&[
        "verify",
        "denominator",
        "--k",
        "3",
        "--trunc",
        "12",
        "--format",
        "json",
    ]);
    assert_eq!(short.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&short.stdout).unwrap();
    assert_eq!(v["status"], "counterexample");

    assert_eq!(yl(&["verify", "everything"]).status.code(), Some(2));
    assert_eq!(
        yl(&["verify", "recursion", "--k", "x"]).status.code(),
        Some(2)
    );
}

#[test]
fn bad_input_exits_2() {
    for args in [
        &["rankpoly", "--lambda", "1,3"][..],
        &["rankpoly", "--lambda", "2", "--mu", "3"],
        &["asymptotics", "--k", "2", "--n-start", "1", "--n-end", "5"],
        &["gk", "--max-k", "0"],
        &["count", "--k", "3", "--n", "2"],
        &[],
    ] {
        let out = yl(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["series", "--k", "3", "--trunc", "7", "--format", "json"][..],
        &["series", "--k", "2", "--trunc", "6"],
        &["bkm", "--max-sum", "5", "--format", "csv"],
        &[
            "asymptotics",
            "--k",
            "2",
            "--n-start",
            "20",
            "--n-end",
            "40",
            "--step",
            "5",
        ],
    ] {
        let runs: Vec<Vec<u8>> = (0..3).map(|_| yl(args).stdout).collect();
        assert!(runs.windows(2).all(|w| w[0] == w[1]), "{args:?}");
    }
}

#[test]
fn thread_count_from_environment() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_yl"))
            .args([
                "asymptotics",
                "--k",
                "2",
                "--n-start",
                "30",
                "--n-end",
                "60",
                "--step",
                "10",
            ])
            .env("YL_THREADS", threads)
            .output()
            .unwrap()
    };
    let one = run("1");
    assert!(one.status.success());
    assert_eq!(one.stdout, run("4").stdout);
    assert_eq!(one.stdout, run("0").stdout);
    assert_eq!(run("many").status.code(), Some(2));
}
