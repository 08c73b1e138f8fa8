use std::process::{Command, Output};

use rookq::arith::parse_poly;
use rookq::Var;
use serde_json::Value;

fn rookq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rookq"))
        .args(args)
        .env_remove("ROOKQ_MAX_WEIGHT")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = rookq(args);
    assert!(
        out.status.success(),
        "{:?}: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn single_values() {
    assert_eq!(stdout(&["char", "--lambda", "[2,2]", "--mu", "[5]"]).trim(), "0");
    assert_eq!(stdout(&["char", "--lambda", "[]", "--mu", "[3,2]"]).trim(), "q^3");
    assert_eq!(
        stdout(&["char", "--lambda", "[1]", "--mu", "[2]"]).trim(),
        "q - 1"
    );
    assert_eq!(
        stdout(&[
            "char",
            "--lambda",
            "[3,1,1]",
            "--mu",
            "[3,2,1]",
            "--method",
            "iterative",
            "--check"
        ])
        .trim(),
        "2*q^3 - 10*q^2 + 10*q - 2"
    );
}

#[test]
fn bitrace_and_dims() {
    assert_eq!(stdout(&["bitrace", "--mu", "[1]", "--nu", "[1]"]).trim(), "2");
    assert_eq!(
        stdout(&["bitrace", "--mu", "[2,1]", "--nu", "[1,2]", "--method", "matrix"]),
        stdout(&["bitrace", "--mu", "[2,1]", "--nu", "[1,2]", "--method", "def"])
    );
    assert_eq!(stdout(&["dims", "--n", "4"]).trim(), "209");
}

#[test]
fn verify_reports_every_check() {
    let out = stdout(&["verify", "--n", "4"]);
    assert!(out.lines().filter(|l| l.starts_with("PASS")).count() >= 5);
    assert!(!out.contains("FAIL"));
}

#[test]
fn exit_codes() {
    assert_eq!(
        rookq(&["char", "--lambda", "[2,x]", "--mu", "[5]"]).status.code(),
        Some(3)
    );
    assert_eq!(
        rookq(&["char", "--lambda", "[1,2]", "--mu", "[5]"]).status.code(),
        Some(3)
    );
    assert_eq!(
        rookq(&["table", "--n", "3", "--methods", "bogus"]).status.code(),
        Some(3)
    );
    let capped = Command::new(env!("CARGO_BIN_EXE_rookq"))
        .args(["dims", "--n", "5"])
        .env("ROOKQ_MAX_WEIGHT", "4")
        .output()
        .unwrap();
    assert!(!capped.status.success());
}

#[test]
fn trivial_table() {
    assert_eq!(stdout(&["table", "--n", "0"]), "lambda,\"[]\"\n\"[]\",1\n");
}

#[test]
fn table_matches_golden_file() {
    let golden = include_str!("../../core/tests/data/table1.csv");
    let mut expected = golden.lines().filter(|l| !l.starts_with('#'));
    let header: Vec<&str> = expected.next().unwrap().split(';').skip(1).collect();

    let out = stdout(&[
        "table",
        "--n",
        "5",
        "--restrict-lambda-lt-n",
        "--methods",
        "oracle,iterative,mn",
        "--jobs",
        "1",
    ]);
    let mut reader = csv::Reader::from_reader(out.as_bytes());
    let cols: Vec<String> = reader
        .headers()
        .unwrap()
        .iter()
        .skip(1)
        .map(String::from)
        .collect();
    assert_eq!(cols, header);
    let mut count = 0;
    for (got, want) in reader.records().zip(expected) {
        let got = got.unwrap();
        let want: Vec<&str> = want.split(';').collect();
        assert_eq!(&got[0], want[0]);
        for (g, w) in got.iter().skip(1).zip(&want[1..]) {
            assert_eq!(
                parse_poly(g, Var::Q).unwrap(),
                parse_poly(w, Var::Q).unwrap(),
                "row {}",
                want[0]
            );
            count += 1;
        }
    }
    assert_eq!(count, 84);
}

#[test]
fn output_is_independent_of_job_count() {
    let args = [
        "table",
        "--n",
        "4",
        "--methods",
        "mn,iterative",
        "--format",
        "json",
    ];
    let one = stdout(&[&args[..], &["--jobs", "1"]].concat());
    let four = stdout(&[&args[..], &["--jobs", "4"]].concat());
    assert_eq!(one, four);
}

#[test]
fn json_round_trips() {
    let doc: Value = serde_json::from_str(&stdout(&["table", "--n", "4", "--format", "json"])).unwrap();
    let cells = doc["cells"].as_array().unwrap();
    assert_eq!(cells.len(), 12 * 5);
    for cell in cells {
        let value = cell["value"].as_str().unwrap();
        let parsed = parse_poly(value, Var::Q).unwrap();
        assert_eq!(parsed.to_string(), value);
        let poly = &cell["poly"];
        assert_eq!(poly["var"], "q");
        let exps: Vec<i64> = poly["terms"]
            .as_array()
            .unwrap()
            .iter()
            .map(|t| t[0].as_i64().unwrap())
            .collect();
        assert!(exps.windows(2).all(|w| w[0] > w[1]));
        for t in poly["terms"].as_array().unwrap() {
            let c = rookq::arith::rat(t[1].as_i64().unwrap(), t[2].as_i64().unwrap());
            assert_eq!(parsed.coeff(t[0].as_i64().unwrap()), c);
        }
    }
}

#[test]
fn latex_and_revlex() {
    let tex = stdout(&["table", "--n", "2", "--format", "latex"]);
    assert!(tex.starts_with("\\begin{tabular}"));
    let rev = stdout(&["table", "--n", "2", "--order", "revlex"]);
    assert!(rev.starts_with("lambda,\"[2]\",\"[1,1]\""));
}
