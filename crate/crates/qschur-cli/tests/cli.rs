use std::process::Command;

use qschur::fock::{self, FockVector};
use qschur::{AlphabetRule, LaurentInt};
use qschur_cli::parse;
use serde_json::Value;

fn qschur(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_qschur")).args(args).output().unwrap();
    (String::from_utf8(out.stdout).unwrap(), out.status.code().unwrap())
}

fn json(args: &[&str]) -> Value {
    let mut a = vec!["--format", "json"];
    a.extend_from_slice(args);
    let (out, code) = qschur(&a);
    assert_eq!(code, 0, "{out}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn canonical_json_round_trips() {
    for (e, z) in [("2", "0"), ("3", "0,1"), ("4", "1")] {
        let v = json(&["--e", e, "--charge", z, "--n", "3", "canonical"]);
        let cfg = qschur::FockConfig::new(e.parse().unwrap(), parse::charges(z).unwrap()).unwrap();
        let mut expected = Vec::new();
        for n in 1..=3 {
            expected.extend(fock::canonical_basis(&cfg, n).unwrap());
        }
        let rows = v["basis"].as_array().unwrap();
        assert_eq!(rows.len(), expected.len());
        for (row, (xi, p)) in rows.iter().zip(&expected) {
            assert_eq!(&parse::multipartition(row["xi"].as_str().unwrap()).unwrap(), xi);
            let mut back = FockVector::zero();
            for c in row["coeffs"].as_array().unwrap() {
                let eta = parse::multipartition(c["eta"].as_str().unwrap()).unwrap();
                back.add_term(eta, &parse::laurent_json(&c["poly"]).unwrap());
            }
            assert_eq!(&back, p);
        }
    }
}

#[test]
fn canonical_csv_round_trips() {
    let (out, code) = qschur(&["--e", "2", "--n", "4", "--format", "csv", "canonical"]);
    assert_eq!(code, 0);
    let cfg = qschur::FockConfig::new(2, vec![0]).unwrap();
    let mut reader = csv::Reader::from_reader(out.as_bytes());
    assert_eq!(reader.headers().unwrap(), vec!["xi", "eta", "coeff"]);
    let mut count = 0;
    for rec in reader.records() {
        let rec = rec.unwrap();
        let xi = parse::multipartition(&rec[0]).unwrap();
        let eta = parse::multipartition(&rec[1]).unwrap();
        let p = fock::canonical_basis(&cfg, xi.size()).unwrap();
        assert_eq!(parse::laurent_csv(&rec[2]).unwrap(), p[&xi].coeff(&eta));
        count += 1;
    }
    let total: usize =
        (1..=4).map(|n| fock::canonical_basis(&cfg, n).unwrap().values().map(FockVector::len).sum::<usize>()).sum();
    assert_eq!(count, total);
}

#[test]
fn canonical_examples() {
    let v = json(&["--e", "3", "--n", "1", "canonical"]);
    assert_eq!(v["basis"][0]["xi"], "1");
    assert_eq!(v["basis"][0]["coeffs"].as_array().unwrap().len(), 1);
    // Weight spaces at n = 2, e = 3 are singletons.
    let v = json(&["--e", "3", "--n", "2", "canonical"]);
    for row in v["basis"].as_array().unwrap() {
        let coeffs = row["coeffs"].as_array().unwrap();
        assert_eq!(coeffs.len(), 1);
        assert_eq!(coeffs[0]["eta"], row["xi"]);
        assert_eq!(coeffs[0]["poly"], serde_json::json!({"0": 1}));
    }
    let v = json(&["--e", "2", "--n", "2", "canonical"]);
    let off: Vec<&Value> = v["basis"]
        .as_array()
        .unwrap()
        .iter()
        .flat_map(|r| r["coeffs"].as_array().unwrap().iter().filter(move |c| c["eta"] != r["xi"]))
        .collect();
    assert_eq!(off.len(), 1);
    assert_eq!(off[0]["poly"], serde_json::json!({"-1": 1}));
}

#[test]
fn convention_failure_is_a_record() {
    let (out, code) = qschur(&["--e", "3", "--n", "3", "--convention", "literal", "--format", "json", "canonical"]);
    assert_eq!(code, 2);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["error"]["kind"], "convention");
    assert!(v["error"]["message"].as_str().unwrap().contains("u[3]"));
}

#[test]
fn usage_errors() {
    for args in [
        &["--e", "1", "canonical"][..],
        &["--ell", "2", "--charge", "0", "canonical"],
        &["dims", "--mu", "1,0", "--lambda", "1,0,0"],
        &["--charge", "0,0", "tableaux", "--shape", "2"],
        &["frobnicate"],
    ] {
        assert_eq!(qschur(args).1, 1, "{args:?}");
    }
    assert_eq!(qschur(&["--help"]).1, 0);
}

#[test]
fn dims_examples() {
    let v = json(&["--e", "3", "--charge", "3", "dims", "--mu", "0,0,1", "--lambda", "0,0,1"]);
    assert_eq!(v["tableaux"], serde_json::json!({"0": 1}));
    assert_eq!(v["verdict"], "MATCH");
    let v = json(&["--e", "3", "dims", "--mu", "1,0,0", "--lambda", "0,1,0"]);
    assert_eq!(v["fock"], serde_json::json!({}));
    assert_eq!(v["verdict"], "MATCH");
    let pairs = [("1,1,0;0,0,1|0,1,0", "0,1,0|1,1,1"), ("0,1,1|1,0,0;0,1,0", "1,1,1|0,1,0")];
    for (a, b) in pairs {
        let x = json(&["--e", "3", "--charge", "0,1", "dims", "--mu", a, "--lambda", b]);
        let y = json(&["--e", "3", "--charge", "0,1", "dims", "--mu", b, "--lambda", a]);
        assert_eq!(x["tableaux"], y["tableaux"]);
        assert_eq!(x["fock"], y["fock"]);
        assert_eq!(x["verdict"], "MATCH");
        let p = parse::laurent_json(&x["fock"]).unwrap();
        let (csv_out, _) =
            qschur(&["--e", "3", "--charge", "0,1", "--format", "csv", "dims", "--mu", a, "--lambda", b]);
        let rec = csv::Reader::from_reader(csv_out.as_bytes()).records().next().unwrap().unwrap();
        let field = rec[3].to_string();
        assert_eq!(parse::laurent_csv(&field).unwrap(), p);
    }
}

#[test]
fn tableaux_json_round_trips() {
    let v = json(&["--e", "3", "--charge", "0,1", "tableaux", "--shape", "2,1|1"]);
    let rows = v["tableaux"].as_array().unwrap();
    assert!(!rows.is_empty());
    let cd = qschur::cellular::CellDatum::new(qschur::Charge::new(3, vec![0, 1]));
    for row in rows {
        let t = parse::tableau_json(&row["tableau"], 2, AlphabetRule::Initial).unwrap();
        assert_eq!(t.shape().to_string(), "2,1|1");
        assert_eq!(t.mu_grave(&cd.charge).to_string(), row["type"].as_str().unwrap());
        assert_eq!(cd.deg(&t), row["degree"].as_i64().unwrap());
    }
}

#[test]
fn tableaux_examples() {
    let (out, code) = qschur(&["tableaux", "--shape", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out, "1_1  type 0,0,1  degree 0\n");
    let ty = "1,1,1;0,1,2;1,0,0|0,0,1;0,1,0|1,0,1;0,1,0;1,0,0";
    let (out, code) = qschur(&["--charge", "0,0,0", "tableaux", "--shape", "4,3|2,1|2,1", "--type", ty]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l.starts_with("1_1 1_1 1_1 2_1/2_1 2_1 3_1|1_2 3_3/2_2|1_3 1_3/2_3 ")), "{out}");
}

#[test]
fn tableaux_counts_match_pair_counts() {
    // Summing the CSV rows over types and shapes gives the number of
    // pairs (S, T) with T of the given multiplicities.
    let cd = qschur::cellular::CellDatum::new(qschur::Charge::new(3, vec![0]));
    for shape in ["3", "2,1", "1,1,1"] {
        let (out, _) = qschur(&["--format", "csv", "tableaux", "--shape", shape]);
        let rows = out.lines().count() - 1;
        let p = parse::multipartition(shape).unwrap();
        assert_eq!(rows, cd.tableaux(&p, None).len());
    }
    let mut total = 0;
    let mut standard = 0;
    for shape in ["2", "1,1"] {
        let p = parse::multipartition(shape).unwrap();
        let ts = cd.tableaux(&p, None);
        let of_type = ts.iter().filter(|(t, _)| t.multiplicities() == vec![vec![1, 1]]).count();
        let std = ts.iter().filter(|(t, _)| t.is_standard() && t.alphabet_lengths().iter().sum::<u32>() == 2).count();
        total += of_type * std;
        standard += std;
    }
    assert_eq!(standard, 2);
    assert_eq!(total as u64, qschur::tableau::count_pairs(&[vec![1, 1]], &cd.charge, AlphabetRule::Initial));
}

#[test]
fn check_reports() {
    let v = json(&["--e", "3", "--n", "3", "--jobs", "2", "check", "degrees"]);
    assert_eq!(v["passed"], true);
    for c in v["checks"].as_array().unwrap() {
        assert_eq!(c["passed"], true);
        assert!(c["counterexample"].is_null());
        assert!(c["cases"].as_u64().unwrap() > 0);
    }
    let (out, code) = qschur(&["--format", "csv", "check", "demazure"]);
    assert_eq!(code, 0);
    let mut r = csv::Reader::from_reader(out.as_bytes());
    assert_eq!(r.headers().unwrap(), vec!["suite", "name", "status", "cases", "counterexample"]);
    assert!(r.records().all(|rec| &rec.unwrap()[2] == "PASS"));
}

#[test]
fn out_flag_writes_the_file() {
    let dir = std::env::temp_dir().join(format!("qschur-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("basis.json");
    let (stdout, code) =
        qschur(&["--e", "2", "--n", "2", "--format", "json", "--out", path.to_str().unwrap(), "canonical"]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    let (direct, _) = qschur(&["--e", "2", "--n", "2", "--format", "json", "canonical"]);
    assert_eq!(written, direct);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn laurent_renderings_round_trip() {
    let samples = [
        LaurentInt::zero(),
        LaurentInt::one(),
        LaurentInt::from_terms([(-3, 2), (0, -1), (5, 7)]),
        LaurentInt::monomial(num_bigint::BigInt::from(10).pow(30), -1),
    ];
    for p in samples {
        assert_eq!(parse::laurent_json(&qschur_cli::format::laurent_json(&p)).unwrap(), p);
        assert_eq!(parse::laurent_csv(&qschur_cli::format::laurent_csv(&p)).unwrap(), p);
    }
}
