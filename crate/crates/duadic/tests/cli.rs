use std::process::{Command, Output};

use duadic::report::{BoundReport, CatalogReport, CellStatus, CodeReport, LemmaMatrix, TableReport};

fn duadic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_duadic")).args(args).output().expect("binary runs")
}

fn duadic_with_threads(threads: &str, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_duadic")).env("DUADIC_THREADS", threads).args(args).output().expect("binary runs")
}

fn json<T: serde::de::DeserializeOwned>(out: &Output) -> T {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn construct_report_round_trips() {
    let out = duadic(&["construct", "-r", "2", "-m", "5", "-S", "1"]);
    let report: CodeReport = json(&out);
    report.validate().unwrap();
    assert_eq!((report.code.n, report.code.k, report.code.d_lower), (31, 16, 7));
    assert!(report.duadic && report.extended.self_dual && report.extended.doubly_even);
    let again = serde_json::to_string_pretty(&report).unwrap() + "\n";
    assert_eq!(again.as_bytes(), out.stdout.as_slice());
    let spec = report.spec.to_spec().unwrap();
    assert_eq!(duadic::pipeline::construct(&spec, None).unwrap(), report);
}

#[test]
fn construct_r8_m9() {
    let report: CodeReport = json(&duadic(&["construct", "-r", "8", "-m", "9", "-S", "4,3,2,0"]));
    assert_eq!(report.spec.s, vec![0, 2, 3, 4]);
    assert_eq!((report.code.n, report.code.k, report.code.d_lower), (511, 256, 19));
    assert_eq!(report.verdict.unwrap().theorem, "T4");
}

#[test]
fn unchecked_non_duadic_spec_succeeds() {
    let out = duadic(&["construct", "-r", "4", "-m", "5", "-S", "0,1", "--unchecked"]);
    let report: CodeReport = json(&out);
    assert!(!report.duadic && report.verdict.is_none());
    report.validate().unwrap();
    let strict: CodeReport = json(&duadic(&["construct", "-r", "4", "-m", "5", "-S", "0,1"]));
    assert!(!strict.duadic && !strict.zn_splitting);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["catalog", "-r", "8", "-t", "2"][..],
        &["catalog", "-r", "18", "-t", "1"],
        &["construct", "-r", "2", "-m", "5", "-S", "1,1"],
        &["construct", "-r", "4", "-m", "5", "-S", "0,1,2"],
        &["construct", "-r", "2", "-m", "4", "-S", "1"],
        &["construct", "-r", "2", "-m", "5", "-S", "1", "--v", "31"],
        &["construct", "-r", "2", "-m", "5"],
        &["mindist", "-r", "2", "-m", "7", "-S", "1", "--method", "exact"],
        &["verify-lemmas", "-r", "8", "-m", "10"],
        &["frobnicate"],
    ] {
        let out = duadic(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn catalog_examples() {
    let small: CatalogReport = json(&duadic(&["catalog", "-r", "2", "-t", "1"]));
    let sets: Vec<Vec<u32>> = small.entries.iter().map(|e| e.s.clone()).collect();
    assert_eq!(sets, vec![vec![0], vec![1]]);
    let r8: CatalogReport = json(&duadic(&["catalog", "-r", "8", "-t", "3"]));
    assert_eq!(r8.count, 16);
    assert_eq!(r8.known_family_contained, Some(true));
    for s in
        [[0, 1, 4, 5], [0, 1, 4, 6], [0, 1, 5, 7], [0, 1, 6, 7], [0, 2, 4, 5], [0, 2, 5, 7], [0, 2, 6, 7], [0, 2, 4, 6]]
    {
        assert!(r8.entries.iter().any(|e| e.s == s), "{s:?}");
    }
}

#[test]
fn table_examples() {
    let t: TableReport = json(&duadic(&["table", "-r", "2", "-S", "1", "-m", "3,5"]));
    let params: Vec<_> = t.rows.iter().map(|r| (r.n, r.k, r.exact_d, r.ext_n, r.ext_k, r.exact_ext_d)).collect();
    assert_eq!(
        params,
        vec![
            (Some(7), Some(4), Some(3), Some(8), Some(4), Some(4)),
            (Some(31), Some(16), Some(7), Some(32), Some(16), Some(8)),
        ]
    );
    let big: TableReport = json(&duadic(&["table", "-r", "8", "-S", "0,2,3,4", "-m", "9,17"]));
    let certified: Vec<_> = big.rows.iter().map(|r| r.certified_d_lower).collect();
    assert_eq!(certified, vec![Some(19), Some(259)]);
    assert!(big.rows.iter().all(|r| r.self_dual == Some(true) && r.doubly_even == Some(true)));

    let empty: TableReport = json(&duadic(&["table", "-r", "2", "-S", "1"]));
    assert!(empty.rows.is_empty());
}

#[test]
fn table_reports_row_errors_inline() {
    let t: TableReport = json(&duadic(&["table", "-r", "2", "-S", "1", "-m", "4,3"]));
    assert!(t.rows[0].error.is_some());
    assert_eq!(t.rows[1].k, Some(4));
}

#[test]
fn verify_lemmas_branches() {
    let m: LemmaMatrix = json(&duadic(&["verify-lemmas", "-r", "8", "-m", "11"]));
    assert_eq!(m.failed, 0);
    assert!(m.passed > 0);
    for c in m.cells.iter().filter(|c| c.lemma == "L5" || c.lemma == "L6") {
        if c.status != CellStatus::Skipped {
            assert_eq!(c.branch, Some(11));
        }
    }
    let r8m9: LemmaMatrix = json(&duadic(&["verify-lemmas", "-r", "8", "-m", "9"]));
    assert!(r8m9.cells.iter().any(|c| c.s == "{0,2,3,4}" && c.lemma == "L3" && c.status == CellStatus::Pass));
}

#[test]
fn mindist_is_deterministic() {
    let args = ["mindist", "-r", "2", "-m", "7", "-S", "1", "--effort", "5", "--seed", "42"];
    let a = duadic_with_threads("1", &args);
    let b = duadic_with_threads("3", &args);
    assert_eq!(a.stdout, b.stdout);
    let report: BoundReport = json(&a);
    assert_eq!(report.lower, 9);
    assert!(report.upper >= 9 && report.seed == Some(42) && report.effort == Some(5));
    assert_eq!(report.witness_hex, json::<BoundReport>(&duadic(&args)).witness_hex);

    let exact = ["mindist", "-r", "2", "-m", "5", "-S", "1", "--target", "extended"];
    let one = duadic_with_threads("1", &exact);
    let many = duadic_with_threads("4", &exact);
    assert_eq!(one.stdout, many.stdout);
    let report: BoundReport = json(&one);
    assert!(report.exact && report.upper == 8 && report.method == "exhaustive");
}

#[test]
fn output_file_and_formats() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.csv");
    let out = duadic(&["table", "-r", "2", "-S", "1", "-m", "3", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let csv = std::fs::read_to_string(&path).unwrap();
    let mut lines = csv.lines();
    assert!(lines.next().unwrap().starts_with("m,s,n,k,duadic,theorem"));
    assert!(lines.next().unwrap().starts_with("3,{1},7,4,true,T8"));

    let text = duadic(&["construct", "-r", "2", "-m", "3", "-S", "1", "--format", "text"]);
    assert!(String::from_utf8(text.stdout).unwrap().contains("[8, 4, >=4]"));

    let help = duadic(&["table", "--help"]);
    assert!(String::from_utf8(help.stdout).unwrap().contains("CSV columns: m, s, n, k"));
}
