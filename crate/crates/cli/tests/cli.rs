use std::io::Write;
use std::process::{Command, Output, Stdio};

use cliffchar_cli::document::ResultDocument;
use cliffchar_cli::expr::parse_expression;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cliffchar"))
        .args(args)
        .env_remove("CLIFFCHAR_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn charpoly_text_and_json() {
    let o = run(&["charpoly", "--signature", "5,0", "e1 + e5 + e15"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "C = [0,4,0,-6,0,4,0,-1]\n");

    let o = run(&["charpoly", "--signature", "2,0", "1"]);
    assert_eq!(stdout(&o), "C = [2,-1]\n");

    let o = run(&["charpoly", "-s", "5,0", "--json", "e1 + e5 + e15"]);
    let doc: ResultDocument = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc.c, ["0", "4", "0", "-6", "0", "4", "0", "-1"]);
    assert_eq!(doc.n, 8);
    assert_eq!(doc.det, "1");
    assert_eq!(doc.method, "recursive");
    let text = stdout(&o);
    let order: Vec<usize> = ["\"signature\"", "\"input\"", "\"N\"", "\"C\"", "\"det\"", "\"method\""]
        .iter()
        .map(|k| text.find(k).unwrap())
        .collect();
    assert!(order.windows(2).all(|w| w[0] < w[1]), "{text}");
}

#[test]
fn document_round_trip() {
    let o = run(&["charpoly", "-s", "3,1", "--json", "2 - e1*e23 + 3/2*e(1,4) + e1234^2"]);
    let doc: ResultDocument = serde_json::from_slice(&o.stdout).unwrap();
    let sig = cliffchar::Signature::new(doc.signature[0], doc.signature[1]).unwrap();
    let u = parse_expression(&doc.input, sig).unwrap();
    assert_eq!(cliffchar::charpoly(&u).coeffs(), &doc.coefficients().unwrap()[..]);
}

#[test]
fn all_methods_agree() {
    let o = run(&[
        "charpoly",
        "-s",
        "3,3",
        "--method",
        "all",
        "3 - 2*e1 + 5*e25 - 7*e346 + e123456 + 4*e(1,2,3,4) - 9*e56",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let o = run(&["charpoly", "-s", "4,1", "-m", "explicit", "--json", "e1 + e2345"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn det_and_inverse() {
    assert_eq!(stdout(&run(&["det", "--signature", "2,0", "e1"])), "-1\n");
    assert_eq!(
        stdout(&run(&["inverse", "--signature", "2,0", "e1+e2"])),
        "1/2*e1 + 1/2*e2\n"
    );
    let o = run(&["inverse", "--signature", "1,1", "e1 + e2"]);
    assert_eq!(o.status.code(), Some(4));
    let o = run(&["inverse", "-s", "2,0", "--json", "e1+e2"]);
    let doc: ResultDocument = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc.inverse.as_deref(), Some("1/2*e1 + 1/2*e2"));
    assert_eq!(stdout(&run(&["det", "-s", "2,0", "--float", "1/2"])), "0.25\n");
    assert_eq!(stdout(&run(&["det", "-s", "2,0", "-1"])), "1\n");
}

#[test]
fn stdin_input() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cliffchar"))
        .args(["charpoly", "-s", "2,0", "--stdin"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"(e1+e2)^2\n").unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(stdout(&o), "C = [4,-4]\n");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["charpoly", "-s", "2,0", "e1 +"]).status.code(), Some(1));
    assert_eq!(run(&["charpoly", "-s", "2,0", "e3"]).status.code(), Some(1));
    assert_eq!(run(&["charpoly", "-s", "2,0", "1/0"]).status.code(), Some(1));
    assert_eq!(run(&["charpoly", "-s", "two", "1"]).status.code(), Some(1));
    assert_eq!(run(&["charpoly", "-s", "2,0"]).status.code(), Some(1));
    assert_eq!(run(&["charpoly", "-s", "4,3", "-m", "closed", "1"]).status.code(), Some(2));
    assert_eq!(run(&["charpoly", "-s", "2,0", "-m", "explicit", "1"]).status.code(), Some(2));
    assert_eq!(run(&["charpoly", "-s", "2,0", "-m", "magic", "1"]).status.code(), Some(2));
    assert_eq!(run(&["charpoly", "-s", "13,0", "1"]).status.code(), Some(2));
    let o = run(&["charpoly", "-s", "2,0", "e1 + e3"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("at 6"));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn verify_small_runs() {
    let o = run(&["verify", "--max-n", "1", "--trials", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["mismatches"], 0);
    assert_eq!(report["signatures"].as_array().unwrap().len(), 2);

    let corpus = concat!(env!("CARGO_MANIFEST_DIR"), "/data/known_cases.jsonl");
    let o = run(&["verify", "--max-n", "1", "--trials", "0", "--corpus", corpus]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let cases = report["corpus"]["cases"].as_u64().unwrap();
    assert_eq!(report["corpus"]["passed"].as_u64().unwrap(), cases);
}

#[test]
fn verify_reports_bad_corpus_with_exit_3() {
    let dir = std::env::temp_dir().join(format!("cliffchar-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.jsonl");
    std::fs::write(&path, r#"{"signature":[2,0],"expr":"e1","expect_C":["0","7"]}"#).unwrap();
    let o = run(&["verify", "--max-n", "1", "--trials", "0", "--corpus", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["mismatches"], 1);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_seed_from_environment() {
    let with_env = Command::new(env!("CARGO_BIN_EXE_cliffchar"))
        .args(["verify", "--max-n", "2", "--trials", "2"])
        .env("CLIFFCHAR_SEED", "11")
        .output()
        .unwrap();
    let report: serde_json::Value = serde_json::from_slice(&with_env.stdout).unwrap();
    assert_eq!(report["seed"], 11);
}

#[test]
fn bench_csv() {
    let o = run(&["bench", "--trials", "0"]);
    assert_eq!(stdout(&o), "method,trial,micros\n");
    let o = run(&["bench", "--signature", "3,3", "--methods", "recursive,closed", "--trials", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let methods: std::collections::BTreeSet<&str> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').next().unwrap())
        .collect();
    assert_eq!(methods.into_iter().collect::<Vec<_>>(), ["closed", "recursive"]);
    assert_eq!(run(&["bench", "-s", "4,3", "--methods", "closed", "--trials", "1"]).status.code(), Some(2));
}
