use std::path::PathBuf;
use std::process::{Command, Output};

fn cal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cal"))
        .args(args)
        .env_remove("CAL_BUDGET_TABLES")
        .output()
        .expect("binary runs")
}

fn here(rel: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", rel].iter().collect();
    p.to_string_lossy().into_owned()
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(here(&format!("golden/{name}"))).unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn check_text_is_stable() {
    for name in ["a_is_g_110", "zero_000", "rational_100"] {
        let o = cal(&["check", &here(&format!("data/{name}.json"))]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o), golden(&format!("check_{name}.txt")), "{name}");
    }
}

#[test]
fn check_json_lists_witness() {
    let o = cal(&["check", &here("data/a_is_g_110.json"), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["endo_commutative"]["bruteforce"], false);
    assert_eq!(v["endo_commutative"]["theorem"], false);
    assert_eq!(v["endo_commutative"]["polynomial"], false);
    assert_eq!(
        v["curled"]["symbolic_caveat"],
        "sufficient-only over finite fields"
    );
    let first = &v["conditions"]["cond10"][0];
    assert_eq!(first["label"], "10-1");
    assert_eq!(first["witness"]["lhs"], serde_json::json!(["0", "0", "0"]));
    assert_eq!(first["witness"]["rhs"], serde_json::json!(["0", "0", "1"]));

    let o = cal(&["check", &here("data/zero_000.json"), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["curled"]["value"], true);
    assert_eq!(v["zeropotent"]["bruteforce"], true);
    assert_eq!(v["zeropotent"]["condition"], true);
}

#[test]
fn check_exit_codes() {
    assert_eq!(
        cal(&["check", &here("data/bad_type.json")]).status.code(),
        Some(2)
    );
    assert_eq!(
        cal(&["check", &here("data/missing.json")]).status.code(),
        Some(2)
    );
    assert_eq!(
        cal(&["check", &here("golden/expand_all.txt")])
            .status
            .code(),
        Some(2)
    );
    let o = cal(&["check", &here("data/not_prime.json")]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not a prime"));
}

#[test]
fn expand_output() {
    assert_eq!(
        stdout(&cal(&["expand", "--word", "AB"])),
        "AB : a^2vw | abuw | a^2vw - abuw\n"
    );
    assert_eq!(
        stdout(&cal(&["expand", "--word", "e"])),
        "e : a^2u^2i | a^2u^2i | 0\n"
    );
    assert_eq!(
        stdout(&cal(&["expand", "--word", "A^2"])),
        stdout(&cal(&["expand", "--word", "AA"]))
    );
    assert_eq!(cal(&["expand", "--word", "zz"]).status.code(), Some(2));
    assert_eq!(stdout(&cal(&["expand", "--all"])), golden("expand_all.txt"));
}

#[test]
fn verify_expansion_quick() {
    let o = cal(&["verify-expansion", "--quick"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("PASS ledger difference 81/81"), "{text}");
    assert!(text.contains("PASS greek identities 6/6"), "{text}");
    assert!(!text.contains("FAIL"));
}

#[test]
fn verify_theorem_is_deterministic_across_threads() {
    let args = |threads| {
        [
            "verify-theorem",
            "--field",
            "3",
            "--types",
            "0,0,0",
            "--types",
            "1,1,1",
            "--mode",
            "sample",
            "--n",
            "3000",
            "--seed",
            "7",
            "--threads",
            threads,
        ]
    };
    let one = cal(&args("1"));
    let four = cal(&args("4"));
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    let v: serde_json::Value = serde_json::from_slice(&one.stdout).unwrap();
    assert_eq!(v["total_tables"], 6000);
    assert_eq!(v["total_mismatches"], 0);
    assert_eq!(v["reports"].as_array().unwrap().len(), 4);
}

#[test]
fn verify_theorem_flag_errors() {
    assert_eq!(
        cal(&["verify-theorem", "--mode", "sample", "--n", "-5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        cal(&["verify-theorem", "--population", "some"])
            .status
            .code(),
        Some(2)
    );
    let o = Command::new(env!("CARGO_BIN_EXE_cal"))
        .args(["verify-theorem", "--types", "0,0,0"])
        .env("CAL_BUDGET_TABLES", "1000")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("budget is 1000"));
}

#[test]
fn verify_theorem_writes_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let o = cal(&[
        "verify-theorem",
        "--field",
        "5",
        "--types",
        "1,0,0",
        "--n",
        "200",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(
        v["mode"],
        serde_json::json!({"kind": "sample", "n": 200, "seed": 0})
    );
}

#[test]
fn classify_csv_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("gf2.csv");
    let o = cal(&[
        "classify",
        "--field",
        "2",
        "--types",
        "0,0,0",
        "--types",
        "1,0,0",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let csv = std::fs::read_to_string(out).unwrap();
    let rows: Vec<&str> = csv.lines().collect();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[1], "GF(2),0,0,0,262144,1024,3350,3350,3350,512,512,0");
    assert_eq!(rows[2], "GF(2),1,0,0,262144,1024,354,354,354,0,0,0");

    let bad = dir.path().join("no/such/dir/x.csv");
    let o = cal(&[
        "classify",
        "--types",
        "0,0,0",
        "--mode",
        "sample",
        "--n",
        "5",
        "--out",
        bad.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
}
