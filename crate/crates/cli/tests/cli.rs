use std::process::{Command, Output};

use schubert2::ClassVector;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schubert2"))
        .args(args)
        .env_remove("SCHUBERT2_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

#[test]
fn golden_outputs() {
    assert_eq!(
        stdout(&["product", "--n", "4", "--a", "1,0", "--b", "1,0"]),
        "{\"terms\":[{\"a\":[2,0],\"coeff\":1},{\"a\":[1,1],\"coeff\":1}]}\n"
    );
    assert_eq!(
        stdout(&["euler-chow", "--n", "4", "--p", "3", "--max-degree", "2"]),
        "[1,6,20]\n"
    );
    assert_eq!(stdout(&["tau", "--n", "4", "--pi", "2,1"]), "12\n");
    assert_eq!(
        stdout(&["gamma", "--n", "6", "--pi", "2,2,1"]),
        "{\"n\":6,\"grading\":\"cohomology\",\"terms\":[{\"a\":[3,1],\"coeff\":1},{\"a\":[2,2],\"coeff\":1}]}\n"
    );
    assert_eq!(
        stdout(&["beta-check", "--pi", "1,1,1,1"]),
        "{\"pi\":[1,1,1,1],\"n\":4,\"hook_coeff\":2,\"beta\":2,\"equal\":true}\n"
    );
    assert_eq!(
        stdout(&["fixed-locus", "--n", "4", "--p", "0", "--csv"]),
        "pi,e,torus_dim,base,cell_dim,count,class\n\"1,1\",0,0,point,0,6,\"s(0,0)\"\n"
    );
}

#[test]
fn examples_from_each_subcommand() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["partitions", "--n", "6"])).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 23);
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["tau", "--n", "5", "--pi", "2,1,1"])).unwrap();
    assert_eq!(v, 30);
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["verify-models", "--n", "5", "--pi", "1^5"])).unwrap();
    assert_eq!(v["models"], 15);
    assert_eq!(v["agree"], true);
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["fixed-locus", "--n", "6", "--p", "5"])).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 9);
    let series = stdout(&["euler-chow", "--n", "4", "--p", "3", "--max-degree", "10"]);
    let v: Vec<u64> = serde_json::from_str(&series).unwrap();
    assert_eq!(
        v,
        (0..=10u64)
            .map(|d| (d + 3) * (d + 2) * (d + 2) * (d + 1) / 12)
            .collect::<Vec<_>>()
    );
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["matroid", "--n", "4", "--pi", "1,1,1,1"])).unwrap();
    assert_eq!(v["beta"], 2);
    assert_eq!(v["bases"].as_array().unwrap().len(), 6);
}

#[test]
fn models_are_selectable() {
    let base = stdout(&["orbit-class", "--n", "5", "--pi", "1,1,1,1,1"]);
    for k in 0..15 {
        let choice = format!("index:{k}");
        assert_eq!(
            stdout(&[
                "orbit-class",
                "--n",
                "5",
                "--pi",
                "1,1,1,1,1",
                "--model",
                &choice
            ]),
            base
        );
    }
    assert_eq!(
        code(&[
            "orbit-class",
            "--n",
            "5",
            "--pi",
            "1^5",
            "--model",
            "index:15"
        ]),
        2
    );
    assert_eq!(
        code(&["orbit-class", "--n", "5", "--pi", "1^5", "--model", "star"]),
        2
    );
}

#[test]
fn large_counts_become_strings() {
    let out = stdout(&["tau", "--n", "60", "--pi", "1^30"]);
    assert_eq!(out, "\"118264581564861424\"\n");
    assert_eq!(
        stdout(&["tau", "--n", "40", "--pi", "1^20"]),
        "137846528820\n"
    );
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["tau", "--n", "4", "--bogus", "1"]), 64);
    assert_eq!(code(&["frobnicate"]), 64);
    assert_eq!(code(&["tau", "--n", "4"]), 2);
    assert_eq!(code(&["tau", "--n", "4", "--pi", "3,2"]), 2);
    assert_eq!(code(&["tau", "--n", "4", "--pi", "2,x"]), 2);
    assert_eq!(
        code(&["product", "--n", "4", "--a", "3,0", "--b", "1,0"]),
        2
    );
    assert_eq!(
        code(&["product", "--n", "4", "--a", "0,1", "--b", "1,0"]),
        2
    );
    assert_eq!(code(&["verify-models", "--n", "4", "--pi", "2,2"]), 2);
    assert_eq!(
        code(&["euler-chow", "--n", "5", "--p", "4", "--max-degree", "3"]),
        2
    );
    assert_eq!(code(&["gamma", "--n", "4", "--pi", "2,1", "--csv"]), 2);
    assert_eq!(code(&["fixed-locus", "--n", "4", "--p", "9"]), 2);
    assert_eq!(code(&["--help"]), 0);
    let out = run(&["gamma", "--n", "4", "--pi", "3,2"]);
    let err = String::from_utf8(out.stderr).unwrap();
    assert_eq!(err.lines().count(), 1);
    assert!(err.contains("weight exceeds n"), "{err}");
}

#[test]
fn deterministic_and_thread_independent() {
    let args = ["verify-models", "--n", "7", "--pi", "2,1,1,1,1,1"];
    let a = stdout(&args);
    assert_eq!(a, stdout(&args));
    let single = Command::new(env!("CARGO_BIN_EXE_schubert2"))
        .args(args)
        .env("SCHUBERT2_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(single.stdout).unwrap(), a);
    let bad = Command::new(env!("CARGO_BIN_EXE_schubert2"))
        .args(args)
        .env("SCHUBERT2_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn json_round_trips() {
    let docs = [
        vec!["partitions", "--n", "5"],
        vec!["tau", "--n", "5", "--pi", "2,1,1"],
        vec!["matroid", "--n", "5", "--pi", "2,2,1"],
        vec!["gamma", "--n", "7", "--pi", "3,2,1"],
        vec!["product", "--n", "6", "--a", "2,1", "--b", "2,0"],
        vec!["orbit-class", "--n", "6", "--pi", "2,1,1,1"],
        vec!["verify-models", "--n", "6", "--pi", "2,2,1,1"],
        vec!["fixed-locus", "--n", "5", "--p", "3"],
        vec!["euler-chow", "--n", "4", "--p", "2", "--max-degree", "4"],
        vec!["beta-check", "--pi", "3,2,2,1"],
    ];
    for args in docs {
        let text = stdout(&args);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        let again: serde_json::Value =
            serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
        assert_eq!(v, again, "{args:?}");
    }
    for args in [
        ["gamma", "--n", "7", "--pi", "3,2,1"],
        ["orbit-class", "--n", "6", "--pi", "1^5"],
    ] {
        let text = stdout(&args);
        let class: ClassVector = serde_json::from_str(&text).unwrap();
        assert_eq!(
            format!("{}\n", serde_json::to_string(&class).unwrap()),
            text
        );
    }
}

#[test]
fn out_flag() {
    let path = std::env::temp_dir().join(format!("schubert2-out-{}.json", std::process::id()));
    let target = path.to_str().unwrap();
    let out = run(&["tau", "--n", "4", "--pi", "2,1", "--out", target]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "12\n");
    std::fs::remove_file(&path).unwrap();
    assert_eq!(
        stdout(&["tau", "--n", "4", "--pi", "2,1", "--out", "-"]),
        "12\n"
    );
}
