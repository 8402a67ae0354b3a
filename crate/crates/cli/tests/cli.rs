//! End-to-end runs of the `imm` binary: file round trips, exit codes,
//! and byte-stable outputs.

use std::path::PathBuf;
use std::process::{Command, Output};

fn imm(args: &[&str], dir: &std::path::Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_imm"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn tempdir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("imm-cli-test-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

const C5: &str = "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n";

#[test]
fn analyze_and_gamma() {
    let dir = tempdir("analyze");
    std::fs::write(dir.join("c5.txt"), C5).unwrap();

    let out = imm(&["analyze", "c5.txt"], &dir);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("chromatic: 3"), "{text}");
    assert!(text.contains("thm5: true"), "{text}");

    let out = imm(&["gamma", "--d", "3"], &dir);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("8 12\n"), "{text}");
}

#[test]
fn construct_verify_files_round_trip() {
    let dir = tempdir("roundtrip");
    std::fs::write(dir.join("c5.txt"), C5).unwrap();

    for method in ["vergara", "gauthier", "coloring"] {
        let cert = format!("{method}.json");
        let trace = format!("{method}.trace.json");
        let out = imm(
            &[
                "construct",
                "--method",
                method,
                "--cert",
                &cert,
                "--trace",
                &trace,
                "c5.txt",
            ],
            &dir,
        );
        assert!(out.status.success(), "{method}: {:?}", out);
        assert!(dir.join(&trace).exists());

        let out = imm(
            &["verify", "--strong", "--totally-odd", "c5.txt", &cert],
            &dir,
        );
        assert!(out.status.success(), "{method} verify: {:?}", out);
        let text = String::from_utf8(out.stdout).unwrap();
        assert!(text.contains("accepted"), "{text}");

        // certificates carry the method tag and the trace reference
        let body = std::fs::read_to_string(dir.join(&cert)).unwrap();
        assert!(
            body.contains(&format!("\"method\": \"{method}\"")),
            "{body}"
        );
    }
}

#[test]
fn verify_rejects_with_exit_code_1() {
    let dir = tempdir("reject");
    std::fs::write(dir.join("c5.txt"), C5).unwrap();
    let out = imm(
        &[
            "construct",
            "--method",
            "coloring",
            "--cert",
            "cert.json",
            "c5.txt",
        ],
        &dir,
    );
    assert!(out.status.success());

    // corrupt: drop one path entry
    let body = std::fs::read_to_string(dir.join("cert.json")).unwrap();
    let mut cert: serde_json::Value = serde_json::from_str(&body).unwrap();
    cert["paths"].as_array_mut().unwrap().remove(0);
    std::fs::write(dir.join("bad.json"), cert.to_string()).unwrap();

    let out = imm(&["verify", "c5.txt", "bad.json"], &dir);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("missing path"), "{text}");
    assert!(text.contains("rejected"), "{text}");

    // a certificate naming vertex n is a schema finding
    let mut oob: serde_json::Value = serde_json::from_str(&body).unwrap();
    oob["paths"][0]["vertices"] = serde_json::json!([2, 5, 3]);
    std::fs::write(dir.join("oob.json"), oob.to_string()).unwrap();
    let out = imm(&["verify", "c5.txt", "oob.json"], &dir);
    assert_eq!(out.status.code(), Some(1));

    // a duplicated edge is rejected and named in the report
    let mut dup: serde_json::Value = serde_json::from_str(&body).unwrap();
    let pair24 = dup["paths"]
        .as_array_mut()
        .unwrap()
        .iter_mut()
        .find(|p| p["u"] == 2 && p["v"] == 4)
        .unwrap();
    pair24["vertices"] = serde_json::json!([2, 3, 4]);
    std::fs::write(dir.join("dup.json"), dup.to_string()).unwrap();
    let out = imm(&["verify", "c5.txt", "dup.json"], &dir);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("edge 3 4 used by pair"), "{text}");
}

#[test]
fn construct_exit_codes() {
    let dir = tempdir("codes");
    std::fs::write(dir.join("alpha3.txt"), "3 0\n").unwrap();
    std::fs::write(dir.join("c5.txt"), C5).unwrap();

    let out = imm(&["construct", "--method", "vergara", "alpha3.txt"], &dir);
    assert_eq!(out.status.code(), Some(2), "alpha gate");

    let out = imm(
        &["construct", "--method", "vergara", "--d-max", "1", "c5.txt"],
        &dir,
    );
    assert_eq!(out.status.code(), Some(3), "gamma exhaustion");

    let out = imm(
        &[
            "construct",
            "--method",
            "coloring",
            "--d1",
            "4",
            "--d2",
            "0,1",
            "--d3",
            "2,3",
            "c5.txt",
        ],
        &dir,
    );
    assert_eq!(out.status.code(), Some(4), "precondition");

    std::fs::write(dir.join("broken.txt"), "2 1\n0 5\n").unwrap();
    let out = imm(&["analyze", "broken.txt"], &dir);
    assert_eq!(out.status.code(), Some(1), "parse error");
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn generate_is_byte_stable() {
    let dir = tempdir("generate");
    let out1 = imm(
        &[
            "generate", "random", "--n", "20", "--p", "0.9", "--seed", "7", "--out", "a.txt",
        ],
        &dir,
    );
    assert!(out1.status.success());
    let out2 = imm(
        &[
            "generate", "random", "--n", "20", "--p", "0.9", "--seed", "7", "--out", "b.txt",
        ],
        &dir,
    );
    assert!(out2.status.success());
    let a = std::fs::read(dir.join("a.txt")).unwrap();
    let b = std::fs::read(dir.join("b.txt")).unwrap();
    assert_eq!(a, b);

    let out = imm(
        &[
            "generate",
            "blowup",
            "--d",
            "2",
            "--sizes",
            "2,2,2,2,2",
            "--seed",
            "1",
            "--out",
            "blow.txt",
        ],
        &dir,
    );
    assert!(out.status.success());
    let text = std::fs::read_to_string(dir.join("blow.txt")).unwrap();
    assert!(text.starts_with("10 "), "{text}");

    // generated instances feed straight back into the pipeline
    let out = imm(
        &[
            "construct",
            "--method",
            "vergara",
            "--cert",
            "blow.json",
            "blow.txt",
        ],
        &dir,
    );
    assert!(out.status.success(), "{:?}", out);
    let out = imm(
        &[
            "verify",
            "--strong",
            "--totally-odd",
            "blow.txt",
            "blow.json",
        ],
        &dir,
    );
    assert!(out.status.success());
}

#[test]
fn hom_subcommand() {
    let dir = tempdir("hom");
    std::fs::write(dir.join("c5.txt"), C5).unwrap();
    let out = imm(&["hom", "c5.txt"], &dir);
    assert!(out.status.success());
    let v: serde_json::Value =
        serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(v["d"], 2);

    let out = imm(&["hom", "--d-max", "1", "c5.txt"], &dir);
    assert_eq!(out.status.code(), Some(3));
}
