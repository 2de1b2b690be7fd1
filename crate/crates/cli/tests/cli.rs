use std::process::Command;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use thompson_cli::run;
use thompson_core::sample::{random_fmap, random_tlike, SampleConfig};
use thompson_core::TLikeMap;

const M: &str = "[[0,-1],[-1,0]]";

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("thompson-twist").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = call(args);
    assert_eq!(code, 0, "stderr: {err}");
    out.trim_end().to_string()
}

#[test]
fn reidemeister_of_rev_matrix_is_infinite() {
    assert_eq!(ok(&["reidemeister", "--matrix", M]), "INFINITE");
    assert_eq!(ok(&["reidemeister", "--matrix", "[[0,-1],[1,0]]"]), "2");
    assert_eq!(
        ok(&["--output", "json", "reidemeister", "--matrix", M]),
        r#"{"reidemeister":"INFINITE"}"#
    );
}

#[test]
fn ab_of_translation() {
    let t = r#"{"type":"F","l":1,"r":1,"breaks":[]}"#;
    assert_eq!(ok(&["ab", "--element", t]), "(1, 1)");
    assert_eq!(ok(&["--output", "json", "ab", "--element", t]), r#"{"l":1,"r":1}"#);
}

#[test]
fn gamma_members_are_not_equivalent() {
    assert_eq!(
        ok(&["twisted-equiv", "--matrix", M, "--u", "[0,3]", "--v", "[0,5]"]),
        "false"
    );
    assert_eq!(
        ok(&["twisted-equiv", "--matrix", M, "--u", "[0,3]", "--v", "[0,3]"]),
        "true"
    );
    // (1, 1) lies in the image of I - M
    assert_eq!(
        ok(&["twisted-equiv", "--matrix", M, "--u", "[1,1]", "--v", "[0,0]"]),
        "true"
    );
}

#[test]
fn class_rep_and_h1() {
    assert_eq!(
        ok(&["class-rep", "--matrix", M, "--v", "[2,2]"]),
        ok(&["class-rep", "--matrix", M, "--v", "[0,0]"])
    );
    assert_eq!(
        ok(&["h1-matrix", "--word", r#"{"factors":[{"kind":"rev"}]}"#]),
        "[[0, -1], [-1, 0]]"
    );
    assert_eq!(ok(&["h1-matrix", "--word", r#"{"factors":[]}"#]), "[[1, 0], [0, 1]]");
}

#[test]
fn eval_and_rev() {
    let g = r#"{"type":"F","l":0,"r":1,"breaks":[{"x":"0","y":"0"},{"x":"1","y":"2"}]}"#;
    assert_eq!(ok(&["eval", "--element", g, "--x", "1/2^1"]), "1");
    assert_eq!(ok(&["eval", "--element", g, "--x", "-3"]), "-3");
    assert_eq!(ok(&["eval", "--element", g, "--x", "5"]), "6");
    let r = ok(&["rev", "--element", g]);
    assert_eq!(ok(&["ab", "--element", &r]), "(-1, 0)");
}

#[test]
fn element_round_trips_are_byte_identical() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let cfg = SampleConfig::default();
    let id_f = r#"{"type":"F","l":0,"r":0,"breaks":[]}"#;
    let empty = r#"{"factors":[]}"#;
    for _ in 0..25 {
        let f = random_fmap(&mut rng, &cfg).to_json().to_string();
        assert_eq!(ok(&["validate", "--element", &f]), f);
        assert_eq!(ok(&["compose", "--f", &f, "--h", id_f]), f);
        assert_eq!(ok(&["compose", "--f", id_f, "--h", &f]), f);
        assert_eq!(ok(&["aut-apply", "--word", empty, "--element", &f]), f);
        assert_eq!(
            ok(&[
                "conjugate",
                "--f",
                &f,
                "--g",
                &TLikeMap::identity().to_json().to_string()
            ]),
            f
        );
        let inv = ok(&["invert", "--element", &f]);
        assert_eq!(ok(&["invert", "--element", &inv]), f);

        let g = random_tlike(&mut rng, &cfg).to_json().to_string();
        assert_eq!(ok(&["validate", "--element", &g]), g);
    }
}

#[test]
fn file_inputs() {
    let dir = std::env::temp_dir().join(format!("thompson-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("t.json");
    std::fs::write(&path, r#"{"type":"F","l":2,"r":2,"breaks":[]}"#).unwrap();
    assert_eq!(ok(&["ab", "--element", path.to_str().unwrap()]), "(2, 2)");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn domain_errors_are_structured() {
    let cases: &[(&[&str], &str)] = &[
        (
            &[
                "validate",
                "--element",
                r#"{"type":"F","l":0,"r":0,"breaks":[{"x":"0","y":"0"},{"x":"1","y":"3"}]}"#,
            ],
            "BadSlope",
        ),
        (
            &["validate", "--element", r#"{"type":"F","l":0,"r":1,"breaks":[]}"#],
            "TailMismatch",
        ),
        (&["reidemeister", "--matrix", "[[1,2],[3,4]]"], "NotAutomorphism"),
        (&["reidemeister", "--matrix", "[[1,2,3],[3,4,5]]"], "NotSquare"),
        (&["ab", "--element", "/nonexistent/element.json"], "InvalidInput"),
        (&["ab", "--element", "{not json"], "InvalidInput"),
    ];
    for (args, code) in cases {
        let (status, out, err) = call(args);
        assert_eq!(status, 1, "{args:?}");
        assert!(out.is_empty());
        let v: Value = serde_json::from_str(err.trim()).unwrap();
        assert_eq!(v["error"], *code, "{args:?}: {err}");
        assert!(v["detail"].is_string());
    }
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(call(&[]).0, 2);
    assert_eq!(call(&["frobnicate"]).0, 2);
    assert_eq!(call(&["ab"]).0, 2);
    assert_eq!(call(&["--output", "yaml", "ab", "--element", "{}"]).0, 2);
    assert_eq!(call(&["--help"]).0, 0);
}

#[test]
fn demo_theorem_matches_golden() {
    let golden = include_str!("golden/demo_theorem.txt");
    let bin = env!("CARGO_BIN_EXE_thompson-twist");
    let first = Command::new(bin)
        .arg("demo-theorem")
        .env("THOMPSON_TWIST_SEED", "20")
        .output()
        .unwrap();
    let second = Command::new(bin)
        .arg("demo-theorem")
        .env("THOMPSON_TWIST_SEED", "20")
        .output()
        .unwrap();
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(String::from_utf8(first.stdout).unwrap(), golden);
    assert!(golden.contains("det(I - M) = 0"));
    assert!(golden.contains("R(H1(Rev)) = #Coker(I - M) = INFINITE"));
    assert!(golden.contains("Gamma is pairwise non-equivalent: CERTIFIED"));
}

#[test]
fn demo_theorem_n_flag_and_seed() {
    let small = thompson_cli::demo_theorem(3, 2, 5).unwrap();
    assert!(small.contains("|a| <= 3"));
    assert!(small.contains("equivalent pairs among 21 distinct pairs: 0"));
    assert_eq!(small, thompson_cli::demo_theorem(3, 2, 5).unwrap());
    assert!(thompson_cli::demo_theorem(-1, 0, 5).is_err());
}
