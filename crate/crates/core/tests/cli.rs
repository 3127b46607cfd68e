use std::path::PathBuf;

use shipsearch::cli::{banner, run};
use shipsearch::{Rule, SearchParams, Symmetry, Translation};

fn cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["shipsearch"];
    argv.extend_from_slice(args);
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("shipsearch-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn search_emits_verifiable_rle() {
    let (code, out, err) = cli(&["search", "--period", "2", "--width", "5", "--symmetry", "glide"]);
    assert_eq!(code, 0, "{err}");
    assert!(err.contains("2^20"), "{err}");
    assert!(out.starts_with("#C period 4"), "{out}");
    let path = temp_file("c2.rle", &out);
    let (code, out, _) = cli(&["verify", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("speed 2c/4 = c/2"), "{out}");
}

#[test]
fn search_writes_output_file_and_quiet_is_silent() {
    let path = temp_file("glider.rle", "");
    let (code, out, err) = cli(&[
        "search", "--period", "4", "--width", "4", "--translation", "diagonal", "--quiet", "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(out.is_empty() && err.is_empty(), "{out}{err}");
    let (code, out, _) = cli(&["verify", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.starts_with("period 4, dx"), "{out}");
}

#[test]
fn exhausted_search_exits_one() {
    let (code, out, err) = cli(&["search", "--period", "2", "--width", "1"]);
    assert_eq!(code, 1);
    assert!(out.is_empty());
    assert!(err.contains("exhausted"), "{err}");
}

#[test]
fn usage_errors_exit_two() {
    for (args, needle) in [
        (vec!["search", "--period", "3", "--offset", "3", "--width", "4"], "less than the period"),
        (vec!["search", "--period", "4", "--offset", "2", "--width", "4"], "coprime"),
        (vec!["search", "--period", "3", "--offset", "0", "--width", "4"], "at least 1"),
        (vec!["search", "--rule", "B03/S23", "--period", "3", "--width", "4"], "B0"),
        (
            vec!["search", "--period", "3", "--width", "4", "--symmetry", "even", "--translation", "diagonal"],
            "diagonal",
        ),
        (vec!["search", "--period", "3", "--width", "4", "--node-capacity", "5"], "capacity"),
        (vec!["search", "--period", "3", "--width", "4", "--symmetry", "sideways"], "sideways"),
        (vec!["frobnicate"], "frobnicate"),
    ] {
        let (code, _, err) = cli(&args);
        assert_eq!(code, 2, "{args:?}");
        assert!(err.contains(needle), "{args:?}: {err}");
    }
}

#[test]
fn verify_reports_non_ships() {
    let blinker = temp_file("blinker.rle", "x = 3, y = 1, rule = B3/S23\n3o!\n");
    let (code, out, _) = cli(&["verify", blinker.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(out.trim(), "not a spaceship (oscillator, period 2)");

    let empty = temp_file("empty.rle", "x = 0, y = 0\n!\n");
    let (code, out, _) = cli(&["verify", empty.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(out.trim(), "not a spaceship (empty)");

    let broken = temp_file("broken.rle", "3o!\n");
    let (code, _, err) = cli(&["verify", broken.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("header"), "{err}");

    let (code, _, _) = cli(&["verify", "/nonexistent/file.rle"]);
    assert_eq!(code, 2);
}

#[test]
fn verify_rule_override() {
    // A glider is not a ship when nothing survives.
    let glider = temp_file("glider-override.rle", "x = 3, y = 3, rule = B3/S23\nbo$2bo$3o!\n");
    let (code, _, _) = cli(&["verify", glider.to_str().unwrap()]);
    assert_eq!(code, 0);
    let (code, out, _) = cli(&["verify", glider.to_str().unwrap(), "--rule", "B3/S"]);
    assert_eq!(code, 1, "{out}");
}

#[test]
fn stats_prints_pruned_fraction() {
    for (rule, expect) in [("B3/S23", "pruned: 18.5%"), ("B27/S0", "pruned: 68.3%"), ("B1357/S1357", "pruned: 0.0%")] {
        let (code, out, _) = cli(&["stats", "--rule", rule, "--period", "2"]);
        assert_eq!(code, 0);
        assert!(out.lines().any(|l| l == expect), "{rule}: {out}");
    }
    let (code, out, _) = cli(&["stats", "--period", "3"]);
    assert_eq!(code, 0);
    assert!(!out.contains("pruned"));
    assert!(out.contains("density"));
}

#[test]
fn banner_reports_debruijn_exponent() {
    let params = SearchParams::new(Rule::LIFE, 7, 2, 9, Symmetry::EvenMirror, Translation::Orthogonal).unwrap();
    assert!(banner(&params).ends_with("2^126"));
    let params = SearchParams::new(Rule::LIFE, 3, 1, 6, Symmetry::EvenMirror, Translation::Orthogonal).unwrap();
    assert!(banner(&params).ends_with("2^36"));
}

#[test]
fn hidden_oracle_subcommand_agrees() {
    let (code, out, _) = cli(&["oracle", "--period", "3", "--width", "4", "0000", "0000", "0000", "0000", "0110", "0000"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.ends_with("agree\n"));
    let (_, help, _) = cli(&["--help"]);
    assert!(!help.contains("oracle"));
}

#[test]
fn runs_are_reproducible() {
    let args = ["search", "--period", "3", "--width", "6", "--symmetry", "even", "--quiet"];
    let first = cli(&args);
    assert_eq!(first.0, 0);
    assert_eq!(first, cli(&args));
}
