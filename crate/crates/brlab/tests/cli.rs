//! End-to-end runs of the `brlab` binary: exit codes, output files and flags.

use std::path::PathBuf;
use std::process::{Command, Output};

fn brlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_brlab")).args(args).output().expect("binary runs")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("brlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn write_config(name: &str, text: &str) -> String {
    let p = scratch(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn empty_config_runs_the_suite_with_defaults() {
    let cfg = write_config("empty.cfg", "");
    let out = brlab(&["identity-suite", "--config", &cfg, "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let csv = String::from_utf8(out.stdout).unwrap();
    assert!(csv.starts_with("identity,params,max_rel_err,quad_size,tol,pass\n"));
    assert!(csv.lines().last().unwrap().starts_with("#meta,"));
    assert!(csv.contains("config_hash="));
}

#[test]
fn under_resolved_quadrature_fails_with_exit_one() {
    let cfg = write_config("k4.cfg", "K = 4\nsamples = 10\n");
    let out = brlab(&["identity-suite", "--config", &cfg]);
    assert_eq!(out.status.code(), Some(1));
    let csv = String::from_utf8(out.stdout).unwrap();
    let sw = csv.lines().find(|l| l.starts_with("stein_weiss,")).unwrap();
    assert!(sw.ends_with(",false"));
}

#[test]
fn config_errors_exit_two_with_line_numbers() {
    let cfg = write_config("bad.cfg", "alpha = 1\n# fine\nbogus = 2\n");
    let out = brlab(&["square-function", "--config", &cfg]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));

    let cfg = write_config("range.cfg", "\nalpha = -2\n");
    let out = brlab(&["square-function", "--config", &cfg]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    let out = brlab(&["square-function", "--config", "/nonexistent/brlab.cfg"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn out_flag_writes_the_csv_and_threads_do_not_change_it() {
    let a = scratch("a.csv");
    let b = scratch("b.csv");
    let cfg = write_config("norm.cfg", "trials = 6\nN = 32\nK = 64\n");
    let s = |p: &PathBuf| p.to_string_lossy().into_owned();
    assert_eq!(brlab(&["norm-estimate", "--config", &cfg, "--out", &s(&a), "--threads", "1"]).status.code(), Some(0));
    assert_eq!(brlab(&["norm-estimate", "--config", &cfg, "--out", &s(&b), "--threads", "4"]).status.code(), Some(0));
    let (ta, tb) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert!(!ta.is_empty());
    assert_eq!(ta, tb);
}

#[test]
fn seed_flag_changes_the_hash() {
    let run = |seed: &str| String::from_utf8(brlab(&["square-function", "--seed", seed]).stdout).unwrap();
    let (a, b) = (run("1"), run("2"));
    let meta = |s: &str| s.lines().last().unwrap().to_string();
    assert_ne!(meta(&a), meta(&b));
    assert_eq!(a, run("1"));
}

#[test]
fn every_subcommand_succeeds_on_defaults() {
    for cmd in ["square-function", "nec-probe", "convergence", "app-demo"] {
        let out = brlab(&[cmd]);
        assert_eq!(out.status.code(), Some(0), "{cmd}: {}", String::from_utf8_lossy(&out.stderr));
        let csv = String::from_utf8(out.stdout).unwrap();
        assert!(!csv.contains('\r'));
        assert!(csv.lines().count() >= 3);
    }
}

#[test]
fn necessary_probe_detects_growth_below_threshold() {
    let cfg = write_config("nec.cfg", "alpha = -0.3\nprobe = a\n");
    let out = brlab(&["nec-probe", "--config", &cfg]);
    assert_eq!(out.status.code(), Some(0));
    let csv = String::from_utf8(out.stdout).unwrap();
    assert!(csv.contains("regime_a=growth"));
}
