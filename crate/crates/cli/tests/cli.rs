use std::process::Command;

use acis_cli::{parse_report, run, JobConfig, Report};
use clap::Parser;

const QUARTIC: &str = "(x^2+y^2)^2+(3*x^2*y-y^3)*z";

fn acis(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_acis"))
        .args(args)
        .output()
        .unwrap();
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap(),
    )
}

fn job(args: &[&str]) -> JobConfig {
    JobConfig::try_parse_from(std::iter::once("acis").chain(args.iter().copied())).unwrap()
}

#[test]
fn signature_json_round_trips() {
    let out = run(&job(&[
        "signature",
        "--vars",
        "x,y,z",
        "-f",
        QUARTIC,
        "--format",
        "json",
    ]));
    assert_eq!(out.code, 0, "{}", out.stderr);
    let Report::Signature(s) = parse_report(&out.stdout).unwrap() else {
        panic!("wrong report kind");
    };
    assert_eq!(s.signature, -3);
    assert_eq!(s.dim_m, 7);
    let again = serde_json::to_string_pretty(&Report::Signature(s)).unwrap();
    assert_eq!(again.trim_end(), out.stdout.trim_end());
}

#[test]
fn tampered_reports_are_rejected() {
    let out = run(&job(&[
        "signature",
        "--vars",
        "x,y",
        "-f",
        "x^2*y",
        "--format",
        "json",
    ]));
    let bad = out.stdout.replace("\"signature\": -1", "\"signature\": 1");
    assert_ne!(bad, out.stdout);
    assert!(parse_report(&bad).is_err());
    assert!(parse_report("{\"command\": \"nope\"}").is_err());
    assert!(parse_report("").is_err());
}

#[test]
fn exit_codes() {
    let (_, _, code) = acis(&["signature", "--vars", "x,y", "-f", "x^2+"]);
    assert_eq!(code, 2);
    let (_, _, code) = acis(&["signature", "--vars", "x,y", "-f", "x^2+y^2"]);
    assert_eq!(
        code, 2,
        "an isolated singularity is not a one-dimensional locus"
    );
    let (out, _, code) = acis(&[
        "verify",
        "--vars",
        "x,y,z",
        "-f",
        "x^2+y^2-z^2",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("\"holds\": true"));
    let (_, _, code) = acis(&["euler", "--vars", "x,y,z", "-f", "x^3"]);
    assert_eq!(code, 2);
    let (_, _, code) = acis(&["frobnicate", "--vars", "x"]);
    assert_eq!(code, 2);
}

#[test]
fn errors_in_json_mode_are_json() {
    let (out, _, code) = acis(&["hilbert", "--vars", "x,y", "-f", "x^2+", "--format", "json"]);
    assert_eq!(code, 2);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["error"], "parse");
    assert_eq!(v["seed"], 1);
}

#[test]
fn text_output_is_key_value() {
    let (out, _, code) = acis(&["euler", "--vars", "x,y,z", "-f", QUARTIC]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l == "chi_minus: 3"));
    assert!(out.lines().any(|l| l == "chi_plus: 0"));
}

#[test]
fn weights_and_branches() {
    let out = run(&job(&[
        "signature",
        "--vars",
        "x,y,z",
        "--weights",
        "1,2,2",
        "-f",
        "x^2*y-z^2",
        "--format",
        "json",
    ]));
    assert_eq!(out.code, 0, "{}", out.stderr);
    let Report::Signature(s) = parse_report(&out.stdout).unwrap() else {
        panic!()
    };
    assert_eq!(s.signature.abs(), 1);
    let out = run(&job(&[
        "branches", "--vars", "x,y", "-f", "x^2-y^2", "--format", "json",
    ]));
    let Report::Branches(b) = parse_report(&out.stdout).unwrap() else {
        panic!()
    };
    assert_eq!(b.branches, 4);
}

#[test]
fn plot_writes_svg() {
    let (out, _, code) = acis(&["plot", "--vars", "x,y,z", "-f", QUARTIC, "--window", "2"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("<svg") && out.trim_end().ends_with("</svg>"));
    let (again, _, _) = acis(&["plot", "--vars", "x,y,z", "-f", QUARTIC, "--window", "2"]);
    assert_eq!(out, again);
}

#[test]
fn pencil_reports_the_common_signature() {
    let out = run(&job(&[
        "pencil",
        "--vars",
        "x,y,z",
        "--ideal",
        "z*(x^2+y^2)+x^3;z*(x^2+y^2)+y^3",
        "--samples",
        "-1,0,1/3,1,2",
        "--format",
        "json",
    ]));
    assert_eq!(out.code, 0, "{}", out.stderr);
    let Report::Pencil(p) = parse_report(&out.stdout).unwrap() else {
        panic!()
    };
    assert_eq!(p.samples.len(), 5);
    assert_eq!(p.constant, Some(0));
}
