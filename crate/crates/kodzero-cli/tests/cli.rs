//! End-to-end tests of the `kodzero` binary: exit-code contract, output
//! determinism, records mode, and literal round-trips.

use std::process::{Command, Output};

fn kodzero(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kodzero"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).expect("utf-8 stderr")
}

#[test]
fn exit_zero_on_success() {
    let out = kodzero(&["invariants", "CP2#9"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("chi: 12"), "{text}");
    assert!(text.contains("sigma: -8"), "{text}");

    let out = kodzero(&["classify", "CP2#4", "CP2#14"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("verdict: K3 surface"));
}

#[test]
fn exit_two_on_parse_errors() {
    let out = kodzero(&["invariants", "CP2#x"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("cannot parse"));

    // clap usage errors share the exit code
    let out = kodzero(&["no-such-subcommand"]);
    assert_eq!(out.status.code(), Some(2));

    let out = kodzero(&["involution", "[[1,0],[1]]"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exit_three_on_domain_errors() {
    // genus-0 ruled surfaces are outside every operation's domain
    let out = kodzero(&["h1", "M([[1,1],[0,1]],[[1,0],[1,1]];(0,0))"]);
    assert_eq!(out.status.code(), Some(3), "{}", stderr(&out));

    let out = kodzero(&["involution", "[[2,0],[0,2]]"]);
    assert_eq!(out.status.code(), Some(3));

    let out = kodzero(&["enumerate", "--j", "0", "--k", "0", "--bound", "0"]);
    assert_eq!(out.status.code(), Some(3));

    let out = kodzero(&[
        "glue", "--j", "0", "--k", "0", "--form", "even", "--params", "0,0,2,0,0",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn exit_four_on_negative_classification_with_reason() {
    let out = kodzero(&["classify", "CP2#3", "CP2#3"]);
    assert_eq!(out.status.code(), Some(4));
    let text = stdout(&out);
    assert!(text.contains("not Kodaira dimension zero"), "{text}");
    assert!(text.contains("c1^2 = 12 != 0"), "{text}");

    let out = kodzero(&["classify", "CP2#1", "S2xSigma2"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(stdout(&out).contains("hypothesis failure"));
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        vec!["classify", "S2xT2", "S2~xT2", "--format", "records"],
        vec!["enumerate", "--j", "1", "--k", "1", "--bound", "2"],
        vec![
            "enumerate",
            "--j",
            "0",
            "--k",
            "0",
            "--bound",
            "1",
            "--emit-presentations",
            "--format",
            "records",
        ],
    ] {
        let a = kodzero(&args);
        let b = kodzero(&args);
        assert_eq!(a.status.code(), b.status.code());
        assert_eq!(a.stdout, b.stdout, "args {args:?}");
    }
}

#[test]
fn records_mode_is_line_delimited_json() {
    let out = kodzero(&[
        "classify", "S2xT2", "S2xT2", "--bound", "2", "--format", "records",
    ]);
    assert_eq!(out.status.code(), Some(0));
    for line in stdout(&out).lines() {
        let v: serde_json::Value = serde_json::from_str(line).expect("valid JSON line");
        assert!(v.get("verdict").is_some());
        assert_eq!(v["negative"], false);
    }

    let out = kodzero(&[
        "enumerate", "--j", "0", "--k", "1", "--bound", "2", "--format", "records",
    ]);
    for line in stdout(&out).lines() {
        let v: serde_json::Value = serde_json::from_str(line).expect("valid JSON line");
        assert_eq!(v["kind"], "family");
    }
}

#[test]
fn bundle_and_tag_literals_round_trip_through_the_binary() {
    // h1 echoes the bundle literal exactly as parsed
    let literal = "M([[-1,2],[0,-1]],[[1,3],[0,1]];(1,0))";
    let out = kodzero(&["h1", literal]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains(&format!("bundle: {literal}")));

    // every emitted tag parses back to itself
    let out = kodzero(&["enumerate", "--j", "0", "--k", "0", "--bound", "2"]);
    let text = stdout(&out);
    for line in text.lines().skip(1) {
        let tag = kodzero_cli::parse::tag(line.trim()).expect("tag parses");
        assert_eq!(tag.to_string(), line.trim());
    }
}

#[test]
fn help_lists_all_subcommands() {
    let out = kodzero(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for sub in [
        "invariants",
        "classify",
        "normalform",
        "h1",
        "glue",
        "enumerate",
        "involution",
    ] {
        assert!(text.contains(sub), "missing {sub} in help:\n{text}");
    }
}
