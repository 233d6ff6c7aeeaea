use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braid-conway")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn comb_prints_the_combed_form() {
    let o = run(&["comb", "x12 x13 x23"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "x13 x23 · x12^1");
}

#[test]
fn chi_routes_agree() {
    for route in ["streaming", "literal"] {
        let o = run(&["chi", "x12 x13", "-N", "6", "--route", route]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o).trim(), "1 + 2t^2");
    }
}

#[test]
fn conway_from_braid_and_fraction() {
    let o = run(&["conway", "x13"]);
    assert_eq!(stdout(&o).trim(), "1 + t^2");
    let o = run(&["conway", "--fraction", "5/3"]);
    assert_eq!(stdout(&o).trim(), "1 - t^2");
    let o = run(&["conway", "x13", "--trace"]);
    let text = stdout(&o);
    assert!(text.contains("fraction:           3/1"), "{text}");
    assert!(text.contains("alexander:          t - 1 + t^-1"), "{text}");
}

#[test]
fn json_output_parses() {
    let o = run(&["--json", "conway", "x12 x13"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v.get("conway").is_some(), "{v}");
    let o = run(&["--json", "verify", "--max-len", "2"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], serde_json::Value::Bool(true));
}

#[test]
fn reduce_reports_symbol() {
    let o = run(&["reduce", "ABC"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).trim_end().ends_with("chi = t^4"));
}

#[test]
fn verify_passes_and_catches_corruption() {
    let o = run(&["verify", "--max-len", "3", "--samples", "20", "--subwords", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("all 279 words agree"), "{}", stdout(&o));
    let o = run(&["verify", "--max-len", "2", "--corrupt"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn bad_input_is_a_usage_error() {
    assert_eq!(run(&["chi", "x99"]).status.code(), Some(2));
    assert_eq!(run(&["conway", "--fraction", "4/2"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn unreachable_precision_exits_three() {
    assert_eq!(run(&["--eps", "0", "associator"]).status.code(), Some(3));
    assert_eq!(run(&["--eps", "1e-30", "conjecture", "-n", "3"]).status.code(), Some(3));
}

#[test]
fn conjecture_table_has_rows() {
    let o = run(&["conjecture", "-n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 1 + 4);
}
