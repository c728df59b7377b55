use super::*;
use crate::exactmath::{rat, ratio};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("jk").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn vectors_parse_with_or_without_brackets() {
    assert_eq!(parse_vector("1,-2, 3/4").unwrap(), vec![rat(1), rat(-2), ratio(3, 4)]);
    assert_eq!(parse_vector("[0, 1]").unwrap(), vec![rat(0), rat(1)]);
    assert!(parse_vector("").unwrap().is_empty());
    assert!(matches!(parse_vector("1,x"), Err(Error::Input { .. })));
}

#[test]
fn zoo_list_prints_six_entries() {
    let (code, out, _) = run(&["zoo", "list"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["entries"].as_array().unwrap().len(), 6);
    assert_eq!(v["schema"], SCHEMA);
    // `--zoo list` is accepted wherever a zoo name is.
    let (code, out2, _) = run(&["check", "--zoo", "list"]);
    assert_eq!(code, 0);
    assert_eq!(out, out2);
}

#[test]
fn non_positive_parameters_are_rejected() {
    for flag in ["--seed", "--trials", "--bound"] {
        let (code, _, err) = run(&["zoo", "list", flag, "0"]);
        assert_eq!(code, EXIT_INPUT, "{flag}");
        assert!(err.contains("positive"));
    }
}

#[test]
fn unknown_zoo_is_an_input_error() {
    let (code, _, err) = run(&["rep", "analyze", "--zoo", "e8"]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("e8"));
}

#[test]
fn analyze_reports_the_heisenberg_type() {
    let (code, out, _) = run(&["rep", "analyze", "--zoo", "h3", "--rep", "coadjoint"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["deg_D"], 2);
    assert_eq!(v["identities"]["eq5"], true);
}

#[test]
fn text_format_renders_the_same_fields() {
    let (code, out, _) = run(&["rep", "analyze", "--zoo", "sl2", "--format", "text"]);
    assert_eq!(code, 0);
    assert!(out.contains("schema: jk-report/1"));
    assert!(out.contains("eps: [1]"));
    assert!(out.contains("k_vert: 2"));
}

#[test]
fn validation_rejects_inconsistent_reports() {
    let good = json!({
        "schema": SCHEMA, "command": "pencil", "shape": [1, 2], "rank": 1, "eps": [1], "eta": [],
        "jordan": [], "k_hor": 2, "k_vert": 0, "deg_D": 0
    });
    assert!(validate_report(&good).is_ok());
    let mut bad = good.clone();
    bad["k_hor"] = json!(3);
    assert!(validate_report(&bad).is_err());
    let mut bad = good.clone();
    bad["shape"] = json!([2, 2]);
    assert!(validate_report(&bad).is_err());
    let mut bad = good;
    bad["schema"] = json!("jk-report/0");
    assert!(validate_report(&bad).is_err());
}

#[test]
fn semiinvariant_command() {
    let (code, out, _) = run(&["rep", "semiinvariant", "--zoo", "aff1"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!((v["degree"].as_u64(), v["degree_via_pencil"].as_u64()), (Some(2), Some(2)));
    let (code, out, _) = run(&["rep", "semiinvariant", "--zoo", "sl2", "--ceiling", "2"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert!(v["symbolic"].as_str().unwrap().contains("ceiling"));
}

#[test]
fn shifts_command_on_sl2() {
    let (code, out, err) = run(&["shifts", "--zoo", "sl2", "--a", "1,2,3"]);
    assert_eq!(code, 0, "{err}");
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["trdeg"]["trdeg"], 2);
    assert_eq!(v["vorontsov"]["equality_branch"], true);
    assert_eq!(v["formal"]["span_stable"], true);
    // Singular origin: formal invariants are unavailable but the rest runs.
    let (code, out, _) = run(&["shifts", "--zoo", "sl2", "--a", "0,0,0"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert!(v["formal"]["unavailable"].is_string());
    let (code, _, _) = run(&["shifts", "--zoo", "sl2", "--a", "1,2"]);
    assert_eq!(code, EXIT_INPUT);
}
