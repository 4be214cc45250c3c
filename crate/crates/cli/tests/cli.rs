use std::io::Write;
use std::process::Command;

use ciext_cli::ast::{BinOp, Expr, Ident, QuotientDecl, Script, Span, Stmt};
use ciext_cli::commands::EngineCommand;
use ciext_cli::report::{Output, Status, SCHEMA};
use ciext_cli::{parse_script, printer, run_script};
use num_bigint::BigInt;
use proptest::prelude::*;
use serde_json::Value;

const INTRO: &str = "ring Q = rationals[x1^1, x2^1];
quotient R = Q/(x1*x2);
module M = R/(x1);
module N = R/(x2);
";

fn script_file(src: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::Builder::new()
        .suffix(".ciext")
        .tempfile()
        .unwrap();
    f.write_all(src.as_bytes()).unwrap();
    f
}

fn ciext(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_ciext"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn run(src: &str) -> Vec<Output> {
    run_script(src, "test.ciext", None, &mut |_| {}).unwrap()
}

#[test]
fn intro_ext_table_alternates() {
    let outs = run(&format!("{INTRO}ext M N --max-step 10;"));
    let lengths: Vec<&str> = outs[0].json["result"]["lengths"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    assert_eq!(
        lengths,
        ["0", "1", "0", "1", "0", "1", "0", "1", "0", "1", "0"]
    );
}

#[test]
fn intro_verify_dimension_criterion_is_consistent() {
    let f = script_file(&format!("{INTRO}verify cor4.4 M N;"));
    let (code, stdout, _) = ciext(&["run", f.path().to_str().unwrap()]);
    assert_eq!(code, 0, "{stdout}");
    assert!(stdout.contains("consistent"), "{stdout}");
}

#[test]
fn gen_pair_over_two_squares_has_complexity_two() {
    let src =
        "ring Q = rationals[x, y];\nquotient R = Q/(x^2, y^2);\ngen-pair --ring R --i 2 --j 1;\n";
    let outs = run(src);
    let r = &outs[0].json["result"];
    assert_eq!(r["predicted_cx"], 2);
    assert_eq!(r["measured_cx"], 2);
}

#[test]
fn inhomogeneous_entry_exits_one_with_position() {
    let f = script_file(&format!(
        "{INTRO}module Z = coker(R(0) <- R(-1) : [[x1 + 1]]);\n"
    ));
    let path = f.path().to_str().unwrap();
    let (code, _, stderr) = ciext(&["check", path]);
    assert_eq!(code, 1);
    assert!(stderr.contains(&format!("{path}:5:36")), "{stderr}");
    assert!(stderr.contains("not homogeneous"), "{stderr}");
    assert!(stderr.contains("= hint:"), "{stderr}");
}

#[test]
fn betti_csv_header_and_rows() {
    let f = script_file(INTRO);
    let (code, stdout, _) = ciext(&[
        "--script",
        f.path().to_str().unwrap(),
        "betti",
        "M",
        "N",
        "--max-step",
        "6",
    ]);
    assert_eq!(code, 0);
    let mut lines = stdout.lines();
    assert_eq!(lines.next(), Some("i,beta,parity"));
    for line in lines {
        let cols: Vec<&str> = line.split(',').collect();
        let i: usize = cols[0].parse().unwrap();
        assert_eq!(cols[1], if i % 2 == 1 { "1" } else { "0" });
        assert_eq!(cols[2], if i % 2 == 1 { "odd" } else { "even" });
    }
}

#[test]
fn json_envelope_is_complete() {
    let f = script_file(INTRO);
    let (code, stdout, _) = ciext(&[
        "--json",
        "--script",
        f.path().to_str().unwrap(),
        "superficial",
        "M",
        "N",
    ]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["schema"], SCHEMA);
    assert_eq!(v["command"], "superficial");
    assert!(v["engine_version"].is_string());
    assert!(v["seed"].is_u64());
    assert!(v["bounds"]["max_step"].is_u64());
    assert!(v["bounds"]["window"].is_u64());
    assert!(v["heuristic"].is_boolean());
    assert!(v["warnings"].is_array());
    assert_eq!(v["pair"]["m"], "M");
}

#[test]
fn report_envelope_validates_against_documented_keys() {
    let schema: Value = serde_json::from_str(include_str!("../../../docs/report.schema.json"))
        .expect("schema is valid JSON");
    let required: Vec<&str> = schema["required"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    let cmd = EngineCommand::Complexity(ciext_cli::commands::PairArgs {
        m: "M".into(),
        n: "N".into(),
        max_step: None,
        fext_finite: false,
    });
    let outs = run_script(INTRO, "intro", Some(&cmd), &mut |_| {}).unwrap();
    let obj = outs[0].json.as_object().unwrap();
    for key in &required {
        assert!(obj.contains_key(*key), "missing {key}");
    }
    assert_eq!(obj.len(), schema["properties"].as_object().unwrap().len());
}

#[test]
fn missing_assertion_is_a_usage_error() {
    let f = script_file(&format!("{INTRO}verify rank-orders M N;"));
    let (code, _, stderr) = ciext(&["run", f.path().to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(stderr.contains("regular-in-codim"), "{stderr}");
}

#[test]
fn report_runs_every_theorem_and_is_consistent() {
    let outs = run(&format!("{INTRO}report M N --json;"));
    assert_eq!(outs[0].status, Status::Ok);
    assert!(outs[0].prefer_json);
    let text = &outs[0].text;
    assert!(text.contains("order-criterion"), "{text}");
    assert!(!text.contains("violation"), "{text}");
}

#[test]
fn mixed_fields_are_rejected() {
    let src = "ring A = rationals[x];\nring B = gf(101)[y];\n";
    let err = run_script(src, "mixed", None, &mut |_| {})
        .unwrap_err()
        .to_string();
    assert!(err.contains("mixed:2:6"), "{err}");
}

#[test]
fn fmt_output_reparses() {
    let f = script_file(&format!(
        "{INTRO}module K = coker(R(0) + R(1)^2 <- R(-1) : [[x1], [-x2], [0]]);\next M N;\n"
    ));
    let (code, stdout, _) = ciext(&["fmt", f.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(
        parse_script(&stdout, "fmt").unwrap(),
        parse_script(&std::fs::read_to_string(f.path()).unwrap(), "src").unwrap()
    );
}

fn sp() -> Span {
    Span::new(0, 0)
}

fn ident(name: &str) -> Ident {
    Ident {
        name: name.into(),
        span: sp(),
    }
}

fn expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        (0u64..1000).prop_map(|n| Expr::Num(BigInt::from(n), sp())),
        prop::sample::select(vec!["x", "y", "z"]).prop_map(|v| Expr::Var(ident(v))),
    ];
    leaf.prop_recursive(5, 40, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|e| Expr::Neg(Box::new(e), sp())),
            (inner.clone(), 1u32..5).prop_map(|(e, k)| Expr::Pow(Box::new(e), k, sp())),
            (
                prop::sample::select(vec![BinOp::Add, BinOp::Sub, BinOp::Mul, BinOp::Div]),
                inner.clone(),
                inner
            )
                .prop_map(|(op, l, r)| Expr::Bin(op, Box::new(l), Box::new(r), sp())),
        ]
    })
}

proptest! {
    #[test]
    fn printed_expressions_reparse_identically(gens in prop::collection::vec(expr(), 1..4)) {
        let mut script = parse_script("ring Q = rationals[x, y, z];\nquotient R = Q/(x);\n", "base").unwrap();
        script.stmts[1] = Stmt::Quotient(QuotientDecl { name: ident("R"), base: ident("Q"), gens, span: sp() });
        let printed = printer::print_script(&script);
        let reparsed: Script = parse_script(&printed, "printed").unwrap();
        prop_assert_eq!(reparsed, script);
    }
}
