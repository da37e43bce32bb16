//! Exit-code contract, report determinism and certificate replay, driven
//! through the built binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_sphere-forge");

fn scripts_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("scripts")
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).env_remove("SPHERE_FORGE_ORDER").output().unwrap()
}

fn run_script(text: &str, extra: &[&str]) -> Output {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "s.sf", text);
    let mut args = vec!["run", p.to_str().unwrap()];
    args.extend(extra);
    run(&args)
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

const SL2: &str = "ring R = Q[x, y];\nscheme A = affine;\ncenter Z = (x, y) on A at (0, 0);\nsupport Z;\nbuild Z as X;\nsmooth X;\n";

const CYCLIC5: &str = "ring R = Q[a, b, c, d, e];\n\
    ideal C = a + b + c + d + e, a*b + b*c + c*d + d*e + e*a, a*b*c + b*c*d + c*d*e + d*e*a + e*a*b, \
    a*b*c*d + b*c*d*e + c*d*e*a + d*e*a*b + e*a*b*c, a*b*c*d*e - 1;\n";

const TOTAL_OVER_S237: &str = "brieskorn 2, 3, 7 as S;\nuse S;\ncenter Z = (x^2, y^3) on S at (0, 0, 0);\n\
    support Z;\nbuild Z as X;\n";

#[test]
fn exit_0_when_everything_passes() {
    let o = run_script(SL2, &["--emit", "json"]);
    assert_eq!(code(&o), 0);
    let r = json(&o);
    assert_eq!(r["report"]["results"][2]["command"], "smooth X");
    assert_eq!(r["report"]["results"][2]["outcome"], "smooth");
}

#[test]
fn shipped_scripts_pass() {
    for entry in std::fs::read_dir(scripts_dir()).unwrap() {
        let p = entry.unwrap().path();
        let o = run(&["run", p.to_str().unwrap()]);
        assert_eq!(code(&o), 0, "{}:\n{}", p.display(), String::from_utf8_lossy(&o.stdout));
    }
}

#[test]
fn exit_1_on_failed_check_with_all_results_reported() {
    let text = "ring R = Q[x, y];\nideal I = x^2, y;\nideal J = x, y;\nequal I, J;\nequal J, J;\n";
    let o = run_script(text, &["--emit", "json"]);
    assert_eq!(code(&o), 1);
    let r = json(&o);
    let results = r["report"]["results"].as_array().unwrap();
    assert_eq!(results.len(), 2);
    assert_eq!(results[0]["verdict"], "fail");
    assert_eq!(results[1]["verdict"], "pass");
}

#[test]
fn expectations_turn_outcomes_into_verdicts() {
    let text = "brieskorn 2, 3, 7 as S;\nsmooth S;\n";
    assert_eq!(code(&run_script(text, &[])), 1);
    assert_eq!(code(&run_script(&text.replace("smooth S", "smooth S expect singular"), &[])), 0);
}

#[test]
fn exit_2_on_step_budget() {
    let o = run_script(&format!("{TOTAL_OVER_S237}smooth X with steps 1;\n"), &["--emit", "json"]);
    assert_eq!(code(&o), 2);
    assert_eq!(json(&o)["report"]["results"][3]["verdict"], "budget");
    let o = run_script(&format!("{CYCLIC5}groebner C;\n"), &["--gb-steps", "5"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn exit_2_on_millisecond_timeout() {
    let o = run_script(&format!("{CYCLIC5}groebner C with timeout 0.001;\n"), &[]);
    assert_eq!(code(&o), 2, "{}", String::from_utf8_lossy(&o.stdout));
    let o = run_script(&format!("{CYCLIC5}groebner C;\n"), &["--timeout", "0.001"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn budget_takes_precedence_over_failure() {
    let text = format!("{TOTAL_OVER_S237}smooth X with steps 1;\nideal I = x;\nequal I, S;\n");
    let o = run_script(&text, &["--emit", "json"]);
    assert_eq!(code(&o), 2);
    let s = &json(&o)["report"]["summary"];
    assert_eq!((s["failed"].as_u64(), s["budget_exhausted"].as_u64()), (Some(1), Some(1)));
}

#[test]
fn exit_3_on_usage_errors() {
    for (text, needle) in [
        ("ideal I = x;", "used before it is declared"),
        ("ring R = Q[x,x];", "appears twice"),
        ("ring R = Q[x]; ideal R = x;", "already declared"),
        ("ring R = Q[x]\nideal I = x;", "expected `;`"),
        ("ring R = Q[x, y]; scheme A = affine; center Z = (x, y) on A at (0, 0); build Z as X;", "not verified"),
        ("brieskorn 2, 4, 5 as S;", "gcd(2,4) = 2"),
    ] {
        let o = run_script(text, &[]);
        assert_eq!(code(&o), 3, "{text}");
        let all = format!("{}{}", String::from_utf8_lossy(&o.stdout), String::from_utf8_lossy(&o.stderr));
        assert!(all.contains(needle), "{text}: {all}");
    }
    assert_eq!(code(&run(&["run", "/nonexistent/script.sf"])), 3);
    assert_eq!(code(&run(&["run"])), 3);
    assert_eq!(code(&run(&["frobnicate"])), 3);
    assert_eq!(code(&run_script(SL2, &["--emit", "yaml"])), 3);
    assert_eq!(code(&run_script(SL2, &["--timeout", "-1"])), 3);
}

#[test]
fn usage_error_takes_precedence_and_stops_execution() {
    let text = format!(
        "{TOTAL_OVER_S237}smooth X with steps 1;\ncenter W = (x, y) on S at (0, 0, 0);\nbuild W as Y;\nsmooth X;\n"
    );
    let o = run_script(&text, &["--emit", "json"]);
    assert_eq!(code(&o), 3);
    let r = json(&o);
    let results = r["report"]["results"].as_array().unwrap();
    assert_eq!(results.len(), 5);
    assert_eq!(results[4]["verdict"], "error");
    assert!(r["report"]["summary"]["aborted"].is_string());
}

#[test]
fn reports_are_deterministic() {
    let text = std::fs::read_to_string(scripts_dir().join("brieskorn.sf")).unwrap()
        + &std::fs::read_to_string(scripts_dir().join("diagonal.sf")).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "s.sf", &text);
    let a = run(&["run", p.to_str().unwrap(), "--emit", "json"]);
    let b = run(&["run", p.to_str().unwrap(), "--emit", "json"]);
    assert_eq!(code(&a), 0, "{}", String::from_utf8_lossy(&a.stdout));
    let (ja, jb) = (json(&a), json(&b));
    assert_eq!(ja["report"].to_string(), jb["report"].to_string());
    assert!(ja["timing"]["total_seconds"].is_number());
}

#[test]
fn emit_both_splits_streams() {
    let o = run_script(SL2, &["--emit", "both"]);
    assert_eq!(code(&o), 0);
    assert!(json(&o)["report"].is_object());
    assert!(String::from_utf8_lossy(&o.stderr).contains("smooth X"));
}

#[test]
fn default_order_comes_from_the_environment() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "s.sf", "ring R = Q[x, y];\nideal I = x^2 - y, x*y - 1;\ngroebner I;\n");
    let go = |order: Option<&str>| {
        let mut c = Command::new(BIN);
        c.args(["run", p.to_str().unwrap(), "--emit", "json"]);
        match order {
            Some(o) => c.env("SPHERE_FORGE_ORDER", o),
            None => c.env_remove("SPHERE_FORGE_ORDER"),
        };
        c.output().unwrap()
    };
    let lex = go(Some("lex"));
    assert_eq!(code(&lex), 0);
    let detail = &json(&lex)["report"]["results"][0]["detail"];
    assert_eq!(detail["order"], "lex");
    assert_eq!(detail["basis"], serde_json::json!(["x - y^2", "y^3 - 1"]));
    assert_eq!(json(&go(None))["report"]["results"][0]["detail"]["order"], "grevlex");
    assert_eq!(code(&go(Some("weird"))), 3);
}

#[test]
fn certificates_replay() {
    let out = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(scripts_dir().join("plane_pairs.sf")).unwrap()
        + "member x^2*y in C1;\n"
        + &std::fs::read_to_string(scripts_dir().join("diagonal.sf")).unwrap();
    let o = run_script(&text, &["--cert-out", out.path().to_str().unwrap(), "--emit", "json"]);
    assert_eq!(code(&o), 0);
    let files: Vec<String> = json(&o)["report"]["results"]
        .as_array()
        .unwrap()
        .iter()
        .filter_map(|e| e["certificate_file"].as_str().map(String::from))
        .collect();
    assert!(files.iter().any(|f| f.ends_with("-membership.sf")), "{files:?}");
    assert!(files.iter().any(|f| f.ends_with("-pair-isomorphism.sf")), "{files:?}");
    assert!(files.len() >= 5, "{files:?}");
    for f in files {
        let p = out.path().join(&f);
        let o = run(&["run", p.to_str().unwrap()]);
        assert_eq!(code(&o), 0, "{f}: {}", String::from_utf8_lossy(&o.stdout));
    }
}

#[test]
fn fmt_prints_canonical_scripts() {
    let o = run_script("ring  R=Q[x,y] ;ideal I = x^2 ,y; dim   I expect 0 ;", &[]);
    assert_eq!(code(&o), 0);
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "s.sf", "ring  R=Q[x,y] ;ideal I = x^2 ,y; dim   I expect 0 ;");
    let o = run(&["fmt", p.to_str().unwrap()]);
    assert_eq!(String::from_utf8_lossy(&o.stdout), "ring R = Q[x, y];\nideal I = x^2, y;\ndim I expect 0;\n");
}
