//! The `repgeo` binary against the files in `data/`.

use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name).display().to_string()
}

fn repgeo(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_repgeo")).args(["--json", "--no-timing"]).args(args).output().unwrap();
    let json =
        serde_json::from_slice(&out.stdout).unwrap_or_else(|_| panic!("{}", String::from_utf8_lossy(&out.stdout)));
    (out.status.code().unwrap(), json)
}

#[test]
fn check_geo_certifies_the_swap_pair() {
    let (code, v) = repgeo(&["check-geo", &data("swap.rep"), &data("swap_klein.rep")]);
    assert_eq!(code, 0);
    assert_eq!(v["outcome"], "equivalent");
    assert_eq!(v["certificate"]["r1_into_r2"]["homs"].as_array().unwrap().len(), 1);
    assert_eq!(v["certificate"]["r2_into_r1"]["homs"].as_array().unwrap().len(), 2);
}

#[test]
fn check_geo_refutes_against_the_trivial_action() {
    let (code, v) = repgeo(&["check-geo", &data("swap.rep"), &data("trivial.rep")]);
    assert_eq!(code, 1);
    assert_eq!(v["outcome"], "not-equivalent");
    assert!(v["witness"]["separating_qid"]["formula"].is_string());
}

#[test]
fn check_at_paths() {
    let (code, v) = repgeo(&["check-at", &data("swap.rep"), &data("swap_klein.rep")]);
    assert_eq!((code, v["outcome"].as_str().unwrap()), (0, "equivalent"));
    assert_eq!(v["certificate"]["r2_kernel"], serde_json::json!(["1", "b"]));

    let (code, v) = repgeo(&["check-at", &data("swap.rep"), &data("trivial.rep")]);
    assert_eq!(code, 1);
    assert_eq!(v["witness"]["candidate"], "x*(y + 1)");
    assert_eq!(v["witness"]["contained_in"], "second");
}

#[test]
fn check_at_reports_unknown_when_the_bounds_are_too_small() {
    let (code, v) = repgeo(&["check-at", &data("swap.rep"), &data("trivial.rep"), "--max-terms", "1"]);
    assert_eq!(code, 2);
    assert_eq!(v["outcome"], "unknown");
    assert_eq!(v["bounds"]["max_terms"], 1);
}

#[test]
fn group_commands() {
    let (code, _) = repgeo(&["check-geo-groups", &data("z2.grp"), &data("klein.grp")]);
    assert_eq!(code, 0);
    let (code, v) = repgeo(&["check-geo-groups", &data("z2.grp"), &data("z3.grp")]);
    assert_eq!(code, 1);
    assert_eq!(v["witness"]["inseparable"]["group_elements"], serde_json::json!(["1", "a"]));
    let (code, v) = repgeo(&["homs", &data("klein.grp"), &data("z2.grp")]);
    assert_eq!((code, v["count"].as_u64()), (0, Some(4)));
    let (_, v) = repgeo(&["homs", "--reps", &data("swap.rep"), &data("swap.rep")]);
    assert_eq!(v["count"], 8);
}

#[test]
fn qid_and_closure() {
    let formula = "x*y - x = 0 => y = 1";
    let (code, v) = repgeo(&["qid", &data("swap.rep"), formula]);
    assert_eq!(code, 1);
    assert_eq!(v["witness"], "x↦(1,1), y↦a");
    let (_, v) = repgeo(&["qid", &data("swap_klein.rep"), formula]);
    assert_eq!(v["witness"], "x↦(0,1), y↦b");
    let (code, _) = repgeo(&["qid", &data("swap.rep"), "y^2 = 1"]);
    assert_eq!(code, 0);

    let sys = data("fixed.sys");
    let (code, _) = repgeo(&["closure", &data("swap.rep"), "--system", &sys, "--member", "x*y^3 - x = 0"]);
    assert_eq!(code, 0);
    let (code, v) = repgeo(&["closure", &data("swap.rep"), "--system", &sys, "--member", "y = 1"]);
    assert_eq!(code, 1);
    // Closure counterexamples are the first failing point in canonical order.
    assert_eq!(v["witness"], "x↦(0,0), y↦a");
}

#[test]
fn faithful_writes_a_parseable_file() {
    let out = std::env::temp_dir().join(format!("repgeo-faithful-{}.rep", std::process::id()));
    let (code, v) = repgeo(&["faithful", &data("swap_klein.rep"), "-o", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["certificate"]["kernel"], serde_json::json!(["1", "b"]));
    let text = std::fs::read_to_string(&out).unwrap();
    let rep = repgeo::textio::parse_rep_file(&text).unwrap();
    assert_eq!(rep.group().order(), 2);
    assert!(rep.is_faithful());
}

#[test]
fn paper_demo_statuses() {
    for p in ["2", "3"] {
        let (code, v) = repgeo(&["paper-demo", "--p", p]);
        assert_eq!(code, 0);
        let statuses: Vec<&str> =
            v["report"]["claims"].as_array().unwrap().iter().map(|c| c["status"].as_str().unwrap()).collect();
        assert_eq!(statuses, ["CONFIRMED", "CONFIRMED", "CONFIRMED", "CONTRADICTED", "CONFIRMED", "CONTRADICTED"]);
    }
}

#[test]
fn errors_carry_a_location() {
    let (code, v) = repgeo(&["qid", &data("swap.rep"), "x*y - = 0"]);
    assert_eq!(code, 3);
    assert_eq!(v["outcome"], "error");
    assert!(v["error"]["at"].is_string());
    let (code, v) = repgeo(&["check-geo", "no/such/file.rep", &data("swap.rep")]);
    assert_eq!(code, 3);
    assert_eq!(v["error"]["at"], "no/such/file.rep");
}

#[test]
fn text_output_mirrors_json() {
    let out = Command::new(env!("CARGO_BIN_EXE_repgeo"))
        .args(["--no-timing", "qid", &data("swap.rep"), "x*y - x = 0 => y = 1"])
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("outcome: fails"));
    assert!(text.contains("witness: x↦(1,1), y↦a"));
}
