use std::process::{Command, Output};

use serde_json::Value;

fn isob(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_isob"))
        .args(args)
        .env_remove("ISOB_FORMAT")
        .env_remove("ISOB_ORBIT_CAP")
        .env_remove("ISOB_FREUDENTHAL_CAP")
        .env_remove("ISOB_KERNEL_SEARCH_BOUND")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON on stdout")
}

#[test]
fn dim_examples() {
    let o = isob(&["dim", "A", "4", "--ambient", "2,0,0,0,0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "15");
    assert_eq!(stdout(&isob(&["dim", "E", "6", "--fundamental", "1,0,0,0,0,0"])).trim(), "27");
    assert_eq!(stdout(&isob(&["dim", "A", "1", "--fundamental", "0"])).trim(), "1");
    assert_eq!(stdout(&isob(&["dim", "E8", "--fundamental", "0,0,0,0,0,0,0,1"])).trim(), "248");
}

#[test]
fn dim_error_codes() {
    assert_eq!(isob(&["dim", "A", "2", "--fundamental", "-1,0"]).status.code(), Some(3));
    assert_eq!(isob(&["dim", "A", "2", "--fundamental", "x"]).status.code(), Some(2));
    assert_eq!(isob(&["dim", "Q", "2", "--fundamental", "1,0"]).status.code(), Some(2));
    assert_eq!(isob(&["dim", "A", "2"]).status.code(), Some(2));
    assert_eq!(isob(&["dim", "E", "9", "--fundamental", "1"]).status.code(), Some(3));
}

#[test]
fn check_sl_so_5_json() {
    let o = isob(&["check", "sl-so:5", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let r = json(&o);
    assert_eq!(r["verdict"], "NO_EXTENSION");
    assert_eq!(r["dim_p"], 14);
    let bound = r["candidates"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["evidence"]["kind"] == "lower_bound")
        .expect("lower bound record");
    assert_eq!(bound["evidence"]["value"], 50);
}

#[test]
fn check_gap_and_complex() {
    let o = isob(&["check", "e6-f4", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let r = json(&o);
    assert_eq!(r["method"], "DIMENSION_GAP");
    assert_eq!(r["candidates"][0]["evidence"]["value"], 27);
    assert_eq!(r["dim_p"], 26);

    let o = isob(&["check", "complex:G2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let r = json(&o);
    assert_eq!(r["complex"]["d_squared"], 49);
    assert_eq!(r["complex"]["dim_g"], 14);
}

#[test]
fn inconclusive_exit_code() {
    let o = isob(&["check", "so-so:3"]);
    assert_eq!(o.status.code(), Some(10));
    assert!(stdout(&o).contains("INCONCLUSIVE"));
}

#[test]
fn check_parse_error() {
    assert_eq!(isob(&["check", "sl-xx:5"]).status.code(), Some(2));
}

#[test]
fn audit_covers_brute_force() {
    let o = isob(&["check", "sl-so:4", "--audit", "--json", "--kernel-search-bound", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let r = json(&o);
    assert_eq!(r["audit"]["passed"], true);
    assert_eq!(r["audit"]["bound"], 3);
    assert_eq!(r["report"]["verdict"], "NO_EXTENSION");
}

#[test]
fn reports_are_deterministic() {
    let a = isob(&["check", "sl-so:7", "--json"]);
    let b = isob(&["check", "sl-so:7", "--json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn report_json_round_trips() {
    let o = isob(&["check", "sl-sp:3", "--json"]);
    let report: isob_core::obstruction::ObstructionReport = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(serde_json::to_value(&report).unwrap(), json(&o));
}

#[test]
fn verify_pairs_range() {
    let o = isob(&["verify-paper", "--pairs", "sl-so:2..9", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let items = v["items"].as_array().unwrap();
    assert_eq!(items.len(), 8);
    assert!(items.iter().all(|i| i["passed"] == true && i["detail"].as_str().unwrap().starts_with("NO_EXTENSION")));
}

#[test]
fn verify_classification_sample() {
    let o = isob(&["verify-paper", "--classify-sample"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("SU(2,1) = Type1"));
    assert!(s.contains("SL(4,R) = Type2"));
}

#[test]
fn verify_failure_names_the_item() {
    let o = isob(&["verify-paper", "--pairs", "so-so:3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("extension: so-so:3"));
}

#[test]
fn classify_outputs() {
    let o = isob(&["classify", "SU(3,2)", "--json"]);
    assert_eq!(json(&o), serde_json::json!({ "group": "SU(3,2)", "type": "Type1" }));
    let o = isob(&["classify", "E6(-26)", "--json"]);
    assert_eq!(json(&o)["type"], "Type2");
    let o = isob(&["classify", "SO(3,3)", "--json"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(json(&o)["error"], "out_of_table");
    let o = isob(&["classify", "SL(3,R)", "SL(2,C)", "--json"]);
    assert_eq!(json(&o)["type"], "Type2");
    let o = isob(&["classify", "SU(1,1)", "--json"]);
    assert_eq!(json(&o)["notes"].as_array().unwrap().len(), 1);
}

#[test]
fn milnor_wood_outputs() {
    let o = isob(&["milnor-wood", "--k", "1", "--euler-tm", "-2", "--euler-e", "-2", "--json"]);
    let v = json(&o);
    assert_eq!(v["bound"], "1");
    assert_eq!(v["obstructed"], true);
    assert!((v["smillie_ratio"].as_f64().unwrap() - 0.5).abs() < 1e-12);
    let o = isob(&["milnor-wood", "--k", "2", "--euler-tm", "4", "--volume", "0.2689", "--json"]);
    assert!(json(&o)["smillie_ratio"].as_f64().unwrap() > 1.0);
    assert_eq!(isob(&["milnor-wood", "--k", "2", "--euler-tm", "4", "--volume", "-1"]).status.code(), Some(3));
}

#[test]
fn chern_outputs() {
    let o = isob(&["chern", "poly", "--weights", "1;-1"]);
    assert_eq!(stdout(&o), "c0 = 1\nc1 = 0\nc2 = -w1^2\n");
    let o = isob(&["chern", "compare", "2;0;-2", "1;0;-1"]);
    assert_eq!(stdout(&o).trim(), "false");
    let o = isob(&["chern", "poly", "--pair", "sl-sp:3", "--json"]);
    let v = json(&o);
    assert_eq!(v["generators"], 3);
    assert_eq!(v["pieces"].as_array().unwrap().len(), 15);
    assert!(v["pieces"][1].as_object().unwrap().is_empty());
    let o = isob(&["chern", "flat-kernel", "6", "--json"]);
    let v = json(&o);
    assert_eq!(v["kernel_generators"].as_array().unwrap().len(), 3);
    assert_eq!(v["euler"]["square_equals_top_pontryagin"], true);
    let o = isob(&["chern", "compare", "1;0", "1"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn describe_and_pair() {
    let o = isob(&["describe", "G", "2", "--json"]);
    let v = json(&o);
    assert_eq!(v["algebra_dim"], 14);
    assert_eq!(v["cartan_matrix"], serde_json::json!([[2, -1], [-3, 2]]));
    let o = isob(&["pair", "describe", "sl-so:4", "--json"]);
    let v = json(&o);
    assert_eq!(v["dim_p"], 9);
    let o = isob(&["pair", "restrict", "sl-sp:2", "--ambient", "1,1,0,0"]);
    assert_eq!(stdout(&o).trim(), "(1, 1)");
}

#[test]
fn orbit_and_caps() {
    let o = isob(&["orbit", "A", "2", "--fundamental", "1,0"]);
    assert_eq!(stdout(&o).lines().count(), 3);
    let o = Command::new(env!("CARGO_BIN_EXE_isob"))
        .args(["orbit", "A", "2", "--fundamental", "1,0"])
        .env("ISOB_ORBIT_CAP", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_isob"))
        .args(["--orbit-cap", "5", "orbit", "A", "2", "--fundamental", "1,0"])
        .env("ISOB_ORBIT_CAP", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(isob(&["--orbit-cap", "0", "orbit", "A", "2", "--fundamental", "1,0"]).status.code(), Some(2));
    let o = isob(&["freudenthal", "A", "2", "--fundamental", "1,1", "--json"]);
    assert_eq!(json(&o)["total"], 8);
    let o = isob(&["freudenthal", "A", "2", "--fundamental", "3,3", "--freudenthal-cap", "10"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn format_env() {
    let o = Command::new(env!("CARGO_BIN_EXE_isob"))
        .args(["dim", "A", "1", "--fundamental", "2"])
        .env("ISOB_FORMAT", "json")
        .output()
        .unwrap();
    assert_eq!(json(&o)["dim"], "3");
}
