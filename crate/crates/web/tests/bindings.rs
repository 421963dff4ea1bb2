use gorenstein_web::{bundled_groups, duality_explorer, molien_explorer, shift_table};
use serde_json::Value;

fn parse(s: String) -> Value {
    serde_json::from_str(&s).expect("bindings return JSON")
}

#[test]
fn duality_explorer_for_taf_d6() {
    let v = parse(duality_explorer("8, 12, 24", "48", 10));
    assert_eq!(v["shift_formula"], 2);
    assert_eq!(v["shift_functional_equation"], 2);
    assert_eq!(v["splitting"], "ParityDisjoint");
    assert_eq!(v["from"], -10);
    let dual = v["dual_part"].as_array().unwrap();
    assert_eq!(dual.len(), 21);
    // Σ^3 r^∨ is 1 in degree 3 and 0 in degrees 4..10
    assert_eq!(dual[13], "1");
    assert!(dual[14..].iter().all(|c| c == "0"));
}

#[test]
fn duality_explorer_reports_bad_input() {
    let v = parse(duality_explorer("8, x", "", 10));
    assert!(v["error"].as_str().unwrap().contains("generators"));
    let v = parse(duality_explorer("", "", 10));
    assert!(v["error"].as_str().unwrap().contains("InvalidPresentation"));
}

#[test]
fn molien_explorer_for_sigma3() {
    let v = parse(molien_explorer("tmf2_s3", "trivial", 68));
    let digits: String = v["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .step_by(4)
        .map(|c| c.as_str().unwrap())
        .collect();
    assert_eq!(digits, "101111212222323333");
    assert_eq!(v["descent"]["descended_gorenstein_shift"], -22);
    assert!(parse(molien_explorer("tmf2_s3", "sparkle", 8))["error"].is_string());
    assert!(parse(molien_explorer("taf_d6_beta", "det", 8))["descent"].is_null());
}

#[test]
fn table_and_group_list() {
    let rows = parse(shift_table());
    assert_eq!(rows.as_array().unwrap().len(), 12);
    assert!(rows.as_array().unwrap().iter().all(|r| r["pass"] == true));
    assert_eq!(parse(bundled_groups()).as_array().unwrap().len(), 5);
}
