use serde_json::Value;

use semigroup_forge_web::{family_sweep_json, ideal_json, semigroup_json};

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn semigroup_report() {
    let v = parse(semigroup_json("3, 4 5").unwrap());
    assert_eq!(v["frobenius"], 2);
    assert_eq!(v["pseudo_frobenius"], serde_json::json!([1, 2]));
    assert_eq!(v["apery"], serde_json::json!([0, 4, 5]));
    assert_eq!(
        v["membership"],
        serde_json::json!([true, false, false, true, true, true])
    );
}

#[test]
fn large_semigroups_skip_the_strip() {
    let v = parse(semigroup_json("89,90,91,99,100").unwrap());
    assert_eq!(v["type"], 15);
    assert_eq!(v["membership"].as_array().unwrap().len(), 801);
    let v = parse(semigroup_json("1009,1013").unwrap());
    assert!(v["membership"].is_null());
}

#[test]
fn bad_input() {
    assert!(semigroup_json("4,6").unwrap_err().contains("not coprime"));
    assert!(semigroup_json("a,b").is_err());
    assert!(semigroup_json("").is_err());
    assert!(semigroup_json("200001,200003").is_err());
    assert!(ideal_json("3,4,5", "magic").is_err());
}

#[test]
fn ideal_report() {
    let v = parse(ideal_json("3,4,5", "saturation").unwrap());
    assert_eq!(v["mu"], 3);
    assert_eq!(v["betti_degrees"][0]["degree"], 8);
    let v = parse(ideal_json("35,36,41,42", "elimination").unwrap());
    assert_eq!(v["mu"], 12);
}

#[test]
fn family_rows() {
    let v = parse(family_sweep_json(4, 2, 4).unwrap());
    let types: Vec<i64> = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["type"].as_i64().unwrap())
        .collect();
    assert_eq!(types, vec![10, 12, 14]);
    let v = parse(family_sweep_json(5, 2, 3).unwrap());
    assert_eq!(v["rows"][1]["mu"], 22);
    assert!(family_sweep_json(6, 2, 3).is_err());
    assert!(family_sweep_json(4, 2, 40).is_err());
}
