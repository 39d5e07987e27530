mod common;

use common::{json, schema};
use gonal_bn::atlas::atlas;
use gonal_bn::rank_one::components_w;
use gonal_bn::rank_two::{classify_b3, classify_fixed_determinant};
use gonal_bn::GonalCurve;
use serde_json::Value;

fn assert_valid(validator: &jsonschema::Validator, instance: &Value, what: &str) {
    let errors: Vec<String> = validator
        .iter_errors(instance)
        .map(|e| format!("{} at {}", e, e.instance_path()))
        .collect();
    assert!(errors.is_empty(), "{what}: {errors:#?}");
}

fn validator(name: &str) -> jsonschema::Validator {
    jsonschema::validator_for(&schema(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

#[test]
fn schemas_are_valid_documents() {
    for name in [
        "wrd_report.schema.json",
        "classifier_report.schema.json",
        "fixed_determinant_report.schema.json",
        "atlas.schema.json",
        "verification_report.schema.json",
    ] {
        validator(name);
    }
}

#[test]
fn wrd_reports_conform() {
    let v = validator("wrd_report.schema.json");
    let s = schema("wrd_report.schema.json");
    let mut component = s["$defs"]["Rank1Component"].clone();
    component["$schema"] = s["$schema"].clone();
    component["$defs"] = s["$defs"].clone();
    let cv = jsonschema::validator_for(&component).unwrap();
    for g in 4..=14 {
        for nu in GonalCurve::gonalities(g) {
            for r in 0..=3 {
                for d in 0..=2 * g {
                    let rep = components_w(g, nu, d, r).unwrap();
                    let inst = serde_json::to_value(&rep).unwrap();
                    assert_valid(&v, &inst, &format!("W({g},{nu},{d},{r})"));
                    for c in rep.components() {
                        assert!(cv.is_valid(&serde_json::to_value(c).unwrap()));
                    }
                }
            }
        }
    }
    let out = json(&[
        "wrd", "--g", "10", "--nu", "3", "--d", "7", "--r", "1", "--format", "json",
    ]);
    assert_valid(&v, &out, "cli wrd");
}

#[test]
fn classifier_reports_conform() {
    let v = validator("classifier_report.schema.json");
    let f = validator("fixed_determinant_report.schema.json");
    for g in 4..=24 {
        for nu in GonalCurve::gonalities(g) {
            for d in 2 * g - 4..=4 * g - 2 {
                let what = format!("({g},{nu},{d})");
                assert_valid(
                    &v,
                    &serde_json::to_value(classify_b3(g, nu, d)).unwrap(),
                    &what,
                );
                assert_valid(
                    &f,
                    &serde_json::to_value(classify_fixed_determinant(g, nu, d)).unwrap(),
                    &what,
                );
            }
        }
    }
    for d in ["10", "40", "55", "75"] {
        let out = json(&["b3", "--g", "20", "--nu", "3", "--d", d, "--format", "json"]);
        assert_valid(&v, &out, d);
        let out = json(&[
            "fixdet", "--g", "20", "--nu", "3", "--d", d, "--format", "json",
        ]);
        assert_valid(&f, &out, d);
    }
}

#[test]
fn atlases_conform() {
    let v = validator("atlas.schema.json");
    for g in 4..=30 {
        for nu in GonalCurve::gonalities(g) {
            let a = serde_json::to_value(atlas(g, nu).unwrap()).unwrap();
            assert_valid(&v, &a, &format!("atlas({g},{nu})"));
        }
    }
    let out = json(&["atlas", "--g", "20", "--nu", "3", "--format", "json"]);
    assert_valid(&v, &out, "cli atlas");
}

#[test]
fn verification_report_conforms() {
    let v = validator("verification_report.schema.json");
    let out = json(&["verify", "--gmax", "9", "--numax", "4"]);
    assert_valid(&v, &out, "cli verify");
    assert!(!v.is_valid(&serde_json::json!({ "g_max": 9 })));
}
