use gonal_bn::atlas::{atlas, Atlas};
use gonal_bn::oracle::{crosscheck_tables, VerificationReport};
use gonal_bn::rank_one::{components_w, WrdReport};
use gonal_bn::rank_two::{
    classify_b3, classify_fixed_determinant, ClassifierReport, FixedDeterminantReport,
};
use serde::de::DeserializeOwned;
use serde::Serialize;

fn roundtrip<T: Serialize + DeserializeOwned + PartialEq + std::fmt::Debug>(x: &T) {
    let text = serde_json::to_string(x).unwrap();
    let back: T = serde_json::from_str(&text).unwrap();
    assert_eq!(&back, x);
}

#[test]
fn reports_roundtrip() {
    for (g, nu, d, r) in [
        (10, 3, 7, 1),
        (12, 4, 9, 2),
        (10, 3, 11, 1),
        (12, 4, 7, 2),
        (20, 5, 17, 3),
    ] {
        roundtrip::<WrdReport>(&components_w(g, nu, d, r).unwrap());
    }
    for (g, nu) in [(20, 3), (16, 5), (9, 3), (4, 3)] {
        for d in 2 * g - 4..=4 * g - 2 {
            roundtrip::<ClassifierReport>(&classify_b3(g, nu, d));
            roundtrip::<FixedDeterminantReport>(&classify_fixed_determinant(g, nu, d));
        }
        roundtrip::<Atlas>(&atlas(g, nu).unwrap());
    }
    roundtrip::<VerificationReport>(&crosscheck_tables(8, 4, 3).unwrap());
}

#[test]
fn stable_field_names() {
    let v = serde_json::to_value(classify_b3(20, 3, 40)).unwrap();
    for key in [
        "g",
        "nu",
        "d",
        "status",
        "components",
        "rho",
        "unknowns",
        "empties",
        "excluded_types",
    ] {
        assert!(v.get(key).is_some(), "{key}");
    }
    let c = &v["components"][0];
    for key in [
        "family",
        "dim",
        "rho",
        "regularity",
        "clause",
        "presentation",
    ] {
        assert!(c.get(key).is_some(), "{key}");
    }
    assert_eq!(c["family"], "FirstType_1a");
    assert_eq!(v["status"], "HasComponents");
}
