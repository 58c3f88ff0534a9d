//! The files under `fixtures/` are generated from the in-memory fixtures.
//! Run with `AQM_BLESS=1` to rewrite them after an intentional change.

mod common;

use aqm::{serialize_metrics, serialize_model, serialize_requirements};
use aqm_core::fixtures;

fn expected() -> Vec<(&'static str, String)> {
    let ic = fixtures::instrument_cluster();
    let mt = fixtures::maintainability();
    vec![
        ("instrument_cluster.model.json", serialize_model(&ic)),
        ("instrument_cluster.req.json", serialize_requirements(&common::skeleton(&ic))),
        ("instrument_cluster.case_study.req.json", serialize_requirements(&common::case_study(&ic))),
        ("instrument_cluster.metrics.json", serialize_metrics(&common::position_report(&[1.2]))),
        ("maintainability.model.json", serialize_model(&mt)),
        ("maintainability.req.json", serialize_requirements(&common::skeleton(&mt))),
    ]
}

#[test]
fn shipped_files_match_generators() {
    let bless = std::env::var_os("AQM_BLESS").is_some();
    for (name, want) in expected() {
        let path = common::fixtures_dir().join(name);
        if bless {
            std::fs::write(&path, &want).unwrap();
        }
        let got = std::fs::read_to_string(&path).unwrap_or_default();
        assert!(got == want, "{name} is stale; rerun with AQM_BLESS=1");
    }
}

#[test]
fn shipped_files_parse_back() {
    let dir = common::fixtures_dir();
    let read = |n: &str| std::fs::read_to_string(dir.join(n)).unwrap();
    let ic = aqm::parse_model(&read("instrument_cluster.model.json")).unwrap();
    assert_eq!(ic, fixtures::instrument_cluster());
    assert_eq!(ic.activities.len(), 4);
    let mt = aqm::parse_model(&read("maintainability.model.json")).unwrap();
    assert_eq!(mt, fixtures::maintainability());
    for n in ["instrument_cluster.req.json", "instrument_cluster.case_study.req.json"] {
        aqm::load_requirements(&ic, &read(n)).unwrap();
    }
    aqm::load_requirements(&mt, &read("maintainability.req.json")).unwrap();
    assert_eq!(aqm::parse_metrics(&read("instrument_cluster.metrics.json")).unwrap().results[0].value, 1.2);
}
