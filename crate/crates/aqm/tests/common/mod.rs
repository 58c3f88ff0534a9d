#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use aqm_core::assurance::{MetricReport, MetricResult};
use aqm_core::{
    fixtures, rank_activities, refine, Comparator, FactRef, NodeId, QualityModel, QuantifiedRequirement,
    Ratings, RequirementsDocument, Scope,
};

pub const CASE_STUDY_ORDER: [&str; 4] = ["driving", "tics_dialog", "defect_correction", "system_integration"];

pub const ENGINE_LIGHT: &str = "the engine control light must not be placed in the digital display \
among other information; an own place in the instrument cluster increases its importance";

pub fn fixtures_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

pub fn id(s: &str) -> NodeId {
    NodeId::parse(s).unwrap()
}

pub fn skeleton(model: &QualityModel) -> RequirementsDocument {
    let stakeholders = match model.name.as_str() {
        "instrument_cluster" => fixtures::instrument_cluster_stakeholders(),
        _ => fixtures::maintainability_stakeholders(),
    };
    RequirementsDocument::new(model.name.clone()).with_stakeholders(stakeholders)
}

pub fn position_tolerance() -> QuantifiedRequirement {
    QuantifiedRequirement::threshold(
        Scope::Fact(FactRef::new(id(fixtures::DISPLAY_POSITION), "appropriateness")),
        "display_tolerance_deg",
        Comparator::WithinAbs,
        1.5,
        "degree",
    )
}

/// rank → set_qualitative → refine → quantify on the instrument cluster.
pub fn case_study(model: &QualityModel) -> RequirementsDocument {
    let order: Vec<NodeId> = CASE_STUDY_ORDER.iter().map(|s| id(s)).collect();
    let derived = aqm_core::requirements::derive_activities(model, &fixtures::instrument_cluster_stakeholders()).unwrap();
    let mut doc = skeleton(model).with_ranking(rank_activities(&derived, &order, order.len()).unwrap());
    for (activity, ratings) in fixtures::instrument_cluster_ratings() {
        doc = doc.set_qualitative(&activity, Ratings::Listed(ratings)).unwrap();
    }
    for a in ["driving", "tics_dialog"] {
        doc = doc.add_refined(refine(model, &id(a)).unwrap());
    }
    doc.quantify(model, position_tolerance())
        .unwrap()
        .quantify(
            model,
            QuantifiedRequirement::constraint(
                Scope::Fact(FactRef::new(id(fixtures::OUTPUT_REPRESENTATION), "unambiguousness")),
                ENGINE_LIGHT,
            ),
        )
        .unwrap()
}

pub fn position_report(values: &[f64]) -> MetricReport {
    MetricReport {
        tool: "display_bench".into(),
        results: values
            .iter()
            .map(|v| MetricResult {
                metric: "display_tolerance_deg".into(),
                entity: id(fixtures::DISPLAY_POSITION),
                value: *v,
            })
            .collect(),
    }
}

pub fn aqm(args: &[&str], cwd: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_aqm"))
        .args(args)
        .current_dir(cwd)
        .env("AQM_NO_COLOR", "1")
        .output()
        .expect("aqm runs")
}

pub fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

pub fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

pub fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}
