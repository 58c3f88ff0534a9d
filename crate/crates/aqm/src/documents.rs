//! Requirements documents (`.req.json`) and tool reports (`.metrics.json`).

use aqm_core::assurance::MetricReport;
use aqm_core::requirements::validate_requirements;
use aqm_core::{QualityModel, RequirementsDocument};

use crate::error::ParseError;
use crate::json;

pub fn parse_requirements(text: &str) -> Result<RequirementsDocument, ParseError> {
    json::from_text(text)
}

/// Parses and checks the document against `model`.
pub fn load_requirements(model: &QualityModel, text: &str) -> Result<RequirementsDocument, ParseError> {
    let doc = parse_requirements(text)?;
    let diagnostics = validate_requirements(model, &doc);
    if diagnostics.is_empty() {
        Ok(doc)
    } else {
        Err(ParseError::Semantic(diagnostics))
    }
}

pub fn serialize_requirements(doc: &RequirementsDocument) -> String {
    json::to_canonical(doc)
}

pub fn parse_metrics(text: &str) -> Result<MetricReport, ParseError> {
    json::from_text(text)
}

pub fn serialize_metrics(report: &MetricReport) -> String {
    json::to_canonical(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use aqm_core::fixtures;
    use aqm_core::{Code, Comparator, FactRef, NodeId, QuantifiedRequirement, Scope};

    #[test]
    fn requirements_round_trip() {
        let model = fixtures::instrument_cluster();
        let doc = RequirementsDocument::new("instrument_cluster")
            .with_stakeholders(fixtures::instrument_cluster_stakeholders())
            .quantify(
                &model,
                QuantifiedRequirement::threshold(
                    Scope::Fact(FactRef::new(NodeId::from_raw(fixtures::DISPLAY_POSITION), "appropriateness")),
                    "display_tolerance_deg",
                    Comparator::WithinAbs,
                    1.5,
                    "degree",
                ),
            )
            .unwrap();
        let text = serialize_requirements(&doc);
        assert_eq!(load_requirements(&model, &text).unwrap(), doc);
        assert!(text.contains("\"comparator\": \"within_abs\""));
    }

    #[test]
    fn requirements_are_checked_against_the_model() {
        let model = fixtures::maintainability();
        let text = serialize_requirements(&RequirementsDocument::new("instrument_cluster"));
        let err = load_requirements(&model, &text).unwrap_err();
        assert_eq!(err.diagnostics()[0].code, Code::ModelMismatch);
    }

    #[test]
    fn metrics_parse() {
        let report = parse_metrics(
            r#"{"tool": "bench", "results": [{"metric": "m", "entity": "a.b", "value": -1.5}]}"#,
        )
        .unwrap();
        assert_eq!(report.results[0].value, -1.5);
        assert_eq!(parse_metrics(&serialize_metrics(&report)).unwrap(), report);
    }

    #[test]
    fn metric_value_must_be_a_number() {
        let err = parse_metrics(r#"{"tool": "t", "results": [{"metric": "m", "entity": "a", "value": "1"}]}"#)
            .unwrap_err();
        assert!(matches!(err, ParseError::Schema { path, .. } if path == "results[0].value"));
    }
}
