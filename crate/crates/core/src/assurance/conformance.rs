//! Evaluation of quantified requirements against quality-analysis tool
//! reports keyed by entity path.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::diagnostics::{Code, Diagnostic};
use crate::id::NodeId;
use crate::model::QualityModel;
use crate::requirements::{Measure, QuantifiedRequirement, RequirementsDocument, Scope};

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(deny_unknown_fields))]
pub struct MetricResult {
    pub metric: String,
    pub entity: NodeId,
    pub value: f64,
}

/// Output of one analysis tool.
#[derive(Debug, Clone, PartialEq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(deny_unknown_fields))]
pub struct MetricReport {
    pub tool: String,
    pub results: Vec<MetricResult>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Verdict {
    Pass,
    Fail,
    NoData,
    ManualOnly,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::NoData => "no_data",
            Verdict::ManualOnly => "manual_only",
        }
    }
}

/// One matching tool result and how it fared.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ResultCheck {
    pub entity: NodeId,
    pub value: f64,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Evaluation {
    /// Position of the requirement in the document's `quantified` list.
    pub index: usize,
    pub requirement: QuantifiedRequirement,
    #[cfg_attr(feature = "serde", serde(default, skip_serializing_if = "Option::is_none"))]
    pub observed: Option<f64>,
    pub verdict: Verdict,
    #[cfg_attr(feature = "serde", serde(default, skip_serializing_if = "Vec::is_empty"))]
    pub results: Vec<ResultCheck>,
}

#[derive(Debug, Clone, PartialEq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ConformanceReport {
    pub tool: String,
    pub evaluations: Vec<Evaluation>,
    pub diagnostics: Vec<Diagnostic>,
}

impl ConformanceReport {
    pub fn has_failures(&self) -> bool {
        self.evaluations.iter().any(|e| e.verdict == Verdict::Fail)
    }

    pub fn verdict_of(&self, index: usize) -> Option<Verdict> {
        self.evaluations
            .iter()
            .find(|e| e.index == index)
            .map(|e| e.verdict)
    }
}

fn matches(req: &QuantifiedRequirement, result: &MetricResult) -> bool {
    let Some(metric) = req.metric() else {
        return false;
    };
    metric == result.metric
        && match &req.scope {
            Scope::Fact(fact) => fact.entity == result.entity,
            Scope::Activity(_) => true,
        }
}

fn evaluate_one(index: usize, req: &QuantifiedRequirement, results: &[&MetricResult]) -> Evaluation {
    let (comparator, threshold, nominal) = match &req.measure {
        Measure::Constraint(_) => {
            return Evaluation {
                index,
                requirement: req.clone(),
                observed: None,
                verdict: Verdict::ManualOnly,
                results: Vec::new(),
            }
        }
        Measure::Threshold {
            comparator,
            threshold,
            nominal,
            ..
        } => (*comparator, *threshold, nominal.unwrap_or(0.0)),
    };

    let mut checks: Vec<ResultCheck> = results
        .iter()
        .filter(|r| matches(req, r))
        .map(|r| ResultCheck {
            entity: r.entity.clone(),
            value: r.value,
            verdict: if comparator.holds(r.value, threshold, nominal) {
                Verdict::Pass
            } else {
                Verdict::Fail
            },
        })
        .collect();
    // Canonical order keeps the report independent of the tool's output order.
    checks.sort_by(|a, b| {
        a.entity
            .cmp(&b.entity)
            .then_with(|| a.value.total_cmp(&b.value))
            .then_with(|| a.verdict.cmp(&b.verdict))
    });

    let verdict = if checks.is_empty() {
        Verdict::NoData
    } else if checks.iter().any(|c| c.verdict == Verdict::Fail) {
        Verdict::Fail
    } else {
        Verdict::Pass
    };
    let observed = checks.iter().find(|c| c.verdict == verdict).map(|c| c.value);
    Evaluation {
        index,
        requirement: req.clone(),
        observed,
        verdict,
        results: checks,
    }
}

/// Evaluates every quantified requirement of `doc` against `report`.
///
/// Fact-level requirements only match results for exactly the fact's entity;
/// activity-level requirements match any result of their metric. With several
/// matching results a single failure fails the requirement.
pub fn evaluate(model: &QualityModel, doc: &RequirementsDocument, report: &MetricReport) -> ConformanceReport {
    let mut diagnostics = Vec::new();
    let mut mapped: Vec<&MetricResult> = Vec::new();
    for (i, result) in report.results.iter().enumerate() {
        if !model.has_entity(&result.entity) {
            diagnostics.push(Diagnostic::warning(
                Code::UnmappedResult,
                format!("results[{i}]"),
                format!("entity `{}` is not in the model", result.entity),
            ));
        } else if !doc.quantified.iter().any(|q| matches(q, result)) {
            diagnostics.push(Diagnostic::warning(
                Code::UnmappedResult,
                format!("results[{i}]"),
                format!(
                    "no quantified requirement uses metric `{}` on `{}`",
                    result.metric, result.entity
                ),
            ));
        } else {
            mapped.push(result);
        }
    }

    let evaluations = doc
        .quantified
        .iter()
        .enumerate()
        .map(|(i, req)| evaluate_one(i, req, &mapped))
        .collect();

    ConformanceReport {
        tool: report.tool.clone(),
        evaluations,
        diagnostics,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{self, DISPLAY_POSITION, OUTPUT_REPRESENTATION};
    use crate::model::FactRef;
    use crate::requirements::Comparator;
    use alloc::vec;

    fn doc() -> RequirementsDocument {
        let position = FactRef::new(NodeId::from_raw(DISPLAY_POSITION), "appropriateness");
        let unambiguous = FactRef::new(NodeId::from_raw(OUTPUT_REPRESENTATION), "unambiguousness");
        let mut doc = RequirementsDocument::new("instrument_cluster");
        doc.quantified = vec![
            QuantifiedRequirement::threshold(
                Scope::Fact(position),
                "display_tolerance_deg",
                Comparator::WithinAbs,
                1.5,
                "degree",
            ),
            QuantifiedRequirement::constraint(Scope::Fact(unambiguous), "own place for the engine control light"),
        ];
        doc
    }

    fn report(values: &[(&str, f64)]) -> MetricReport {
        MetricReport {
            tool: "bench".into(),
            results: values
                .iter()
                .map(|(entity, value)| MetricResult {
                    metric: "display_tolerance_deg".into(),
                    entity: NodeId::from_raw(*entity),
                    value: *value,
                })
                .collect(),
        }
    }

    fn verdict(values: &[(&str, f64)]) -> Verdict {
        evaluate(&fixtures::instrument_cluster(), &doc(), &report(values)).evaluations[0].verdict
    }

    #[test]
    fn tolerance_arithmetic() {
        assert_eq!(verdict(&[(DISPLAY_POSITION, 1.2)]), Verdict::Pass);
        assert_eq!(verdict(&[(DISPLAY_POSITION, -1.6)]), Verdict::Fail);
        assert_eq!(verdict(&[]), Verdict::NoData);
    }

    #[test]
    fn constraints_are_manual_only() {
        let r = evaluate(&fixtures::instrument_cluster(), &doc(), &report(&[(DISPLAY_POSITION, 0.0)]));
        assert_eq!(r.evaluations[1].verdict, Verdict::ManualOnly);
        assert_eq!(r.evaluations[1].observed, None);
    }

    #[test]
    fn worst_result_wins() {
        let r = evaluate(
            &fixtures::instrument_cluster(),
            &doc(),
            &report(&[(DISPLAY_POSITION, 0.3), (DISPLAY_POSITION, 2.0), (DISPLAY_POSITION, 1.0)]),
        );
        let e = &r.evaluations[0];
        assert_eq!(e.verdict, Verdict::Fail);
        assert_eq!(e.observed, Some(2.0));
        assert_eq!(e.results.len(), 3);
        assert!(r.has_failures());
    }

    #[test]
    fn unmapped_results_become_diagnostics() {
        let r = evaluate(
            &fixtures::instrument_cluster(),
            &doc(),
            &report(&[("vehicle.tics.hardware.display.rev_meter", 0.1), (DISPLAY_POSITION, 1.0)]),
        );
        assert_eq!(r.diagnostics.len(), 1);
        assert_eq!(r.diagnostics[0].code, Code::UnmappedResult);
        assert_eq!(r.diagnostics[0].path, "results[0]");
        assert_eq!(r.evaluations[0].verdict, Verdict::Pass);
    }

    #[test]
    fn parent_entity_results_do_not_match() {
        assert_eq!(verdict(&[("vehicle.tics.hardware.display", 9.0)]), Verdict::NoData);
    }
}
