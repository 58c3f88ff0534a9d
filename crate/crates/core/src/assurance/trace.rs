use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::assurance::conformance::{ConformanceReport, Verdict};
use crate::diagnostics::{Code, Diagnostic};
use crate::id::NodeId;
use crate::model::QualityModel;
use crate::requirements::{
    refine, QuantifiedRequirement, Ratings, RefinedRequirement, RequirementsDocument, Scope,
};

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct TracedRequirement {
    pub index: usize,
    pub requirement: QuantifiedRequirement,
    #[cfg_attr(feature = "serde", serde(default, skip_serializing_if = "Option::is_none"))]
    pub verdict: Option<Verdict>,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct TraceRow {
    pub activity: NodeId,
    pub label: String,
    #[cfg_attr(feature = "serde", serde(default, skip_serializing_if = "Option::is_none"))]
    pub ratings: Option<Ratings>,
    pub refined: Vec<RefinedRequirement>,
    pub quantified: Vec<TracedRequirement>,
}

/// Ranked activity → ratings → facts → quantified requirements → verdicts.
#[derive(Debug, Clone, PartialEq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct TraceabilityReport {
    pub rows: Vec<TraceRow>,
    #[cfg_attr(feature = "serde", serde(default, skip_serializing_if = "Vec::is_empty"))]
    pub diagnostics: Vec<Diagnostic>,
}

/// Builds one row per ranked activity.
///
/// A fact-level requirement lands in every row whose subtree the fact
/// impacts; an activity-level requirement lands in every row whose subtree
/// contains its activity.
pub fn trace(
    model: &QualityModel,
    doc: &RequirementsDocument,
    latest: Option<&ConformanceReport>,
) -> TraceabilityReport {
    let mut diagnostics = Vec::new();
    let mut traced = alloc::vec![false; doc.quantified.len()];
    let mut rows = Vec::with_capacity(doc.ranking.ordered.len());

    for (r, activity) in doc.ranking.ordered.iter().enumerate() {
        let refined = match refine(model, activity) {
            Ok(refined) => refined,
            Err(e) => {
                diagnostics.push(Diagnostic::error(
                    Code::UnknownActivity,
                    format!("ranking.ordered[{r}]"),
                    format!("{e}"),
                ));
                Vec::new()
            }
        };
        let quantified = doc
            .quantified
            .iter()
            .enumerate()
            .filter(|(_, q)| match &q.scope {
                Scope::Fact(fact) => refined.iter().any(|x| x.fact == *fact),
                Scope::Activity(a) => a.is_within(activity),
            })
            .map(|(i, q)| {
                traced[i] = true;
                TracedRequirement {
                    index: i,
                    requirement: q.clone(),
                    verdict: latest.and_then(|c| c.verdict_of(i)),
                }
            })
            .collect();
        rows.push(TraceRow {
            activity: activity.clone(),
            label: String::from(model.activity_label(activity)),
            ratings: doc.effective_ratings(activity),
            refined,
            quantified,
        });
    }

    for (i, hit) in traced.into_iter().enumerate() {
        if !hit {
            diagnostics.push(Diagnostic::warning(
                Code::UntracedRequirement,
                format!("quantified[{i}]"),
                format!("`{}` impacts no ranked activity", doc.quantified[i]),
            ));
        }
    }
    TraceabilityReport { rows, diagnostics }
}
