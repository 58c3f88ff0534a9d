//! Elicitation and refinement of quality requirements against a model:
//! stakeholders, activity ranking, qualitative ratings, refinement along the
//! impacts and quantification.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::diagnostics::{Code, Diagnostic};
use crate::id::NodeId;
use crate::model::{attribute_label, Direction, FactRef, NotFound, QualityModel};

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(deny_unknown_fields))]
pub struct Stakeholder {
    pub id: String,
    pub label: String,
    /// Roots of the activity subtrees this stakeholder performs.
    pub activities: Vec<NodeId>,
}

/// Activities ordered by importance, most important first. Activities at
/// positions `>= cutoff` default to don't-care.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(deny_unknown_fields))]
pub struct ActivityRanking {
    pub ordered: Vec<NodeId>,
    pub cutoff: usize,
}

impl ActivityRanking {
    pub fn position(&self, activity: &NodeId) -> Option<usize> {
        self.ordered.iter().position(|a| a == activity)
    }

    pub fn contains(&self, activity: &NodeId) -> bool {
        self.position(activity).is_some()
    }

    pub fn is_default_dont_care(&self, activity: &NodeId) -> bool {
        self.position(activity).is_some_and(|p| p >= self.cutoff)
    }
}

/// How well an activity should be supported.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Ratings {
    DontCare,
    Listed(Vec<String>),
}

impl Ratings {
    pub fn listed<I, S>(items: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Ratings::Listed(items.into_iter().map(Into::into).collect())
    }
}

impl fmt::Display for Ratings {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ratings::DontCare => f.write_str("don't care"),
            Ratings::Listed(items) => f.write_str(&items.join(", ")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(deny_unknown_fields))]
pub struct QualitativeRequirement {
    pub activity: NodeId,
    pub ratings: Ratings,
}

/// A requirement on a fact obtained by following an impact backwards from
/// `activity`. `via` is the impacted activity, `activity` itself or one of its
/// descendants.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(deny_unknown_fields))]
pub struct RefinedRequirement {
    pub activity: NodeId,
    pub via: NodeId,
    pub fact: FactRef,
    pub direction: Direction,
    pub statement: String,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case", deny_unknown_fields))]
pub enum Scope {
    Fact(FactRef),
    Activity(NodeId),
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scope::Fact(fact) => write!(f, "fact {fact}"),
            Scope::Activity(a) => write!(f, "activity {a}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Comparator {
    Le,
    Ge,
    Lt,
    Gt,
    Eq,
    /// `|value - nominal| <= threshold`
    WithinAbs,
}

impl Comparator {
    pub fn as_str(self) -> &'static str {
        match self {
            Comparator::Le => "le",
            Comparator::Ge => "ge",
            Comparator::Lt => "lt",
            Comparator::Gt => "gt",
            Comparator::Eq => "eq",
            Comparator::WithinAbs => "within_abs",
        }
    }

    pub fn holds(self, value: f64, threshold: f64, nominal: f64) -> bool {
        match self {
            Comparator::Le => value <= threshold,
            Comparator::Ge => value >= threshold,
            Comparator::Lt => value < threshold,
            Comparator::Gt => value > threshold,
            Comparator::Eq => value == threshold,
            Comparator::WithinAbs => {
                let deviation = value - nominal;
                let magnitude = if deviation < 0.0 { -deviation } else { deviation };
                magnitude <= threshold
            }
        }
    }
}

impl core::str::FromStr for Comparator {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "le" => Comparator::Le,
            "ge" => Comparator::Ge,
            "lt" => Comparator::Lt,
            "gt" => Comparator::Gt,
            "eq" => Comparator::Eq,
            "within_abs" => Comparator::WithinAbs,
            other => return Err(format!("unknown comparator `{other}`")),
        })
    }
}

/// What a quantified requirement demands.
#[derive(Debug, Clone, PartialEq)]
pub enum Measure {
    Threshold {
        metric: String,
        comparator: Comparator,
        threshold: f64,
        /// Reference point for `within_abs`; zero when absent.
        nominal: Option<f64>,
        unit: String,
    },
    /// A requirement that has no numeric form; it can only be checked by review.
    Constraint(String),
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(
    feature = "serde",
    serde(try_from = "wire::QuantifiedWire", into = "wire::QuantifiedWire")
)]
pub struct QuantifiedRequirement {
    pub scope: Scope,
    pub measure: Measure,
}

impl QuantifiedRequirement {
    pub fn threshold(
        scope: Scope,
        metric: impl Into<String>,
        comparator: Comparator,
        threshold: f64,
        unit: impl Into<String>,
    ) -> Self {
        QuantifiedRequirement {
            scope,
            measure: Measure::Threshold {
                metric: metric.into(),
                comparator,
                threshold,
                nominal: None,
                unit: unit.into(),
            },
        }
    }

    pub fn constraint(scope: Scope, text: impl Into<String>) -> Self {
        QuantifiedRequirement {
            scope,
            measure: Measure::Constraint(text.into()),
        }
    }

    pub fn metric(&self) -> Option<&str> {
        match &self.measure {
            Measure::Threshold { metric, .. } => Some(metric),
            Measure::Constraint(_) => None,
        }
    }
}

impl fmt::Display for QuantifiedRequirement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.measure {
            Measure::Threshold {
                metric,
                comparator,
                threshold,
                nominal,
                unit,
            } => {
                write!(f, "{}: {metric} {} {threshold} {unit}", self.scope, comparator.as_str())?;
                if let Some(n) = nominal {
                    write!(f, " (nominal {n})")?;
                }
                Ok(())
            }
            Measure::Constraint(text) => write!(f, "{}: {text}", self.scope),
        }
    }
}

/// Accumulated output of the five elicitation and refinement steps.
#[derive(Debug, Clone, PartialEq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(deny_unknown_fields))]
pub struct RequirementsDocument {
    pub model_name: String,
    pub stakeholders: Vec<Stakeholder>,
    pub ranking: ActivityRanking,
    pub qualitative: Vec<QualitativeRequirement>,
    pub refined: Vec<RefinedRequirement>,
    pub quantified: Vec<QuantifiedRequirement>,
}

fn join_ids(ids: &[NodeId]) -> String {
    ids.iter().map(NodeId::as_str).collect::<Vec<_>>().join(", ")
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PipelineError {
    #[error("stakeholder `{stakeholder}` names unknown activity `{activity}`")]
    UnresolvedActivity { stakeholder: String, activity: NodeId },
    #[error("ordering is not a permutation of the activities (missing: [{}], extra: [{}], duplicate: [{}])", join_ids(.missing), join_ids(.extra), join_ids(.duplicate))]
    NotPermutation {
        missing: Vec<NodeId>,
        extra: Vec<NodeId>,
        duplicate: Vec<NodeId>,
    },
    #[error("cutoff {cutoff} exceeds the number of ranked activities ({len})")]
    CutoffOutOfRange { cutoff: usize, len: usize },
    #[error("activity `{0}` is not ranked")]
    NotRanked(NodeId),
    #[error("ratings for `{0}` are empty; use don't-care instead")]
    EmptyRatings(NodeId),
    #[error(transparent)]
    NotFound(#[from] NotFound),
    #[error("fact `{0}` is not declared in the model")]
    UnknownFact(FactRef),
    #[error("fact `{0}` is not quantifiable; extend the model with a metric")]
    NotQuantifiable(FactRef),
    #[error("fact `{fact}` declares metric `{declared}`, not `{requested}`")]
    MetricMismatch {
        fact: FactRef,
        declared: String,
        requested: String,
    },
    #[error("metric `{metric}` is measured in `{expected}`, not `{found}`")]
    UnitMismatch {
        metric: String,
        expected: String,
        found: String,
    },
    #[error("threshold and nominal must be finite numbers")]
    NonFiniteThreshold,
}

/// Union of the stakeholders' activity roots, first mention first.
pub fn derive_activities(
    model: &QualityModel,
    stakeholders: &[Stakeholder],
) -> Result<Vec<NodeId>, PipelineError> {
    let mut out: Vec<NodeId> = Vec::new();
    for s in stakeholders {
        for activity in &s.activities {
            if !model.has_activity(activity) {
                return Err(PipelineError::UnresolvedActivity {
                    stakeholder: s.id.clone(),
                    activity: activity.clone(),
                });
            }
            if !out.contains(activity) {
                out.push(activity.clone());
            }
        }
    }
    Ok(out)
}

/// Checks that `ordering` is a permutation of `activities` and wraps it.
pub fn rank_activities(
    activities: &[NodeId],
    ordering: &[NodeId],
    cutoff: usize,
) -> Result<ActivityRanking, PipelineError> {
    let mut wanted: BTreeMap<&NodeId, isize> = BTreeMap::new();
    for a in activities {
        *wanted.entry(a).or_default() += 1;
    }
    let mut seen: BTreeMap<&NodeId, isize> = BTreeMap::new();
    for a in ordering {
        *seen.entry(a).or_default() += 1;
    }
    if wanted != seen {
        let mut missing = Vec::new();
        let mut extra = Vec::new();
        let mut duplicate = Vec::new();
        let keys: BTreeSet<&NodeId> = wanted.keys().chain(seen.keys()).copied().collect();
        for key in keys {
            let want = wanted.get(key).copied().unwrap_or(0);
            let have = seen.get(key).copied().unwrap_or(0);
            if want == 0 {
                extra.push(key.clone());
            } else if have < want {
                missing.push(key.clone());
            } else if have > want {
                duplicate.push(key.clone());
            }
        }
        return Err(PipelineError::NotPermutation {
            missing,
            extra,
            duplicate,
        });
    }
    if cutoff > ordering.len() {
        return Err(PipelineError::CutoffOutOfRange {
            cutoff,
            len: ordering.len(),
        });
    }
    Ok(ActivityRanking {
        ordered: ordering.to_vec(),
        cutoff,
    })
}

/// Statement text for a refined requirement.
pub fn refinement_statement(
    model: &QualityModel,
    fact: &FactRef,
    activity: &NodeId,
    direction: Direction,
) -> String {
    let entity = model.entity_label(&fact.entity);
    let attribute = attribute_label(&fact.attribute);
    let activity = model.activity_label(activity);
    match direction {
        Direction::Positive => format!("{entity} should exhibit {attribute} (supports {activity})"),
        Direction::Negative => {
            format!("{entity} should not exhibit {attribute} (hinders {activity})")
        }
    }
}

/// Follows the impacts on `activity` and its whole subtree back to their
/// facts, in impact declaration order.
pub fn refine(model: &QualityModel, activity: &NodeId) -> Result<Vec<RefinedRequirement>, PipelineError> {
    Ok(model
        .impacts_within(activity)?
        .into_iter()
        .map(|impact| RefinedRequirement {
            activity: activity.clone(),
            via: impact.activity.clone(),
            fact: impact.fact.clone(),
            direction: impact.direction,
            statement: refinement_statement(model, &impact.fact, &impact.activity, impact.direction),
        })
        .collect())
}

/// Checks a quantified requirement against the model without recording it.
pub fn check_quantified(model: &QualityModel, req: &QuantifiedRequirement) -> Result<(), PipelineError> {
    let declared = match &req.scope {
        Scope::Fact(fact_ref) => {
            let fact = model
                .fact(fact_ref)
                .ok_or_else(|| PipelineError::UnknownFact(fact_ref.clone()))?;
            Some((fact_ref, fact.metric.as_ref()))
        }
        Scope::Activity(activity) => {
            model.lookup_activity(activity)?;
            None
        }
    };
    let Measure::Threshold {
        metric,
        threshold,
        nominal,
        unit,
        ..
    } = &req.measure
    else {
        return Ok(());
    };
    if !threshold.is_finite() || nominal.is_some_and(|n| !n.is_finite()) {
        return Err(PipelineError::NonFiniteThreshold);
    }
    let known = match declared {
        Some((fact, None)) => return Err(PipelineError::NotQuantifiable(fact.clone())),
        Some((fact, Some(m))) if m.id != *metric => {
            return Err(PipelineError::MetricMismatch {
                fact: fact.clone(),
                declared: m.id.clone(),
                requested: metric.clone(),
            })
        }
        Some((_, Some(m))) => Some(m),
        // Activity-level metrics need not be declared in the model.
        None => model.metric(metric),
    };
    match known {
        Some(m) if m.unit != *unit => Err(PipelineError::UnitMismatch {
            metric: m.id.clone(),
            expected: m.unit.clone(),
            found: unit.clone(),
        }),
        _ => Ok(()),
    }
}

impl RequirementsDocument {
    pub fn new(model_name: impl Into<String>) -> Self {
        RequirementsDocument {
            model_name: model_name.into(),
            ..Default::default()
        }
    }

    pub fn with_stakeholders(mut self, stakeholders: Vec<Stakeholder>) -> Self {
        self.stakeholders = stakeholders;
        self
    }

    pub fn with_ranking(mut self, ranking: ActivityRanking) -> Self {
        self.ranking = ranking;
        self
    }

    /// Replaces the qualitative entry of `activity`. Entries are kept in
    /// ranking order.
    pub fn set_qualitative(mut self, activity: &NodeId, ratings: Ratings) -> Result<Self, PipelineError> {
        let rank = self
            .ranking
            .position(activity)
            .ok_or_else(|| PipelineError::NotRanked(activity.clone()))?;
        if matches!(&ratings, Ratings::Listed(items) if items.is_empty()) {
            return Err(PipelineError::EmptyRatings(activity.clone()));
        }
        if let Some(entry) = self.qualitative.iter_mut().find(|q| q.activity == *activity) {
            entry.ratings = ratings;
            return Ok(self);
        }
        let at = self
            .qualitative
            .iter()
            .position(|q| self.ranking.position(&q.activity).is_none_or(|p| p > rank))
            .unwrap_or(self.qualitative.len());
        self.qualitative.insert(
            at,
            QualitativeRequirement {
                activity: activity.clone(),
                ratings,
            },
        );
        Ok(self)
    }

    /// Explicit ratings, else don't-care below the cutoff, else nothing.
    pub fn effective_ratings(&self, activity: &NodeId) -> Option<Ratings> {
        self.qualitative
            .iter()
            .find(|q| q.activity == *activity)
            .map(|q| q.ratings.clone())
            .or_else(|| {
                self.ranking
                    .is_default_dont_care(activity)
                    .then_some(Ratings::DontCare)
            })
    }

    /// Appends refined requirements that are not yet recorded.
    pub fn add_refined(mut self, refined: impl IntoIterator<Item = RefinedRequirement>) -> Self {
        for r in refined {
            if !self.refined.contains(&r) {
                self.refined.push(r);
            }
        }
        self
    }

    /// Appends a quantified requirement after checking it against the model.
    pub fn quantify(mut self, model: &QualityModel, req: QuantifiedRequirement) -> Result<Self, PipelineError> {
        check_quantified(model, &req)?;
        self.quantified.push(req);
        Ok(self)
    }
}

/// Checks a requirements document against its model.
pub fn validate_requirements(model: &QualityModel, doc: &RequirementsDocument) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    if doc.model_name != model.name {
        out.push(Diagnostic::error(
            Code::ModelMismatch,
            "model_name",
            format!("document targets `{}` but the model is `{}`", doc.model_name, model.name),
        ));
    }

    let mut ids = BTreeSet::new();
    for (i, s) in doc.stakeholders.iter().enumerate() {
        if !ids.insert(s.id.as_str()) {
            out.push(Diagnostic::error(
                Code::DuplicateStakeholder,
                format!("stakeholders[{i}].id"),
                format!("stakeholder `{}` listed more than once", s.id),
            ));
        }
        for (j, a) in s.activities.iter().enumerate() {
            if !model.has_activity(a) {
                out.push(Diagnostic::error(
                    Code::UnknownStakeholderActivity,
                    format!("stakeholders[{i}].activities[{j}]"),
                    format!("stakeholder `{}` names unknown activity `{a}`", s.id),
                ));
            }
        }
    }

    let ranking = &doc.ranking;
    if ranking.cutoff > ranking.ordered.len() {
        out.push(Diagnostic::error(
            Code::CutoffOutOfRange,
            "ranking.cutoff",
            format!(
                "cutoff {} exceeds the number of ranked activities ({})",
                ranking.cutoff,
                ranking.ordered.len()
            ),
        ));
    }
    for (i, a) in ranking.ordered.iter().enumerate() {
        if !model.has_activity(a) {
            out.push(Diagnostic::error(
                Code::UnknownActivity,
                format!("ranking.ordered[{i}]"),
                format!("activity `{a}` is not in the activity tree"),
            ));
        }
    }
    // An empty ordering means the ranking step has not been carried out yet.
    if !ranking.ordered.is_empty() {
        let expected: Vec<NodeId> = doc
            .stakeholders
            .iter()
            .flat_map(|s| s.activities.iter())
            .fold(Vec::new(), |mut acc, a| {
                if !acc.contains(a) {
                    acc.push(a.clone());
                }
                acc
            });
        if let Err(e) = rank_activities(&expected, &ranking.ordered, 0) {
            out.push(Diagnostic::error(
                Code::NonPermutationRanking,
                "ranking.ordered",
                e.to_string(),
            ));
        }
    }

    let mut rated = BTreeSet::new();
    for (i, q) in doc.qualitative.iter().enumerate() {
        let path = format!("qualitative[{i}]");
        if !ranking.contains(&q.activity) {
            out.push(Diagnostic::error(
                Code::UnrankedActivity,
                path.clone(),
                format!("activity `{}` is not ranked", q.activity),
            ));
        }
        if !rated.insert(&q.activity) {
            out.push(Diagnostic::error(
                Code::DuplicateQualitative,
                path.clone(),
                format!("activity `{}` rated more than once", q.activity),
            ));
        }
        if matches!(&q.ratings, Ratings::Listed(items) if items.is_empty()) {
            out.push(Diagnostic::error(
                Code::EmptyRatings,
                path,
                format!("ratings for `{}` are empty", q.activity),
            ));
        }
    }

    for (i, r) in doc.refined.iter().enumerate() {
        let matched = r.via.is_within(&r.activity)
            && model.impacts.iter().any(|imp| {
                imp.fact == r.fact && imp.activity == r.via && imp.direction == r.direction
            });
        if !matched {
            out.push(Diagnostic::error(
                Code::UnmatchedRefinement,
                format!("refined[{i}]"),
                format!(
                    "no {} impact of `{}` on `{}` within `{}`",
                    r.direction.symbol(),
                    r.fact,
                    r.via,
                    r.activity
                ),
            ));
        }
    }

    for (i, q) in doc.quantified.iter().enumerate() {
        if let Err(e) = check_quantified(model, q) {
            let code = match e {
                PipelineError::UnknownFact(_) => Code::UnknownFact,
                PipelineError::NotFound(_) => Code::UnknownActivity,
                PipelineError::UnitMismatch { .. } => Code::UnitMismatch,
                PipelineError::NonFiniteThreshold => Code::NonFiniteThreshold,
                _ => Code::MissingMetric,
            };
            out.push(Diagnostic::error(code, format!("quantified[{i}]"), e.to_string()));
        }
    }
    out
}

#[cfg(feature = "serde")]
mod wire {
    use super::*;
    use serde::de::{self, Deserializer, Visitor};
    use serde::ser::Serializer;
    use serde::{Deserialize, Serialize};

    const DONT_CARE: &str = "dont_care";

    impl Serialize for Ratings {
        fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
            match self {
                Ratings::DontCare => serializer.serialize_str(DONT_CARE),
                Ratings::Listed(items) => items.serialize(serializer),
            }
        }
    }

    impl<'de> Deserialize<'de> for Ratings {
        fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
            struct RatingsVisitor;

            impl<'de> Visitor<'de> for RatingsVisitor {
                type Value = Ratings;

                fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                    f.write_str("a list of rating strings or \"dont_care\"")
                }

                fn visit_str<E: de::Error>(self, v: &str) -> Result<Ratings, E> {
                    if v == DONT_CARE {
                        Ok(Ratings::DontCare)
                    } else {
                        Err(E::invalid_value(de::Unexpected::Str(v), &self))
                    }
                }

                fn visit_seq<A: de::SeqAccess<'de>>(self, mut seq: A) -> Result<Ratings, A::Error> {
                    let mut items = Vec::new();
                    while let Some(item) = seq.next_element::<String>()? {
                        items.push(item);
                    }
                    Ok(Ratings::Listed(items))
                }
            }

            deserializer.deserialize_any(RatingsVisitor)
        }
    }

    /// Flat on-disk form of a quantified requirement.
    #[derive(Serialize, Deserialize)]
    #[serde(deny_unknown_fields)]
    pub struct QuantifiedWire {
        scope: Scope,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        metric: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        comparator: Option<Comparator>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        threshold: Option<f64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        nominal: Option<f64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        unit: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        constraint: Option<String>,
    }

    impl From<QuantifiedRequirement> for QuantifiedWire {
        fn from(req: QuantifiedRequirement) -> Self {
            let scope = req.scope;
            match req.measure {
                Measure::Threshold {
                    metric,
                    comparator,
                    threshold,
                    nominal,
                    unit,
                } => QuantifiedWire {
                    scope,
                    metric: Some(metric),
                    comparator: Some(comparator),
                    threshold: Some(threshold),
                    nominal,
                    unit: Some(unit),
                    constraint: None,
                },
                Measure::Constraint(text) => QuantifiedWire {
                    scope,
                    metric: None,
                    comparator: None,
                    threshold: None,
                    nominal: None,
                    unit: None,
                    constraint: Some(text),
                },
            }
        }
    }

    impl TryFrom<QuantifiedWire> for QuantifiedRequirement {
        type Error = String;

        fn try_from(w: QuantifiedWire) -> Result<Self, Self::Error> {
            let measure = match (w.constraint, w.metric, w.comparator, w.threshold, w.unit) {
                (Some(text), None, None, None, None) if w.nominal.is_none() => Measure::Constraint(text),
                (Some(_), ..) => {
                    return Err("`constraint` excludes metric, comparator, threshold, nominal and unit".into())
                }
                (None, Some(metric), Some(comparator), Some(threshold), Some(unit)) => Measure::Threshold {
                    metric,
                    comparator,
                    threshold,
                    nominal: w.nominal,
                    unit,
                },
                _ => {
                    return Err(
                        "quantified requirement needs either `constraint` or all of metric, comparator, threshold and unit"
                            .into(),
                    )
                }
            };
            Ok(QuantifiedRequirement {
                scope: w.scope,
                measure,
            })
        }
    }
}
