use alloc::string::String;
use core::fmt;

/// Machine-readable diagnostic codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Code {
    // model structure
    BadSegment,
    BadChildPath,
    DuplicateNode,
    DuplicateAttribute,
    UnknownAttribute,
    DanglingFactEntity,
    DuplicateFact,
    DuplicateMetric,
    DanglingImpactEntity,
    DanglingImpactFact,
    DanglingImpactActivity,
    DuplicateImpact,
    // requirements documents
    ModelMismatch,
    DuplicateStakeholder,
    UnknownStakeholderActivity,
    NonPermutationRanking,
    CutoffOutOfRange,
    UnrankedActivity,
    DuplicateQualitative,
    EmptyRatings,
    UnknownActivity,
    UnknownFact,
    UnmatchedRefinement,
    MissingMetric,
    UnitMismatch,
    NonFiniteThreshold,
    // assurance
    UnknownArtifactType,
    UnmappedResult,
    UntracedRequirement,
}

impl Code {
    pub fn as_str(self) -> &'static str {
        match self {
            Code::BadSegment => "bad_segment",
            Code::BadChildPath => "bad_child_path",
            Code::DuplicateNode => "duplicate_node",
            Code::DuplicateAttribute => "duplicate_attribute",
            Code::UnknownAttribute => "unknown_attribute",
            Code::DanglingFactEntity => "dangling_fact_entity",
            Code::DuplicateFact => "duplicate_fact",
            Code::DuplicateMetric => "duplicate_metric",
            Code::DanglingImpactEntity => "dangling_impact_entity",
            Code::DanglingImpactFact => "dangling_impact_fact",
            Code::DanglingImpactActivity => "dangling_impact_activity",
            Code::DuplicateImpact => "duplicate_impact",
            Code::ModelMismatch => "model_mismatch",
            Code::DuplicateStakeholder => "duplicate_stakeholder",
            Code::UnknownStakeholderActivity => "unknown_stakeholder_activity",
            Code::NonPermutationRanking => "non_permutation_ranking",
            Code::CutoffOutOfRange => "cutoff_out_of_range",
            Code::UnrankedActivity => "unranked_activity",
            Code::DuplicateQualitative => "duplicate_qualitative",
            Code::EmptyRatings => "empty_ratings",
            Code::UnknownActivity => "unknown_activity",
            Code::UnknownFact => "unknown_fact",
            Code::UnmatchedRefinement => "unmatched_refinement",
            Code::MissingMetric => "missing_metric",
            Code::UnitMismatch => "unit_mismatch",
            Code::NonFiniteThreshold => "non_finite_threshold",
            Code::UnknownArtifactType => "unknown_artifact_type",
            Code::UnmappedResult => "unmapped_result",
            Code::UntracedRequirement => "untraced_requirement",
        }
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Severity {
    Error,
    Warning,
}

/// One finding. `path` locates the offending element, e.g. `impacts[3].activity`
/// or `activities/tics_dialog.view`.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Diagnostic {
    pub code: Code,
    pub severity: Severity,
    pub path: String,
    pub message: String,
}

impl Diagnostic {
    pub fn error(code: Code, path: impl Into<String>, message: impl Into<String>) -> Self {
        Diagnostic {
            code,
            severity: Severity::Error,
            path: path.into(),
            message: message.into(),
        }
    }

    pub fn warning(code: Code, path: impl Into<String>, message: impl Into<String>) -> Self {
        Diagnostic {
            code,
            severity: Severity::Warning,
            path: path.into(),
            message: message.into(),
        }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let level = match self.severity {
            Severity::Error => "error",
            Severity::Warning => "warning",
        };
        write!(f, "{level}[{}] {}: {}", self.code, self.path, self.message)
    }
}
