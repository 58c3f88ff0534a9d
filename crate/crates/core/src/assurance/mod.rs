//! Model-based quality assurance: guidelines for developers, review
//! checklists, conformance of tool reports and traceability.

pub mod checklist;
pub mod conformance;
pub mod guidelines;
pub mod trace;

pub use checklist::{generate_checklist, Checklist, ChecklistItem};
pub use conformance::{
    evaluate, ConformanceReport, Evaluation, MetricReport, MetricResult, ResultCheck, Verdict,
};
pub use guidelines::{generate_guidelines, Guideline, GuidelineKind, GuidelineSet};
pub use trace::{trace, TraceRow, TraceabilityReport, TracedRequirement};
