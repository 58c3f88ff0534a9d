use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::diagnostics::{Code, Diagnostic};
use crate::id::NodeId;
use crate::model::{attribute_label, preorder, Assessability, FactRef, QualityModel};

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ChecklistItem {
    pub question: String,
    pub fact: FactRef,
    pub impacted_activities: Vec<NodeId>,
}

/// Review questions for one artifact type. Only manually assessable facts
/// appear.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Checklist {
    pub artifact_type: String,
    pub items: Vec<ChecklistItem>,
    #[cfg_attr(feature = "serde", serde(default, skip_serializing_if = "Vec::is_empty"))]
    pub warnings: Vec<Diagnostic>,
}

pub fn generate_checklist(model: &QualityModel, artifact_type: &str) -> Checklist {
    let mut warnings = Vec::new();
    let tag_known = preorder(&model.entities)
        .iter()
        .any(|e| e.artifact_types.contains(artifact_type));
    if !tag_known {
        warnings.push(Diagnostic::warning(
            Code::UnknownArtifactType,
            "artifact_type",
            format!("no entity carries artifact type `{artifact_type}`"),
        ));
    }

    let mut facts: Vec<_> = model
        .facts
        .iter()
        .filter(|f| f.assessability == Assessability::Manual)
        .filter(|f| {
            model
                .effective_artifact_types(&f.entity)
                .is_ok_and(|tags| tags.contains(artifact_type))
        })
        .collect();
    facts.sort_by(|a, b| (&a.entity, &a.attribute).cmp(&(&b.entity, &b.attribute)));

    let items = facts
        .into_iter()
        .map(|fact| {
            let mut impacted: Vec<NodeId> = Vec::new();
            for impact in model.impacts.iter().filter(|i| fact.is(&i.fact)) {
                if !impacted.contains(&impact.activity) {
                    impacted.push(impact.activity.clone());
                }
            }
            let affects = if impacted.is_empty() {
                String::from("none")
            } else {
                impacted
                    .iter()
                    .map(|a| model.activity_label(a))
                    .collect::<Vec<_>>()
                    .join(", ")
            };
            ChecklistItem {
                question: format!(
                    "Is {} {}? (affects: {affects})",
                    model.entity_label(&fact.entity),
                    attribute_label(&fact.attribute)
                ),
                fact: fact.key(),
                impacted_activities: impacted,
            }
        })
        .collect();

    Checklist {
        artifact_type: artifact_type.into(),
        items,
        warnings,
    }
}
