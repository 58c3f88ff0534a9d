use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::id::NodeId;
use crate::model::{attribute_label, Direction, FactRef, Impact, QualityModel};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum GuidelineKind {
    Do,
    Dont,
}

impl From<Direction> for GuidelineKind {
    fn from(direction: Direction) -> Self {
        match direction {
            Direction::Positive => GuidelineKind::Do,
            Direction::Negative => GuidelineKind::Dont,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Guideline {
    pub kind: GuidelineKind,
    pub text: String,
    pub fact: FactRef,
    pub activity: NodeId,
    pub direction: Direction,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GuidelineSet {
    pub items: Vec<Guideline>,
}

fn guideline_text(model: &QualityModel, impact: &Impact) -> String {
    let entity = model.entity_label(&impact.fact.entity);
    let attribute = attribute_label(&impact.fact.attribute);
    let activity = model.activity_label(&impact.activity);
    match impact.direction {
        Direction::Positive => format!("Keep {entity} {attribute} (supports {activity})."),
        Direction::Negative => format!("Avoid {attribute} in {entity} (hinders {activity})."),
    }
}

/// One do/don't item per impact, in impact declaration order.
pub fn generate_guidelines(model: &QualityModel) -> GuidelineSet {
    GuidelineSet {
        items: model
            .impacts
            .iter()
            .map(|impact| Guideline {
                kind: impact.direction.into(),
                text: guideline_text(model, impact),
                fact: impact.fact.clone(),
                activity: impact.activity.clone(),
                direction: impact.direction,
            })
            .collect(),
    }
}
