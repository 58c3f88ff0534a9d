//! On-disk form of a quality model (`.model.json`).
//!
//! Tree nodes store only their own segment; full paths are rebuilt while
//! parsing. Facts and impacts refer to entities and activities by full path.

use aqm_core::{
    validate_model, ActivityNode, Assessability, Attribute, Direction, EntityNode, Fact, FactRef,
    Impact, Metric, NodeId, QualityModel,
};
use serde::{Deserialize, Serialize};

use crate::error::ParseError;
use crate::json;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ModelDocument {
    name: String,
    activities: Vec<ActivityDoc>,
    entities: Vec<EntityDoc>,
    attributes: Vec<Attribute>,
    facts: Vec<FactDoc>,
    impacts: Vec<ImpactDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ActivityDoc {
    id: String,
    label: String,
    #[serde(default)]
    children: Vec<ActivityDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EntityDoc {
    id: String,
    label: String,
    #[serde(default)]
    artifact_types: Vec<String>,
    #[serde(default)]
    children: Vec<EntityDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FactDoc {
    entity: NodeId,
    attribute: String,
    assessability: Assessability,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    metric: Option<Metric>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ImpactDoc {
    entity: NodeId,
    attribute: String,
    activity: NodeId,
    direction: Direction,
    justification: String,
}

fn node_id(parent: Option<&NodeId>, segment: &str) -> NodeId {
    match parent {
        Some(p) => p.child(segment),
        None => NodeId::from_raw(segment),
    }
}

fn segment(id: &NodeId) -> String {
    id.leaf_segment().to_owned()
}

impl ActivityDoc {
    fn into_node(self, parent: Option<&NodeId>) -> ActivityNode {
        let id = node_id(parent, &self.id);
        let children = self.children.into_iter().map(|c| c.into_node(Some(&id))).collect();
        ActivityNode {
            id,
            label: self.label,
            children,
        }
    }

    fn from_node(node: &ActivityNode) -> Self {
        ActivityDoc {
            id: segment(&node.id),
            label: node.label.clone(),
            children: node.children.iter().map(Self::from_node).collect(),
        }
    }
}

impl EntityDoc {
    fn into_node(self, parent: Option<&NodeId>) -> EntityNode {
        let id = node_id(parent, &self.id);
        let children = self.children.into_iter().map(|c| c.into_node(Some(&id))).collect();
        EntityNode {
            id,
            label: self.label,
            children,
            artifact_types: self.artifact_types.into_iter().collect(),
        }
    }

    fn from_node(node: &EntityNode) -> Self {
        EntityDoc {
            id: segment(&node.id),
            label: node.label.clone(),
            artifact_types: node.artifact_types.iter().cloned().collect(),
            children: node.children.iter().map(Self::from_node).collect(),
        }
    }
}

impl From<ModelDocument> for QualityModel {
    fn from(doc: ModelDocument) -> Self {
        QualityModel {
            name: doc.name,
            activities: doc.activities.into_iter().map(|a| a.into_node(None)).collect(),
            entities: doc.entities.into_iter().map(|e| e.into_node(None)).collect(),
            attributes: doc.attributes,
            facts: doc
                .facts
                .into_iter()
                .map(|f| Fact {
                    entity: f.entity,
                    attribute: f.attribute,
                    assessability: f.assessability,
                    metric: f.metric,
                })
                .collect(),
            impacts: doc
                .impacts
                .into_iter()
                .map(|i| Impact {
                    fact: FactRef::new(i.entity, i.attribute),
                    activity: i.activity,
                    direction: i.direction,
                    justification: i.justification,
                })
                .collect(),
        }
    }
}

impl From<&QualityModel> for ModelDocument {
    fn from(model: &QualityModel) -> Self {
        ModelDocument {
            name: model.name.clone(),
            activities: model.activities.iter().map(ActivityDoc::from_node).collect(),
            entities: model.entities.iter().map(EntityDoc::from_node).collect(),
            attributes: model.attributes.clone(),
            facts: model
                .facts
                .iter()
                .map(|f| FactDoc {
                    entity: f.entity.clone(),
                    attribute: f.attribute.clone(),
                    assessability: f.assessability,
                    metric: f.metric.clone(),
                })
                .collect(),
            impacts: model
                .impacts
                .iter()
                .map(|i| ImpactDoc {
                    entity: i.fact.entity.clone(),
                    attribute: i.fact.attribute.clone(),
                    activity: i.activity.clone(),
                    direction: i.direction,
                    justification: i.justification.clone(),
                })
                .collect(),
        }
    }
}

/// Parses a model document. The result always passes [`validate_model`].
pub fn parse_model(text: &str) -> Result<QualityModel, ParseError> {
    let doc: ModelDocument = json::from_text(text)?;
    let model = QualityModel::from(doc);
    let diagnostics = validate_model(&model);
    if diagnostics.is_empty() {
        Ok(model)
    } else {
        Err(ParseError::Semantic(diagnostics))
    }
}

/// Parses without the semantic check, for reporting every diagnostic.
pub fn parse_model_unchecked(text: &str) -> Result<QualityModel, ParseError> {
    json::from_text::<ModelDocument>(text).map(QualityModel::from)
}

pub fn serialize_model(model: &QualityModel) -> String {
    json::to_canonical(&ModelDocument::from(model))
}
