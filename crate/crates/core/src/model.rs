//! The two-dimensional quality model: an activity forest, an entity forest,
//! an attribute vocabulary, facts over (entity, attribute) and signed impacts
//! from facts onto activities.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::id::NodeId;

/// What a stakeholder does on or with the system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActivityNode {
    pub id: NodeId,
    pub label: String,
    pub children: Vec<ActivityNode>,
}

/// A part of the situation: the system, its environment or the organisation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntityNode {
    pub id: NodeId,
    pub label: String,
    pub children: Vec<EntityNode>,
    /// Own artifact-type tags. Descendants inherit them.
    pub artifact_types: BTreeSet<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(deny_unknown_fields))]
pub struct Attribute {
    pub id: String,
    pub description: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Assessability {
    Automatic,
    SemiAutomatic,
    Manual,
}

impl Assessability {
    pub fn as_str(self) -> &'static str {
        match self {
            Assessability::Automatic => "automatic",
            Assessability::SemiAutomatic => "semi_automatic",
            Assessability::Manual => "manual",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(deny_unknown_fields))]
pub struct Metric {
    pub id: String,
    pub unit: String,
    pub description: String,
}

/// Key of a fact: an (entity, attribute) tuple.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(deny_unknown_fields))]
pub struct FactRef {
    pub entity: NodeId,
    pub attribute: String,
}

impl FactRef {
    pub fn new(entity: NodeId, attribute: impl Into<String>) -> Self {
        FactRef {
            entity,
            attribute: attribute.into(),
        }
    }
}

impl fmt::Display for FactRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {}", self.entity, self.attribute)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fact {
    pub entity: NodeId,
    pub attribute: String,
    pub assessability: Assessability,
    pub metric: Option<Metric>,
}

impl Fact {
    pub fn key(&self) -> FactRef {
        FactRef::new(self.entity.clone(), self.attribute.clone())
    }

    pub fn is(&self, fact: &FactRef) -> bool {
        self.entity == fact.entity && self.attribute == fact.attribute
    }
}

/// Sign of an impact. Serialized as `+` / `-`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Direction {
    #[cfg_attr(feature = "serde", serde(rename = "+"))]
    Positive,
    #[cfg_attr(feature = "serde", serde(rename = "-"))]
    Negative,
}

impl Direction {
    pub fn symbol(self) -> &'static str {
        match self {
            Direction::Positive => "+",
            Direction::Negative => "-",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Impact {
    pub fact: FactRef,
    pub activity: NodeId,
    pub direction: Direction,
    pub justification: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QualityModel {
    pub name: String,
    pub activities: Vec<ActivityNode>,
    pub entities: Vec<EntityNode>,
    pub attributes: Vec<Attribute>,
    pub facts: Vec<Fact>,
    pub impacts: Vec<Impact>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tree {
    Activities,
    Entities,
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tree::Activities => "activity",
            Tree::Entities => "entity",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{tree} `{id}` not found")]
pub struct NotFound {
    pub tree: Tree,
    pub id: NodeId,
}

/// Shared read access to both node kinds.
pub trait TreeNode: Sized {
    fn id(&self) -> &NodeId;
    fn label(&self) -> &str;
    fn children(&self) -> &[Self];

    fn is_leaf(&self) -> bool {
        self.children().is_empty()
    }

    /// Visits `self` and then every descendant in pre-order.
    fn walk<'a>(&'a self, visit: &mut dyn FnMut(&'a Self)) {
        visit(self);
        for child in self.children() {
            child.walk(visit);
        }
    }
}

impl TreeNode for ActivityNode {
    fn id(&self) -> &NodeId {
        &self.id
    }
    fn label(&self) -> &str {
        &self.label
    }
    fn children(&self) -> &[Self] {
        &self.children
    }
}

impl TreeNode for EntityNode {
    fn id(&self) -> &NodeId {
        &self.id
    }
    fn label(&self) -> &str {
        &self.label
    }
    fn children(&self) -> &[Self] {
        &self.children
    }
}

/// All nodes of a forest in pre-order.
pub fn preorder<N: TreeNode>(forest: &[N]) -> Vec<&N> {
    let mut out = Vec::new();
    for root in forest {
        root.walk(&mut |n| out.push(n));
    }
    out
}

fn find<'a, N: TreeNode>(forest: &'a [N], id: &NodeId) -> Option<&'a N> {
    // Descend along matching prefixes; falls back to nothing on malformed trees.
    let mut level = forest;
    loop {
        let next = level.iter().find(|n| id.is_within(n.id()))?;
        if next.id() == id {
            return Some(next);
        }
        level = next.children();
    }
}

impl ActivityNode {
    pub fn new(id: NodeId, label: impl Into<String>) -> Self {
        ActivityNode {
            id,
            label: label.into(),
            children: Vec::new(),
        }
    }

    /// Adds a child whose id extends this node's id by `segment`.
    pub fn with_child(mut self, segment: &str, label: impl Into<String>) -> Self {
        let id = self.id.child(segment);
        self.children.push(ActivityNode::new(id, label));
        self
    }
}

impl EntityNode {
    pub fn new(id: NodeId, label: impl Into<String>) -> Self {
        EntityNode {
            id,
            label: label.into(),
            children: Vec::new(),
            artifact_types: BTreeSet::new(),
        }
    }

    pub fn tagged<I, S>(mut self, tags: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        self.artifact_types.extend(tags.into_iter().map(Into::into));
        self
    }
}

impl QualityModel {
    pub fn new(name: impl Into<String>) -> Self {
        QualityModel {
            name: name.into(),
            ..Default::default()
        }
    }

    pub fn lookup_activity(&self, id: &NodeId) -> Result<&ActivityNode, NotFound> {
        find(&self.activities, id).ok_or_else(|| NotFound {
            tree: Tree::Activities,
            id: id.clone(),
        })
    }

    pub fn lookup_entity(&self, id: &NodeId) -> Result<&EntityNode, NotFound> {
        find(&self.entities, id).ok_or_else(|| NotFound {
            tree: Tree::Entities,
            id: id.clone(),
        })
    }

    /// `id` followed by every activity below it, in pre-order.
    pub fn activity_descendants(&self, id: &NodeId) -> Result<Vec<NodeId>, NotFound> {
        let node = self.lookup_activity(id)?;
        Ok(preorder(core::slice::from_ref(node))
            .into_iter()
            .map(|n| n.id.clone())
            .collect())
    }

    /// `id` followed by every entity below it, in pre-order.
    pub fn entity_descendants(&self, id: &NodeId) -> Result<Vec<NodeId>, NotFound> {
        let node = self.lookup_entity(id)?;
        Ok(preorder(core::slice::from_ref(node))
            .into_iter()
            .map(|n| n.id.clone())
            .collect())
    }

    /// Leaf activities in pre-order.
    pub fn leaf_activities(&self) -> Vec<&ActivityNode> {
        preorder(&self.activities)
            .into_iter()
            .filter(|n| n.is_leaf())
            .collect()
    }

    pub fn has_activity(&self, id: &NodeId) -> bool {
        find(&self.activities, id).is_some()
    }

    pub fn has_entity(&self, id: &NodeId) -> bool {
        find(&self.entities, id).is_some()
    }

    pub fn attribute(&self, id: &str) -> Option<&Attribute> {
        self.attributes.iter().find(|a| a.id == id)
    }

    pub fn fact(&self, fact: &FactRef) -> Option<&Fact> {
        self.facts.iter().find(|f| f.is(fact))
    }

    /// Own tags of the entity plus those of all its ancestors.
    pub fn effective_artifact_types(&self, id: &NodeId) -> Result<BTreeSet<&str>, NotFound> {
        let node = self.lookup_entity(id)?;
        let mut tags: BTreeSet<&str> = node.artifact_types.iter().map(String::as_str).collect();
        for ancestor in id.ancestors() {
            if let Some(a) = find(&self.entities, &ancestor) {
                tags.extend(a.artifact_types.iter().map(String::as_str));
            }
        }
        Ok(tags)
    }

    /// Display label of an activity, or its path when it does not resolve.
    pub fn activity_label<'a>(&'a self, id: &'a NodeId) -> &'a str {
        find(&self.activities, id).map_or(id.as_str(), |n| n.label.as_str())
    }

    pub fn entity_label<'a>(&'a self, id: &'a NodeId) -> &'a str {
        find(&self.entities, id).map_or(id.as_str(), |n| n.label.as_str())
    }

    /// Metric declared by any fact under the given id.
    pub fn metric(&self, id: &str) -> Option<&Metric> {
        self.facts
            .iter()
            .filter_map(|f| f.metric.as_ref())
            .find(|m| m.id == id)
    }

    /// Impacts whose target activity is `activity` or lies below it, in
    /// declaration order.
    pub fn impacts_within(&self, activity: &NodeId) -> Result<Vec<&Impact>, NotFound> {
        let subtree: BTreeSet<NodeId> = self.activity_descendants(activity)?.into_iter().collect();
        Ok(self
            .impacts
            .iter()
            .filter(|i| subtree.contains(&i.activity))
            .collect())
    }
}

/// Human-readable form of an attribute id (`needless_variables` becomes
/// `needless variables`).
pub fn attribute_label(id: &str) -> String {
    id.replace('_', " ")
}
