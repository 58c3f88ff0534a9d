//! Random generation of valid models for property and acceptance tests.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::id::NodeId;
use crate::model::{
    ActivityNode, Assessability, Attribute, Direction, EntityNode, Fact, FactRef, Impact, Metric,
    QualityModel,
};

/// Size limits for [`random_model`].
#[derive(Debug, Clone, Copy)]
pub struct Limits {
    pub max_nodes: usize,
    pub max_attributes: usize,
    pub max_facts: usize,
    pub max_impacts: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_nodes: 30,
            max_attributes: 6,
            max_facts: 40,
            max_impacts: 60,
        }
    }
}

pub const ARTIFACT_TYPES: [&str; 4] = ["code", "hardware", "documentation", "process"];

const LABEL_PIECES: [&str; 10] = [
    "Display", "position", "Über", "\"quoted\"", "a, b", "line\nbreak", "tab\t", "data", "ü€", "",
];

fn label<R: Rng + ?Sized>(rng: &mut R) -> String {
    let n = rng.gen_range(0..4);
    (0..n)
        .map(|_| *LABEL_PIECES.choose(rng).unwrap())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Flat list of (parent index, segment) turned into a forest.
struct Shape {
    parents: Vec<Option<usize>>,
    segments: Vec<String>,
}

fn random_shape<R: Rng + ?Sized>(rng: &mut R, prefix: &str, max_nodes: usize) -> Shape {
    let n = rng.gen_range(0..=max_nodes);
    let mut parents = Vec::with_capacity(n);
    let mut segments = Vec::with_capacity(n);
    for i in 0..n {
        let parent = if i == 0 || rng.gen_bool(0.25) {
            None
        } else {
            Some(rng.gen_range(0..i))
        };
        parents.push(parent);
        // The index keeps sibling segments distinct.
        segments.push(format!("{prefix}{i}"));
    }
    Shape { parents, segments }
}

fn build_ids(shape: &Shape) -> Vec<NodeId> {
    let mut ids: Vec<NodeId> = Vec::with_capacity(shape.parents.len());
    for (i, parent) in shape.parents.iter().enumerate() {
        let id = match parent {
            None => NodeId::from_raw(shape.segments[i].clone()),
            Some(p) => ids[*p].child(&shape.segments[i]),
        };
        ids.push(id);
    }
    ids
}

fn assemble<N>(shape: &Shape, mut nodes: Vec<Option<N>>, push_child: fn(&mut N, N)) -> Vec<N> {
    // Children have larger indices than their parents; walking backwards and
    // inserting at the front keeps siblings in index order.
    let mut roots = Vec::new();
    for i in (0..nodes.len()).rev() {
        let node = nodes[i].take().unwrap();
        match shape.parents[i] {
            Some(p) => push_child(nodes[p].as_mut().unwrap(), node),
            None => roots.push(node),
        }
    }
    roots.reverse();
    roots
}

/// A random model that passes [`crate::validate_model`].
pub fn random_model<R: Rng + ?Sized>(rng: &mut R, limits: Limits) -> QualityModel {
    let activity_shape = random_shape(rng, "a", limits.max_nodes);
    let activity_ids = build_ids(&activity_shape);
    let activity_nodes = activity_ids
        .iter()
        .map(|id| Some(ActivityNode::new(id.clone(), label(rng))))
        .collect();
    let activities = assemble(&activity_shape, activity_nodes, |p, c| p.children.insert(0, c));

    let entity_shape = random_shape(rng, "e", limits.max_nodes);
    let entity_ids = build_ids(&entity_shape);
    let entity_nodes = entity_ids
        .iter()
        .map(|id| {
            let mut node = EntityNode::new(id.clone(), label(rng));
            if rng.gen_bool(0.3) {
                node.artifact_types
                    .insert(String::from(*ARTIFACT_TYPES.choose(rng).unwrap()));
            }
            Some(node)
        })
        .collect();
    let entities = assemble(&entity_shape, entity_nodes, |p, c| p.children.insert(0, c));

    let attributes: Vec<Attribute> = (0..rng.gen_range(0..=limits.max_attributes))
        .map(|i| Attribute {
            id: format!("attr_{i}"),
            description: label(rng),
        })
        .collect();

    let mut facts = Vec::new();
    if !entity_ids.is_empty() && !attributes.is_empty() {
        let mut used = BTreeSet::new();
        for _ in 0..rng.gen_range(0..=limits.max_facts) {
            let entity = entity_ids.choose(rng).unwrap().clone();
            let attribute = attributes.choose(rng).unwrap().id.clone();
            if !used.insert((entity.clone(), attribute.clone())) {
                continue;
            }
            let assessability = *[
                Assessability::Automatic,
                Assessability::SemiAutomatic,
                Assessability::Manual,
            ]
            .choose(rng)
            .unwrap();
            let metric = rng.gen_bool(0.3).then(|| Metric {
                id: format!("metric_{}", facts.len()),
                unit: String::from(*["count", "degree", "person_hours"].choose(rng).unwrap()),
                description: label(rng),
            });
            facts.push(Fact {
                entity,
                attribute,
                assessability,
                metric,
            });
        }
    }

    let mut impacts = Vec::new();
    if !facts.is_empty() && !activity_ids.is_empty() {
        let mut used = BTreeSet::new();
        for _ in 0..rng.gen_range(0..=limits.max_impacts) {
            let fact: FactRef = facts.choose(rng).unwrap().key();
            let activity = activity_ids.choose(rng).unwrap().clone();
            if !used.insert((fact.clone(), activity.clone())) {
                continue;
            }
            impacts.push(Impact {
                fact,
                activity,
                direction: if rng.gen_bool(0.5) {
                    Direction::Positive
                } else {
                    Direction::Negative
                },
                justification: label(rng),
            });
        }
    }

    QualityModel {
        name: label(rng),
        activities,
        entities,
        attributes,
        facts,
        impacts,
    }
}
