//! Structural and referential checks over candidate models.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::diagnostics::{Code, Diagnostic};
use crate::id::{is_valid_segment, NodeId};
use crate::model::{FactRef, QualityModel, TreeNode};

/// Returns every violation of the model's invariants; empty means valid.
pub fn validate_model(model: &QualityModel) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    check_forest(&model.activities, "activities", &mut out);
    check_forest(&model.entities, "entities", &mut out);

    let mut attributes = BTreeSet::new();
    for (i, attr) in model.attributes.iter().enumerate() {
        if !is_valid_segment(&attr.id) {
            out.push(Diagnostic::error(
                Code::BadSegment,
                format!("attributes[{i}].id"),
                format!("attribute id `{}` is not of the form [a-z0-9_]+", attr.id),
            ));
        }
        if !attributes.insert(attr.id.as_str()) {
            out.push(Diagnostic::error(
                Code::DuplicateAttribute,
                format!("attributes[{i}].id"),
                format!("attribute `{}` declared more than once", attr.id),
            ));
        }
    }

    let mut facts: BTreeSet<FactRef> = BTreeSet::new();
    let mut metrics = BTreeSet::new();
    for (i, fact) in model.facts.iter().enumerate() {
        if !model.has_entity(&fact.entity) {
            out.push(Diagnostic::error(
                Code::DanglingFactEntity,
                format!("facts[{i}].entity"),
                format!("entity `{}` is not in the entity tree", fact.entity),
            ));
        }
        if !attributes.contains(fact.attribute.as_str()) {
            out.push(Diagnostic::error(
                Code::UnknownAttribute,
                format!("facts[{i}].attribute"),
                format!("attribute `{}` is not declared", fact.attribute),
            ));
        }
        if !facts.insert(fact.key()) {
            out.push(Diagnostic::error(
                Code::DuplicateFact,
                format!("facts[{i}]"),
                format!("fact `{}` declared more than once", fact.key()),
            ));
        }
        if let Some(metric) = &fact.metric {
            if !metrics.insert(metric.id.as_str()) {
                out.push(Diagnostic::error(
                    Code::DuplicateMetric,
                    format!("facts[{i}].metric"),
                    format!("metric `{}` declared more than once", metric.id),
                ));
            }
        }
    }

    let mut impacts: BTreeSet<(&FactRef, &NodeId)> = BTreeSet::new();
    for (i, impact) in model.impacts.iter().enumerate() {
        let fact = &impact.fact;
        if !model.has_entity(&fact.entity) {
            out.push(Diagnostic::error(
                Code::DanglingImpactEntity,
                format!("impacts[{i}].entity"),
                format!("entity `{}` is not in the entity tree", fact.entity),
            ));
        } else if !attributes.contains(fact.attribute.as_str()) {
            out.push(Diagnostic::error(
                Code::UnknownAttribute,
                format!("impacts[{i}].attribute"),
                format!("attribute `{}` is not declared", fact.attribute),
            ));
        } else if !facts.contains(fact) {
            out.push(Diagnostic::error(
                Code::DanglingImpactFact,
                format!("impacts[{i}]"),
                format!("fact `{fact}` is not declared"),
            ));
        }
        if !model.has_activity(&impact.activity) {
            out.push(Diagnostic::error(
                Code::DanglingImpactActivity,
                format!("impacts[{i}].activity"),
                format!("activity `{}` is not in the activity tree", impact.activity),
            ));
        }
        if !impacts.insert((fact, &impact.activity)) {
            out.push(Diagnostic::error(
                Code::DuplicateImpact,
                format!("impacts[{i}]"),
                format!("impact of `{fact}` on `{}` declared more than once", impact.activity),
            ));
        }
    }
    out
}

fn check_forest<N: TreeNode>(forest: &[N], section: &str, out: &mut Vec<Diagnostic>) {
    let mut seen = BTreeSet::new();
    for root in forest {
        check_node(root, None, section, &mut seen, out);
    }
}

fn check_node<'a, N: TreeNode>(
    node: &'a N,
    parent: Option<&NodeId>,
    section: &str,
    seen: &mut BTreeSet<&'a NodeId>,
    out: &mut Vec<Diagnostic>,
) {
    let id = node.id();
    let path = format!("{section}/{id}");
    if let Some(index) = id.first_bad_segment() {
        out.push(Diagnostic::error(
            Code::BadSegment,
            path.clone(),
            format!("segment {index} of `{id}` is not of the form [a-z0-9_]+"),
        ));
    }
    let extends_parent = match parent {
        None => id.depth() == 1,
        Some(p) => id.parent().as_ref() == Some(p),
    };
    if !extends_parent {
        let message = match parent {
            None => format!("root `{id}` must consist of a single segment"),
            Some(p) => format!("`{id}` does not extend parent `{p}` by exactly one segment"),
        };
        out.push(Diagnostic::error(Code::BadChildPath, path.clone(), message));
    }
    if !seen.insert(id) {
        out.push(Diagnostic::error(
            Code::DuplicateNode,
            path,
            format!("path `{id}` occurs more than once"),
        ));
    }
    for child in node.children() {
        check_node(child, Some(id), section, seen, out);
    }
}
