//! Activity-based quality models.
//!
//! A [`QualityModel`] relates two trees: the activities stakeholders perform
//! on or with a system, and the entities of the situation (system, environment,
//! organisation). Entities carry attributes; an (entity, attribute) pair is a
//! [`Fact`], and an [`Impact`] states that a fact eases (`+`) or hinders (`-`)
//! an activity.
//!
//! On top of the model this crate provides the requirements pipeline
//! ([`requirements`]) and model-based quality assurance ([`assurance`]). It is
//! `no_std` and only needs `alloc`; file formats and the command line live in
//! the `aqm` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod assurance;
pub mod diagnostics;
pub mod fixtures;
pub mod id;
pub mod model;
pub mod requirements;
#[cfg(feature = "testkit")]
pub mod testkit;
mod validate;

pub use diagnostics::{Code, Diagnostic, Severity};
pub use id::{NodeId, NodeIdError};
pub use model::{
    ActivityNode, Assessability, Attribute, Direction, EntityNode, Fact, FactRef, Impact, Metric,
    NotFound, QualityModel, Tree, TreeNode,
};
pub use requirements::{
    derive_activities, rank_activities, refine, validate_requirements, ActivityRanking, Comparator,
    Measure, PipelineError, QualitativeRequirement, QuantifiedRequirement, Ratings,
    RefinedRequirement, RequirementsDocument, Scope, Stakeholder,
};
pub use validate::validate_model;
