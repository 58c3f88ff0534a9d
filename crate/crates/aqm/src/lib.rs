//! File formats, matrix export and the command-line front end for
//! activity-based quality models.

#![forbid(unsafe_code)]

pub mod cli;
pub mod documents;
mod error;
pub mod fsio;
pub mod json;
pub mod matrix;
pub mod model_doc;
pub mod render;
pub mod templates;

pub use documents::{
    load_requirements, parse_metrics, parse_requirements, serialize_metrics, serialize_requirements,
};
pub use error::ParseError;
pub use matrix::{export_matrix, ImpactMatrix};
pub use model_doc::{parse_model, parse_model_unchecked, serialize_model};
