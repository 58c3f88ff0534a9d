//! Dot-separated node paths shared by the activity and entity trees.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use thiserror::Error;

/// A node path such as `vehicle.tics.hardware.display.position`.
///
/// A `NodeId` may hold an ill-formed path: models are accepted as arbitrary
/// candidates and [`crate::validate_model`] reports malformed segments. Use
/// [`NodeId::parse`] when the input should be rejected up front.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(transparent))]
pub struct NodeId(String);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NodeIdError {
    #[error("node path is empty")]
    Empty,
    #[error("segment {index} of `{path}` is not of the form [a-z0-9_]+")]
    BadSegment { path: String, index: usize },
}

/// Returns true when `segment` is non-empty and only contains `[a-z0-9_]`.
pub fn is_valid_segment(segment: &str) -> bool {
    !segment.is_empty()
        && segment
            .bytes()
            .all(|b| b.is_ascii_lowercase() || b.is_ascii_digit() || b == b'_')
}

impl NodeId {
    /// Parses and checks a dotted path.
    pub fn parse(path: &str) -> Result<Self, NodeIdError> {
        if path.is_empty() {
            return Err(NodeIdError::Empty);
        }
        if let Some(index) = path.split('.').position(|s| !is_valid_segment(s)) {
            return Err(NodeIdError::BadSegment {
                path: path.into(),
                index,
            });
        }
        Ok(NodeId(path.into()))
    }

    /// Wraps a path without checking it.
    pub fn from_raw(path: impl Into<String>) -> Self {
        NodeId(path.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn segments(&self) -> impl Iterator<Item = &str> {
        self.0.split('.')
    }

    /// Index of the first malformed segment, if any.
    pub fn first_bad_segment(&self) -> Option<usize> {
        self.segments().position(|s| !is_valid_segment(s))
    }

    pub fn is_well_formed(&self) -> bool {
        self.first_bad_segment().is_none()
    }

    pub fn depth(&self) -> usize {
        self.segments().count()
    }

    /// Last segment of the path.
    pub fn leaf_segment(&self) -> &str {
        self.0.rsplit('.').next().unwrap_or("")
    }

    pub fn parent(&self) -> Option<NodeId> {
        self.0.rfind('.').map(|i| NodeId(self.0[..i].into()))
    }

    /// Appends one segment.
    pub fn child(&self, segment: &str) -> NodeId {
        let mut path = String::with_capacity(self.0.len() + 1 + segment.len());
        path.push_str(&self.0);
        path.push('.');
        path.push_str(segment);
        NodeId(path)
    }

    /// True when `self` equals `ancestor` or lies below it.
    pub fn is_within(&self, ancestor: &NodeId) -> bool {
        let (me, anc) = (self.0.as_str(), ancestor.0.as_str());
        me == anc || (me.len() > anc.len() && me.starts_with(anc) && me.as_bytes()[anc.len()] == b'.')
    }

    /// All proper prefixes, root first.
    pub fn ancestors(&self) -> Vec<NodeId> {
        self.0
            .match_indices('.')
            .map(|(i, _)| NodeId(self.0[..i].into()))
            .collect()
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for NodeId {
    type Err = NodeIdError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        NodeId::parse(s)
    }
}

impl AsRef<str> for NodeId {
    fn as_ref(&self) -> &str {
        &self.0
    }
}
