//! Canonical JSON: sorted keys, arrays in declaration order, 2-space
//! indentation, trailing newline.

use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::error::ParseError;

pub fn to_canonical<T: Serialize + ?Sized>(value: &T) -> String {
    // Going through `Value` sorts object keys (its map is a BTreeMap).
    let tree = serde_json::to_value(value).expect("document types serialize to JSON");
    let mut text = serde_json::to_string_pretty(&tree).expect("a JSON value always prints");
    text.push('\n');
    text
}

/// Deserializes `text`, naming the offending field on schema violations.
pub fn from_text<T: DeserializeOwned>(text: &str) -> Result<T, ParseError> {
    let mut de = serde_json::Deserializer::from_str(text);
    let value = serde_path_to_error::deserialize(&mut de).map_err(|e| {
        // serde_json reports some wrong-kind values (an enum given as a
        // number) as syntax errors; well-formed JSON means it was the schema.
        let well_formed = serde_json::from_str::<serde::de::IgnoredAny>(text).is_ok();
        ParseError::from_path_error(e, well_formed)
    })?;
    de.end().map_err(ParseError::from_json)?;
    Ok(value)
}
