use aqm_core::Diagnostic;
use serde_json::error::Category;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("schema violation at `{path}` (line {line}, column {column}): {message}")]
    Schema {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{} semantic error(s), first: {}", .0.len(), .0.first().map(ToString::to_string).unwrap_or_default())]
    Semantic(Vec<Diagnostic>),
}

impl ParseError {
    pub(crate) fn from_json(err: serde_json::Error) -> Self {
        Self::classify(String::from("."), err, false)
    }

    pub(crate) fn from_path_error(err: serde_path_to_error::Error<serde_json::Error>, well_formed: bool) -> Self {
        let path = err.path().to_string();
        Self::classify(path, err.into_inner(), well_formed)
    }

    fn classify(path: String, err: serde_json::Error, well_formed: bool) -> Self {
        let (line, column) = (err.line(), err.column());
        // serde_json appends " at line L column C"; the fields carry that already.
        let mut message = err.to_string();
        if let Some(cut) = message.rfind(" at line ") {
            message.truncate(cut);
        }
        match err.classify() {
            Category::Data | Category::Syntax if well_formed => ParseError::Schema {
                path,
                line,
                column,
                message,
            },
            _ => ParseError::Syntax {
                line,
                column,
                message,
            },
        }
    }

    pub fn diagnostics(&self) -> &[Diagnostic] {
        match self {
            ParseError::Semantic(d) => d,
            _ => &[],
        }
    }
}
