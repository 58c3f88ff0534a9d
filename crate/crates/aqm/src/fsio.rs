use std::io::{self, Write};
use std::path::{Path, PathBuf};

#[derive(Debug, thiserror::Error)]
#[error("{}: {source}", path.display())]
pub struct IoError {
    pub path: PathBuf,
    #[source]
    pub source: io::Error,
}

impl IoError {
    fn at(path: &Path) -> impl FnOnce(io::Error) -> IoError + '_ {
        move |source| IoError {
            path: path.to_owned(),
            source,
        }
    }
}

pub fn read_text(path: &Path) -> Result<String, IoError> {
    std::fs::read_to_string(path).map_err(IoError::at(path))
}

/// Writes via a temporary file in the target directory and renames it into
/// place, so readers never observe a partial document.
pub fn write_atomic(path: &Path, contents: &str) -> Result<(), IoError> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(IoError::at(path))?;
    tmp.write_all(contents.as_bytes()).map_err(IoError::at(path))?;
    tmp.as_file().sync_all().map_err(IoError::at(path))?;
    tmp.persist(path).map_err(|e| IoError::at(path)(e.error))?;
    Ok(())
}
