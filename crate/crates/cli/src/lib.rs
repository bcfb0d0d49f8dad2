//! Command-line front end for `monodromy-core`: file formats, atomic output
//! and the subcommand implementations. `main.rs` only parses arguments.

use std::io::Write;
use std::path::Path;

pub mod commands;
pub mod format;

/// Environment variable overriding the dimension cap on inputs.
pub const MAX_DIM_ENV: &str = "MONODROMY_MAX_DIM";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Cap(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Cap(_) => 3,
            CliError::Io(_) => 2,
        }
    }
}

impl From<monodromy_core::Error> for CliError {
    fn from(e: monodromy_core::Error) -> Self {
        match e {
            monodromy_core::Error::ClosureCap { .. } => CliError::Cap(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

/// Rendered output of a command plus its exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub body: String,
    pub exit_code: u8,
}

impl Output {
    pub fn ok(body: String) -> Self {
        Self { body, exit_code: 0 }
    }
}

/// Dimension cap from [`MAX_DIM_ENV`], or the library default.
pub fn max_dim() -> Result<usize, CliError> {
    match std::env::var(MAX_DIM_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&d| d >= 2)
            .ok_or_else(|| CliError::Input(format!("{MAX_DIM_ENV} must be an integer >= 2, got {v:?}"))),
        Err(_) => Ok(monodromy_core::DEFAULT_MAX_DIM),
    }
}

/// Writes `contents` to `path` through a temporary file in the same
/// directory, then renames it into place.
pub fn write_atomic(path: &Path, contents: &[u8]) -> Result<(), CliError> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| CliError::Io(e.error))?;
    Ok(())
}

pub(crate) fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}
