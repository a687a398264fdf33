//! Output directory handling and the run manifest.

use std::fs;
use std::path::{Path, PathBuf};

use chrono::{DateTime, Utc};
use serde::Serialize;

use crate::error::{CliError, CliResult};

pub const MANIFEST_FILE: &str = "manifest.json";

/// Record of one command invocation. The only file whose content depends on
/// the wall clock.
#[derive(Debug, Clone, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub config: serde_json::Value,
    pub started_at: DateTime<Utc>,
    pub tool_version: String,
    pub outputs: Vec<String>,
}

pub struct OutputDir {
    root: PathBuf,
    written: Vec<PathBuf>,
    started_at: DateTime<Utc>,
}

impl OutputDir {
    pub fn create(root: &Path) -> CliResult<Self> {
        fs::create_dir_all(root).map_err(|e| CliError::io(root.display(), e))?;
        Ok(Self {
            root: root.to_path_buf(),
            written: Vec::new(),
            started_at: Utc::now(),
        })
    }

    pub fn path(&self, name: &str) -> PathBuf {
        self.root.join(name)
    }

    pub fn write_csv<T: Serialize>(&mut self, name: &str, rows: &[T]) -> CliResult<()> {
        let path = self.path(name);
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_path(&path)?;
        for row in rows {
            w.serialize(row)?;
        }
        w.flush().map_err(|e| CliError::io(path.display(), e))?;
        self.written.push(path);
        Ok(())
    }

    /// CSV with an explicit header, for outputs that may have no rows.
    pub fn write_csv_with_header<T: Serialize>(
        &mut self,
        name: &str,
        header: &[&str],
        rows: &[T],
    ) -> CliResult<()> {
        let path = self.path(name);
        let mut w = csv::WriterBuilder::new()
            .has_headers(false)
            .terminator(csv::Terminator::Any(b'\n'))
            .from_path(&path)?;
        w.write_record(header)?;
        for row in rows {
            w.serialize(row)?;
        }
        w.flush().map_err(|e| CliError::io(path.display(), e))?;
        self.written.push(path);
        Ok(())
    }

    pub fn write_json<T: Serialize + ?Sized>(&mut self, name: &str, value: &T) -> CliResult<()> {
        let path = self.path(name);
        let mut text = serde_json::to_string_pretty(value)?;
        text.push('\n');
        fs::write(&path, text).map_err(|e| CliError::io(path.display(), e))?;
        self.written.push(path);
        Ok(())
    }

    /// Writes `manifest.json` listing every file written so far.
    pub fn finish(self, command: &str, config: serde_json::Value) -> CliResult<PathBuf> {
        let manifest = RunManifest {
            command: command.to_string(),
            config,
            started_at: self.started_at,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            outputs: self
                .written
                .iter()
                .map(|p| p.display().to_string())
                .collect(),
        };
        let path = self.path(MANIFEST_FILE);
        let mut text = serde_json::to_string_pretty(&manifest)?;
        text.push('\n');
        fs::write(&path, text).map_err(|e| CliError::io(path.display(), e))?;
        Ok(path)
    }
}
