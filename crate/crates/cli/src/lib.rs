//! Batch runner for `exturan`: one subcommand per library operation, configs
//! as `key=value` pairs or flat files, reports as JSON or CSV.

pub mod commands;
pub mod config;

use std::io::Write;
use std::path::Path;
use std::time::Duration;

use indexmap::IndexMap;
use serde_json::{json, Value};

pub use commands::run;
pub use config::{parse_config_text, Command, ExperimentConfig, Format};

/// One result row. Every value is a string so big counts survive any consumer.
pub type Row = IndexMap<String, String>;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid config: {0}")]
    Config(String),
    #[error(transparent)]
    Core(#[from] exturan::Error),
    #[error("writing output: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    /// 2 for bad input, 3 for a search cap, 4 for an internal invariant failure.
    pub fn exit_code(&self) -> i32 {
        use exturan::Error as E;
        match self {
            CliError::Config(_) => 2,
            CliError::Core(e) => match e {
                E::SearchCapExceeded { .. } | E::TooLargeForExact { .. } | E::TooManyVertices { .. } => 3,
                E::Internal(_) => 4,
                _ => 2,
            },
            CliError::Io(_) | CliError::Csv(_) => 1,
        }
    }
}

#[derive(Debug)]
pub struct Report {
    pub config: ExperimentConfig,
    pub rows: Vec<Row>,
    pub elapsed: Duration,
    /// False only when a `verify` suite has a failing criterion.
    pub passed: bool,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut config: IndexMap<String, Value> = IndexMap::new();
        config.insert("command".into(), json!(self.config.command.name()));
        for (k, v) in &self.config.params {
            config.insert(k.clone(), json!(v));
        }
        config.insert("format".into(), json!(self.config.format.name()));
        let doc = json!({
            "tool": "exturan",
            "version": env!("CARGO_PKG_VERSION"),
            "command": self.config.command.name(),
            "config": config,
            "passed": self.passed,
            "rows": self.rows,
            "timing": { "elapsed_ms": self.elapsed.as_secs_f64() * 1e3 },
        });
        let mut s = serde_json::to_string_pretty(&doc).expect("json values always serialize");
        s.push('\n');
        s
    }

    /// Header from the first row's keys; an empty report is an empty file.
    pub fn to_csv(&self) -> Result<String, CliError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        if let Some(first) = self.rows.first() {
            w.write_record(first.keys())?;
            for row in &self.rows {
                w.write_record(row.values())?;
            }
        }
        let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv of utf-8 strings"))
    }

    pub fn render(&self) -> Result<String, CliError> {
        match self.config.format {
            Format::Json => Ok(self.to_json()),
            Format::Csv => self.to_csv(),
        }
    }
}

/// Write through a temporary file in the same directory, then rename.
pub fn write_atomic(path: &Path, contents: &str) -> Result<(), CliError> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| CliError::Io(e.error))?;
    Ok(())
}
