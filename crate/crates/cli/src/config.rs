//! Experiment configs: `key=value` arguments and flat `key = value` files.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use indexmap::IndexMap;

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Command {
    Count,
    Turan,
    FEval,
    Decomp,
    Biex,
    Construct,
    Exsearch,
    Multipartite,
    Classify,
    AnalyticSweep,
    Verify,
}

impl Command {
    pub const ALL: [Command; 11] = [
        Command::Count,
        Command::Turan,
        Command::FEval,
        Command::Decomp,
        Command::Biex,
        Command::Construct,
        Command::Exsearch,
        Command::Multipartite,
        Command::Classify,
        Command::AnalyticSweep,
        Command::Verify,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::Count => "count",
            Command::Turan => "turan",
            Command::FEval => "f-eval",
            Command::Decomp => "decomp",
            Command::Biex => "biex",
            Command::Construct => "construct",
            Command::Exsearch => "exsearch",
            Command::Multipartite => "multipartite",
            Command::Classify => "classify",
            Command::AnalyticSweep => "analytic-sweep",
            Command::Verify => "verify",
        }
    }

    /// Parameters accepted by the command, required ones first.
    pub fn keys(self) -> &'static [&'static str] {
        match self {
            Command::Count => &["G", "T"],
            Command::Turan => &["n", "r", "m"],
            Command::FEval => &["r", "s", "t", "n", "a"],
            Command::Decomp => &["H"],
            Command::Biex => &["n", "H"],
            Command::Construct => &["n", "H", "m"],
            Command::Exsearch => &["n", "T", "H", "mode", "seed", "iterations", "workers"],
            Command::Multipartite => &["n", "r", "s", "t"],
            Command::Classify => &["r", "s", "t"],
            Command::AnalyticSweep => &["quantity", "r", "s", "t", "from", "to", "steps", "n", "x", "alpha"],
            Command::Verify => &["suite"],
        }
    }
}

impl FromStr for Command {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        Command::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| {
            let names: Vec<_> = Command::ALL.iter().map(|c| c.name()).collect();
            CliError::Config(format!("unknown command {s:?}; expected one of {}", names.join(", ")))
        })
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(CliError::Config(format!("unknown format {s:?}; expected csv or json"))),
        }
    }
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExperimentConfig {
    pub command: Command,
    /// Parameters in the order given.
    pub params: IndexMap<String, String>,
    pub output: Option<PathBuf>,
    pub format: Format,
}

/// Parse a flat config file. Blank lines and `#` comments are skipped; every
/// other line is `key = value`. Duplicate keys are rejected.
pub fn parse_config_text(text: &str) -> Result<IndexMap<String, String>, CliError> {
    let mut out = IndexMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| CliError::Config(format!("line {}: expected key = value", i + 1)))?;
        let (key, value) = (key.trim(), value.trim());
        if key.is_empty() || !key.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-') {
            return Err(CliError::Config(format!("line {}: bad key {key:?}", i + 1)));
        }
        if out.insert(key.to_string(), value.to_string()).is_some() {
            return Err(CliError::Config(format!("line {}: duplicate key {key:?}", i + 1)));
        }
    }
    Ok(out)
}

pub(crate) fn split_arg(arg: &str) -> Result<(String, String), CliError> {
    let (k, v) = arg.split_once('=').ok_or_else(|| CliError::Config(format!("expected key=value, got {arg:?}")))?;
    if k.is_empty() {
        return Err(CliError::Config(format!("empty key in {arg:?}")));
    }
    Ok((k.to_string(), v.to_string()))
}

impl ExperimentConfig {
    /// Merge a config file (optional) with command-line pieces; the command
    /// line wins on conflicts. `command` may come from either.
    pub fn assemble(
        command: Option<&str>,
        args: &[String],
        file: Option<&Path>,
        output: Option<PathBuf>,
        format: Option<Format>,
    ) -> Result<Self, CliError> {
        let text = match file {
            Some(path) => std::fs::read_to_string(path)
                .map_err(|e| CliError::Config(format!("reading {}: {e}", path.display())))?,
            None => String::new(),
        };
        Self::from_parts(command, args, &text, output, format)
    }

    /// A config from the text of a config file alone.
    pub fn from_text(text: &str) -> Result<Self, CliError> {
        Self::from_parts(None, &[], text, None, None)
    }

    fn from_parts(
        command: Option<&str>,
        args: &[String],
        text: &str,
        output: Option<PathBuf>,
        format: Option<Format>,
    ) -> Result<Self, CliError> {
        let mut map = parse_config_text(text)?;
        let file_command = map.shift_remove("command");
        let command: Command = match (command, file_command) {
            (Some(c), _) => c.parse()?,
            (None, Some(c)) => c.parse()?,
            (None, None) => return Err(CliError::Config("no command given".into())),
        };
        let mut output = output;
        if let Some(o) = map.shift_remove("out") {
            output.get_or_insert(PathBuf::from(o));
        }
        let file_format = map.shift_remove("format").map(|f| f.parse()).transpose()?;
        let format = format.or(file_format).unwrap_or_default();

        for (i, arg) in args.iter().enumerate() {
            // `verify all` and `verify curvature` read naturally without `suite=`.
            if command == Command::Verify && i == 0 && !arg.contains('=') {
                map.insert("suite".into(), arg.clone());
                continue;
            }
            let (k, v) = split_arg(arg)?;
            map.insert(k, v);
        }
        let config = ExperimentConfig { command, params: map, output, format };
        config.check_keys()?;
        Ok(config)
    }

    fn check_keys(&self) -> Result<(), CliError> {
        let allowed = self.command.keys();
        for key in self.params.keys() {
            if !allowed.contains(&key.as_str()) {
                return Err(CliError::Config(format!(
                    "unknown key {key:?} for {}; accepted: {}",
                    self.command,
                    allowed.join(", ")
                )));
            }
        }
        Ok(())
    }

    /// The config as flat text that `--config` accepts back.
    pub fn to_text(&self) -> String {
        let mut s = format!("command = {}\n", self.command);
        for (k, v) in &self.params {
            s.push_str(&format!("{k} = {v}\n"));
        }
        if let Some(o) = &self.output {
            s.push_str(&format!("out = {}\n", o.display()));
        }
        s.push_str(&format!("format = {}\n", self.format.name()));
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_format() {
        let m = parse_config_text("# run\ncommand = turan\n n=7 \n\nr = 3 # parts\nm = 3\n").unwrap();
        assert_eq!(m.get_index(1).unwrap(), (&"n".to_string(), &"7".to_string()));
        assert_eq!(m.len(), 4);
        assert!(parse_config_text("n 7").is_err());
        assert!(parse_config_text("n = 1\nn = 2").is_err());
        assert!(parse_config_text("a b = 1").is_err());
    }

    #[test]
    fn unknown_keys_rejected() {
        let err = ExperimentConfig::assemble(Some("turan"), &["n=7".into(), "k=3".into()], None, None, None);
        assert!(matches!(err, Err(CliError::Config(_))));
        assert!(ExperimentConfig::assemble(Some("nope"), &[], None, None, None).is_err());
        assert!(ExperimentConfig::assemble(None, &[], None, None, None).is_err());
    }

    #[test]
    fn verify_takes_a_bare_suite() {
        let c = ExperimentConfig::assemble(Some("verify"), &["all".into()], None, None, None).unwrap();
        assert_eq!(c.params["suite"], "all");
    }

    #[test]
    fn text_round_trip() {
        let args: Vec<String> = ["n=6", "T=K3", "H=K4", "seed=9"].map(String::from).to_vec();
        let c = ExperimentConfig::assemble(Some("exsearch"), &args, None, Some("o.csv".into()), Some(Format::Csv)).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.conf");
        std::fs::write(&path, c.to_text()).unwrap();
        let back = ExperimentConfig::assemble(None, &[], Some(&path), None, None).unwrap();
        assert_eq!(back, c);
    }
}
