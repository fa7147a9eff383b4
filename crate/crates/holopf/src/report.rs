//! Report envelopes and where they go.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::Value;

use crate::error::CliError;

pub const TOOL: &str = "holopf";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
/// Directory for reports when `--out` is not given.
pub const OUT_DIR_ENV: &str = "HOLOPF_OUT_DIR";

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
}

impl Format {
    fn extension(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Text => "txt",
        }
    }
}

/// The echoed arguments of a run; keys are sorted.
pub type Config = BTreeMap<String, Value>;

#[derive(Serialize)]
struct Envelope<'a> {
    tool: &'static str,
    version: &'static str,
    command: &'a str,
    config: &'a Config,
    result: &'a Value,
}

/// What a command produced.
pub struct Outcome {
    pub result: Value,
    /// Full human-readable rendering.
    pub text: String,
    /// One line for the terminal when the report goes to a file.
    pub summary: String,
    pub exit: u8,
}

pub fn render(command: &str, config: &Config, outcome: &Outcome, format: Format) -> String {
    match format {
        Format::Json => {
            let env = Envelope {
                tool: TOOL,
                version: VERSION,
                command,
                config,
                result: &outcome.result,
            };
            let mut s = serde_json::to_string_pretty(&env).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = format!("{TOOL} {VERSION} {command}\n");
            for (k, v) in config {
                s.push_str(&format!("  {k} = {v}\n"));
            }
            s.push('\n');
            s.push_str(&outcome.text);
            if !outcome.text.ends_with('\n') {
                s.push('\n');
            }
            s
        }
    }
}

/// `--out`, else `$HOLOPF_OUT_DIR/<command>.<ext>`, else standard output.
pub fn destination(out: Option<&Path>, command: &str, format: Format) -> Option<PathBuf> {
    if let Some(p) = out {
        return Some(p.to_path_buf());
    }
    let dir = std::env::var_os(OUT_DIR_ENV).filter(|d| !d.is_empty())?;
    Some(Path::new(&dir).join(format!("{command}.{}", format.extension())))
}

pub fn emit(rendered: &str, dest: Option<&Path>, summary: &str) -> Result<(), CliError> {
    match dest {
        Some(path) => {
            if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
                std::fs::create_dir_all(parent)?;
            }
            std::fs::write(path, rendered)?;
            println!("{summary}");
            eprintln!("report written to {}", path.display());
        }
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(rendered.as_bytes())?;
        }
    }
    Ok(())
}
