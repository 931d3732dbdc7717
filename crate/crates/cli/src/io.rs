//! Graph input, output sinks and run manifests.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{Context, Result};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use satforge::{graph6, Graph};

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct FileDigest {
    pub path: String,
    pub sha256: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunManifest {
    pub subcommand: String,
    /// Arguments after the program name, without the manifest flag.
    pub parameters: Vec<String>,
    pub inputs: Vec<FileDigest>,
    pub outputs: Vec<FileDigest>,
    pub stdout_sha256: String,
    pub tool_version: String,
    pub wall_time_ms: u128,
}

/// Collects everything a run reads and writes.
pub struct Run {
    started: Instant,
    pub inputs: Vec<FileDigest>,
    pub outputs: Vec<FileDigest>,
    stdout: String,
}

impl Run {
    pub fn new() -> Self {
        Run {
            started: Instant::now(),
            inputs: Vec::new(),
            outputs: Vec::new(),
            stdout: String::new(),
        }
    }

    pub fn println(&mut self, line: impl AsRef<str>) {
        self.stdout.push_str(line.as_ref());
        self.stdout.push('\n');
    }

    pub fn read_input(&mut self, path: &Path) -> Result<String> {
        let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        self.inputs.push(FileDigest {
            path: path.display().to_string(),
            sha256: sha256_hex(text.as_bytes()),
        });
        Ok(text)
    }

    pub fn write_output(&mut self, path: &Path, contents: &str) -> Result<()> {
        fs::write(path, contents).with_context(|| format!("writing {}", path.display()))?;
        self.outputs.push(FileDigest {
            path: path.display().to_string(),
            sha256: sha256_hex(contents.as_bytes()),
        });
        Ok(())
    }

    /// Writes `contents` to `out` when given, otherwise to stdout.
    pub fn emit(&mut self, out: Option<&Path>, contents: &str) -> Result<()> {
        match out {
            Some(p) => self.write_output(p, contents),
            None => {
                self.stdout.push_str(contents);
                if !contents.ends_with('\n') {
                    self.stdout.push('\n');
                }
                Ok(())
            }
        }
    }

    pub fn finish(self, subcommand: &str, parameters: Vec<String>, manifest: Option<&Path>) -> Result<()> {
        print!("{}", self.stdout);
        if let Some(path) = manifest {
            let m = RunManifest {
                subcommand: subcommand.to_string(),
                parameters,
                inputs: self.inputs,
                outputs: self.outputs,
                stdout_sha256: sha256_hex(self.stdout.as_bytes()),
                tool_version: env!("CARGO_PKG_VERSION").to_string(),
                wall_time_ms: self.started.elapsed().as_millis(),
            };
            let json = serde_json::to_string_pretty(&m)?;
            fs::write(path, json + "\n").with_context(|| format!("writing {}", path.display()))?;
        }
        Ok(())
    }
}

#[derive(Debug, clap::Args)]
pub struct GraphInput {
    /// File whose first non-empty line is a graph6 string.
    #[arg(long, conflicts_with = "g6")]
    pub graph: Option<PathBuf>,
    /// Inline graph6 string.
    #[arg(long)]
    pub g6: Option<String>,
}

impl GraphInput {
    pub fn load(&self, run: &mut Run) -> Result<Graph> {
        let text = match (&self.graph, &self.g6) {
            (Some(p), _) => run.read_input(p)?,
            (None, Some(s)) => s.clone(),
            (None, None) => anyhow::bail!(crate::UsageError("a graph is required: pass --graph FILE or --g6 STRING".into())),
        };
        let line = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty())
            .ok_or_else(|| crate::UsageError("graph input is empty".into()))?;
        Ok(graph6::decode(line).map_err(|e| crate::UsageError(e.to_string()))?)
    }
}

pub fn to_json<T: Serialize>(v: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}
