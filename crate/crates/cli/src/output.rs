//! Distribution files, the run manifest and checksums.
//!
//! Probabilities are written with Rust's shortest round-trip float formatting,
//! so equal distributions give byte-equal files.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use pauliwalk_core::analysis::Distribution;
use pauliwalk_core::Position;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::config::ConfigEcho;
use crate::error::{CliError, Result};

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().fold(String::with_capacity(64), |mut s, b| {
        let _ = write!(s, "{b:02x}");
        s
    })
}

/// `x[,y][,z],p` header then one sorted row per site.
pub fn render_csv(d: &Distribution, columns: &[&str]) -> String {
    let mut out = String::with_capacity(24 * (d.len() + 1));
    for c in columns {
        out.push_str(c);
        out.push(',');
    }
    out.push_str("p\n");
    for (p, v) in d.entries() {
        for c in p.coords() {
            let _ = write!(out, "{c},");
        }
        let _ = writeln!(out, "{v}");
    }
    out
}

pub fn parse_csv(path: &Path, text: &str) -> Result<Distribution> {
    let err = |line: usize, message: &str| CliError::Parse {
        path: path.to_path_buf(),
        message: format!("line {line}: {message}"),
    };
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or_else(|| err(1, "empty file"))?;
    let fields: Vec<&str> = header.split(',').collect();
    if fields.last() != Some(&"p") || !(2..=4).contains(&fields.len()) {
        return Err(err(1, "expected header x[,y][,z],p"));
    }
    let dim = fields.len() - 1;
    let mut entries = Vec::new();
    for (i, line) in lines {
        if line.trim().is_empty() {
            continue;
        }
        let cells: Vec<&str> = line.split(',').collect();
        if cells.len() != dim + 1 {
            return Err(err(i + 1, "wrong number of columns"));
        }
        let coords = cells[..dim]
            .iter()
            .map(|c| c.trim().parse::<i64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| err(i + 1, "bad coordinate"))?;
        let p: f64 = cells[dim].trim().parse().map_err(|_| err(i + 1, "bad probability"))?;
        entries.push((Position::from_slice(&coords)?, p));
    }
    Ok(Distribution::new(dim, entries)?)
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleOutcome {
    pub oracle: String,
    pub max_abs_diff: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct OutputDigest {
    pub path: String,
    pub sha256: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunManifest {
    pub tool: &'static str,
    pub version: &'static str,
    pub config: ConfigEcho,
    pub sites: usize,
    pub total_probability: f64,
    /// Checksum of the CSV rendering of the distribution, whatever the output format.
    pub distribution_sha256: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleOutcome>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub outputs: Vec<OutputDigest>,
}

#[derive(Serialize)]
struct JsonDistribution<'a> {
    manifest: &'a RunManifest,
    columns: Vec<&'a str>,
    rows: Vec<Vec<serde_json::Value>>,
}

pub fn render_json(d: &Distribution, columns: &[&str], manifest: &RunManifest) -> String {
    let mut names = columns.to_vec();
    names.push("p");
    let rows = d
        .entries()
        .iter()
        .map(|(p, v)| {
            let mut row: Vec<serde_json::Value> = p.coords().iter().map(|&c| c.into()).collect();
            row.push((*v).into());
            row
        })
        .collect();
    let doc = JsonDistribution { manifest, columns: names, rows };
    let mut text = serde_json::to_string_pretty(&doc).expect("serializable");
    text.push('\n');
    text
}

pub fn manifest_path(out: &Path) -> PathBuf {
    let mut name = out.file_name().unwrap_or_default().to_os_string();
    name.push(".manifest.json");
    out.with_file_name(name)
}

pub fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

pub fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}
