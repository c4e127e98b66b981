//! The JSON persistence format and the CSV export.
//!
//! JSON is the single authoritative format: coordinates are stored as
//! exact ℚ(√2) text (`"-1/2+3/4√2"`) alongside lossy float
//! approximations, points in canonical lexicographic order, so a file
//! round-trips with zero information loss and identical bytes. CSV is
//! export-only (floats at 17 significant digits).

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use hopflift::algebra::{ExactScalar, Hyper};
use hopflift::constructions::{ConfigMeta, Configuration, ConstructionError, FiberLabel, Method};
use serde::{Deserialize, Serialize};

use crate::CliError;

pub const SCHEMA_VERSION: u32 = 1;

/// How far the stored float approximation may drift from the exact
/// coordinate before the file is rejected as inconsistent.
pub const APPROX_TOLERANCE: f64 = 1e-12;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConfigFile {
    pub schema_version: u32,
    pub meta: MetaSection,
    pub points: Vec<PointRecord>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MetaSection {
    pub name: String,
    pub method: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub level: Option<u8>,
    pub ambient_dim: usize,
    pub antipodal: bool,
    /// Fiber label → exact coordinates of the unit offset applied.
    pub offsets: BTreeMap<String, Vec<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PointRecord {
    pub coords: Vec<String>,
    pub approx: Vec<f64>,
    pub fiber: String,
}

pub fn to_config_file(config: &Configuration) -> ConfigFile {
    let meta = config.meta();
    let offsets = meta
        .offsets
        .iter()
        .map(|(label, h)| {
            (
                label.to_string(),
                h.coords().iter().map(ExactScalar::to_text).collect(),
            )
        })
        .collect();
    let points = config
        .points()
        .iter()
        .zip(config.labels())
        .map(|(p, label)| PointRecord {
            coords: p.iter().map(ExactScalar::to_text).collect(),
            approx: p.iter().map(ExactScalar::to_f64).collect(),
            fiber: label.to_string(),
        })
        .collect();
    ConfigFile {
        schema_version: SCHEMA_VERSION,
        meta: MetaSection {
            name: meta.name.clone(),
            method: meta.method.to_string(),
            level: meta.level,
            ambient_dim: config.ambient_dim(),
            antipodal: meta.antipodal,
            offsets,
        },
        points,
    }
}

/// Parsed file body: metadata, ambient dimension, labeled exact points.
pub type ParsedConfig = (ConfigMeta, usize, Vec<(Vec<ExactScalar>, FiberLabel)>);

/// Parses the file back into exact labeled points plus metadata. All
/// failures here are input errors; the configuration-level invariants
/// (unit norms, distinctness, antipodality) are checked separately so
/// `verify` can report them as verification failures.
pub fn parse_config_file(file: &ConfigFile) -> Result<ParsedConfig, CliError> {
    if file.schema_version != SCHEMA_VERSION {
        return Err(CliError::Input(format!(
            "unsupported schema_version {} (expected {SCHEMA_VERSION})",
            file.schema_version
        )));
    }
    let method: Method = file
        .meta
        .method
        .parse()
        .map_err(|_| CliError::Input(format!("unknown method {:?}", file.meta.method)))?;
    let mut offsets = BTreeMap::new();
    for (label, coords) in &file.meta.offsets {
        let label: FiberLabel = label
            .parse()
            .map_err(|_| CliError::Input(format!("bad fiber label {label:?}")))?;
        let coords = parse_coords(coords)?;
        let level = coords.len().trailing_zeros() as u8;
        let h = Hyper::new(level, coords)
            .map_err(|e| CliError::Input(format!("bad offset for {label}: {e}")))?;
        offsets.insert(label, h);
    }
    let meta = ConfigMeta {
        name: file.meta.name.clone(),
        method,
        level: file.meta.level,
        antipodal: file.meta.antipodal,
        offsets,
    };
    let mut points = Vec::with_capacity(file.points.len());
    for (i, rec) in file.points.iter().enumerate() {
        let coords = parse_coords(&rec.coords)?;
        if rec.approx.len() != coords.len() {
            return Err(CliError::Input(format!(
                "point {i}: approx length {} does not match coords length {}",
                rec.approx.len(),
                coords.len()
            )));
        }
        for (c, &a) in coords.iter().zip(&rec.approx) {
            if (c.to_f64() - a).abs() > APPROX_TOLERANCE {
                return Err(CliError::Input(format!(
                    "point {i}: approx {a} disagrees with exact {c}"
                )));
            }
        }
        let label: FiberLabel = rec
            .fiber
            .parse()
            .map_err(|_| CliError::Input(format!("point {i}: bad fiber label {:?}", rec.fiber)))?;
        points.push((coords, label));
    }
    Ok((meta, file.meta.ambient_dim, points))
}

fn parse_coords(coords: &[String]) -> Result<Vec<ExactScalar>, CliError> {
    coords
        .iter()
        .map(|s| {
            s.parse::<ExactScalar>()
                .map_err(|e| CliError::Input(e.to_string()))
        })
        .collect()
}

pub fn write_config(config: &Configuration, path: &Path) -> Result<(), CliError> {
    let file = to_config_file(config);
    let mut json = serde_json::to_string_pretty(&file)?;
    json.push('\n');
    fs::write(path, json)?;
    Ok(())
}

pub fn read_config_file(path: &Path) -> Result<ConfigFile, CliError> {
    let data = fs::read_to_string(path)?;
    Ok(serde_json::from_str(&data)?)
}

/// Strict load: parses and enforces every configuration invariant.
pub fn load_configuration(path: &Path) -> Result<Configuration, CliError> {
    let file = read_config_file(path)?;
    let (meta, dim, points) = parse_config_file(&file)?;
    Configuration::new(meta, dim, points).map_err(CliError::Construction)
}

/// Lenient load for `verify`: invariant violations are returned as a
/// verification failure rather than an input error.
pub fn load_for_verification(
    path: &Path,
) -> Result<Result<Configuration, ConstructionError>, CliError> {
    let file = read_config_file(path)?;
    let (meta, dim, points) = parse_config_file(&file)?;
    Ok(Configuration::new(meta, dim, points))
}

/// CSV export: header `x0..x{d-1},fiber`, floats at 17 significant
/// digits.
pub fn to_csv(config: &Configuration) -> String {
    let dim = config.ambient_dim();
    let mut out = String::new();
    for k in 0..dim {
        let _ = write!(out, "x{k},");
    }
    out.push_str("fiber\n");
    for (p, label) in config.points().iter().zip(config.labels()) {
        for c in p {
            let _ = write!(out, "{:.16e},", c.to_f64());
        }
        let _ = writeln!(out, "{label}");
    }
    out
}
