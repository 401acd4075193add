//! Derivation files.
//!
//! ```toml
//! loops = 1
//!
//! [values]
//! e1 = "v"
//! ```
//!
//! Keys are generator names (`e1`, `e1'`, ...), values are expressions. When
//! no dual value is given the duals are completed from the edge values; when
//! only dual values are given the edges are completed from them. Otherwise
//! missing values are zero and the table is taken as written, so it may fail
//! the relation check. A `v` entry is accepted only if it is zero.

use std::collections::BTreeMap;
use std::path::Path;

use leavitt_core::{AlgebraConfig, DerivationSpec, Element, Generator};
use serde::Deserialize;
use thiserror::Error;

use crate::syntax::{parse_element, SyntaxError};

#[derive(Debug, Error)]
pub enum FileError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed derivation file: {0}")]
    Format(#[from] toml::de::Error),
    #[error("unknown generator name '{0}'")]
    UnknownGenerator(String),
    #[error("value of {name}: {source}")]
    Value { name: String, source: SyntaxError },
    #[error(transparent)]
    Algebra(#[from] leavitt_core::Error),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    loops: u32,
    #[serde(default)]
    values: BTreeMap<String, String>,
}

fn generator_name(name: &str, cfg: &AlgebraConfig) -> Result<Generator, FileError> {
    let unknown = || FileError::UnknownGenerator(name.to_string());
    if name == "v" {
        return Ok(Generator::Vertex);
    }
    let rest = name.strip_prefix('e').ok_or_else(unknown)?;
    let (digits, dual) = match rest.strip_suffix('\'') {
        Some(d) => (d, true),
        None => (rest, false),
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(unknown());
    }
    let index: u32 = digits.parse().map_err(|_| unknown())?;
    cfg.check_edge(index)?;
    Ok(if dual {
        Generator::DualEdge(index)
    } else {
        Generator::Edge(index)
    })
}

pub fn parse_derivation(text: &str) -> Result<DerivationSpec, FileError> {
    let raw: RawFile = toml::from_str(text)?;
    let cfg = AlgebraConfig::new(raw.loops)?;
    let n = cfg.loops() as usize;
    let mut vertex = Element::zero();
    let mut edges: Vec<Option<Element>> = vec![None; n];
    let mut duals: Vec<Option<Element>> = vec![None; n];
    for (name, source) in &raw.values {
        let g = generator_name(name, &cfg)?;
        let value = parse_element(source, &cfg).map_err(|source| FileError::Value {
            name: name.clone(),
            source,
        })?;
        match g {
            Generator::Vertex => vertex = value,
            Generator::Edge(i) => edges[(i - 1) as usize] = Some(value),
            Generator::DualEdge(i) => duals[(i - 1) as usize] = Some(value),
        }
    }
    if !vertex.is_zero() {
        return Err(leavitt_core::Error::NonzeroVertexValue.into());
    }
    let fill = |values: Vec<Option<Element>>| -> Vec<Element> {
        values.into_iter().map(Option::unwrap_or_default).collect()
    };
    let any_edge = edges.iter().any(Option::is_some);
    let any_dual = duals.iter().any(Option::is_some);
    let spec = match (any_edge, any_dual) {
        (_, false) => DerivationSpec::complete_from_edge_values(cfg, fill(edges))?,
        (false, true) => DerivationSpec::complete_from_dual_values(cfg, fill(duals))?,
        (true, true) => DerivationSpec::with_vertex_value(cfg, &vertex, fill(edges), fill(duals))?,
    };
    Ok(spec)
}

pub fn load_derivation(path: &Path) -> Result<DerivationSpec, FileError> {
    let text = std::fs::read_to_string(path).map_err(|source| FileError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_derivation(&text)
}
