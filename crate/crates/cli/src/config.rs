//! Resource bounds, read from an optional TOML file.
//!
//! ```toml
//! max_n = 6              # arity of certified and exhaustive paths
//! big_n = 7              # arity with --big
//! max_enumerate_n = 7    # listing bound for `enumerate`
//! max_pbt_leaves = 10    # leaves for planar binary trees
//! max_series_order = 20  # truncation order for `series` and `check series`
//! ```
//!
//! `OPERAD_FOREST_MAX_N` (or `--max-n`) replaces the arity bound outright.

use std::path::Path;

use serde::Deserialize;

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Bounds {
    pub max_n: usize,
    pub big_n: usize,
    pub max_enumerate_n: usize,
    pub max_pbt_leaves: usize,
    pub max_series_order: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_n: 6,
            big_n: 7,
            max_enumerate_n: 7,
            max_pbt_leaves: 10,
            max_series_order: 20,
        }
    }
}

impl Bounds {
    pub fn load(path: Option<&Path>) -> Result<Self, CliError> {
        let Some(path) = path else {
            return Ok(Bounds::default());
        };
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
        toml::from_str(&text).map_err(|e| CliError::Usage(format!("bad config {}: {e}", path.display())))
    }
}

/// Bounds in force for one invocation.
#[derive(Clone, Debug)]
pub struct Limits {
    pub bounds: Bounds,
    /// Arity bound after `--big` and the override.
    pub arity: usize,
}

impl Limits {
    pub fn new(bounds: Bounds, big: bool, max_n: Option<usize>) -> Self {
        let arity = max_n.unwrap_or(if big { bounds.big_n } else { bounds.max_n });
        Limits { bounds, arity }
    }

    /// `requested` if within `max`, the default clamped to `max` otherwise.
    pub fn pick(what: &str, requested: Option<usize>, default: usize, max: usize) -> Result<usize, CliError> {
        match requested {
            Some(v) if v > max => Err(CliError::Resource(format!(
                "{what} = {v} exceeds the configured bound {max} (raise it with --big, --config or OPERAD_FOREST_MAX_N)"
            ))),
            Some(v) => Ok(v),
            None => Ok(default.min(max)),
        }
    }
}
