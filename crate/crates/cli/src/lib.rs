//! Command implementations and file formats for the `multiproj` CLI.
//!
//! All numbers in the JSON interfaces are decimal strings; rationals would
//! be serialized as "p/q" strings, but every quantity currently reported
//! (primitive rays, lattice vectors, sample points) is integral.

pub mod commands;
pub mod error;
pub mod render;
pub mod report;
pub mod schema;

pub use error::CliError;

use multiproj_core::Limits;

/// Parses the `MULTIPROJ_LIMITS` environment variable, a comma-separated
/// list of `key=value` overrides, e.g.
/// `max_vars=24,max_charts=30,max_chamber_rank=5`.
pub fn limits_from_env(var: Option<&str>) -> Result<Limits, CliError> {
    let mut limits = Limits::default();
    let Some(raw) = var else {
        return Ok(limits);
    };
    for item in raw.split(',').filter(|s| !s.trim().is_empty()) {
        let Some((key, value)) = item.split_once('=') else {
            return Err(CliError::input(format!(
                "MULTIPROJ_LIMITS entry '{item}' is not key=value"
            )));
        };
        let value: usize = value
            .trim()
            .parse()
            .map_err(|_| CliError::input(format!("MULTIPROJ_LIMITS value '{value}' is not a number")))?;
        match key.trim() {
            "max_vars" => limits.max_vars = value,
            "max_charts" => limits.max_charts = value,
            "max_chamber_rank" => limits.max_chamber_rank = value,
            "max_chamber_vars" => limits.max_chamber_vars = value,
            "max_hilbert_points" => limits.max_hilbert_points = value,
            other => {
                return Err(CliError::input(format!(
                    "unknown MULTIPROJ_LIMITS key '{other}'"
                )))
            }
        }
    }
    Ok(limits)
}
