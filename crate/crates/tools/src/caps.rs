//! Cap overrides from the `DCPO_CAPS` environment variable.
//!
//! The value is a comma-separated list of `key=value` pairs, for example
//! `DCPO_CAPS="enum=7,beneath=24"`. Keys: `enum`, `family`, `beneath`,
//! `subsets`, `johnstone`, `kou`.

use dcpo_core::Caps;

use crate::error::ToolError;

pub const CAPS_VAR: &str = "DCPO_CAPS";

pub fn parse_caps(spec: &str) -> Result<Caps, ToolError> {
    let mut caps = Caps::default();
    for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (key, value) = item
            .split_once('=')
            .ok_or_else(|| ToolError::Usage(format!("{CAPS_VAR}: expected key=value, found `{item}`")))?;
        let value: usize = value
            .trim()
            .parse()
            .map_err(|_| ToolError::Usage(format!("{CAPS_VAR}: `{value}` is not a natural number")))?;
        let slot = match key.trim() {
            "enum" => &mut caps.enumeration_max,
            "family" => &mut caps.family_max,
            "beneath" => &mut caps.beneath_max,
            "subsets" => &mut caps.subset_max,
            "johnstone" => &mut caps.johnstone_window_max,
            "kou" => &mut caps.kou_window_max,
            other => return Err(ToolError::Usage(format!("{CAPS_VAR}: unknown cap `{other}`"))),
        };
        *slot = value;
    }
    if caps.enumeration_max > Caps::ENUMERATION_CEILING {
        return Err(ToolError::Usage(format!(
            "{CAPS_VAR}: enum cap {} is above the hard ceiling {}",
            caps.enumeration_max,
            Caps::ENUMERATION_CEILING
        )));
    }
    Ok(caps)
}

/// Defaults, overridden by `DCPO_CAPS` when set.
pub fn caps_from_env() -> Result<Caps, ToolError> {
    match std::env::var(CAPS_VAR) {
        Ok(spec) => parse_caps(&spec),
        Err(std::env::VarError::NotPresent) => Ok(Caps::default()),
        Err(e) => Err(ToolError::Usage(format!("{CAPS_VAR}: {e}"))),
    }
}
