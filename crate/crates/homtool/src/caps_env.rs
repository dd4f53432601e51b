//! `HOMTOOL_CAPS`: comma-separated `key=value` overrides of the size caps.
//!
//! Keys: `canonical`, `enumerate`, `enumerate-loops`, `automorphisms`,
//! `partitions`.

use homtool_core::Caps;

use crate::error::CliError;

pub const VAR: &str = "HOMTOOL_CAPS";

pub fn parse_caps(spec: &str, base: Caps) -> Result<Caps, CliError> {
    let mut caps = base;
    for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (key, value) = item
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("{VAR}: expected key=value, got {item:?}")))?;
        let value: usize = value
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{VAR}: bad number in {item:?}")))?;
        let slot = match key.trim() {
            "canonical" => &mut caps.canonical,
            "enumerate" => &mut caps.enumerate_loop_free,
            "enumerate-loops" => &mut caps.enumerate_loops,
            "automorphisms" => &mut caps.automorphisms,
            "partitions" => &mut caps.partitions,
            other => return Err(CliError::Usage(format!("{VAR}: unknown cap {other:?}"))),
        };
        *slot = value;
    }
    Ok(caps)
}

/// Installs caps from the environment, if set.
pub fn install_from_env() -> Result<(), CliError> {
    if let Ok(spec) = std::env::var(VAR) {
        parse_caps(&spec, Caps::current())?.install();
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_overrides() {
        let c = parse_caps("enumerate=7, partitions=8", Caps::DEFAULT).unwrap();
        assert_eq!(c.enumerate_loop_free, 7);
        assert_eq!(c.partitions, 8);
        assert_eq!(c.canonical, Caps::DEFAULT.canonical);
        assert!(parse_caps("bogus=1", Caps::DEFAULT).is_err());
        assert!(parse_caps("canonical", Caps::DEFAULT).is_err());
        assert_eq!(parse_caps("", Caps::DEFAULT).unwrap(), Caps::DEFAULT);
    }
}
