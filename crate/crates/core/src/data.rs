//! Bundled data files. Setting `KMODULI_DATA_DIR` makes every lookup read from that directory
//! instead, with the same relative layout.

use std::path::PathBuf;

use crate::error::{Error, Result};

pub const DATA_DIR_VAR: &str = "KMODULI_DATA_DIR";

macro_rules! bundled {
    ($($path:literal),* $(,)?) => {
        &[$(($path, include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/data/", $path)))),*]
    };
}

static FILES: &[(&str, &str)] = bundled![
    "golden/cstar-quartics.toml",
    "golden/kwall-table.toml",
    "golden/replacements.toml",
    "golden/s-values.toml",
    "golden/walls.toml",
    "models/dp5-2a1.toml",
    "models/dp5-a1a2.toml",
    "models/f4.toml",
    "models/p114.toml",
    "models/p123.toml",
    "models/p1xp1.toml",
    "models/p2.toml",
    "models/sigma7-ns.toml",
    "models/sigma7.toml",
    "models/sigma8.toml",
    "models/x6-1-ns.toml",
    "models/x6-1-prime-ns.toml",
    "models/x6-1-prime.toml",
    "models/x6-11-ns.toml",
    "models/x6-11.toml",
    "models/x7-prime-ns.toml",
    "models/x7-prime.toml",
    "configs/binary-octic-conic.toml",
    "configs/cubic-surface.toml",
    "configs/deg5-2a1.toml",
    "configs/deg5-a1a2.toml",
    "configs/deg6-collinear.toml",
    "configs/deg6-p123.toml",
    "configs/deg6-prime-toric.toml",
    "configs/deg6-prime.toml",
    "configs/deg6-two-a1-ns.toml",
    "configs/deg6-two-a1.toml",
    "configs/deg7-line.toml",
    "configs/deg7-prime-fixed.toml",
    "configs/deg7-prime.toml",
    "configs/deg8-blp-cusp.toml",
    "configs/deg8-blp-tacnode.toml",
    "configs/deg8-p1xp1.toml",
    "configs/kwall-row3.toml",
    "configs/kwall-row4.toml",
    "configs/kwall-row5.toml",
    "configs/kwall-row6.toml",
    "configs/kwall-row7.toml",
    "configs/kwall-row8.toml",
    "configs/p114-double-section.toml",
    "configs/quartic-line.toml",
];

/// Override directory, when the environment variable is set.
pub fn override_dir() -> Option<PathBuf> {
    std::env::var_os(DATA_DIR_VAR).map(PathBuf::from)
}

pub fn read(path: &str) -> Result<String> {
    if let Some(dir) = override_dir() {
        let full = dir.join(path);
        return std::fs::read_to_string(&full)
            .map_err(|e| Error::Parse(format!("cannot read {}: {e}", full.display())));
    }
    FILES
        .iter()
        .find(|(p, _)| *p == path)
        .map(|(_, text)| text.to_string())
        .ok_or_else(|| Error::Parse(format!("no bundled data file {path}")))
}

/// Bundled files under a prefix, as names without the prefix and the `.toml` suffix.
pub fn list(prefix: &str) -> Vec<String> {
    FILES
        .iter()
        .filter_map(|(p, _)| p.strip_prefix(prefix))
        .map(|p| p.trim_end_matches(".toml").to_string())
        .collect()
}
