use super::group::PermGroup;
use super::parse::GroupInput;
use super::table::{character_table, CharacterTable};
use super::{Caps, ChartabError};
use std::fs;
use std::path::{Path, PathBuf};

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "CODEGREE_CACHE_DIR";

/// A directory of `<sha256>.table.json` files.
#[derive(Debug, Clone)]
pub struct TableCache {
    dir: PathBuf,
}

impl TableCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        TableCache { dir: dir.into() }
    }

    /// `$CODEGREE_CACHE_DIR`, else `$HOME/.cache/codegree`, else a
    /// directory under the system temp dir.
    pub fn default_location() -> Self {
        if let Some(d) = std::env::var_os(CACHE_ENV) {
            return TableCache::new(d);
        }
        match std::env::var_os("HOME") {
            Some(h) => TableCache::new(Path::new(&h).join(".cache").join("codegree")),
            None => TableCache::new(std::env::temp_dir().join("codegree-cache")),
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, hash: &str) -> PathBuf {
        self.dir.join(format!("{hash}.table.json"))
    }

    /// A cached table that still passes validation, if present.
    pub fn load(&self, hash: &str) -> Option<CharacterTable> {
        let text = fs::read_to_string(self.path(hash)).ok()?;
        let t: CharacterTable = serde_json::from_str(&text).ok()?;
        t.validate().ok()?;
        Some(t)
    }

    /// Write atomically through a temporary file in the same directory.
    pub fn store(&self, hash: &str, t: &CharacterTable) -> Result<(), ChartabError> {
        let io = |e: std::io::Error| ChartabError::Cache(e.to_string());
        fs::create_dir_all(&self.dir).map_err(io)?;
        let tmp = self.dir.join(format!(".{hash}.{}.tmp", std::process::id()));
        let text = serde_json::to_string(t).map_err(|e| ChartabError::Cache(e.to_string()))?;
        fs::write(&tmp, text).map_err(io)?;
        fs::rename(&tmp, self.path(hash)).map_err(io)
    }
}

/// Character table for a group input, read from or written to the cache.
/// Cap checks happen before any cache lookup.
pub fn cached_character_table(
    input: &GroupInput,
    caps: &Caps,
    cache: Option<&TableCache>,
) -> Result<(PermGroup, CharacterTable), ChartabError> {
    let g = PermGroup::new(input.degree, input.gens.clone());
    super::classes::check_order_cap(&g, caps)?;
    let hash = input.content_hash();
    if let Some(t) = cache.and_then(|c| c.load(&hash)) {
        if t.num_classes() <= caps.max_classes {
            return Ok((g, t));
        }
        return Err(ChartabError::ClassCap { cap: caps.max_classes });
    }
    let t = character_table(&g, caps)?;
    if let Some(c) = cache {
        c.store(&hash, &t)?;
    }
    Ok((g, t))
}
