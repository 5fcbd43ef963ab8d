//! On-disk result cache. One JSON file per (group, kind); an entry is only
//! used when its engine version matches the running engine.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use crossnum_core::{Budget, FiniteAbelianGroup, ENGINE_VERSION};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

pub const CACHE_ENV: &str = "CROSSNUM_CACHE";
const DEFAULT_DIR: &str = ".crossnum-cache";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stats {
    pub states: u64,
    pub millis: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CacheEntry {
    /// Canonical invariant-factor string.
    pub group: String,
    pub kind: String,
    pub payload: serde_json::Value,
    pub stats: Stats,
    pub engine_version: String,
    pub timestamp: u64,
    pub budget: Budget,
}

pub struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    /// `None` disables reads and writes.
    pub fn new(enabled: bool) -> Self {
        let dir = enabled.then(|| std::env::var_os(CACHE_ENV).map_or_else(|| PathBuf::from(DEFAULT_DIR), PathBuf::from));
        Cache { dir }
    }

    fn path(dir: &Path, group: &FiniteAbelianGroup, kind: &str) -> PathBuf {
        dir.join(format!("{}.{kind}.json", group.to_string().replace(',', "-")))
    }

    pub fn load<T: DeserializeOwned>(&self, group: &FiniteAbelianGroup, kind: &str) -> Option<(T, Stats)> {
        let path = Self::path(self.dir.as_ref()?, group, kind);
        let entry: CacheEntry = serde_json::from_slice(&fs::read(path).ok()?).ok()?;
        if entry.group != group.to_string() || entry.kind != kind || entry.engine_version != ENGINE_VERSION {
            return None;
        }
        Some((serde_json::from_value(entry.payload).ok()?, entry.stats))
    }

    pub fn store<T: Serialize>(
        &self,
        group: &FiniteAbelianGroup,
        kind: &str,
        payload: &T,
        stats: Stats,
        budget: Budget,
    ) -> io::Result<()> {
        let Some(dir) = &self.dir else { return Ok(()) };
        fs::create_dir_all(dir)?;
        let entry = CacheEntry {
            group: group.to_string(),
            kind: kind.to_string(),
            payload: serde_json::to_value(payload)?,
            stats,
            engine_version: ENGINE_VERSION.to_string(),
            timestamp: SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs()),
            budget,
        };
        // write then rename, so a concurrent reader never sees half a file
        let path = Self::path(dir, group, kind);
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        fs::write(&tmp, serde_json::to_vec_pretty(&entry)?)?;
        fs::rename(tmp, path)
    }
}
