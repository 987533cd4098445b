//! On-disk cache of structural sets, keyed by the SHA-256 content hash of a
//! ring's tables.
//!
//! One JSON file per ring, `<hash>.json`, holding a versioned record. Writes
//! go to a temporary file in the same directory and are renamed into place.
//! Unreadable, corrupt or stale records are logged and ignored.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::FiniteRing;
use crate::sets::{compute_structural_sets, prime_structural_sets, StructuralSets};

pub const CACHE_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct Record {
    version: u32,
    hash: String,
    order: usize,
    label: String,
    sets: StructuralSets,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum CacheOutcome {
    Hit,
    Miss,
}

#[derive(Clone, Debug)]
pub struct SetCache {
    dir: PathBuf,
}

impl SetCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self { dir: dir.into() }
    }

    /// `$JSHARP_CACHE_DIR`, else `$XDG_CACHE_HOME/jsharp`, else
    /// `$HOME/.cache/jsharp`.
    pub fn default_dir() -> Option<PathBuf> {
        let env = |k: &str| std::env::var_os(k).filter(|v| !v.is_empty()).map(PathBuf::from);
        env("JSHARP_CACHE_DIR")
            .or_else(|| env("XDG_CACHE_HOME").map(|p| p.join("jsharp")))
            .or_else(|| env("HOME").map(|p| p.join(".cache").join("jsharp")))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, ring: &FiniteRing) -> PathBuf {
        self.dir.join(format!("{}.json", ring.content_hash_hex()))
    }

    pub fn get(&self, ring: &FiniteRing) -> Option<StructuralSets> {
        let path = self.path_for(ring);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return None,
            Err(e) => {
                log::warn!("ignoring unreadable cache record {}: {e}", path.display());
                return None;
            }
        };
        let record: Record = match serde_json::from_str(&text) {
            Ok(r) => r,
            Err(e) => {
                log::warn!("ignoring corrupt cache record {}: {e}", path.display());
                return None;
            }
        };
        if record.version != CACHE_VERSION {
            log::info!("cache record {} has version {}, recomputing", path.display(), record.version);
            return None;
        }
        if record.hash != ring.content_hash_hex() || record.order != ring.order() {
            log::warn!("cache record {} does not match its ring", path.display());
            return None;
        }
        let sets = record.sets.with_universe(ring.order());
        if sets.is_none() {
            log::warn!("cache record {} has out-of-range members", path.display());
        }
        sets
    }

    pub fn put(&self, ring: &FiniteRing, sets: &StructuralSets) -> Result<()> {
        let io = |source| Error::Io { path: self.dir.display().to_string(), source };
        fs::create_dir_all(&self.dir).map_err(io)?;
        let record = Record {
            version: CACHE_VERSION,
            hash: ring.content_hash_hex(),
            order: ring.order(),
            label: ring.label().to_string(),
            sets: sets.clone(),
        };
        let body = serde_json::to_vec(&record).expect("record serializes");
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir).map_err(io)?;
        tmp.write_all(&body).map_err(io)?;
        tmp.persist(self.path_for(ring)).map_err(|e| io(e.error))?;
        Ok(())
    }

    /// Serve from the cache, or compute and store. A hit also seeds the
    /// ring's in-memory caches. Write failures are logged, not returned.
    pub fn load_or_compute(&self, ring: &FiniteRing) -> Result<(StructuralSets, CacheOutcome)> {
        if let Some(sets) = self.get(ring) {
            if prime_structural_sets(ring, &sets) {
                return Ok((sets, CacheOutcome::Hit));
            }
        }
        let sets = compute_structural_sets(ring)?;
        if let Err(e) = self.put(ring, &sets) {
            log::warn!("could not write cache record: {e}");
        }
        Ok((sets, CacheOutcome::Miss))
    }
}

/// Structural sets through an optional cache.
pub fn structural_sets_with(cache: Option<&SetCache>, ring: &FiniteRing) -> Result<StructuralSets> {
    match cache {
        Some(c) => c.load_or_compute(ring).map(|(s, _)| s),
        None => compute_structural_sets(ring),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::build_ring;

    #[test]
    fn hit_after_miss_and_identical() {
        let dir = tempfile::tempdir().unwrap();
        let cache = SetCache::new(dir.path());
        let ring = build_ring("T2(Z4)").unwrap();
        let (fresh, first) = cache.load_or_compute(&ring).unwrap();
        assert_eq!(first, CacheOutcome::Miss);
        let again = build_ring("T2(Z4)").unwrap();
        let (cached, second) = cache.load_or_compute(&again).unwrap();
        assert_eq!(second, CacheOutcome::Hit);
        assert_eq!(serde_json::to_vec(&fresh).unwrap(), serde_json::to_vec(&cached).unwrap());
    }

    #[test]
    fn stale_and_corrupt_records_are_replaced() {
        let dir = tempfile::tempdir().unwrap();
        let cache = SetCache::new(dir.path());
        let ring = build_ring("Z8").unwrap();
        let sets = compute_structural_sets(&ring).unwrap();
        cache.put(&ring, &sets).unwrap();
        let path = cache.path_for(&ring);
        let text = fs::read_to_string(&path).unwrap();
        fs::write(&path, text.replace("\"version\":1", "\"version\":0")).unwrap();
        assert!(cache.get(&ring).is_none());
        let (_, outcome) = cache.load_or_compute(&ring).unwrap();
        assert_eq!(outcome, CacheOutcome::Miss);
        assert_eq!(cache.get(&ring), Some(sets.clone()));
        fs::write(&path, "{not json").unwrap();
        assert!(cache.get(&ring).is_none());
        assert_eq!(cache.load_or_compute(&ring).unwrap(), (sets, CacheOutcome::Miss));
    }
}
