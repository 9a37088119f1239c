//! Character store: the in-memory memo table, optionally backed by a
//! directory of JSON documents (one per character).

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::character::{dominant_character, Character, CharacterCache, CharacterSource};
use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, Weight};

pub const CACHE_VERSION: u32 = 1;

/// Environment variable consulted when no cache directory is given.
pub const CACHE_DIR_ENV: &str = "LIEBRANCH_CACHE_DIR";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheKey {
    #[serde(rename = "type")]
    pub type_name: String,
    pub rank: usize,
    pub lambda: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub version: u32,
    pub key: CacheKey,
    pub character: Character,
}

impl CacheKey {
    pub fn new(rs: &RootSystem, lambda: &Weight) -> Self {
        CacheKey {
            type_name: rs.fingerprint(),
            rank: rs.rank(),
            lambda: lambda.0.clone(),
        }
    }

    /// Stable file name: hex SHA-256 of the versioned key.
    pub fn file_name(&self) -> String {
        let lambda: Vec<String> = self.lambda.iter().map(|x| x.to_string()).collect();
        let text = format!(
            "liebranch-cache-v{CACHE_VERSION}|{}|{}|{}",
            self.type_name,
            self.rank,
            lambda.join(",")
        );
        let digest = Sha256::digest(text.as_bytes());
        let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
        format!("{hex}.json")
    }
}

#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct StoreStats {
    pub disk_hits: u64,
    pub disk_writes: u64,
    pub verified: u64,
}

#[derive(Debug, Default)]
pub struct CharacterStore {
    memory: CharacterCache,
    dir: Option<PathBuf>,
    verify: bool,
    stats: parking_lot::Mutex<StoreStats>,
}

impl CharacterStore {
    /// Memory-only store.
    pub fn in_memory() -> Self {
        Self::default()
    }

    /// Store persisting to `dir`, which is created if needed. With `verify`,
    /// every disk hit is recomputed and compared byte for byte.
    pub fn with_dir(dir: impl Into<PathBuf>, verify: bool) -> Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(Self {
            dir: Some(dir),
            verify,
            ..Self::default()
        })
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn stats(&self) -> StoreStats {
        *self.stats.lock()
    }

    fn load(&self, rs: &RootSystem, lambda: &Weight, path: &Path) -> Result<Option<Character>> {
        let text = match fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let entry: CacheEntry = serde_json::from_str(&text)?;
        if entry.version != CACHE_VERSION || entry.key != CacheKey::new(rs, lambda) {
            // Stale format or hash collision: treat as a miss and overwrite.
            return Ok(None);
        }
        self.stats.lock().disk_hits += 1;
        if self.verify {
            let fresh = dominant_character(rs, lambda)?;
            if fresh.to_json()? != entry.character.to_json()? {
                return Err(Error::CacheMismatch(path.display().to_string()));
            }
            self.stats.lock().verified += 1;
        }
        Ok(Some(entry.character))
    }

    /// Writes to a temporary file in the cache directory, then renames it
    /// into place.
    fn save(&self, rs: &RootSystem, ch: &Character, dir: &Path, path: &Path) -> Result<()> {
        let entry = CacheEntry {
            version: CACHE_VERSION,
            key: CacheKey::new(rs, ch.highest_weight()),
            character: ch.clone(),
        };
        let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
        tmp.write_all(serde_json::to_string(&entry)?.as_bytes())?;
        tmp.write_all(b"\n")?;
        tmp.persist(path).map_err(|e| Error::Io(e.error))?;
        self.stats.lock().disk_writes += 1;
        Ok(())
    }
}

impl CharacterSource for CharacterStore {
    fn character(&self, rs: &RootSystem, lambda: &Weight) -> Result<Arc<Character>> {
        if let Some(ch) = self.memory.get(rs, lambda) {
            return Ok(ch);
        }
        let Some(dir) = &self.dir else {
            return self.memory.get_or_compute(rs, lambda);
        };
        let path = dir.join(CacheKey::new(rs, lambda).file_name());
        if let Some(ch) = self.load(rs, lambda, &path)? {
            return Ok(self.memory.insert(rs, ch));
        }
        let ch = dominant_character(rs, lambda)?;
        self.save(rs, &ch, dir, &path)?;
        Ok(self.memory.insert(rs, ch))
    }
}
