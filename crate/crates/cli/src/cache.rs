//! Content-addressed on-disk store for characters.

use std::collections::HashSet;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex};

use langdual::{CharacterStore, RootDatum, Weight, WeightFunction, WeightFunctionJson};
use num_bigint::BigInt;
use sha2::{Digest, Sha256};

pub const CACHE_DIR_VAR: &str = "LANGDUAL_CACHE_DIR";

/// `$LANGDUAL_CACHE_DIR`, else `$HOME/.cache/langdual`.
pub fn default_dir() -> Option<PathBuf> {
    if let Some(dir) = std::env::var_os(CACHE_DIR_VAR) {
        return Some(PathBuf::from(dir));
    }
    std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache").join("langdual"))
}

pub struct DiskCache {
    dir: PathBuf,
    hits: AtomicU64,
    misses: AtomicU64,
    loaded: Mutex<HashSet<String>>,
}

impl DiskCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        DiskCache { dir: dir.into(), hits: AtomicU64::new(0), misses: AtomicU64::new(0), loaded: Mutex::default() }
    }

    pub fn hits(&self) -> u64 {
        self.hits.load(Ordering::Relaxed)
    }

    /// Characters computed and written because no usable entry existed.
    pub fn misses(&self) -> u64 {
        self.misses.load(Ordering::Relaxed)
    }

    pub fn key(matrix: &[Vec<i64>], highest: &Weight) -> String {
        let mut h = Sha256::new();
        h.update(serde_json::to_vec(&(matrix, highest)).expect("serializable"));
        hex::encode(h.finalize())
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    fn write(&self, key: &str, character: &WeightFunction<BigInt>) -> std::io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        serde_json::to_writer(&mut tmp, &WeightFunctionJson::from_function(character))?;
        tmp.flush()?;
        tmp.persist(self.path(key)).map_err(|e| e.error)?;
        Ok(())
    }
}

impl CharacterStore<BigInt> for DiskCache {
    fn load(&self, datum: &Arc<RootDatum>, highest: &Weight) -> Option<WeightFunction<BigInt>> {
        let key = Self::key(datum.cartan().matrix(), highest);
        let text = fs::read(self.path(&key)).ok()?;
        let json: WeightFunctionJson = serde_json::from_slice(&text).ok()?;
        let ch = json.to_function_in::<BigInt>(datum).ok()?;
        self.hits.fetch_add(1, Ordering::Relaxed);
        self.loaded.lock().unwrap().insert(key);
        Some(ch)
    }

    fn save(&self, highest: &Weight, character: &WeightFunction<BigInt>) {
        let key = Self::key(character.datum().cartan().matrix(), highest);
        // a loaded entry that gets rewritten was rejected by the table
        if self.loaded.lock().unwrap().remove(&key) {
            self.hits.fetch_sub(1, Ordering::Relaxed);
        }
        self.misses.fetch_add(1, Ordering::Relaxed);
        // a failed write only costs a recomputation next time
        let _ = self.write(&key, character);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use langdual::{freudenthal_character, BigCharacterTable};

    #[test]
    fn round_trip_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let d = RootDatum::of_type("B2").unwrap();
        let lambda = Weight::from([1, 1]);
        let cache = Arc::new(DiskCache::new(dir.path()));
        let table = BigCharacterTable::new(d.clone()).with_store(cache.clone());
        let ch = table.character(&lambda).unwrap();
        assert_eq!((cache.hits(), cache.misses()), (0, 1));

        let warm = Arc::new(DiskCache::new(dir.path()));
        let table = BigCharacterTable::new(d.clone()).with_store(warm.clone());
        assert_eq!(*table.character(&lambda).unwrap(), *ch);
        assert_eq!((warm.hits(), warm.misses()), (1, 0));

        // a parseable but wrong entry is rejected and replaced
        let path = dir.path().join(format!("{}.json", DiskCache::key(d.cartan().matrix(), &lambda)));
        let wrong = freudenthal_character(&d, &Weight::from([1, 0])).unwrap();
        fs::write(&path, serde_json::to_vec(&WeightFunctionJson::from_function(&wrong)).unwrap()).unwrap();
        let again = Arc::new(DiskCache::new(dir.path()));
        let table = BigCharacterTable::new(d.clone()).with_store(again.clone());
        assert_eq!(*table.character(&lambda).unwrap(), *ch);
        assert_eq!((again.hits(), again.misses()), (0, 1));

        fs::write(&path, b"{not json").unwrap();
        let table = BigCharacterTable::new(d).with_store(Arc::new(DiskCache::new(dir.path())));
        assert_eq!(*table.character(&lambda).unwrap(), *ch);
    }
}
