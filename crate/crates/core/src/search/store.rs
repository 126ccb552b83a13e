use std::collections::BTreeMap;
use std::fs::{self, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use super::SearchResult;
use crate::error::{Error, Result};
use crate::group_sets::SymmetricSet;

pub const BASE_DIR_ENV: &str = "SATFORGE_BASE_DIR";
pub const DEFAULT_BASE_DIR: &str = "data/bases";

/// On-disk record `{n}_{s}.json`.
#[derive(Serialize, Deserialize)]
struct BaseRecord {
    n: usize,
    s: usize,
    degree: usize,
    set: Vec<usize>,
}

/// `K_s`-saturated circulant connection sets keyed by `(n, s)`.
///
/// Entries live in memory and, unless the store is memory-only, in a
/// directory of `{n}_{s}.json` files.
#[derive(Debug)]
pub struct BaseStore {
    dir: Option<PathBuf>,
    cache: Mutex<BTreeMap<(usize, usize), SymmetricSet>>,
}

impl BaseStore {
    pub fn open(dir: impl Into<PathBuf>) -> Self {
        BaseStore { dir: Some(dir.into()), cache: Mutex::default() }
    }

    /// `$SATFORGE_BASE_DIR`, falling back to `data/bases`.
    pub fn from_env() -> Self {
        Self::open(std::env::var_os(BASE_DIR_ENV).map_or_else(|| PathBuf::from(DEFAULT_BASE_DIR), PathBuf::from))
    }

    pub fn in_memory() -> Self {
        BaseStore { dir: None, cache: Mutex::default() }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    fn path(&self, n: usize, s: usize) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("{n}_{s}.json")))
    }

    pub fn load(&self, n: usize, s: usize) -> Result<Option<SymmetricSet>> {
        if let Some(set) = self.cache.lock().expect("base cache poisoned").get(&(n, s)) {
            return Ok(Some(set.clone()));
        }
        let Some(path) = self.path(n, s).filter(|p| p.exists()) else {
            return Ok(None);
        };
        let rec: BaseRecord = serde_json::from_str(&fs::read_to_string(&path)?)?;
        if rec.n != n || rec.s != s {
            return Err(Error::Parse(format!("{} describes n = {}, s = {}", path.display(), rec.n, rec.s)));
        }
        let set = SymmetricSet::new(n, rec.set)?;
        self.cache.lock().expect("base cache poisoned").insert((n, s), set.clone());
        Ok(Some(set))
    }

    pub fn store(&self, set: &SymmetricSet, s: usize) -> Result<()> {
        let n = set.modulus();
        if let Some(path) = self.path(n, s) {
            if let Some(dir) = path.parent() {
                fs::create_dir_all(dir)?;
            }
            let rec = BaseRecord { n, s, degree: set.len(), set: set.elements().to_vec() };
            fs::write(&path, serde_json::to_string_pretty(&rec)? + "\n")?;
        }
        self.cache.lock().expect("base cache poisoned").insert((n, s), set.clone());
        Ok(())
    }

    /// Orders with a stored base for `s`, ascending.
    pub fn orders(&self, s: usize) -> Result<Vec<usize>> {
        let mut out: Vec<usize> = self
            .cache
            .lock()
            .expect("base cache poisoned")
            .keys()
            .filter(|k| k.1 == s)
            .map(|k| k.0)
            .collect();
        if let Some(dir) = self.dir.as_ref().filter(|d| d.is_dir()) {
            let suffix = format!("_{s}.json");
            for entry in fs::read_dir(dir)? {
                let name = entry?.file_name();
                let name = name.to_string_lossy();
                if let Some(n) = name.strip_suffix(&suffix).and_then(|p| p.parse().ok()) {
                    out.push(n);
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }
}

/// Appends one result as a single JSON line.
pub fn append_jsonl(path: impl AsRef<Path>, result: &SearchResult) -> Result<()> {
    let mut f = OpenOptions::new().create(true).append(true).open(path)?;
    writeln!(f, "{}", serde_json::to_string(result)?)?;
    Ok(())
}

pub fn read_jsonl(path: impl AsRef<Path>) -> Result<Vec<SearchResult>> {
    let f = fs::File::open(path)?;
    let mut out = Vec::new();
    for line in BufReader::new(f).lines() {
        let line = line?;
        if !line.trim().is_empty() {
            out.push(serde_json::from_str(&line)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::{find_cycle_sets, SearchOptions};

    #[test]
    fn store_roundtrip() {
        let dir = tempfile::tempdir().unwrap();
        let store = BaseStore::open(dir.path());
        let set = SymmetricSet::new(19, [1, 2, 6, 8, 11, 13, 17, 18]).unwrap();
        assert_eq!(store.load(19, 4).unwrap(), None);
        store.store(&set, 4).unwrap();
        assert!(dir.path().join("19_4.json").exists());

        let fresh = BaseStore::open(dir.path());
        assert_eq!(fresh.load(19, 4).unwrap(), Some(set));
        assert_eq!(fresh.orders(4).unwrap(), vec![19]);
        assert!(fresh.orders(5).unwrap().is_empty());
    }

    #[test]
    fn jsonl_roundtrip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("runs.jsonl");
        let a = find_cycle_sets(17, 4, &SearchOptions::default()).unwrap();
        let b = find_cycle_sets(19, 4, &SearchOptions::default()).unwrap();
        append_jsonl(&path, &a).unwrap();
        append_jsonl(&path, &b).unwrap();
        assert_eq!(read_jsonl(&path).unwrap(), vec![a, b]);
    }
}
