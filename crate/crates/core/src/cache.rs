//! On-disk cache of Weyl group enumerations, one JSON file per
//! `(family, rank)`:
//!
//! ```json
//! {"version": 1, "family": "C", "rank": 3,
//!  "elements": [{"key": [0, 1, 2], "word": []}, ...]}
//! ```
//!
//! `key` is the canonical key (signed codes of the images of the simple
//! roots) and `word` the lex-least reduced word, elements in canonical
//! order. A file with the wrong version or contents that do not rebuild to
//! the stored keys is ignored and rewritten. Writes go through a temporary
//! file and a rename, so readers never see a partial file.

use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{Family, RootSystem};
use crate::weyl::WeylGroup;

pub const CACHE_VERSION: u32 = 1;

/// Overrides the cache directory when no explicit one is given.
pub const CACHE_DIR_ENV: &str = "LUSZTIG_CACHE_DIR";

#[derive(Serialize, Deserialize)]
struct CacheEntry {
    key: Vec<u32>,
    word: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    family: String,
    rank: usize,
    elements: Vec<CacheEntry>,
}

pub fn cache_path(dir: &Path, family: Family, rank: usize) -> PathBuf {
    dir.join(format!("weyl-{family}{rank}.json"))
}

fn encode(group: &WeylGroup) -> Result<String> {
    let rs = group.root_system();
    let file = CacheFile {
        version: CACHE_VERSION,
        family: rs.family().to_string(),
        rank: rs.rank(),
        elements: group
            .elements()
            .iter()
            .map(|w| CacheEntry {
                key: w.key_codes().to_vec(),
                word: w.reduced_word().to_vec(),
            })
            .collect(),
    };
    Ok(serde_json::to_string(&file)?)
}

fn decode(rs: &Arc<RootSystem>, text: &str) -> Result<WeylGroup> {
    let file: CacheFile = serde_json::from_str(text)?;
    if file.version != CACHE_VERSION {
        return Err(Error::Cache(format!("unsupported version {}", file.version)));
    }
    if file.family != rs.family().to_string() || file.rank != rs.rank() {
        return Err(Error::Cache(format!(
            "file is for {}{}, wanted {}",
            file.family,
            file.rank,
            rs.label()
        )));
    }
    let words: Vec<Vec<usize>> = file.elements.iter().map(|e| e.word.clone()).collect();
    let group = WeylGroup::from_words(rs, &words)?;
    let consistent = group.len() == file.elements.len()
        && group
            .elements()
            .iter()
            .zip(&file.elements)
            .all(|(w, e)| w.key_codes() == e.key.as_slice() && w.reduced_word() == e.word.as_slice());
    if !consistent {
        return Err(Error::Cache("stored keys do not match their words".into()));
    }
    Ok(group)
}

fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let dir = path.parent().unwrap_or(Path::new("."));
    fs::create_dir_all(dir)?;
    let tmp = dir.join(format!(
        ".{}.{}.tmp",
        path.file_name().and_then(|n| n.to_str()).unwrap_or("cache"),
        std::process::id()
    ));
    fs::write(&tmp, contents)?;
    fs::rename(&tmp, path)?;
    Ok(())
}

/// Loads the group from `dir`, or enumerates and stores it.
pub fn load_or_build(rs: &Arc<RootSystem>, dir: &Path) -> Result<WeylGroup> {
    let path = cache_path(dir, rs.family(), rs.rank());
    if let Ok(text) = fs::read_to_string(&path) {
        if let Ok(group) = decode(rs, &text) {
            return Ok(group);
        }
    }
    let group = WeylGroup::new(rs);
    write_atomic(&path, &encode(&group)?)?;
    Ok(group)
}

/// Hands out shared root systems and groups, memoized in memory and, when a
/// directory is configured, on disk.
#[derive(Default)]
pub struct GroupProvider {
    dir: Option<PathBuf>,
    groups: Mutex<HashMap<(Family, usize), Arc<WeylGroup>>>,
}

impl GroupProvider {
    pub fn new(dir: Option<PathBuf>) -> Self {
        GroupProvider {
            dir,
            groups: Mutex::new(HashMap::new()),
        }
    }

    /// Uses `dir`, falling back to `$LUSZTIG_CACHE_DIR`, else memory only.
    pub fn from_env(dir: Option<PathBuf>) -> Self {
        let dir = dir.or_else(|| std::env::var_os(CACHE_DIR_ENV).map(PathBuf::from));
        Self::new(dir)
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn group(&self, family: Family, rank: usize) -> Result<Arc<WeylGroup>> {
        if let Some(g) = self.groups.lock().unwrap().get(&(family, rank)) {
            return Ok(g.clone());
        }
        let rs = Arc::new(RootSystem::new(family, rank)?);
        let group = match &self.dir {
            Some(dir) => load_or_build(&rs, dir)?,
            None => WeylGroup::new(&rs),
        };
        let group = Arc::new(group);
        self.groups
            .lock()
            .unwrap()
            .insert((family, rank), group.clone());
        Ok(group)
    }
}
