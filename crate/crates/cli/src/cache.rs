use std::path::{Path, PathBuf};
use std::sync::Arc;

use kljw::hecke::cache;
use kljw::{GroupTable, KlTable};

/// A KL table tied to an optional cache file: loaded on open, written back
/// on [`CacheSession::finish`] when new columns were computed.
pub struct CacheSession {
    table: KlTable,
    path: Option<PathBuf>,
    loaded: usize,
    rewrite: bool,
}

impl CacheSession {
    pub fn open(dir: Option<&Path>, group: Arc<GroupTable>) -> Self {
        let table = KlTable::new(group);
        let Some(dir) = dir else {
            return Self { table, path: None, loaded: 0, rewrite: false };
        };
        let path = cache::cache_path(dir, table.group().presentation());
        let (loaded, rewrite) = match cache::load(&path, &table) {
            Ok(n) => (n, false),
            Err(e) => {
                eprintln!("warning: ignoring cache {}: {}; recomputing", path.display(), e);
                (0, true)
            }
        };
        Self { table, path: Some(path), loaded, rewrite }
    }

    pub fn table(&self) -> &KlTable {
        &self.table
    }

    pub fn finish(&self) {
        let Some(path) = &self.path else { return };
        if !self.rewrite && self.table.computed_count() == self.loaded {
            return;
        }
        if let Err(e) = cache::persist(path, &self.table) {
            eprintln!("warning: could not write cache {}: {}; results kept in memory only", path.display(), e);
        }
    }
}

/// `$XDG_CACHE_HOME/kljw`, else `$HOME/.cache/kljw`.
pub fn default_dir() -> Option<PathBuf> {
    if let Some(dir) = std::env::var_os("XDG_CACHE_HOME").filter(|d| !d.is_empty()) {
        return Some(PathBuf::from(dir).join("kljw"));
    }
    std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache").join("kljw"))
}
