//! On-disk store for computed tables: `<dir>/<group>-<kind>.csv` holds the
//! table and `<dir>/<group>-<kind>.meta.json` the run details.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::{Duration, SystemTime, UNIX_EPOCH};

use classprod_core::{GroupKind, Scheduler};
use serde::{Deserialize, Serialize};

use crate::table::{generate, table_labels, TableDocument, TableKind, TOOL};
use crate::Result;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Meta {
    pub tool: String,
    pub group: String,
    pub kind: String,
    pub generated_unix: u64,
    pub runtime_seconds: f64,
}

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Cache {
        Cache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn stem(kind: TableKind, group: GroupKind) -> String {
        format!("{group}-{}", kind.as_str())
    }

    pub fn table_path(&self, kind: TableKind, group: GroupKind) -> PathBuf {
        self.dir.join(format!("{}.csv", Cache::stem(kind, group)))
    }

    pub fn meta_path(&self, kind: TableKind, group: GroupKind) -> PathBuf {
        self.dir.join(format!("{}.meta.json", Cache::stem(kind, group)))
    }

    /// A stored table, if present and readable as the requested table.
    pub fn load(&self, kind: TableKind, group: GroupKind) -> Option<TableDocument> {
        let text = fs::read_to_string(self.table_path(kind, group)).ok()?;
        let doc = TableDocument::from_csv(&text).ok()?;
        let expected = table_labels(kind, group).ok()?;
        (doc.kind == kind && doc.group == group && doc.labels == expected).then_some(doc)
    }

    pub fn store(&self, doc: &TableDocument, runtime: Duration) -> Result<()> {
        fs::create_dir_all(&self.dir)?;
        fs::write(self.table_path(doc.kind, doc.group), doc.to_csv()?)?;
        let meta = Meta {
            tool: TOOL.to_string(),
            group: doc.group.to_string(),
            kind: doc.kind.as_str().to_string(),
            generated_unix: SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs()),
            runtime_seconds: runtime.as_secs_f64(),
        };
        fs::write(self.meta_path(doc.kind, doc.group), serde_json::to_string_pretty(&meta)? + "\n")?;
        Ok(())
    }

    pub fn load_meta(&self, kind: TableKind, group: GroupKind) -> Option<Meta> {
        let text = fs::read_to_string(self.meta_path(kind, group)).ok()?;
        serde_json::from_str(&text).ok()
    }
}

/// Where tables come from: an optional cache, whether it may be read, and
/// the scheduler for tables that have to be computed.
pub struct Tables<'a, S> {
    pub cache: Option<Cache>,
    pub read_cache: bool,
    pub sched: &'a S,
}

impl<S: Scheduler> Tables<'_, S> {
    /// Tables computed fresh every time and never stored.
    pub fn uncached(sched: &S) -> Tables<'_, S> {
        Tables { cache: None, read_cache: false, sched }
    }

    pub fn get(&self, kind: TableKind, group: GroupKind) -> Result<TableDocument> {
        if let (Some(cache), true) = (&self.cache, self.read_cache) {
            if let Some(doc) = cache.load(kind, group) {
                return Ok(doc);
            }
        }
        let start = std::time::Instant::now();
        let doc = generate(kind, group, self.sched)?;
        if let Some(cache) = &self.cache {
            cache.store(&doc, start.elapsed())?;
        }
        Ok(doc)
    }
}
