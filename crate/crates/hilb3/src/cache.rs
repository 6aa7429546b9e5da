//! Append-only cache of tangent dimensions keyed by canonical ideal string.
//!
//! The on-disk format is one record per line, `<version>\t<ideal>\t<T>`.
//! Records written by a different oracle version are ignored on load and
//! never trusted.

use std::collections::HashMap;
use std::fs::OpenOptions;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;
use std::sync::Mutex;

/// Bump when the tangent oracle changes in any way that could affect values.
pub const CACHE_VERSION: u32 = 1;

#[derive(Default)]
pub struct TangentCache {
    map: Mutex<HashMap<String, i64>>,
    writer: Option<Mutex<BufWriter<std::fs::File>>>,
}

impl TangentCache {
    pub fn in_memory() -> TangentCache {
        TangentCache::default()
    }

    /// Opens (creating if necessary) a file-backed cache and loads all
    /// current-version records.
    pub fn open(path: &Path) -> std::io::Result<TangentCache> {
        let mut map = HashMap::new();
        if path.exists() {
            let reader = BufReader::new(std::fs::File::open(path)?);
            for line in reader.lines() {
                let line = line?;
                let mut parts = line.splitn(3, '\t');
                let (Some(ver), Some(key), Some(value)) =
                    (parts.next(), parts.next(), parts.next())
                else {
                    continue;
                };
                if ver.parse::<u32>() != Ok(CACHE_VERSION) {
                    continue;
                }
                let Ok(value) = value.parse::<i64>() else {
                    continue;
                };
                map.insert(key.to_string(), value);
            }
        }
        let file = OpenOptions::new().create(true).append(true).open(path)?;
        Ok(TangentCache {
            map: Mutex::new(map),
            writer: Some(Mutex::new(BufWriter::new(file))),
        })
    }

    pub fn get(&self, key: &str) -> Option<i64> {
        self.map.lock().unwrap().get(key).copied()
    }

    pub fn insert(&self, key: &str, value: i64) {
        let fresh = self
            .map
            .lock()
            .unwrap()
            .insert(key.to_string(), value)
            .is_none();
        if fresh {
            if let Some(writer) = &self.writer {
                let mut w = writer.lock().unwrap();
                let _ = writeln!(w, "{CACHE_VERSION}\t{key}\t{value}");
                let _ = w.flush();
            }
        }
    }

    pub fn len(&self) -> usize {
        self.map.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
