//! Versioned JSON files for triangle tables.
//!
//! Layout: `{"kind": str, "version": 1, "rows": [[str, ...], ...]}` with
//! entries as decimal integer strings. A file is only trusted after a sample
//! of its rows has been recomputed from the recurrence.

use std::fs;
use std::path::{Path, PathBuf};

use num_traits::One;
use serde::{Deserialize, Serialize};

use super::table::{TriangleCache, TriangleKind, TriangleTable};
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

pub const CACHE_VERSION: u32 = 1;

/// Environment variable naming the cache directory. Unset disables caching.
pub const CACHE_DIR_ENV: &str = "CHANGHEE_CACHE_DIR";

const SAMPLE_ROWS: usize = 5;

#[derive(Serialize, Deserialize)]
struct CacheFile {
    kind: String,
    version: u32,
    rows: Vec<Vec<String>>,
}

pub fn to_json(table: &TriangleTable) -> String {
    let file = CacheFile {
        kind: table.kind().name().to_string(),
        version: CACHE_VERSION,
        rows: table
            .rows()
            .iter()
            .map(|row| row.iter().map(rational::render).collect())
            .collect(),
    };
    serde_json::to_string(&file).expect("cache file serializes")
}

pub fn from_json(text: &str) -> Result<TriangleTable> {
    let file: CacheFile =
        serde_json::from_str(text).map_err(|e| Error::Cache(format!("parse error: {e}")))?;
    if file.version != CACHE_VERSION {
        return Err(Error::Cache(format!("unsupported version {}", file.version)));
    }
    let kind = TriangleKind::from_name(&file.kind)
        .ok_or_else(|| Error::Cache(format!("unknown kind {:?}", file.kind)))?;
    if file.rows.is_empty() {
        return Err(Error::Cache("no rows".into()));
    }
    let mut rows = Vec::with_capacity(file.rows.len());
    for (n, raw) in file.rows.iter().enumerate() {
        if raw.len() != n + 1 {
            return Err(Error::Cache(format!("row {n} has {} entries", raw.len())));
        }
        let row = raw
            .iter()
            .map(|s| {
                let q = rational::parse_rational(s)
                    .map_err(|_| Error::Cache(format!("row {n}: bad entry {s:?}")))?;
                if !rational::is_integer(&q) || s.contains('/') {
                    return Err(Error::Cache(format!("row {n}: non-integer entry {s:?}")));
                }
                Ok(q)
            })
            .collect::<Result<Vec<Rational>>>()?;
        rows.push(row);
    }
    if rows[0] != [Rational::one()] {
        return Err(Error::Cache("row 0 must be [1]".into()));
    }
    for n in sample_rows(rows.len() - 1) {
        if kind.next_row(&rows[n - 1]) != rows[n] {
            return Err(Error::Cache(format!("row {n} fails the {} recurrence", kind.name())));
        }
    }
    Ok(TriangleTable::from_rows_unchecked(kind, rows))
}

/// Up to five row indices in `1..=n_max`, spread out and always including the last.
fn sample_rows(n_max: usize) -> Vec<usize> {
    if n_max == 0 {
        return Vec::new();
    }
    let count = SAMPLE_ROWS.min(n_max);
    let mut out: Vec<usize> = (1..=count).map(|i| (i * n_max).div_ceil(count)).collect();
    out.dedup();
    out
}

pub fn cache_path(dir: &Path, kind: TriangleKind) -> PathBuf {
    dir.join(format!("{}.json", kind.name()))
}

/// Loads every cache file present in `dir` into the global triangles.
/// Missing files are skipped; invalid ones are reported and ignored.
pub fn load_dir(dir: &Path) -> Vec<(TriangleKind, Result<bool>)> {
    TriangleKind::ALL
        .into_iter()
        .filter_map(|kind| {
            let path = cache_path(dir, kind);
            if !path.exists() {
                return None;
            }
            let outcome = fs::read_to_string(&path)
                .map_err(Error::from)
                .and_then(|text| from_json(&text))
                .and_then(|table| {
                    if table.kind() != kind {
                        return Err(Error::Cache(format!(
                            "{} holds a {} table",
                            path.display(),
                            table.kind().name()
                        )));
                    }
                    Ok(TriangleCache::global(kind).seed(table))
                });
            Some((kind, outcome))
        })
        .collect()
}

/// Writes every global triangle to `dir`, creating it if needed.
pub fn save_dir(dir: &Path) -> Result<()> {
    fs::create_dir_all(dir)?;
    for kind in TriangleKind::ALL {
        let table = TriangleCache::global(kind).snapshot();
        fs::write(cache_path(dir, kind), to_json(&table))?;
    }
    Ok(())
}
