//! On-disk cache of default-option reports, keyed by partition and schema
//! version.

use std::io::Write;
use std::path::PathBuf;

use serde::{Deserialize, Serialize};
use springer_core::springer::SpringerReport;
use springer_core::symgroup::Partition;
use tempfile::NamedTempFile;

use crate::SCHEMA_VERSION;

#[derive(Serialize, Deserialize)]
struct Entry {
    schema_version: String,
    report: SpringerReport,
}

/// `SPRINGER_CACHE_DIR`, else the user cache directory, else the system
/// temp directory.
pub fn dir() -> PathBuf {
    if let Some(d) = std::env::var_os("SPRINGER_CACHE_DIR").filter(|d| !d.is_empty()) {
        return PathBuf::from(d);
    }
    if let Some(d) = std::env::var_os("XDG_CACHE_HOME").filter(|d| !d.is_empty()) {
        return PathBuf::from(d).join("springer");
    }
    if let Some(home) = std::env::var_os("HOME").filter(|d| !d.is_empty()) {
        return PathBuf::from(home).join(".cache").join("springer");
    }
    std::env::temp_dir().join("springer-cache")
}

fn path_for(lambda: &Partition) -> PathBuf {
    let key: Vec<String> = lambda.parts().iter().map(|p| p.to_string()).collect();
    dir().join(format!("lambda-{}.v{SCHEMA_VERSION}.json", key.join("_")))
}

/// A cached report, if present and readable. Anything unreadable or stale
/// counts as a miss.
pub fn load(lambda: &Partition) -> Option<SpringerReport> {
    let bytes = std::fs::read(path_for(lambda)).ok()?;
    let entry: Entry = serde_json::from_slice(&bytes).ok()?;
    (entry.schema_version == SCHEMA_VERSION && &entry.report.lambda == lambda).then_some(entry.report)
}

/// Writes through a temporary file in the cache directory so concurrent
/// readers never see a partial entry.
pub fn store(report: &SpringerReport) -> std::io::Result<()> {
    let dir = dir();
    std::fs::create_dir_all(&dir)?;
    let entry = Entry {
        schema_version: SCHEMA_VERSION.into(),
        report: report.clone(),
    };
    let mut tmp = NamedTempFile::new_in(&dir)?;
    serde_json::to_writer(&mut tmp, &entry)?;
    tmp.flush()?;
    tmp.persist(path_for(&report.lambda)).map_err(|e| e.error)?;
    Ok(())
}
