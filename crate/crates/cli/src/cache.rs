//! JSON results cached under `$UAS_CACHE_DIR`; nothing is cached when the
//! variable is unset.

use std::path::PathBuf;

use serde::de::DeserializeOwned;
use serde::Serialize;

pub const CACHE_ENV: &str = "UAS_CACHE_DIR";

fn path(key: &str) -> Option<PathBuf> {
    let dir = std::env::var_os(CACHE_ENV)?;
    Some(PathBuf::from(dir).join(format!("{key}.json")))
}

pub fn load<T: DeserializeOwned>(key: &str) -> Option<T> {
    let text = std::fs::read_to_string(path(key)?).ok()?;
    serde_json::from_str(&text).ok()
}

/// Write failures only cost a recomputation later.
pub fn store<T: Serialize>(key: &str, value: &T) {
    let Some(p) = path(key) else { return };
    if let Some(dir) = p.parent() {
        let _ = std::fs::create_dir_all(dir);
    }
    if let Ok(text) = serde_json::to_string(value) {
        let tmp = p.with_extension("tmp");
        if std::fs::write(&tmp, text).is_ok() {
            let _ = std::fs::rename(tmp, p);
        }
    }
}

pub fn cached<T, E>(key: &str, compute: impl FnOnce() -> Result<T, E>) -> Result<T, E>
where
    T: Serialize + DeserializeOwned,
{
    if let Some(v) = load(key) {
        return Ok(v);
    }
    let v = compute()?;
    store(key, &v);
    Ok(v)
}
