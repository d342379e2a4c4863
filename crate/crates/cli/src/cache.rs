//! Disk cache for computed eigenfunctions, one JSON file per key.
//!
//! Entries are advisory: callers re-verify what they load unless told to trust it.

use std::fs;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

pub struct Cache {
    dir: PathBuf,
}

/// `module|n|g|variant|k|extra` hashed with SHA-256.
pub fn cache_key(parts: &[&str]) -> String {
    hex::encode(Sha256::digest(parts.join("|").as_bytes()))
}

impl Cache {
    pub fn open(dir: &Path) -> std::io::Result<Cache> {
        fs::create_dir_all(dir)?;
        Ok(Cache { dir: dir.to_path_buf() })
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    /// Stored payload, or `None` when missing or unreadable.
    pub fn load(&self, key: &str) -> Option<Value> {
        let text = fs::read_to_string(self.path(key)).ok()?;
        let v: Value = serde_json::from_str(&text).ok()?;
        (v.get("key")?.as_str()? == key).then(|| v.get("payload").cloned()).flatten()
    }

    /// Write failures only cost a recomputation next time.
    pub fn store(&self, key: &str, payload: Value) {
        let body = json!({ "key": key, "payload": payload });
        let tmp = self.path(&format!("{key}.tmp"));
        if fs::write(&tmp, body.to_string()).is_ok() {
            let _ = fs::rename(&tmp, self.path(key));
        }
    }
}
