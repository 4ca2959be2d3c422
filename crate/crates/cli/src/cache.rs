//! Optional on-disk memo of homology results, enabled by `CLAWTOP_CACHE`.

use std::path::PathBuf;

use clawtop::homology::{ConnectivityReport, HomologyProfile};
use clawtop::SimplicialComplex;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const ENV_VAR: &str = "CLAWTOP_CACHE";

#[derive(Serialize, Deserialize)]
pub struct Entry {
    pub homology: HomologyProfile,
    pub connectivity: ConnectivityReport,
}

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn from_env() -> Option<Cache> {
        let dir = std::env::var_os(ENV_VAR)?;
        if dir.is_empty() {
            return None;
        }
        let dir = PathBuf::from(dir);
        std::fs::create_dir_all(&dir).ok()?;
        Some(Cache { dir })
    }

    /// SHA-256 over the universe and the sorted facet list.
    pub fn key(complex: &SimplicialComplex) -> String {
        let mut hasher = Sha256::new();
        hasher.update(complex.universe().to_le_bytes());
        for facet in complex.facets() {
            hasher.update((facet.len() as u64).to_le_bytes());
            for v in facet {
                hasher.update((v as u64).to_le_bytes());
            }
        }
        hasher.finalize().iter().map(|b| format!("{b:02x}")).collect()
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    pub fn get(&self, key: &str) -> Option<Entry> {
        let text = std::fs::read_to_string(self.path(key)).ok()?;
        serde_json::from_str(&text).ok()
    }

    /// Best effort; a failed write only loses the memo.
    pub fn put(&self, key: &str, entry: &Entry) {
        if let Ok(text) = serde_json::to_string(entry) {
            let tmp = self.dir.join(format!("{key}.tmp{}", std::process::id()));
            if std::fs::write(&tmp, text).is_ok() {
                let _ = std::fs::rename(&tmp, self.path(key));
            }
        }
    }
}
