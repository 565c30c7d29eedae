//! On-disk cache of computed matrices, enabled by `GMJ_CACHE_DIR`.

use std::fs;
use std::path::PathBuf;

use serde::de::DeserializeOwned;
use serde::Serialize;

pub const CACHE_ENV: &str = "GMJ_CACHE_DIR";
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Default)]
pub struct Cache {
    dir: Option<PathBuf>,
}

pub enum Lookup<T> {
    Hit(T),
    Miss,
    /// The entry exists but could not be used; the message says why.
    Corrupt(String),
}

impl Cache {
    pub fn disabled() -> Self {
        Cache { dir: None }
    }

    pub fn at(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: Some(dir.into()) }
    }

    pub fn from_env() -> Self {
        match std::env::var_os(CACHE_ENV) {
            Some(d) if !d.is_empty() => Cache::at(d),
            _ => Cache::disabled(),
        }
    }

    pub fn is_enabled(&self) -> bool {
        self.dir.is_some()
    }

    /// `what-N{n}-d{degree}-{mode}-v{version}.json`
    pub fn key(what: &str, n: usize, degree: u32, mode: &str) -> String {
        format!("{what}-N{n}-d{degree}-{mode}-v{ENGINE_VERSION}.json")
    }

    fn path(&self, key: &str) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(key))
    }

    /// Reads an entry; `valid` rejects entries that parse but are unusable.
    pub fn load<T: DeserializeOwned>(&self, key: &str, valid: impl Fn(&T) -> bool) -> Lookup<T> {
        let Some(path) = self.path(key) else {
            return Lookup::Miss;
        };
        let bytes = match fs::read(&path) {
            Ok(b) => b,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Lookup::Miss,
            Err(e) => return Lookup::Corrupt(format!("{}: {e}", path.display())),
        };
        match serde_json::from_slice::<T>(&bytes) {
            Ok(v) if valid(&v) => Lookup::Hit(v),
            Ok(_) => Lookup::Corrupt(format!("{}: inconsistent contents", path.display())),
            Err(e) => Lookup::Corrupt(format!("{}: {e}", path.display())),
        }
    }

    pub fn store<T: Serialize>(&self, key: &str, value: &T) -> std::io::Result<()> {
        let Some(path) = self.path(key) else {
            return Ok(());
        };
        if let Some(parent) = path.parent() {
            fs::create_dir_all(parent)?;
        }
        let tmp = path.with_extension("json.tmp");
        fs::write(&tmp, serde_json::to_vec_pretty(value).map_err(std::io::Error::other)?)?;
        fs::rename(tmp, path)
    }
}
