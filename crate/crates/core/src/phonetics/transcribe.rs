use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::sync::{Mutex, RwLock};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::PhoneticsError;

#[derive(Debug, Serialize, Deserialize)]
struct CacheRecord {
    text_hash: String,
    raw_transcription: String,
}

/// Content hash keying the transcription cache.
pub fn line_hash(text: &str) -> String {
    let mut hasher = Sha256::new();
    hasher.update(text.as_bytes());
    format!("{:x}", hasher.finalize())
}

/// Grapheme-to-phoneme front end: an external tool invoked per unique line,
/// with an append-only line-delimited cache so everything is replayable
/// offline.
pub struct Transcriber {
    cache: RwLock<HashMap<String, String>>,
    writer: Mutex<Option<File>>,
    tool: Option<PathBuf>,
    cache_only: bool,
}

impl Transcriber {
    /// Cache-only transcriber with no backing file (tests, ad-hoc use).
    pub fn from_entries(entries: impl IntoIterator<Item = (String, String)>) -> Self {
        Self {
            cache: RwLock::new(entries.into_iter().collect()),
            writer: Mutex::new(None),
            tool: None,
            cache_only: true,
        }
    }

    /// Open (creating if needed) a cache file; `tool` is the external G2P
    /// binary, `None` for cache-only mode.
    pub fn open(
        cache_path: &Path,
        tool: Option<PathBuf>,
        cache_only: bool,
    ) -> Result<Self, PhoneticsError> {
        let mut cache = HashMap::new();
        if cache_path.exists() {
            let reader = BufReader::new(File::open(cache_path)?);
            for line in reader.lines() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                let rec: CacheRecord = serde_json::from_str(&line)
                    .map_err(|e| PhoneticsError::CacheFormat(e.to_string()))?;
                cache.insert(rec.text_hash, rec.raw_transcription);
            }
        }
        let file = OpenOptions::new().create(true).append(true).open(cache_path)?;
        Ok(Self {
            cache: RwLock::new(cache),
            writer: Mutex::new(Some(file)),
            tool,
            cache_only,
        })
    }

    pub fn cached_count(&self) -> usize {
        self.cache.read().unwrap().len()
    }

    /// Transcribe one line, serving from the cache when possible. Empty
    /// lines transcribe to the empty string without consulting the tool.
    pub fn transcribe_line(&self, text: &str) -> Result<String, PhoneticsError> {
        if text.trim().is_empty() {
            return Ok(String::new());
        }
        let key = line_hash(text);
        if let Some(hit) = self.cache.read().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        if self.cache_only || self.tool.is_none() {
            return Err(PhoneticsError::G2PUnavailable(text.to_string()));
        }
        let raw = self.run_tool(text)?;
        self.store(&key, &raw)?;
        Ok(raw)
    }

    fn run_tool(&self, text: &str) -> Result<String, PhoneticsError> {
        let tool = self.tool.as_ref().expect("tool checked by caller");
        // -q: no audio, -x: print phoneme mnemonics
        let output = Command::new(tool)
            .arg("-q")
            .arg("-x")
            .arg(text)
            .output()
            .map_err(|e| PhoneticsError::ToolFailed(format!("{}: {e}", tool.display())))?;
        if !output.status.success() {
            return Err(PhoneticsError::ToolFailed(format!(
                "{} exited with {}",
                tool.display(),
                output.status
            )));
        }
        Ok(String::from_utf8_lossy(&output.stdout).trim().to_string())
    }

    fn store(&self, key: &str, raw: &str) -> Result<(), PhoneticsError> {
        self.cache
            .write()
            .unwrap()
            .insert(key.to_string(), raw.to_string());
        let mut writer = self.writer.lock().unwrap();
        if let Some(file) = writer.as_mut() {
            let rec = CacheRecord {
                text_hash: key.to_string(),
                raw_transcription: raw.to_string(),
            };
            writeln!(file, "{}", serde_json::to_string(&rec).expect("serialize"))?;
        }
        Ok(())
    }

    /// Seed the cache programmatically (used when bundling fixtures).
    pub fn insert(&self, text: &str, raw: &str) -> Result<(), PhoneticsError> {
        self.store(&line_hash(text), raw)
    }
}
