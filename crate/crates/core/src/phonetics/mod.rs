//! Phoneme transcription, prosodic block construction, and rhyme metrics.

mod alphabet;
mod blocks;
mod rhyme;
mod tokenize;
mod transcribe;

pub use alphabet::PhonemeAlphabet;
pub use blocks::{build_prosodic_blocks, ProsodicBlockSet};
pub use rhyme::{end_rhyme, rhyme_density};
pub use tokenize::{tokenize_transcription, PhonemeSequence};
pub use transcribe::{line_hash, Transcriber};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum PhoneticsError {
    #[error("no grapheme-to-phoneme tool or cache entry for line: {0:?}")]
    G2PUnavailable(String),
    #[error("grapheme-to-phoneme tool failed: {0}")]
    ToolFailed(String),
    #[error("transcription cache i/o: {0}")]
    CacheIo(#[from] std::io::Error),
    #[error("malformed cache record: {0}")]
    CacheFormat(String),
}
