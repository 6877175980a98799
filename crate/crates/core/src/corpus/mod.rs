//! Song-file parsing, verse extraction, corpus splits, and task sampling.

mod parse;
mod records;
mod sampling;
mod split;

pub use parse::{extract_verses, parse_song_file, Section, SectionTag, SongRecord, Verse};
pub use records::{attach_genres, load_genre_sidecar, read_jsonl, write_jsonl, GenreRecord};
pub use sampling::{
    build_candidate_sets, build_training_pairs, CandidateSet, PairSample, PairSamplingOutcome,
};
pub use split::{split_corpus, CorpusSplit};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("song {0:?} has no lyric lines")]
    MalformedSong(String),
    #[error("need at least {needed} songs, got {got}")]
    TooFewSongs { needed: usize, got: usize },
    #[error("candidate pool has {got} distinct lines, need {needed}")]
    PoolTooSmall { needed: usize, got: usize },
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("record format: {0}")]
    Format(String),
}
