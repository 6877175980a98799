//! Prosodic-enhanced representation learning for rap lyrics.
//!
//! The pipeline has three stages:
//!
//! 1. **Feature extraction** — [`phonetics`] turns lines into phoneme token
//!    sequences and prosodic blocks; [`embeddings`] trains rhyme2vec over the
//!    blocks and a PV-DM paragraph model over the raw words.
//! 2. **Feature aggregation** — [`havae`] fuses the prosodic and semantic
//!    vectors through an attention layer and a variational autoencoder with
//!    hand-derived gradients, exposing the latent mean as the representation.
//! 3. **Evaluation** — [`tasks`] runs next-line ranking, greedy verse
//!    generation scored by rhyme density, and multi-label genre
//!    classification.
//!
//! All numeric code is generic over the scalar type via [`scalar::Scalar`];
//! `f32` is the storage/checkpoint type and `f64` is used where gradient
//! checks need the headroom.

pub mod corpus;
pub mod embeddings;
pub mod havae;
pub mod neural;
pub mod phonetics;
pub mod scalar;
pub mod synth;
pub mod tasks;

/// Default scalar for training and checkpoints.
pub type Real = f32;
/// Scalar used by gradient checks and other precision-sensitive paths.
pub type Precise = f64;

pub type RhymeModel = embeddings::RhymeModel<Real>;
pub type SemanticModel = embeddings::SemanticModel<Real>;
pub type HavaeParameters = havae::HavaeParameters<Real>;
