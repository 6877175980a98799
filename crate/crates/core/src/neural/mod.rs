//! Minimal dense-layer toolkit with explicit forward/backward passes.
//!
//! Everything here is written against hand-derived gradients; the
//! [`gradcheck`] module provides the central-finite-difference checker used
//! to validate them.

mod attention;
mod dense;
mod gradcheck;

pub use attention::{
    attention_backward, attention_forward, AttentionGrads, AttentionParams, AttentionTrace,
};
pub use dense::{dense_backward, dense_forward, Activation, DenseGrads, DenseLayer, DenseTrace};
pub use gradcheck::{grad_check, GradReport};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum NeuralError {
    #[error("shape mismatch: expected {expected}, got {got} ({context})")]
    ShapeMismatch {
        expected: usize,
        got: usize,
        context: &'static str,
    },
    #[error("non-finite activation encountered in {0}")]
    NonFiniteActivation(&'static str),
}
