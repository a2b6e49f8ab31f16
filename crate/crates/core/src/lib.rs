//! A from-scratch sparse mixture-of-experts laboratory.
//!
//! The crate provides, bottom up:
//!
//! - [`numerics`]: row-major f32 matrices, activations, similarity and rank
//!   statistics, a counter-based deterministic RNG, and finite-difference
//!   gradient oracles.
//! - [`moe`]: the SMoE layer itself — learned router scores, top-K selection,
//!   masked softmax combination weights, SwiGLU experts, and the analytic
//!   backward pass.
//! - [`balancing`]: load accounting plus the auxiliary balance loss, router
//!   z-loss, sequence-wise auxiliary loss, and the loss-free bias update.
//! - [`centroid`]: the parameter-free online K-Means router with EMA
//!   centroids and sign-updated biases.
//! - [`probes`]: gradient-coupling, router-geometry, score-activation
//!   correlation, and MaxVio measurements with CSV emission.
//! - [`trainer`]: a small byte-level language model (embedding, fixed causal
//!   EMA mixer, stacked SMoE blocks, output head), AdamW, deterministic
//!   training loop, and checkpointing.

pub mod balancing;
pub mod centroid;
pub mod error;
pub mod moe;
pub mod numerics;
pub mod probes;
pub mod trainer;

pub use error::{Error, Result};
