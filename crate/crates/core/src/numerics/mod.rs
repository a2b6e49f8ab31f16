//! Dense linear algebra, activations, similarity measures, statistics,
//! deterministic RNG, and finite-difference utilities.
//!
//! Compute precision is f32 throughout; metric accumulation, finite
//! differences, and loss reporting accumulate in f64.

mod finitediff;
mod linalg;
mod rng;
mod stats;

pub use finitediff::{central_diff, finite_diff_grad};
pub use linalg::{
    axpy, cosine, dot, matvec, matvec_t_accum, outer_accum, silu, silu_deriv, sigmoid, softmax,
    softmax_in_place, Matrix, COSINE_EPS,
};
pub use rng::Rng;
pub use stats::{spearman_rho, SpearmanResult};
