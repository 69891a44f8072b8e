//! Error types shared by the numerical modules.

use thiserror::Error;

/// Crate-wide error enum. Numerical routines never return silent infinities
/// or regularized values; out-of-contract inputs and failed tolerance targets
/// surface here.
#[derive(Debug, Clone, Error)]
pub enum CoreError {
    /// Input outside the mathematical domain of the operation.
    #[error("domain error in {op}: {msg}")]
    Domain { op: &'static str, msg: String },

    /// Input outside the supported accuracy/overflow range.
    #[error("range error in {op}: {msg}")]
    Range { op: &'static str, msg: String },

    /// Evaluation requested at (or too close to) a genuine singularity.
    #[error("singularity in {op}: {msg}")]
    Singular { op: &'static str, msg: String },

    /// A quadrature or iteration did not reach the requested tolerance.
    /// Carries the best value obtained and the achieved error estimate.
    #[error("accuracy failure in {op}: achieved {achieved:e}, requested {requested:e}")]
    Accuracy {
        op: &'static str,
        achieved: f64,
        requested: f64,
        value_re: f64,
        value_im: f64,
    },

    /// A caller-supplied value violated a stated contract.
    #[error("contract violation in {op}: {msg}")]
    Contract { op: &'static str, msg: String },

    /// Linear system at (or near) a resonance: singular or ill conditioned.
    #[error("resonance/ill-conditioned system in {op}: condition estimate {cond:e}")]
    Resonance { op: &'static str, cond: f64 },

    /// Degenerate stationary point (vanishing second derivative).
    #[error("degenerate saddle in {op}: |S''| = {sddot:e}")]
    DegenerateSaddle { op: &'static str, sddot: f64 },

    /// Root polishing failed to converge on a bracketed interval.
    #[error("non-convergence in {op}: {msg}")]
    NonConvergence { op: &'static str, msg: String },
}

pub type Result<T> = std::result::Result<T, CoreError>;
