use thiserror::Error;

/// Everything that can go wrong inside the library.
///
/// Variants carry enough context (mode, time, parameter) to find the
/// failing evaluation without rerunning under a debugger.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum NqaError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("integration failed for mode k={k} at t={t}: {reason}")]
    Integration { k: f64, t: f64, reason: String },

    #[error("Bloch angle jumped by {jump:.3e} at t={t} (g~ = {g_re}+{g_im}i)")]
    BranchJump { t: f64, g_re: f64, g_im: f64, jump: f64 },

    #[error("both adiabatic amplitudes vanish; probability undefined")]
    DegenerateState,

    #[error("incomplete mode set: expected {expected} modes, got {got}")]
    IncompleteModeSet { expected: usize, got: usize },

    #[error("time {t} is not a sample point of mode k={k}")]
    MissingSample { k: f64, t: f64 },

    #[error("argument outside the supported region: {0}")]
    OutOfRegion(String),

    #[error("series and asymptotic evaluations disagree (rel. diff {rel_diff:.3e}) at nu={nu}, z={z}")]
    RegimeMismatch { nu: String, z: String, rel_diff: f64 },

    #[error("Toeplitz determinant of size {p} has imaginary part {imag:.3e}")]
    DeterminantNotReal { p: usize, imag: f64 },

    #[error("quadrature did not converge: estimated error {error:.3e}")]
    Quadrature { error: f64 },

    #[error("target probability {target} is not reachable (best value {best})")]
    UnreachableTarget { target: f64, best: f64 },

    #[error("arbitrary-precision arithmetic failed: {0}")]
    Precision(String),
}

pub type Result<T> = std::result::Result<T, NqaError>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(NqaError::InvalidParameter(msg.into()))
}
