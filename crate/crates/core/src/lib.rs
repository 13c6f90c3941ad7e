//! Quantum annealing of the transverse-field Ising chain driven by a complex
//! (dissipative) transverse field.
//!
//! The chain decouples into two-level momentum modes. [`quench`] integrates
//! them numerically, [`analytic`] gives the exact parabolic-cylinder solution
//! and the closed-form transition probabilities, and [`observables`] turns
//! final states into pairings, string correlations and defect densities.

pub mod analytic;
pub mod error;
pub mod model;
pub mod observables;
pub mod ode;
pub mod quench;
pub mod sweep;

pub use error::{NqaError, Result};
pub use model::{ChainParams, Mode};
pub use num_complex::Complex64;
