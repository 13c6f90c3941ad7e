//! Correlations and defect statistics of the state left at the end of the
//! sweep.

pub mod correlation;
pub mod defects;
pub mod lerch;
pub mod quadrature;

pub use correlation::{
    chi_asymptotic, domain_size, fit_asymptotic, kz_length, measured_period, oscillation_period, pairing_beta,
    pairing_g, staggered_zero_crossings, toeplitz_determinant, AsymptoticFit, CorrelationTable,
};
pub use defects::{
    defect_density, defect_expectation_analytic, defect_expectation_numeric, density_lerch, density_quadrature,
    hermitian_density, DefectEstimate, DefectRegime, DefectReport,
};
pub use lerch::lerch_phi;
