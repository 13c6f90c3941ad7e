//! Defect counts and densities at the end of the sweep.

use std::f64::consts::PI;

use super::correlation::{domain_size, kz_length, CorrelationTable};
use super::lerch::lerch_phi;
use super::quadrature::integrate;
use crate::error::{NqaError, Result};
use crate::model::ChainParams;
use crate::quench::FinalState;

/// Expected number of defects of a final state: two quasiparticles for every
/// excited `(k, -k)` pair.
pub fn defect_expectation_numeric(state: &FinalState) -> Result<f64> {
    let expected = state.params.n / 2;
    if state.modes.len() != expected {
        return Err(NqaError::IncompleteModeSet { expected, got: state.modes.len() });
    }
    let mut modes: Vec<_> = state.modes.iter().collect();
    modes.sort_by_key(|m| m.mode.index);
    Ok(modes.iter().map(|m| 2.0 * m.sample.excitation).sum())
}

/// Which limit of the lowest-mode estimate was used.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DefectRegime {
    /// `tau >= tau0`: `exp(-2 pi tau / tau0)`.
    Slow,
    /// `tau < tau0`: `tau0 / (2 pi tau) exp(-2 J delta tau / g^2)`.
    Fast,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DefectEstimate {
    /// The limiting form for `regime`.
    pub value: f64,
    pub regime: DefectRegime,
    /// The complete lowest-mode expression both limits derive from.
    pub full: f64,
}

/// Lowest-mode estimate of the defect number.
pub fn defect_expectation_analytic(params: &ChainParams) -> Result<DefectEstimate> {
    params.validate()?;
    if params.g <= 0.0 {
        return Err(NqaError::InvalidParameter("defect estimates need g > 0".into()));
    }
    let tau0 = params.tau0();
    let x = 2.0 * PI * params.tau / tau0;
    let y = damping_exponent(params);
    let full = (-x - y).exp() / (-(-x).exp_m1() + (-x - y).exp());
    let (value, regime) = if params.tau >= tau0 {
        ((-x).exp(), DefectRegime::Slow)
    } else {
        ((-y).exp() / x, DefectRegime::Fast)
    };
    Ok(DefectEstimate { value, regime, full })
}

/// `2 J delta tau / g^2`.
fn damping_exponent(params: &ChainParams) -> f64 {
    2.0 * params.j * params.delta * params.tau / (params.g * params.g)
}

/// Hermitian defect density `sqrt(g / (J tau)) / (2 pi)`.
pub fn hermitian_density(params: &ChainParams) -> f64 {
    (params.g / (params.j * params.tau)).sqrt() / (2.0 * PI)
}

/// Defect density in the Gaussian long-wavelength approximation,
/// `(1/pi) int_0^pi e^{-x-r} / (1 - e^{-x} + e^{-x-r}) dphi` with
/// `x = pi J tau phi^2 / g`, by adaptive quadrature.
pub fn density_quadrature(params: &ChainParams) -> Result<f64> {
    params.validate()?;
    let a = PI * params.j * params.tau / params.g;
    let r = damping_exponent(params);
    let integrand = |phi: f64| {
        let x = a * phi * phi;
        (-x - r).exp() / (1.0 + (-x).exp() * (-r).exp_m1())
    };
    Ok(integrate(integrand, 0.0, PI, 1e-12, 0.0)?.value / PI)
}

/// Closed form of [`density_quadrature`]: `n0 e^{-r} Phi(1 - e^{-r}, 1/2, 1)`.
pub fn density_lerch(params: &ChainParams) -> Result<f64> {
    params.validate()?;
    let r = damping_exponent(params);
    Ok(hermitian_density(params) * (-r).exp() * lerch_phi(-(-r).exp_m1(), 0.5, 1.0)?)
}

/// Density from the nearest-neighbour correlator, `(1 + chi(1)) / 2`.
pub fn density_from_correlator(table: &CorrelationTable) -> Result<f64> {
    Ok(0.5 * (1.0 + table.chi(1)?))
}

#[derive(Debug, Clone, PartialEq)]
pub struct DefectReport {
    /// From the evolved final state, when one was supplied.
    pub n_bar_numeric: Option<f64>,
    pub n_bar_analytic: DefectEstimate,
    pub density_chi: Option<f64>,
    pub density_quadrature: f64,
    pub density_lerch: f64,
    pub n0: f64,
    pub kz_length: f64,
    pub domain_size: f64,
    /// `sqrt(2 J tau / g)`; the Gaussian approximation wants this `>> 1`.
    pub gaussian_parameter: f64,
}

/// Collects every defect measure for one run.
pub fn defect_density(params: &ChainParams, state: Option<&FinalState>) -> Result<DefectReport> {
    let n_bar_analytic = defect_expectation_analytic(params)?;
    let (n_bar_numeric, density_chi) = match state {
        Some(s) => {
            let table = CorrelationTable::from_state(s, 1)?;
            (Some(defect_expectation_numeric(s)?), Some(density_from_correlator(&table)?))
        }
        None => (None, None),
    };
    Ok(DefectReport {
        n_bar_numeric,
        n_bar_analytic,
        density_chi,
        density_quadrature: density_quadrature(params)?,
        density_lerch: density_lerch(params)?,
        n0: hermitian_density(params),
        kz_length: kz_length(params)?,
        domain_size: domain_size(params)?,
        gaussian_parameter: (2.0 * params.j * params.tau / params.g).sqrt(),
    })
}
