//! Wick pairings of the final state and the Toeplitz-determinant correlator.
//!
//! Only `k > 0` modes are stored. The partner `-k` follows from the symmetry
//! `phi -> -phi` of the mode equations, under which `(u, v) -> (-u, v)`; the
//! sums over the full grid below are written out with that substitution, so
//! every pairing is real.

use num_complex::Complex64;
use rayon::prelude::*;
use std::f64::consts::PI;

use crate::error::{NqaError, Result};
use crate::model::ChainParams;
use crate::quench::FinalState;

/// Decay constant of the correlator envelope, in units of `1/xi`.
pub const ENVELOPE_DECAY: f64 = 0.174;

/// Imaginary residue of a determinant tolerated before it is rejected.
pub const IMAG_TOLERANCE: f64 = 1e-8;

/// Largest determinant order evaluated.
pub const MAX_ORDER: usize = 256;

fn check_complete(state: &FinalState) -> Result<()> {
    let expected = state.params.n / 2;
    let mut seen = vec![false; expected];
    for m in &state.modes {
        if m.mode.index < expected {
            seen[m.mode.index] = true;
        }
    }
    let got = seen.iter().filter(|&&s| s).count();
    if got != expected || state.modes.len() != expected {
        return Err(NqaError::IncompleteModeSet { expected, got });
    }
    Ok(())
}

/// Per-mode `(|v|^2 - |u|^2) / norm` and `u v* / norm`.
fn mode_terms(state: &FinalState) -> Vec<(f64, f64, Complex64)> {
    let mut terms: Vec<_> = state
        .modes
        .iter()
        .map(|m| {
            let a = &m.sample.amps;
            let norm = a.norm_sqr();
            (m.mode.phi, (a.v.norm_sqr() - a.u.norm_sqr()) / norm, a.u * a.v.conj() / norm)
        })
        .collect();
    terms.sort_by(|x, y| x.0.total_cmp(&y.0));
    terms
}

/// Toeplitz entry `G_q` of the final state.
///
/// The phase is `e^{i (q - 1) phi}`: with it the exact ground state at the
/// end of the sweep gives `G_0 = -1` and `G_q = 0` otherwise, so that
/// `det G = (-1)^p`.
pub fn pairing_g(state: &FinalState, q: i64) -> Result<Complex64> {
    check_complete(state)?;
    Ok(Complex64::new(g_from_terms(&mode_terms(state), state.params.n, q), 0.0))
}

fn g_from_terms(terms: &[(f64, f64, Complex64)], n: usize, q: i64) -> f64 {
    let shift = (q - 1) as f64;
    let sum: f64 = terms
        .iter()
        .map(|&(phi, d, uv)| {
            let (s, c) = (shift * phi).sin_cos();
            d * c + 2.0 * uv.re * s
        })
        .sum();
    2.0 * sum / n as f64
}

/// Anomalous pairing `beta_p = (1 / iN) sum_k u v* e^{i p phi} / norm`.
pub fn pairing_beta(state: &FinalState, p: i64) -> Result<Complex64> {
    check_complete(state)?;
    Ok(beta_from_terms(&mode_terms(state), state.params.n, p))
}

fn beta_from_terms(terms: &[(f64, f64, Complex64)], n: usize, p: i64) -> Complex64 {
    let sum: Complex64 = terms.iter().map(|&(phi, _, uv)| uv * (p as f64 * phi).sin()).sum();
    sum * (2.0 / n as f64)
}

/// Determinant of the `p x p` Toeplitz matrix with entries `entry(i - j)`,
/// by LU factorisation with partial pivoting. `p = 0` gives 1.
pub fn toeplitz_determinant<F: Fn(i64) -> Complex64>(entry: F, p: usize) -> Complex64 {
    let mut a: Vec<Complex64> = (0..p * p).map(|idx| entry((idx / p) as i64 - (idx % p) as i64)).collect();
    let mut det = Complex64::new(1.0, 0.0);
    for col in 0..p {
        let pivot = (col..p)
            .max_by(|&x, &y| a[x * p + col].norm().total_cmp(&a[y * p + col].norm()))
            .unwrap_or(col);
        if pivot != col {
            for j in 0..p {
                a.swap(col * p + j, pivot * p + j);
            }
            det = -det;
        }
        let d = a[col * p + col];
        if d == Complex64::new(0.0, 0.0) {
            return d;
        }
        det *= d;
        for row in col + 1..p {
            let f = a[row * p + col] / d;
            if f == Complex64::new(0.0, 0.0) {
                continue;
            }
            for j in col + 1..p {
                let v = a[col * p + j];
                a[row * p + j] -= f * v;
            }
        }
    }
    det
}

/// Pairings and correlator values for one final state.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationTable {
    max_p: usize,
    /// `G_q` for `q = -(max_p - 1) ..= max_p - 1`.
    g: Vec<Complex64>,
    /// `Im beta_p` for `p = 0 ..= max_p`.
    pub im_beta: Vec<f64>,
}

impl CorrelationTable {
    pub fn from_state(state: &FinalState, max_p: usize) -> Result<Self> {
        check_order(max_p)?;
        check_complete(state)?;
        let terms = mode_terms(state);
        let n = state.params.n;
        let span = max_p.max(1) as i64 - 1;
        let g = (-span..=span).map(|q| Complex64::new(g_from_terms(&terms, n, q), 0.0)).collect();
        let im_beta = (0..=max_p as i64).map(|p| beta_from_terms(&terms, n, p).im).collect();
        Ok(Self { max_p, g, im_beta })
    }

    /// Entries of the exact ground state of the final Hamiltonian.
    pub fn ground_state(max_p: usize) -> Result<Self> {
        check_order(max_p)?;
        let span = max_p.max(1) as i64 - 1;
        let g = (-span..=span)
            .map(|q| Complex64::new(if q == 0 { -1.0 } else { 0.0 }, 0.0))
            .collect();
        Ok(Self { max_p, g, im_beta: vec![0.0; max_p + 1] })
    }

    pub fn max_p(&self) -> usize {
        self.max_p
    }

    /// `G_q` for `|q| < max_p`.
    pub fn g(&self, q: i64) -> Option<Complex64> {
        let span = self.max_p.max(1) as i64 - 1;
        if q.abs() > span {
            return None;
        }
        Some(self.g[(q + span) as usize])
    }

    /// `chi(p)`, the `p x p` Toeplitz determinant.
    pub fn chi(&self, p: usize) -> Result<f64> {
        self.chi_with_tolerance(p, IMAG_TOLERANCE)
    }

    /// [`Self::chi`] with a caller-chosen bound on the imaginary residue.
    pub fn chi_with_tolerance(&self, p: usize, imag_tolerance: f64) -> Result<f64> {
        if p == 0 || p > self.max_p {
            return Err(NqaError::InvalidParameter(format!("correlator order {p} outside 1..={}", self.max_p)));
        }
        let det = toeplitz_determinant(|q| self.g(q).expect("offset within table"), p);
        if det.im.abs() > imag_tolerance {
            return Err(NqaError::DeterminantNotReal { p, imag: det.im });
        }
        Ok(det.re)
    }

    /// `chi(p)` for `p = 1 ..= max_p`, evaluated in parallel.
    pub fn chi_all(&self) -> Vec<Result<f64>> {
        (1..=self.max_p).into_par_iter().map(|p| self.chi(p)).collect()
    }
}

fn check_order(max_p: usize) -> Result<()> {
    if max_p == 0 || max_p > MAX_ORDER {
        return Err(NqaError::InvalidParameter(format!("correlator order must lie in 1..={MAX_ORDER}, got {max_p}")));
    }
    Ok(())
}

/// Kibble-Zurek length `sqrt(J tau / (2 g))`.
pub fn kz_length(params: &ChainParams) -> Result<f64> {
    params.validate()?;
    if params.g <= 0.0 {
        return Err(NqaError::InvalidParameter("the Kibble-Zurek length needs g > 0".into()));
    }
    Ok((params.j * params.tau / (2.0 * params.g)).sqrt())
}

/// Domain size `pi xi sqrt(2 pi / ln 2)`.
pub fn domain_size(params: &ChainParams) -> Result<f64> {
    Ok(PI * kz_length(params)? * (2.0 * PI / std::f64::consts::LN_2).sqrt())
}

/// Wavenumber of the correlator oscillation, `sqrt(ln 2 / (2 pi)) / xi`.
pub fn oscillation_wavenumber(xi: f64) -> f64 {
    (std::f64::consts::LN_2 / (2.0 * PI)).sqrt() / xi
}

/// Period in `p` of the correlator oscillation.
pub fn oscillation_period(xi: f64) -> f64 {
    2.0 * PI / oscillation_wavenumber(xi)
}

/// Long-distance form `(-1)^p e^{-0.174 p / xi} cos(k p + phase)`.
pub fn chi_asymptotic(p: usize, params: &ChainParams, phase: f64) -> Result<f64> {
    let xi = kz_length(params)?;
    let sign = if p % 2 == 0 { 1.0 } else { -1.0 };
    let x = p as f64;
    Ok(sign * (-ENVELOPE_DECAY * x / xi).exp() * (oscillation_wavenumber(xi) * x + phase).cos())
}

/// Least-squares amplitude and phase of the asymptotic form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticFit {
    pub amplitude: f64,
    pub phase: f64,
    /// Orders used, inclusive.
    pub p_range: (usize, usize),
}

/// Fits `chi(p) ~ A (-1)^p e^{-0.174 p/xi} cos(k p + phase)` over
/// `p in [2 xi, 10 xi]`, clipped to the available orders.
pub fn fit_asymptotic(chi: &[f64], params: &ChainParams) -> Result<AsymptoticFit> {
    let xi = kz_length(params)?;
    let k = oscillation_wavenumber(xi);
    let lo = ((2.0 * xi).ceil() as usize).max(1);
    let hi = ((10.0 * xi).floor() as usize).min(chi.len());
    if hi < lo + 1 {
        return Err(NqaError::InvalidParameter(format!("need chi up to p = {lo} + 1 for the fit, have {}", chi.len())));
    }
    // chi(p) (-1)^p e^{0.174 p/xi} = a cos(kp) - b sin(kp)
    let (mut scc, mut scs, mut sss, mut yc, mut ys) = (0.0, 0.0, 0.0, 0.0, 0.0);
    for p in lo..=hi {
        let x = p as f64;
        let sign = if p % 2 == 0 { 1.0 } else { -1.0 };
        let y = chi[p - 1] * sign * (ENVELOPE_DECAY * x / xi).exp();
        let (c, s) = ((k * x).cos(), -(k * x).sin());
        scc += c * c;
        scs += c * s;
        sss += s * s;
        yc += y * c;
        ys += y * s;
    }
    let det = scc * sss - scs * scs;
    if det.abs() < 1e-300 {
        return Err(NqaError::InvalidParameter("degenerate asymptotic fit".into()));
    }
    let a = (yc * sss - ys * scs) / det;
    let b = (ys * scc - yc * scs) / det;
    Ok(AsymptoticFit { amplitude: a.hypot(b), phase: b.atan2(a), p_range: (lo, hi) })
}

/// Zero crossings of `(-1)^p chi(p)`, linearly interpolated, up to the first
/// order where `|chi|` drops below `floor`.
pub fn staggered_zero_crossings(chi: &[f64], floor: f64) -> Vec<f64> {
    let mut out = Vec::new();
    let stag = |p: usize| if p % 2 == 0 { chi[p - 1] } else { -chi[p - 1] };
    for p in 1..chi.len() {
        let (a, b) = (stag(p), stag(p + 1));
        if a.abs() < floor || b.abs() < floor {
            break;
        }
        if a.signum() != b.signum() {
            out.push(p as f64 + a / (a - b));
        }
    }
    out
}

/// Oscillation period implied by successive zero crossings (twice their
/// mean spacing), if at least two were found.
pub fn measured_period(crossings: &[f64]) -> Option<f64> {
    if crossings.len() < 2 {
        return None;
    }
    let span = crossings[crossings.len() - 1] - crossings[0];
    Some(2.0 * span / (crossings.len() - 1) as f64)
}
