//! Time evolution of the momentum modes and projection onto the
//! instantaneous adiabatic basis.
//!
//! Each mode obeys
//!
//! ```text
//! i du/dt =  J ((g~ - cos phi) u - sin phi v)
//! i dv/dt = -J (sin phi u + (g~ - cos phi) v)
//! ```
//!
//! which omits the common factor `exp(-i int eps0)`. That factor carries the
//! uniform decay `exp(-J int delta)`; it drops out of every ratio computed
//! here and is restored by [`physical_norm_sqr`].
//!
//! The "ground" adiabatic state is the one with the lower real energy, i.e.
//! the principal branch `Re R >= 0`. The continuously tracked Bloch angle is
//! used for smooth phases; whenever the tracked radius has negative real part
//! the roles of the two amplitudes are exchanged.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{invalid, NqaError, Result};
use crate::model::{BlochAngle, BlochTracker, ChainParams, Mode};
use crate::ode::{DormandPrince, OdeOptions, OdeStats, State};

/// Where each mode starts at `t = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum InitialState {
    /// `(u, v) = (0, -1)`: the fully polarised ground state of the field term.
    #[default]
    Diabatic,
    /// The exact instantaneous ground state of the mode at `t = 0`.
    AdiabaticGround,
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct QuenchOptions {
    pub ode: OdeOptions,
    pub initial: InitialState,
}

/// Mode amplitudes at one instant; the true amplitudes are
/// `(u, v) * exp(log_scale)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeAmplitudes {
    pub t: f64,
    pub u: Complex64,
    pub v: Complex64,
    pub log_scale: f64,
}

impl ModeAmplitudes {
    pub fn norm_sqr(&self) -> f64 {
        self.u.norm_sqr() + self.v.norm_sqr()
    }

    /// `ln(|u|^2 + |v|^2)` including the carried scale.
    pub fn ln_norm_sqr(&self) -> f64 {
        self.norm_sqr().ln() + 2.0 * self.log_scale
    }

    /// Unscaled amplitudes; overflows for strongly amplified states.
    pub fn unscaled(&self) -> (Complex64, Complex64) {
        let s = self.log_scale.exp();
        (self.u * s, self.v * s)
    }
}

/// Amplitudes on the instantaneous eigenbasis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdiabaticProjection {
    /// Ground-state amplitude.
    pub alpha: Complex64,
    /// Excited-state amplitude.
    pub beta: Complex64,
    /// Bloch angle of the ground branch used for the projection.
    pub theta: Complex64,
}

/// `alpha = u cos(theta/2) - v sin(theta/2)`, `beta = v cos(theta/2) + u sin(theta/2)`.
pub fn to_adiabatic(u: Complex64, v: Complex64, theta: Complex64) -> (Complex64, Complex64) {
    let half = theta / 2.0;
    let (c, s) = (half.cos(), half.sin());
    (u * c - v * s, v * c + u * s)
}

/// Inverse of [`to_adiabatic`].
pub fn from_adiabatic(alpha: Complex64, beta: Complex64, theta: Complex64) -> (Complex64, Complex64) {
    let half = theta / 2.0;
    let (c, s) = (half.cos(), half.sin());
    (alpha * c + beta * s, beta * c - alpha * s)
}

/// Bloch angle of the ground branch given any continuation of the angle.
pub fn ground_angle(angle: &BlochAngle) -> Complex64 {
    if angle.radius.re >= 0.0 {
        angle.theta
    } else {
        angle.theta + std::f64::consts::PI
    }
}

pub fn project(amps: &ModeAmplitudes, angle: &BlochAngle) -> AdiabaticProjection {
    let theta = ground_angle(angle);
    let (alpha, beta) = to_adiabatic(amps.u, amps.v, theta);
    AdiabaticProjection { alpha, beta, theta }
}

const DEGENERATE: f64 = 1e-300;

/// `|alpha|^2 / (|alpha|^2 + |beta|^2)`.
pub fn intrinsic_probability(alpha: Complex64, beta: Complex64) -> Result<f64> {
    let (a, b) = (alpha.norm_sqr(), beta.norm_sqr());
    if alpha.norm() < DEGENERATE && beta.norm() < DEGENERATE {
        return Err(NqaError::DegenerateState);
    }
    Ok(a / (a + b))
}

/// `|beta|^2 / (|alpha|^2 + |beta|^2)`, computed without cancellation.
pub fn excitation_probability(alpha: Complex64, beta: Complex64) -> Result<f64> {
    let (a, b) = (alpha.norm_sqr(), beta.norm_sqr());
    if alpha.norm() < DEGENERATE && beta.norm() < DEGENERATE {
        return Err(NqaError::DegenerateState);
    }
    Ok(b / (a + b))
}

/// `|psi|^2` including the uniform decay `exp(-2 J int_0^t delta(t') dt')`.
pub fn physical_norm_sqr(amps: &ModeAmplitudes, params: &ChainParams) -> f64 {
    let t = amps.t.min(params.tau);
    let decay = 2.0 * params.j * params.delta * (t - t * t / (2.0 * params.tau));
    (amps.ln_norm_sqr() - decay).exp()
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrajectorySample {
    pub amps: ModeAmplitudes,
    pub projection: AdiabaticProjection,
    /// Probability of the instantaneous ground state.
    pub p_ground: f64,
    /// `1 - p_ground`, evaluated directly.
    pub excitation: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ModeTrajectory {
    pub mode: Mode,
    pub samples: Vec<TrajectorySample>,
    pub stats: OdeStats,
}

impl ModeTrajectory {
    pub fn last(&self) -> &TrajectorySample {
        self.samples.last().expect("trajectories are never empty")
    }
}

/// `count` equally spaced times covering `[0, tau]`.
pub fn uniform_samples(tau: f64, count: usize) -> Vec<f64> {
    match count {
        0 => vec![],
        1 => vec![tau],
        _ => (0..count)
            .map(|i| if i + 1 == count { tau } else { tau * i as f64 / (count - 1) as f64 })
            .collect(),
    }
}

fn check_samples(times: &[f64], tau: f64) -> Result<()> {
    if times.is_empty() {
        return invalid("no sample times given");
    }
    for w in times.windows(2) {
        if !(w[1] > w[0]) {
            return invalid(format!("sample times must increase strictly ({} then {})", w[0], w[1]));
        }
    }
    let (first, last) = (times[0], times[times.len() - 1]);
    if !(first >= 0.0) || !(last <= tau) || !last.is_finite() {
        return invalid(format!("sample times must lie in [0, {tau}]"));
    }
    Ok(())
}

fn initial_state(mode: &Mode, params: &ChainParams, kind: InitialState) -> Result<State> {
    match kind {
        InitialState::Diabatic => Ok([Complex64::new(0.0, 0.0), Complex64::new(-1.0, 0.0)]),
        InitialState::AdiabaticGround => {
            let angle = crate::model::bloch_angle(mode.phi, params.coupling(0.0)?)?;
            let (u, v) = from_adiabatic(Complex64::new(-1.0, 0.0), Complex64::new(0.0, 0.0), ground_angle(&angle));
            Ok([u, v])
        }
    }
}

/// Integrates one mode from `t = 0` and records it at `sample_times`.
pub fn evolve_mode(mode: &Mode, params: &ChainParams, sample_times: &[f64], opts: &QuenchOptions) -> Result<ModeTrajectory> {
    params.validate()?;
    opts.ode.validate().map_err(NqaError::InvalidParameter)?;
    check_samples(sample_times, params.tau)?;

    let (s, c) = mode.phi.sin_cos();
    let j = params.j;
    let gamma = params.gamma();
    let tau = params.tau;
    let rhs = move |t: f64, y: &State| -> State {
        let d = gamma * (tau - t) - c;
        let mi = Complex64::new(0.0, -j);
        [mi * (d * y[0] - y[1] * s), -mi * (y[0] * s + d * y[1])]
    };
    let y0 = initial_state(mode, params, opts.initial)?;
    let mut dp = DormandPrince::new(rhs, 0.0, y0, opts.ode);
    let mut tracker = BlochTracker::new(mode.phi, params.coupling(0.0)?)?;

    let mut samples = Vec::with_capacity(sample_times.len());
    for &t in sample_times {
        dp.advance_to(t).map_err(|f| NqaError::Integration { k: mode.k, t: f.t, reason: f.reason })?;
        let angle = tracker.advance(params.coupling(t)?, t)?;
        let y = dp.state();
        let amps = ModeAmplitudes { t, u: y[0], v: y[1], log_scale: dp.log_scale() };
        let projection = project(&amps, &angle);
        let p_ground = intrinsic_probability(projection.alpha, projection.beta)?;
        let excitation = excitation_probability(projection.alpha, projection.beta)?;
        samples.push(TrajectorySample { amps, projection, p_ground, excitation });
    }
    Ok(ModeTrajectory { mode: *mode, samples, stats: dp.stats() })
}

/// State of one mode at the end of the sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct FinalMode {
    pub mode: Mode,
    pub sample: TrajectorySample,
    pub stats: OdeStats,
}

/// Evolves a mode straight to `t = tau`.
pub fn evolve_final(mode: &Mode, params: &ChainParams, opts: &QuenchOptions) -> Result<FinalMode> {
    let mut tr = evolve_mode(mode, params, &[params.tau], opts)?;
    let sample = tr.samples.pop().expect("one sample requested");
    Ok(FinalMode { mode: *mode, sample, stats: tr.stats })
}

/// Final states of all modes, in grid order.
#[derive(Debug, Clone, PartialEq)]
pub struct FinalState {
    pub params: ChainParams,
    pub modes: Vec<FinalMode>,
}

impl FinalState {
    /// Probability that the whole chain ends in its ground state.
    pub fn ground_probability(&self) -> f64 {
        let ln: f64 = self.modes.iter().map(|m| (-m.sample.excitation).ln_1p()).sum();
        ln.exp()
    }
}

/// Evolves every `k > 0` mode to the end of the sweep, in parallel.
///
/// The result does not depend on the number of worker threads.
pub fn evolve_chain_final(params: &ChainParams, opts: &QuenchOptions) -> Result<FinalState> {
    params.validate()?;
    let modes = params.modes();
    let finals = modes.par_iter().map(|m| evolve_final(m, params, opts)).collect::<Result<Vec<_>>>()?;
    Ok(FinalState { params: *params, modes: finals })
}

/// Evolves every mode on a common set of sample times, in parallel.
pub fn evolve_chain(params: &ChainParams, sample_times: &[f64], opts: &QuenchOptions) -> Result<Vec<ModeTrajectory>> {
    params.validate()?;
    params
        .modes()
        .par_iter()
        .map(|m| evolve_mode(m, params, sample_times, opts))
        .collect()
}

/// `prod_k P_k(t)` over the full set of `N/2` trajectories, summed in log space.
pub fn system_ground_probability(trajectories: &[ModeTrajectory], n: usize, t: f64) -> Result<f64> {
    let expected = n / 2;
    let mut seen = vec![false; expected];
    for tr in trajectories {
        if tr.mode.index < expected {
            seen[tr.mode.index] = true;
        }
    }
    let got = seen.iter().filter(|&&s| s).count();
    if trajectories.len() != expected || got != expected {
        return Err(NqaError::IncompleteModeSet { expected, got });
    }
    let tol = 1e-12 * t.abs().max(1.0);
    let mut ln_total = 0.0;
    let mut ordered: Vec<&ModeTrajectory> = trajectories.iter().collect();
    ordered.sort_by_key(|tr| tr.mode.index);
    for tr in ordered {
        let s = tr
            .samples
            .iter()
            .find(|s| (s.amps.t - t).abs() <= tol)
            .ok_or(NqaError::MissingSample { k: tr.mode.k, t })?;
        ln_total += (-s.excitation).ln_1p();
    }
    Ok(ln_total.exp())
}
