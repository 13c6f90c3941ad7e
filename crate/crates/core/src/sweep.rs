//! Search for the shortest annealing time that reaches a target ground-state
//! probability of the whole chain.
//!
//! A single evaluation integrates every mode at the trial `tau`, which gets
//! expensive for long chains: the integration cost grows linearly with `tau`
//! and the Hermitian answer grows like `N^2`. Two things keep it tractable.
//!
//! * Screening (Hermitian runs only). A mode whose smallest gap gives a
//!   Landau-Zener exponent `pi J tau m^2 / g` above [`SearchOptions::screen_exponent`]
//!   is taken to end in its ground state; `m = sin phi` for modes that cross
//!   the critical point (`cos phi >= 0`) and `m = 1` for the others. With
//!   dissipation no mode is skipped, since weak excitations can be amplified.
//! * Short-circuiting. Modes are visited from both ends of the spectrum
//!   inwards and the running product stops at the first mode that takes it
//!   below the target. Batches are integrated in parallel, but the stopping
//!   point only depends on the mode order, never on the batch size.

use rayon::prelude::*;
use std::f64::consts::PI;

use crate::analytic::{annealing_time_estimate, ScalingEstimate};
use crate::error::{NqaError, Result};
use crate::model::{ChainParams, Mode};
use crate::quench::{evolve_final, InitialState, QuenchOptions};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchOptions {
    pub quench: QuenchOptions,
    /// Landau-Zener exponent above which a Hermitian mode is not integrated;
    /// `f64::INFINITY` disables screening.
    pub screen_exponent: f64,
    /// Search stops once `(hi - lo) / hi` falls below this.
    pub rel_width: f64,
    /// Largest `tau` tried, as a multiple of the closed-form answer.
    pub cap_factor: f64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            quench: QuenchOptions { initial: InitialState::AdiabaticGround, ..Default::default() },
            screen_exponent: 12.0 * std::f64::consts::LN_10,
            rel_width: 1e-3,
            cap_factor: 16.0,
        }
    }
}

/// Ground-state probability of the chain at one `tau`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProductEvaluation {
    pub tau: f64,
    /// The product, or an upper bound on it when `complete` is false.
    pub probability: f64,
    /// False when the product was abandoned below the floor.
    pub complete: bool,
    pub evolved: usize,
    pub skipped: usize,
}

fn lz_exponent(mode: &Mode, params: &ChainParams) -> f64 {
    let (s, c) = mode.sin_cos();
    let m = if c >= 0.0 { s } else { 1.0 };
    PI * params.j * params.tau * m * m / params.g
}

/// Indices `N/2 - 1, 0, N/2 - 2, 1, ...`.
fn ends_first(count: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(count);
    let (mut lo, mut hi) = (0usize, count);
    while lo < hi {
        hi -= 1;
        out.push(hi);
        if lo < hi {
            out.push(lo);
        }
        lo += 1;
    }
    out
}

/// Evaluates the chain probability at `params.tau`, abandoning the product
/// once it is certainly below `floor`.
pub fn chain_probability(params: &ChainParams, floor: f64, opts: &SearchOptions) -> Result<ProductEvaluation> {
    params.validate()?;
    let screen = params.delta == 0.0 && params.g > 0.0;
    let order: Vec<Mode> = ends_first(params.n / 2).into_iter().map(|i| Mode::new(params.n, i)).collect();
    let active: Vec<Mode> = order
        .into_iter()
        .filter(|m| !(screen && lz_exponent(m, params) > opts.screen_exponent))
        .collect();
    let skipped = params.n / 2 - active.len();
    let ln_floor = floor.ln();
    let batch = rayon::current_num_threads().max(1);
    let mut ln_p = 0.0;
    let mut evolved = 0;
    for chunk in active.chunks(batch) {
        let results: Vec<f64> = chunk
            .par_iter()
            .map(|m| evolve_final(m, params, &opts.quench).map(|f| (-f.sample.excitation).ln_1p()))
            .collect::<Result<_>>()?;
        for r in results {
            ln_p += r;
            evolved += 1;
            if ln_p < ln_floor && evolved < active.len() {
                return Ok(ProductEvaluation { tau: params.tau, probability: ln_p.exp(), complete: false, evolved, skipped });
            }
        }
    }
    Ok(ProductEvaluation { tau: params.tau, probability: ln_p.exp(), complete: true, evolved, skipped })
}

/// Result of [`required_annealing_time`].
#[derive(Debug, Clone, PartialEq)]
pub struct TauSearch {
    pub n: usize,
    pub target: f64,
    /// Smallest `tau` found to reach the target, to within `rel_width`.
    pub tau_star: Option<f64>,
    pub analytic: ScalingEstimate,
    pub evaluations: Vec<ProductEvaluation>,
}

impl TauSearch {
    /// Highest probability seen in any evaluation.
    pub fn best(&self) -> f64 {
        self.evaluations.iter().map(|e| e.probability).fold(0.0, f64::max)
    }
}

/// Bracket-and-refine search for the smallest `tau` with chain probability
/// at least `target`. `params.tau` is ignored.
///
/// The search works on `f(tau) = ln(-ln P) - ln(-ln target)`, which is close
/// to linear in `tau` for Landau-Zener-type transitions. Starting from the
/// closed-form estimate it extrapolates secants (with a geometrically growing
/// minimum step) until the root is bracketed, then refines with regula falsi.
/// Each refined point is pushed slightly past the secant root, towards the
/// end of the bracket that has not moved, so the bracket closes from both
/// sides in a few evaluations.
pub fn required_annealing_time(params: &ChainParams, target: f64, opts: &SearchOptions) -> Result<TauSearch> {
    params.validate()?;
    if !(target > 0.0 && target < 1.0) {
        return Err(NqaError::InvalidParameter(format!("target probability must lie in (0, 1), got {target}")));
    }
    let analytic = annealing_time_estimate(params, target)?;
    let cap = opts.cap_factor * analytic.tau_star;
    let floor_tau = analytic.tau_star / opts.cap_factor;
    let mut evaluations = Vec::new();
    let eval = |tau: f64, evaluations: &mut Vec<ProductEvaluation>| -> Result<(ProductEvaluation, f64)> {
        let e = chain_probability(&params.with_tau(tau), target, opts)?;
        evaluations.push(e);
        let neg_ln = (-e.probability.max(1e-300).ln()).max(1e-300);
        Ok((e, neg_ln.ln() - (-target.ln()).ln()))
    };
    let done = |tau_star, evaluations| Ok(TauSearch { n: params.n, target, tau_star, analytic, evaluations });

    // Bracketing. `prev` and `cur` lie on the same side of the root.
    let mut cur = eval(analytic.tau_star, &mut evaluations)?;
    let upward = cur.0.probability < target;
    let mut prev: Option<(ProductEvaluation, f64)> = None;
    let mut step = 0.01;
    let (mut lo, mut hi) = loop {
        let t = cur.0.tau;
        if upward && t >= cap || !upward && t <= floor_tau {
            return done(if upward { None } else { Some(t) }, evaluations);
        }
        let min_next = if upward { t * (1.0 + step) } else { t / (1.0 + step) };
        let mut next = min_next;
        if let Some(p) = prev {
            let slope = (cur.1 - p.1) / (t - p.0.tau);
            let root = t - cur.1 / slope;
            if root.is_finite() {
                let reach = t + 1.2 * (root - t);
                next = if upward { reach.max(min_next).min(4.0 * t) } else { reach.min(min_next).max(t / 4.0) };
            }
        }
        let next = if upward { next.min(cap) } else { next.max(floor_tau) };
        let e = eval(next, &mut evaluations)?;
        let reached = e.0.probability >= target;
        if reached == upward {
            break if upward { (cur, e) } else { (e, cur) };
        }
        prev = Some(cur);
        cur = e;
        step *= 2.0;
    };

    // Refinement with the Illinois modification of regula falsi.
    let mut side = 0i8;
    while (hi.0.tau - lo.0.tau) / hi.0.tau > opts.rel_width {
        let width = hi.0.tau - lo.0.tau;
        let mut tau = hi.0.tau - hi.1 * width / (hi.1 - lo.1);
        if !tau.is_finite() || tau <= lo.0.tau || tau >= hi.0.tau {
            tau = 0.5 * (lo.0.tau + hi.0.tau);
        }
        // Aim a little past the root, away from the end that moved last.
        let nudge = 0.4 * opts.rel_width * tau;
        tau = match side {
            -1 => tau + nudge,
            1 => tau - nudge,
            _ => tau,
        };
        tau = tau.clamp(lo.0.tau + 0.01 * width, hi.0.tau - 0.01 * width);
        let e = eval(tau, &mut evaluations)?;
        if e.0.probability >= target {
            hi = e;
            if side == 1 {
                lo.1 *= 0.5;
            }
            side = 1;
        } else {
            lo = e;
            if side == -1 {
                hi.1 *= 0.5;
            }
            side = -1;
        }
    }
    done(Some(hi.0.tau), evaluations)
}
